"""
Nested and crossing cycles
==========================

Two hubs joined by four paths of length two. Whatever the embedding, two of
the four paths alternate with the other two around a hub, and the cycles
they form cross.
"""

from nestedcycles import families
from nestedcycles.embedding import CycleSides, planar_embed
from nestedcycles.graphcore import Cycle
from nestedcycles.nestedness import family_nested
from nestedcycles.oracle import enumerate_circuits

g = families.four_paths()
rot = planar_embed(g)
print("rotation at x:", rot.order["x"])

cycles = [Cycle.from_edges(g, c) for c in enumerate_circuits(g)]
for c in cycles:
    sides = CycleSides(g, rot, c)
    off = {v: sides[v].value for v in g.vertices if v not in c.vertices}
    print("cycle", c.vertex_order, "->", off)

i, j = family_nested(g, rot, cycles)
print("first crossing pair:", cycles[i].vertex_order, cycles[j].vertex_order)
