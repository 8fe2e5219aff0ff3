"""
Decomposing a 2-connected graph
===============================

The triconnected-component tree splits a 2-connected graph at its
2-separators into cycles, bonds and 3-connected pieces. Each piece is shown
through its torso, where virtual edges stand in for the rest of the graph.
"""

import random

from nestedcycles import families
from nestedcycles.decomposition import check_td_axioms, is_virtual, torso, tutte_decomposition

g = families.random_two_connected_planar(12, random.Random(4), parallels=1)
print("graph:", g)
td = tutte_decomposition(g)
for t in td.nodes:
    tor = torso(g, td, t)
    real = [e.id for e in tor.edges if not is_virtual(e.id)]
    virtual = [e.id for e in tor.edges if is_virtual(e.id)]
    print(f"node {t}: {td.kinds[t].value:18s} bag={sorted(td.bags[t])} real={real} virtual={virtual}")
for e in td.tree.edges:
    print(f"tree edge {e.u}-{e.v} adhesion {sorted(td.adhesions[e.id])}")
print("axioms:", check_td_axioms(g, td) or "ok")
