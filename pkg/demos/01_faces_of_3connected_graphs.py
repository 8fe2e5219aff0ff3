"""
Face boundaries of 3-connected planar graphs
============================================

A 3-connected planar graph has one plane embedding up to reflection, so its
face boundaries are a well defined family of cycles. They are pairwise
nested and span the cycle space.
"""

from nestedcycles import families
from nestedcycles.generator import generate_3connected, verify_generating_set
from nestedcycles.oracle import automorphism_group

for name, make in families.FIXTURES_3CONNECTED.items():
    g = make()
    gs = generate_3connected(g)
    report = verify_generating_set(gs, automorphism_group(g, max_vertices=None))
    lengths = sorted(len(c) for c in gs.cycles)
    print(f"{name:13s} n={g.n:2d} m={g.m:2d}  faces={len(gs.cycles):2d}  lengths={lengths}")
    print(f"{'':13s} rank {report.rank}/{report.dimension}, nested={report.nested}, "
          f"invariant under all automorphisms={report.aut_invariant}")

# the faces are dependent: their sum is empty since every edge borders two faces
cube = families.cube()
total = cube.edge_set()
for c in generate_3connected(cube).cycles:
    total = total + c.edges
print("sum of cube faces:", total)
