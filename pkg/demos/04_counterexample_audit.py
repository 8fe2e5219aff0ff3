"""
No canonical nested generating set below 3-connectivity
=======================================================

An automorphism-invariant family is a union of circuit orbits. The audit
tries every such union in every plane embedding.
"""

from nestedcycles import families
from nestedcycles.oracle import counterexample_audit

for name, g in [("four paths", families.four_paths()), ("K4", families.k4()), ("C4", families.cycle(4))]:
    rep = counterexample_audit(g)
    print(f"{name}: {rep.status}; {rep.rotation_systems} rotation systems, "
          f"{rep.planar_rotation_systems} of genus 0, orbit sizes {[len(o) for o in rep.orbits]}")
    if rep.possible:
        print("   family:", [sorted(c) for c in rep.family])
    else:
        for r, _, (a, b) in rep.witnesses:
            print(f"   embedding #{r}: {sorted(a)} crosses {sorted(b)}")
