"""
Circuits and tight cuts of the dual
===================================

Build the geometric dual from an embedding and check, subset by subset, that
an edge set is a circuit exactly when its dual image is a tight cut.
"""

from nestedcycles import families
from nestedcycles.duality import build_dual, image_of, verify_duality_exhaustive
from nestedcycles.embedding import planar_embed
from nestedcycles.oracle import find_isomorphism

cube = families.cube()
dp = build_dual(cube, planar_embed(cube))
print("dual of the cube:", dp.dual, "isomorphic to the octahedron:",
      find_isomorphism(dp.dual, families.octahedron()) is not None)

face = dp.primal_rotation.faces[0]
print("a cube face", sorted(face.boundary), "maps to", sorted(image_of(dp, face.boundary), key=str))

for name in ("K4", "prism", "cube", "W6"):
    g = families.FIXTURES_3CONNECTED[name]()
    rep = verify_duality_exhaustive(build_dual(g, planar_embed(g)))
    print(f"{name:6s} {rep.subsets_checked:6d} subsets  circuits={rep.circuits:3d}  "
          f"tight cuts={rep.tight_cuts:3d}  violations={len(rep.violations)}")
