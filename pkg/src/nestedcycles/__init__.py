"""Canonical nested generating sets for cycle spaces of planar multigraphs."""

from .graphcore import (
    Cut,
    Cycle,
    Edge,
    EdgeSet,
    GraphError,
    InvariantViolation,
    Multigraph,
    NotThreeConnected,
    NotTwoConnected,
    build_graph,
    components,
    cycle_space_dimension,
    edgeset_sum,
    is_circuit,
)
from .embedding import (
    NonPlanar,
    RotationSystem,
    Side,
    face_boundary_cycles,
    facial_invariance_check,
    planar_embed,
    trace_faces,
    vertex_side,
)
from .duality import (
    BudgetExceeded,
    DualPair,
    build_dual,
    circuit_iff_tight_cut,
    image_of,
    is_tight_cut,
    verify_duality_exhaustive,
)
from .nestedness import cuts_nested, cycles_nested, family_nested, nested_cuts_imply_nested_cycles
from .decomposition import (
    PartKind,
    TreeDecomposition,
    block_decomposition,
    check_td_axioms,
    complete_adhesions,
    torso,
    tutte_decomposition,
)
from .generator import (
    GeneratingSet,
    GeneratorKind,
    dual_route_equivalence,
    express_cycle,
    filtrate,
    generate_2connected,
    generate_3connected,
    generate_full,
    graded_check,
    split_at_adhesion,
    verify_generating_set,
)
from .oracle import (
    automorphism_group,
    canonicity_probe,
    counterexample_audit,
    enumerate_circuits,
    gf2_rank,
    in_span,
    orbit_closed,
    span_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Cut",
    "Cycle",
    "DualPair",
    "Edge",
    "EdgeSet",
    "GeneratingSet",
    "GeneratorKind",
    "GraphError",
    "InvariantViolation",
    "Multigraph",
    "NonPlanar",
    "NotThreeConnected",
    "NotTwoConnected",
    "PartKind",
    "RotationSystem",
    "Side",
    "TreeDecomposition",
    "automorphism_group",
    "block_decomposition",
    "build_dual",
    "build_graph",
    "canonicity_probe",
    "check_td_axioms",
    "circuit_iff_tight_cut",
    "complete_adhesions",
    "components",
    "counterexample_audit",
    "cuts_nested",
    "cycle_space_dimension",
    "cycles_nested",
    "dual_route_equivalence",
    "edgeset_sum",
    "enumerate_circuits",
    "express_cycle",
    "face_boundary_cycles",
    "facial_invariance_check",
    "family_nested",
    "filtrate",
    "generate_2connected",
    "generate_3connected",
    "generate_full",
    "gf2_rank",
    "graded_check",
    "image_of",
    "in_span",
    "is_circuit",
    "is_tight_cut",
    "nested_cuts_imply_nested_cycles",
    "orbit_closed",
    "planar_embed",
    "span_certificate",
    "split_at_adhesion",
    "torso",
    "trace_faces",
    "tutte_decomposition",
    "verify_duality_exhaustive",
    "verify_generating_set",
    "vertex_side",
]
