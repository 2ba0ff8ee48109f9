"""Structure of the outer automorphism group of a two-dimensional
right-angled Artin group, computed from its defining simplicial graph.
"""

from .graph import (
    GraphError,
    InvariantViolation,
    NotAdmissibleError,
    ParseError,
    SimplicialGraph,
    SizeLimitError,
    UnknownVertexError,
    parse_graph,
    parse_graph_json,
    parse_graph_text,
    validate,
)
from .structure import (
    Join,
    StructureReport,
    VertexClasses,
    classify_components,
    edge_join,
    gamma0_vertices,
    is_cyclic,
    maximal_join,
    structure_report,
    vertex_classes,
    w0_vertices,
)
from .words import (
    Letter,
    Word,
    centralizes,
    conjugate,
    equal,
    format_word,
    generator_word,
    identity_word,
    in_special_subgroup,
    normal_form,
    parse_word,
    reduce_word,
    support,
)
from .autos import (
    Automorphism,
    RestrictionResult,
    abelian_subgroup_generators,
    apply,
    compose,
    enumerate_generators,
    equal_in_aut,
    format_automorphism,
    graph_symmetries,
    identity_automorphism,
    inner_automorphism,
    inversion,
    is_conjugation_by,
    k0_generators,
    parse_automorphism,
    partial_conjugation,
    project,
    q_order,
    sym0_member,
    transvection,
    verify_preserves_join,
)
from .bounds import BoundsReport, outer_space_dims, rank_g, rank_k0, rank_kp, tree_bounds, vcd_bounds
from .families import family_graph
from .oracle import oracle_equal

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
