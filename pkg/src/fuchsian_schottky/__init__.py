"""Fuchsian Schottky groups: Moebius arithmetic on the upper half-plane,
classical circle certificates, two-generator criteria, explicit
constructions and a Nielsen search for classical generating tuples."""

from ._tol import DEFAULT_TOL, get_tol, tolerance
from .boundary import INF, BoundaryPoint, as_point, chordal
from .classicalize import (
    BudgetExhausted,
    Found,
    NielsenMove,
    apply_move,
    check_found,
    find_classical_generators,
    nielsen_moves,
    nielsen_neighbors,
)
from .constructions import (
    NonclassicalExample,
    nonclassical_pair_example,
    one_holed_torus_pair,
    standard_group,
    standard_length,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    CircleOnAxis,
    Geodesic,
    arc_midpoint,
    arc_point,
    axis,
    build_hyperbolic,
    cyclic_order,
    frame_to_infinity,
    geodesic_through,
    image_circle,
    isometric_circles,
    pairs_linked,
    point_in_arc,
)
from .kernels import BACKEND
from .moebius import (
    IDENTITY,
    Kind,
    MoebiusMap,
    apply_boundary,
    apply_real,
    classify,
    compose,
    compose_all,
    conjugate,
    fixed_points,
    inverse,
    is_hyperbolic,
    multiplier,
    normalize,
    rotation,
    signed_commutator_trace,
    translation_length,
)
from .pairs import (
    PairCase,
    commutator_build_circles,
    intersecting_pair_schottky_test,
    lemma3_build_circles,
    lemma3_classical_test,
    orient_pair_standard,
    pair_case,
    theorem4_separation_certificate,
)
from .render import render_svg
from .system import (
    BoundaryCount,
    Certificate,
    SchottkySystem,
    Violation,
    certify,
    conjugate_system,
    count_quotient_boundaries,
    evaluate_word,
    format_word,
    limit_set_sample,
    parse_word,
    rank_genus_relation,
    reduce_word,
    verify_classical,
)

__version__ = "0.1.0"
