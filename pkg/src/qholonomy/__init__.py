"""Exact quantum holonomies of constant connections on the torus.

Signed-area phases between PL lattice paths, the q-deformed holonomy
representation, the SL(2,Z) action and both forms of the quantized Goldman
bracket, all in exact rational arithmetic.
"""

from .geometry import (
    LatticePolygon,
    PLPath,
    RatPoint,
    canonicalize,
    concat,
    endpoint,
    fundamental_reduction,
    inverse,
    pick_area,
    signed_area_between,
    signed_area_loop,
)
from .goldman import (
    Rerouting,
    goldman_classical,
    goldman_quantum,
    reroute,
    rerouting_trace,
    verify_bracket_equality,
)
from .holonomy import HolonomyWord, QAngle, evaluate_numeric, holonomy_of_path, segment_word, word_mul
from .intersections import (
    IntersectionPoint,
    StraightLoop,
    enumerate_along_p1,
    enumerate_points,
    intersection_index_sign,
    total_intersection_number,
)
from .loop_algebra import (
    AlgebraElement,
    LoopClass,
    QLaurent,
    classical_limit,
    commutator,
    commutator_straight,
    numeric_trace,
    poisson_bracket,
    t_of_path,
    t_straight,
)
from .modular import ModularMatrix, act_on_holonomy, act_on_path, check_relations, dual_act

__version__ = "0.1.0"
