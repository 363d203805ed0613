"""Exact computations for algebraic super-geometry and stable maps into split targets."""

from .chern import CohClass, chern_exterior, integrate, invert, kfc_demo, todd, todd_tangent, total_chern
from .moduli import (
    DualGraph,
    ModuliProblem,
    enumerate_stable_graphs,
    forget_point,
    is_stable_map_graph,
    natural_maps,
    stabilize_curve,
    taub_consistency,
    vsdim,
    witten_count,
)
from .parsing import ParseError, format_poly, parse_poly
from .sheafcalc import BundleSum, MapDatum, convexity_check, dualize, h0_h1, pullback, q_rank
from .superideal import Membership, SuperIdeal, membership, normal_form, spec_reduce, z2_split
from .superring import RingSpec, SuperPolynomial, hom_apply, is_nilpotent_odd, tau_b, tensor
from .superscheme import (
    SplitScheme,
    canonical_degree,
    ffp_check,
    hypersurface_cy,
    is_super_calabi_yau,
    parse_target,
    projective_superspace,
    sdim,
    split_scheme,
    structure_sheaf_terms,
)

__version__ = "0.1.0"
