"""Inversive pseudorandom generator over Z/p^eZ: closed-form cycle structure and a brute-force oracle."""
from .analytic import (
    CaseAnalysis,
    CaseLabel,
    classify,
    predict_period,
    predict_structure,
    tree_depth_profile,
)
from .enumerator import build_graph, cycle_histogram, decompose, export_dot
from .exceptions import (
    BudgetExceeded,
    InvalidParameters,
    InversiveError,
    NoFiniteOrder,
    NotAResidue,
    NotAUnit,
    WrongCase,
)
from .ext_ring import QuadExt, ext_order, is_basic_irreducible, poly_order_g, roots_of_f
from .iprng import Params, PeriodInfo, measure_period, orbit, slrs, slrs_term, step
from .ring import Modulus, is_qr, logp, mod_inverse, mult_order, sqrt_mod
from .structure import (
    ConvergentTree,
    CycleSet,
    GComponent,
    GraphStructure,
    OtherComponent,
    SelfLoop,
    Verdict,
)
from .verify import grid_scan, verify_structure

__version__ = "0.1.0"
