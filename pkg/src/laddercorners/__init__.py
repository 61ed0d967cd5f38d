"""Exact corner-counting polynomials for non-intersecting lattice path families.

The library computes, over one-sided ladder regions of a grid, the
generating polynomial in t whose k-th coefficient counts the r-tuples
of pairwise disjoint monotone paths with exactly k corners in total,
plus the determinant and coefficient-calculus identities these
polynomials satisfy, verified against brute-force enumeration.
"""

from .acoeff import a_coeff, b1, b2, b3
from .brackets import IncTuple, curly, sq_scalar, sq_tuple
from .closedform import binom, conca_herzog_det, kk_det, rect_single_poly
from .engine import family_poly, main_rhs, poly_det, single_path_poly, wtilde, wtilde_step
from .oracle import (
    OracleBudgetExceeded,
    corner_count,
    enumerate_single,
    family_poly_oracle,
    single_poly_oracle,
)
from .polyring import (
    NotDivisible,
    ONE,
    Poly,
    T,
    ZERO,
    add,
    div_t_power,
    from_machine,
    mul,
    neg,
    one_minus_t_pow,
    poly,
    poly_eval,
    sub,
    t_power,
    to_human,
    to_machine,
)
from .region import (
    EndpointSpec,
    InvalidProfile,
    LadderRegion,
    RegionParseError,
    format_region,
    make_region,
    parse_region,
    rectangle,
)
from .verifier import (
    CheckReport,
    SuiteConfig,
    SuiteSummary,
    UnknownIdentity,
    check_identity,
    check_lemma_3_6,
    gen_instance,
    run_suite,
)

__version__ = "0.1.0"
