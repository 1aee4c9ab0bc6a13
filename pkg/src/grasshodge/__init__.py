"""Exact arithmetic for hard Lefschetz certificates on Grassmannians of lines.

The package verifies, in rational arithmetic throughout, the positivity of
the correction certificate on the Grassmannian of lines, the hypergeometric
identities behind its closed form, and the bound |R_n(s, T)| <= 1 for the
associated Racah values.  See the README for the command-line entry points.
"""

from .chowring import (
    ChowElement,
    PrimitiveProfile,
    betti,
    box_partitions,
    hodge_star,
    intersection_pairing,
    lefschetz_kernel,
    lefschetz_op,
    lefschetz_power,
    primitive_class,
    primitive_profile,
    schubert,
    skew_syt_count,
)
from .exactmath import (
    ConcaveSequence,
    Rational,
    binomial,
    decimal_approx,
    exp_compare,
    format_rational,
    harmonic,
    harmonic_sum,
    parse_rational,
    pochhammer,
    random_concave,
    validate_concave,
)
from .lefschetz import (
    ProjElement,
    SigmaInstance,
    SigmaVerdict,
    chain_constant,
    correction_op,
    correction_weight,
    principal_weight,
    proj_commutator_check,
    proj_lower,
    proj_raise,
    proj_sigma,
    sigma_closed,
    sigma_direct,
    sigma_verdict,
)
from .racah import (
    ApproxReport,
    BranchVerdict,
    Inequality,
    ScanHit,
    ScanReport,
    WindowReport,
    WindowSamples,
    alternating_bound,
    alternating_profile,
    bound_scan,
    cauchy_sufficient,
    certify_alternating_bound,
    check_legendre_approx,
    in_cauchy_range,
    lattice_node,
    legendre_approx_profile,
    legendre_eval,
    legendre_window_checks,
    n_below_log,
    orthogonality_check,
    orthogonality_profile,
    racah_eval,
    racah_top_product,
    rescale_factor,
    rescaled_eval,
)

__version__ = "0.1.0"
