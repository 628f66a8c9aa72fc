"""zetalike: exact computation of two families of zeta-like multiple series.

The rho-family (nested sums over rising-factorial blocks) evaluates to exact
rationals; the eta-family (single sums over consecutive shifted powers)
reduces symbolically to Q-linear combinations of 1 and zeta(k).  The package
bundles the closed-form machinery (harmonic numbers, cycle-index polynomials,
truncated zeta-star sums), a verification suite for every identity it
implements, and a CLI for tables and reports.
"""

from .compositions import compositions, count_weak_compositions, weak_compositions
from .errors import (
    FixtureError,
    InadmissibleIndexError,
    PoleError,
    QuadratureConvergenceError,
    ToleranceError,
    ZetalikeError,
)
from .eta import (
    EtaIndex,
    PartialFractionTable,
    ZetaExpr,
    eta_hook_closed_form,
    eta_numeric,
    eta_restricted_triple_sum,
    eta_symbolic,
    partial_fraction_shifted,
)
from .harmonic import (
    alternating_binomial_sum,
    bell_polynomial,
    harmonic,
    harmonic_vector,
    mzv_star_truncated,
)
from .numeric import (
    ApproxReal,
    Rational,
    bernoulli_number,
    binomial,
    factorial,
    pi_constant,
    rising_factorial,
    zeta_constant,
    zeta_pi_power_factor,
)
from .rho import (
    RhoIndex,
    rho_alternating,
    rho_exact,
    rho_family_value,
    rho_head_ones,
    rho_increasing,
    rho_series_partial,
    rho_series_partial_at,
    rho_sum_fixed_weight,
    rho_sum_general,
    rho_uniform,
    rho_weighted_sum,
    suffix_balance_sum,
)
from .verify import (
    SUITES,
    VerificationReport,
    quadrature_check_integral,
    rerun,
    run_suite,
    verify_eta_hook_closed_form,
    verify_eta_hook_sum,
    verify_eta_triple_sum,
    verify_remark_chain,
    verify_rho_eta_connection,
    verify_rho_sum_fixed_weight,
    verify_rho_sum_general,
    verify_rho_weighted_sum,
    verify_suffix_balance,
    verify_tables,
    verify_weighted_corollaries,
    verify_weighted_eta_sum,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxReal",
    "EtaIndex",
    "FixtureError",
    "InadmissibleIndexError",
    "PartialFractionTable",
    "PoleError",
    "QuadratureConvergenceError",
    "Rational",
    "RhoIndex",
    "SUITES",
    "ToleranceError",
    "VerificationReport",
    "ZetaExpr",
    "ZetalikeError",
    "alternating_binomial_sum",
    "bell_polynomial",
    "bernoulli_number",
    "binomial",
    "compositions",
    "count_weak_compositions",
    "eta_hook_closed_form",
    "eta_numeric",
    "eta_restricted_triple_sum",
    "eta_symbolic",
    "factorial",
    "harmonic",
    "harmonic_vector",
    "mzv_star_truncated",
    "partial_fraction_shifted",
    "pi_constant",
    "quadrature_check_integral",
    "rerun",
    "rho_alternating",
    "rho_exact",
    "rho_family_value",
    "rho_head_ones",
    "rho_increasing",
    "rho_series_partial",
    "rho_series_partial_at",
    "rho_sum_fixed_weight",
    "rho_sum_general",
    "rho_uniform",
    "rho_weighted_sum",
    "rising_factorial",
    "run_suite",
    "suffix_balance_sum",
    "verify_eta_hook_closed_form",
    "verify_eta_hook_sum",
    "verify_eta_triple_sum",
    "verify_remark_chain",
    "verify_rho_eta_connection",
    "verify_rho_sum_fixed_weight",
    "verify_rho_sum_general",
    "verify_rho_weighted_sum",
    "verify_suffix_balance",
    "verify_tables",
    "verify_weighted_corollaries",
    "verify_weighted_eta_sum",
    "weak_compositions",
    "zeta_constant",
    "zeta_pi_power_factor",
]
