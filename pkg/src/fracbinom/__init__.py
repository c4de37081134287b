"""Numerical verification of generalized binomial identities.

The package evaluates both sides of the identity

    alpha * sum_{j=0}^{n} binom(alpha n, alpha j) lambda^(alpha j)
        = (1 + lambda)^(alpha n) - R(alpha, n, lambda)

along independent routes, together with its root-set generalization, the
underlying fractional Taylor expansions on the unit disk, the bilateral
coefficient sums, and the strict inequality with its sign trichotomy.

Hot kernels (signed log-gamma, bulk binomial coefficients, the rational
integrand cores) run through a compiled extension when available and fall
back to pure Python otherwise; see fracbinom._core.current_backend().
"""

from ._core import current_backend, use_backend
from .errors import ConvergenceError, SingularKernelError, TruncationError
from .special import (
    LogGammaValue,
    RootSetKAlpha,
    gen_binom,
    log_gamma,
    principal_pow,
    roots_k_alpha,
)
from .quadrature import RadialIntegrand, integrate_radial, kernel_lambda, kernel_one
from .boundary import (
    BoundaryFunction,
    FracCoefficient,
    SmoothnessHint,
    binomial_boundary,
    exp_boundary,
    from_angle_function,
    from_disk_function,
    fsharp,
    fsharp_binomial,
)
from .identities import (
    Comparison,
    IdentityReport,
    InequalityResult,
    NeoParams,
    ResidualSign,
    check_inequality,
    neo_lhs,
    r_monotonicity_scan,
    residual_R,
    sign_classify,
    taylor_sum_neg,
    taylor_sum_nonneg,
    verify_neo3,
    verify_neo3A,
    verify_osler,
    verify_taylor,
)
from .cli import SweepGrid, SweepSummary, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundaryFunction",
    "Comparison",
    "ConvergenceError",
    "FracCoefficient",
    "IdentityReport",
    "InequalityResult",
    "LogGammaValue",
    "NeoParams",
    "RadialIntegrand",
    "ResidualSign",
    "RootSetKAlpha",
    "SingularKernelError",
    "SmoothnessHint",
    "SweepGrid",
    "SweepSummary",
    "TruncationError",
    "binomial_boundary",
    "check_inequality",
    "current_backend",
    "exp_boundary",
    "from_angle_function",
    "from_disk_function",
    "fsharp",
    "fsharp_binomial",
    "gen_binom",
    "integrate_radial",
    "kernel_lambda",
    "kernel_one",
    "log_gamma",
    "neo_lhs",
    "principal_pow",
    "r_monotonicity_scan",
    "residual_R",
    "roots_k_alpha",
    "run_sweep",
    "sign_classify",
    "taylor_sum_neg",
    "taylor_sum_nonneg",
    "use_backend",
    "verify_neo3",
    "verify_neo3A",
    "verify_osler",
    "verify_taylor",
    "__version__",
]
