"""Verification of the generalized binomial identities.

Covers the finite sum alpha * sum_j binom(alpha n, alpha j) lambda^(alpha j)
against its closed form plus residual, the residual integral R itself, the
strict inequality and its trichotomy, the fractional Taylor expansions with
an optional order shift gamma, and the bilateral coefficient sums.

Every verifier returns an IdentityReport whose two sides are computed along
independent routes (finite Gamma-function sums or series on the left,
function evaluations and adaptive quadrature on the right), so agreement is
evidence, not tautology.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from . import _core
from .boundary import BoundaryFunction, SmoothnessHint, _coef_batch
from .errors import ConvergenceError, TruncationError
from .quadrature import RadialIntegrand, integrate_radial, kernel_lambda, kernel_one
from .special import gen_binom, principal_pow, roots_k_alpha

Number = Union[float, complex]

_J_CAP = 10 ** 6


@dataclass(frozen=True)
class NeoParams:
    """Parameters (alpha, n, lam, gamma) shared by the identity checks."""

    alpha: float
    n: int
    lam: float
    gamma: float = 0.0

    def __post_init__(self):
        if not (isinstance(self.alpha, (int, float)) and math.isfinite(self.alpha) and self.alpha > 0):
            raise ValueError(f"alpha must be finite and positive, got {self.alpha!r}")
        if not (isinstance(self.n, int) and not isinstance(self.n, bool) and self.n >= 1):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.lam, (int, float)) and 0.0 < self.lam <= 1.0):
            raise ValueError(f"lam must lie in (0, 1], got {self.lam!r}")
        if not (isinstance(self.gamma, (int, float)) and math.isfinite(self.gamma)):
            raise ValueError(f"gamma must be finite, got {self.gamma!r}")
        if not self.gamma < self.alpha:
            raise ValueError(
                f"gamma must be smaller than alpha, got gamma={self.gamma!r}, alpha={self.alpha!r}"
            )


@dataclass(frozen=True)
class IdentityReport:
    """Two independently computed sides of an identity plus the verdict."""

    lhs: Number
    rhs: Number
    abs_err: float
    rel_err: float
    tol: float
    passed: bool
    pieces: dict = field(default_factory=dict)


class ResidualSign(enum.Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"


class Comparison(enum.Enum):
    STRICT_LESS = "strict_less"
    EQUAL = "equal"
    STRICT_GREATER = "strict_greater"


@dataclass(frozen=True)
class InequalityResult:
    comparison: Comparison
    margin: float  # rhs - lhs
    lhs: float
    rhs: float


def _report(lhs: Number, rhs: Number, tol: float, pieces: dict) -> IdentityReport:
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / max(1.0, abs(rhs))
    return IdentityReport(lhs, rhs, abs_err, rel_err, tol, bool(rel_err <= tol), pieces)


# ---------------------------------------------------------------------------
# finite sum, residual R, inequality


def neo_lhs(p: NeoParams) -> float:
    """alpha * sum_{j=0}^{n} binom(alpha n, alpha j) lam^(alpha j), ascending j."""
    an = p.alpha * p.n
    total = 0.0
    for j in range(p.n + 1):
        total += gen_binom(an, p.alpha * j) * p.lam ** (p.alpha * j)
    return p.alpha * total


def _residual_with_err(p: NeoParams, quad_tol: float) -> tuple[float, float]:
    a = _core.snap_int(p.alpha)
    if a is not None and (a == 1.0 or a % 2.0 == 0.0):
        return 0.0, 0.0
    an = p.alpha * p.n
    pref = p.alpha * p.lam ** p.alpha * _core.sinpi(p.alpha) / math.pi
    if pref == 0.0:
        # odd integer alpha: sin(alpha pi) is exactly 0
        return 0.0, 0.0
    integrand = RadialIntegrand(
        p.alpha,
        lambda t: _core.neo_h(t, p.alpha, an, p.lam),
        "residual core (1-t)^(alpha n) {K_lambda + lam^(alpha n) K_one}",
    )
    val, err = integrate_radial(integrand, quad_tol / abs(pref))
    return pref * val, abs(pref) * err


def residual_R(p: NeoParams, quad_tol: float = 1e-11) -> float:
    """The residual integral R(alpha, n, lam).

    Exactly 0 for alpha = 1 and for even integer alpha (where the kernel
    path would be singular); positive for alpha in (0,1), negative for
    alpha in (1,2).
    """
    if not (quad_tol > 0):
        raise ValueError(f"quad_tol must be positive, got {quad_tol!r}")
    val, _ = _residual_with_err(p, quad_tol)
    return val


def verify_neo3(p: NeoParams, tol: float = 1e-8) -> IdentityReport:
    """Finite sum against (1+lam)^(alpha n) - R for 0 < alpha < 2."""
    if not (0.0 < p.alpha < 2.0):
        raise ValueError(f"verify_neo3 requires 0 < alpha < 2, got {p.alpha!r}")
    if p.gamma != 0.0:
        raise ValueError("verify_neo3 does not take a gamma shift")
    if not (tol > 0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    an = p.alpha * p.n
    lhs = neo_lhs(p)
    power = (1.0 + p.lam) ** an
    quad_tol = max(1e-13, tol * max(1.0, power) / 50.0)
    r_val, r_err = _residual_with_err(p, quad_tol)
    rhs = power - r_val
    return _report(lhs, rhs, tol, {"residual_R": r_val, "residual_quad_err": r_err})


def verify_neo3A(p: NeoParams, tol: float = 1e-8) -> IdentityReport:
    """Finite sum against the K_alpha sum minus R, valid for every alpha > 0.

    The root sum must come out real (its imaginary part is validated against
    tol and dropped); for alpha with alpha/2 integer the residual term is
    identically zero.
    """
    if p.gamma != 0.0:
        raise ValueError("verify_neo3A does not take a gamma shift")
    if not (tol > 0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    an = p.alpha * p.n
    lhs = neo_lhs(p)
    roots = roots_k_alpha(p.alpha)
    ksum = complex(0.0, 0.0)
    for w in roots.roots:
        ksum += principal_pow(1.0 + p.lam * w, an)
    scale = max(1.0, abs(ksum.real))
    if abs(ksum.imag) > tol * scale:
        raise ValueError(
            f"K_alpha sum should be real but has imaginary part {ksum.imag!r}"
        )
    quad_tol = max(1e-13, tol * scale / 50.0)
    r_val, r_err = _residual_with_err(p, quad_tol)
    rhs = ksum.real - r_val
    pieces = {
        "kalpha_sum": ksum.real,
        "kalpha_sum_imag": ksum.imag,
        "kalpha_cardinality": float(len(roots)),
        "residual_R": r_val,
        "residual_quad_err": r_err,
    }
    return _report(lhs, rhs, tol, pieces)


def sign_classify(alpha: float) -> ResidualSign:
    """Sign of (finite sum - K_alpha sum): the trichotomy in alpha.

    Negative on (2m, 2m+1), zero at integers, positive on (2m+1, 2m+2).
    """
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if _core.snap_int(alpha) is not None:
        return ResidualSign.ZERO
    if math.floor(alpha) % 2 == 0:
        return ResidualSign.NEGATIVE
    return ResidualSign.POSITIVE


def check_inequality(alpha: float, n: int, x: float, y: float) -> InequalityResult:
    """Compare alpha * sum_j binom(alpha n, alpha j) x^(alpha j) y^(alpha(n-j))
    with (x+y)^(alpha n).

    Ties within 1e-12 relative are reported as equal; the theorem says that
    happens exactly when alpha = 1 or x = y = 0.
    """
    alpha = float(alpha)
    x = float(x)
    y = float(y)
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"check_inequality requires 0 < alpha < 2, got {alpha!r}")
    if not (isinstance(n, int) and not isinstance(n, bool) and n >= 1):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not (x >= 0.0 and y >= 0.0 and math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"x and y must be finite and nonnegative, got ({x!r}, {y!r})")
    an = alpha * n
    total = 0.0
    for j in range(n + 1):
        total += gen_binom(an, alpha * j) * x ** (alpha * j) * y ** (alpha * (n - j))
    lhs = alpha * total
    rhs = (x + y) ** an
    margin = rhs - lhs
    if abs(margin) <= 1e-12 * max(1.0, abs(lhs), abs(rhs)):
        comparison = Comparison.EQUAL
    elif margin > 0:
        comparison = Comparison.STRICT_LESS
    else:
        comparison = Comparison.STRICT_GREATER
    return InequalityResult(comparison, margin, lhs, rhs)


# ---------------------------------------------------------------------------
# fractional Taylor series


def _certified_lambda_one(f: BoundaryFunction) -> bool:
    # absolute summability of the coefficients cannot be checked for an
    # arbitrary callback; accept only the closed-form binomial decay or a
    # caller-asserted C^2-with-zero-at-minus-one hint
    return (
        f.binomial_exponent is not None
        or f.smoothness_hint is SmoothnessHint.C2_VANISHING_AT_MINUS_ONE
    )


def _tail_start_power_law(f: BoundaryFunction, alpha: float, gamma: float, tol: float) -> int:
    """Smallest J with alpha * sum_{j>J} |fsharp(gamma + alpha j)| < tol/2,
    assuming |fsharp(xi)| ~ C |xi|^(-T-1) and measuring C at a calibration
    point.  Only called for lam = 1."""
    if f.binomial_exponent is not None:
        T = f.binomial_exponent
        j0 = 50
        xi0 = abs(gamma) + alpha * j0
        c0 = max(
            abs(gen_binom(T, xi0)),
            abs(gen_binom(T, xi0 + alpha / 3.0)),
            abs(gen_binom(T, xi0 + 2.0 * alpha / 3.0)),
        ) * xi0 ** (T + 1.0)
        c0 = max(c0, 1e-12)
        # alpha * sum_{j>J} C (alpha j)^(-T-1) <= C alpha^(-T) J^(-T) / T
        target = 0.5 * tol * T * alpha ** T / c0
        if target >= 1.0:
            return 64
        J = int(math.ceil(target ** (-1.0 / T)))
        return max(64, J)
    # C^2 with f(-1) = 0: coefficients decay like xi^(-2); calibrate by
    # quadrature at one point and probe that the decay is actually happening
    j0 = 50
    xi0 = abs(gamma) + alpha * j0
    probes = np.array([xi0, xi0 + alpha / 3.0, 2.0 * xi0, 2.0 * xi0 + alpha / 3.0])
    vals, _, conv = _coef_batch(f, probes, tol=1e-8, max_points=2 ** 18)
    if not bool(np.all(conv)):
        raise TruncationError(
            "decay probe quadrature did not converge; cannot certify lam = 1"
        )
    near = max(abs(vals[0]), abs(vals[1]))
    far = max(abs(vals[2]), abs(vals[3]))
    if far > 0.6 * near + 1e-14:
        raise TruncationError(
            f"coefficients do not exhibit the promised decay "
            f"(|fsharp| ~ {near:.3e} at xi={xi0:.3g} vs {far:.3e} at {2*xi0:.3g})"
        )
    c0 = max(near * xi0 ** 2, 1e-12)
    # tail with T_eff = 1: alpha * C * alpha^(-2) J^(-1) * (1/1)
    J = int(math.ceil(2.0 * c0 / (alpha * max(tol, 1e-15))))
    return max(64, J)


def _series_terms(
    f: BoundaryFunction,
    alpha: float,
    lam: float,
    gamma: float,
    tol: float,
    negative: bool,
) -> np.ndarray:
    """Terms fsharp(gamma +/- alpha k) * lam^(alpha k) for k = 0.. (or 1..),
    truncated so the omitted tail is below tol/2 after the alpha prefactor."""
    M = max(f.sup_bound, 1e-12)
    la = lam ** alpha
    if lam < 1.0:
        # alpha M lam^(alpha(J+1)) / (1 - lam^alpha) < tol/2
        num = tol * (1.0 - la) / (2.0 * alpha * M)
        if num >= 1.0:
            J = 8
        else:
            J = int(math.ceil(math.log(num) / (alpha * math.log(lam)))) - 1
            J = max(8, J)
        if J > _J_CAP:
            raise TruncationError(
                f"series needs J = {J} > {_J_CAP} terms at lam = {lam!r}"
            )
    else:
        if not _certified_lambda_one(f):
            raise ValueError(
                "lam = 1 requires a coefficient decay certificate: a binomial "
                "closed form or the C2-vanishing-at-minus-one smoothness hint"
            )
        J = _tail_start_power_law(f, alpha, gamma, tol)
        if J > _J_CAP:
            raise TruncationError(
                f"series needs J = {J} > {_J_CAP} terms at lam = 1"
            )
    k0 = 1 if negative else 0
    count = J + 1 - k0
    step = -alpha if negative else alpha
    ks = np.arange(k0, J + 1)
    if f.binomial_exponent is not None:
        coeffs = _core.binom_range(f.binomial_exponent, step, gamma, k0, count).astype(complex)
    else:
        # per-coefficient quadrature budget: errors enter the sum through
        # alpha * sum lam^(alpha k) <= alpha * (J+1) (worst case lam = 1)
        weight_mass = (J + 1.0) if lam >= 1.0 else min(J + 1.0, 1.0 / (1.0 - la))
        tol_each = max(tol / (2.0 * alpha * weight_mass), 1e-13)
        xis = gamma + step * ks
        coeffs, _, conv = _coef_batch(f, xis, tol_each, uniform=True)
        if not bool(np.all(conv)):
            raise ConvergenceError(
                f"coefficient quadrature hit the grid cap for "
                f"{int(np.sum(~conv))} of {count} coefficients",
            )
    return coeffs * lam ** (alpha * ks)


def _sum_terms(terms: np.ndarray, compensated: bool) -> complex:
    if compensated:
        return complex(
            math.fsum(np.real(terms).tolist()), math.fsum(np.imag(terms).tolist())
        )
    total = complex(0.0, 0.0)
    for t in terms:
        total += complex(t)
    return total


def taylor_sum_nonneg(
    f: BoundaryFunction,
    alpha: float,
    lam: float,
    gamma: float = 0.0,
    tol: float = 1e-9,
    compensated: bool = False,
) -> complex:
    """alpha * sum_{j>=0} fsharp(gamma + alpha j) lam^(alpha j).

    Truncation uses the geometric tail bound for lam < 1; lam = 1 is
    accepted only with a decay certificate (see _certified_lambda_one) and
    then uses the power-law bound with a measured constant.
    """
    alpha = float(alpha)
    lam = float(lam)
    gamma = float(gamma)
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if not (0.0 < lam <= 1.0):
        raise ValueError(f"lam must lie in (0, 1], got {lam!r}")
    if not (tol > 0 and math.isfinite(gamma)):
        raise ValueError("tol must be positive and gamma finite")
    terms = _series_terms(f, alpha, lam, gamma, tol, negative=False)
    return alpha * _sum_terms(terms, compensated)


def taylor_sum_neg(
    f: BoundaryFunction,
    alpha: float,
    lam: float,
    gamma: float = 0.0,
    tol: float = 1e-9,
    compensated: bool = False,
) -> complex:
    """alpha * sum_{j<=-1} fsharp(gamma + alpha j) lam^(-alpha j)."""
    alpha = float(alpha)
    lam = float(lam)
    gamma = float(gamma)
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if not (0.0 < lam <= 1.0):
        raise ValueError(f"lam must lie in (0, 1], got {lam!r}")
    if not (tol > 0 and math.isfinite(gamma)):
        raise ValueError("tol must be positive and gamma finite")
    terms = _series_terms(f, alpha, lam, gamma, tol, negative=True)
    return alpha * _sum_terms(terms, compensated)


# ---------------------------------------------------------------------------
# Taylor identity verification


_TAYLOR_KINDS = ("t1", "t2", "t3", "t1A", "t2A", "t3A")


def _f_minus(f: BoundaryFunction):
    if f.disk_eval is None:
        raise ValueError(
            "identity right-hand sides need disk evaluation; construct the "
            "boundary function with from_disk_function or a closed-form helper"
        )
    disk = f.disk_eval

    def g(t):
        return np.asarray(disk(-np.asarray(t, dtype=float) + 0.0j), dtype=complex)

    return g


def _integrate_complex(alpha_eff: float, h, tol: float) -> tuple[complex, float]:
    # split the complex integrand; for real boundary functions the imaginary
    # pass sees an identically zero integrand and converges immediately
    re_val, re_err = integrate_radial(
        RadialIntegrand(alpha_eff, lambda t: np.real(h(t))), tol / 2.0
    )
    im_val, im_err = integrate_radial(
        RadialIntegrand(alpha_eff, lambda t: np.imag(h(t))), tol / 2.0
    )
    return complex(re_val, im_val), re_err + im_err


def _taylor_integral(
    which: str,
    f: BoundaryFunction,
    alpha: float,
    lam: float,
    gamma: float,
    tol: float,
) -> tuple[complex, float]:
    """The residual integral of the requested identity, prefactor included."""
    sg = _core.sinpi(gamma)
    sag = _core.sinpi(alpha - gamma)
    la = lam ** alpha
    c = _core.cospi(alpha)
    fm = _f_minus(f)
    kind = which[1]
    if kind == "1":
        pref = alpha / math.pi

        def h(t):
            return fm(t) * (t ** alpha * sg + la * sag) * _core.kernel_lambda_arr(t, lam, alpha)

    elif kind == "2":
        pref = alpha * la / math.pi

        def h(t):
            return fm(t) * (sag + (lam * t) ** alpha * sg) * _core.kernel_one_arr(t, lam, alpha)

    else:
        pref = alpha * (1.0 - lam ** (2.0 * alpha)) / math.pi

        def h(t):
            ta = t ** alpha
            lta = (lam * t) ** alpha
            weight = la * (1.0 - t ** (2.0 * alpha)) * sag + ta * (
                1.0 - 2.0 * lta * c + la * la
            ) * sg
            return (
                fm(t)
                * weight
                * _core.kernel_lambda_arr(t, lam, alpha)
                * _core.kernel_one_arr(t, lam, alpha)
            )

    if pref == 0.0:
        # exact zeros: lam = 1 in t3, or both sine weights vanishing
        return complex(0.0, 0.0), 0.0
    val, err = _integrate_complex(alpha - gamma, h, tol / abs(pref))
    return pref * val, abs(pref) * err


def _kernel_merge_check(n_points: int = 32, seed: int = 20810) -> float:
    """Max relative deviation of the combined kernel identity
    K_lambda - K_one = (1 - lam^(2a))(1 - t^(2a)) K_lambda K_one
    at random (t, lam, alpha) samples."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_points):
        t = rng.uniform(0.05, 0.95)
        lam = rng.uniform(0.05, 0.95)
        alpha = rng.uniform(0.1, 1.9)
        if abs(alpha - 1.0) < 0.05:
            alpha += 0.1
        kl = kernel_lambda(t, lam, alpha)
        k1 = kernel_one(t, lam, alpha)
        direct = kl - k1
        merged = (1.0 - lam ** (2 * alpha)) * (1.0 - t ** (2 * alpha)) * kl * k1
        dev = abs(direct - merged) / max(1.0, abs(kl), abs(k1))
        worst = max(worst, dev)
    return worst


def verify_taylor(
    which: str,
    f: BoundaryFunction,
    p: NeoParams,
    tol: float = 1e-8,
) -> IdentityReport:
    """Check one of the six fractional Taylor identities.

    which is one of t1, t2, t3 (classic, 0 < alpha < 2, gamma = 0) or t1A,
    t2A, t3A (alpha > 0, gamma < alpha).  p supplies alpha, lam, gamma; its
    n plays no role here.  For alpha/2 a positive integer the residual
    integrals are taken as exactly zero (gamma must then be 0, except t2A,
    which is admitted for nonzero gamma but flagged experimental in the
    report pieces).
    """
    if which not in _TAYLOR_KINDS:
        raise ValueError(f"which must be one of {_TAYLOR_KINDS}, got {which!r}")
    if not (tol > 0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    alpha, lam, gamma = p.alpha, p.lam, p.gamma
    is_A = which.endswith("A")
    if not is_A:
        if not (0.0 < alpha < 2.0):
            raise ValueError(f"{which} requires 0 < alpha < 2, got {alpha!r}")
        if gamma != 0.0:
            raise ValueError(f"{which} takes no gamma shift; use {which}A")
    half = _core.snap_int(alpha / 2.0)
    half_integer = half is not None and half >= 1.0
    experimental = False
    if half_integer and gamma != 0.0:
        if which == "t2A":
            experimental = True
        else:
            raise ValueError(
                f"alpha/2 = {half!r} is a positive integer: {which} requires gamma = 0"
            )

    budget = tol / 3.0
    pieces: dict = {}

    # left side: truncated coefficient series
    if which in ("t1", "t1A"):
        lhs = taylor_sum_nonneg(f, alpha, lam, gamma, tol=budget)
    elif which in ("t2", "t2A"):
        lhs = taylor_sum_neg(f, alpha, lam, gamma, tol=budget)
    else:
        lhs = taylor_sum_nonneg(f, alpha, lam, gamma, tol=budget / 2.0) + taylor_sum_neg(
            f, alpha, lam, gamma, tol=budget / 2.0
        )

    # right side: root-set evaluations minus the residual integral
    alpha_is_one = _core.snap_int(alpha) == 1.0
    if which in ("t2", "t2A"):
        if half_integer and not experimental:
            integral, int_err = complex(0.0, 0.0), 0.0
        elif alpha_is_one and gamma == 0.0:
            integral, int_err = complex(0.0, 0.0), 0.0
        else:
            integral, int_err = _taylor_integral(which, f, alpha, lam, gamma, budget)
        rhs = integral
        pieces["residual_integral"] = integral
    else:
        if f.disk_eval is None:
            raise ValueError(
                "identity right-hand sides need disk evaluation; construct the "
                "boundary function with from_disk_function or a closed-form helper"
            )
        ksum = complex(0.0, 0.0)
        roots = roots_k_alpha(alpha)
        for w in roots.roots:
            z = lam * w
            ksum += principal_pow(z, -gamma) * complex(f.disk_eval(z))
        pieces["kalpha_sum"] = ksum
        pieces["kalpha_cardinality"] = float(len(roots))
        if half_integer or (alpha_is_one and gamma == 0.0):
            integral, int_err = complex(0.0, 0.0), 0.0
        else:
            integral, int_err = _taylor_integral(which, f, alpha, lam, gamma, budget)
        rhs = ksum - integral
        pieces["residual_integral"] = integral
    pieces["integral_quad_err"] = int_err
    if experimental:
        pieces["experimental_t2A_gamma"] = True

    if which in ("t3", "t3A"):
        merge_dev = _kernel_merge_check()
        pieces["kernel_merge_dev"] = merge_dev
        if merge_dev > 1e-12:
            raise RuntimeError(
                f"kernel merge identity violated: max deviation {merge_dev:.3e}"
            )

    if f.real_coefficients:
        scale = max(1.0, abs(rhs))
        if abs(complex(lhs).imag) > tol * scale or abs(complex(rhs).imag) > tol * scale:
            raise ValueError(
                "sides should be real for a conjugate-symmetric boundary function; "
                f"got lhs imag {complex(lhs).imag!r}, rhs imag {complex(rhs).imag!r}"
            )
        pieces["lhs_imag"] = complex(lhs).imag
        pieces["rhs_imag"] = complex(rhs).imag
        lhs = complex(lhs).real
        rhs = complex(rhs).real

    return _report(lhs, rhs, tol, pieces)


# ---------------------------------------------------------------------------
# bilateral sums


def verify_osler(alpha: float, n: int, tol: float = 1e-6) -> IdentityReport:
    """Bilateral sum alpha * sum_{j in Z} binom(alpha n, alpha j) against the
    K_alpha evaluation of (1+z)^(alpha n) at the roots (2^(alpha n) when
    alpha < 2).

    The terms decay like |alpha j|^(-alpha n - 1) but oscillate in sign, so
    partial sums over symmetric windows converge an order faster than the
    absolute tail; the window is doubled until two consecutive doublings
    move the sum by less than a quarter of the tolerance.
    """
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if not (isinstance(n, int) and not isinstance(n, bool) and n >= 1):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not (tol > 0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    an = alpha * n

    roots = roots_k_alpha(alpha)
    ksum = complex(0.0, 0.0)
    for w in roots.roots:
        ksum += principal_pow(1.0 + w, an)
    if abs(ksum.imag) > 1e-9 * max(1.0, abs(ksum.real)):
        raise ValueError(f"K_alpha sum should be real, got imaginary part {ksum.imag!r}")
    rhs = ksum.real

    tol_abs = tol * max(1.0, abs(rhs))
    window = 128
    pos = _core.binom_range(an, alpha, 0.0, 0, window + 1)
    neg = _core.binom_range(an, -alpha, 0.0, 1, window)
    total = alpha * (math.fsum(pos) + math.fsum(neg))
    streak = 0
    diff = math.inf
    while True:
        pos = _core.binom_range(an, alpha, 0.0, window + 1, window)
        neg = _core.binom_range(an, -alpha, 0.0, window + 1, window)
        new_total = total + alpha * (math.fsum(pos) + math.fsum(neg))
        window *= 2
        diff = abs(new_total - total)
        total = new_total
        if diff < tol_abs / 4.0:
            streak += 1
            if streak >= 2:
                break
        else:
            streak = 0
        if window > _J_CAP:
            raise TruncationError(
                f"bilateral sum did not stabilize within |j| <= {_J_CAP} "
                f"(last window move {diff:.3e}, target {tol_abs / 4.0:.3e})",
                value=total,
            )
    pieces = {
        "window": float(window),
        "last_window_move": diff,
        "kalpha_cardinality": float(len(roots)),
    }
    return _report(total, rhs, tol, pieces)


def r_monotonicity_scan(
    alpha: float, lam: float, n_max: int, quad_tol: float = 1e-11
) -> list[float]:
    """[R(alpha, 1, lam), ..., R(alpha, n_max, lam)].

    |R| decreases strictly in n and tends to 0; alpha = 1 gives all zeros.
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"scan requires 0 < alpha < 2, got {alpha!r}")
    if not (isinstance(n_max, int) and not isinstance(n_max, bool) and n_max >= 2):
        raise ValueError(f"n_max must be an integer >= 2, got {n_max!r}")
    return [
        residual_R(NeoParams(alpha, n, lam), quad_tol=quad_tol)
        for n in range(1, n_max + 1)
    ]
