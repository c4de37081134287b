"""Gamma-based scalar special functions.

Signed log-gamma with in-band pole reporting, the generalized binomial
coefficient Gamma(w+1) / (Gamma(z+1) Gamma(w-z+1)) with its zero convention
at denominator poles, principal complex powers, and the finite root sets
K_alpha = {exp(2 pi i k / alpha) : -alpha/2 < k <= alpha/2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _core


@dataclass(frozen=True)
class LogGammaValue:
    """log|Gamma(x)| plus the sign of Gamma(x); poles flagged in-band."""

    log_abs: float
    sign: int
    is_pole: bool


@dataclass(frozen=True)
class RootSetKAlpha:
    """The alpha-th roots of unity reachable by the principal power."""

    alpha: float
    ks: tuple[int, ...]
    roots: tuple[complex, ...]

    def __len__(self) -> int:
        return len(self.roots)


def log_gamma(x: float) -> LogGammaValue:
    """Signed log-gamma; x within 1e-9 (relative) of a non-positive integer
    is reported as a pole instead of raising."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"log_gamma requires a finite argument, got {x!r}")
    if _core.is_gamma_pole(x):
        return LogGammaValue(math.inf, 1, True)
    log_abs, sign = _core.lgamma_signed(x)
    return LogGammaValue(log_abs, sign, False)


def gen_binom(w: float, z: float) -> float:
    """Generalized binomial coefficient binom(w, z).

    Evaluates Gamma(w+1) / (Gamma(z+1) Gamma(w-z+1)) in log space with sign
    tracking.  When z+1 or w-z+1 lands on a Gamma pole while w+1 does not,
    the coefficient is 0 by convention; a pole at w+1 raises ValueError.
    Integer arguments go through exact integer arithmetic so Pascal's
    triangle is reproduced exactly.
    """
    w = float(w)
    z = float(z)
    if not (math.isfinite(w) and math.isfinite(z)):
        raise ValueError(f"gen_binom requires finite arguments, got ({w!r}, {z!r})")
    wi = _core.snap_int(w)
    zi = _core.snap_int(z)
    if wi is not None and zi is not None and 0 <= zi <= wi <= 1020:
        try:
            return float(math.comb(int(wi), int(zi)))
        except OverflowError:
            pass
    return _core.gen_binom_ls(w, z)


def principal_pow(z: complex, beta: float) -> complex:
    """z**beta on the principal branch, arg(z) taken in (-pi, pi].

    0**beta is 0 for beta > 0 and a domain error otherwise.
    """
    z = complex(z)
    beta = float(beta)
    if not math.isfinite(beta):
        raise ValueError(f"principal_pow requires a finite exponent, got {beta!r}")
    if z == 0:
        if beta > 0:
            return complex(0.0, 0.0)
        raise ValueError("principal_pow of 0 requires beta > 0")
    theta = math.atan2(z.imag, z.real)
    if theta == -math.pi:  # imag is -0.0 on the negative real axis
        theta = math.pi
    mag = abs(z) ** beta
    ang = theta * beta
    return complex(mag * math.cos(ang), mag * math.sin(ang))


def roots_k_alpha(alpha: float) -> RootSetKAlpha:
    """Enumerate K_alpha in ascending k.

    k runs over the integers in (-alpha/2, alpha/2]; the boundary test snaps
    alpha/2 to an integer within the usual 1e-9 window so even integer alpha
    includes k = alpha/2 exactly once.
    """
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"roots_k_alpha requires alpha > 0, got {alpha!r}")
    half = alpha / 2.0
    hs = _core.snap_int(half)
    if hs is not None and hs >= 1.0:
        kmax = int(hs)
        kmin = 1 - kmax
    else:
        kmax = math.floor(half)
        kmin = -kmax
    ks = []
    roots = []
    prev_angle = None
    for k in range(kmin, kmax + 1):
        angle = 2.0 * k / alpha  # in units of pi
        if prev_angle is not None and abs(angle - prev_angle) < 1e-12:
            continue
        prev_angle = angle
        ks.append(k)
        roots.append(complex(_core.cospi(angle), _core.sinpi(angle)))
    return RootSetKAlpha(alpha, tuple(ks), tuple(roots))
