"""Pure-Python/NumPy implementation of the numeric hot kernels.

Mirrors the API of the optional compiled extension `_ckernels`; the active
backend is chosen in `fracbinom._core`.  Everything here is stateless.
"""

from __future__ import annotations

import math

import numpy as np

from fracbinom.errors import SingularKernelError

BACKEND_NAME = "pure"

# Integers are detected with a relative snap window; values inside the window
# are treated as the exact integer.
SNAP_REL = 1e-9

# Lanczos rational part, g = 607/128 with 15 terms (Godfrey's table); the
# shorter g=7 table leaves ~1e-13 systematic error near x = 170, this one
# stays below 1e-15 so the reconstruction budget is spent on rounding only.
_L = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LANCZOS_SHIFT = 5.2421875  # g + 1/2, exactly representable

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split constant


def snap_int(x: float):
    """Nearest integer when x sits inside the snap window, else None."""
    r = float(round(x))
    if abs(x - r) < SNAP_REL * max(1.0, abs(x)):
        return r
    return None


def is_gamma_pole(x: float) -> bool:
    """True when Gamma(x) has a pole at the snapped value of x."""
    r = snap_int(x)
    return r is not None and r <= 0.0


def sinpi(x: float) -> float:
    """sin(pi*x) with argument reduction, exact zeros at integers."""
    m = float(round(x))
    if abs(m) > 2**53:
        return 0.0
    s = math.sin(math.pi * (x - m))
    if int(m) & 1:
        s = -s
    return s


def cospi(x: float) -> float:
    """cos(pi*x); exact zeros at half integers via the shifted sine."""
    return sinpi(x + 0.5)


def _two_prod(a: float, b: float):
    # Dekker product: a*b = p + err exactly.
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _lanczos_terms(x: float):
    # log Gamma(x) for x >= 0.5 as an unevaluated sum of exact-ish pieces;
    # deferring the final rounding to one fsum keeps the reflected branch
    # inside the 1e-13 reconstruction budget.
    y = x - 1.0
    a = _L[0]
    for i in range(1, 15):
        a += _L[i] / (y + i)
    t = y + _LANCZOS_SHIFT
    lh = math.log(t)
    # refine log(t) to ~1 ulp below double via one residual step; keep the
    # correction as a separate low part so it is not re-rounded away
    u = math.exp(lh)
    ll = (t - u) / u
    w = y + 0.5
    ph, pl = _two_prod(w, lh)
    return (ph, pl, w * ll, -t, _HALF_LOG_2PI, math.log(a))


def _lanczos_logabs(x: float) -> float:
    return math.fsum(_lanczos_terms(x))


def lgamma_signed(x: float):
    """(log|Gamma(x)|, sign) for non-pole x; reflection below 0.5."""
    if x >= 0.5:
        return _lanczos_logabs(x), 1
    s = sinpi(x)
    terms = _lanczos_terms(1.0 - x)
    logabs = math.fsum(
        (_LOG_PI, -math.log(abs(s))) + tuple(-v for v in terms)
    )
    return logabs, (1 if s > 0.0 else -1)


def gen_binom_ls(w: float, z: float) -> float:
    """Log-space generalized binomial coefficient with the zero convention.

    Gamma(w+1) / (Gamma(z+1) Gamma(w-z+1)); 0.0 when a denominator argument
    is a pole while w+1 is not, ValueError when w+1 itself is a pole.
    """
    if is_gamma_pole(w + 1.0):
        raise ValueError(f"gen_binom undefined: w+1 = {w + 1.0!r} is a Gamma pole")
    if is_gamma_pole(z + 1.0) or is_gamma_pole(w - z + 1.0):
        return 0.0
    lw, sw = lgamma_signed(w + 1.0)
    lz, sz = lgamma_signed(z + 1.0)
    lv, sv = lgamma_signed(w - z + 1.0)
    try:
        mag = math.exp((lw - lz) - lv)
    except OverflowError:
        mag = math.inf  # matches IEEE exp(); the compiled backend saturates too
    return sw * sz * sv * mag


# ---------------------------------------------------------------------------
# vector variants


def _sinpi_vec(x):
    m = np.round(x)
    s = np.sin(np.pi * (x - m))
    odd = np.fmod(np.abs(m), 2.0) == 1.0
    return np.where(odd, -s, s)


def _nsum(terms):
    # Neumaier-compensated sum over a fixed small list of arrays.
    s = np.zeros_like(terms[0])
    c = np.zeros_like(terms[0])
    for t in terms:
        tmp = s + t
        c = c + np.where(np.abs(s) >= np.abs(t), (s - tmp) + t, (t - tmp) + s)
        s = tmp
    return s + c


def _two_prod_vec(a, b):
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _lanczos_terms_vec(x):
    y = x - 1.0
    a = np.full_like(y, _L[0])
    for i in range(1, 15):
        a += _L[i] / (y + i)
    t = y + _LANCZOS_SHIFT
    lh = np.log(t)
    u = np.exp(lh)
    ll = (t - u) / u
    w = y + 0.5
    ph, pl = _two_prod_vec(w, lh)
    zero = np.zeros_like(y)
    return [ph, -t, zero + _HALF_LOG_2PI, np.log(a), pl, w * ll]


def _lgamma_vec(x):
    x = np.asarray(x, dtype=np.float64)
    logabs = np.empty_like(x)
    sign = np.ones_like(x)
    pos = x >= 0.5
    if pos.any():
        logabs[pos] = _nsum(_lanczos_terms_vec(x[pos]))
    neg = ~pos
    if neg.any():
        xm = x[neg]
        s = _sinpi_vec(xm)
        terms = [-v for v in _lanczos_terms_vec(1.0 - xm)]
        logabs[neg] = _nsum(
            [np.zeros_like(xm) + _LOG_PI, -np.log(np.abs(s))] + terms
        )
        sign[neg] = np.where(s > 0.0, 1.0, -1.0)
    return logabs, sign


def _pole_mask(v):
    r = np.round(v)
    return (np.abs(v - r) < SNAP_REL * np.maximum(1.0, np.abs(v))) & (r <= 0.0)


def binom_range(w: float, step: float, offset: float, j0: int, count: int):
    """gen_binom(w, offset + step*j) for j = j0 .. j0+count-1 as an array."""
    if is_gamma_pole(w + 1.0):
        raise ValueError(f"gen_binom undefined: w+1 = {w + 1.0!r} is a Gamma pole")
    j = j0 + np.arange(count, dtype=np.float64)
    z = offset + step * j
    a = z + 1.0
    b = (w - z) + 1.0
    out = np.zeros(count, dtype=np.float64)
    live = ~(_pole_mask(a) | _pole_mask(b))
    if live.any():
        lw, sw = lgamma_signed(w + 1.0)
        la, sa = _lgamma_vec(a[live])
        lb, sb = _lgamma_vec(b[live])
        out[live] = sw * sa * sb * np.exp((lw - la) - lb)
    return out


# ---------------------------------------------------------------------------
# radial kernels

_DENOM_FLOOR = 1e-300


def kernel_lambda_arr(t, lam: float, alpha: float):
    """1 / (t^2a - 2 (t lam)^a cos(a pi) + lam^2a) elementwise."""
    t = np.asarray(t, dtype=np.float64)
    c = cospi(alpha)
    ta = t**alpha
    la = lam**alpha
    tla = ta * la
    d = ta * ta - 2.0 * c * tla + la * la
    if d.min(initial=np.inf) < _DENOM_FLOOR:
        raise SingularKernelError(
            f"kernel_lambda denominator vanished (alpha={alpha}, lam={lam})"
        )
    return 1.0 / d


def kernel_one_arr(t, lam: float, alpha: float):
    """1 / (1 - 2 (lam t)^a cos(a pi) + (lam t)^2a) elementwise."""
    t = np.asarray(t, dtype=np.float64)
    c = cospi(alpha)
    tla = (t**alpha) * lam**alpha
    d = 1.0 - 2.0 * c * tla + tla * tla
    if d.min(initial=np.inf) < _DENOM_FLOOR:
        raise SingularKernelError(
            f"kernel_one denominator vanished (alpha={alpha}, lam={lam})"
        )
    return 1.0 / d


def neo_h(t, alpha: float, an: float, lam: float):
    """(1-t)^an * (kernel_lambda + lam^an * kernel_one), the residual core."""
    t = np.asarray(t, dtype=np.float64)
    c = cospi(alpha)
    ta = t**alpha
    la = lam**alpha
    tla = ta * la
    d1 = ta * ta - 2.0 * c * tla + la * la
    d2 = 1.0 - 2.0 * c * tla + tla * tla
    if min(d1.min(initial=np.inf), d2.min(initial=np.inf)) < _DENOM_FLOOR:
        raise SingularKernelError(
            f"residual kernel denominator vanished (alpha={alpha}, lam={lam})"
        )
    return (1.0 - t) ** an * (1.0 / d1 + lam**an / d2)
