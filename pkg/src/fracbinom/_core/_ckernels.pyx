# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the numeric hot kernels.

Same contract as `_pykernels`; scalar loops instead of NumPy whole-array
passes.  Selected automatically in `fracbinom._core` when importable.
"""

from libc.math cimport exp, fabs, fma, fmod, log, pow, round, sin, M_PI

import numpy as np

from fracbinom.errors import SingularKernelError

BACKEND_NAME = "compiled"

SNAP_REL = 1e-9

cdef double _SNAP = 1e-9
cdef double _HALF_LOG_2PI = 0.9189385332046727417803297364056
cdef double _LOG_PI = 1.1447298858494001741434273513531
cdef double _DENOM_FLOOR = 1e-300
cdef double _SHIFT = 5.2421875  # Lanczos g + 1/2

# Lanczos rational part, g = 607/128 with 15 terms (Godfrey's table),
# approximation error below 1e-15 across the working range.
cdef double[15] _L
_L[0] = 0.99999999999999709182
_L[1] = 57.156235665862923517
_L[2] = -59.597960355475491248
_L[3] = 14.136097974741747174
_L[4] = -0.49191381609762019978
_L[5] = 0.33994649984811888699e-4
_L[6] = 0.46523628927048575665e-4
_L[7] = -0.98374475304879564677e-4
_L[8] = 0.15808870322491248884e-3
_L[9] = -0.21026444172410488319e-3
_L[10] = 0.21743961811521264320e-3
_L[11] = -0.16431810653676389022e-3
_L[12] = 0.84418223983852743293e-4
_L[13] = -0.26190838401581408670e-4
_L[14] = 0.36899182659531622704e-5


cdef inline bint _is_pole_c(double v) noexcept nogil:
    cdef double r = round(v)
    cdef double m = fabs(v)
    if m < 1.0:
        m = 1.0
    return fabs(v - r) < _SNAP * m and r <= 0.0


cdef inline double _sinpi_c(double x) noexcept nogil:
    cdef double m = round(x)
    cdef double s
    if fabs(m) > 9007199254740992.0:
        return 0.0
    s = sin(M_PI * (x - m))
    if fmod(fabs(m), 2.0) == 1.0:
        s = -s
    return s


cdef inline double _neumaier(double* v, int n) noexcept nogil:
    cdef double s = 0.0
    cdef double c = 0.0
    cdef double t
    cdef int i
    for i in range(n):
        t = s + v[i]
        if fabs(s) >= fabs(v[i]):
            c += (s - t) + v[i]
        else:
            c += (v[i] - t) + s
        s = t
    return s + c


cdef void _lanczos_terms_c(double x, double* out) noexcept nogil:
    # log Gamma(x) for x >= 0.5 as an unevaluated 6-term sum
    cdef double y = x - 1.0
    cdef double a = _L[0]
    cdef int i
    for i in range(1, 15):
        a += _L[i] / (y + i)
    cdef double t = y + _SHIFT
    cdef double lh = log(t)
    cdef double u = exp(lh)
    cdef double ll = (t - u) / u
    cdef double w = y + 0.5
    cdef double ph = w * lh
    cdef double pl = fma(w, lh, -ph)
    out[0] = ph
    out[1] = pl
    out[2] = w * ll
    out[3] = -t
    out[4] = _HALF_LOG_2PI
    out[5] = log(a)


cdef double _lgamma_c(double x, int* sign) noexcept nogil:
    cdef double terms[6]
    cdef double full[8]
    cdef double s
    cdef int i
    if x >= 0.5:
        _lanczos_terms_c(x, terms)
        sign[0] = 1
        return _neumaier(terms, 6)
    s = _sinpi_c(x)
    _lanczos_terms_c(1.0 - x, terms)
    full[0] = _LOG_PI
    full[1] = -log(fabs(s))
    for i in range(6):
        full[2 + i] = -terms[i]
    sign[0] = 1 if s > 0.0 else -1
    return _neumaier(full, 8)


cdef double _gen_binom_c(double w, double z, double lw, int sw) except? -1e308:
    # lw/sw: precomputed lgamma of w+1
    cdef double a = z + 1.0
    cdef double b = (w - z) + 1.0
    cdef double la, lb
    cdef int sa, sb
    if _is_pole_c(a) or _is_pole_c(b):
        return 0.0
    la = _lgamma_c(a, &sa)
    lb = _lgamma_c(b, &sb)
    return sw * sa * sb * exp((lw - la) - lb)


def snap_int(double x):
    """Nearest integer when x sits inside the snap window, else None."""
    cdef double r = round(x)
    cdef double m = fabs(x)
    if m < 1.0:
        m = 1.0
    if fabs(x - r) < _SNAP * m:
        return r
    return None


def is_gamma_pole(double x):
    """True when Gamma(x) has a pole at the snapped value of x."""
    return bool(_is_pole_c(x))


def sinpi(double x):
    """sin(pi*x) with argument reduction, exact zeros at integers."""
    return _sinpi_c(x)


def cospi(double x):
    """cos(pi*x); exact zeros at half integers via the shifted sine."""
    return _sinpi_c(x + 0.5)


def lgamma_signed(double x):
    """(log|Gamma(x)|, sign) for non-pole x; reflection below 0.5."""
    cdef int sg
    cdef double la = _lgamma_c(x, &sg)
    return la, sg


def gen_binom_ls(double w, double z):
    """Log-space generalized binomial coefficient with the zero convention.

    Gamma(w+1) / (Gamma(z+1) Gamma(w-z+1)); 0.0 when a denominator argument
    is a pole while w+1 is not, ValueError when w+1 itself is a pole.
    """
    cdef int sw
    cdef double lw
    if _is_pole_c(w + 1.0):
        raise ValueError(f"gen_binom undefined: w+1 = {w + 1.0!r} is a Gamma pole")
    lw = _lgamma_c(w + 1.0, &sw)
    return _gen_binom_c(w, z, lw, sw)


def binom_range(double w, double step, double offset, long j0, long count):
    """gen_binom(w, offset + step*j) for j = j0 .. j0+count-1 as an array."""
    cdef int sw
    cdef double lw
    if _is_pole_c(w + 1.0):
        raise ValueError(f"gen_binom undefined: w+1 = {w + 1.0!r} is a Gamma pole")
    lw = _lgamma_c(w + 1.0, &sw)
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] v = out
    cdef long i
    for i in range(count):
        v[i] = _gen_binom_c(w, offset + step * (j0 + i), lw, sw)
    return out


def kernel_lambda_arr(t, double lam, double alpha):
    """1 / (t^2a - 2 (t lam)^a cos(a pi) + lam^2a) elementwise."""
    arr = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty(arr.shape[0], dtype=np.float64)
    cdef double[::1] tv = arr
    cdef double[::1] ov = out
    cdef double c = _sinpi_c(alpha + 0.5)
    cdef double la = pow(lam, alpha)
    cdef double ta, d
    cdef Py_ssize_t i
    for i in range(tv.shape[0]):
        ta = pow(tv[i], alpha)
        d = ta * ta - 2.0 * c * (ta * la) + la * la
        if d < _DENOM_FLOOR:
            raise SingularKernelError(
                f"kernel_lambda denominator vanished (alpha={alpha}, lam={lam})"
            )
        ov[i] = 1.0 / d
    return out


def kernel_one_arr(t, double lam, double alpha):
    """1 / (1 - 2 (lam t)^a cos(a pi) + (lam t)^2a) elementwise."""
    arr = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty(arr.shape[0], dtype=np.float64)
    cdef double[::1] tv = arr
    cdef double[::1] ov = out
    cdef double c = _sinpi_c(alpha + 0.5)
    cdef double la = pow(lam, alpha)
    cdef double tla, d
    cdef Py_ssize_t i
    for i in range(tv.shape[0]):
        tla = pow(tv[i], alpha) * la
        d = 1.0 - 2.0 * c * tla + tla * tla
        if d < _DENOM_FLOOR:
            raise SingularKernelError(
                f"kernel_one denominator vanished (alpha={alpha}, lam={lam})"
            )
        ov[i] = 1.0 / d
    return out


def neo_h(t, double alpha, double an, double lam):
    """(1-t)^an * (kernel_lambda + lam^an * kernel_one), the residual core."""
    arr = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty(arr.shape[0], dtype=np.float64)
    cdef double[::1] tv = arr
    cdef double[::1] ov = out
    cdef double c = _sinpi_c(alpha + 0.5)
    cdef double la = pow(lam, alpha)
    cdef double lan = pow(lam, an)
    cdef double ta, tla, d1, d2
    cdef Py_ssize_t i
    for i in range(tv.shape[0]):
        ta = pow(tv[i], alpha)
        tla = ta * la
        d1 = ta * ta - 2.0 * c * tla + la * la
        d2 = 1.0 - 2.0 * c * tla + tla * tla
        if d1 < _DENOM_FLOOR or d2 < _DENOM_FLOOR:
            raise SingularKernelError(
                f"residual kernel denominator vanished (alpha={alpha}, lam={lam})"
            )
        ov[i] = pow(1.0 - tv[i], an) * (1.0 / d1 + lan / d2)
    return out
