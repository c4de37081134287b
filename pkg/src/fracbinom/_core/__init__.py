"""Numeric kernel backend: compiled extension with a NumPy fallback.

The compiled module is used when it imported cleanly and FRACBINOM_PURE is
not set.  `use_backend` rebinds the active implementation at runtime; it
exists for the benchmark and the backend-parity tests, not for library code.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

HAVE_COMPILED = _ckernels is not None

if os.environ.get("FRACBINOM_PURE") or _ckernels is None:
    _impl = _pykernels
else:
    _impl = _ckernels

SNAP_REL = _pykernels.SNAP_REL


def current_backend() -> str:
    return _impl.BACKEND_NAME


def use_backend(name: str):
    """Switch the active kernel set ('pure' or 'compiled')."""
    global _impl
    if name == "pure":
        _impl = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        _impl = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def snap_int(x):
    return _impl.snap_int(x)


def is_gamma_pole(x):
    return _impl.is_gamma_pole(x)


def sinpi(x):
    return _impl.sinpi(x)


def cospi(x):
    return _impl.cospi(x)


def lgamma_signed(x):
    return _impl.lgamma_signed(x)


def gen_binom_ls(w, z):
    return _impl.gen_binom_ls(w, z)


def binom_range(w, step, offset, j0, count):
    return _impl.binom_range(w, step, offset, j0, count)


def kernel_lambda_arr(t, lam, alpha):
    return _impl.kernel_lambda_arr(t, lam, alpha)


def kernel_one_arr(t, lam, alpha):
    return _impl.kernel_one_arr(t, lam, alpha)


def neo_h(t, alpha, an, lam):
    return _impl.neo_h(t, alpha, an, lam)
