"""Backend-layer tests: primitives and pure/compiled parity."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from fracbinom import _core
from fracbinom._core import _pykernels
from fracbinom.errors import SingularKernelError


BACKENDS = ["pure"] + (["compiled"] if _core.HAVE_COMPILED else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    previous = _core.current_backend()
    _core.use_backend(request.param)
    yield request.param
    _core.use_backend(previous)


def test_snap_int_window():
    assert _core.snap_int(3.0) == 3.0
    assert _core.snap_int(3.0 + 1e-12) == 3.0
    assert _core.snap_int(-7.0 - 1e-10) == -7.0
    assert _core.snap_int(0.5) is None
    assert _core.snap_int(3.0 + 1e-6) is None
    # the window is relative for large magnitudes
    assert _core.snap_int(1e6 + 5e-4) == 1e6
    assert _core.snap_int(1e6 + 2e-3) is None


def test_is_gamma_pole():
    for x in (0.0, -1.0, -73.0, -3.0 + 1e-12):
        assert _core.is_gamma_pole(x)
    for x in (0.5, 1.0, 171.0, -0.5, -2.5):
        assert not _core.is_gamma_pole(x)


def test_sinpi_cospi_exact_zeros(backend):
    for k in range(-6, 7):
        assert _core.sinpi(float(k)) == 0.0
        assert _core.cospi(k + 0.5) == 0.0


def test_sinpi_signs_and_values(backend):
    assert _core.sinpi(0.5) == 1.0
    assert _core.sinpi(1.5) == -1.0
    assert _core.sinpi(-0.5) == -1.0
    assert _core.cospi(0.0) == 1.0
    assert _core.cospi(1.0) == -1.0
    # math.sin(pi*x) rounds pi*x first, so allow a few ulps of its drift
    for x in (0.1, 0.37, 2.6, -4.2, 13.9):
        assert _core.sinpi(x) == pytest.approx(math.sin(math.pi * x), abs=3e-14)
        assert _core.cospi(x) == pytest.approx(math.cos(math.pi * x), abs=3e-14)


def test_lgamma_signed_positive_matches_math(backend):
    for x in (0.5, 1.0, 1.5, 2.0, 4.2, 11.0, 56.7, 170.0):
        logabs, sign = _core.lgamma_signed(x)
        assert sign == 1
        ref = math.lgamma(x)
        assert abs(logabs - ref) <= 1e-13 * max(1.0, abs(ref))


def test_lgamma_signed_negative_sign_pattern(backend):
    # Gamma alternates sign between consecutive negative integers
    for x, expected in ((-0.5, -1), (-1.5, 1), (-2.5, -1), (-9.3, 1)):
        logabs, sign = _core.lgamma_signed(x)
        assert sign == expected
        ref = math.gamma(x)
        assert sign == int(math.copysign(1.0, ref))
        assert abs(logabs - math.log(abs(ref))) <= 1e-12 * max(1.0, abs(logabs))


def test_gen_binom_ls_small_integers(backend):
    # the raw log-space kernel is only accurate to rounding; exactness on
    # integers is the job of the comb fast path one layer up
    for n in range(0, 12):
        for k in range(0, n + 1):
            assert _core.gen_binom_ls(float(n), float(k)) == pytest.approx(
                float(math.comb(n, k)), rel=1e-13
            )


def test_gen_binom_ls_known_value(backend):
    assert _core.gen_binom_ls(1.0, 0.5) == pytest.approx(4.0 / math.pi, rel=1e-14)


def test_gen_binom_ls_zero_convention_and_pole(backend):
    assert _core.gen_binom_ls(3.0, -2.0) == 0.0
    assert _core.gen_binom_ls(3.0, 5.0) == 0.0
    with pytest.raises(ValueError):
        _core.gen_binom_ls(-1.0, 0.5)


def test_binom_range_matches_scalar(backend):
    cases = [
        (2.5, 0.5, 0.0, 0, 12),
        (6.0, 1.0, 0.0, -3, 14),  # hits both denominator pole families
        (0.75, 0.25, 0.0, 0, 9),
        (4.2, 0.7, 0.1, -5, 16),
    ]
    for w, step, offset, j0, count in cases:
        arr = _core.binom_range(w, step, offset, j0, count)
        assert arr.shape == (count,)
        for i in range(count):
            z = offset + step * (j0 + i)
            ref = _core.gen_binom_ls(w, z)
            assert arr[i] == pytest.approx(ref, rel=1e-13, abs=1e-300)


def test_binom_range_pole_raises(backend):
    with pytest.raises(ValueError):
        _core.binom_range(-2.0, 0.5, 0.0, 0, 4)


def test_kernel_arrays_match_formula(backend):
    t = np.array([0.1, 0.35, 0.8, 1.0])
    alpha, lam = 0.7, 0.6
    c = math.cos(math.pi * alpha)
    ta, la = t**alpha, lam**alpha
    kl = _core.kernel_lambda_arr(t, lam, alpha)
    k1 = _core.kernel_one_arr(t, lam, alpha)
    assert np.allclose(kl, 1.0 / (ta**2 - 2 * c * ta * la + la**2), rtol=1e-13)
    assert np.allclose(k1, 1.0 / (1.0 - 2 * c * ta * la + (ta * la) ** 2), rtol=1e-13)


def test_kernel_singularity_raises(backend):
    # cos(alpha pi) = 1 and t = lam collapses the lambda-kernel denominator
    with pytest.raises(SingularKernelError):
        _core.kernel_lambda_arr(np.array([0.5]), 0.5, 2.0)
    with pytest.raises(SingularKernelError):
        _core.kernel_one_arr(np.array([1.0]), 1.0, 2.0)


def test_neo_h_is_weighted_kernel_sum(backend):
    t = np.array([0.05, 0.3, 0.62, 0.97])
    alpha, n, lam = 0.6, 3, 0.8
    an = alpha * n
    expect = (1 - t) ** an * (
        _core.kernel_lambda_arr(t, lam, alpha) + lam**an * _core.kernel_one_arr(t, lam, alpha)
    )
    assert np.allclose(_core.neo_h(t, alpha, an, lam), expect, rtol=1e-13)


@pytest.mark.skipif(not _core.HAVE_COMPILED, reason="compiled backend unavailable")
def test_backend_parity_scalars():
    from fracbinom._core import _ckernels

    xs = [x / 7.0 for x in range(-800, 1100)] + [0.5 + k for k in range(160)]
    for x in xs:
        if _pykernels.is_gamma_pole(x):
            continue
        lp, sp = _pykernels.lgamma_signed(x)
        lc, sc = _ckernels.lgamma_signed(x)
        assert sp == sc, x
        assert abs(lp - lc) <= 1e-13 * max(1.0, abs(lp)), x
        assert abs(_pykernels.sinpi(x) - _ckernels.sinpi(x)) <= 1e-15


@pytest.mark.skipif(not _core.HAVE_COMPILED, reason="compiled backend unavailable")
def test_backend_parity_vectors():
    from fracbinom._core import _ckernels

    w, step, offset = 5.3, 0.53, 0.0
    a = _pykernels.binom_range(w, step, offset, -4, 24)
    b = _ckernels.binom_range(w, step, offset, -4, 24)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-300)

    t = np.linspace(1e-4, 1.0, 57)
    for fn in ("kernel_lambda_arr", "kernel_one_arr"):
        pa = getattr(_pykernels, fn)(t, 0.85, 1.3)
        ca = getattr(_ckernels, fn)(t, 0.85, 1.3)
        np.testing.assert_allclose(pa, ca, rtol=1e-13)
    np.testing.assert_allclose(
        _pykernels.neo_h(t, 1.3, 2.6, 0.85),
        _ckernels.neo_h(t, 1.3, 2.6, 0.85),
        rtol=1e-13,
    )


def test_use_backend_roundtrip():
    previous = _core.current_backend()
    try:
        _core.use_backend("pure")
        assert _core.current_backend() == "pure"
        with pytest.raises(ValueError):
            _core.use_backend("nonsense")
    finally:
        _core.use_backend(previous)


def test_pure_env_var_forces_fallback():
    env = dict(os.environ, FRACBINOM_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import fracbinom; print(fracbinom.current_backend())"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "pure"
