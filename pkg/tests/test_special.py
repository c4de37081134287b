"""Special-function layer: log_gamma, gen_binom, principal_pow, roots_k_alpha.

The log-gamma oracle is mpmath at 30 significant digits; gen_binom exactness
is anchored on math.comb.
"""

import cmath
import math

import pytest
from hypothesis import assume, given, settings, strategies as st
from mpmath import mp

from fracbinom import (
    LogGammaValue,
    gen_binom,
    log_gamma,
    principal_pow,
    roots_k_alpha,
)

mp.dps = 30


def _oracle_log_abs_gamma(x: float) -> float:
    # real part of the analytically continued log-Gamma is log|Gamma|
    return float(mp.loggamma(mp.mpc(x, 0.0)).real)


def test_log_gamma_positive_axis_against_mpmath():
    xs = [0.5 + 0.37 * k for k in range(0, 459)]  # up to ~170
    for x in xs:
        lg = log_gamma(x)
        assert not lg.is_pole
        assert lg.sign == 1
        ref = _oracle_log_abs_gamma(x)
        assert abs(lg.log_abs - ref) <= 1e-13 * max(1.0, abs(ref)), x


def test_log_gamma_negative_axis_against_mpmath():
    # stress both the generic reflected range and near-pole neighbourhoods
    xs = [-0.003 - 0.37 * k for k in range(0, 459)]
    xs += [-k + 0.01 for k in range(1, 160)]
    xs += [-k - 0.01 for k in range(1, 160)]
    for x in xs:
        lg = log_gamma(x)
        assert not lg.is_pole
        ref = _oracle_log_abs_gamma(x)
        assert abs(lg.log_abs - ref) <= 1e-13 * max(1.0, abs(ref)), x
        # Gamma is negative on (-1, 0), positive on (-2, -1), alternating
        k = math.floor(-x)
        assert lg.sign == (-1 if k % 2 == 0 else 1), x


def test_log_gamma_poles():
    for x in (0.0, -1.0, -42.0, -3.0 + 1e-12, -3.0 - 1e-12):
        lg = log_gamma(x)
        assert lg.is_pole
        assert math.isinf(lg.log_abs)
    assert isinstance(log_gamma(1.5), LogGammaValue)
    with pytest.raises(ValueError):
        log_gamma(math.nan)
    with pytest.raises(ValueError):
        log_gamma(math.inf)


def test_gen_binom_matches_comb_exactly():
    for n in range(0, 40):
        for k in range(0, n + 1):
            assert gen_binom(float(n), float(k)) == float(math.comb(n, k))
    # the exact path covers large integers while the product is representable
    assert gen_binom(1020.0, 510.0) == float(math.comb(1020, 510))
    assert gen_binom(400.0, 137.0) == float(math.comb(400, 137))


def test_gen_binom_snapped_integers_take_exact_path():
    assert gen_binom(10.0 + 1e-12, 4.0 - 1e-12) == float(math.comb(10, 4))


def test_gen_binom_known_fractional_values():
    assert gen_binom(1.0, 0.5) == pytest.approx(4.0 / math.pi, rel=1e-14)
    # binom(1/2, 1/4) = Gamma(3/2) / Gamma(5/4)^2
    ref = float(mp.gamma("1.5") / mp.gamma("1.25") ** 2)
    assert gen_binom(0.5, 0.25) == pytest.approx(ref, rel=1e-13)
    ref = float(mp.binomial("2.5", "-1.3"))
    assert gen_binom(2.5, -1.3) == pytest.approx(ref, rel=1e-13)


def test_gen_binom_zero_convention():
    # denominator pole, numerator regular: the coefficient vanishes
    assert gen_binom(3.0, -1.0) == 0.0
    assert gen_binom(3.0, 4.0) == 0.0
    assert gen_binom(2.5, -2.0) == 0.0
    assert gen_binom(2.5, 2.5 + 3.0) == 0.0


def test_gen_binom_numerator_pole_raises():
    with pytest.raises(ValueError):
        gen_binom(-1.0, 0.5)
    with pytest.raises(ValueError):
        gen_binom(-3.0 + 1e-12, 1.0)


def test_gen_binom_overflow_is_honest():
    big = gen_binom(1100.0, 550.0)  # beyond float range, outside comb path
    assert math.isinf(big) and big > 0


def _off_snap_lattice(x):
    # the 1e-9 relative snap window is a deliberate discontinuity; smoothness
    # properties are only claimed two windows clear of the integer lattice
    return abs(x - round(x)) >= 2e-9 * max(1.0, abs(x))


def test_snap_window_is_per_argument():
    # windows scale with the argument, so mirrored near-integer points can
    # take different routes: 10 - 5e-9 snaps (window 1e-8 at 10), 5e-9 does
    # not (window 1e-9 at 0)
    assert gen_binom(10.0, 10.0 - 5e-9) == 1.0
    smooth = gen_binom(10.0, 5e-9)
    assert smooth != 1.0
    assert abs(smooth - 1.0) < 1e-7


@settings(max_examples=300, deadline=None)
@given(
    w=st.floats(min_value=0.05, max_value=25.0),
    z=st.floats(min_value=-8.0, max_value=33.0),
)
def test_gen_binom_symmetry(w, z):
    assume(_off_snap_lattice(z) and _off_snap_lattice(w - z))
    a = gen_binom(w, z)
    b = gen_binom(w, w - z)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


@settings(max_examples=300, deadline=None)
@given(
    w=st.floats(min_value=1.3, max_value=25.0),
    frac=st.floats(min_value=0.05, max_value=0.95),
)
def test_gen_binom_pascal_recurrence(w, frac):
    # binom(w, z) = binom(w-1, z) + binom(w-1, z-1) away from poles
    z = frac * w
    assume(_off_snap_lattice(z) and _off_snap_lattice(z - 1.0))
    total = gen_binom(w, z)
    parts = gen_binom(w - 1.0, z) + gen_binom(w - 1.0, z - 1.0)
    assert abs(total - parts) <= 1e-11 * max(1.0, abs(total))


def test_principal_pow_branch():
    assert principal_pow(-1.0 + 0j, 0.5) == pytest.approx(1j, abs=1e-15)
    # arg is taken in (-pi, pi]: the lower edge maps onto the upper one
    assert principal_pow(complex(-1.0, -0.0), 0.5) == pytest.approx(1j, abs=1e-15)
    assert principal_pow(-8.0 + 0j, 1.0 / 3.0) == pytest.approx(
        1.0 + math.sqrt(3.0) * 1j, rel=1e-14
    )
    assert principal_pow(2.0 + 0j, 3.0) == pytest.approx(8.0 + 0j, rel=1e-15)


def test_principal_pow_zero_and_modulus():
    assert principal_pow(0j, 2.5) == 0j
    with pytest.raises(ValueError):
        principal_pow(0j, 0.0)
    with pytest.raises(ValueError):
        principal_pow(0j, -1.0)
    for z in (0.3 + 0.4j, -1.2 + 0.9j, 2.0 - 3.0j):
        for beta in (0.5, 1.7, -0.8):
            assert abs(principal_pow(z, beta)) == pytest.approx(
                abs(z) ** beta, rel=1e-13
            )


def test_roots_cardinality():
    expected = {0.5: 1, 1.0: 1, 1.9: 1, 2.0: 2, 2.5: 3, 3.0: 3, 3.5: 3, 4.0: 4, 6.0: 6}
    for alpha, count in expected.items():
        ks = roots_k_alpha(alpha)
        assert len(ks) == count, alpha
        assert len(ks.roots) == count


def test_roots_satisfy_principal_power_identity():
    for alpha in (0.7, 2.0, 2.5, 3.0, 3.5, 4.0, 5.5, 6.0):
        ks = roots_k_alpha(alpha)
        assert complex(1.0, 0.0) in ks.roots
        seen = set()
        for w in ks.roots:
            assert abs(abs(w) - 1.0) <= 1e-15
            assert abs(principal_pow(w, alpha) - 1.0) <= 1e-12, (alpha, w)
            key = round(cmath.phase(w), 9)
            assert key not in seen  # roots are pairwise distinct
            seen.add(key)


def test_roots_alpha_two_contains_exact_minus_one():
    ks = roots_k_alpha(2.0)
    assert complex(-1.0, 0.0) in ks.roots


def test_roots_k_two_point_five_angles():
    # K_2.5 holds three roots at angles 0 and +-4 pi / 5
    ks = roots_k_alpha(2.5)
    phases = sorted(cmath.phase(w) for w in ks.roots)
    ref = [-4.0 * math.pi / 5.0, 0.0, 4.0 * math.pi / 5.0]
    for got, want in zip(phases, ref):
        assert got == pytest.approx(want, abs=1e-15)


def test_roots_invalid_alpha():
    with pytest.raises(ValueError):
        roots_k_alpha(0.0)
    with pytest.raises(ValueError):
        roots_k_alpha(-1.5)
