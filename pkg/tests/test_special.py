import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from oracle_funcs import ellip_e_ref, ellip_f_ref, family_integral, random_family
from pinch_rsma import special
from pinch_rsma.errors import DomainError
from pinch_rsma.special import RatioCoeffs, carlson_rd, carlson_rf, elliptic_e, elliptic_f

pos = st.floats(1e-6, 1e6)


@given(pos, pos, pos)
def test_carlson_rf_matches_mpmath(x, y, z):
    assert carlson_rf(x, y, z) == pytest.approx(float(mpmath.elliprf(x, y, z)), rel=1e-13)


@given(pos, pos, pos)
def test_carlson_rd_matches_mpmath(x, y, z):
    assert carlson_rd(x, y, z) == pytest.approx(float(mpmath.elliprd(x, y, z)), rel=1e-13)


def test_carlson_special_values():
    # R_F(x, x, x) = x^(-1/2), R_D(x, x, x) = x^(-3/2)
    assert carlson_rf(4.0, 4.0, 4.0) == pytest.approx(0.5, rel=1e-15)
    assert carlson_rd(4.0, 4.0, 4.0) == pytest.approx(0.125, rel=1e-15)
    assert carlson_rf(0.0, 1.0, 1.0) == pytest.approx(math.pi / 2, rel=1e-14)


def test_carlson_rejects_bad_arguments():
    with pytest.raises(DomainError):
        carlson_rf(-1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        carlson_rf(0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        carlson_rd(1.0, 1.0, 0.0)


@given(st.floats(0, math.pi / 2), st.floats(-50, 0.999))
def test_elliptic_matches_mpmath(phi, m):
    assert elliptic_f(phi, m) == pytest.approx(ellip_f_ref(phi, m), rel=1e-13, abs=1e-15)
    assert elliptic_e(phi, m) == pytest.approx(ellip_e_ref(phi, m), rel=1e-13, abs=1e-15)


@given(st.floats(1.0, 1e4), st.floats(0, 1))
def test_elliptic_beyond_unit_parameter(m, frac):
    # m > 1 is fine while m sin^2 phi <= 1
    phi = frac * math.asin(1 / math.sqrt(m))
    assume(1 - m * math.sin(phi) ** 2 > 1e-12)
    assert elliptic_f(phi, m) == pytest.approx(ellip_f_ref(phi, m), rel=1e-11, abs=1e-15)
    assert elliptic_e(phi, m) == pytest.approx(ellip_e_ref(phi, m), rel=1e-12, abs=1e-15)


def test_elliptic_closed_cases():
    assert elliptic_e(math.pi / 2, 0.0) == pytest.approx(math.pi / 2)
    assert elliptic_e(0.7, 1.0) == pytest.approx(math.sin(0.7))
    assert elliptic_f(0.7, 1.0) == pytest.approx(math.atanh(math.sin(0.7)))
    assert elliptic_f(0.3, 0.0) == pytest.approx(0.3)
    with pytest.raises(DomainError):
        elliptic_f(math.pi / 2, 1.0)
    with pytest.raises(DomainError):
        elliptic_e(1.2, 4.0)
    with pytest.raises(DomainError):
        elliptic_e(-0.1, 0.5)


def test_ratio_coeffs_validation():
    with pytest.raises(DomainError):
        RatioCoeffs(1.0, 0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        RatioCoeffs(1.0, 1.0, 1.0, -1.0)
    with pytest.raises(ValueError):
        RatioCoeffs(1.0, 1.0, 1.0, 1.0, branch="sideways")


@pytest.mark.parametrize("branch", ["increasing", "decreasing"])
def test_ratio_integral_matches_quadrature(branch):
    rng = np.random.default_rng(11 if branch == "increasing" else 12)
    for _ in range(150):
        c, a, b = random_family(rng, branch)
        ref = family_integral(c, a, b)
        assert special.ratio_integral(b, a, c) == pytest.approx(ref, rel=1e-10, abs=1e-12)
        assert special.ratio_integral(a, b, c) == pytest.approx(-ref, rel=1e-10, abs=1e-12)


def test_ratio_integral_zero_width():
    c = RatioCoeffs(1.0, 2.0, 3.0, 4.0)
    assert special.ratio_integral(0.3, 0.3, c) == 0.0


def test_increasing_integrand_domain():
    c = RatioCoeffs(p=-4.0, q=1.0, r=1.0, s=1.0)    # numerator root at t = 2
    with pytest.raises(DomainError):
        special.ratio_integral(3.0, 1.0, c)


def test_decreasing_integrand_domain():
    c = RatioCoeffs(p=1.0, q=1.0, r=4.0, s=1.0, branch="decreasing")   # pole at t = 2
    with pytest.raises(DomainError):
        special.ratio_integral(2.5, 0.0, c)


def test_phi_combinations():
    c1 = RatioCoeffs(p=2.0, q=1.0, r=9.0, s=1.0, branch="decreasing")
    c2 = RatioCoeffs(p=2.0, q=3.0, r=1.0, s=1.5)
    dy = 4.0
    s = 4.0 / dy ** 2
    assert special.phi2(2.0, 0.5, c2, dy) == pytest.approx(s * family_integral(c2, 0.5, 2.0), rel=1e-12)
    assert special.phi4(2.0, 0.5, c1, dy) == pytest.approx(s * family_integral(c1, 0.5, 2.0), rel=1e-12)
    assert special.phi1(2.0, 0.5, c1, c2, dy) == pytest.approx(
        special.phi2(2.0, 0.5, c2, dy) - special.phi4(2.0, 0.5, c1, dy), rel=1e-14)
    assert special.phi3(2.0, 0.5, 1.7, c1, dy) == pytest.approx(
        s * 1.7 * 1.5 - special.phi4(2.0, 0.5, c1, dy), rel=1e-14)


def test_printed_helpers():
    c = RatioCoeffs(p=4.0, q=1.0, r=9.0, s=1.0)
    assert special.f1(2.0, c) == pytest.approx(math.pi / 4)
    assert special.f2(2.0, c) == pytest.approx(2 * math.sqrt(13 / 8))
    assert special.f3(1.5, c) == pytest.approx(math.acos(0.5))
    with pytest.raises(DomainError):
        special.f1(1.0, RatioCoeffs(p=-1.0, q=1.0, r=1.0, s=1.0))
    with pytest.raises(DomainError):
        special.f3(4.0, c)


def test_printed_increasing_form_differs_from_integral():
    # the printed combination flips signs relative to the antiderivative, so it
    # is not the definite integral it stands for
    c2 = RatioCoeffs(p=2.0, q=3.0, r=1.0, s=1.5)
    good = special.phi2(2.0, 0.5, c2, 4.0)
    printed = special.phi2_literal(2.0, 0.5, c2, 4.0)
    assert abs(good - printed) > 1e-3


def test_carlson_agrees_with_scipy():
    from scipy.special import elliprd, elliprf
    rng = np.random.default_rng(12)
    for x, y, z in 10.0 ** rng.uniform(-8, 8, (300, 3)):
        assert special.carlson_rf(x, y, z) == pytest.approx(elliprf(x, y, z), rel=1e-13)
        assert special.carlson_rd(x, y, z) == pytest.approx(elliprd(x, y, z), rel=1e-13)
