import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pinch_rsma.errors import ConfigError
from pinch_rsma.model import (Geometry, LinkGains, RadioConfig, RsmaConfig, SystemConfig, UserPlacement,
                              derive_physical, link_gains, sinr_x1a, sinr_x2a, sinr_xb, thresholds)


def test_physical_constants_at_28ghz():
    lam, lam_g, eta = derive_physical(RadioConfig())
    assert lam == pytest.approx(299_792_458.0 / 28e9, rel=1e-15)
    assert lam_g == pytest.approx(lam / 1.4, rel=1e-15)
    assert eta == pytest.approx(lam ** 2 / (16 * math.pi ** 2), rel=1e-15)
    assert eta == pytest.approx(7.2594e-7, rel=1e-4)


def test_thresholds_follow_rate_split():
    th = thresholds(RsmaConfig(beta=0.25, rate_r1=2.0, rate_r2=1.5))
    assert th.theta11 == pytest.approx(2 ** 0.5 - 1)
    assert th.theta12 == pytest.approx(2 ** 1.5 - 1)
    assert th.theta2 == pytest.approx(2 ** 1.5 - 1)
    assert thresholds(RsmaConfig(rate_r1=0, rate_r2=0)) == (0.0, 0.0, 0.0)


@pytest.mark.parametrize("kwargs", [
    dict(carrier_frequency_hz=0.0), dict(refractive_index_ne=0.9), dict(tx_snr_gamma1=-1.0),
    dict(tx_snr_gamma2=math.nan), dict(carrier_frequency_hz=math.inf)])
def test_radio_rejects_bad_values(kwargs):
    with pytest.raises(ConfigError):
        RadioConfig(**kwargs)


@pytest.mark.parametrize("kwargs", [dict(height_d_m=0.0), dict(room_dy_m=-1.0), dict(room_dx_m=math.nan)])
def test_geometry_rejects_bad_values(kwargs):
    with pytest.raises(ConfigError):
        Geometry(**kwargs)


@pytest.mark.parametrize("kwargs", [dict(alpha=1.01), dict(beta=-0.1), dict(rate_r1=-1.0), dict(alpha=math.nan)])
def test_rsma_rejects_bad_values(kwargs):
    with pytest.raises(ConfigError):
        RsmaConfig(**kwargs)


def test_placement_bounds():
    UserPlacement(10.0, -10.0).check(Geometry())
    with pytest.raises(ConfigError):
        UserPlacement(10.5, 0.0).check(Geometry())


def test_link_gains_at_the_centre():
    radio = RadioConfig.from_db(80.0, 70.0)
    a, b = link_gains(UserPlacement(0.0, 4.0), Geometry(), radio)
    eta = derive_physical(radio).eta_m2
    assert a == pytest.approx(eta * 1e8 / 9.0)
    assert b == pytest.approx(eta * 1e7 / 25.0)


def test_sinr_chain_extremes():
    g = LinkGains(10.0, 3.0)
    assert sinr_x1a(g, 1.0) == pytest.approx(10.0 / 4.0)
    assert sinr_xb(g, 1.0) == pytest.approx(3.0)
    assert sinr_x2a(g, 1.0) == 0.0
    assert sinr_x1a(g, 0.0) == 0.0
    assert sinr_xb(g, 0.0) == pytest.approx(3.0 / 11.0)
    assert sinr_x2a(g, 0.0) == pytest.approx(10.0)


@given(st.floats(0, 1e6), st.floats(0, 1e6), st.floats(0, 1))
def test_sinr_product_telescopes(a, b, alpha):
    g = LinkGains(a, b)
    prod = (1 + sinr_x1a(g, alpha)) * (1 + sinr_xb(g, alpha)) * (1 + sinr_x2a(g, alpha))
    assert prod == pytest.approx(1 + a + b, rel=1e-12)


def test_sinr_accepts_arrays():
    g = LinkGains(np.array([1.0, 2.0]), np.array([3.0, 4.0]))
    assert sinr_x1a(g, 0.5).shape == (2,)


def test_system_config_helpers():
    cfg = SystemConfig().with_snr_db(90.0).with_rsma(alpha=0.2)
    assert cfg.radio.tx_snr_gamma1 == cfg.radio.tx_snr_gamma2 == pytest.approx(1e9)
    assert cfg.rsma.alpha == 0.2 and cfg.rsma.beta == 0.5
    assert cfg.thresholds == thresholds(cfg.rsma)
