import math

import numpy as np
import pytest

from pinch_rsma import oracles
from pinch_rsma.closed_form import outage_triple
from pinch_rsma.coverage import random_config
from pinch_rsma.errors import ConfigError, ToleranceError
from pinch_rsma.model import LinkGains, SystemConfig, sinr_x1a, sinr_x2a, sinr_xb
from pinch_rsma.oracles import McSettings, OutageEstimate, mc_outage, quad_outage


def _grid_outage(cfg: SystemConfig, n: int = 1500) -> tuple:
    """Midpoint rule on an n x n grid over the half-square (the setup is symmetric in y)."""
    half = cfg.geometry.half_width
    y = (np.arange(n) + 0.5) * half / n
    y1, y2 = np.meshgrid(y, y, indexing="ij")
    d2 = cfg.geometry.height_d_m ** 2
    g = LinkGains(cfg.eta * cfg.radio.tx_snr_gamma1 / (y1 ** 2 + d2),
                  cfg.eta * cfg.radio.tx_snr_gamma2 / (y2 ** 2 + d2))
    th11, th12, th2 = cfg.thresholds
    al = cfg.rsma.alpha
    ok1 = sinr_x1a(g, al) >= th11
    okb = ok1 & (sinr_xb(g, al) >= th2)
    ok2 = okb & (sinr_x2a(g, al) >= th12)
    return tuple(1.0 - ok.mean() for ok in (ok1, okb, ok2))


# --- Monte Carlo -----------------------------------------------------------------

def test_mc_zero_rates_never_fail():
    cfg = SystemConfig().with_rsma(rate_r1=0.0, rate_r2=0.0)
    for est in mc_outage(cfg, McSettings(10_000, 3)):
        assert est.estimate == 0.0 and est.std_error == 0.0


def test_mc_silent_transmitters_always_fail():
    cfg = SystemConfig().with_snr_db(-math.inf)
    assert cfg.radio.tx_snr_gamma1 == 0.0
    assert [e.estimate for e in mc_outage(cfg, McSettings(5_000, 1))] == [1.0, 1.0, 1.0]


def test_mc_nesting_and_counts():
    est = mc_outage(SystemConfig().with_snr_db(80.0), McSettings(50_000, 11))
    p = [e.estimate for e in est]
    assert p[0] <= p[1] <= p[2]
    for e in est:
        assert e.sample_count == 50_000
        assert e.std_error == pytest.approx(math.sqrt(e.estimate * (1 - e.estimate) / 50_000))


@pytest.mark.parametrize("n", [1, oracles.MC_BLOCK - 1, oracles.MC_BLOCK, 3 * oracles.MC_BLOCK + 17])
def test_mc_independent_of_thread_count(n):
    cfg = SystemConfig().with_snr_db(82.0)
    ref = mc_outage(cfg, McSettings(n, 42), threads=1)
    for threads in (2, 4, 16):
        assert mc_outage(cfg, McSettings(n, 42), threads=threads) == ref


def test_mc_seed_changes_stream():
    cfg = SystemConfig().with_snr_db(82.0)
    a = mc_outage(cfg, McSettings(100_000, 1))
    b = mc_outage(cfg, McSettings(100_000, 2))
    assert a != b


def test_estimate_from_count():
    e = OutageEstimate.from_count(25, 100)
    assert e == (0.25, math.sqrt(0.25 * 0.75 / 100), 100)


@pytest.mark.parametrize("kw", [dict(sample_count=0), dict(sample_count=2.5), dict(seed=-1), dict(seed=2 ** 64)])
def test_mc_settings_validation(kw):
    with pytest.raises(ConfigError):
        McSettings(**kw)


def test_thread_count(monkeypatch):
    monkeypatch.setenv(oracles.THREADS_ENV, "3")
    assert oracles.thread_count() == 3
    assert oracles.thread_count(5) == 5
    monkeypatch.setenv(oracles.THREADS_ENV, "0")
    assert oracles.thread_count() >= 1
    monkeypatch.setenv(oracles.THREADS_ENV, "many")
    with pytest.raises(ConfigError):
        oracles.thread_count()
    with pytest.raises(ConfigError):
        oracles.thread_count(-1)


# --- quadrature --------------------------------------------------------------

@pytest.mark.parametrize("snr", [70.0, 80.0, 85.0, 90.0])
def test_quad_against_brute_force_grid(snr):
    cfg = SystemConfig().with_snr_db(snr)
    q = quad_outage(cfg)
    assert q[:3] == pytest.approx(_grid_outage(cfg), abs=2e-3)


def test_quad_converges_with_tolerance():
    rng = np.random.default_rng(5)
    for _ in range(20):
        cfg = random_config(rng)
        loose, tight = quad_outage(cfg, 1e-6), quad_outage(cfg, 1e-11)
        assert loose[:3] == pytest.approx(tight[:3], abs=1e-6)
        assert tight.abs_error <= 1e-11


def test_quad_trivial_cases():
    assert quad_outage(SystemConfig().with_rsma(rate_r1=0.0, rate_r2=0.0))[:3] == (0.0, 0.0, 0.0)
    assert quad_outage(SystemConfig().with_snr_db(-math.inf))[:3] == (1.0, 1.0, 1.0)


@pytest.mark.parametrize("tol", [0.0, 1e-13, 1e-3, 1.0])
def test_quad_rejects_bad_tolerance(tol):
    with pytest.raises(ConfigError):
        quad_outage(SystemConfig(), tol)


def test_quad_raises_when_error_estimate_too_large(monkeypatch):
    monkeypatch.setattr(oracles, "quad", lambda f, lo, hi, **kw: (0.0, 1.0))
    with pytest.raises(ToleranceError):
        quad_outage(SystemConfig())


def test_mc_agrees_with_quad():
    """Each closed-form/quadrature value within 4 sigma (null-hypothesis variance) of MC."""
    rng = np.random.default_rng(2024)
    n = 200_000
    for i in range(100):
        cfg = random_config(rng)
        q = quad_outage(cfg)
        mc = mc_outage(cfg, McSettings(n, i))
        for p, e in zip(q[:3], mc):
            assert abs(p - e.estimate) <= 4 * math.sqrt(p * (1 - p) / n) + 1e-12, (i, cfg)
        assert outage_triple(cfg)[:3] == pytest.approx(q[:3], abs=1e-8)
