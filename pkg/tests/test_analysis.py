import math

import numpy as np
import pytest

from pinch_rsma import analysis
from pinch_rsma.analysis import (alpha_sweep, capacity_region, interior_minimizer, noma_baseline, noma_order,
                                 optimize_split, rate_pair, snr_sweep)
from pinch_rsma.closed_form import outage_triple
from pinch_rsma.coverage import random_config
from pinch_rsma.errors import ConfigError
from pinch_rsma.model import Geometry, LinkGains, RadioConfig, SystemConfig, UserPlacement
from pinch_rsma.oracles import quad_outage

SMALL_ALPHA = np.linspace(0.0, 1.0, 21)
SMALL_BETA = np.linspace(0.0, 1.0, 11)


# --- capacity region ------------------------------------------------------------

@pytest.mark.parametrize("y1,y2", [(15.0, 5.0), (10.0, 10.0), (5.0, 15.0), (0.0, 0.0)])
def test_capacity_region_shape(y1, y2):
    region = capacity_region(UserPlacement(y1 / 2, y2 / 2))
    a, b = region.gains
    v = region.vertices
    assert v[0] == (0.0, 0.0)
    # both inner corners sit on the sum-rate face
    for corner in v[2:4]:
        assert corner.rate_u1 + corner.rate_u2 == pytest.approx(region.sum_rate, rel=1e-12)
    assert v[1].rate_u1 == pytest.approx(math.log2(1 + a))
    assert v[4].rate_u2 == pytest.approx(math.log2(1 + b))
    # counter-clockwise: positive shoelace area
    xs, ys = zip(*v)
    area = 0.5 * sum(xs[i] * ys[(i + 1) % 5] - xs[(i + 1) % 5] * ys[i] for i in range(5))
    assert area > 0


def test_rsma_trace_spans_the_dominant_face():
    region = capacity_region(UserPlacement(5.0, -3.0), n_alpha=51)
    trace = region.rsma_trace
    # alpha = 0 decodes user 2 first (user 1 at full rate); alpha = 1 the reverse
    assert tuple(trace[0]) == pytest.approx(tuple(region.vertices[2]), rel=1e-12)
    assert tuple(trace[-1]) == pytest.approx(tuple(region.vertices[3]), rel=1e-12)
    for p in trace:
        assert p.rate_u1 + p.rate_u2 == pytest.approx(region.sum_rate, rel=1e-10)
    assert all(p.rate_u1 >= q.rate_u1 for p, q in zip(trace, trace[1:]))


def test_silent_users_have_empty_region():
    region = capacity_region(UserPlacement(0.0, 0.0), radio=RadioConfig(tx_snr_gamma1=0.0, tx_snr_gamma2=0.0))
    assert all(p == (0.0, 0.0) for p in region.vertices)
    assert region.sum_rate == 0.0


def test_capacity_region_input_checks():
    with pytest.raises(ValueError):
        capacity_region(UserPlacement(0.0, 0.0), n_alpha=1)
    with pytest.raises(ConfigError):
        capacity_region(UserPlacement(11.0, 0.0), geometry=Geometry(room_dy_m=20.0))


def test_rate_pair_extremes():
    g = LinkGains(3.0, 5.0)
    assert rate_pair(g, 1.0) == pytest.approx((math.log2(1 + 3 / 6), math.log2(6)))
    assert rate_pair(g, 0.0) == pytest.approx((math.log2(4), math.log2(1 + 5 / 4)))


# --- optimizer ------------------------------------------------------------------

def _brute(cfg, alphas, betas):
    best = None
    for beta in betas:
        for alpha in alphas:
            t = outage_triple(cfg.with_rsma(alpha=float(alpha), beta=float(beta)))
            key = (t.p_x2a, t.p_xb, float(alpha), float(beta))
            best = key if best is None or key < best else best
    return best


@pytest.mark.parametrize("seed", range(4))
def test_optimizer_matches_brute_force(seed):
    cfg = random_config(np.random.default_rng(seed))
    res = optimize_split(cfg, SMALL_ALPHA, SMALL_BETA, threads=1)
    p2, pb, alpha, beta = _brute(cfg, SMALL_ALPHA, SMALL_BETA)
    assert (res.p_x2a, res.p_xb, res.alpha_star, res.beta_star) == (p2, pb, alpha, beta)
    assert res.evaluated == SMALL_ALPHA.size * SMALL_BETA.size


def test_optimizer_threads_do_not_change_result():
    cfg = SystemConfig().with_snr_db(88.0)
    assert optimize_split(cfg, SMALL_ALPHA, SMALL_BETA, threads=1) == \
        optimize_split(cfg, SMALL_ALPHA, SMALL_BETA, threads=3)


def test_optimizer_dominates_grid_points():
    cfg = SystemConfig().with_snr_db(85.0)
    res = optimize_split(cfg, threads=1)
    rng = np.random.default_rng(0)
    for alpha, beta in zip(rng.choice(analysis.DEFAULT_ALPHA_GRID, 50), rng.choice(analysis.DEFAULT_BETA_GRID, 50)):
        assert res.p_x2a <= outage_triple(cfg.with_rsma(alpha=alpha, beta=beta)).p_x2a
    assert res.p_x2a < outage_triple(cfg).p_x2a
    assert res.p_x2a == pytest.approx(quad_outage(cfg.with_rsma(alpha=res.alpha_star, beta=res.beta_star)).p_x2a,
                                      abs=1e-8)


def test_zero_first_user_rate_ties_break_to_small_alpha_beta():
    # with R1 = 0 both user-1 streams have zero thresholds
    cfg = SystemConfig().with_rsma(rate_r1=0.0)
    res = optimize_split(cfg, SMALL_ALPHA, SMALL_BETA, threads=1)
    assert res.p_x2a == _brute(cfg, SMALL_ALPHA, SMALL_BETA)[0]
    assert res.beta_star == 0.0


def test_hopeless_config_loses_user_two_streams():
    cfg = SystemConfig().with_snr_db(10.0)
    res = optimize_split(cfg, SMALL_ALPHA, SMALL_BETA, threads=1)
    # beta = 0 leaves x1a with a zero threshold, so only x_b and x2a fail
    assert (res.p_x1a, res.p_xb, res.p_x2a) == (0.0, 1.0, 1.0)
    assert (res.alpha_star, res.beta_star) == (0.0, 0.0)


@pytest.mark.parametrize("grid", [[], [1.5], [float("nan")]])
def test_optimizer_rejects_bad_grids(grid):
    with pytest.raises(ValueError):
        optimize_split(SystemConfig(), grid, SMALL_BETA)


# --- NOMA ------------------------------------------------------------------------

def test_noma_first_order_is_unsplit_rsma():
    cfg = SystemConfig().with_snr_db(80.0)
    t = outage_triple(cfg.with_rsma(alpha=1.0, beta=1.0))
    n = noma_order(cfg, 1)
    assert (n.p_u1, n.p_u2, n.p_system, n.order) == (t.p_x1a, t.p_xb, t.p_xb, (1, 2))
    assert t.p_x2a == t.p_xb


def test_noma_orders_are_mirror_images():
    cfg = SystemConfig().with_snr_db(84.0).with_rsma(rate_r1=0.7, rate_r2=1.3)
    swapped = SystemConfig().with_snr_db(84.0).with_rsma(rate_r1=1.3, rate_r2=0.7)
    a, b = noma_order(cfg, 2), noma_order(swapped, 1)
    assert (a.p_u1, a.p_u2) == (b.p_u2, b.p_u1)
    assert a.order == (2, 1)


def test_noma_order_against_quadrature():
    cfg = SystemConfig().with_snr_db(82.0).with_rsma(rate_r1=0.6, rate_r2=1.4)
    for first in (1, 2):
        n = noma_order(cfg, first)
        base = cfg if first == 1 else analysis._swap_users(cfg)
        q = quad_outage(base.with_rsma(alpha=1.0, beta=1.0))
        assert n.p_system == pytest.approx(q.p_xb, abs=1e-9)


def test_noma_baseline_picks_better_order():
    rng = np.random.default_rng(9)
    for _ in range(20):
        cfg = random_config(rng)
        best = noma_baseline(cfg)
        assert best.p_system == min(noma_order(cfg, 1).p_system, noma_order(cfg, 2).p_system)
    cfg = SystemConfig()
    assert noma_baseline(cfg).order == (1, 2)     # symmetric setup: tie goes to (1, 2)
    with pytest.raises(ValueError):
        noma_order(cfg, 3)


# --- sweeps ----------------------------------------------------------------------

def test_snr_sweep_fixed_split():
    cfg = SystemConfig()
    rows = snr_sweep(cfg, [80.0, 70.0, 90.0], optimize=False, threads=1)
    assert [r.value for r in rows] == [80.0, 70.0, 90.0]
    for r in rows:
        t = outage_triple(cfg.with_snr_db(r.value))
        assert (r.alpha, r.beta, r.p_x1a, r.p_xb, r.p_x2a) == (0.7, 0.5, *t[:3])
        assert r.p_noma_system == noma_baseline(cfg.with_snr_db(r.value)).p_system
    assert snr_sweep(cfg, [], threads=1) == []


def test_snr_sweep_optimized_matches_optimizer():
    cfg = SystemConfig()
    (row,) = snr_sweep(cfg, [86.0], optimize=True, alpha_grid=SMALL_ALPHA, beta_grid=SMALL_BETA, threads=1)
    res = optimize_split(cfg.with_snr_db(86.0), SMALL_ALPHA, SMALL_BETA, threads=1)
    assert (row.alpha, row.beta, row.p_x2a) == (res.alpha_star, res.beta_star, res.p_x2a)


def test_alpha_sweep_keeps_order_and_duplicates():
    cfg = SystemConfig().with_snr_db(85.0)
    rows = alpha_sweep(cfg, [0.0, 1.0, 0.5, 0.5])
    assert [r.alpha for r in rows] == [0.0, 1.0, 0.5, 0.5]
    assert rows[2] == rows[3]
    assert rows[0].p_x2a == 1.0 and rows[1].p_x2a == 1.0
    assert alpha_sweep(cfg, []) == []


def test_zero_rate_sweep_never_fails():
    cfg = SystemConfig().with_rsma(rate_r1=0.0, rate_r2=0.0)
    for r in snr_sweep(cfg, [60.0, 90.0], optimize=False, threads=1):
        assert (r.p_x1a, r.p_xb, r.p_x2a) == (0.0, 0.0, 0.0)


def test_interior_minimizer():
    mk = lambda p: analysis.SweepRow(0.0, 0.0, 0.0, 0.0, 0.0, p, "", "", "")
    assert interior_minimizer([mk(p) for p in (0.5, 0.2, 0.4)]).p_x2a == 0.2
    assert interior_minimizer([mk(p) for p in (0.1, 0.2, 0.4)]) is None
    assert interior_minimizer([mk(p) for p in (0.2, 0.2, 0.4)]) is None
    assert interior_minimizer([]) is None
