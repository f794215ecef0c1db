import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import brentq

from pinch_rsma import closed_form, tables
from pinch_rsma.closed_form import constants, outage_triple
from pinch_rsma.coverage import broad_config, random_config
from pinch_rsma.errors import InconsistencyError
from pinch_rsma.model import LinkGains, SystemConfig, sinr_x1a, sinr_x2a, sinr_xb
from pinch_rsma.oracles import quad_outage


def _gains(cfg, y1, y2):
    d2 = cfg.geometry.height_d_m ** 2
    return LinkGains(cfg.eta * cfg.radio.tx_snr_gamma1 / (y1 * y1 + d2),
                     cfg.eta * cfg.radio.tx_snr_gamma2 / (y2 * y2 + d2))


def test_defaults_against_quadrature():
    t = outage_triple(SystemConfig())
    q = quad_outage(SystemConfig())
    assert t[:3] == pytest.approx(q[:3], abs=1e-10)
    assert (t.branch_x1a, t.branch_xb, t.branch_x2a) == ("x1a.r08", "xb.c6neg.r29", "x2a.c6neg.b.r47")


def test_boundary_constants_sit_on_sinr_thresholds():
    cfg = SystemConfig().with_snr_db(90.0).with_rsma(alpha=0.8, beta=0.6)
    k = constants(cfg)
    th11, th12, th2 = cfg.thresholds
    half = cfg.geometry.half_width
    al = cfg.rsma.alpha
    assert 0 < k.c5 < k.c4 < k.c3
    # C5: x1a is exactly at threshold with user 2 right under its antenna
    assert sinr_x1a(_gains(cfg, math.sqrt(k.c5), 0.0), al) == pytest.approx(th11, rel=1e-10)
    # C4: same, with user 2 at the wall
    assert sinr_x1a(_gains(cfg, math.sqrt(k.c4), half), al) == pytest.approx(th11, rel=1e-10)
    # C3: x1a at threshold with no interference from user 2
    a3 = cfg.eta * cfg.radio.tx_snr_gamma1 / (k.c3 + cfg.geometry.height_d_m ** 2)
    assert al * a3 / ((1 - al) * a3 + 1) == pytest.approx(th11, rel=1e-10)
    # C8: x2a at threshold
    assert sinr_x2a(_gains(cfg, math.sqrt(k.c8), 0.0), al) == pytest.approx(th12, rel=1e-10)


def test_xb_boundary_constants():
    # C6 > 0: user 2 must be off-centre even when user 1 sits at the room edge of C6
    cfg = SystemConfig().with_snr_db(95.0).with_rsma(alpha=0.1, rate_r2=1.5)
    k = constants(cfg)
    _, _, th2 = cfg.thresholds
    assert k.c6 > 0
    assert sinr_xb(_gains(cfg, math.sqrt(k.c6), 0.0), 0.1) == pytest.approx(th2, rel=1e-10)
    # C7 inside the room: xb at threshold with user 2 at the wall
    cfg = SystemConfig().with_snr_db(95.0).with_rsma(alpha=0.5, rate_r2=0.3)
    k = constants(cfg)
    _, _, th2 = cfg.thresholds
    assert k.strong2 and 0 < k.c7 < k.half2
    assert sinr_xb(_gains(cfg, math.sqrt(k.c7), cfg.geometry.half_width), 0.5) == pytest.approx(th2, rel=1e-10)


def test_c9_is_where_the_two_y2_limits_meet():
    cfg = SystemConfig().with_snr_db(88.0).with_rsma(alpha=0.75, beta=0.4)
    k = constants(cfg)
    bounds = closed_form.inner_bounds(cfg)
    assert k.c9 > 0
    y = math.sqrt(k.c9)
    assert bounds.c1(y) == pytest.approx(bounds.c2(y), rel=1e-9)


def test_every_witnessed_row_matches_quadrature(row_witnesses):
    for rid, cfg in row_witnesses.items():
        k = constants(cfg)
        message = rid.split(".")[0]
        hits = [r.row_id for r in tables.matches(k, message)]
        assert hits == [rid]
        p = closed_form.outage(k, message)
        assert p.branch == rid
        ref = quad_outage(cfg, 1e-10)[tables.MESSAGES.index(message)]
        assert p.probability == pytest.approx(ref, abs=1e-8), rid


def test_table_values_equal_the_derivation(row_witnesses):
    for rid, cfg in row_witnesses.items():
        k = constants(cfg)
        message = rid.split(".")[0]
        derived, _ = closed_form.outage_value(k, message)
        assert closed_form.outage(k, message).probability == pytest.approx(derived, abs=1e-9), rid


def test_derivation_text_is_readable():
    d = closed_form.derive(constants(SystemConfig()), "x1a")
    assert d.expression == "1 - 2*rC5/Dy - phi3(rC4, rC5, L)"
    assert [t.kind for t in d.terms] == ["lin", "phi3"]


def test_zero_thresholds_give_zero_outage():
    assert outage_triple(SystemConfig().with_rsma(rate_r1=0.0, rate_r2=0.0))[:3] == (0.0, 0.0, 0.0)


@pytest.mark.parametrize("changes", [dict(rate_r1=0.0), dict(rate_r2=0.0), dict(beta=0.0), dict(beta=1.0),
                                     dict(alpha=1.0), dict(alpha=0.0), dict(alpha=1.0, beta=1.0)])
def test_degenerate_splits_against_quadrature(changes):
    for snr in (70.0, 85.0, 100.0):
        cfg = SystemConfig().with_snr_db(snr).with_rsma(**changes)
        assert outage_triple(cfg)[:3] == pytest.approx(quad_outage(cfg)[:3], abs=1e-9)


def test_weak_user_two_gives_supplementary_rows():
    cfg = SystemConfig().with_snr_db(40.0)
    k = constants(cfg)
    assert k.c6 == math.inf
    t = outage_triple(cfg)
    assert (t.p_xb, t.p_x2a) == (1.0, 1.0)
    assert (t.branch_xb, t.branch_x2a) == ("xb.s.r01", "x2a.s.r01")


@given(st.integers(0, 2 ** 32 - 1))
def test_infeasible_split_saturates(seed):
    rng = np.random.default_rng(seed)
    cfg = random_config(rng)
    th11 = cfg.thresholds.theta11
    alpha = rng.uniform(0, th11 / (1 + th11))
    assert outage_triple(cfg.with_rsma(alpha=alpha))[:3] == (1.0, 1.0, 1.0)


@given(st.integers(0, 2 ** 32 - 1))
def test_ordering_and_range(seed):
    cfg = broad_config(np.random.default_rng(seed))
    t = outage_triple(cfg)
    assert 0.0 <= t.p_x1a <= t.p_xb + 1e-12 and t.p_xb <= t.p_x2a + 1e-12 and t.p_x2a <= 1.0


def test_ordering_check_raises():
    with pytest.raises(InconsistencyError):
        closed_form.check_ordering(0.5, 0.4, 0.6)
    closed_form.check_ordering(0.5, 0.5 - 1e-12, 0.6)


def test_literal_mode_breaks_down_at_defaults():
    t = outage_triple(SystemConfig(), literal=True)
    good = outage_triple(SystemConfig())
    assert t.p_x1a == pytest.approx(good.p_x1a, abs=1e-12)
    assert math.isnan(t.p_xb) and math.isnan(t.p_x2a)
    assert t[3:] == good[3:]


BOUNDARIES = [("c3", 0), ("c4", 0), ("c5", 0), ("c6", 0), ("c7", 0), ("c8", 0), ("c9", 0),
              ("c3", "L2"), ("c4", "L2"), ("c5", "L2"), ("c6", "L2"), ("c7", "L2"), ("c8", "L2"), ("c9", "L2"),
              ("c9", "c4"), ("c9", "c5"), ("c6", "c5"), ("c7", "c4"), ("c8", "c6")]


def _gap(cfg, name, other):
    k = constants(cfg)
    target = k.half2 if other == "L2" else (0.0 if other == 0 else getattr(k, other))
    a = getattr(k, name)
    if not (math.isfinite(a) and math.isfinite(target)):
        return math.nan
    return a - target


@pytest.mark.parametrize("name,other", BOUNDARIES)
def test_continuity_across_case_boundaries(name, other):
    """No jump across a case boundary beyond what the exact probability does.

    Where a constant crosses 0 the admissible interval opens like sqrt(C), so
    a 1e-9 nudge can move the exact value by ~1e-5; there the closed form is
    held to the quadrature oracle on both sides.  Elsewhere it is Lipschitz
    and the change itself must stay below 1e-6.
    """
    rng = np.random.default_rng(abs(hash((name, str(other)))) % 2 ** 32)
    crossed = 0
    for _ in range(300):
        base = random_config(rng)
        g = lambda s: _gap(base.with_snr_db(s), name, other)
        grid = np.linspace(40.0, 140.0, 41)
        vals = [g(s) for s in grid]
        for lo, hi, vlo, vhi in zip(grid, grid[1:], vals, vals[1:]):
            if math.isfinite(vlo) and math.isfinite(vhi) and vlo * vhi < 0:
                s0 = brentq(g, lo, hi, xtol=1e-13)
                sides = [base.with_snr_db(s0 - 1e-9), base.with_snr_db(s0 + 1e-9)]
                below, above = (outage_triple(c)[:3] for c in sides)
                if other == 0:
                    for cfg, got in zip(sides, (below, above)):
                        assert got == pytest.approx(quad_outage(cfg)[:3], abs=1e-9)
                else:
                    assert below == pytest.approx(above, abs=1e-6)
                crossed += 1
                break
        if crossed >= 5:
            break
    assert crossed >= 1
