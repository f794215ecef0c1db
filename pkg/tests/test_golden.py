"""Optimized SNR sweeps against the archived CSVs in tests/data.

Regenerate with ``pinch-rsma sweep --kind snr [--rate-r1 R --rate-r2 R] --out ...``.
"""

import csv
import io

import pytest

from pinch_rsma.model import SystemConfig
from pinch_rsma.oracles import quad_outage

from conftest import DATA, SWEEP_SNRS

GOLDEN = {1.0: DATA / "snr_sweep_rate1.csv", 0.5: DATA / "snr_sweep_rate0.5.csv"}
PROBS = ("p_x1a", "p_xb", "p_x2a", "p_noma_system")


def _load(path):
    lines = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


@pytest.mark.slow
@pytest.mark.parametrize("rate", sorted(GOLDEN))
def test_sweep_matches_golden(rate, optimized_sweeps):
    golden = _load(GOLDEN[rate])
    rows = optimized_sweeps[rate]
    assert [float(g["snr_db"]) for g in golden] == SWEEP_SNRS
    for g, r in zip(golden, rows):
        assert (float(g["alpha"]), float(g["beta"])) == (r.alpha, r.beta)
        assert (g["branch_x1a"], g["branch_xb"], g["branch_x2a"]) == (r.branch_x1a, r.branch_xb, r.branch_x2a)
        for name in PROBS:
            assert float(g[name]) == pytest.approx(getattr(r, name), abs=1e-12)


@pytest.mark.parametrize("rate", sorted(GOLDEN))
def test_golden_values_agree_with_quadrature(rate):
    base = SystemConfig().with_rsma(rate_r1=rate, rate_r2=rate)
    for g in _load(GOLDEN[rate]):
        cfg = base.with_snr_db(float(g["snr_db"])).with_rsma(alpha=float(g["alpha"]), beta=float(g["beta"]))
        q = quad_outage(cfg)
        assert [float(g[n]) for n in PROBS[:3]] == pytest.approx(q[:3], abs=1e-8)
