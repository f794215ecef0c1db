import contextlib
import json
import os
import types
from pathlib import Path

import pytest
from hypothesis import settings

from pinch_rsma.analysis import snr_sweep
from pinch_rsma.model import Geometry, RadioConfig, RsmaConfig, SystemConfig

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def config_from_flat(f: dict) -> SystemConfig:
    return SystemConfig(radio=RadioConfig.from_db(f["tx_snr_db"]),
                        geometry=Geometry(height_d_m=f["height_d_m"], room_dy_m=f["room_dy_m"]),
                        rsma=RsmaConfig(alpha=f["alpha"], beta=f["beta"], rate_r1=f["rate_r1"],
                                        rate_r2=f["rate_r2"]))


@pytest.fixture(scope="session")
def row_witnesses() -> dict:
    with open(DATA / "row_witnesses.json") as fh:
        return {rid: config_from_flat(f) for rid, f in json.load(fh).items()}


SWEEP_SNRS = [float(s) for s in range(75, 96)]


@pytest.fixture(scope="session")
def optimized_sweeps() -> dict:
    """Optimized SNR sweeps for R1 = R2 in {1, 0.5}; shared by the golden and acceptance tests."""
    out = {}
    for rate in (1.0, 0.5):
        cfg = SystemConfig().with_rsma(rate_r1=rate, rate_r2=rate)
        out[rate] = snr_sweep(cfg, SWEEP_SNRS, optimize=True)
    return out


# --- acceptance reporting ---------------------------------------------------------

ACCEPTANCE: dict = {}


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion as PASS or FAIL.

    Set ``.detail`` on the yielded record to add a short summary to the line.
    """
    @contextlib.contextmanager
    def run(number: int, title: str):
        rec = types.SimpleNamespace(detail="")
        ok = False
        try:
            yield rec
            ok = True
        finally:
            line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
            if rec.detail:
                line += f" ({rec.detail})"
            ACCEPTANCE[number] = line
            print(line)
    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
