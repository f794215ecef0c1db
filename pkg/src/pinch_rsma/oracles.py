"""Reference estimators for the outage probabilities.

Both oracles work from the SINR inequalities directly and share no code with
:mod:`pinch_rsma.special` or :mod:`pinch_rsma.closed_form`.

``quad_outage`` integrates, over y1 in [0, L], the length of the admissible
y2 interval, after splitting [0, L] wherever that length is not smooth.  The
split points are found with ``brentq`` on monotone functions of y1.

``mc_outage`` samples both users uniformly in their rooms.  Samples are drawn
in fixed-size blocks; block ``i`` uses its own Philox stream derived from
``(seed, i)``, and failure counts are summed as integers, so the result does
not depend on how blocks are spread over threads.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import ConfigError, ToleranceError
from .model import LinkGains, SystemConfig, sinr_x1a, sinr_x2a, sinr_xb

MC_BLOCK = 1 << 16
THREADS_ENV = "PINCH_RSMA_THREADS"


@dataclass(frozen=True)
class McSettings:
    sample_count: int = 1_000_000
    seed: int = 0

    def __post_init__(self):
        if int(self.sample_count) != self.sample_count or self.sample_count < 1:
            raise ConfigError(f"sample_count must be a positive integer, got {self.sample_count}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


class OutageEstimate(NamedTuple):
    estimate: float
    std_error: float
    sample_count: int

    @classmethod
    def from_count(cls, failures: int, n: int) -> "OutageEstimate":
        p = failures / n
        return cls(p, math.sqrt(p * (1.0 - p) / n), n)


class QuadOutage(NamedTuple):
    p_x1a: float
    p_xb: float
    p_x2a: float
    abs_error: float


def thread_count(requested: int | None = None) -> int:
    """Worker count from the argument or ``PINCH_RSMA_THREADS`` (0 means all cores)."""
    if requested is None:
        raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
        try:
            requested = int(raw)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if requested < 0:
        raise ConfigError(f"thread count must be >= 0, got {requested}")
    return requested or (os.cpu_count() or 1)


# --- Monte Carlo -------------------------------------------------------------

def _block_failures(cfg: SystemConfig, seed: int, index: int, size: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))
    half = cfg.geometry.half_width
    y = rng.uniform(-half, half, size=(2, size))
    d2 = cfg.geometry.height_d_m ** 2
    eta = cfg.eta
    gains = LinkGains(eta * cfg.radio.tx_snr_gamma1 / (y[0] ** 2 + d2),
                      eta * cfg.radio.tx_snr_gamma2 / (y[1] ** 2 + d2))
    alpha = cfg.rsma.alpha
    th11, th12, th2 = cfg.thresholds
    ok1 = sinr_x1a(gains, alpha) >= th11
    okb = ok1 & (sinr_xb(gains, alpha) >= th2)
    ok2 = okb & (sinr_x2a(gains, alpha) >= th12)
    return np.array([size - np.count_nonzero(ok) for ok in (ok1, okb, ok2)], dtype=np.int64)


def mc_outage(cfg: SystemConfig, settings: McSettings = McSettings(),
              threads: int | None = None) -> tuple:
    """Monte Carlo estimates for (x1a, xb, x2a).

    The outcome is a pure function of ``cfg`` and ``settings``; ``threads``
    only changes wall time.
    """
    n = int(settings.sample_count)
    sizes = [min(MC_BLOCK, n - start) for start in range(0, n, MC_BLOCK)]
    workers = min(thread_count(threads), len(sizes))
    jobs = [(cfg, settings.seed, i, size) for i, size in enumerate(sizes)]
    if workers <= 1:
        parts = [_block_failures(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _block_failures(*job), jobs))
    failures = np.sum(parts, axis=0)
    return tuple(OutageEstimate.from_count(int(f), n) for f in failures)


# --- deterministic quadrature ----------------------------------------------

class _Region:
    """Admissible y2 interval as a function of y1, built from the SINR tests."""

    def __init__(self, cfg: SystemConfig):
        eta = cfg.eta
        self.a = eta * cfg.radio.tx_snr_gamma1
        self.b = eta * cfg.radio.tx_snr_gamma2
        self.alpha = cfg.rsma.alpha
        self.d2 = cfg.geometry.height_d_m ** 2
        self.half = cfg.geometry.half_width
        self.th11, self.th12, self.th2 = cfg.thresholds

    # x1a: alpha*A >= th11*((1-alpha)*A + B + 1)  <=>  B <= slack1(y1)
    def slack1(self, y1: float) -> float:
        big_a = self.a / (y1 * y1 + self.d2)
        return self.alpha * big_a / self.th11 - (1 - self.alpha) * big_a - 1.0

    # xb: B >= th2*((1-alpha)*A + 1)  <=>  B >= need_b(y1)
    def need_b(self, y1: float) -> float:
        return self.th2 * ((1 - self.alpha) * self.a / (y1 * y1 + self.d2) + 1.0)

    def _y2_sq_for(self, big_b: float) -> float:
        """y2**2 at which B equals ``big_b`` (B decreases in |y2|)."""
        if big_b <= 0:
            return math.inf
        return self.b / big_b - self.d2

    def lower_sq(self, y1: float) -> float:
        """x1a needs y2**2 >= this (+inf if impossible)."""
        if self.th11 == 0:
            return -math.inf
        s = self.slack1(y1)
        if s < 0:
            return math.inf
        if self.b == 0:
            return -math.inf
        return self._y2_sq_for(s) if s > 0 else math.inf

    def upper_sq(self, y1: float) -> float:
        """xb needs y2**2 <= this (-inf if impossible)."""
        if self.th2 == 0:
            return math.inf
        need = self.need_b(y1)
        if self.b == 0:
            return -math.inf
        return self.b / need - self.d2

    def x2a_ok(self, y1: float) -> bool:
        return self.th12 == 0 or (1 - self.alpha) * self.a / (y1 * y1 + self.d2) >= self.th12

    def length(self, y1: float, message: str) -> float:
        l2 = self.half * self.half
        lo = self.lower_sq(y1)
        if lo > l2:
            return 0.0
        lo = math.sqrt(lo) if lo > 0 else 0.0
        if message == "x1a":
            return self.half - lo
        if message == "x2a" and not self.x2a_ok(y1):
            return 0.0
        hi = self.upper_sq(y1)
        if hi < 0:
            return 0.0
        hi = math.sqrt(min(hi, l2))
        return max(hi - lo, 0.0)

    def kinks(self) -> list[float]:
        """y1 values in (0, L) where some interval end changes regime."""
        half, l2, d2 = self.half, self.half ** 2, self.d2
        funcs = []
        if self.th11 > 0 and self.b > 0:
            # C1 = 0 and C1 = L^2, written as monotone tests on slack1
            funcs += [lambda y: self.slack1(y) - self.b / d2,
                      lambda y: self.slack1(y) - self.b / (l2 + d2)]
        if self.th11 > 0:
            funcs.append(self.slack1)
        if self.th2 > 0 and self.b > 0:
            funcs += [lambda y: self.b / d2 - self.need_b(y),
                      lambda y: self.b / (l2 + d2) - self.need_b(y)]
        if self.th11 > 0 and self.th2 > 0 and self.b > 0:
            funcs.append(lambda y: self.slack1(y) - self.need_b(y))
        if self.th12 > 0:
            funcs.append(lambda y: (1 - self.alpha) * self.a / (y * y + d2) - self.th12)
        out = []
        for f in funcs:
            f0, f1 = f(0.0), f(half)
            if f0 == 0 or f1 == 0 or (f0 > 0) == (f1 > 0):
                continue
            out.append(brentq(f, 0.0, half, xtol=1e-15 * max(half, 1.0), rtol=4 * np.finfo(float).eps))
        return sorted(set(out))


def quad_outage(cfg: SystemConfig, abs_tol: float = 1e-10) -> QuadOutage:
    """Outage probabilities by 1D adaptive quadrature of interval lengths.

    Raises :class:`ToleranceError` when the summed error estimate of any
    message exceeds ``abs_tol``.
    """
    if not 1e-12 < abs_tol < 1e-3:
        raise ConfigError(f"abs_tol must lie in (1e-12, 1e-3), got {abs_tol}")
    region = _Region(cfg)
    half = region.half
    edges = [0.0, *region.kinks(), half]
    l2 = half * half
    results, worst = [], 0.0
    for message in ("x1a", "xb", "x2a"):
        total, err = 0.0, 0.0
        for lo, hi in zip(edges, edges[1:]):
            if hi <= lo:
                continue
            val, e = quad(region.length, lo, hi, args=(message,), epsabs=0.1 * abs_tol * l2,
                          epsrel=1e-13, limit=200)
            total += val
            err += e
        err /= l2
        if err > abs_tol:
            raise ToleranceError(f"{message}: quadrature error estimate {err:.3g} exceeds {abs_tol:.3g}")
        worst = max(worst, err)
        results.append(min(max(1.0 - total / l2, 0.0), 1.0))
    return QuadOutage(*results, worst)
