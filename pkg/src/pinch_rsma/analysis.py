"""Experiments built on the closed form: capacity region, sweeps, grid optimizer, NOMA baseline."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import NamedTuple, Sequence

import numpy as np

from .closed_form import constants, outage_probabilities, outage_triple
from .model import (Geometry, LinkGains, RadioConfig, SystemConfig, UserPlacement, link_gains, sinr_x1a,
                    sinr_x2a, sinr_xb, thresholds)
from .oracles import thread_count

ALPHA_STEP = 0.005
BETA_STEP = 0.01


def _grid(step: float) -> np.ndarray:
    n = round(1.0 / step)
    return np.arange(n + 1) / n


DEFAULT_ALPHA_GRID = _grid(ALPHA_STEP)
DEFAULT_BETA_GRID = _grid(BETA_STEP)


# --- capacity region ----------------------------------------------------------

class RatePair(NamedTuple):
    rate_u1: float
    rate_u2: float


def _log2p(x):
    return np.log1p(x) / math.log(2.0)


def rate_pair(gains: LinkGains, alpha: float) -> RatePair:
    g1a, gb, g2a = sinr_x1a(gains, alpha), sinr_xb(gains, alpha), sinr_x2a(gains, alpha)
    return RatePair(float(_log2p(g1a) + _log2p(g2a)), float(_log2p(gb)))


@dataclass(frozen=True)
class CapacityRegion:
    gains: LinkGains
    vertices: tuple          # MAC pentagon, counter-clockwise from the origin
    alphas: tuple
    rsma_trace: tuple        # RatePair per alpha

    @property
    def sum_rate(self) -> float:
        a, b = self.gains
        return float(_log2p(a + b))


def capacity_region(placement: UserPlacement, radio: RadioConfig = RadioConfig(),
                    geometry: Geometry = Geometry(), n_alpha: int = 101) -> CapacityRegion:
    """Two-user MAC region and the rate pairs RSMA reaches as alpha sweeps [0, 1].

    The two inner corners are the SIC orders; the trace runs from the
    user-2-first corner (alpha = 0) to the user-1-first corner (alpha = 1).
    """
    if n_alpha < 2:
        raise ValueError("n_alpha must be >= 2")
    placement.check(geometry)
    gains = link_gains(placement, geometry, radio)
    a, b = gains
    ra, rb = float(_log2p(a)), float(_log2p(b))
    vertices = (
        RatePair(0.0, 0.0),
        RatePair(ra, 0.0),
        RatePair(ra, float(_log2p(b / (1.0 + a)))),
        RatePair(float(_log2p(a / (1.0 + b))), rb),
        RatePair(0.0, rb),
    )
    alphas = tuple(float(x) for x in np.linspace(0.0, 1.0, n_alpha))
    trace = tuple(rate_pair(gains, al) for al in alphas)
    return CapacityRegion(gains, vertices, alphas, trace)


# --- optimizer ------------------------------------------------------------------

class SplitResult(NamedTuple):
    alpha_star: float
    beta_star: float
    p_x1a: float
    p_xb: float
    p_x2a: float
    branches: tuple
    evaluated: int


def _feasible(alpha: float, theta11: float) -> bool:
    # below alpha/(1-alpha) = theta11 the first stream can never be decoded
    return alpha >= 1.0 or alpha >= theta11 * (1.0 - alpha)


def _scan_beta(cfg: SystemConfig, beta: float, alpha_grid) -> tuple:
    """Best (p_x2a, p_xb, alpha) for one beta, plus the evaluation count."""
    theta11 = thresholds(replace(cfg.rsma, beta=beta)).theta11
    best = None
    count = 0
    for alpha in alpha_grid:
        alpha = float(alpha)
        count += 1
        if not _feasible(alpha, theta11):
            key = (1.0, 1.0, alpha)
        else:
            k = constants(cfg.with_rsma(alpha=alpha, beta=beta))
            (p2,) = outage_probabilities(k, ("x2a",))
            if best is not None and p2 > best[0]:
                continue
            (pb,) = outage_probabilities(k, ("xb",))
            key = (p2, pb, alpha)
        if best is None or key < best:
            best = key
    return best, count


def _scan_job(args):
    return _scan_beta(*args)


def _parallel_map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(fn, jobs))


def optimize_split(cfg: SystemConfig, alpha_grid: Sequence[float] | None = None,
                   beta_grid: Sequence[float] | None = None, threads: int | None = None) -> SplitResult:
    """Exhaustive grid search for the (alpha, beta) minimizing p_x2a.

    Ties go to the smaller p_xb, then the smaller alpha, then the smaller beta.
    Points with alpha/(1-alpha) < theta11 are known to give (1, 1, 1) and are
    scored without evaluating the closed form.
    """
    alpha_grid = DEFAULT_ALPHA_GRID if alpha_grid is None else np.asarray(alpha_grid, float)
    beta_grid = DEFAULT_BETA_GRID if beta_grid is None else np.asarray(beta_grid, float)
    if alpha_grid.size == 0 or beta_grid.size == 0:
        raise ValueError("grids must be non-empty")
    for name, g in (("alpha", alpha_grid), ("beta", beta_grid)):
        if np.any((g < 0) | (g > 1)) or not np.all(np.isfinite(g)):
            raise ValueError(f"{name} grid must lie in [0, 1]")
    jobs = [(cfg, float(beta), alpha_grid) for beta in beta_grid]
    results = _parallel_map(_scan_job, jobs, thread_count(threads))
    best_key, best_beta, total = None, None, 0
    for (key, count), (_, beta, _) in zip(results, jobs):
        total += count
        if best_key is None or key + (beta,) < best_key + (best_beta,):
            best_key, best_beta = key, beta
    alpha = best_key[2]
    triple = outage_triple(cfg.with_rsma(alpha=alpha, beta=best_beta))
    return SplitResult(alpha, best_beta, triple.p_x1a, triple.p_xb, triple.p_x2a,
                       (triple.branch_x1a, triple.branch_xb, triple.branch_x2a), total)


# --- NOMA baseline ---------------------------------------------------------------

class NomaOutage(NamedTuple):
    p_u1: float
    p_u2: float
    p_system: float
    order: tuple          # SIC decoding order, e.g. (1, 2) decodes user 1 first


def _swap_users(cfg: SystemConfig) -> SystemConfig:
    radio = replace(cfg.radio, tx_snr_gamma1=cfg.radio.tx_snr_gamma2, tx_snr_gamma2=cfg.radio.tx_snr_gamma1)
    rsma = replace(cfg.rsma, rate_r1=cfg.rsma.rate_r2, rate_r2=cfg.rsma.rate_r1)
    return replace(cfg, radio=radio, rsma=rsma)


def noma_order(cfg: SystemConfig, first: int) -> NomaOutage:
    """Outage of single-message NOMA with the given user decoded first.

    With alpha = beta = 1 the RSMA chain collapses to "user 1, then user 2";
    the opposite order is the same chain with the users' roles exchanged
    (both rooms share the same geometry).
    """
    if first not in (1, 2):
        raise ValueError("first must be 1 or 2")
    base = cfg if first == 1 else _swap_users(cfg)
    p_first, p_second, _ = outage_triple(base.with_rsma(alpha=1.0, beta=1.0))[:3]
    if first == 1:
        return NomaOutage(p_first, p_second, p_second, (1, 2))
    return NomaOutage(p_second, p_first, p_second, (2, 1))


def noma_baseline(cfg: SystemConfig) -> NomaOutage:
    """Better of the two SIC orders by system outage (order (1, 2) on ties)."""
    a, b = noma_order(cfg, 1), noma_order(cfg, 2)
    return b if b.p_system < a.p_system else a


# --- sweeps ----------------------------------------------------------------------

class SweepRow(NamedTuple):
    value: float
    alpha: float
    beta: float
    p_x1a: float
    p_xb: float
    p_x2a: float
    branch_x1a: str
    branch_xb: str
    branch_x2a: str
    p_noma_system: float | None = None
    noma_order: tuple | None = None


def _snr_point(args) -> SweepRow:
    cfg, snr_db, optimize, alpha_grid, beta_grid = args
    cfg = cfg.with_snr_db(snr_db)
    if optimize:
        best = optimize_split(cfg, alpha_grid, beta_grid, threads=1)
        alpha, beta = best.alpha_star, best.beta_star
    else:
        alpha, beta = cfg.rsma.alpha, cfg.rsma.beta
    t = outage_triple(cfg.with_rsma(alpha=alpha, beta=beta))
    noma = noma_baseline(cfg)
    return SweepRow(snr_db, alpha, beta, t.p_x1a, t.p_xb, t.p_x2a, t.branch_x1a, t.branch_xb, t.branch_x2a,
                    noma.p_system, noma.order)


def snr_sweep(cfg_template: SystemConfig, snr_db_list: Sequence[float], optimize: bool = True,
              alpha_grid=None, beta_grid=None, threads: int | None = None) -> list[SweepRow]:
    """One row per SNR (gamma1 = gamma2), in input order."""
    jobs = [(cfg_template, float(s), optimize, alpha_grid, beta_grid) for s in snr_db_list]
    return _parallel_map(_snr_point, jobs, thread_count(threads))


def alpha_sweep(cfg_template: SystemConfig, alpha_list: Sequence[float]) -> list[SweepRow]:
    """Outage versus alpha at the template's beta; duplicates are kept."""
    rows = []
    for alpha in alpha_list:
        t = outage_triple(cfg_template.with_rsma(alpha=float(alpha)))
        rows.append(SweepRow(float(alpha), float(alpha), cfg_template.rsma.beta, t.p_x1a, t.p_xb, t.p_x2a,
                             t.branch_x1a, t.branch_xb, t.branch_x2a))
    return rows


def interior_minimizer(rows: Sequence[SweepRow]) -> SweepRow | None:
    """Row with the smallest p_x2a if it is strictly inside the sweep, else None."""
    if not rows:
        return None
    i = min(range(len(rows)), key=lambda j: (rows[j].p_x2a, j))
    return rows[i] if 0 < i < len(rows) - 1 and rows[i].p_x2a < min(rows[0].p_x2a, rows[-1].p_x2a) else None
