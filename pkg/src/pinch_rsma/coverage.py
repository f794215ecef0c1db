"""Branch-coverage support for the case tables.

Three ingredients:

* ``RELATIONS``: inequalities that hold between the boundary constants of
  every configuration.  Each is a predicate over a mapping of constants
  (``C3`` ... ``C9``, ``L2``) plus a boolean ``strong`` flag
  (``eta*gamma2 > theta2*(d**2 + L**2)``); predicates work elementwise on
  numpy arrays too.
* ``UNREACHABLE``: table rows whose conditions contradict those relations,
  with the relations that rule them out.
* ``random_config`` and ``witness_search``: random and targeted generation of
  configurations used by the fuzzer.
"""

from __future__ import annotations

import ast
import collections
import itertools
import math
from dataclasses import replace
from typing import NamedTuple

import numpy as np

from . import tables
from .closed_form import CaseConstants, constants
from .errors import ConfigError
from .model import Geometry, RadioConfig, RsmaConfig, SystemConfig


def _implies(p, q):
    return ~np.asarray(p, bool) | np.asarray(q, bool)


def _iff(p, q):
    return np.asarray(p, bool) == np.asarray(q, bool)


class Relation(NamedTuple):
    statement: str
    holds: object  # callable(values, strong) -> bool array


RELATIONS = {
    "contraction": Relation(
        "C5 < C4 < C3, or C3, C4, C5 all negative",
        lambda v, s: ((v["C5"] < v["C4"]) & (v["C4"] < v["C3"]))
        | ((v["C3"] < 0) & (v["C4"] < 0) & (v["C5"] < 0))),
    "c4-c5": Relation(
        "C4 >= L^2 implies C5 >= 0",
        lambda v, s: _implies(v["C4"] >= v["L2"], v["C5"] >= 0)),
    "weak-c7": Relation(
        "C7 < 0 unless eta*gamma2 > theta2*(d^2 + L^2)",
        lambda v, s: _implies(~s, v["C7"] < 0)),
    "strong-c6-c7": Relation(
        "C6 < C7 when eta*gamma2 > theta2*(d^2 + L^2)",
        lambda v, s: _implies(s, v["C6"] < v["C7"])),
    "strong-c6-pos": Relation(
        "C6 >= 0 implies C7 >= L^2 when eta*gamma2 > theta2*(d^2 + L^2)",
        lambda v, s: _implies(s & (v["C6"] >= 0), v["C7"] >= v["L2"])),
    "weak-c9-c4": Relation(
        "C9 < C4 when C4 >= 0 and eta*gamma2 <= theta2*(d^2 + L^2)",
        lambda v, s: _implies(~s & (v["C4"] >= 0), v["C9"] < v["C4"])),
    "c9-c5": Relation(
        "C6 < C5 iff C5 < C9 (when C4 >= 0)",
        lambda v, s: _implies(v["C4"] >= 0, _iff(v["C6"] < v["C5"], v["C5"] < v["C9"]))),
    "c9-c6": Relation(
        "C6 < C5 iff C6 < C9 (when C4 >= 0 and C6 < C3)",
        lambda v, s: _implies((v["C4"] >= 0) & (v["C6"] < v["C3"]),
                              _iff(v["C6"] < v["C5"], v["C6"] < v["C9"]))),
    "c9-c4": Relation(
        "C7 < C4 iff C4 < C9 (when C4 >= 0 and eta*gamma2 > theta2*(d^2 + L^2))",
        lambda v, s: _implies(s & (v["C4"] >= 0), _iff(v["C7"] < v["C4"], v["C4"] < v["C9"]))),
    "c9-c7": Relation(
        "C7 < C4 iff C7 < C9 (when C4 >= 0, C7 < C3 and eta*gamma2 > theta2*(d^2 + L^2))",
        lambda v, s: _implies(s & (v["C4"] >= 0) & (v["C7"] < v["C3"]),
                              _iff(v["C7"] < v["C4"], v["C7"] < v["C9"]))),
}

# Combination absent from the x1a table; excluded by the contraction relation.
ABSENT_X1A_CASE = ("0 <= C3 < L^2 and C4 >= L^2", "contraction")


def relation_values(k: CaseConstants) -> tuple[dict, bool]:
    ns = k.namespace()
    return {n: ns[n] for n in ("C3", "C4", "C5", "C6", "C7", "C8", "C9", "L2")}, k.strong2


def relations_hold(k: CaseConstants) -> dict:
    """Evaluate every relation on one configuration (meaningful when theta11, theta2 > 0)."""
    v, s = relation_values(k)
    s = np.bool_(s)
    return {name: bool(rel.holds(v, s)) for name, rel in RELATIONS.items()}


UNREACHABLE = {
    # generated by checking every ordering of {0, L^2, C3..C9} consistent with RELATIONS
    'x1a.r07': ('c4-c5',),
    'xb.c6neg.r04': ('weak-c9-c4',),
    'xb.c6neg.r05': ('c9-c5',),
    'xb.c6neg.r08': ('weak-c9-c4',),
    'xb.c6neg.r15': ('c9-c5',),
    'xb.c6neg.r16': ('c4-c5',),
    'xb.c6neg.r17': ('c4-c5',),
    'xb.c6neg.r18': ('c4-c5',),
    'xb.c6neg.r19': ('c4-c5',),
    'xb.c6neg.r22': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r23': ('c9-c5',),
    'xb.c6neg.r25': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r28': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r30': ('c9-c5',),
    'xb.c6neg.r31': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r33': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r36': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r38': ('c9-c5',),
    'xb.c6neg.r39': ('c4-c5',),
    'xb.c6neg.r40': ('c4-c5',),
    'xb.c6neg.r41': ('c4-c5',),
    'xb.c6neg.r44': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r45': ('c9-c5',),
    'xb.c6neg.r47': ('weak-c7', 'c9-c4'),
    'xb.c6neg.r52': ('c9-c5',),
    'xb.c6neg.r53': ('c4-c5',),
    'xb.c6neg.r54': ('c4-c5',),
    'xb.c6neg.r55': ('c4-c5',),
    'xb.c6pos.r03': ('strong-c6-c7', 'weak-c9-c4'),
    'xb.c6pos.r04': ('c9-c5',),
    'xb.c6pos.r06': ('c9-c5',),
    'xb.c6pos.r11': ('c9-c5',),
    'xb.c6pos.r13': ('c9-c5',),
    'xb.c6pos.r15': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r16': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r17': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r18': ('c9-c5',),
    'xb.c6pos.r19': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r20': ('c9-c5',),
    'xb.c6pos.r21': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r22': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r23': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r24': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r25': ('c9-c5',),
    'xb.c6pos.r26': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r27': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r28': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r29': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r30': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r31': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r32': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r33': ('c9-c5',),
    'xb.c6pos.r34': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r35': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r36': ('weak-c7', 'strong-c6-pos'),
    'xb.c6pos.r39': ('weak-c7', 'c9-c4'),
    'xb.c6pos.r40': ('c9-c5',),
    'xb.c6pos.r42': ('c9-c5',),
    'xb.c6pos.r47': ('c9-c5',),
    'xb.c6pos.r49': ('c9-c5',),
    'x2a.c6neg.a.r05': ('weak-c9-c4',),
    'x2a.c6neg.a.r06': ('c9-c5',),
    'x2a.c6neg.a.r09': ('weak-c9-c4',),
    'x2a.c6neg.a.r16': ('c9-c5',),
    'x2a.c6neg.a.r24': ('weak-c9-c4',),
    'x2a.c6neg.a.r25': ('c9-c5',),
    'x2a.c6neg.a.r28': ('weak-c9-c4',),
    'x2a.c6neg.a.r35': ('c9-c5',),
    'x2a.c6neg.a.r36': ('c4-c5',),
    'x2a.c6neg.a.r37': ('c4-c5',),
    'x2a.c6neg.a.r38': ('c4-c5',),
    'x2a.c6neg.a.r39': ('c4-c5',),
    'x2a.c6neg.b.r04': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r05': ('c9-c5',),
    'x2a.c6neg.b.r07': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r12': ('c9-c5',),
    'x2a.c6neg.b.r18': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r19': ('c9-c5',),
    'x2a.c6neg.b.r21': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r24': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r26': ('c9-c5',),
    'x2a.c6neg.b.r27': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r29': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r32': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r34': ('c9-c5',),
    'x2a.c6neg.b.r35': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r37': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r40': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r41': ('c9-c5',),
    'x2a.c6neg.b.r43': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r46': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r48': ('c9-c5',),
    'x2a.c6neg.b.r49': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r51': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r54': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.b.r56': ('c9-c5',),
    'x2a.c6neg.b.r57': ('c4-c5',),
    'x2a.c6neg.b.r58': ('c4-c5',),
    'x2a.c6neg.b.r59': ('c4-c5',),
    'x2a.c6neg.c.r04': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.c.r05': ('c9-c5',),
    'x2a.c6neg.c.r07': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.c.r12': ('c9-c5',),
    'x2a.c6neg.c.r18': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.c.r19': ('c9-c5',),
    'x2a.c6neg.c.r21': ('weak-c7', 'c9-c4'),
    'x2a.c6neg.c.r26': ('c9-c5',),
    'x2a.c6neg.c.r27': ('c4-c5',),
    'x2a.c6neg.c.r28': ('c4-c5',),
    'x2a.c6neg.c.r29': ('c4-c5',),
    'x2a.c6pos.a.r04': ('strong-c6-c7', 'weak-c9-c4'),
    'x2a.c6pos.a.r05': ('c9-c5',),
    'x2a.c6pos.a.r07': ('c9-c5',),
    'x2a.c6pos.a.r12': ('c9-c5',),
    'x2a.c6pos.a.r14': ('c9-c5',),
    'x2a.c6pos.a.r18': ('strong-c6-c7', 'weak-c9-c4'),
    'x2a.c6pos.a.r19': ('c9-c5',),
    'x2a.c6pos.a.r21': ('c9-c5',),
    'x2a.c6pos.a.r26': ('c9-c5',),
    'x2a.c6pos.a.r28': ('c9-c5',),
    'x2a.c6pos.b.r01': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r02': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r03': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r04': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r05': ('c9-c5',),
    'x2a.c6pos.b.r06': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r07': ('c9-c5',),
    'x2a.c6pos.b.r08': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r09': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r10': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r11': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r12': ('c9-c5',),
    'x2a.c6pos.b.r13': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r14': ('c9-c5',),
    'x2a.c6pos.b.r15': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r16': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r17': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r18': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r19': ('c9-c5',),
    'x2a.c6pos.b.r20': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r21': ('c9-c5',),
    'x2a.c6pos.b.r22': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r23': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r24': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r25': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r26': ('c9-c5',),
    'x2a.c6pos.b.r27': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r28': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r29': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r30': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r31': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r32': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r33': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r34': ('c9-c5',),
    'x2a.c6pos.b.r35': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r36': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r37': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r38': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r39': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r40': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r41': ('c9-c5',),
    'x2a.c6pos.b.r42': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r43': ('c9-c5',),
    'x2a.c6pos.b.r44': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r45': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r46': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r47': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r48': ('c9-c5',),
    'x2a.c6pos.b.r49': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r50': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r51': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r52': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r53': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r54': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r55': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r56': ('c9-c5',),
    'x2a.c6pos.b.r57': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r58': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.b.r59': ('weak-c7', 'strong-c6-pos'),
    'x2a.c6pos.c.r04': ('weak-c7', 'c9-c4'),
    'x2a.c6pos.c.r05': ('c9-c5',),
    'x2a.c6pos.c.r07': ('c9-c5',),
    'x2a.c6pos.c.r12': ('c9-c5',),
    'x2a.c6pos.c.r14': ('c9-c5',),
    'x2a.c6pos.c.r18': ('weak-c7', 'c9-c4'),
    'x2a.c6pos.c.r19': ('c9-c5',),
    'x2a.c6pos.c.r21': ('c9-c5',),
    'x2a.c6pos.c.r26': ('c9-c5',),
    'x2a.c6pos.c.r28': ('c9-c5',),
}


def unreachable_reason(row_id: str) -> str | None:
    names = UNREACHABLE.get(row_id)
    if names is None:
        return None
    return "; ".join(RELATIONS[n].statement for n in names)


# --- abstract check over orderings ------------------------------------------

_ORDER_SYMBOLS = ("Z", "L2", "C3", "C4", "C5", "C6", "C7", "C8", "C9")
_STRONG_ATOM = "th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2"
_WEAK_ATOM = "th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2"


class Orderings(NamedTuple):
    values: dict      # symbol -> rank array (0 sits at rank 0, L2 > 0)
    strong: np.ndarray

    def __len__(self):
        return len(self.strong)


def orderings(consistent_only: bool = True) -> Orderings:
    """Every strict ordering of {0, L^2, C3..C9} with L^2 > 0, times the strong flag.

    Every table atom compares two of these symbols (possibly through ``rt``),
    so a row's truth value on a generic configuration depends only on where
    the configuration falls in this list.
    """
    ranks = np.array(list(itertools.permutations(range(len(_ORDER_SYMBOLS)))), dtype=float)
    ranks -= ranks[:, [0]]
    ranks = ranks[ranks[:, 1] > 0]
    values = {sym: np.tile(ranks[:, i], 2) for i, sym in enumerate(_ORDER_SYMBOLS)}
    strong = np.repeat([False, True], len(ranks))
    if consistent_only:
        keep = np.logical_and.reduce([rel.holds(values, strong) for rel in RELATIONS.values()])
        values = {sym: v[keep] for sym, v in values.items()}
        strong = strong[keep]
    return Orderings(values, strong)


def _sqrt_or_nan(x):
    with np.errstate(invalid="ignore"):
        return np.where(x >= 0, np.sqrt(np.abs(x)), np.nan)


def row_mask(row: tables.Row, orders: Orderings) -> np.ndarray:
    env = dict(orders.values, L=np.sqrt(orders.values["L2"]), rt=_sqrt_or_nan)
    out = np.ones(len(orders), bool)
    for atom in row.conditions:
        if atom == _STRONG_ATOM:
            out &= orders.strong
        elif atom == _WEAK_ATOM:
            out &= ~orders.strong
        else:
            with np.errstate(invalid="ignore"):
                out &= np.asarray(eval(atom, {"__builtins__": {}}, env), bool)  # noqa: S307
    return out


def match_counts(message: str, orders: Orderings | None = None) -> np.ndarray:
    """Number of matching rows of ``message`` for each ordering."""
    orders = orders or orderings()
    return np.sum([row_mask(r, orders) for r in tables.rows_for(message)], axis=0)


# --- configuration generators -------------------------------------------------

class Ranges(NamedTuple):
    snr_db: tuple = (60.0, 100.0)
    room_dy_m: tuple = (4.0, 40.0)
    height_d_m: tuple = (2.0, 5.0)
    rate: tuple = (0.1, 3.0)


def random_config(rng: np.random.Generator, ranges: Ranges = Ranges(),
                  base: SystemConfig | None = None) -> SystemConfig:
    """Uniform draw over ``ranges`` (both rates drawn independently), alpha and beta in [0, 1]."""
    base = base or SystemConfig()
    snr, dy, d, al, be, r1, r2 = (
        rng.uniform(*ranges.snr_db), rng.uniform(*ranges.room_dy_m), rng.uniform(*ranges.height_d_m),
        rng.uniform(), rng.uniform(), rng.uniform(*ranges.rate), rng.uniform(*ranges.rate))
    return SystemConfig(
        radio=replace(base.radio, tx_snr_gamma1=10 ** (snr / 10), tx_snr_gamma2=10 ** (snr / 10)),
        geometry=replace(base.geometry, room_dy_m=dy, height_d_m=d),
        rsma=RsmaConfig(alpha=al, beta=be, rate_r1=r1, rate_r2=r2))


def broad_config(rng: np.random.Generator) -> SystemConfig:
    """Draw from a wide, mostly log-scaled box (far beyond practical settings) to exercise rare rows."""
    def log_uniform(lo, hi):
        return math.exp(rng.uniform(math.log(lo), math.log(hi)))

    snr = rng.uniform(0.0, 160.0)
    dy, d = log_uniform(0.1, 1000.0), log_uniform(0.05, 100.0)
    # skew alpha and beta toward 0 or 1 a third of the time each
    alpha = rng.uniform() ** rng.choice([0.2, 1.0, 5.0])
    beta = rng.uniform() ** rng.choice([0.2, 1.0, 5.0])
    return SystemConfig(radio=RadioConfig.from_db(snr), geometry=Geometry(height_d_m=d, room_dy_m=dy),
                        rsma=RsmaConfig(alpha=alpha, beta=beta, rate_r1=log_uniform(1e-3, 12.0),
                                        rate_r2=log_uniform(1e-3, 12.0)))


class FuzzReport(NamedTuple):
    configs: int
    hits: dict          # row_id -> count
    no_match: int
    multi_match: int


def fuzz_rows(n: int, seed: int = 0, sampler=broad_config) -> FuzzReport:
    """Count row hits of all three tables over ``n`` sampled configurations."""
    rng = np.random.default_rng(seed)
    hits = collections.Counter()
    none = multi = 0
    for _ in range(n):
        k = constants(sampler(rng))
        for message in tables.MESSAGES:
            found = tables.matches(k, message)
            none += not found
            multi += len(found) > 1
            hits.update(r.row_id for r in found)
    return FuzzReport(n, dict(hits), none, multi)


# log-scaled search box for targeted witness search
_SEARCH_BOUNDS = [(0.0, 160.0), (math.log(0.1), math.log(1000.0)), (math.log(0.05), math.log(100.0)),
                  (0.0, 1.0), (0.0, 1.0), (math.log(1e-3), math.log(12.0)), (math.log(1e-3), math.log(12.0))]


def config_from_vector(x) -> SystemConfig:
    snr, log_dy, log_d, alpha, beta, log_r1, log_r2 = map(float, x)
    return SystemConfig(radio=RadioConfig.from_db(snr),
                        geometry=Geometry(height_d_m=math.exp(log_d), room_dy_m=math.exp(log_dy)),
                        rsma=RsmaConfig(alpha=min(max(alpha, 0.0), 1.0), beta=min(max(beta, 0.0), 1.0),
                                        rate_r1=math.exp(log_r1), rate_r2=math.exp(log_r2)))


def _violation(conditions: tuple, env: dict) -> float:
    """Zero iff all atoms hold; otherwise a continuous measure of how far off they are."""
    total = 0.0
    scale = env["L2"]

    def value(node):
        nonlocal total
        if isinstance(node, ast.Call):       # rt(...)
            inner = value(node.args[0])
            if inner < 0:
                total += 1.0 - inner / scale
                return 0.0
            return math.sqrt(inner)
        return eval(compile(ast.Expression(node), "<atom>", "eval"), {"__builtins__": {}}, env)  # noqa: S307

    for atom in conditions:
        tree = ast.parse(atom, mode="eval").body
        left, right = value(tree.left), value(tree.comparators[0])
        if not (math.isfinite(left) and math.isfinite(right)):
            ok = tables.row_matches(tables.Row("", "", (atom,), "0"), dict(env, rt=tables.rt))
            total += 0.0 if ok else 10.0
            continue
        gap = (left - right) / (abs(left) + abs(right) + 1e-300)
        op = type(tree.ops[0])
        strict = 1e-6 if op in (ast.Lt, ast.Gt) else 0.0
        total += max(0.0, gap + strict) if op in (ast.Lt, ast.LtE) else max(0.0, strict - gap)
    return total


def witness_search(row: tables.Row, seed: int = 0, maxiter: int = 400) -> SystemConfig | None:
    """Look for a configuration that lands in ``row`` (differential evolution)."""
    from scipy.optimize import differential_evolution

    def objective(x):
        try:
            k = constants(config_from_vector(x))
        except ConfigError:
            return 1e3
        v = _violation(row.conditions, k.namespace())
        if v == 0.0 and not tables.row_matches(row, tables.condition_env(k)):
            v = 1e-3
        return v

    res = differential_evolution(objective, _SEARCH_BOUNDS, seed=seed, maxiter=maxiter, tol=0,
                                 popsize=30, polish=False,
                                 callback=lambda xk, convergence=None: objective(xk) == 0.0)
    if res.fun != 0.0:
        return None
    cfg = config_from_vector(res.x)
    hits = tables.matches(constants(cfg), row.message)
    return cfg if [r.row_id for r in hits] == [row.row_id] else None


def complete_coverage(report: FuzzReport, seed: int = 0) -> dict:
    """Targeted search for every row that is neither hit in ``report`` nor listed as unreachable.

    Returns row_id -> configuration (or None if the search failed).
    """
    found = {}
    for row in tables.SUPPLEMENTARY_ROWS + tables.ROWS:
        if row.row_id in report.hits or row.row_id in UNREACHABLE:
            continue
        found[row.row_id] = witness_search(row, seed=seed)
    return found
