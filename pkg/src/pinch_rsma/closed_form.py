"""Closed-form outage probabilities of the three messages.

Notation (all lengths in metres, ``L = Dy/2``):

* ``C1(y1)``: x1a is decoded iff ``y2**2 >= C1(y1)``;
* ``C2(y1)``: xb is decoded iff ``y2**2 <= C2(y1)``;
* x2a is decoded iff ``y1**2 <= C8``.

``C1`` grows with ``y1`` and crosses 0 at ``y1**2 = C5`` and ``L**2`` at
``C4``; ``C2`` grows with ``y1`` and crosses 0 at ``C6`` and ``L**2`` at
``C7``; ``C1 == C2`` at ``C9``.  Between consecutive crossings the admissible
``y2`` interval has a fixed shape, so each success probability is a sum of
linear pieces and definite integrals of ``sqrt(C1)`` (decreasing family,
``phi4``) and ``sqrt(C2)`` (increasing family, ``phi2``).

:func:`derive` produces that sum symbolically for one configuration;
the ``op_*`` functions evaluate it and tag the result with the matching
case-table row from :mod:`pinch_rsma.tables`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import special, tables
from .errors import InconsistencyError
from .model import SystemConfig
from .special import RatioCoeffs

INF = math.inf
CLAMP_SLACK = 1e-9
ORDER_SLACK = 1e-9


def _div(num: float, den: float) -> float:
    """Division on the extended reals; 0/0 is reported as +inf."""
    if den != 0.0:
        return num / den
    if num == 0.0:
        return INF
    return math.copysign(INF, num) * math.copysign(1.0, den)


@dataclass(frozen=True)
class CaseConstants:
    c3: float
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    coeffs1: RatioCoeffs | None
    coeffs2: RatioCoeffs | None
    dy: float
    d: float
    eta_g1: float
    eta_g2: float
    alpha: float
    theta11: float
    theta12: float
    theta2: float

    @property
    def half(self) -> float:
        return 0.5 * self.dy

    @property
    def half2(self) -> float:
        return 0.25 * self.dy * self.dy

    @property
    def strong2(self) -> bool:
        """Whether ``C2`` can reach ``L**2`` (user 2 strong enough at the wall)."""
        return self.theta2 * (4.0 * self.d ** 2 + self.dy ** 2) < 4.0 * self.eta_g2

    def namespace(self) -> dict:
        return {
            "C3": self.c3, "C4": self.c4, "C5": self.c5, "C6": self.c6, "C7": self.c7,
            "C8": self.c8, "C9": self.c9, "Dy": self.dy, "d": self.d, "L": self.half,
            "L2": self.half2, "th2": self.theta2, "eg2": self.eta_g2,
        }


def constants(cfg: SystemConfig) -> CaseConstants:
    """Boundary constants and integrand coefficients for one configuration.

    Degenerate thresholds make a constraint vacuous; the corresponding
    constants are set to the extended value that expresses this
    (``C3 = C4 = C5 = C9 = +inf`` for ``theta11 == 0``, ``C6 = C7 = -inf``
    and ``C9 = +inf`` for ``theta2 == 0``, ``C8 = +inf`` for ``theta12 == 0``).
    If ``eta*gamma2 <= d**2 * theta2`` then ``C2 < 0`` everywhere and
    ``C6 = +inf``.
    """
    th11, th12, th2 = cfg.thresholds
    eta = cfg.eta
    a = eta * cfg.radio.tx_snr_gamma1
    b = eta * cfg.radio.tx_snr_gamma2
    alpha = cfg.rsma.alpha
    d = cfg.geometry.height_d_m
    dy = cfg.geometry.room_dy_m
    d2, half2 = d * d, 0.25 * dy * dy
    e = (1.0 - alpha) * a
    kappa = alpha - (1.0 - alpha) * th11

    if th11 > 0:
        c3 = (a * kappa - th11 * d2) / th11
        c4 = (d2 + half2) * a * kappa / (th11 * (b + d2 + half2)) - d2
        c5 = d2 * (a * kappa - th11 * (b + d2)) / ((b + d2) * th11)
        q1 = th11 * (b + d2)
        coeffs1 = RatioCoeffs(p=th11 * d2 * d2 + d2 * th11 * b - d2 * a * kappa, q=q1,
                              r=a * kappa - d2 * th11, s=th11, branch="decreasing")
    else:
        c3 = c4 = c5 = INF
        coeffs1 = None

    if th2 > 0:
        q2 = b - d2 * th2
        p2 = d2 * b - d2 * a * th2 * (1.0 - alpha) - d2 * d2 * th2
        if q2 > 0:
            c6 = -p2 / q2
            coeffs2 = RatioCoeffs(p=p2, q=q2, r=e * th2 + d2 * th2, s=th2, branch="increasing")
        else:
            c6 = INF
            coeffs2 = None
        num7 = d2 * (4 * b - dy * dy * th2 - 4 * e * th2) - 4 * d2 * d2 * th2 - dy * dy * e * th2
        c7 = _div(num7, (4 * d2 + dy * dy) * th2 - 4 * b)
    else:
        c6 = c7 = -INF
        coeffs2 = None

    c8 = _div(e, th12) - d2 if th12 > 0 else INF
    if th11 > 0 and th2 > 0:
        c9 = (alpha + alpha / (th11 * (1 + th2)) - 1.0) * a - d2
    else:
        c9 = INF

    return CaseConstants(c3, c4, c5, c6, c7, c8, c9, coeffs1, coeffs2, dy, d, a, b, alpha,
                         th11, th12, th2)


class InnerBounds(NamedTuple):
    """The y1-dependent boundaries C1 and C2 as callables."""

    c1: object
    c2: object


def inner_bounds(cfg: SystemConfig) -> InnerBounds:
    th11, _, th2 = cfg.thresholds
    eta = cfg.eta
    a = eta * cfg.radio.tx_snr_gamma1
    b = eta * cfg.radio.tx_snr_gamma2
    alpha = cfg.rsma.alpha
    d2 = cfg.geometry.height_d_m ** 2

    def c1(y1):
        u = y1 * y1 + d2
        den = a * (alpha - (1 - alpha) * th11) - th11 * u
        if th11 == 0:
            return -d2
        return b * u * th11 / den - d2 if den > 0 else INF

    def c2(y1):
        u = y1 * y1 + d2
        if th2 == 0:
            return INF
        return b * u / (th2 * ((1 - alpha) * a + u)) - d2

    return InnerBounds(c1, c2)


# --- symbolic derivation ---------------------------------------------------

ZERO, ROOT1, BLOCKED = "zero", "root1", "blocked"   # lower y2 limit
WALL, ROOT2, EMPTY = "wall", "root2", "empty"       # upper y2 limit


class Term(NamedTuple):
    """One summand of a success probability over ``[lo, hi]`` in y1.

    ``kind`` is ``lin`` (constant-width strip), ``phi1``, ``phi2`` or ``phi3``.
    """

    kind: str
    hi_name: str
    lo_name: str
    hi: float
    lo: float


class Derivation(NamedTuple):
    terms: tuple
    expression: str


def _lower(k: CaseConstants, t2: float) -> str:
    if k.theta11 == 0:
        return ZERO
    if t2 >= k.c4:
        return BLOCKED
    if t2 <= k.c5:
        return ZERO
    return ROOT1


def _upper(k: CaseConstants, t2: float) -> str:
    if k.theta2 == 0:
        return WALL
    if k.coeffs2 is None or t2 <= k.c6:
        return EMPTY
    if k.strong2 and t2 >= k.c7:
        return WALL
    return ROOT2


def _segment_kind(k: CaseConstants, message: str, t2: float):
    lower = _lower(k, t2)
    if lower == BLOCKED:
        return None
    if message == "x1a":
        return "lin" if lower == ZERO else "phi3"
    upper = _upper(k, t2)
    if upper == EMPTY:
        return None
    if message == "x2a" and k.theta12 > 0 and t2 > k.c8:
        return None
    if upper == WALL:
        return "lin" if lower == ZERO else "phi3"
    if lower == ZERO:
        return "phi2"
    return "phi1" if t2 < k.c9 else None


def breakpoints(k: CaseConstants, message: str) -> list[tuple[str, float]]:
    """Named y1 values in (0, L) at which the admissible y2 interval changes shape."""
    names = ["C4", "C5"]
    if message != "x1a":
        names += ["C6", "C7", "C9"]
    if message == "x2a":
        names.append("C8")
    ns = k.namespace()
    out = [("0", 0.0)]
    for n in names:
        v = ns[n]
        if 0.0 < v < k.half2:
            out.append(("r" + n, math.sqrt(v)))
    out.append(("L", k.half))
    out.sort(key=lambda item: item[1])
    return out


def derive(k: CaseConstants, message: str) -> Derivation:
    """Symbolic success-probability decomposition for ``message``."""
    pts = breakpoints(k, message)
    segments = []
    for (n0, v0), (n1, v1) in zip(pts, pts[1:]):
        if v1 <= v0:
            continue
        mid = 0.5 * (v0 + v1)
        kind = _segment_kind(k, message, mid * mid)
        if kind is None:
            continue
        if segments and segments[-1][0] == kind and segments[-1][2] == n0:
            segments[-1] = (kind, segments[-1][1], n1, segments[-1][3], v1)
        else:
            segments.append((kind, n0, n1, v0, v1))
    terms = tuple(Term(kind, n1, n0, v1, v0) for kind, n0, n1, v0, v1 in segments)
    return Derivation(terms, format_outage(terms))


def format_outage(terms) -> str:
    """Render ``1 - sum(terms)`` in the table vocabulary."""
    if not terms:
        return "1"
    if len(terms) == 1 and terms[0].kind == "lin" and terms[0].lo_name == "0" and terms[0].hi_name == "L":
        return "0"
    parts = []
    for t in terms:
        if t.kind == "lin":
            if t.lo_name == "0":
                parts.append(f"2*{t.hi_name}/Dy")
            else:
                parts.append(f"2*({t.hi_name} - {t.lo_name})/Dy")
        elif t.kind == "phi3":
            parts.append(f"phi3({t.hi_name}, {t.lo_name}, L)")
        else:
            parts.append(f"{t.kind}({t.hi_name}, {t.lo_name})")
    return "1 - " + " - ".join(parts)


def evaluate_terms(k: CaseConstants, terms) -> float:
    """Success probability represented by ``terms``."""
    total = 0.0
    for t in terms:
        if t.kind == "lin":
            total += 2.0 * (t.hi - t.lo) / k.dy
        elif t.kind == "phi2":
            total += special.phi2(t.hi, t.lo, k.coeffs2, k.dy)
        elif t.kind == "phi1":
            total += special.phi1(t.hi, t.lo, k.coeffs1, k.coeffs2, k.dy)
        elif t.kind == "phi3":
            total += special.phi3(t.hi, t.lo, k.half, k.coeffs1, k.dy)
        else:
            raise InconsistencyError(f"unknown term kind {t.kind!r}")
    return total


def _clamp(p: float, where: str) -> float:
    if not (-CLAMP_SLACK <= p <= 1.0 + CLAMP_SLACK):
        raise InconsistencyError(f"{where}: probability {p!r} outside [0, 1] beyond slack")
    return min(max(p, 0.0), 1.0)


def outage_value(k: CaseConstants, message: str) -> tuple[float, Derivation]:
    deriv = derive(k, message)
    return _clamp(1.0 - evaluate_terms(k, deriv.terms), message), deriv


# --- table-driven evaluation ------------------------------------------------

class OutageResult(NamedTuple):
    probability: float
    branch: str


class OutageTriple(NamedTuple):
    p_x1a: float
    p_xb: float
    p_x2a: float
    branch_x1a: str
    branch_xb: str
    branch_x2a: str


def outage(k: CaseConstants, message: str, literal: bool = False) -> OutageResult:
    """Outage probability of ``message`` from its matching table row.

    ``literal=True`` evaluates the tabulated expression verbatim; the value is
    then returned unclamped and may be NaN if the printed form breaks down.
    """
    row = tables.lookup(k, message)
    if literal:
        try:
            value = tables.evaluate_row(row, k, literal=True)
        except (ArithmeticError, ValueError, TypeError):
            value = math.nan
        return OutageResult(value, row.row_id)
    return OutageResult(_clamp(tables.evaluate_row(row, k), row.row_id), row.row_id)


def op_x1a(cfg: SystemConfig, literal: bool = False) -> OutageResult:
    return outage(constants(cfg), "x1a", literal)


def op_xb(cfg: SystemConfig, literal: bool = False) -> OutageResult:
    return outage(constants(cfg), "xb", literal)


def op_x2a(cfg: SystemConfig, literal: bool = False) -> OutageResult:
    return outage(constants(cfg), "x2a", literal)


def check_ordering(p1: float, pb: float, p2: float) -> None:
    """Nested success events force ``p_x1a <= p_xb <= p_x2a``."""
    if p1 > pb + ORDER_SLACK or pb > p2 + ORDER_SLACK:
        raise InconsistencyError(f"ordering violated: p_x1a={p1!r}, p_xb={pb!r}, p_x2a={p2!r}")


def outage_triple(cfg: SystemConfig, literal: bool = False) -> OutageTriple:
    """All three outage probabilities with their branch identifiers."""
    k = constants(cfg)
    r1, rb, r2 = (outage(k, m, literal) for m in tables.MESSAGES)
    if not literal:
        check_ordering(r1.probability, rb.probability, r2.probability)
    return OutageTriple(r1.probability, rb.probability, r2.probability,
                        r1.branch, rb.branch, r2.branch)


def outage_probabilities(k: CaseConstants, messages=tables.MESSAGES) -> tuple:
    """Probabilities only, via :func:`derive` (no table lookup); for inner loops."""
    return tuple(outage_value(k, m)[0] for m in messages)
