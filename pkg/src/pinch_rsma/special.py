"""Incomplete elliptic integrals and the ratio-integral antiderivatives.

F and E take the *parameter* ``m = k**2``:

    F(phi, m) = int_0^phi (1 - m sin^2 t)^(-1/2) dt
    E(phi, m) = int_0^phi (1 - m sin^2 t)^(+1/2) dt

Both are evaluated through Carlson's symmetric forms R_F and R_D, which stay
accurate over the whole admissible region, including ``m < 0`` and
``m > 1`` as long as ``m sin^2 phi <= 1``.  The outage integrals need both
extensions: the decreasing-denominator family has ``m > 1`` whenever the
lower root of its numerator is real, and the increasing-denominator family
has ``m < 0`` when its numerator root exceeds the denominator root.

The two integrand families are

    increasing:  sqrt((q t^2 + p) / (s t^2 + r))
    decreasing:  sqrt((q t^2 + p) / (r - s t^2))

and ``phi1`` .. ``phi4`` are their definite integrals (scaled by
``4 / dy**2``) in the combinations used by the outage expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

CARLSON_TOL = 1e-14
# tolerance for integration limits that should sit exactly on a root
ENDPOINT_SLACK = 1e-9
_HALF_PI = 0.5 * math.pi


def carlson_rf(x: float, y: float, z: float, tol: float = CARLSON_TOL) -> float:
    """Carlson's R_F(x, y, z) by the duplication theorem.

    At most one argument may be zero; all must be non-negative.
    """
    if min(x, y, z) < 0:
        raise DomainError(f"carlson_rf: negative argument ({x}, {y}, {z})")
    if (x == 0) + (y == 0) + (z == 0) > 1:
        raise DomainError("carlson_rf: more than one zero argument (divergent)")
    a0 = (x + y + z) / 3.0
    q = (3.0 * tol) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, xn, yn, zn, scale = a0, x, y, z, 1.0
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(xn), math.sqrt(yn), math.sqrt(zn)
        lam = sx * sy + sy * sz + sz * sx
        xn, yn, zn, a = 0.25 * (xn + lam), 0.25 * (yn + lam), 0.25 * (zn + lam), 0.25 * (a + lam)
        scale *= 0.25
    X = (a0 - x) * scale / a
    Y = (a0 - y) * scale / a
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    poly = (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
            - 5.0 * e2 ** 3 / 208.0 + 3.0 * e3 * e3 / 104.0 + e2 * e2 * e3 / 16.0)
    return poly / math.sqrt(a)


def carlson_rd(x: float, y: float, z: float, tol: float = CARLSON_TOL) -> float:
    """Carlson's R_D(x, y, z); x, y >= 0 with at most one zero, z > 0."""
    if min(x, y) < 0 or z <= 0:
        raise DomainError(f"carlson_rd: invalid arguments ({x}, {y}, {z})")
    if x == 0 and y == 0:
        raise DomainError("carlson_rd: x and y both zero (divergent)")
    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * tol) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, xn, yn, zn, scale, tail = a0, x, y, z, 1.0, 0.0
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(xn), math.sqrt(yn), math.sqrt(zn)
        lam = sx * sy + sy * sz + sz * sx
        tail += scale / (sz * (zn + lam))
        xn, yn, zn, a = 0.25 * (xn + lam), 0.25 * (yn + lam), 0.25 * (zn + lam), 0.25 * (a + lam)
        scale *= 0.25
    X = (a0 - x) * scale / a
    Y = (a0 - y) * scale / a
    Z = -(X + Y) / 3.0
    xy, z2 = X * Y, Z * Z
    e2 = xy - 6.0 * z2
    e3 = (3.0 * xy - 8.0 * z2) * Z
    e4 = 3.0 * (xy - z2) * z2
    e5 = xy * z2 * Z
    poly = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
            - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return scale * poly / (a * math.sqrt(a)) + 3.0 * tail


def _amplitude(phi: float, m: float) -> tuple[float, float, float]:
    """Return (sin phi, cos^2 phi, 1 - m sin^2 phi) after domain checks."""
    if not (-1e-15 <= phi <= _HALF_PI + 1e-15) or math.isnan(m):
        raise DomainError(f"amplitude phi={phi} outside [0, pi/2]")
    phi = min(max(phi, 0.0), _HALF_PI)
    s = math.sin(phi)
    c2 = max(math.cos(phi) ** 2, 0.0)
    if phi == _HALF_PI:
        c2 = 0.0
    # cos^2 + (1 - m) sin^2 keeps full relative accuracy as m -> 1, phi -> pi/2
    delta2 = c2 + (1.0 - m) * s * s
    if delta2 < -1e-12:
        raise DomainError(f"m sin^2 phi > 1 (phi={phi}, m={m})")
    return s, c2, max(delta2, 0.0)


def elliptic_f(phi: float, m: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi | m)."""
    s, c2, delta2 = _amplitude(phi, m)
    if s == 0.0:
        return 0.0
    if c2 == 0.0 and delta2 == 0.0:
        raise DomainError("F(pi/2 | 1) diverges")
    return s * carlson_rf(c2, delta2, 1.0)


def elliptic_e(phi: float, m: float) -> float:
    """Incomplete elliptic integral of the second kind E(phi | m)."""
    s, c2, delta2 = _amplitude(phi, m)
    if s == 0.0:
        return 0.0
    if m == 1.0:
        return s
    if m == 0.0:
        return min(max(phi, 0.0), _HALF_PI)
    if c2 == 0.0 and delta2 == 0.0:
        return s
    rf = carlson_rf(c2, delta2, 1.0)
    rd = carlson_rd(c2, delta2, 1.0)
    return s * rf - m * s ** 3 * rd / 3.0


@dataclass(frozen=True)
class RatioCoeffs:
    """Coefficients of ``sqrt((q t^2 + p) / (s t^2 + r))`` (``increasing``)
    or ``sqrt((q t^2 + p) / (r - s t^2))`` (``decreasing``)."""

    p: float
    q: float
    r: float
    s: float
    branch: str = "increasing"

    def __post_init__(self):
        if self.branch not in ("increasing", "decreasing"):
            raise ValueError(f"unknown branch {self.branch!r}")
        if not self.s > 0:
            raise DomainError(f"s must be > 0 (got {self.s})")
        if not self.q > 0:
            raise DomainError(f"q must be > 0 (got {self.q})")

    @property
    def p_over_q(self) -> float:
        return self.p / self.q

    @property
    def r_over_s(self) -> float:
        return self.r / self.s

    @property
    def t(self) -> float:
        """Elliptic parameter used by the antiderivative of this family."""
        pq, rs = self.p_over_q, self.r_over_s
        if self.branch == "decreasing":
            return rs / (pq + rs)
        if pq > 0:
            return 1.0 - pq / rs
        return rs / (rs - pq)

    def integrand(self, t: float) -> float:
        num = self.q * t * t + self.p
        den = self.s * t * t + self.r if self.branch == "increasing" else self.r - self.s * t * t
        return math.sqrt(num / den)


# Table helper functions, in their literal form.

def f1(x: float, c: RatioCoeffs) -> float:
    pq = c.p_over_q
    if not pq > 0:
        raise DomainError(f"f1 needs p/q > 0 (p/q = {pq})")
    return math.atan(x / math.sqrt(pq))


def f2(x: float, c: RatioCoeffs) -> float:
    pq = c.p_over_q
    if not pq > 0:
        raise DomainError(f"f2 needs p/q > 0 (p/q = {pq})")
    return x * math.sqrt((c.r_over_s + x * x) / (pq + x * x))


def f3(x: float, c: RatioCoeffs) -> float:
    root = math.sqrt(c.r_over_s) if c.r_over_s > 0 else float("nan")
    if not abs(x) <= root * (1 + 1e-12):
        raise DomainError(f"f3 needs |x| <= sqrt(r/s) = {root} (x = {x})")
    return math.acos(min(1.0, x / root))


def _increasing_antiderivative(x: float, c: RatioCoeffs) -> float:
    """int_{t0}^x sqrt((t^2 + P) / (t^2 + R)) dt with t0 = sqrt(max(0, -P))."""
    pq, rs = c.p_over_q, c.r_over_s
    if not rs > 0:
        raise DomainError(f"increasing family needs r/s > 0 (r/s = {rs})")
    x = abs(x)
    if pq > 0:
        m = 1.0 - pq / rs
        phi = math.atan(x / math.sqrt(pq))
        return (pq / math.sqrt(rs)) * elliptic_f(phi, m) - math.sqrt(rs) * elliptic_e(phi, m) \
            + x * math.sqrt((rs + x * x) / (pq + x * x))
    cc = -pq
    if cc == 0.0:
        return math.sqrt(x * x + rs) - math.sqrt(rs)
    root = math.sqrt(cc)
    if x < root * (1 - ENDPOINT_SLACK):
        raise DomainError(f"integrand is imaginary below t = {root} (x = {x})")
    x = max(x, root)
    gap = math.sqrt((x - root) * (x + root))
    phi = math.atan2(gap, root)
    m = rs / (rs + cc)
    return gap * math.sqrt(x * x + rs) / x - math.sqrt(cc + rs) * elliptic_e(phi, m)


def _decreasing_antiderivative(x: float, c: RatioCoeffs) -> float:
    """-(1/sqrt(q/s)) times int_x^{sqrt(r/s)} of the decreasing integrand."""
    pq, rs = c.p_over_q, c.r_over_s
    if not rs > 0 or not pq + rs > 0:
        raise DomainError(f"decreasing family needs r/s > 0 and p/q + r/s > 0 ({pq}, {rs})")
    x = abs(x)
    root = math.sqrt(rs)
    if x > root * (1 + ENDPOINT_SLACK):
        raise DomainError(f"x = {x} exceeds sqrt(r/s) = {root}")
    if pq < 0 and x < math.sqrt(-pq) * (1 - ENDPOINT_SLACK):
        raise DomainError(f"integrand is imaginary below t = {math.sqrt(-pq)} (x = {x})")
    x = min(x, root)
    if pq < 0:
        x = max(x, math.sqrt(-pq))
    phi = math.atan2(math.sqrt((root - x) * (root + x)), x)
    return -math.sqrt(pq + rs) * elliptic_e(phi, rs / (pq + rs))


def _limits(c: RatioCoeffs) -> tuple[float, float]:
    """Interval on which the family integrand is real (upper end may be +inf)."""
    pq, rs = c.p_over_q, c.r_over_s
    if not rs > 0:
        raise DomainError(f"{c.branch} family needs r/s > 0 (r/s = {rs})")
    if c.branch == "decreasing" and not pq + rs > 0:
        raise DomainError(f"decreasing family needs p/q + r/s > 0 ({pq}, {rs})")
    lo = math.sqrt(-pq) if pq < 0 else 0.0
    hi = math.sqrt(rs) if c.branch == "decreasing" else math.inf
    return lo, hi


def _clip(v: float, lo: float, hi: float, scale: float) -> float:
    """Pull ``v`` onto [lo, hi] if it misses by at most ENDPOINT_SLACK * scale in t**2."""
    slack = ENDPOINT_SLACK * scale
    if v < lo and (lo - v) * (lo + v) > slack:
        raise DomainError(f"integrand is imaginary below t = {lo} (t = {v})")
    if v > hi and (v - hi) * (v + hi) > slack:
        raise DomainError(f"t = {v} lies beyond the pole at {hi}")
    return min(max(v, lo), hi)


def _gap(v: float, root: float) -> float:
    """sqrt(|v**2 - root**2|) without forming the squares."""
    return math.sqrt(abs((v - root) * (v + root)))


def _reduced(y: float, x: float, c: RatioCoeffs, lo: float) -> float:
    """int_y^x sqrt((t^2 + P) / (R -+ t^2)) dt for lo <= y < x, P = p/q, R = r/s.

    With u = t^2 the integrand becomes (u + P)^(1/2) (R -+ u)^(-1/2) u^(-1/2) / 2,
    whose definite integral Carlson reduced to a single R_D plus an algebraic
    term built from the factor values at both ends.  Nothing is subtracted
    that could cancel, unlike differences of an antiderivative.
    """
    pq, rs = c.p_over_q, c.r_over_s
    dec = c.branch == "decreasing"
    if pq == 0.0:
        if dec:
            root = math.sqrt(rs)
            return (x - y) * (x + y) / (_gap(root, y) + _gap(root, x))
        return (x - y) * (x + y) / (math.sqrt(rs + y * y) + math.sqrt(rs + x * x))

    def factors(v):
        f1 = _gap(v, lo) if pq < 0 else math.sqrt(v * v + pq)
        f2 = _gap(math.sqrt(rs), v) if dec else math.sqrt(v * v + rs)
        return f1, f2, v

    (x1, x2, x3), (y1, y2, y3) = factors(x), factors(y)
    du = (x - y) * (x + y)
    u12 = (x1 * x2 * y3 + y1 * y2 * x3) / du
    u13 = (x1 * x3 * y2 + y1 * y3 * x2) / du
    u14 = (x1 * y2 * y3 + y1 * x2 * x3) / du
    d12 = -(pq + rs) if dec else pq - rs
    rd = carlson_rd(u12 * u12, u13 * u13, u14 * u14)
    return (d12 * pq * rd / 3.0) + x1 * y1 / u14


def ratio_integral(x: float, y: float, c: RatioCoeffs) -> float:
    """Definite integral from y to x (0 <= x, y) of the family integrand.

    Limits that overshoot the real interval by a relative ``ENDPOINT_SLACK``
    (measured in t**2 relative to |p/q| + r/s) are pulled back onto it.
    """
    if x == y:
        return 0.0
    lo, hi = _limits(c)
    scale = abs(c.p_over_q) + c.r_over_s
    a, b = _clip(abs(min(x, y)), lo, hi, scale), _clip(abs(max(x, y)), lo, hi, scale)
    if a == b:
        return 0.0
    # split so that neither piece has one end at t = 0 (or the lower root) and
    # the other at the pole, where the reduction degenerates
    mid = 0.5 * (a + b)
    total = _reduced(a, mid, c, lo) + _reduced(mid, b, c, lo)
    sign = 1.0 if x > y else -1.0
    return sign * math.sqrt(c.q / c.s) * total


def antiderivative(x: float, c: RatioCoeffs) -> float:
    """Elliptic-form antiderivative of the family integrand (up to the factor sqrt(q/s)).

    Differences of this function equal :func:`ratio_integral` but lose
    accuracy when the values are much larger than their difference; kept
    as the closed form the tables are written in.
    """
    if c.branch == "increasing":
        return _increasing_antiderivative(x, c)
    return _decreasing_antiderivative(x, c)


def phi2(x: float, y: float, c2: RatioCoeffs, dy: float) -> float:
    return 4.0 / dy ** 2 * ratio_integral(x, y, c2)


def phi4(x: float, y: float, c1: RatioCoeffs, dy: float) -> float:
    return 4.0 / dy ** 2 * ratio_integral(x, y, c1)


def phi1(x: float, y: float, c1: RatioCoeffs, c2: RatioCoeffs, dy: float) -> float:
    """Area between the two root curves over [y, x]: phi2 - phi4."""
    return phi2(x, y, c2, dy) - phi4(x, y, c1, dy)


def phi3(x: float, y: float, z: float, c1: RatioCoeffs, dy: float) -> float:
    """Area between the constant ``z`` and the decreasing-family curve."""
    return 4.0 * z / dy ** 2 * (x - y) - phi4(x, y, c1, dy)


# The same four combinations exactly as they are printed alongside the
# outage tables.  Kept for the literal-comparison mode only; several signs,
# one prefactor and the increasing-family parameter differ from the
# integrals they are meant to represent.

def _t_literal(c: RatioCoeffs) -> float:
    return (math.sqrt(c.r_over_s) / math.sqrt(c.p_over_q + c.r_over_s)) ** 2


def phi2_literal(x, y, c2, dy):
    pq, rs = c2.p_over_q, c2.r_over_s
    t2 = _t_literal(c2)

    def f_term(v):
        return pq / math.sqrt(rs) * elliptic_f(f1(v, c2), t2)

    def e_term(v):
        return math.sqrt(rs) * elliptic_e(f1(v, c2), t2)

    bracket = f_term(x) - e_term(x) + f2(x, c2) - f_term(y) - e_term(y) + f2(y, c2)
    return 4.0 / dy ** 2 * math.sqrt(c2.q / c2.s) * bracket


def phi4_literal(x, y, c1, dy):
    t1 = _t_literal(c1)
    k = math.sqrt(c1.q / c1.s) * math.sqrt(c1.p_over_q + c1.r_over_s)
    return 4.0 / dy ** 2 * k * (elliptic_e(f3(y, c1), t1) - elliptic_e(f3(x, c1), t1))


def phi3_literal(x, y, z, c1, dy):
    return 4.0 * z / dy ** 2 * (x - y) - phi4_literal(x, y, c1, dy)


def phi1_literal(x, y, c1, c2, dy):
    t1 = _t_literal(c1)
    k = math.sqrt(c1.q / c1.s) * math.sqrt(c1.p / c1.s + c1.r_over_s)
    second = 4.0 / dy ** 2 * k * (elliptic_e(f3(y, c1), t1) - elliptic_e(f3(x, c1), t1))
    return phi2_literal(x, y, c2, dy) + second
