"""Independent references used by several test modules (mpmath / scipy quadrature only)."""
import math

import mpmath
import numpy as np
from scipy.integrate import quad

from pinch_rsma.special import RatioCoeffs


def ellip_f_ref(phi, m):
    return float(mpmath.ellipf(phi, m))


def ellip_e_ref(phi, m):
    return float(mpmath.ellipe(phi, m))


def ellip_f_quad(phi, m):
    return quad(lambda t: (1 - m * math.sin(t) ** 2) ** -0.5, 0, phi, epsabs=1e-14, epsrel=1e-14, limit=200)[0]


def ellip_e_quad(phi, m):
    return quad(lambda t: (1 - m * math.sin(t) ** 2) ** 0.5, 0, phi, epsabs=1e-14, epsrel=1e-14, limit=200)[0]


def family_integral(c: RatioCoeffs, lo, hi):
    """Integral of the family integrand over [lo, hi] by tanh-sinh quadrature (handles sqrt endpoints)."""
    p, q, r, s = (mpmath.mpf(v) for v in (c.p, c.q, c.r, c.s))
    if c.branch == "increasing":
        f = lambda t: mpmath.sqrt((q * t * t + p) / (s * t * t + r))
    else:
        f = lambda t: mpmath.sqrt((q * t * t + p) / (r - s * t * t))
    with mpmath.workdps(30):
        if c.branch == "decreasing" and hi == math.sqrt(c.r / c.s):
            hi = mpmath.sqrt(r / s)     # the pole itself, not its rounded value
        return float(mpmath.re(mpmath.quad(f, [lo, hi])))


def random_family(rng, branch):
    """Random valid coefficients plus the admissible integration interval [lo, hi]."""
    q, s = math.exp(rng.uniform(-3, 3)), math.exp(rng.uniform(-3, 3))
    r = math.exp(rng.uniform(-3, 3))
    rs = r / s
    if branch == "increasing":
        pq = rng.choice([1, -1]) * math.exp(rng.uniform(-3, 3))
        lo = math.sqrt(-pq) if pq < 0 else 0.0
        hi = lo + math.exp(rng.uniform(-3, 2))
    else:
        root = math.sqrt(rs)
        pq = rng.uniform(-0.95, 3.0) * rs
        lo = math.sqrt(-pq) if pq < 0 else 0.0
        hi = root
    c = RatioCoeffs(p=pq * q, q=q, r=r, s=s, branch=branch)
    a, b = np.sort(rng.uniform(lo, hi, 2))
    # hit the exact endpoints a quarter of the time each
    if rng.uniform() < 0.25:
        a = lo
    if rng.uniform() < 0.25:
        b = hi
    return c, float(a), float(b)
