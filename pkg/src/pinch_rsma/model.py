"""Radio/geometry configuration and the instantaneous SINR chain.

The receiver decodes ``x1a`` (user 1, first stream), then ``xb`` (user 2),
then ``x2a`` (user 1, second stream), cancelling each decoded message before
the next.  Each pinching antenna sits directly above its user on the
waveguide, so only the y-offset and the ceiling height enter the link
distance; the propagation phases have unit modulus and drop out of every
SINR.  Inside the chain we work with the normalized receive SNRs

    A = eta * gamma1 / (y1**2 + d**2),    B = eta * gamma2 / (y2**2 + d**2)

so that ``gamma_1a = alpha*A / ((1-alpha)*A + B + 1)``,
``gamma_b = B / ((1-alpha)*A + 1)`` and ``gamma_2a = (1-alpha)*A``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from .errors import ConfigError

SPEED_OF_LIGHT = 299_792_458.0


def db_to_linear(db):
    return np.power(10.0, np.divide(db, 10.0))


def linear_to_db(lin):
    return 10.0 * np.log10(lin)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigError(msg)


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class RadioConfig:
    carrier_frequency_hz: float = 28e9
    refractive_index_ne: float = 1.4
    tx_snr_gamma1: float = 10.0 ** 8.5
    tx_snr_gamma2: float = 10.0 ** 8.5

    def __post_init__(self):
        _require(_finite(self.carrier_frequency_hz, self.refractive_index_ne,
                         self.tx_snr_gamma1, self.tx_snr_gamma2),
                 "radio parameters must be finite")
        _require(self.carrier_frequency_hz > 0, "carrier_frequency_hz must be > 0")
        _require(self.refractive_index_ne >= 1, "refractive_index_ne must be >= 1")
        _require(self.tx_snr_gamma1 >= 0 and self.tx_snr_gamma2 >= 0,
                 "transmit SNRs must be >= 0")

    @classmethod
    def from_db(cls, snr1_db: float, snr2_db: float | None = None, **kw) -> "RadioConfig":
        if snr2_db is None:
            snr2_db = snr1_db
        return cls(tx_snr_gamma1=10.0 ** (snr1_db / 10.0),
                   tx_snr_gamma2=10.0 ** (snr2_db / 10.0), **kw)


@dataclass(frozen=True)
class Geometry:
    height_d_m: float = 3.0
    room_dx_m: float = 20.0
    room_dy_m: float = 20.0

    def __post_init__(self):
        _require(_finite(self.height_d_m, self.room_dx_m, self.room_dy_m),
                 "geometry must be finite")
        _require(self.height_d_m > 0 and self.room_dx_m > 0 and self.room_dy_m > 0,
                 "geometry dimensions must be > 0")

    @property
    def half_width(self) -> float:
        return 0.5 * self.room_dy_m


@dataclass(frozen=True)
class RsmaConfig:
    alpha: float = 0.7
    beta: float = 0.5
    rate_r1: float = 1.0
    rate_r2: float = 1.0

    def __post_init__(self):
        _require(_finite(self.alpha, self.beta, self.rate_r1, self.rate_r2),
                 "RSMA parameters must be finite")
        _require(0.0 <= self.alpha <= 1.0, f"alpha must lie in [0, 1], got {self.alpha}")
        _require(0.0 <= self.beta <= 1.0, f"beta must lie in [0, 1], got {self.beta}")
        _require(self.rate_r1 >= 0 and self.rate_r2 >= 0, "rates must be >= 0")


class Thresholds(NamedTuple):
    theta11: float
    theta12: float
    theta2: float


class PhysicalConstants(NamedTuple):
    lambda_m: float
    lambda_g_m: float
    eta_m2: float


@dataclass(frozen=True)
class UserPlacement:
    y_u1_m: float
    y_u2_m: float

    def check(self, geometry: Geometry) -> None:
        half = geometry.half_width
        for name, y in (("y_u1_m", self.y_u1_m), ("y_u2_m", self.y_u2_m)):
            _require(math.isfinite(y) and -half <= y <= half,
                     f"{name}={y} lies outside [-{half}, {half}]")


class LinkGains(NamedTuple):
    """Normalized receive SNRs; fields may be scalars or equal-shape arrays."""

    gain_a: float
    gain_b: float


def derive_physical(radio: RadioConfig) -> PhysicalConstants:
    """Free-space wavelength, guided wavelength and the path-loss constant."""
    if not radio.carrier_frequency_hz > 0:
        raise ConfigError("carrier_frequency_hz must be > 0")
    lam = SPEED_OF_LIGHT / radio.carrier_frequency_hz
    return PhysicalConstants(lam, lam / radio.refractive_index_ne, lam * lam / (16.0 * math.pi ** 2))


def thresholds(rsma: RsmaConfig) -> Thresholds:
    return Thresholds(
        2.0 ** (rsma.beta * rsma.rate_r1) - 1.0,
        2.0 ** ((1.0 - rsma.beta) * rsma.rate_r1) - 1.0,
        2.0 ** rsma.rate_r2 - 1.0,
    )


def link_gains(placement: UserPlacement, geometry: Geometry, radio: RadioConfig) -> LinkGains:
    eta = derive_physical(radio).eta_m2
    d2 = geometry.height_d_m ** 2
    return LinkGains(
        eta * radio.tx_snr_gamma1 / (placement.y_u1_m ** 2 + d2),
        eta * radio.tx_snr_gamma2 / (placement.y_u2_m ** 2 + d2),
    )


def sinr_x1a(gains: LinkGains, alpha):
    a, b = gains
    return alpha * a / ((1.0 - alpha) * a + b + 1.0)


def sinr_xb(gains: LinkGains, alpha):
    a, b = gains
    return b / ((1.0 - alpha) * a + 1.0)


def sinr_x2a(gains: LinkGains, alpha):
    return (1.0 - alpha) * gains[0]


@dataclass(frozen=True)
class SystemConfig:
    """Everything needed to evaluate the three outage probabilities."""

    radio: RadioConfig = field(default_factory=RadioConfig)
    geometry: Geometry = field(default_factory=Geometry)
    rsma: RsmaConfig = field(default_factory=RsmaConfig)

    @property
    def eta(self) -> float:
        return derive_physical(self.radio).eta_m2

    @property
    def thresholds(self) -> Thresholds:
        return thresholds(self.rsma)

    def with_rsma(self, **changes) -> "SystemConfig":
        return replace(self, rsma=replace(self.rsma, **changes))

    def with_snr_db(self, snr_db: float) -> "SystemConfig":
        lin = 10.0 ** (snr_db / 10.0)
        return replace(self, radio=replace(self.radio, tx_snr_gamma1=lin, tx_snr_gamma2=lin))
