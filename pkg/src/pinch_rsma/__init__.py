"""Outage analysis of two-user uplink RSMA with pinching antennas.

Modules: ``model`` (configuration and SINR chain), ``special`` (elliptic
integrals and ratio integrals), ``closed_form`` and ``tables`` (case-table
outage probabilities), ``oracles`` (quadrature and Monte Carlo references),
``coverage`` (branch-coverage tooling), ``analysis`` (sweeps, optimizer,
capacity region) and ``cli``.
"""

from .analysis import (RatePair, SweepRow, alpha_sweep, capacity_region, noma_baseline, optimize_split,
                       snr_sweep)
from .closed_form import CaseConstants, OutageTriple, constants, op_x1a, op_x2a, op_xb, outage_triple
from .errors import ConfigError, DomainError, InconsistencyError, ToleranceError
from .model import (Geometry, LinkGains, RadioConfig, RsmaConfig, SystemConfig, Thresholds, UserPlacement,
                    derive_physical, link_gains, sinr_x1a, sinr_x2a, sinr_xb, thresholds)
from .oracles import McSettings, OutageEstimate, mc_outage, quad_outage

__version__ = "0.1.0"
