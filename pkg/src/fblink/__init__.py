"""Reliability, latency and goodput of short-packet links over fading.

Core model: point-to-point and decode-and-forward relay transmissions
with pilot-assisted linear MMSE channel estimation, evaluated at finite
blocklength through the normal approximation. Closed-form outage
estimates are backed by quadrature references and a Monte Carlo oracle.

Modules
-------
mathcore    Gaussian tail helpers, dB conversion, checked quadrature.
estimation  Pilot energy policies and effective SNR after estimation.
fbl         Finite-blocklength rate/error trade-off and fading outage.
relaying    Link budgets and the two-hop composite error model.
montecarlo  Sampling oracle for the analytic outage and estimator laws.
optimizer   Blocklength/pilot search for latency and goodput frontiers.
cli         Command-line front end (CSV tables, plot scripts).
"""

from . import estimation, fbl, mathcore, montecarlo, optimizer, relaying
from .estimation import PilotPolicy
from .fbl import CodingSpec
from .montecarlo import SimResult, SimSpec
from .optimizer import FrontierPoint
from .relaying import ScenarioConfig

__version__ = "0.1.0"

__all__ = [
    "CodingSpec",
    "FrontierPoint",
    "PilotPolicy",
    "ScenarioConfig",
    "SimResult",
    "SimSpec",
    "__version__",
    "estimation",
    "fbl",
    "mathcore",
    "montecarlo",
    "optimizer",
    "relaying",
]
