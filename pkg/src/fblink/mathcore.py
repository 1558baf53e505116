"""Scalar math kernels shared by every other module.

Provides:
    - q_func / q_inv: Gaussian tail probability and its inverse
    - shannon_capacity / channel_dispersion: AWGN capacity (bits/use) and
      dispersion of the normal approximation
    - db_to_linear / linear_to_db: SNR unit conversion (CLI boundary only;
      everything else in the package speaks linear SNR)
    - integrate: adaptive quadrature with an explicit failure mode

All functions are scalar-in scalar-out; vectorised variants live next to
their consumers (montecarlo uses array erfc directly).
"""

from __future__ import annotations

import math
import warnings

from scipy import integrate as _sint
from scipy import special as _sps

LOG2E = math.log2(math.e)


def q_func(x: float) -> float:
    """Gaussian tail probability Q(x) = P[N(0,1) > x].

    Computed through erfc, which keeps relative accuracy in the deep
    tail (Q(8) ~ 6e-16 is still good to ~1e-14 relative).
    """
    return 0.5 * _sps.erfc(x / math.sqrt(2.0))


def q_inv(p: float) -> float:
    """Inverse of q_func on (0, 1).

    Uses the normal quantile function, so q_func(q_inv(p)) == p to well
    below 1e-10 absolute even for p ~ 1e-12.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"q_inv requires 0 < p < 1, got {p!r}")
    return float(-_sps.ndtri(p))


def shannon_capacity(gamma: float) -> float:
    """AWGN capacity log2(1 + gamma) in bits per channel use, gamma >= 0."""
    if gamma < 0.0:
        raise ValueError(f"SNR must be non-negative, got {gamma!r}")
    return math.log2(1.0 + gamma)


def channel_dispersion(gamma: float) -> float:
    """Channel dispersion V = gamma(2 + gamma)/(1 + gamma)^2.

    Dimensionless (nats^2 convention); multiply the resulting rate
    penalty by log2(e) to land in bits. Monotone on [0, inf) with
    V(0) = 0 and V -> 1 as gamma -> inf.
    """
    if gamma < 0.0:
        raise ValueError(f"SNR must be non-negative, got {gamma!r}")
    # bounded-ratio form: survives gamma past sqrt(float max)
    inv = 1.0 / (1.0 + gamma)
    return (gamma * inv) * ((2.0 + gamma) * inv)


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(linear: float) -> float:
    if linear <= 0.0:
        raise ValueError(f"linear SNR must be positive for dB conversion, got {linear!r}")
    return 10.0 * math.log10(linear)


def as_probability(value: float, what: str = "probability") -> float:
    """Validate that value is a real number in [0, 1] and return it."""
    value = float(value)
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise ValueError(f"{what} must lie in [0, 1], got {value!r}")
    return value


def clip_probability(value: float, what: str = "probability",
                     margin: float = 1e-9) -> float:
    """as_probability for computed estimates: forgives roundoff overshoot.

    Quadrature of a saturated outage can land at 1 + few ulps; anything
    past `margin` outside [0, 1] is still an error.
    """
    value = float(value)
    if math.isnan(value) or value < -margin or value > 1.0 + margin:
        raise ValueError(f"{what} must lie in [0, 1] up to roundoff, got {value!r}")
    return min(max(value, 0.0), 1.0)


class IntegrationError(RuntimeError):
    """Quadrature failed to certify the requested tolerance.

    Carries the best estimate and its error bound so callers can decide
    whether to degrade gracefully.
    """

    def __init__(self, estimate: float, error_bound: float, tol: float):
        super().__init__(
            f"quadrature error bound {error_bound:.3e} exceeds tol {tol:.3e} "
            f"(best estimate {estimate:.12e})"
        )
        self.estimate = estimate
        self.error_bound = error_bound
        self.tol = tol


def integrate(f, a: float, b: float, tol: float = 1e-10,
              points=None) -> float:
    """Adaptive Gauss-Kronrod quadrature of f over [a, b].

    Semi-infinite supports are allowed (pass math.inf); the underlying
    routine maps them onto a finite interval. `points` lists interior
    locations where subdivision is forced; pass them whenever the
    integrand is a narrow feature the initial coarse rule could step
    over (finite limits only). Returns the estimate once the reported
    absolute error is <= tol, otherwise raises IntegrationError carrying
    the best estimate and its error bound.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if points is not None:
        points = sorted(p for p in set(points) if a < p < b) or None
    with warnings.catch_warnings():
        # convergence trouble is reported through abserr below
        warnings.simplefilter("ignore", category=_sint.IntegrationWarning)
        result, abserr = _sint.quad(f, a, b, epsabs=tol, epsrel=0.0,
                                    limit=200, points=points)
    if not math.isfinite(result) or abserr > tol:
        raise IntegrationError(result, abserr, tol)
    return result
