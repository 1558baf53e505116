"""Pilot-assisted MMSE channel estimation and effective SNR models.

A block-fading link is estimated from in-band pilots and the residual
estimation error is folded into an effective data SNR. Two pilot power
policies are modelled on a per-packet energy budget of n*P:

    - APC (average power constraint): a single pilot symbol whose power
      fraction of the packet budget is chosen optimally; closed form
      apc_effective_snr.
    - PPC (peak power constraint): n_p pilots at power kappa*P, kappa
      being the allowed peak-to-average ratio; closed form
      ppc_effective_snr, with the optimal pilot count from the
      stationary point of that expression.
    - perfect CSI: no pilots, no penalty (handled by callers).

Provides:
    mmse_variances, effective_snr, apc_effective_snr, ppc_effective_snr,
    pilot_quadratic, optimal_pilot_count, apc_pilot_fraction, PilotPolicy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import optimize as _sopt

POLICY_KINDS = ("apc", "ppc", "pcsi")


def mmse_variances(pilot_energy: float, channel_var: float = 1.0) -> tuple[float, float]:
    """Variance split of the MMSE channel estimate.

    For h ~ CN(0, channel_var), unit-variance noise and total pilot
    energy E = ||x_t||^2, the estimate and the estimation error have

        var(h_hat)   = channel_var^2 E / (channel_var E + 1)
        var(h - h_hat) = channel_var / (channel_var E + 1)

    Returns (estimate_var, error_var). They sum to channel_var.
    """
    if pilot_energy < 0.0:
        raise ValueError(f"pilot energy must be >= 0, got {pilot_energy!r}")
    if channel_var <= 0.0:
        raise ValueError(f"channel variance must be > 0, got {channel_var!r}")
    denom = channel_var * pilot_energy + 1.0
    est_var = channel_var ** 2 * pilot_energy / denom
    err_var = channel_var / denom
    return est_var, err_var


def effective_snr(error_var: float, data_snr: float) -> float:
    """Effective SNR of a link decoded with an imperfect channel estimate.

    With estimation-error variance error_var (unit channel variance) and
    per-symbol data SNR data_snr,

        gamma_eff = (1 + data_snr) / (1 + error_var * data_snr) - 1.

    Equals data_snr when error_var = 0 and degrades monotonically as the
    error grows.
    """
    if not 0.0 <= error_var <= 1.0:
        raise ValueError(f"error variance must lie in [0, 1], got {error_var!r}")
    if data_snr < 0.0:
        raise ValueError(f"data SNR must be >= 0, got {data_snr!r}")
    return (1.0 + data_snr) / (1.0 + error_var * data_snr) - 1.0


def apc_effective_snr(n: int, power: float) -> float:
    """Effective SNR under the average power constraint (one boosted pilot).

    Closed form for a packet of n symbols with average power budget
    power; the single pilot's share of the budget is already optimised
    inside the expression. Requires n >= 3.
    """
    if n < 3:
        raise ValueError(f"APC closed form needs n >= 3, got {n!r}")
    if power <= 0.0:
        raise ValueError(f"power must be positive, got {power!r}")
    n = float(n)
    d = (n + n * power - 1.0) / ((n - 2.0) * n * power)
    f = (n - 1.0) * (n * n * power * (1.0 + power) + n - 1.0) / (
        (n - 2.0) ** 2 * n * n * power * power
    )
    sf = math.sqrt(f)
    gamma = n * power * (1.0 + d - sf) * (sf - d) / ((n - 2.0) * sf)
    if gamma <= 0.0:
        raise ValueError(f"APC effective SNR degenerate for n={n}, power={power}")
    return gamma


def apc_pilot_fraction(n: int, power: float) -> float:
    """Diagnostic: pilot share of the packet energy budget under APC.

    Found numerically as the argmax of the single-pilot effective SNR;
    apc_effective_snr equals the value at this point. Tends to 1/2 as
    power -> 0 (half the budget goes to the lone pilot at low SNR).
    """
    if n < 3:
        raise ValueError(f"APC needs n >= 3, got {n!r}")
    budget = n * power

    def neg_gamma(psi: float) -> float:
        pilot_energy = psi * budget
        data_snr = (1.0 - psi) * budget / (n - 1.0)
        return -pilot_energy * data_snr / (1.0 + pilot_energy + data_snr)

    res = _sopt.minimize_scalar(neg_gamma, bounds=(1e-9, 1.0 - 1e-9), method="bounded",
                                options={"xatol": 1e-12})
    return float(res.x)


def ppc_effective_snr(n: int, n_p: int, kappa: float, power: float) -> float:
    """Effective SNR under the peak power constraint.

    n_p pilots at power kappa*power, the rest of the n*power energy
    budget spread over the n - n_p data symbols:

        gamma_eff = n_p k (n - n_p k) P^2
                    / ((n - n_p k + (n - n_p) n_p k) P + n - n_p)

    Requires 1 <= n_p < n and n_p * kappa <= n.
    """
    if kappa < 1.0:
        raise ValueError(f"peak-to-average ratio must be >= 1, got {kappa!r}")
    if not 1 <= n_p < n:
        raise ValueError(f"need 1 <= n_p < n, got n_p={n_p!r}, n={n!r}")
    if n_p * kappa > n + 1e-9:
        raise ValueError(f"pilot energy exceeds budget: n_p*kappa={n_p * kappa} > n={n}")
    if power <= 0.0:
        raise ValueError(f"power must be positive, got {power!r}")
    e = n_p * kappa  # pilot symbols in budget units
    num = e * (n - e) * power * power
    den = (n - e + (n - n_p) * e) * power + (n - n_p)
    return num / den


@dataclass(frozen=True)
class PilotQuadratic:
    """Stationarity condition of ppc_effective_snr in n_p: a x^2 + b x + c = 0."""

    a: float
    b: float
    c: float
    roots: tuple[float, float]


def pilot_quadratic(n: int, kappa: float, power: float) -> PilotQuadratic:
    """Quadratic whose root in (0, n/kappa) maximises ppc_effective_snr."""
    if kappa < 1.0:
        raise ValueError(f"peak-to-average ratio must be >= 1, got {kappa!r}")
    kp2 = kappa * kappa * power * power
    kp3 = kappa * kappa * power ** 3
    a = kp2 + kappa * kp3 - n * kappa * kp3 + n * kp3
    b = -2.0 * n * (kp2 + kp3)
    c = n * n * (kappa * power * power + kappa * power ** 3)
    # analytically b^2 - 4ac = 4 n^2 kappa^3 P^4 (1+P)(kappa-1)(1+nP),
    # nonnegative whenever kappa >= 1; a negative float here is roundoff
    # (kappa = 1 makes it exactly zero)
    disc = max(b * b - 4.0 * a * c, 0.0)
    sq = math.sqrt(disc)
    if a == 0.0:
        root = -c / b
        return PilotQuadratic(a, b, c, (root, root))
    # numerically stable pairing: q/a and c/q
    q = -0.5 * (b + math.copysign(sq, b))
    r1, r2 = q / a, (c / q if q != 0.0 else q / a)
    return PilotQuadratic(a, b, c, (min(r1, r2), max(r1, r2)))


def optimal_pilot_count(n: int, kappa: float, power: float) -> int:
    """Pilot count maximising ppc_effective_snr over {1, ..., floor(n/kappa)}.

    The continuous stationary point is taken from pilot_quadratic, then
    rounded by comparing the effective SNR at its floor and ceiling
    (ties toward fewer pilots) and clamped to the feasible range.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n!r}")
    cap = min(int(math.floor(n / kappa + 1e-9)), n - 1)
    if cap < 1:
        raise ValueError(f"no feasible pilot count: n={n}, kappa={kappa}")
    if cap == 1:
        return 1
    quad = pilot_quadratic(n, kappa, power)
    inside = [r for r in quad.roots if 0.0 < r < n / kappa]
    root = inside[0] if inside else float(cap)
    lo = min(max(int(math.floor(root)), 1), cap)
    hi = min(max(int(math.ceil(root)), 1), cap)
    if lo == hi:
        return lo
    g_lo = ppc_effective_snr(n, lo, kappa, power)
    g_hi = ppc_effective_snr(n, hi, kappa, power)
    return hi if g_hi > g_lo else lo


@dataclass(frozen=True)
class PilotPolicy:
    """Pilot power policy of a link: 'apc', 'ppc' or 'pcsi' (perfect CSI)."""

    kind: str
    kappa: float = 1.0

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"policy kind must be one of {POLICY_KINDS}, got {self.kind!r}")
        if self.kind == "ppc" and self.kappa < 1.0:
            raise ValueError(f"PPC needs kappa >= 1, got {self.kappa!r}")

    def pilot_count(self, n: int, power: float) -> int:
        """Pilots spent in a packet of n symbols (0 for perfect CSI)."""
        if self.kind == "pcsi":
            return 0
        if self.kind == "apc":
            return 1
        return optimal_pilot_count(n, self.kappa, power)

    def link_effective_snr(self, n: int, n_p: int, power: float) -> float:
        """Effective data SNR of a packet of n symbols with n_p pilots."""
        if self.kind == "pcsi":
            return power
        if self.kind == "apc":
            return apc_effective_snr(n, power)
        return ppc_effective_snr(n, n_p, self.kappa, power)
