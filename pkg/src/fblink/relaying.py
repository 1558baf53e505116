"""Point-to-point and decode-and-forward relay links over Rayleigh fading.

Topology: source S, destination D at unit distance, relay R on the line
between them at distance beta from S. Each transmission phase is a
packet of n channel uses starting with n_p pilots; the S phase is heard
by both R (link X) and D (link Z), the R phase reaches D (link Y) and
the destination maximum-ratio-combines its two copies.

The relay decodes-and-forwards: with probability 1 - eps_X it re-encodes
and the destination sees the combined SNR, otherwise D is left with the
direct copy alone, giving the composite

    eps_DF = eps_X * eps_Z + (1 - eps_X) * eps_SRD.

Power accounting has two modes: 'per_link' gives every transmitter the
full budget P (a per-link maximum power), 'split' divides one total
budget as eta*P for the source phase and (1-eta)*P for the relay phase.
gamma_y_mode selects the distance entering the R-D budget ('drd' the
geometric relay-destination distance, 'dsd' the unit source-destination
distance as some treatments print it).

Provides:
    ScenarioConfig, LinkBudget, OutageBreakdown,
    link_budget, outage_direct, outage_mrc, outage_df, latency, goodput.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fbl, mathcore
from .estimation import PilotPolicy

POWER_MODES = ("per_link", "split")
GAMMA_Y_MODES = ("drd", "dsd")
MRC_N_MODES = ("relay", "combined")
SCHEMES = ("dt", "df")

# default information payload per delivered message (128 bytes); together
# with the default geometry this puts the latency/reliability frontier of
# the cooperative scheme at a few ms for outage targets of 1e-3..1e-4 at
# 20 dB per link
DEFAULT_PAYLOAD_BITS = 1024.0


@dataclass(frozen=True)
class ScenarioConfig:
    """Full description of one link scenario (all SNRs linear)."""

    power: float                      # per-link average SNR budget
    rate: float = 0.5                 # nominal coding rate, bits/use
    n_s: int = 300                    # source-phase packet length
    n_r: int = 300                    # relay-phase packet length
    n_p: int | None = None            # pilots per phase; None = policy optimum
    policy: PilotPolicy = PilotPolicy("ppc", kappa=3.0)
    scheme: str = "df"
    eta: float = 0.5                  # source share under 'split' power
    beta: float = 0.5                 # S-R distance, S-D normalised to 1
    alpha: float = 4.0                # path-loss exponent
    symbol_period: float = 8.33e-6    # seconds per channel use
    payload_bits: float = DEFAULT_PAYLOAD_BITS
    power_mode: str = "per_link"
    gamma_y_mode: str = "drd"
    mrc_n_mode: str = "relay"
    mu_log_mode: str = fbl.DEFAULT_MU_LOG_MODE
    count_pilots_in_latency: bool = False

    def __post_init__(self):
        if self.power <= 0.0:
            raise ValueError(f"power must be positive, got {self.power!r}")
        if self.rate <= 0.0:
            raise ValueError(f"rate must be positive, got {self.rate!r}")
        if self.n_s < 2 or self.n_r < 2:
            raise ValueError(f"phase lengths must be >= 2, got {self.n_s!r}, {self.n_r!r}")
        if self.n_p is not None and self.n_p < 0:
            raise ValueError(f"pilot count must be >= 0, got {self.n_p!r}")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if not 0.0 < self.eta < 1.0:
            raise ValueError(f"power split eta must lie in (0, 1), got {self.eta!r}")
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"relay position beta must lie in (0, 1), got {self.beta!r}")
        if self.alpha <= 0.0:
            raise ValueError(f"path-loss exponent must be positive, got {self.alpha!r}")
        if self.symbol_period <= 0.0:
            raise ValueError(f"symbol period must be positive, got {self.symbol_period!r}")
        if self.payload_bits <= 0.0:
            raise ValueError(f"payload must be positive, got {self.payload_bits!r}")
        if self.power_mode not in POWER_MODES:
            raise ValueError(f"power_mode must be one of {POWER_MODES}, got {self.power_mode!r}")
        if self.gamma_y_mode not in GAMMA_Y_MODES:
            raise ValueError(f"gamma_y_mode must be one of {GAMMA_Y_MODES}")
        if self.mrc_n_mode not in MRC_N_MODES:
            raise ValueError(f"mrc_n_mode must be one of {MRC_N_MODES}")
        if self.mu_log_mode not in fbl.MU_LOG_MODES:
            raise ValueError(f"mu_log_mode must be one of {fbl.MU_LOG_MODES}")

    def tx_power(self, phase: str) -> float:
        """Transmit budget of the source ('s') or relay ('r') phase."""
        if self.power_mode == "per_link":
            return self.power
        return self.eta * self.power if phase == "s" else (1.0 - self.eta) * self.power

    def nominal_budgets(self) -> tuple[float, float, float]:
        """Average received SNR (gamma_Z, gamma_X, gamma_Y) before estimation loss."""
        d_sd = 1.0
        d_sr = self.beta
        d_rd = (1.0 - self.beta) if self.gamma_y_mode == "drd" else d_sd
        p_s = self.tx_power("s")
        p_r = self.tx_power("r")
        return (p_s * d_sd ** -self.alpha,
                p_s * d_sr ** -self.alpha,
                p_r * d_rd ** -self.alpha)


@dataclass(frozen=True)
class LinkBudget:
    """Effective per-link SNRs after the estimation penalty."""

    gamma_z: float   # S -> D
    gamma_x: float   # S -> R
    gamma_y: float   # R -> D
    n_p_s: int       # pilots in the source phase
    n_p_r: int       # pilots in the relay phase


def _resolve_pilots(cfg: ScenarioConfig, n: int, tx_power: float) -> int:
    if cfg.n_p is not None:
        if cfg.policy.kind == "pcsi" and cfg.n_p != 0:
            raise ValueError("perfect CSI carries no pilots")
        if cfg.policy.kind != "pcsi" and not 1 <= cfg.n_p < n:
            raise ValueError(f"need 1 <= n_p < n, got n_p={cfg.n_p}, n={n}")
        return cfg.n_p
    return cfg.policy.pilot_count(n, tx_power)


def link_budget(cfg: ScenarioConfig) -> LinkBudget:
    """Resolve pilots and effective SNRs of every link in the scenario.

    Each receiver estimates its own channel from the pilots it hears, so
    the estimation formulas are evaluated at that link's received SNR
    budget. The pilot count itself is a transmitter choice and is
    resolved from the transmit budget.
    """
    bz, bx, by = cfg.nominal_budgets()
    n_p_s = _resolve_pilots(cfg, cfg.n_s, cfg.tx_power("s"))
    n_p_r = _resolve_pilots(cfg, cfg.n_r, cfg.tx_power("r"))
    return LinkBudget(
        gamma_z=cfg.policy.link_effective_snr(cfg.n_s, n_p_s, bz),
        gamma_x=cfg.policy.link_effective_snr(cfg.n_s, n_p_s, bx),
        gamma_y=cfg.policy.link_effective_snr(cfg.n_r, n_p_r, by),
        n_p_s=n_p_s,
        n_p_r=n_p_r,
    )


def outage_direct(cfg: ScenarioConfig) -> float:
    """Outage of point-to-point transmission over the S-D link."""
    lb = link_budget(cfg)
    n_data = cfg.n_s - lb.n_p_s
    spec = fbl.CodingSpec(rate=cfg.rate, n=n_data)
    return fbl.outage_rayleigh_approx(spec, lb.gamma_z, cfg.mu_log_mode)


def mrc_sum_pdf(w: float, gamma1: float, gamma2: float) -> float:
    """Density at w of the sum of two independent Exp(gamma_i) SNRs.

    Hypoexponential for distinct means, Gamma(2) in the equal-mean
    limit. Written as exp(-w/g1) * (-expm1(-w d)) / (g1 - g2) with
    d = (g1-g2)/(g1 g2), which degrades gracefully into the Gamma(2)
    form as the means approach: the (g1-g2) factors cancel analytically
    and expm1 keeps them cancelling in floating point.
    """
    if w < 0.0:
        return 0.0
    g1, g2 = max(gamma1, gamma2), min(gamma1, gamma2)
    if g1 - g2 < 1e-12 * g1:
        return w * math.exp(-w / g1) / (g1 * g1)
    return -math.exp(-w / g1) * math.expm1(-w * (g1 - g2) / (g1 * g2)) / (g1 - g2)


def outage_mrc(gamma1: float, gamma2: float, spec: fbl.CodingSpec,
               tol: float = 1e-11) -> float:
    """Outage of a maximum-ratio combination of two Rayleigh branches.

    The combined SNR is the sum of two independent exponentials with
    means gamma1, gamma2; the conditional error is averaged over that
    density by quadrature on the finite window where it is not
    numerically 0 or the density has its mass, with forced subdivision
    points at the error transition and at the branch scales (at high
    SNR the transition is a narrow spike).
    """
    if gamma1 < 0.0 or gamma2 < 0.0:
        raise ValueError(f"branch SNRs must be >= 0, got {gamma1!r}, {gamma2!r}")
    if gamma1 == 0.0 or gamma2 == 0.0:
        # dead branch: the combiner degenerates to the live one alone
        live = gamma1 + gamma2
        return 1.0 if live == 0.0 else fbl.outage_rayleigh_exact(spec, live)
    if fbl.rate_saturated(spec):
        return 1.0
    g1, g2 = max(gamma1, gamma2), min(gamma1, gamma2)
    rate, n = spec.rate, spec.n
    w_lo, w_star, w_hi = fbl.error_window(spec)

    def integrand(w: float) -> float:
        return fbl._conditional_error(w, rate, n) * mrc_sum_pdf(w, g1, g2)

    pts = (w_lo, w_star, 0.5 * (w_star + w_hi), g2, g1, g1 + g2)
    return mathcore.clip_probability(
        mathcore.integrate(integrand, 0.0, w_hi, tol, points=pts), "outage")


@dataclass(frozen=True)
class OutageBreakdown:
    """Per-branch and composite outage of the decode-and-forward scheme."""

    eps_z: float     # direct S -> D decoding alone
    eps_x: float     # relay fails to decode the source phase
    eps_srd: float   # destination fails on the combined copies
    eps_df: float    # composite


def outage_df(cfg: ScenarioConfig) -> OutageBreakdown:
    """Composite decode-and-forward outage with its branch terms.

    eps_Z and eps_X use the closed-form fading average at the source
    phase's data length; eps_SRD is the quadrature MRC average at the
    relay phase's data length (or the two phases combined, per
    cfg.mrc_n_mode).
    """
    lb = link_budget(cfg)
    d_s = cfg.n_s - lb.n_p_s
    d_r = cfg.n_r - lb.n_p_r
    spec_s = fbl.CodingSpec(rate=cfg.rate, n=d_s)
    eps_z = fbl.outage_rayleigh_approx(spec_s, lb.gamma_z, cfg.mu_log_mode)
    eps_x = fbl.outage_rayleigh_approx(spec_s, lb.gamma_x, cfg.mu_log_mode)
    n_mrc = d_r if cfg.mrc_n_mode == "relay" else d_s + d_r
    eps_srd = outage_mrc(lb.gamma_z, lb.gamma_y, fbl.CodingSpec(rate=cfg.rate, n=n_mrc))
    eps_df = eps_x * eps_z + (1.0 - eps_x) * eps_srd
    return OutageBreakdown(eps_z=eps_z, eps_x=eps_x, eps_srd=eps_srd,
                           eps_df=mathcore.as_probability(eps_df, "composite outage"))


def latency(cfg: ScenarioConfig, n_data: int) -> float:
    """Transmission time of n_data channel uses."""
    if n_data < 1:
        raise ValueError(f"need at least one channel use, got {n_data!r}")
    return cfg.symbol_period * n_data


def goodput(n: int, n_p: int, rate: float, eps: float) -> float:
    """Successfully delivered information per channel use.

    (1 - n_p/n) * rate * (1 - eps), with n total channel uses, n_p of
    them pilots, rate the coding rate on the data part.
    """
    if not 0 <= n_p < n:
        raise ValueError(f"need 0 <= n_p < n, got n_p={n_p!r}, n={n!r}")
    if rate <= 0.0:
        raise ValueError(f"rate must be positive, got {rate!r}")
    eps = mathcore.as_probability(eps, "outage")
    return (1.0 - n_p / n) * rate * (1.0 - eps)
