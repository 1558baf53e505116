"""Stochastic oracle for the analytic outage and estimator formulas.

A sample is one fading realisation per link; the sample value is the
conditional block error probability at the drawn SNRs (not a hard
threshold), so the simulator and the quadrature estimate the identical
functional and agree to statistical error. The relay-decoding event in
the composite mode is drawn as a Bernoulli at the relay's conditional
error, matching the composite formula's independence structure.

Streams come from a counter-based generator: batch i uses the seed
stream jumped i times, and batch partial sums are combined with exact
compensated summation, so the aggregate is identical no matter how
batches would be distributed over workers.

For deep tails (predicted outage below 1e-4) the fading draws on the
destination-side links are exponentially twisted toward the outage
region and each sample carries its exact likelihood ratio, so the
weighted mean stays unbiased. The relay-decoding link is never twisted,
which keeps the Bernoulli event at its plain-sampling law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sps

from . import fbl, relaying

MODES = ("direct", "mrc_only", "relay_df", "estimator_check")
BATCH = 1 << 18
# plain sampling is kept above this predicted outage; below it the
# twisted proposal takes over
DEEP_TAIL = 1e-4


@dataclass(frozen=True)
class SimSpec:
    """One simulation request; (seed, spec) fixes the output bitwise."""

    samples: int
    seed: int
    scenario: relaying.ScenarioConfig
    mode: str

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class SimResult:
    estimate: float
    std_err: float
    samples_used: int
    importance_sampled: bool = False


def _cond_array(gamma, rate: float, n: int):
    """Vectorised conditional block error at instantaneous SNRs gamma."""
    gamma = np.asarray(gamma)
    out = np.ones_like(gamma)
    ok = gamma > 0.0
    g = gamma[ok]
    inv = 1.0 / (1.0 + g)
    v = (g * inv) * ((2.0 + g) * inv)
    arg = np.sqrt(n / v) * (np.log1p(g) - rate * fbl.LN2)
    out[ok] = 0.5 * _sps.erfc(arg / math.sqrt(2.0))
    return out


def _batch_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed).jumped(index))


def _twist_mean(gamma_bar: float, w_star: float) -> float:
    """Proposal mean for the unit-exponential fading of one branch.

    The outage region is |h|^2 < w_star/gamma_bar; matching the proposal
    mean to it concentrates draws there. Capped at 1 so the proposal is
    never wider than the nominal law.
    """
    if gamma_bar <= 0.0:
        return 1.0
    return min(1.0, w_star / gamma_bar)


def _log_weight(e, m: float):
    """Log density ratio nominal/proposal at draw m*e, e ~ Exp(1).

    The ratio grows like exp(e(1-m)) away from the origin, but there the
    conditional error decays like exp(-c ln^2) of the drawn SNR and
    crushes it; the clip at 700 only guards the float range on draws of
    probability under e^-700.
    """
    return math.log(m) + np.minimum(e * (1.0 - m), 700.0)


def simulate_outage(spec: SimSpec) -> SimResult:
    """Sample-mean outage of the configured scenario and mode.

    Modes: 'direct' averages the S-D conditional error, 'mrc_only' the
    combined-copy branch alone, 'relay_df' the full composite with a
    Bernoulli relay-decoding event. The standard error uses the
    Bernoulli bound sqrt(eps(1-eps)/samples), conservative for both the
    conditional-mean values and the weighted estimate.
    """
    if spec.mode == "estimator_check":
        raise ValueError("estimator_check runs through simulate_estimator")
    cfg = spec.scenario
    lb = relaying.link_budget(cfg)
    d_s = cfg.n_s - lb.n_p_s
    d_r = cfg.n_r - lb.n_p_r
    n_mrc = d_r if cfg.mrc_n_mode == "relay" else d_s + d_r
    rate = cfg.rate
    w_star = math.expm1(rate * fbl.LN2)

    if spec.mode == "direct":
        predicted = fbl.outage_rayleigh_approx(fbl.CodingSpec(rate=rate, n=d_s),
                                               lb.gamma_z, cfg.mu_log_mode)
    elif spec.mode == "mrc_only":
        predicted = relaying.outage_mrc(lb.gamma_z, lb.gamma_y,
                                        fbl.CodingSpec(rate=rate, n=n_mrc))
    else:
        predicted = relaying.outage_df(cfg).eps_df
    weighted = predicted < DEEP_TAIL

    m_z = _twist_mean(lb.gamma_z, w_star) if weighted else 1.0
    m_y = _twist_mean(lb.gamma_y, w_star) if weighted else 1.0

    num_parts = []
    remaining = spec.samples
    index = 0
    while remaining > 0:
        count = min(BATCH, remaining)
        rng = _batch_rng(spec.seed, index)
        if spec.mode == "direct":
            e_z = rng.standard_exponential(count)
            contrib = (np.exp(_log_weight(e_z, m_z))
                       * _cond_array(lb.gamma_z * m_z * e_z, rate, d_s))
        elif spec.mode == "mrc_only":
            e_z = rng.standard_exponential(count)
            e_y = rng.standard_exponential(count)
            contrib = (np.exp(_log_weight(e_z, m_z) + _log_weight(e_y, m_y))
                       * _cond_array(lb.gamma_z * m_z * e_z
                                     + lb.gamma_y * m_y * e_y, rate, n_mrc))
        else:
            e_x = rng.standard_exponential(count)
            e_z = rng.standard_exponential(count)
            e_y = rng.standard_exponential(count)
            u = rng.random(count)
            relay_failed = u < _cond_array(lb.gamma_x * e_x, rate, d_s)
            cond_z = _cond_array(lb.gamma_z * m_z * e_z, rate, d_s)
            cond_srd = _cond_array(lb.gamma_z * m_z * e_z
                                   + lb.gamma_y * m_y * e_y, rate, n_mrc)
            # each branch carries only the weights of the links its value
            # depends on; a free weight factor would need draws near
            # e ~ 1/m to average to 1, which no finite run reaches
            logw_z = _log_weight(e_z, m_z)
            logw_y = _log_weight(e_y, m_y)
            contrib = np.where(relay_failed,
                               np.exp(logw_z) * cond_z,
                               np.exp(logw_z + logw_y) * cond_srd)
        num_parts.append(float(np.sum(contrib)))
        remaining -= count
        index += 1

    estimate = min(max(math.fsum(num_parts) / spec.samples, 0.0), 1.0)
    std_err = math.sqrt(estimate * (1.0 - estimate) / spec.samples)
    return SimResult(estimate=estimate, std_err=std_err,
                     samples_used=spec.samples, importance_sampled=weighted)


def analytic_reference(spec: SimSpec) -> float:
    """Quadrature value of the functional the simulation estimates.

    Uses the exact fading averages throughout (no linearised closed
    form), so simulation minus reference is pure sampling error.
    """
    cfg = spec.scenario
    lb = relaying.link_budget(cfg)
    d_s = cfg.n_s - lb.n_p_s
    d_r = cfg.n_r - lb.n_p_r
    n_mrc = d_r if cfg.mrc_n_mode == "relay" else d_s + d_r
    if spec.mode == "direct":
        return fbl.outage_rayleigh_exact(fbl.CodingSpec(cfg.rate, d_s), lb.gamma_z)
    if spec.mode == "mrc_only":
        return relaying.outage_mrc(lb.gamma_z, lb.gamma_y,
                                   fbl.CodingSpec(cfg.rate, n_mrc))
    if spec.mode == "relay_df":
        eps_z = fbl.outage_rayleigh_exact(fbl.CodingSpec(cfg.rate, d_s), lb.gamma_z)
        eps_x = fbl.outage_rayleigh_exact(fbl.CodingSpec(cfg.rate, d_s), lb.gamma_x)
        eps_srd = relaying.outage_mrc(lb.gamma_z, lb.gamma_y,
                                      fbl.CodingSpec(cfg.rate, n_mrc))
        return eps_x * eps_z + (1.0 - eps_x) * eps_srd
    raise ValueError(f"no outage reference for mode {spec.mode!r}")


def pilot_energy_of(cfg: relaying.ScenarioConfig) -> float:
    """Total pilot energy of the source phase under the scenario's policy."""
    from . import estimation

    tx = cfg.tx_power("s")
    n_p = relaying._resolve_pilots(cfg, cfg.n_s, tx)
    if cfg.policy.kind == "ppc":
        return cfg.policy.kappa * n_p * tx
    if cfg.policy.kind == "apc":
        return estimation.apc_pilot_fraction(cfg.n_s, tx) * cfg.n_s * tx
    raise ValueError("perfect CSI has no estimator to check")


def simulate_estimator(spec: SimSpec,
                       pilot_energy: float | None = None) -> tuple[float, float]:
    """Empirical (estimate variance, error variance) of the channel MMSE.

    Per trial: draw h ~ CN(0,1), observe y = h x + w over the pilot
    symbols, apply the linear MMSE estimate and accumulate |h_hat|^2 and
    |h - h_hat|^2. pilot_energy overrides the scenario-derived ||x||^2
    (useful for probing fixed energies, including 0).
    """
    if spec.mode != "estimator_check":
        raise ValueError(f"estimator checks need mode='estimator_check', got {spec.mode!r}")
    cfg = spec.scenario
    n_p = relaying._resolve_pilots(cfg, cfg.n_s, cfg.tx_power("s"))
    energy = pilot_energy_of(cfg) if pilot_energy is None else float(pilot_energy)
    if energy < 0.0:
        raise ValueError(f"pilot energy must be >= 0, got {energy!r}")
    x = np.full(n_p, math.sqrt(energy / n_p))
    gain = 1.0 / (energy + 1.0)  # sigma^2 = 1

    est_parts = []
    err_parts = []
    batch = max(1, min(BATCH, 4_000_000 // max(n_p, 1)))
    remaining = spec.samples
    index = 0
    while remaining > 0:
        count = min(batch, remaining)
        rng = _batch_rng(spec.seed, index)
        h = (rng.standard_normal(count) + 1j * rng.standard_normal(count)) / math.sqrt(2.0)
        w = (rng.standard_normal((count, n_p))
             + 1j * rng.standard_normal((count, n_p))) / math.sqrt(2.0)
        y = h[:, None] * x[None, :] + w
        h_hat = gain * (y @ x)
        est_parts.append(float(np.sum(np.abs(h_hat) ** 2)))
        err_parts.append(float(np.sum(np.abs(h - h_hat) ** 2)))
        remaining -= count
        index += 1
    return (math.fsum(est_parts) / spec.samples,
            math.fsum(err_parts) / spec.samples)
