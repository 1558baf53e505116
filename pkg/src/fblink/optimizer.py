"""Operating-point search: blocklength and pilot split per reliability target.

Solves two problems over the integer grid of (per-phase blocklength n,
pilot count n_p): the fewest data channel uses meeting an outage target,
and the highest goodput meeting it. The search is an exhaustive scan of
the admissible pairs, so it returns the exact grid optimum; a perfect-CSI
bound prunes blocklengths that cannot meet the target under any pilot
split (estimation can only lose SNR), which keeps the scan cheap without
giving up exactness.

Two rate conventions:
  'payload' (default): each phase must deliver payload_bits information
      bits, so the coding rate is payload_bits/(n - n_p) and shortening
      the data phase costs rate. This is the mode in which reliability
      targets trade against latency.
  'fixed': the scenario rate is used as-is; blocklength only buys the
      usual dispersion improvement.

Pilot-count scan space follows the policy: peak-limited links range over
every energy-admissible count, the average-power policy always spends a
single boosted pilot, and perfect CSI spends none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import estimation, relaying

RATE_MODES = ("payload", "fixed")


@dataclass(frozen=True)
class FrontierPoint:
    """One solved operating point (or an explicit infeasibility marker).

    n_opt counts all channel uses of one phase including pilots;
    data_uses counts data symbols across all phases, which is what the
    latency clock runs on by default.
    """

    eps_target: float
    n_opt: int
    n_p_opt: int
    achieved_eps: float
    latency_s: float
    goodput: float
    rate: float
    data_uses: int
    feasible: bool


def _phases(cfg: relaying.ScenarioConfig) -> int:
    return 2 if cfg.scheme == "df" else 1


def _pilot_counts(cfg: relaying.ScenarioConfig, n: int):
    """Admissible explicit pilot counts at blocklength n (None = policy)."""
    if cfg.policy.kind != "ppc":
        return (None,)
    cap = min(math.floor(n / cfg.policy.kappa), n - 1)
    return range(1, cap + 1)


def _rate_for(cfg: relaying.ScenarioConfig, d: int, rate_mode: str) -> float:
    return cfg.payload_bits / d if rate_mode == "payload" else cfg.rate


def _outage(cfg: relaying.ScenarioConfig, n: int, n_p, rate: float) -> float:
    probe = replace(cfg, n_s=n, n_r=n, n_p=n_p, rate=rate)
    if cfg.scheme == "df":
        return relaying.outage_df(probe).eps_df
    return relaying.outage_direct(probe)


def _evaluate(cfg: relaying.ScenarioConfig, n: int, n_p,
              rate_mode: str):
    """(n_p_used, d, rate, eps) for one candidate, or None if degenerate."""
    if n_p is None:
        n_p_used = 0 if cfg.policy.kind == "pcsi" else 1
    else:
        n_p_used = n_p
    d = n - n_p_used
    if d < 1:
        return None
    rate = _rate_for(cfg, d, rate_mode)
    return n_p_used, d, rate, _outage(cfg, n, n_p, rate)


_PCSI = estimation.PilotPolicy("pcsi")


def _pcsi_floor(cfg: relaying.ScenarioConfig, d: int, rate_mode: str) -> float:
    """Lower bound on outage for any pilot split with d data symbols.

    Perfect CSI at full nominal budgets: every real candidate has an
    effective SNR at or below this, and outage is monotone decreasing
    in every link SNR, so no pilot count can beat this floor.
    """
    rate = _rate_for(cfg, d, rate_mode)
    probe = replace(cfg, n_s=d, n_r=d, n_p=None, rate=rate, policy=_PCSI)
    if cfg.scheme == "df":
        return relaying.outage_df(probe).eps_df
    return relaying.outage_direct(probe)


def _point(cfg, eps_target: float, n: int, n_p: int, d: int,
           rate: float, eps: float) -> FrontierPoint:
    phases = _phases(cfg)
    data_uses = phases * d
    latency_uses = phases * n if cfg.count_pilots_in_latency else data_uses
    return FrontierPoint(
        eps_target=eps_target, n_opt=n, n_p_opt=n_p, achieved_eps=eps,
        latency_s=relaying.latency(cfg, latency_uses),
        goodput=relaying.goodput(n, n_p, rate, eps) / phases,
        rate=rate, data_uses=data_uses, feasible=True)


def _infeasible(eps_target: float) -> FrontierPoint:
    return FrontierPoint(
        eps_target=eps_target, n_opt=0, n_p_opt=0,
        achieved_eps=math.nan, latency_s=math.inf, goodput=0.0,
        rate=math.nan, data_uses=0, feasible=False)


def _validate_search(eps_target: float, n_range, rate_mode: str) -> tuple[int, int]:
    if not 0.0 < eps_target < 1.0:
        raise ValueError(f"outage target must lie in (0, 1), got {eps_target!r}")
    if rate_mode not in RATE_MODES:
        raise ValueError(f"rate_mode must be one of {RATE_MODES}, got {rate_mode!r}")
    lo, hi = n_range
    lo, hi = int(lo), int(hi)
    if not 3 <= lo <= hi:
        raise ValueError(f"need 3 <= lo <= hi in the blocklength range, "
                         f"got ({lo!r}, {hi!r})")
    return lo, hi


def min_latency(cfg: relaying.ScenarioConfig, eps_target: float,
                n_range: tuple[int, int], rate_mode: str = "payload") -> FrontierPoint:
    """Fewest latency channel uses whose outage meets eps_target.

    Candidates are walked in latency order (data symbols per phase, or
    whole blocks when the scenario counts pilots in latency), so the
    first feasible level is the optimum. Within a level, ties go to the
    lowest achieved outage, then the smaller blocklength. Returns an
    infeasible marker (not an exception) when no candidate in the range
    meets the target.
    """
    lo, hi = _validate_search(eps_target, n_range, rate_mode)

    if cfg.count_pilots_in_latency:
        # latency follows n directly; scan n ascending
        for n in range(lo, hi + 1):
            if _pcsi_floor(cfg, n, rate_mode) > eps_target:
                continue
            best = None
            for n_p in _pilot_counts(cfg, n):
                got = _evaluate(cfg, n, n_p, rate_mode)
                if got is None:
                    continue
                n_p_used, d, rate, eps = got
                if eps <= eps_target and (best is None or eps < best[0]):
                    best = (eps, n_p_used, d, rate)
            if best is not None:
                eps, n_p_used, d, rate = best
                return _point(cfg, eps_target, n, n_p_used, d, rate, eps)
        return _infeasible(eps_target)

    # latency follows the data length d; scan d ascending, and at each d
    # consider every blocklength d + n_p the range and policy admit
    d_hi = hi if cfg.policy.kind == "pcsi" else hi - 1
    for d in range(1, d_hi + 1):
        # the floor probe needs a 2-symbol phase; d = 1 goes unpruned
        if d >= 2 and _pcsi_floor(cfg, d, rate_mode) > eps_target:
            continue
        best = None
        for n_p in _counts_for_data_length(cfg, d, lo, hi):
            if n_p is None:
                # policy sentinel: perfect CSI adds no pilot, the
                # average-power policy always adds exactly one
                n = d + (0 if cfg.policy.kind == "pcsi" else 1)
            else:
                n = d + n_p
            got = _evaluate(cfg, n, n_p, rate_mode)
            if got is None:
                continue
            n_p_used, _, rate, eps = got
            if eps <= eps_target and (best is None or (eps, n) < (best[0], best[1])):
                best = (eps, n, n_p_used, rate)
        if best is not None:
            eps, n, n_p_used, rate = best
            return _point(cfg, eps_target, n, n_p_used, d, rate, eps)
    return _infeasible(eps_target)


def _counts_for_data_length(cfg: relaying.ScenarioConfig, d: int,
                            lo: int, hi: int):
    """Pilot counts whose total blocklength d + n_p stays within range."""
    kind = cfg.policy.kind
    if kind == "pcsi":
        return (None,) if lo <= d <= hi else ()
    if kind == "apc":
        return (None,) if lo <= d + 1 <= hi else ()
    counts = []
    for n_p in range(max(1, lo - d), hi - d + 1):
        if n_p * cfg.policy.kappa <= d + n_p:
            counts.append(n_p)
        else:
            break  # energy cap only tightens as n_p grows at fixed d
    return counts


def max_goodput(cfg: relaying.ScenarioConfig, eps_target: float,
                n_range: tuple[int, int], rate_mode: str = "payload") -> FrontierPoint:
    """Highest goodput among candidates whose outage meets eps_target.

    Goodput counts every channel use of every phase. Ties break toward
    the smaller blocklength, then the smaller pilot count. In payload
    mode goodput is bounded by payload_bits/(phases*n), which decreases
    in n; the scan stops once that bound cannot beat the incumbent. At
    fixed rate the bound (1 - n_p/n)*rate/phases decreases in n_p
    instead and cuts the pilot loop the same way.
    """
    lo, hi = _validate_search(eps_target, n_range, rate_mode)
    phases = _phases(cfg)
    best_key = None
    best = None
    for n in range(lo, hi + 1):
        if (rate_mode == "payload" and best_key is not None
                and cfg.payload_bits / (phases * n) <= best_key[0]):
            break
        if _pcsi_floor(cfg, n, rate_mode) > eps_target:
            continue
        for n_p in _pilot_counts(cfg, n):
            if (rate_mode == "fixed" and n_p is not None and best_key is not None
                    and (1.0 - n_p / n) * cfg.rate / phases <= best_key[0]):
                # goodput multiplies this same product by 1 - eps < 1,
                # so no later pilot count at this n can beat the incumbent
                break
            got = _evaluate(cfg, n, n_p, rate_mode)
            if got is None:
                continue
            n_p_used, d, rate, eps = got
            if eps > eps_target:
                continue
            gp = relaying.goodput(n, n_p_used, rate, eps) / phases
            key = (gp, -n, -n_p_used)
            if best_key is None or key > best_key:
                best_key = key
                best = (n, n_p_used, d, rate, eps)
    if best is None:
        return _infeasible(eps_target)
    n, n_p_used, d, rate, eps = best
    return _point(cfg, eps_target, n, n_p_used, d, rate, eps)


def frontier(cfg: relaying.ScenarioConfig, eps_grid, objective: str,
             n_range: tuple[int, int], rate_mode: str = "payload") -> list[FrontierPoint]:
    """One FrontierPoint per target, sorted by target; infeasible kept."""
    if objective not in ("latency", "goodput"):
        raise ValueError(f"objective must be 'latency' or 'goodput', got {objective!r}")
    solve = min_latency if objective == "latency" else max_goodput
    return [solve(cfg, t, n_range, rate_mode) for t in sorted(eps_grid)]
