#!/usr/bin/env python3
"""Outage versus SNR for direct and relayed links under each pilot policy.

Sweeps the per-link power budget from -5 to 25 dB and plots the outage
of direct transmission (dt) against decode-and-forward relaying (df)
for the three channel-knowledge policies: a single high-power pilot
(apc), an optimal pilot block under a peak power cap (ppc), and the
perfect-CSI baseline (pcsi). The shaded band marks the ultra-reliable
region eps <= 1e-3.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from fblink import mathcore, relaying
from fblink.estimation import PilotPolicy

POLICIES = {
    "apc": PilotPolicy("apc"),
    "ppc": PilotPolicy("ppc", kappa=2.0),
    "pcsi": PilotPolicy("pcsi"),
}
SNR_DB = range(-5, 26)


def sweep(scheme, policy):
    out = []
    for db in SNR_DB:
        cfg = relaying.ScenarioConfig(power=mathcore.db_to_linear(db),
                                      rate=0.5, scheme=scheme, policy=policy)
        if scheme == "df":
            out.append(relaying.outage_df(cfg).eps_df)
        else:
            out.append(relaying.outage_direct(cfg))
    return out


def main():
    fig, ax = plt.subplots(figsize=(7, 5))
    styles = {"dt": "--", "df": "-"}
    for scheme in ("dt", "df"):
        for name, policy in POLICIES.items():
            eps = sweep(scheme, policy)
            ax.semilogy(SNR_DB, eps, styles[scheme],
                        label=f"{scheme} / {name}")
            print(f"{scheme}/{name}: eps(10 dB) = {eps[15]:.3e}")
    ax.axhspan(1e-9, 1e-3, color="0.85", zorder=0)
    ax.axhline(1e-3, color="red", lw=0.8)
    ax.set_xlabel("per-link SNR budget (dB)")
    ax.set_ylabel("outage probability")
    ax.set_ylim(1e-9, 1.0)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(ncol=2, fontsize=9)
    fig.tight_layout()
    fig.savefig("outage_vs_snr.pdf")
    print("wrote outage_vs_snr.pdf")


if __name__ == "__main__":
    main()
