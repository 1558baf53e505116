#!/usr/bin/env python3
"""How the optimal training length scales with blocklength and peak power.

Left panel: the pilot count that maximizes the post-estimation SNR as a
function of blocklength, for several peak power factors kappa. Raising
kappa concentrates energy in fewer pilots; longer blocks earn more.
Right panel: the effective SNR as a function of the pilot count at a
fixed blocklength, showing the single interior maximum the closed-form
count must hit.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from fblink import estimation

POWER = 10.0  # 10 dB per link
NS = range(100, 1001, 50)
KAPPAS = (2.0, 4.0, 8.0)


def main():
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
    for kappa in KAPPAS:
        counts = [estimation.optimal_pilot_count(n, kappa, POWER) for n in NS]
        ax1.plot(NS, counts, marker=".", label=f"kappa = {kappa:g}")
        print(f"kappa={kappa:g}: n_p_opt(100) = {counts[0]}, "
              f"n_p_opt(1000) = {counts[-1]}")
    ax1.set_xlabel("blocklength n")
    ax1.set_ylabel("optimal pilot count")
    ax1.grid(alpha=0.3)
    ax1.legend()

    n = 300
    for kappa in KAPPAS:
        cap = int(n // kappa)
        counts = range(1, cap + 1)
        snr = [estimation.ppc_effective_snr(n, p, kappa, POWER)
               for p in counts]
        best = estimation.optimal_pilot_count(n, kappa, POWER)
        ax2.plot(counts, snr, label=f"kappa = {kappa:g} (opt {best})")
        ax2.axvline(best, ls=":", lw=0.8, color="0.5")
    ax2.set_xlabel("pilot count n_p")
    ax2.set_ylabel("effective SNR (linear)")
    ax2.set_xlim(0, 60)
    ax2.grid(alpha=0.3)
    ax2.legend()
    fig.tight_layout()
    fig.savefig("pilot_overhead.pdf")
    print("wrote pilot_overhead.pdf")


if __name__ == "__main__":
    main()
