#!/usr/bin/env python3
"""Minimum latency needed to deliver a 1024-bit packet at each reliability.

For each outage target the optimizer picks the shortest relayed block
(and its pilot split) whose composite outage meets the target; latency
counts the data symbols of both hops at an 8.33 us symbol period.
Infeasible targets are reported, not plotted.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from fblink import mathcore, optimizer, relaying
from fblink.estimation import PilotPolicy

TARGETS = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4)


def main():
    fig, ax = plt.subplots(figsize=(7, 5))
    for p_db in (20.0, 10.0):
        cfg = relaying.ScenarioConfig(power=mathcore.db_to_linear(p_db),
                                      scheme="df", payload_bits=1024.0,
                                      policy=PilotPolicy("ppc", kappa=2.0))
        xs, ys = [], []
        for target in TARGETS:
            pt = optimizer.min_latency(cfg, target, (3, 2000))
            if not pt.feasible:
                print(f"{p_db:.0f} dB, target {target:.0e}: infeasible "
                      f"within n <= 2000")
                continue
            xs.append(1.0 - target)
            ys.append(pt.latency_s * 1e3)
            print(f"{p_db:.0f} dB, target {target:.0e}: n = {pt.n_opt}, "
                  f"n_p = {pt.n_p_opt}, latency = {pt.latency_s*1e3:.3f} ms")
        ax.plot(xs, ys, marker="o", label=f"{p_db:.0f} dB per link")
    ax.set_xlabel("reliability 1 - eps")
    ax.set_ylabel("minimum latency (ms)")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig("latency_frontier.pdf")
    print("wrote latency_frontier.pdf")


if __name__ == "__main__":
    main()
