#!/usr/bin/env python3
"""Monte Carlo spot-check of the quadrature outage values.

Runs a short sampling pass for one scenario per mode and prints the
estimate next to the matching quadrature value in units of the standard
error, then verifies the channel-estimator variances against their
closed forms at a few pilot energies.
"""

import math

from fblink import montecarlo, relaying
from fblink.estimation import PilotPolicy

SAMPLES = 2_000_000
CASES = [
    ("direct", relaying.ScenarioConfig(power=10.0, rate=0.5,
                                       policy=PilotPolicy("ppc", kappa=2.0))),
    ("mrc_only", relaying.ScenarioConfig(power=1.0, rate=0.5, scheme="df",
                                         policy=PilotPolicy("ppc", kappa=2.0))),
    ("relay_df", relaying.ScenarioConfig(power=3.162, rate=0.5, scheme="df",
                                         policy=PilotPolicy("ppc", kappa=2.0))),
]


def main():
    print(f"{'mode':<10} {'quadrature':>12} {'simulated':>12} {'dev':>8}")
    for i, (mode, cfg) in enumerate(CASES):
        spec = montecarlo.SimSpec(samples=SAMPLES, seed=10 + i,
                                  scenario=cfg, mode=mode)
        ref = montecarlo.analytic_reference(spec)
        res = montecarlo.simulate_outage(spec)
        dev = (res.estimate - ref) / res.std_err
        print(f"{mode:<10} {ref:12.4e} {res.estimate:12.4e} {dev:+7.2f}s")

    cfg = relaying.ScenarioConfig(power=10.0, n_p=4,
                                  policy=PilotPolicy("ppc", kappa=2.0))
    n = 500_000
    print(f"\n{'energy':>8} {'gain':>20} {'error power':>20}")
    for i, energy in enumerate((0.1, 1.0, 10.0, 100.0)):
        spec = montecarlo.SimSpec(samples=n, seed=20 + i, scenario=cfg,
                                  mode="estimator_check")
        est, err = montecarlo.simulate_estimator(spec, pilot_energy=energy)
        t_est = energy / (energy + 1.0)
        t_err = 1.0 / (energy + 1.0)
        print(f"{energy:8g} {est:9.5f} vs {t_est:8.5f} "
              f"{err:9.5f} vs {t_err:8.5f}")


if __name__ == "__main__":
    main()
