"""Command-line front end: scenario files in, CSV tables and plot scripts out.

Subcommands cover the standard study set (SNR sweep, pilot-count sweep,
latency and goodput frontiers, the sampling oracle) plus a plot-script
emitter. Every run writes a manifest recording the command, a content
hash of its inputs and the convention flags in force, so a rerun with
the same manifest reproduces the outputs byte for byte (given the seed,
for sampled data).

All dB-to-linear conversion happens here; the library modules speak
linear SNR only. Config files are flat INI text with [scenario],
[policy] and [sweep] sections; every key is optional and falls back to
the library defaults.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import re
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__, estimation, fbl, mathcore, montecarlo, optimizer, relaying

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INFEASIBLE = 4

FIGURES = ("fig2", "fig3", "fig4", "fig5")
# plot kind -> table it accepts
FIGURE_TABLES = {
    "fig2": "sweep_snr",
    "fig3": "sweep_kappa",
    "fig4": "latency",
    "fig5": "goodput",
}

DEFAULT_EPS_GRID = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5)
DEFAULT_SNR_GRID = (-5.0, 25.0, 1.0)
DEFAULT_KAPPAS = (2.0, 4.0, 8.0)
DEFAULT_NS = tuple(range(100, 1001, 100))
DEFAULT_N_RANGE = (3, 2000)


class ConfigError(Exception):
    """Bad config file or option values (exit code 2)."""


class DataError(Exception):
    """Input data missing or with the wrong schema (exit code 3)."""


class InfeasibleError(Exception):
    """No feasible operating point anywhere in the request (exit code 4)."""


# ---------------------------------------------------------------- config

_SCENARIO_FIELDS = {
    "power_db": float,
    "rate": float,
    "n_s": int,
    "n_r": int,
    "n_p": int,
    "scheme": str,
    "eta": float,
    "beta": float,
    "alpha": float,
    "symbol_period": float,
    "payload_bits": float,
    "power_mode": str,
    "gamma_y_mode": str,
    "mrc_n_mode": str,
    "mu_log_mode": str,
    "count_pilots_in_latency": bool,
}
_POLICY_FIELDS = {"kind": str, "kappa": float}
_SWEEP_FIELDS = {
    "snr_db_min": float,
    "snr_db_max": float,
    "snr_db_step": float,
    "schemes": str,
    "policies": str,
    "kappa_list": str,
    "n_list": str,
    "eps_grid": str,
    "n_min": int,
    "n_max": int,
    "rate_mode": str,
}
_SECTIONS = {
    "scenario": _SCENARIO_FIELDS,
    "policy": _POLICY_FIELDS,
    "sweep": _SWEEP_FIELDS,
}


def _key_line(text: str, key: str) -> int:
    pattern = re.compile(rf"^\s*{re.escape(key)}\s*[=:]", re.IGNORECASE)
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return 0


class ConfigFile:
    """Parsed INI config plus enough raw text to point errors at lines."""

    def __init__(self, path: str):
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {path}")
        self.path = path
        self.text = p.read_text(encoding="utf-8")
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        try:
            parser.read_string(self.text, source=path)
        except configparser.Error as exc:
            raise ConfigError(str(exc)) from exc
        self.sections: dict[str, dict] = {name: {} for name in _SECTIONS}
        for section in parser.sections():
            fields = _SECTIONS.get(section)
            if fields is None:
                raise ConfigError(f"{path}: unknown section [{section}]; "
                                  f"expected {sorted(_SECTIONS)}")
            for key, raw in parser.items(section):
                if key not in fields:
                    raise ConfigError(f"{path}:{_key_line(self.text, key)}: "
                                      f"unknown key '{key}' in [{section}]")
                try:
                    if fields[key] is bool:
                        value = parser.getboolean(section, key)
                    else:
                        value = fields[key](raw)
                except ValueError as exc:
                    raise ConfigError(
                        f"{path}:{_key_line(self.text, key)}: bad value for "
                        f"'{key}': {raw!r}") from exc
                self.sections[section][key] = value

    def fail(self, section: str, key: str, message: str) -> ConfigError:
        line = _key_line(self.text, key) if key in self.sections[section] else 0
        where = f"{self.path}:{line}" if line else self.path
        return ConfigError(f"{where}: {message}")

    @property
    def sha256(self) -> str:
        return hashlib.sha256(self.text.encode("utf-8")).hexdigest()


def _parse_list(text: str, cast, what: str):
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise ConfigError(f"{what} list is empty")
    try:
        return [cast(piece) for piece in items]
    except ValueError as exc:
        raise ConfigError(f"bad {what} list {text!r}") from exc


def build_scenario(conf: ConfigFile, args) -> relaying.ScenarioConfig:
    """Scenario from the config file with command-line overrides applied."""
    scen = dict(conf.sections["scenario"])
    pol = dict(conf.sections["policy"])
    kind = getattr(args, "policy", None) or pol.get("kind", "ppc")
    kappa = pol.get("kappa", 3.0)
    if getattr(args, "kappa", None) is not None:
        kappa = args.kappa
    try:
        policy = estimation.PilotPolicy(kind, kappa=kappa)
    except ValueError as exc:
        raise conf.fail("policy", "kind", str(exc)) from exc

    kwargs = {"power": mathcore.db_to_linear(scen.pop("power_db", 10.0)),
              "policy": policy}
    kwargs.update(scen)
    for flag in ("scheme", "gamma_y_mode", "mrc_n_mode", "mu_log_mode"):
        value = getattr(args, flag, None)
        if value is not None:
            kwargs[flag] = value
    try:
        return relaying.ScenarioConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"{conf.path}: {exc}") from exc


# ------------------------------------------------------------- artifacts

def _fmt_prob(value: float) -> str:
    return f"{value:.5e}"


def _fmt_num(value: float) -> str:
    return f"{value:.6g}"


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _out_dir(args) -> Path:
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def write_csv(directory: Path, name: str, table: str,
              columns: list[str], rows: list[list[str]]) -> tuple[str, str]:
    """Write one versioned CSV; returns (filename, content sha256)."""
    lines = [f"# fblink csv schema {SCHEMA_VERSION}; table {table}",
             ",".join(columns)]
    lines.extend(",".join(row) for row in rows)
    text = "\n".join(lines) + "\n"
    (directory / name).write_text(text, encoding="utf-8", newline="\n")
    return name, _sha256(text)


def _strip_out_flag(argv: list[str]) -> list[str]:
    """Drop --out so manifests match across output directories."""
    cleaned = []
    skip = False
    for arg in argv:
        if skip:
            skip = False
            continue
        if arg == "--out":
            skip = True
            continue
        if arg.startswith("--out="):
            continue
        cleaned.append(arg)
    return cleaned


def write_manifest(directory: Path, stem: str, args, *,
                   inputs: dict[str, str], outputs: dict[str, str],
                   config: dict | None = None,
                   scenario: relaying.ScenarioConfig | None = None,
                   seed: int | None = None,
                   samples: int | None = None) -> Path:
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "fblink", "version": __version__},
        "command": _strip_out_flag(args.argv),
        "inputs_sha256": inputs,
        "outputs_sha256": outputs,
    }
    if config is not None:
        manifest["config"] = config
    if scenario is not None:
        manifest["conventions"] = {
            "mu_log_mode": scenario.mu_log_mode,
            "gamma_y_mode": scenario.gamma_y_mode,
            "mrc_n_mode": scenario.mrc_n_mode,
            "power_mode": scenario.power_mode,
        }
    if seed is not None:
        manifest["seed"] = seed
    if samples is not None:
        manifest["samples"] = samples
    path = directory / f"{stem}.manifest.json"
    path.write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n",
                    encoding="utf-8", newline="\n")
    return path


def _emit(args, conf: ConfigFile, scenario, stem: str, table: str,
          columns: list[str], rows: list[list[str]],
          seed: int | None = None, samples: int | None = None) -> None:
    directory = _out_dir(args)
    name, digest = write_csv(directory, f"{stem}.csv", table, columns, rows)
    write_manifest(directory, stem, args,
                   inputs={Path(conf.path).name: conf.sha256},
                   outputs={name: digest},
                   config=conf.sections, scenario=scenario,
                   seed=seed, samples=samples)
    print(f"wrote {directory / name}")


# ----------------------------------------------------------- subcommands

def cmd_sweep_snr(args) -> None:
    """Outage across an SNR grid for scheme x policy combinations."""
    conf = ConfigFile(args.config)
    base = build_scenario(conf, args)
    sweep = conf.sections["sweep"]
    lo = sweep.get("snr_db_min", DEFAULT_SNR_GRID[0])
    hi = sweep.get("snr_db_max", DEFAULT_SNR_GRID[1])
    step = sweep.get("snr_db_step", DEFAULT_SNR_GRID[2])
    if step <= 0 or hi < lo:
        raise conf.fail("sweep", "snr_db_step",
                        f"need snr_db_min <= snr_db_max and a positive step, "
                        f"got [{lo}, {hi}] step {step}")
    grid = []
    snr = lo
    while snr <= hi + 1e-9:
        grid.append(snr)
        snr += step

    if args.scheme:
        schemes = [args.scheme]
    else:
        schemes = _parse_list(sweep.get("schemes", "dt,df"), str, "scheme")
    if args.policy:
        policies = [args.policy]
    else:
        policies = _parse_list(sweep.get("policies", "apc,ppc,pcsi"), str, "policy")
    for scheme in schemes:
        if scheme not in relaying.SCHEMES:
            raise conf.fail("sweep", "schemes",
                            f"scheme must be one of {relaying.SCHEMES}, got {scheme!r}")
    for kind in policies:
        if kind not in estimation.POLICY_KINDS:
            raise conf.fail("sweep", "policies",
                            f"policy must be one of {estimation.POLICY_KINDS}, "
                            f"got {kind!r}")

    rows = []
    for snr in grid:
        for scheme in schemes:
            for kind in policies:
                cfg = replace(base, power=mathcore.db_to_linear(snr),
                              scheme=scheme,
                              policy=estimation.PilotPolicy(kind, kappa=base.policy.kappa))
                budget = relaying.link_budget(cfg)
                if scheme == "df":
                    eps = relaying.outage_df(cfg).eps_df
                else:
                    eps = relaying.outage_direct(cfg)
                rows.append([_fmt_num(snr), scheme, kind, _fmt_prob(eps),
                             str(budget.n_p_s), _fmt_num(budget.gamma_z)])
    _emit(args, conf, base, "sweep_snr", "sweep_snr",
          ["snr_db", "scheme", "policy", "epsilon", "n_p_used", "gamma_eff"],
          rows)


def cmd_sweep_kappa(args) -> None:
    """Optimal pilot count across blocklength for each peak-power factor."""
    conf = ConfigFile(args.config)
    base = build_scenario(conf, args)
    sweep = conf.sections["sweep"]
    if args.kappa is not None:
        kappas = [args.kappa]
    elif "kappa_list" in sweep:
        kappas = _parse_list(sweep["kappa_list"], float, "kappa")
    else:
        kappas = list(DEFAULT_KAPPAS)
    for kappa in kappas:
        if kappa < 1.0:
            raise conf.fail("sweep", "kappa_list",
                            f"kappa entries must be >= 1, got {kappa}")
    if "n_list" in sweep:
        ns = _parse_list(sweep["n_list"], int, "blocklength")
    else:
        ns = list(DEFAULT_NS)
    for n in ns:
        if n < 2:
            raise conf.fail("sweep", "n_list",
                            f"blocklength entries must be >= 2, got {n}")

    rows = []
    for n in ns:
        for kappa in kappas:
            n_p = estimation.optimal_pilot_count(n, kappa, base.power)
            gamma = estimation.ppc_effective_snr(n, n_p, kappa, base.power)
            rows.append([str(n), _fmt_num(kappa), str(n_p), _fmt_num(gamma)])
    _emit(args, conf, base, "sweep_kappa", "sweep_kappa",
          ["n", "kappa", "n_p_opt", "gamma_eff"], rows)


def _eps_grid(args, conf: ConfigFile) -> list[float]:
    if args.eps_grid:
        grid = _parse_list(args.eps_grid, float, "epsilon")
    elif "eps_grid" in conf.sections["sweep"]:
        grid = _parse_list(conf.sections["sweep"]["eps_grid"], float, "epsilon")
    else:
        grid = list(DEFAULT_EPS_GRID)
    for eps in grid:
        if not 0.0 < eps < 1.0:
            raise ConfigError(f"epsilon targets must lie in (0, 1), got {eps}")
    return grid


def _frontier_rows(points) -> list[list[str]]:
    rows = []
    for pt in points:
        rows.append([_fmt_prob(pt.eps_target),
                     _fmt_num(100.0 * (1.0 - pt.eps_target)),
                     str(pt.n_opt), str(pt.n_p_opt),
                     _fmt_num(pt.latency_s * 1e3), _fmt_num(pt.goodput),
                     _fmt_bool(pt.feasible)])
    return rows


_FRONTIER_COLUMNS = ["epsilon_target", "reliability_pct", "n_opt", "n_p_opt",
                     "latency_ms", "goodput_bpcu", "feasible"]


def _cmd_frontier(args, objective: str) -> None:
    conf = ConfigFile(args.config)
    cfg = build_scenario(conf, args)
    sweep = conf.sections["sweep"]
    n_range = (sweep.get("n_min", DEFAULT_N_RANGE[0]),
               sweep.get("n_max", DEFAULT_N_RANGE[1]))
    rate_mode = sweep.get("rate_mode", "payload")
    grid = _eps_grid(args, conf)
    try:
        points = optimizer.frontier(cfg, grid, objective, n_range, rate_mode)
    except ValueError as exc:
        raise ConfigError(f"{conf.path}: {exc}") from exc
    _emit(args, conf, cfg, objective, objective, _FRONTIER_COLUMNS,
          _frontier_rows(points))
    if not any(pt.feasible for pt in points):
        raise InfeasibleError(
            f"no feasible blocklength in [{n_range[0]}, {n_range[1]}] "
            f"for any requested target")


def cmd_latency(args) -> None:
    """Latency-minimal operating point per reliability target."""
    _cmd_frontier(args, "latency")


def cmd_goodput(args) -> None:
    """Goodput-maximal operating point per reliability target."""
    _cmd_frontier(args, "goodput")


def cmd_simulate(args) -> None:
    """Monte Carlo estimates next to their analytic counterparts."""
    conf = ConfigFile(args.config)
    cfg = build_scenario(conf, args)
    if args.samples < 1:
        raise ConfigError(f"--samples must be >= 1, got {args.samples}")
    if not 0 <= args.seed < 2 ** 64:
        raise ConfigError(f"--seed must be a 64-bit unsigned integer, got {args.seed}")
    rows = []
    for mode in ("direct", "mrc_only", "relay_df"):
        spec = montecarlo.SimSpec(samples=args.samples, seed=args.seed,
                                  scenario=cfg, mode=mode)
        result = montecarlo.simulate_outage(spec)
        reference = montecarlo.analytic_reference(spec)
        gap = abs(result.estimate - reference)
        sigmas = gap / result.std_err if result.std_err > 0 else (
            0.0 if gap == 0.0 else float("inf"))
        rows.append([mode, _fmt_prob(result.estimate), _fmt_prob(result.std_err),
                     str(result.samples_used), _fmt_bool(result.importance_sampled),
                     _fmt_prob(reference), _fmt_num(sigmas)])
    _emit(args, conf, cfg, "simulate", "simulate",
          ["mode", "epsilon_hat", "std_err", "samples", "importance_sampled",
           "epsilon_analytic", "abs_dev_sigmas"],
          rows, seed=args.seed, samples=args.samples)


# ----------------------------------------------------------------- plots

_PLOT_BODIES = {
    "fig2": '''
series = {}
for row in rows:
    label = f"{row['scheme'].upper()} {row['policy'].upper()}"
    series.setdefault(label, []).append((float(row["snr_db"]),
                                         float(row["epsilon"])))
fig, ax = plt.subplots(figsize=(6.4, 4.4))
for label in sorted(series):
    pts = sorted(series[label])
    ax.semilogy([p[0] for p in pts], [p[1] for p in pts], label=label)
ymin, ymax = ax.get_ylim()
ax.axhspan(ymin, 1e-3, color="0.90", zorder=0)
ax.set_ylim(ymin, ymax)
ax.set_xlabel("average SNR per link (dB)")
ax.set_ylabel("block error probability")
ax.legend(fontsize=8)
''',
    "fig3": '''
series = {}
for row in rows:
    series.setdefault(float(row["kappa"]), []).append((int(row["n"]),
                                                       int(row["n_p_opt"])))
fig, ax = plt.subplots(figsize=(6.4, 4.4))
for kappa in sorted(series):
    pts = sorted(series[kappa])
    ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
            label=f"kappa = {kappa:g}")
ax.set_xlabel("blocklength (channel uses)")
ax.set_ylabel("optimal pilot count")
ax.legend(fontsize=8)
''',
    "fig4": '''
feasible = [row for row in rows if row["feasible"] == "true"]
fig, ax = plt.subplots(figsize=(6.4, 4.4))
pts = sorted((float(row["epsilon_target"]), float(row["latency_ms"]))
             for row in feasible)
ax.semilogx([p[0] for p in pts], [p[1] for p in pts], marker="o")
xmin, xmax = ax.get_xlim()
ax.axvspan(xmin, 1e-3, color="0.90", zorder=0)
ax.set_xlim(xmin, xmax)
ax.set_xlabel("block error target")
ax.set_ylabel("minimum latency (ms)")
''',
    "fig5": '''
feasible = [row for row in rows if row["feasible"] == "true"]
fig, ax = plt.subplots(figsize=(6.4, 4.4))
pts = sorted((float(row["epsilon_target"]), float(row["goodput_bpcu"]))
             for row in feasible)
ax.semilogx([p[0] for p in pts], [p[1] for p in pts], marker="o")
xmin, xmax = ax.get_xlim()
ax.axvspan(xmin, 1e-3, color="0.90", zorder=0)
ax.set_xlim(xmin, xmax)
ax.set_xlabel("block error target")
ax.set_ylabel("maximum goodput (bits per channel use)")
''',
}

_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""{title}

Generated, self-contained: the source table is embedded below and the
figure is written as a vector PDF next to this script.
"""

import csv
import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

DATA = {data!r}

rows = list(csv.DictReader(io.StringIO(DATA.split("\\n", 1)[1])))
{body}
ax.grid(True, which="both", alpha=0.3)
fig.tight_layout()
target = Path(__file__).with_suffix(".pdf")
fig.savefig(target)
print(f"wrote {{target}}")
'''

_PLOT_TITLES = {
    "fig2": "Block error probability against per-link SNR.",
    "fig3": "Optimal pilot count against blocklength.",
    "fig4": "Latency frontier against the block error target.",
    "fig5": "Goodput frontier against the block error target.",
}


def cmd_plot(args) -> None:
    """Emit a standalone plot script for a previously written table."""
    path = Path(args.csv)
    if not path.is_file():
        raise DataError(f"csv file not found: {args.csv}")
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    head = re.match(r"#\s*fblink csv schema (\d+); table (\S+)",
                    lines[0] if lines else "")
    if head is None:
        raise DataError(f"{args.csv}: missing schema line; not a table "
                        f"written by this tool?")
    if int(head.group(1)) != SCHEMA_VERSION:
        raise DataError(f"{args.csv}: schema {head.group(1)} unsupported "
                        f"(expected {SCHEMA_VERSION})")
    table = head.group(2)
    expected = FIGURE_TABLES[args.figure]
    if table != expected:
        raise DataError(f"{args.csv}: table '{table}' does not fit "
                        f"{args.figure} (needs '{expected}')")

    script = _PLOT_TEMPLATE.format(title=_PLOT_TITLES[args.figure],
                                   data=text, body=_PLOT_BODIES[args.figure])
    directory = _out_dir(args)
    name = f"{args.figure}_plot.py"
    (directory / name).write_text(script, encoding="utf-8", newline="\n")
    write_manifest(directory, f"{args.figure}_plot", args,
                   inputs={path.name: _sha256(text)},
                   outputs={name: _sha256(script)})
    print(f"wrote {directory / name}")


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fblink",
        description="Short-packet relay link reliability, latency and goodput.")
    sub = parser.add_subparsers(dest="subcommand", required=True,
                                metavar="SUBCOMMAND")

    def common(sp):
        sp.add_argument("--config", required=True, metavar="PATH",
                        help="INI scenario file")
        sp.add_argument("--out", default=".", metavar="DIR",
                        help="output directory (default: current)")
        sp.add_argument("--scheme", choices=relaying.SCHEMES,
                        help="restrict to one transmission scheme")
        sp.add_argument("--policy", choices=estimation.POLICY_KINDS,
                        help="restrict to one pilot power policy")
        sp.add_argument("--kappa", type=float, metavar="F",
                        help="peak pilot power factor override")
        sp.add_argument("--gamma-y-mode", dest="gamma_y_mode",
                        choices=relaying.GAMMA_Y_MODES,
                        help="relay-destination budget convention")
        sp.add_argument("--mrc-n-mode", dest="mrc_n_mode",
                        choices=relaying.MRC_N_MODES,
                        help="blocklength entering the combined-copy error")
        sp.add_argument("--mu-log-mode", dest="mu_log_mode",
                        choices=fbl.MU_LOG_MODES,
                        help="log base in the closed-form outage scale factor")

    sp = sub.add_parser("sweep-snr",
                        help="outage vs SNR for scheme/policy combinations")
    common(sp)
    sp.set_defaults(func=cmd_sweep_snr)

    sp = sub.add_parser("sweep-kappa",
                        help="optimal pilot count vs blocklength")
    common(sp)
    sp.set_defaults(func=cmd_sweep_kappa)

    for name, func, blurb in (
            ("latency", cmd_latency, "latency-minimal frontier per target"),
            ("goodput", cmd_goodput, "goodput-maximal frontier per target")):
        sp = sub.add_parser(name, help=blurb)
        common(sp)
        sp.add_argument("--eps-grid", metavar="LIST",
                        help="comma-separated block error targets")
        sp.set_defaults(func=func)

    sp = sub.add_parser("simulate",
                        help="Monte Carlo oracle vs analytic values")
    common(sp)
    sp.add_argument("--seed", type=int, default=0, metavar="U64",
                    help="stream seed (default 0)")
    sp.add_argument("--samples", type=int, default=1_000_000, metavar="N",
                    help="fading draws per mode (default 1e6)")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("plot", help="emit a standalone plot script for a CSV")
    sp.add_argument("csv", metavar="CSV", help="table written by a subcommand")
    sp.add_argument("--figure", required=True, choices=FIGURES,
                    help="plot kind; must match the table")
    sp.add_argument("--out", default=".", metavar="DIR",
                    help="output directory (default: current)")
    sp.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
