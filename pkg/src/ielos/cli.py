"""Command-line front end.

Exit codes:
    0  success (a divergent run still exits 0; see ``diverged`` in its metrics)
    2  bad command-line usage
    3  input file not found
    4  scenario file could not be parsed or failed validation
    5  unknown scenario name
    6  malformed telemetry CSV
    7  unknown plot kind
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import plotting, telemetry
from .config import ConfigError, UnknownScenarioError, load_scenarios, lookup
from .sim import RunMetrics, Scenario, metrics, run, with_overrides

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISSING_FILE = 3
EXIT_CONFIG = 4
EXIT_UNKNOWN_SCENARIO = 5
EXIT_BAD_TELEMETRY = 6
EXIT_UNKNOWN_KIND = 7

log = logging.getLogger("ielos")

TABLE_COLUMNS = ("name", "mae_xe", "mae_ye", "overshoot_ye", "mean_abs_torque", "max_sideslip_rate", "diverged")


def _resolve(config: Optional[str], names: Sequence[str], dt: Optional[float],
             duration: Optional[float]) -> List[Scenario]:
    scenarios = load_scenarios(config)
    return [with_overrides(lookup(scenarios, n), dt=dt, duration=duration) for n in names]


def _run_one(sc: Scenario, out_dir: Path) -> RunMetrics:
    result = run(sc)
    m = metrics(result)
    telemetry.write_csv(result, out_dir / f"{sc.name}.csv")
    (out_dir / f"{sc.name}.metrics").write_text(telemetry.emit_metrics(m, result))
    if result.diverged:
        log.warning("%s diverged at t = %.2f s", sc.name, result.divergence_time)
    return m


def format_table(rows: Sequence[RunMetrics]) -> str:
    cells = [list(TABLE_COLUMNS)]
    for m in rows:
        d = m.as_dict()
        cells.append([d["name"]] + [f"{d[c]:.4f}" for c in TABLE_COLUMNS[1:-1]] + [str(d["diverged"]).lower()])
    widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_COLUMNS))]
    return "\n".join("  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths)))
                     for row in cells) + "\n"


def table_csv(rows: Sequence[RunMetrics]) -> str:
    lines = [",".join(TABLE_COLUMNS)]
    for m in rows:
        d = m.as_dict()
        lines.append(",".join([d["name"]] + [repr(d[c]) for c in TABLE_COLUMNS[1:-1]] + [str(d["diverged"]).lower()]))
    return "\n".join(lines) + "\n"


def cmd_run(config: Optional[str], name: str, out_dir: str, dt: Optional[float] = None,
            duration: Optional[float] = None) -> int:
    (sc,) = _resolve(config, [name], dt, duration)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    m = _run_one(sc, out)
    print(format_table([m]), end="")
    return EXIT_OK


def cmd_compare(config: Optional[str], names: Sequence[str], out_dir: str, dt: Optional[float] = None,
                duration: Optional[float] = None) -> int:
    scenarios = _resolve(config, names, dt, duration)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [_run_one(sc, out) for sc in scenarios]
    text = format_table(rows)
    (out / "comparison.txt").write_text(text)
    (out / "comparison.csv").write_text(table_csv(rows))
    print(text, end="")
    return EXIT_OK


def cmd_plot(telemetry_csv: str, kind: str, out_path: str) -> int:
    if kind not in plotting.PLOT_KINDS:
        print(f"error: unknown plot kind {kind!r}; choose from {', '.join(plotting.PLOT_KINDS)}", file=sys.stderr)
        return EXIT_UNKNOWN_KIND
    columns = telemetry.read_csv(telemetry_csv)
    if len(columns["t"]) == 0:
        raise telemetry.TelemetryError("telemetry file has no rows")
    plotting.render(columns, kind, out_path, title=Path(telemetry_csv).stem)
    return EXIT_OK


def cmd_presets(config: Optional[str] = None) -> int:
    for name, sc in load_scenarios(config).items():
        p = sc.params
        extras = ", ".join(f"{k}={getattr(p, k)}" for k in ("k", "l", "td_r", "td_h") if getattr(p, k) is not None)
        print(f"{name:12s} {sc.law.value:6s} delta={p.delta} kappa={p.kappa}"
              + (f", {extras}" if extras else "") + f", speed={sc.desired_speed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ielos", description="LOS-family path-following simulations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="YAML scenario file (built-in presets are always available)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--dt-override", type=float, dest="dt", help="integration step, s")
        p.add_argument("--duration-override", type=float, dest="duration", help="run length, s")

    p_run = sub.add_parser("run", help="run one scenario")
    p_run.add_argument("scenario")
    common(p_run)

    p_cmp = sub.add_parser("compare", help="run several scenarios and tabulate their metrics")
    p_cmp.add_argument("scenarios", nargs="+")
    common(p_cmp)

    p_plot = sub.add_parser("plot", help="render a figure from a telemetry CSV")
    p_plot.add_argument("telemetry")
    p_plot.add_argument("kind", help="one of: " + ", ".join(plotting.PLOT_KINDS))
    p_plot.add_argument("--out", required=True, help="image path (format from the extension)")

    p_pre = sub.add_parser("presets", help="list scenarios")
    p_pre.add_argument("--config")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "run":
            return cmd_run(args.config, args.scenario, args.out, args.dt, args.duration)
        if args.command == "compare":
            return cmd_compare(args.config, args.scenarios, args.out, args.dt, args.duration)
        if args.command == "plot":
            return cmd_plot(args.telemetry, args.kind, args.out)
        return cmd_presets(args.config)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except UnknownScenarioError as exc:
        print(f"error: unknown scenario {exc.args[0]!r}", file=sys.stderr)
        return EXIT_UNKNOWN_SCENARIO
    except telemetry.TelemetryError as exc:
        print(f"error: bad telemetry: {exc}", file=sys.stderr)
        return EXIT_BAD_TELEMETRY
    except (ConfigError, ValueError) as exc:
        print(f"error: invalid scenario: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
