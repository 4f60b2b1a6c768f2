"""Command-line entry point: run scenarios, run presets, check configurations."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .csvio import emit_field_csv, emit_trace_csv
from .diagnostics import check_decay_condition, s0_sup_protected
from .errors import FirebreakError
from .presets import PRESET_NAMES, run_preset
from .scenario import parse_scenario
from .stepper import simulate, stability_advisory


def _load(path: str):
    with open(path) as fh:
        return parse_scenario(fh.read())


def _cmd_run(args) -> int:
    scenario = _load(args.scenario)
    if args.output_every is not None:
        from dataclasses import replace

        scenario = replace(scenario, output_every=args.output_every)
    report = stability_advisory(scenario.grid, scenario.params, scenario.wind)
    if not report.ok:
        print(
            f"warning: explicit step size may be unstable "
            f"(dt*rate = {report.lhs:.3g} > 1); largest stable dt ~ {report.max_stable_dt:.3g} s",
            file=sys.stderr,
        )
    artifacts = simulate(
        scenario.initial_state(),
        scenario.grid,
        scenario.geom,
        scenario.params,
        scenario.wind,
        scenario.run_config(),
        snapshot_times=(scenario.t_final,),
        guard=scenario.guard,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    emit_trace_csv(artifacts.trace, out / "trace.csv")
    emit_field_csv(artifacts.snapshots[scenario.t_final], scenario.grid, out / "final_field.csv")
    print(f"ran {artifacts.n_steps} steps; outputs in {out}")
    return 0


def _cmd_preset(args) -> int:
    paths = run_preset(args.name, args.out, output_every=args.output_every)
    for path in paths:
        print(path)
    return 0


def _cmd_check(args) -> int:
    scenario = _load(args.scenario)
    s0_sup = s0_sup_protected(scenario.initial_state().S, scenario.grid)
    condition = check_decay_condition(scenario.params, scenario.wind, scenario.geom, s0_sup)
    verdict = "holds" if condition.holds else "FAILS"
    print(f"decay condition {verdict}: certified rate = {condition.rate:.6g} 1/s")
    report = stability_advisory(scenario.grid, scenario.params, scenario.wind)
    if report.ok:
        print(f"step size ok: dt*rate = {report.lhs:.6g} <= 1 (largest stable dt ~ {report.max_stable_dt:.6g} s)")
    else:
        print(f"step size warning: dt*rate = {report.lhs:.6g} > 1; largest stable dt ~ {report.max_stable_dt:.6g} s")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="firebreak",
        description="Simulate boundary heat-flux control of a wildfire temperature/fuel model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario file and emit trace + final field CSVs")
    p_run.add_argument("scenario", help="path to a scenario document")
    p_run.add_argument("--out", default=".", help="output directory (default: current)")
    p_run.add_argument("--output-every", type=int, default=None, help="trace stride in steps")
    p_run.set_defaults(func=_cmd_run)

    p_preset = sub.add_parser("preset", help="run a canned experiment")
    p_preset.add_argument("name", choices=PRESET_NAMES)
    p_preset.add_argument("--out", required=True, help="output directory")
    p_preset.add_argument("--output-every", type=int, default=None, help="trace stride in steps")
    p_preset.set_defaults(func=_cmd_preset)

    p_check = sub.add_parser("check", help="validate a scenario without simulating")
    p_check.add_argument("scenario", help="path to a scenario document")
    p_check.set_defaults(func=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FirebreakError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"io error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
