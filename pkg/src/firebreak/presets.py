"""Canned experiments emitting CSV data for the six reference figures.

All presets share one setup: a 50 m x 50 m domain with the right third
protected, a constant unit horizontal wind blowing into the protected region,
and a 1000 K Gaussian hot spot at the domain centre. The grid is 81 x 80 so
the protected edge at two thirds of the domain width lands exactly on column
54 (an 80 x 80 grid cannot align that edge).

Presets:

* ``fig1_ic``         initial temperature field
* ``fig2_openloop``   field at t = 20 s without actuation
* ``fig2_feedback``   field at t = 20 s under the known-wind controller
* ``fig3_energy``     energy traces for all three regimes plus the envelope
* ``fig4_controls``   imposed flux along each protected edge over time
* ``fig5_adaptive``   adaptation values along each protected edge over time
* ``fig6_c_zero``     traces and fields with heat loss disabled (C = 0)
"""

from __future__ import annotations

import os
from dataclasses import replace
from pathlib import Path

from .control import ADAPTIVE, KNOWN_WIND, OPEN_LOOP, ControllerSpec
from .csvio import emit_bound_csv, emit_edge_trace_csv, emit_field_csv, emit_trace_csv
from .errors import UnknownPresetError
from .geometry import DomainGeometry, build_grid
from .physics import PhysicalParameters, WindField
from .scenario import GAUSSIAN, InitialCondition, Scenario, serialize_scenario
from .stepper import RunArtifacts, simulate

PRESET_NAMES = (
    "fig1_ic",
    "fig2_openloop",
    "fig2_feedback",
    "fig3_energy",
    "fig4_controls",
    "fig5_adaptive",
    "fig6_c_zero",
)

_CONTROLLERS = {
    OPEN_LOOP: ControllerSpec(kind=OPEN_LOOP),
    KNOWN_WIND: ControllerSpec(kind=KNOWN_WIND, k=1.0),
    ADAPTIVE: ControllerSpec(kind=ADAPTIVE, k=1.0, lam=0.1, v_hat_init=0.0),
}


def base_scenario(controller: ControllerSpec, heat_loss: float = 7.2558e-4) -> Scenario:
    """The shared experimental setup with the given regime and heat-loss coefficient."""
    geom = DomainGeometry(L1=50.0, L2=50.0, w_frac=2.0 / 3.0)
    return Scenario(
        geom=geom,
        grid=build_grid(geom, n_x=81, n_y=80, dt=0.01),
        params=PhysicalParameters(
            epsilon=2.1360e-1,
            A=1.8793e2,
            C=heat_loss,
            C_S=0.0,
            gamma=5.5849e2,
            T_a=300.0,
        ),
        wind=WindField(vx=1.0, vy=0.0),
        ic=InitialCondition(kind=GAUSSIAN, T_c=1000.0, width=10.0, center=(25.0, 25.0)),
        controller=controller,
        t_final=20.0,
        output_every=1,
    )


def preset_scenario(name: str, regime: str = KNOWN_WIND) -> Scenario:
    """The scenario a preset runs (for multi-regime presets, pick with ``regime``)."""
    if name not in PRESET_NAMES:
        raise UnknownPresetError(name)
    heat_loss = 0.0 if name == "fig6_c_zero" else 7.2558e-4
    if name in ("fig3_energy", "fig6_c_zero"):
        controller = _CONTROLLERS[regime]
    elif name == "fig2_openloop":
        controller = _CONTROLLERS[OPEN_LOOP]
    elif name == "fig5_adaptive":
        controller = _CONTROLLERS[ADAPTIVE]
    else:
        controller = _CONTROLLERS[KNOWN_WIND]
    return base_scenario(controller, heat_loss=heat_loss)


def _run(scenario: Scenario, output_every: int | None, **kwargs) -> RunArtifacts:
    cfg = scenario.run_config()
    if output_every is not None:
        cfg = replace(cfg, output_every=output_every)
    return simulate(
        scenario.initial_state(),
        scenario.grid,
        scenario.geom,
        scenario.params,
        scenario.wind,
        cfg,
        guard=scenario.guard,
        **kwargs,
    )


def _emit_edges(artifacts: RunArtifacts, scenario: Scenario, stem: str, out: Path, which: str) -> list[Path]:
    grid = scenario.grid
    trace = artifacts.trace
    coords = {
        "left": (grid.x2_nodes, "x2"),
        "right": (grid.x2_nodes, "x2"),
        "bottom": (grid.x1_nodes[grid.n_star + 1 : grid.n_x], "x1"),
        "top": (grid.x1_nodes[grid.n_star + 1 : grid.n_x], "x1"),
    }
    data = trace.flux_edges if which == "flux" else trace.v_hat_edges
    paths = []
    for edge, (axis, label) in coords.items():
        path = out / f"{stem}_{edge}.csv"
        emit_edge_trace_csv(trace.flux_times, data[edge], axis, label, path)
        paths.append(path)
    return paths


def run_preset(name: str, out_dir: str | os.PathLike, output_every: int | None = None) -> list[Path]:
    """Execute a preset and write its CSV outputs into ``out_dir``.

    Returns the list of written paths. Raises :class:`UnknownPresetError` for
    names outside :data:`PRESET_NAMES`.
    """
    if name not in PRESET_NAMES:
        raise UnknownPresetError(name)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit_scenario(scenario: Scenario, filename: str = "scenario.txt"):
        path = out / filename
        with open(path, "w", newline="") as fh:
            fh.write(serialize_scenario(scenario))
        written.append(path)

    if name == "fig1_ic":
        scenario = preset_scenario(name)
        path = out / "initial_field.csv"
        emit_field_csv(scenario.initial_state(), scenario.grid, path)
        written.append(path)
        emit_scenario(scenario)

    elif name in ("fig2_openloop", "fig2_feedback"):
        scenario = preset_scenario(name)
        artifacts = _run(scenario, output_every, snapshot_times=(20.0,))
        path = out / "field_t20.csv"
        emit_field_csv(artifacts.snapshots[20.0], scenario.grid, path)
        written.append(path)
        emit_scenario(scenario)

    elif name in ("fig3_energy", "fig6_c_zero"):
        with_fields = name == "fig6_c_zero"
        bound_written = False
        for regime in (OPEN_LOOP, KNOWN_WIND, ADAPTIVE):
            scenario = preset_scenario(name, regime=regime)
            artifacts = _run(scenario, output_every, snapshot_times=(20.0,) if with_fields else ())
            path = out / f"{regime}_trace.csv"
            emit_trace_csv(artifacts.trace, path)
            written.append(path)
            if with_fields:
                path = out / f"{regime}_field_t20.csv"
                emit_field_csv(artifacts.snapshots[20.0], scenario.grid, path)
                written.append(path)
            if not bound_written:
                path = out / "bound.csv"
                emit_bound_csv(artifacts.trace.times, artifacts.trace.bound, path)
                written.append(path)
                bound_written = True
            emit_scenario(scenario, f"scenario_{regime}.txt")

    elif name == "fig4_controls":
        scenario = preset_scenario(name)
        artifacts = _run(scenario, output_every)
        written += _emit_edges(artifacts, scenario, "kappa", out, "flux")
        emit_scenario(scenario)

    elif name == "fig5_adaptive":
        scenario = preset_scenario(name)
        artifacts = _run(scenario, output_every)
        written += _emit_edges(artifacts, scenario, "v_hat", out, "v_hat")
        emit_scenario(scenario)

    return written
