"""Explicit Euler time integration interleaving interior updates and closures.

Each step advances temperature on the interior nodes and fuel everywhere from
the same time level, then applies the outer no-flux closure and the active
protected-boundary closure. Boundary nodes never receive an interior update;
their values come from the closures alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import control
from .control import AdaptiveState, ControllerSpec, boundary_flux_samples, edge_slices
from .diagnostics import (
    EnergyTrace,
    adaptive_energy,
    decay_envelope,
    decay_rate,
    deviation_energy,
    s0_sup_protected,
)
from .errors import NumericalBlowupError
from .geometry import DomainGeometry, Grid
from .physics import PhysicalParameters, State, WindField, fuel_rhs_field, temperature_rhs_field

DEFAULT_GUARD = 1.0e6


@dataclass(frozen=True)
class RunConfig:
    """Horizon, step size, trace stride, and the boundary regime of a run."""

    t_final: float
    dt: float
    controller: ControllerSpec
    output_every: int = 1

    def __post_init__(self):
        if self.t_final <= 0 or self.dt <= 0:
            raise ValueError("t_final and dt must be positive")
        if self.output_every < 1:
            raise ValueError("output_every must be >= 1")


@dataclass
class RunArtifacts:
    """Everything a run produces: final fields, traces, and snapshots."""

    final_state: State
    final_adaptive: AdaptiveState | None
    trace: EnergyTrace
    snapshots: dict[float, State] = field(default_factory=dict)
    n_steps: int = 0
    rate: float = 0.0
    energy0: float = 0.0


def step(
    state: State,
    ada: AdaptiveState | None,
    grid: Grid,
    params: PhysicalParameters,
    wind: WindField,
    geom: DomainGeometry,
    ctrl: ControllerSpec,
    dt: float,
    guard: float = DEFAULT_GUARD,
) -> tuple[State, AdaptiveState | None]:
    """One explicit Euler step followed by the boundary closures.

    Fuel is clamped to ``[0, S_old]`` node-wise: explicit Euler could
    otherwise undershoot zero for large ``C_S * dt``, leaving the physical
    range the model assumes.

    Raises
    ------
    NumericalBlowupError
        If the updated temperature is non-finite or exceeds ``guard`` in
        magnitude.
    """
    T, S = state.T, state.S
    S_new = np.clip(S + dt * fuel_rhs_field(T, S, params), 0.0, S)
    T_new = T.copy()
    T_new[1:-1, 1:-1] += dt * temperature_rhs_field(T, S, grid, params, wind)
    # the protected-edge column is a boundary, not an interior node
    T_new[grid.n_star, 1:-1] = T[grid.n_star, 1:-1]

    new_state = State(T=T_new, S=S_new)
    control.apply_outer_boundary(new_state, grid)
    new_ada = ada
    if ctrl.kind == control.OPEN_LOOP:
        control.apply_open_loop(new_state, grid)
    elif ctrl.kind == control.KNOWN_WIND:
        coeffs = control.edge_coefficients(ctrl.k, params, geom)
        control.apply_feedback(new_state, grid, coeffs, params)
    else:
        new_state, new_ada = control.apply_adaptive(new_state, grid, ctrl, ada, params, geom, dt)

    if not np.isfinite(T_new).all() or np.abs(T_new).max() > guard:
        raise NumericalBlowupError(f"temperature left the guard band |T| <= {guard:g}")
    return new_state, new_ada


def step_diffusion_reflective(state: State, grid: Grid, params: PhysicalParameters, dt: float) -> State:
    """Pure-diffusion Euler step with zero-flux faces on every grid edge.

    Every node, boundaries included, is updated with the 5-point stencil where
    out-of-grid neighbours mirror the node itself across the face. The stencil
    then telescopes, so the node sum of T is conserved; this is the reference
    configuration for checking discrete conservation.
    """
    T = state.T
    Tp = np.pad(T, 1, mode="edge")
    lap = (Tp[2:, 1:-1] - 2.0 * T + Tp[:-2, 1:-1]) / grid.dx1 ** 2 + (
        Tp[1:-1, 2:] - 2.0 * T + Tp[1:-1, :-2]
    ) / grid.dx2 ** 2
    return State(T=T + dt * params.epsilon * lap, S=state.S.copy())


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of the explicit-scheme step-size check (advisory only)."""

    ok: bool
    lhs: float
    max_stable_dt: float


def stability_advisory(grid: Grid, params: PhysicalParameters, wind: WindField) -> StabilityReport:
    """Check ``dt * (2 eps (1/dx1^2 + 1/dx2^2) + |vx|/dx1 + |vy|/dx2 + A C) <= 1``.

    Returns the largest step size satisfying the bound alongside the verdict;
    never blocks execution.
    """
    rate = (
        2.0 * params.epsilon * (1.0 / grid.dx1 ** 2 + 1.0 / grid.dx2 ** 2)
        + abs(wind.vx) / grid.dx1
        + abs(wind.vy) / grid.dx2
        + params.A * params.C
    )
    lhs = grid.dt * rate
    return StabilityReport(ok=lhs <= 1.0, lhs=lhs, max_stable_dt=1.0 / rate)


def simulate(
    initial: State,
    grid: Grid,
    geom: DomainGeometry,
    params: PhysicalParameters,
    wind: WindField,
    cfg: RunConfig,
    snapshot_times: tuple[float, ...] = (),
    flux_every: int = 10,
    guard: float = DEFAULT_GUARD,
) -> RunArtifacts:
    """Run ``ceil(t_final / dt)`` steps, recording diagnostics along the way.

    The energy trace is sampled every ``output_every`` steps (step 0 and the
    final step always included); protected-edge flux and adaptation samples
    use the ``flux_every`` stride. Snapshots are deep copies of the state at
    the steps nearest the requested times. Single-threaded and bitwise
    deterministic for a fixed configuration.

    Raises
    ------
    NumericalBlowupError
        Re-raised from :func:`step` with the offending step index attached.
    """
    if not math.isclose(cfg.dt, grid.dt, rel_tol=1e-12):
        raise ValueError(f"run dt {cfg.dt} does not match grid dt {grid.dt}")
    ctrl = cfg.controller
    if ctrl.kind == control.KNOWN_WIND:
        # refuse degenerate ghost maps before spending any steps
        control.feedback_denominators(grid, control.edge_coefficients(ctrl.k, params, geom))

    n_steps = math.ceil(cfg.t_final / cfg.dt - 1e-9)
    rate = decay_rate(params, wind, geom, s0_sup_protected(initial.S, grid))
    adaptive = ctrl.kind == control.ADAPTIVE

    state = initial.copy()
    ada = control.initial_adaptive_state(ctrl, grid) if adaptive else None
    snapshot_steps = {int(round(t / cfg.dt)): t for t in snapshot_times}
    slices = edge_slices(grid)

    times, energies, z_values = [], [], []
    flux_times: list[float] = []
    flux_samples: dict[str, list[np.ndarray]] = {e: [] for e in slices}
    v_hat_samples: dict[str, list[np.ndarray]] = {e: [] for e in slices}
    snapshots: dict[float, State] = {}

    def record_energy(t: float):
        times.append(t)
        energies.append(deviation_energy(state, grid, params))
        if adaptive:
            z_values.append(adaptive_energy(state, ada, grid, params, wind.v_bar, ctrl.lam))

    def record_flux(t: float):
        flux_times.append(t)
        for edge, values in boundary_flux_samples(state, grid).items():
            flux_samples[edge].append(values.copy())
        if adaptive:
            for edge, sl in slices.items():
                v_hat_samples[edge].append(ada.values[sl].copy())

    record_energy(0.0)
    record_flux(0.0)
    if 0 in snapshot_steps:
        snapshots[snapshot_steps[0]] = state.copy()

    for s in range(1, n_steps + 1):
        try:
            state, ada = step(state, ada, grid, params, wind, geom, ctrl, cfg.dt, guard=guard)
        except NumericalBlowupError as err:
            raise NumericalBlowupError(f"{err} (step {s})", step_index=s) from err
        t = s * cfg.dt
        if s % cfg.output_every == 0 or s == n_steps:
            record_energy(t)
        if s % flux_every == 0 or s == n_steps:
            record_flux(t)
        if s in snapshot_steps:
            snapshots[snapshot_steps[s]] = state.copy()

    times_arr = np.array(times)
    energies_arr = np.array(energies)
    trace = EnergyTrace(
        times=times_arr,
        energy=energies_arr,
        bound=decay_envelope(energies_arr[0], rate, times_arr),
        adaptive_energy=np.array(z_values) if adaptive else None,
        flux_times=np.array(flux_times),
        flux_edges={e: np.array(v) for e, v in flux_samples.items()},
        v_hat_edges={e: np.array(v) for e, v in v_hat_samples.items()} if adaptive else None,
    )
    return RunArtifacts(
        final_state=state,
        final_adaptive=ada,
        trace=trace,
        snapshots=snapshots,
        n_steps=n_steps,
        rate=rate,
        energy0=energies_arr[0],
    )
