"""Scenario documents: flat dotted-key configuration files for runs.

The format is a plain-text list of ``section.key = value`` lines (``#``
comments and blank lines allowed), e.g.::

    geometry.L1 = 50
    grid.nx = 81
    physics.epsilon = 0.2136
    controller.kind = known_wind
    controller.k = 1

Parsing is strict: unknown keys, duplicate keys, keys that do not apply to
the configured kind, and out-of-range values are all rejected with the key
name in the message. Serialisation writes floats with 17 significant digits
so parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .control import ADAPTIVE, CONTROLLER_KINDS, KNOWN_WIND, OPEN_LOOP, ControllerSpec
from .errors import FirebreakError, ScenarioParseError, ScenarioValidationError
from .geometry import DomainGeometry, Grid, build_grid
from .physics import (
    PhysicalParameters,
    State,
    WindField,
    gaussian_initial_state,
    uniform_initial_state,
)
from .stepper import DEFAULT_GUARD, RunConfig

GAUSSIAN = "gaussian"
UNIFORM = "uniform"

_FLOAT_KEYS = {
    "geometry.L1", "geometry.L2", "geometry.w_frac",
    "grid.dt",
    "physics.epsilon", "physics.A", "physics.C", "physics.C_S",
    "physics.gamma", "physics.T_a",
    "wind.vx", "wind.vy", "wind.div_sup", "wind.v_bar",
    "ic.Tc", "ic.w", "ic.cx", "ic.cy", "ic.S0",
    "controller.k", "controller.lambda", "controller.v_hat_init",
    "run.t_final", "run.guard",
}
_INT_KEYS = {"grid.nx", "grid.ny", "run.output_every"}
_STR_KEYS = {"ic.kind", "controller.kind"}
_ALL_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS


@dataclass(frozen=True)
class InitialCondition:
    """Gaussian hot spot (amplitude/width/centre) or uniform ambient."""

    kind: str
    T_c: float | None = None
    width: float | None = None
    center: tuple[float, float] | None = None
    S0: float = 1.0

    def build(self, grid: Grid, geom: DomainGeometry, params: PhysicalParameters) -> State:
        if self.kind == GAUSSIAN:
            return gaussian_initial_state(
                grid, geom, params, self.T_c, self.width, self.center, S_o=self.S0
            )
        return uniform_initial_state(grid, params, S_o=self.S0)


@dataclass(frozen=True)
class Scenario:
    """A fully validated run configuration."""

    geom: DomainGeometry
    grid: Grid
    params: PhysicalParameters
    wind: WindField
    ic: InitialCondition
    controller: ControllerSpec
    t_final: float
    output_every: int = 1
    guard: float = DEFAULT_GUARD

    def initial_state(self) -> State:
        return self.ic.build(self.grid, self.geom, self.params)

    def run_config(self) -> RunConfig:
        return RunConfig(
            t_final=self.t_final,
            dt=self.grid.dt,
            controller=self.controller,
            output_every=self.output_every,
        )


def _raw_entries(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioParseError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _ALL_KEYS:
            raise ScenarioParseError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ScenarioParseError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ScenarioParseError(f"line {lineno}: empty value for {key!r}")
        entries[key] = value
    return entries


class _Entries:
    """Typed access to raw entries, tracking which keys were consumed."""

    def __init__(self, entries: dict[str, str]):
        self.raw = entries
        self.used: set[str] = set()

    def _take(self, key: str) -> str | None:
        if key in self.raw:
            self.used.add(key)
            return self.raw[key]
        return None

    def get_float(self, key: str, default: float | None = None) -> float | None:
        value = self._take(key)
        if value is None:
            return default
        try:
            out = float(value)
        except ValueError:
            raise ScenarioParseError(f"key {key!r}: not a decimal number: {value!r}") from None
        if not np.isfinite(out):
            raise ScenarioValidationError(f"key {key!r}: value must be finite, got {value!r}")
        return out

    def require_float(self, key: str) -> float:
        out = self.get_float(key)
        if out is None:
            raise ScenarioParseError(f"missing required key {key!r}")
        return out

    def get_int(self, key: str, default: int | None = None) -> int | None:
        value = self._take(key)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            raise ScenarioParseError(f"key {key!r}: not an integer: {value!r}") from None

    def require_int(self, key: str) -> int:
        out = self.get_int(key)
        if out is None:
            raise ScenarioParseError(f"missing required key {key!r}")
        return out

    def get_str(self, key: str, choices: tuple[str, ...]) -> str:
        value = self._take(key)
        if value is None:
            raise ScenarioParseError(f"missing required key {key!r}")
        if value not in choices:
            raise ScenarioValidationError(f"key {key!r}: expected one of {choices}, got {value!r}")
        return value

    def reject_leftover(self):
        stray = [k for k in self.raw if k not in self.used]
        if stray:
            raise ScenarioValidationError(
                f"keys {stray} do not apply to the configured kinds"
            )


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document.

    Raises
    ------
    ScenarioParseError
        Malformed lines, unknown/duplicate/missing keys, non-numeric values.
    ScenarioValidationError
        Values violating an invariant (negative diffusivity, non-aligned
        protected edge, inapplicable keys for the configured kind, ...).
    """
    e = _Entries(_raw_entries(text))
    try:
        geom = DomainGeometry(
            L1=e.require_float("geometry.L1"),
            L2=e.require_float("geometry.L2"),
            w_frac=e.get_float("geometry.w_frac", 2.0 / 3.0),
        )
        grid = build_grid(
            geom,
            n_x=e.require_int("grid.nx"),
            n_y=e.require_int("grid.ny"),
            dt=e.require_float("grid.dt"),
        )
        params = PhysicalParameters(
            epsilon=e.require_float("physics.epsilon"),
            A=e.require_float("physics.A"),
            C=e.require_float("physics.C"),
            C_S=e.get_float("physics.C_S", 0.0),
            gamma=e.require_float("physics.gamma"),
            T_a=e.require_float("physics.T_a"),
        )
        v_bar = e.get_float("wind.v_bar")
        wind = WindField(
            vx=e.require_float("wind.vx"),
            vy=e.require_float("wind.vy"),
            div_sup=e.get_float("wind.div_sup", 0.0),
            v_bar=v_bar,
        )

        ic_kind = e.get_str("ic.kind", (GAUSSIAN, UNIFORM))
        s0 = e.get_float("ic.S0", 1.0)
        if not 0.0 <= s0 <= 1.0:
            raise ScenarioValidationError(f"ic.S0 must lie in [0, 1], got {s0}")
        if ic_kind == GAUSSIAN:
            width = e.require_float("ic.w")
            if width <= 0:
                raise ScenarioValidationError(f"ic.w must be positive, got {width}")
            ic = InitialCondition(
                kind=GAUSSIAN,
                T_c=e.require_float("ic.Tc"),
                width=width,
                center=(e.require_float("ic.cx"), e.require_float("ic.cy")),
                S0=s0,
            )
        else:
            ic = InitialCondition(kind=UNIFORM, S0=s0)

        ctrl_kind = e.get_str("controller.kind", CONTROLLER_KINDS)
        if ctrl_kind == OPEN_LOOP:
            controller = ControllerSpec(kind=OPEN_LOOP)
        elif ctrl_kind == KNOWN_WIND:
            controller = ControllerSpec(kind=KNOWN_WIND, k=e.require_float("controller.k"))
        else:
            controller = ControllerSpec(
                kind=ADAPTIVE,
                k=e.require_float("controller.k"),
                lam=e.require_float("controller.lambda"),
                v_hat_init=e.get_float("controller.v_hat_init", 0.0),
            )

        t_final = e.require_float("run.t_final")
        if t_final <= 0:
            raise ScenarioValidationError(f"run.t_final must be positive, got {t_final}")
        output_every = e.get_int("run.output_every", 1)
        if output_every < 1:
            raise ScenarioValidationError(f"run.output_every must be >= 1, got {output_every}")
        guard = e.get_float("run.guard", DEFAULT_GUARD)
        if guard <= 0:
            raise ScenarioValidationError(f"run.guard must be positive, got {guard}")

        e.reject_leftover()
        return Scenario(
            geom=geom,
            grid=grid,
            params=params,
            wind=wind,
            ic=ic,
            controller=controller,
            t_final=t_final,
            output_every=output_every,
            guard=guard,
        )
    except (ScenarioParseError, ScenarioValidationError):
        raise
    except (FirebreakError, ValueError) as err:
        raise ScenarioValidationError(str(err)) from err


def _num(x: float) -> str:
    return f"{x:.17g}"


def serialize_scenario(s: Scenario) -> str:
    """Canonical text form of a scenario; parses back to an identical object."""
    lines = [
        f"geometry.L1 = {_num(s.geom.L1)}",
        f"geometry.L2 = {_num(s.geom.L2)}",
        f"geometry.w_frac = {_num(s.geom.w_frac)}",
        f"grid.nx = {s.grid.n_x}",
        f"grid.ny = {s.grid.n_y}",
        f"grid.dt = {_num(s.grid.dt)}",
        f"physics.epsilon = {_num(s.params.epsilon)}",
        f"physics.A = {_num(s.params.A)}",
        f"physics.C = {_num(s.params.C)}",
        f"physics.C_S = {_num(s.params.C_S)}",
        f"physics.gamma = {_num(s.params.gamma)}",
        f"physics.T_a = {_num(s.params.T_a)}",
        f"wind.vx = {_num(s.wind.vx)}",
        f"wind.vy = {_num(s.wind.vy)}",
        f"wind.div_sup = {_num(s.wind.div_sup)}",
        f"wind.v_bar = {_num(s.wind.v_bar)}",
        f"ic.kind = {s.ic.kind}",
    ]
    if s.ic.kind == GAUSSIAN:
        lines += [
            f"ic.Tc = {_num(s.ic.T_c)}",
            f"ic.w = {_num(s.ic.width)}",
            f"ic.cx = {_num(s.ic.center[0])}",
            f"ic.cy = {_num(s.ic.center[1])}",
        ]
    lines.append(f"ic.S0 = {_num(s.ic.S0)}")
    lines.append(f"controller.kind = {s.controller.kind}")
    if s.controller.kind in (KNOWN_WIND, ADAPTIVE):
        lines.append(f"controller.k = {_num(s.controller.k)}")
    if s.controller.kind == ADAPTIVE:
        lines.append(f"controller.lambda = {_num(s.controller.lam)}")
        lines.append(f"controller.v_hat_init = {_num(float(s.controller.v_hat_init))}")
    lines += [
        f"run.t_final = {_num(s.t_final)}",
        f"run.output_every = {s.output_every}",
        f"run.guard = {_num(s.guard)}",
    ]
    return "\n".join(lines) + "\n"
