"""Physical constants, reaction law, and semi-discrete interior right-hand sides.

The model couples a temperature field T (K) and a fuel mass fraction S in
[0, 1] on the grid of :mod:`firebreak.geometry`:

* temperature: diffusion + wind advection + combustion heating - heat loss,
* fuel: first-order depletion driven by the combustion rate.

The combustion rate follows an Arrhenius law in the deviation ``T - T_a``,
vanishing at and below ambient temperature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InteriorIndexError
from .geometry import DomainGeometry, Grid


@dataclass(frozen=True)
class PhysicalParameters:
    """Model constants.

    Attributes
    ----------
    epsilon : float
        Thermal diffusivity (m^2/s).
    A : float
        Peak combustion heating rate (K/s) at full fuel and no heat loss.
    C : float
        Heat-loss coefficient (1/K).
    C_S : float
        Fuel depletion rate coefficient (1/s).
    gamma : float
        Arrhenius activation scale (K).
    T_a : float
        Ambient temperature (K).
    """

    epsilon: float
    A: float
    C: float
    C_S: float
    gamma: float
    T_a: float

    def __post_init__(self):
        if self.epsilon <= 0 or self.A <= 0 or self.gamma <= 0 or self.T_a <= 0:
            raise ValueError("epsilon, A, gamma, T_a must be positive")
        if self.C < 0 or self.C_S < 0:
            raise ValueError("C and C_S must be nonnegative")


@dataclass(frozen=True)
class WindField:
    """Constant wind plus the scalar bounds used by the diagnostics.

    ``div_sup`` is the supremum of ``|div v|`` over the protected region (zero
    for constant wind) and ``v_bar`` bounds ``|v|`` along the protected
    boundary. ``v_bar`` exists for verification only; no controller reads it.
    """

    vx: float
    vy: float
    div_sup: float = 0.0
    v_bar: float | None = None

    def __post_init__(self):
        if self.div_sup < 0:
            raise ValueError("div_sup must be nonnegative")
        if self.v_bar is None:
            object.__setattr__(self, "v_bar", float(np.hypot(self.vx, self.vy)))


@dataclass
class State:
    """Temperature and fuel arrays at one time instant, shape (n_x+1, n_y+1)."""

    T: np.ndarray
    S: np.ndarray

    def copy(self) -> "State":
        return State(T=self.T.copy(), S=self.S.copy())

    def deviation(self, params: PhysicalParameters) -> np.ndarray:
        """Temperature deviation from ambient, ``T - T_a``."""
        return self.T - params.T_a


def arrhenius(T, params: PhysicalParameters):
    """Combustion rate ``exp(-gamma / (T - T_a))`` for ``T > T_a``, else 0.

    Accepts scalars or arrays; the rate is continuous at ``T = T_a`` (limit 0),
    monotone non-decreasing in T, and bounded in [0, 1).
    """
    scalar = np.isscalar(T) or np.ndim(T) == 0
    dev = np.atleast_1d(np.asarray(T, dtype=float)) - params.T_a
    out = np.zeros_like(dev)
    hot = dev > 0.0
    # errstate: for deviations near the underflow threshold gamma/dev overflows
    # and exp underflows; both give the correct limit value 0.
    with np.errstate(under="ignore", over="ignore"):
        out[hot] = np.exp(-params.gamma / dev[hot])
    return float(out[0]) if scalar else out.reshape(np.shape(T))


def temperature_rhs_field(
    T: np.ndarray,
    S: np.ndarray,
    grid: Grid,
    params: PhysicalParameters,
    wind: WindField,
) -> np.ndarray:
    """Temperature rate on the full interior block ``i in [1, n_x-1], j in [1, n_y-1]``.

    Returns an array of shape ``(n_x - 1, n_y - 1)``. Column ``i = n_star`` is
    computed here as well but is never consumed: the stepper excludes it, since
    that column is owned by the protected-boundary closure.

    Diffusion uses the standard 5-point stencil. Advection is first-order
    upwind, one-sided against each wind component; for ``vx > 0`` this is the
    backward difference ``vx * (T[i,j] - T[i-1,j]) / dx1``, and symmetrically
    for the other sign and direction.
    """
    d1, d2 = grid.dx1, grid.dx2
    c = T[1:-1, 1:-1]
    lap = (T[2:, 1:-1] - 2.0 * c + T[:-2, 1:-1]) / d1 ** 2 + (
        T[1:-1, 2:] - 2.0 * c + T[1:-1, :-2]
    ) / d2 ** 2

    adv = np.zeros_like(c)
    if wind.vx > 0:
        adv += wind.vx * (c - T[:-2, 1:-1]) / d1
    elif wind.vx < 0:
        adv += wind.vx * (T[2:, 1:-1] - c) / d1
    if wind.vy > 0:
        adv += wind.vy * (c - T[1:-1, :-2]) / d2
    elif wind.vy < 0:
        adv += wind.vy * (T[1:-1, 2:] - c) / d2

    rate = arrhenius(c, params)
    reaction = params.A * (S[1:-1, 1:-1] * rate - params.C * (c - params.T_a))
    return params.epsilon * lap - adv + reaction


def temperature_rhs(
    state: State,
    grid: Grid,
    params: PhysicalParameters,
    wind: WindField,
    i: int,
    j: int,
) -> float:
    """Temperature rate (K/s) at a single interior node.

    Interior means ``i in [1, n_x-1]`` excluding the protected-edge column
    ``n_star``, and ``j in [1, n_y-1]``.

    Raises
    ------
    InteriorIndexError
        If ``(i, j)`` is a boundary node or the protected-edge column.
    """
    if not (1 <= i <= grid.n_x - 1 and 1 <= j <= grid.n_y - 1) or i == grid.n_star:
        raise InteriorIndexError(f"({i}, {j}) is not an interior node")
    T, S = state.T, state.S
    d1, d2 = grid.dx1, grid.dx2
    lap = (T[i + 1, j] - 2.0 * T[i, j] + T[i - 1, j]) / d1 ** 2 + (
        T[i, j + 1] - 2.0 * T[i, j] + T[i, j - 1]
    ) / d2 ** 2
    adv = 0.0
    if wind.vx > 0:
        adv += wind.vx * (T[i, j] - T[i - 1, j]) / d1
    elif wind.vx < 0:
        adv += wind.vx * (T[i + 1, j] - T[i, j]) / d1
    if wind.vy > 0:
        adv += wind.vy * (T[i, j] - T[i, j - 1]) / d2
    elif wind.vy < 0:
        adv += wind.vy * (T[i, j + 1] - T[i, j]) / d2
    reaction = params.A * (
        S[i, j] * arrhenius(T[i, j], params) - params.C * (T[i, j] - params.T_a)
    )
    return float(params.epsilon * lap - adv + reaction)


def fuel_rhs(state: State, params: PhysicalParameters, i: int, j: int) -> float:
    """Fuel depletion rate ``-C_S * S * r(T)`` at any node (1/s)."""
    return float(-params.C_S * state.S[i, j] * arrhenius(state.T[i, j], params))


def fuel_rhs_field(T: np.ndarray, S: np.ndarray, params: PhysicalParameters) -> np.ndarray:
    """Vectorized fuel depletion rate on all nodes."""
    return -params.C_S * S * arrhenius(T, params)


def gaussian_initial_state(
    grid: Grid,
    geom: DomainGeometry,
    params: PhysicalParameters,
    T_c: float,
    width: float,
    center: tuple[float, float],
    S_o: float | np.ndarray = 1.0,
) -> State:
    """Gaussian hot spot over ambient: ``T = T_a + T_c * exp(-|x-center|^2 / (2 w^2))``.

    ``S_o`` may be a scalar (uniform initial fuel) or a per-node array.
    """
    if width <= 0:
        raise ValueError(f"gaussian width must be positive, got {width}")
    x1 = grid.x1_nodes[:, None]
    x2 = grid.x2_nodes[None, :]
    r_sq = (x1 - center[0]) ** 2 + (x2 - center[1]) ** 2
    T = params.T_a + T_c * np.exp(-r_sq / (2.0 * width ** 2))
    S = np.broadcast_to(np.asarray(S_o, dtype=float), grid.shape).copy()
    return State(T=T, S=S)


def uniform_initial_state(grid: Grid, params: PhysicalParameters, S_o: float | np.ndarray = 1.0) -> State:
    """Ambient-temperature state with the given initial fuel."""
    T = np.full(grid.shape, params.T_a, dtype=float)
    S = np.broadcast_to(np.asarray(S_o, dtype=float), grid.shape).copy()
    return State(T=T, S=S)
