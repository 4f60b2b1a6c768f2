"""Boundary regimes on the protected boundary and the outer no-flux closure.

Three regimes close the protected boundary after each interior update:

* open loop: homogeneous Neumann (copy the interior neighbour),
* known wind: linear flux feedback, eliminated into an affine ghost map,
* adaptive: flux feedback with a per-node adaptation parameter, eliminated
  into a depressed cubic per node and solved with Cardano's formula.

All closures treat corner nodes as members of the vertical edges, and apply
the horizontal edges first so the vertical-edge relations read the values of
the (triangular) simultaneous system rather than stale ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDenominatorError, NegativeDiscriminantError
from .geometry import DomainGeometry, Grid
from .physics import PhysicalParameters, State

OPEN_LOOP = "open_loop"
KNOWN_WIND = "known_wind"
ADAPTIVE = "adaptive"
CONTROLLER_KINDS = (OPEN_LOOP, KNOWN_WIND, ADAPTIVE)


@dataclass(frozen=True)
class ControllerSpec:
    """Which regime closes the protected boundary, and its gains.

    ``k`` is the flux control gain (known-wind and adaptive), ``lam`` the
    adaptation gain and ``v_hat_init`` the initial adaptation value(s)
    (adaptive only). ``v_hat_init`` may be a scalar or an array over the
    boundary nodes in :func:`firebreak.geometry.boundary_nodes` order; it must
    be nonnegative, otherwise the cubic discriminant can turn negative.
    """

    kind: str
    k: float = 0.0
    lam: float | None = None
    v_hat_init: float | np.ndarray = 0.0

    def __post_init__(self):
        if self.kind not in CONTROLLER_KINDS:
            raise ValueError(f"unknown controller kind {self.kind!r}")
        if self.k < 0:
            raise ValueError("control gain k must be nonnegative")
        if self.kind == ADAPTIVE:
            if self.lam is None or self.lam <= 0:
                raise ValueError("adaptive controller needs adaptation gain lam > 0")
            if np.any(np.asarray(self.v_hat_init) < 0):
                raise ValueError("initial adaptation values must be nonnegative")


@dataclass
class AdaptiveState:
    """Per-boundary-node adaptation values, in boundary_nodes order."""

    values: np.ndarray

    def copy(self) -> "AdaptiveState":
        return AdaptiveState(values=self.values.copy())


def edge_slices(grid: Grid) -> dict[str, slice]:
    """Slices of the flat adaptation array for each protected edge."""
    n_v = grid.n_y + 1
    n_h = grid.n_x - grid.n_star - 1
    return {
        "left": slice(0, n_v),
        "right": slice(n_v, 2 * n_v),
        "bottom": slice(2 * n_v, 2 * n_v + n_h),
        "top": slice(2 * n_v + n_h, 2 * n_v + 2 * n_h),
    }


def initial_adaptive_state(ctrl: ControllerSpec, grid: Grid) -> AdaptiveState:
    n_nodes = 2 * (grid.n_y + 1) + 2 * (grid.n_x - grid.n_star - 1)
    values = np.broadcast_to(np.asarray(ctrl.v_hat_init, dtype=float), (n_nodes,)).copy()
    return AdaptiveState(values=values)


# ---------------------------------------------------------------------------
# Flux laws


def feedback_flux(t_dev, n_dot_v: float, k: float, params: PhysicalParameters, geom: DomainGeometry):
    """Known-wind boundary flux: the prescribed normal derivative of ``T - T_a``.

    Linear in the deviation. The wind term cancels advection through the
    boundary; the rest is damping.
    """
    coeff = (n_dot_v - 2.0 * k) / (2.0 * params.epsilon) - 2.0 * geom.poincare_ratio
    return coeff * t_dev


def adaptive_flux(t_dev, v_hat, k: float, params: PhysicalParameters, geom: DomainGeometry):
    """Adaptive boundary flux; always damping, stronger for larger ``v_hat``."""
    coeff = -((np.asarray(v_hat) + 2.0 * k) / (2.0 * params.epsilon) + 2.0 * geom.poincare_ratio)
    return coeff * t_dev


@dataclass(frozen=True)
class EdgeCoefficients:
    """Ghost-relation coefficients of the known-wind closure, one per edge type.

    ``l1`` acts on the upwind vertical edge, ``l2`` on the downwind vertical
    edge, ``l3`` on both horizontal edges; they are the negated flux-law
    coefficients specialised to a unit horizontal wind.
    """

    l1: float
    l2: float
    l3: float


def edge_coefficients(k: float, params: PhysicalParameters, geom: DomainGeometry) -> EdgeCoefficients:
    l1 = 1.0 / (2.0 * params.epsilon) + 2.0 * geom.poincare_ratio + k / params.epsilon
    return EdgeCoefficients(
        l1=l1,
        l2=l1 - 1.0 / params.epsilon,
        l3=l1 - 1.0 / (2.0 * params.epsilon),
    )


def feedback_denominators(grid: Grid, coeffs: EdgeCoefficients) -> tuple[float, float, float]:
    """Denominators of the affine ghost maps; all must be positive.

    A non-positive denominator would make the ghost map expansive (the closure
    would amplify rather than damp the boundary deviation), so configurations
    reaching that regime are refused.
    """
    dens = (
        1.0 + grid.dx1 * coeffs.l1,
        1.0 + grid.dx1 * coeffs.l2,
        1.0 + grid.dx2 * coeffs.l3,
    )
    if min(dens) <= 0.0:
        raise DegenerateDenominatorError(
            f"ghost-map denominators must be positive, got {dens}; "
            f"increase the control gain or refine the grid"
        )
    return dens


# ---------------------------------------------------------------------------
# Closures


def apply_outer_boundary(state: State, grid: Grid) -> State:
    """No-flux closure on the outer boundary away from the protected region.

    Copies the adjacent interior value onto the left domain column and onto
    the bottom/top rows left of the protected region. Mutates ``state.T``.
    """
    T = state.T
    ns = grid.n_star
    T[0, :] = T[1, :]
    T[:ns, 0] = T[:ns, 1]
    T[:ns, grid.n_y] = T[:ns, grid.n_y - 1]
    return state


def apply_open_loop(state: State, grid: Grid) -> State:
    """Homogeneous Neumann closure of the protected boundary (no actuation)."""
    T = state.T
    ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
    T[ns + 1 : nx, 0] = T[ns + 1 : nx, 1]
    T[ns + 1 : nx, ny] = T[ns + 1 : nx, ny - 1]
    T[ns, :] = T[ns + 1, :]
    T[nx, :] = T[nx - 1, :]
    return state


def apply_feedback(state: State, grid: Grid, coeffs: EdgeCoefficients, params: PhysicalParameters) -> State:
    """Known-wind closure: affine ghost maps on the four protected edges.

    Each edge value is the convex-type combination
    ``(T_neighbour + delta*l*T_a) / (1 + delta*l)``, the exact elimination of
    the boundary node from the one-sided flux discretisation.
    """
    den1, den2, den3 = feedback_denominators(grid, coeffs)
    T = state.T
    ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
    d1, d2 = grid.dx1, grid.dx2
    T_a = params.T_a
    T[ns + 1 : nx, 0] = (T[ns + 1 : nx, 1] + d2 * coeffs.l3 * T_a) / den3
    T[ns + 1 : nx, ny] = (T[ns + 1 : nx, ny - 1] + d2 * coeffs.l3 * T_a) / den3
    T[ns, :] = (T[ns + 1, :] + d1 * coeffs.l1 * T_a) / den1
    T[nx, :] = (T[nx - 1, :] + d1 * coeffs.l2 * T_a) / den2
    return state


def cardano_root(p, q):
    """Unique real root of the depressed cubic ``t**3 + p*t + q`` for ``p >= 0``.

    Closed form via Cardano's formula with the sign-preserving real cube root,
    followed by one Newton step: the two cube roots nearly cancel when
    ``|q|`` dominates ``p**1.5`` and the polish restores the residual to
    round-off cheaply. Accepts scalars or arrays.

    Raises
    ------
    NegativeDiscriminantError
        If ``q**2/4 + p**3/27 < 0`` (impossible for ``p >= 0``).
    """
    scalar = np.isscalar(p) and np.isscalar(q)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    disc = 0.25 * q ** 2 + p ** 3 / 27.0
    if np.any(disc < 0.0):
        raise NegativeDiscriminantError(
            "cubic discriminant is negative; adaptation values must stay nonnegative"
        )
    s = np.sqrt(disc)
    t = np.cbrt(-0.5 * q + s) + np.cbrt(-0.5 * q - s)
    slope = 3.0 * t ** 2 + p
    residual = t ** 3 + p * t + q
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(slope > 0.0, t - residual / slope, t)
    return float(t) if scalar else t


def apply_adaptive(
    state: State,
    grid: Grid,
    ctrl: ControllerSpec,
    ada: AdaptiveState,
    params: PhysicalParameters,
    geom: DomainGeometry,
    dt: float,
) -> tuple[State, AdaptiveState]:
    """Adaptive closure: per-node implicit solve, then adaptation update.

    For each protected-boundary node the flux law with the *updated*
    adaptation value substituted in yields a depressed cubic in the node's
    deviation, with

    ``p = (4 eps / (lam dt)) * [(v_hat_prev + 2k)/(2 eps) + 2*poincare_ratio + 1/delta]``
    ``q = -(4 eps / (lam dt delta)) * dev_neighbour``

    where ``delta`` is the grid spacing across the edge. The node temperature
    becomes ``T_a + root`` and the adaptation value advances by
    ``(lam dt / 2) * root**2``. Mutates ``state.T``; returns a new
    :class:`AdaptiveState`.
    """
    T = state.T
    ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
    lam = ctrl.lam
    eps = params.epsilon
    T_a = params.T_a
    new_values = ada.values.copy()
    slices = edge_slices(grid)

    # (edge, boundary-node setter target, neighbour values, spacing)
    def solve_edge(name: str, delta: float, neighbour_T: np.ndarray) -> np.ndarray:
        v_prev = ada.values[slices[name]]
        bracket = (v_prev + 2.0 * ctrl.k) / (2.0 * eps) + 2.0 * geom.poincare_ratio + 1.0 / delta
        scale = 4.0 * eps / (lam * dt)
        p = scale * bracket
        q = -(scale / delta) * (neighbour_T - T_a)
        root = cardano_root(p, q)
        new_values[slices[name]] = v_prev + 0.5 * lam * dt * root ** 2
        return T_a + root

    # Horizontal edges first: the vertical-edge corner nodes read them.
    T[ns + 1 : nx, 0] = solve_edge("bottom", grid.dx2, T[ns + 1 : nx, 1])
    T[ns + 1 : nx, ny] = solve_edge("top", grid.dx2, T[ns + 1 : nx, ny - 1])
    T[ns, :] = solve_edge("left", grid.dx1, T[ns + 1, :])
    T[nx, :] = solve_edge("right", grid.dx1, T[nx - 1, :])
    return state, AdaptiveState(values=new_values)


def boundary_flux_samples(state: State, grid: Grid) -> dict[str, np.ndarray]:
    """Discrete normal derivative of T on each protected edge.

    This is the flux the active closure actually imposed: zero for open loop,
    the flux-law value for the controlled regimes (exactly, by construction of
    the ghost relations).
    """
    T = state.T
    ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
    d1, d2 = grid.dx1, grid.dx2
    return {
        "left": -(T[ns + 1, :] - T[ns, :]) / d1,
        "right": (T[nx, :] - T[nx - 1, :]) / d1,
        "bottom": -(T[ns + 1 : nx, 1] - T[ns + 1 : nx, 0]) / d2,
        "top": (T[ns + 1 : nx, ny] - T[ns + 1 : nx, ny - 1]) / d2,
    }
