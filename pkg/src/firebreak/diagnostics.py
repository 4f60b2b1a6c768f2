"""Energy functionals and feasibility certificates for the boundary regimes.

The central quantity is the deviation energy: half the squared L2 norm of
``T - T_a`` over the protected region. Under the known-wind regime it decays
exponentially at a computable rate whenever the decay condition holds; under
the adaptive regime the energy augmented with the adaptation error is
non-increasing. Both facts are checked numerically from run traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .control import AdaptiveState
from .geometry import DomainGeometry, Grid, boundary_nodes
from .physics import PhysicalParameters, State, WindField


@dataclass
class EnergyTrace:
    """Time series recorded along a run.

    ``energy`` is the deviation energy over the protected region, ``bound``
    the exponential envelope ``energy[0] * exp(-rate * t)``, and
    ``adaptive_energy`` the augmented functional (adaptive runs only, else
    None). Flux and adaptation samples along the protected edges are recorded
    on their own (typically coarser) time axis.
    """

    times: np.ndarray
    energy: np.ndarray
    bound: np.ndarray
    adaptive_energy: np.ndarray | None = None
    flux_times: np.ndarray | None = None
    flux_edges: dict[str, np.ndarray] | None = None
    v_hat_edges: dict[str, np.ndarray] | None = None


def protected_quadrature_weights(grid: Grid) -> np.ndarray:
    """Tensor-product trapezoid weights over the protected region's nodes.

    Shape ``(n_x - n_star + 1, n_y + 1)`` for nodes ``i in [n_star, n_x]``,
    ``j in [0, n_y]``; interior weight ``dx1*dx2``, halved per boundary
    direction. Exact for constants.
    """
    wx = np.full(grid.n_x - grid.n_star + 1, grid.dx1)
    wx[0] *= 0.5
    wx[-1] *= 0.5
    wy = np.full(grid.n_y + 1, grid.dx2)
    wy[0] *= 0.5
    wy[-1] *= 0.5
    return np.outer(wx, wy)


def deviation_energy(state: State, grid: Grid, params: PhysicalParameters) -> float:
    """Half the squared L2 norm of ``T - T_a`` over the protected region (K^2 m^2)."""
    dev = state.T[grid.n_star :, :] - params.T_a
    return 0.5 * float(np.sum(protected_quadrature_weights(grid) * dev ** 2))


def decay_rate(
    params: PhysicalParameters,
    wind: WindField,
    geom: DomainGeometry,
    s0_sup: float,
) -> float:
    """Guaranteed exponential decay rate of the protected deviation energy (1/s).

    ``2*A*C + 2*eps/max_radius_sq - div_sup - (2*A*exp(-1)/gamma) * s0_sup``.
    May be non-positive, in which case the decay condition fails and no
    exponential envelope is certified.
    """
    return (
        2.0 * params.A * params.C
        + 2.0 * params.epsilon / geom.max_radius_sq
        - wind.div_sup
        - (2.0 * params.A * math.exp(-1.0) / params.gamma) * s0_sup
    )


@dataclass(frozen=True)
class DecayCondition:
    holds: bool
    rate: float


def check_decay_condition(
    params: PhysicalParameters,
    wind: WindField,
    geom: DomainGeometry,
    s0_sup: float,
) -> DecayCondition:
    """Whether the certified decay rate is positive."""
    rate = decay_rate(params, wind, geom, s0_sup)
    return DecayCondition(holds=rate > 0.0, rate=rate)


def decay_envelope(energy0: float, rate: float, t) -> np.ndarray | float:
    """Exponential envelope ``energy0 * exp(-rate * t)``."""
    return energy0 * np.exp(-rate * np.asarray(t, dtype=float))


def s0_sup_protected(S: np.ndarray, grid: Grid) -> float:
    """Max initial fuel over the protected region's grid nodes."""
    return float(np.max(np.abs(S[grid.n_star :, :])))


def adaptive_energy(
    state: State,
    ada: AdaptiveState,
    grid: Grid,
    params: PhysicalParameters,
    v_bar: float,
    lam: float,
) -> float:
    """Deviation energy plus the boundary-integrated adaptation error penalty.

    Adds ``(1/(2*lam)) * integral over the protected boundary of
    (v_bar - v_hat)^2``. ``v_bar`` is ground truth supplied by the scenario for
    verification; the adaptive controller itself never reads it.
    """
    weights = np.array([w for (_, _, _, w) in boundary_nodes(grid)])
    penalty = float(np.sum(weights * (v_bar - ada.values) ** 2)) / (2.0 * lam)
    return deviation_energy(state, grid, params) + penalty
