"""Rectangular domain, protected subregion, and the uniform finite-difference grid.

The fire evolves on the rectangle ``[0, L1] x [0, L2]``. A vertical line at
``x1 = w_frac * L1`` splits off the protected subregion (right part of the
domain) whose boundary carries the controlled heat flux. The grid is uniform
and the splitting line must coincide with a grid column, indexed ``n_star``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidResolutionError, NonAlignedBoundaryError, NotOnBoundaryError

#: Relative slack when checking that w_frac * n_x is an integer. Needed because
#: fractions such as 2/3 are not exactly representable in binary floating point.
ALIGNMENT_RTOL = 1e-9


@dataclass(frozen=True)
class DomainGeometry:
    """Rectangle ``[0, L1] x [0, L2]`` with a protected right part.

    Parameters
    ----------
    L1, L2 : float
        Side lengths in meters.
    w_frac : float
        Fraction of ``L1`` at which the protected region starts; the protected
        region is ``[w_frac*L1, L1] x [0, L2]``. Defaults to 2/3.
    """

    L1: float
    L2: float
    w_frac: float = 2.0 / 3.0

    def __post_init__(self):
        if not (self.L1 > 0 and self.L2 > 0):
            raise ValueError(f"side lengths must be positive, got ({self.L1}, {self.L2})")
        if not (0.0 < self.w_frac < 1.0):
            raise ValueError(f"w_frac must lie in (0, 1), got {self.w_frac}")

    @property
    def max_radius_sq(self) -> float:
        """Largest squared distance from the origin over the protected region (m^2).

        The farthest point of the axis-aligned protected rectangle is the
        corner ``(L1, L2)``, so this equals ``L1**2 + L2**2``.
        """
        return self.L1 ** 2 + self.L2 ** 2

    @property
    def max_boundary_radius(self) -> float:
        """Largest distance from the origin along the protected boundary (m)."""
        return float(np.sqrt(self.max_radius_sq))

    @property
    def poincare_ratio(self) -> float:
        """Friedrichs-Poincare geometric ratio ``max_boundary_radius / max_radius_sq``.

        For the rectangle this reduces to ``(L1^2 + L2^2)**-0.5``; it scales the
        damping part of both boundary flux laws.
        """
        return self.max_boundary_radius / self.max_radius_sq

    @property
    def protected_x1(self) -> float:
        """x1 coordinate of the protected region's left edge (m)."""
        return self.w_frac * self.L1


@dataclass(frozen=True)
class Grid:
    """Uniform node-centred grid with the protected edge pinned to column ``n_star``.

    Nodes are ``(X_i, Y_j) = (i*dx1, j*dx2)`` for ``i in [0, n_x]``,
    ``j in [0, n_y]``. Fields are stored as arrays of shape
    ``(n_x + 1, n_y + 1)`` indexed ``[i, j]``.
    """

    n_x: int
    n_y: int
    n_star: int
    dx1: float
    dx2: float
    dt: float

    def __post_init__(self):
        if not (0 < self.n_star < self.n_x):
            raise ValueError(f"n_star must satisfy 0 < n_star < n_x, got {self.n_star}")
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_x + 1, self.n_y + 1)

    @property
    def x1_nodes(self) -> np.ndarray:
        return np.arange(self.n_x + 1) * self.dx1

    @property
    def x2_nodes(self) -> np.ndarray:
        return np.arange(self.n_y + 1) * self.dx2


def build_grid(geom: DomainGeometry, n_x: int, n_y: int, dt: float) -> Grid:
    """Build the uniform grid, enforcing alignment of the protected edge.

    Parameters
    ----------
    geom : DomainGeometry
    n_x, n_y : int
        Number of intervals per direction (node counts are ``n_x+1``, ``n_y+1``).
    dt : float
        Time step in seconds.

    Raises
    ------
    InvalidResolutionError
        If ``n_x`` or ``n_y`` is below 4.
    NonAlignedBoundaryError
        If ``w_frac * n_x`` is not an integer, i.e. the protected edge would
        fall between grid columns. Rounding silently would move the protected
        region and corrupt the decay-rate bookkeeping, so this is rejected.
    """
    if n_x < 4 or n_y < 4:
        raise InvalidResolutionError(f"need n_x, n_y >= 4, got ({n_x}, {n_y})")
    target = geom.w_frac * n_x
    n_star = int(round(target))
    if abs(target - n_star) > ALIGNMENT_RTOL * max(1.0, abs(target)):
        raise NonAlignedBoundaryError(
            f"w_frac * n_x = {target!r} is not an integer; "
            f"choose n_x so the protected edge lies on a grid column"
        )
    if not (0 < n_star < n_x):
        raise NonAlignedBoundaryError(
            f"protected edge column {n_star} must be strictly inside [0, {n_x}]"
        )
    return Grid(
        n_x=n_x,
        n_y=n_y,
        n_star=n_star,
        dx1=geom.L1 / n_x,
        dx2=geom.L2 / n_y,
        dt=dt,
    )


def boundary_normal(grid: Grid, i: int, j: int) -> tuple[float, float]:
    """Outward unit normal of the protected region at boundary node ``(i, j)``.

    Corner nodes belong to the vertical edges and return the vertical-edge
    normal (the horizontal closures never touch the corners).

    Raises
    ------
    NotOnBoundaryError
        If ``(i, j)`` is not a protected-boundary node.
    """
    on_vertical = (i == grid.n_star or i == grid.n_x) and 0 <= j <= grid.n_y
    if on_vertical:
        return (-1.0, 0.0) if i == grid.n_star else (1.0, 0.0)
    if j in (0, grid.n_y) and grid.n_star < i < grid.n_x:
        return (0.0, -1.0) if j == 0 else (0.0, 1.0)
    raise NotOnBoundaryError(f"node ({i}, {j}) is not on the protected boundary")


def boundary_nodes(grid: Grid) -> list[tuple[int, int, str, float]]:
    """Enumerate protected-boundary nodes as ``(i, j, edge, surface_weight)``.

    Each node appears exactly once; corners are listed with their vertical
    edge. Order: left edge (j ascending), right edge, bottom edge (i
    ascending), top edge.

    The weights form a composite trapezoid quadrature of the boundary line
    integral: vertical edges carry ``dx2`` (halved at the corner endpoints);
    horizontal edges carry ``dx1``, and the half-cells adjacent to the corners
    are absorbed into the first and last horizontal nodes so each edge's
    weights sum exactly to its length and the total to the perimeter.
    """
    ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
    d1, d2 = grid.dx1, grid.dx2
    nodes: list[tuple[int, int, str, float]] = []
    for i_edge, edge in ((ns, "left"), (nx, "right")):
        for j in range(ny + 1):
            w = d2 if 0 < j < ny else 0.5 * d2
            nodes.append((i_edge, j, edge, w))
    n_horiz = nx - ns - 1
    for j_edge, edge in ((0, "bottom"), (ny, "top")):
        for m, i in enumerate(range(ns + 1, nx)):
            w = d1
            if m == 0:
                w += 0.5 * d1
            if m == n_horiz - 1:
                w += 0.5 * d1
            nodes.append((i, j_edge, edge, w))
    return nodes
