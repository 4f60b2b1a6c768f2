"""Bit-exact CSV emission for fields and traces.

All numbers are printed with 17 significant digits, which round-trips IEEE
doubles exactly, and lines end with LF; re-emitting the same data produces a
byte-identical file.
"""

from __future__ import annotations

import os

import numpy as np

from .diagnostics import EnergyTrace
from .geometry import Grid
from .physics import State


def _num(x: float) -> str:
    return f"{x:.17g}"


def _write(path: str | os.PathLike, lines: list[str]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def emit_field_csv(state: State, grid: Grid, path: str | os.PathLike) -> None:
    """Write one row per node, row-major (i outer, j inner): ``x1,x2,T,S``."""
    x1 = grid.x1_nodes
    x2 = grid.x2_nodes
    lines = ["x1,x2,T,S"]
    for i in range(grid.n_x + 1):
        ti, si, xi = state.T[i], state.S[i], _num(x1[i])
        for j in range(grid.n_y + 1):
            lines.append(f"{xi},{_num(x2[j])},{_num(ti[j])},{_num(si[j])}")
    _write(path, lines)


def emit_trace_csv(trace: EnergyTrace, path: str | os.PathLike) -> None:
    """Write the energy trace as ``t,B,bound,Z`` (Z empty for non-adaptive runs)."""
    lines = ["t,B,bound,Z"]
    has_z = trace.adaptive_energy is not None
    for idx, t in enumerate(trace.times):
        z = _num(trace.adaptive_energy[idx]) if has_z else ""
        lines.append(f"{_num(t)},{_num(trace.energy[idx])},{_num(trace.bound[idx])},{z}")
    _write(path, lines)


def emit_bound_csv(times: np.ndarray, bound: np.ndarray, path: str | os.PathLike) -> None:
    """Write the exponential envelope alone as ``t,bound``."""
    lines = ["t,bound"]
    for t, b in zip(times, bound):
        lines.append(f"{_num(t)},{_num(b)}")
    _write(path, lines)


def emit_edge_trace_csv(
    times: np.ndarray,
    values: np.ndarray,
    coords: np.ndarray,
    coord_label: str,
    path: str | os.PathLike,
) -> None:
    """Write per-edge samples over time, one column per boundary node.

    ``values`` has shape ``(len(times), len(coords))``; columns are labelled
    ``<coord_label>=<coordinate>`` with the node's along-edge coordinate.
    """
    header = ["t"] + [f"{coord_label}={_num(c)}" for c in coords]
    lines = [",".join(header)]
    for idx, t in enumerate(times):
        row = [_num(t)] + [_num(v) for v in values[idx]]
        lines.append(",".join(row))
    _write(path, lines)
