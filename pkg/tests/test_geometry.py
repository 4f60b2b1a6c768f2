import math

import numpy as np
import pytest

from firebreak import (
    DomainGeometry,
    InvalidResolutionError,
    NonAlignedBoundaryError,
    NotOnBoundaryError,
    boundary_nodes,
    boundary_normal,
    build_grid,
)


class TestDomainGeometry:
    def test_sup_constants_on_square(self):
        geom = DomainGeometry(L1=50.0, L2=50.0)
        assert geom.max_radius_sq == 50.0 ** 2 + 50.0 ** 2
        assert geom.max_boundary_radius == pytest.approx(math.sqrt(5000.0), rel=1e-15)
        assert geom.poincare_ratio == pytest.approx(5000.0 ** -0.5, rel=1e-15)

    def test_rejects_bad_fields(self):
        with pytest.raises(ValueError):
            DomainGeometry(L1=-1.0, L2=1.0)
        with pytest.raises(ValueError):
            DomainGeometry(L1=1.0, L2=1.0, w_frac=1.0)
        with pytest.raises(ValueError):
            DomainGeometry(L1=1.0, L2=1.0, w_frac=0.0)


class TestBuildGrid:
    def test_paper_resolution_is_not_alignable(self):
        # 2/3 of 80 falls between columns; the aligned neighbour 81 works
        geom = DomainGeometry(L1=50.0, L2=50.0)
        with pytest.raises(NonAlignedBoundaryError):
            build_grid(geom, n_x=80, n_y=80, dt=0.01)
        grid = build_grid(geom, n_x=81, n_y=80, dt=0.01)
        assert grid.n_star == 54
        assert grid.n_star * grid.dx1 == pytest.approx(2.0 * 50.0 / 3.0, rel=1e-14)

    def test_aligned_examples(self):
        grid = build_grid(DomainGeometry(L1=50.0, L2=50.0), n_x=60, n_y=60, dt=0.01)
        assert grid.n_star == 40
        assert grid.dx1 == pytest.approx(50.0 / 60.0, rel=1e-15)

        grid = build_grid(DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5), n_x=4, n_y=4, dt=0.1)
        assert grid.n_star == 2
        assert (grid.dx1, grid.dx2) == (0.25, 0.25)

        grid = build_grid(DomainGeometry(L1=30.0, L2=60.0), n_x=30, n_y=30, dt=0.1)
        assert grid.n_star == 20
        assert (grid.dx1, grid.dx2) == (1.0, 2.0)

    def test_rejects_coarse_grids(self):
        geom = DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5)
        with pytest.raises(InvalidResolutionError):
            build_grid(geom, n_x=2, n_y=8, dt=0.1)
        with pytest.raises(InvalidResolutionError):
            build_grid(geom, n_x=8, n_y=3, dt=0.1)

    def test_rejects_nonpositive_dt(self):
        geom = DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5)
        with pytest.raises(ValueError):
            build_grid(geom, n_x=4, n_y=4, dt=0.0)


class TestBoundaryNormal:
    def test_edge_normals(self, grid):
        ns, nx, ny = grid.n_star, grid.n_x, grid.n_y
        assert boundary_normal(grid, ns, 3) == (-1.0, 0.0)
        assert boundary_normal(grid, nx, 17) == (1.0, 0.0)
        assert boundary_normal(grid, ns + 5, 0) == (0.0, -1.0)
        assert boundary_normal(grid, ns + 5, ny) == (0.0, 1.0)

    def test_corners_use_vertical_edge(self, grid):
        assert boundary_normal(grid, grid.n_star, 0) == (-1.0, 0.0)
        assert boundary_normal(grid, grid.n_x, 0) == (1.0, 0.0)
        assert boundary_normal(grid, grid.n_x, grid.n_y) == (1.0, 0.0)

    def test_rejects_non_boundary_nodes(self, grid):
        with pytest.raises(NotOnBoundaryError):
            boundary_normal(grid, grid.n_star + 1, 1)
        with pytest.raises(NotOnBoundaryError):
            boundary_normal(grid, 0, 0)
        with pytest.raises(NotOnBoundaryError):
            boundary_normal(grid, grid.n_star - 1, 0)

    def test_normals_are_unit(self, grid):
        for (i, j, _, _) in boundary_nodes(grid):
            n = boundary_normal(grid, i, j)
            assert math.hypot(*n) == 1.0


class TestBoundaryNodes:
    def test_smallest_aligned_grid_counts(self):
        grid = build_grid(DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5), n_x=4, n_y=4, dt=0.1)
        nodes = boundary_nodes(grid)
        # two vertical edges with 5 nodes each, two horizontal with 1 each
        assert len(nodes) == 2 * 5 + 2 * 1

    def test_each_node_once_and_no_interior(self, grid):
        nodes = boundary_nodes(grid)
        expected = 2 * (grid.n_y + 1) + 2 * (grid.n_x - grid.n_star - 1)
        assert len(nodes) == expected
        seen = {(i, j) for (i, j, _, _) in nodes}
        assert len(seen) == expected
        for (i, j) in seen:
            boundary_normal(grid, i, j)  # raises if not on the boundary

    def test_edge_weight_sums_equal_edge_lengths(self, grid, geom):
        nodes = boundary_nodes(grid)
        sums = {}
        for (_, _, edge, w) in nodes:
            sums[edge] = sums.get(edge, 0.0) + w
        horizontal = geom.L1 - geom.protected_x1
        assert sums["left"] == pytest.approx(geom.L2, rel=1e-12)
        assert sums["right"] == pytest.approx(geom.L2, rel=1e-12)
        assert sums["bottom"] == pytest.approx(horizontal, rel=1e-12)
        assert sums["top"] == pytest.approx(horizontal, rel=1e-12)

    def test_total_weight_is_perimeter(self, grid, geom):
        total = sum(w for (_, _, _, w) in boundary_nodes(grid))
        perimeter = 2.0 * geom.L2 + 2.0 * (geom.L1 - geom.protected_x1)
        assert total == pytest.approx(perimeter, rel=1e-12)
