import numpy as np
import pytest

from firebreak import (
    DomainGeometry,
    PhysicalParameters,
    WindField,
    build_grid,
    gaussian_initial_state,
)

# Reference experimental setup shared by many tests: 50 m x 50 m domain,
# protected right third, unit horizontal wind, 1000 K Gaussian hot spot.


@pytest.fixture(scope="session")
def geom():
    return DomainGeometry(L1=50.0, L2=50.0, w_frac=2.0 / 3.0)


@pytest.fixture(scope="session")
def params():
    return PhysicalParameters(
        epsilon=2.1360e-1, A=1.8793e2, C=7.2558e-4, C_S=0.0, gamma=5.5849e2, T_a=300.0
    )


@pytest.fixture(scope="session")
def wind():
    return WindField(vx=1.0, vy=0.0)


@pytest.fixture(scope="session")
def grid(geom):
    return build_grid(geom, n_x=81, n_y=80, dt=0.01)


@pytest.fixture(scope="session")
def small_grid():
    return build_grid(DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5), n_x=8, n_y=6, dt=0.001)


@pytest.fixture(scope="session")
def small_geom():
    return DomainGeometry(L1=1.0, L2=1.0, w_frac=0.5)


@pytest.fixture()
def hot_state(grid, geom, params):
    return gaussian_initial_state(grid, geom, params, T_c=1000.0, width=10.0, center=(25.0, 25.0))


@pytest.fixture()
def rng():
    return np.random.default_rng(20250810)
