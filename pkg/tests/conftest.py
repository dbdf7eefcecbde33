import pytest

from ringqed import CavityGeometry, coupling_from_sin_gamma, solve_lowest_mode

# Reference setup: rho1 = 2.5 mm, delta_rho/rho1 = 0.1, delta_z/rho1 = 1e-3.
REFERENCE_RHO1 = 2.5e-3
REFERENCE_GEOMETRY = CavityGeometry(rho1=REFERENCE_RHO1, rho2=1.1 * REFERENCE_RHO1, delta_z=1e-3 * REFERENCE_RHO1)


@pytest.fixture(scope="session")
def reference_geometry():
    return REFERENCE_GEOMETRY


@pytest.fixture(scope="session")
def reference_mode(reference_geometry):
    return solve_lowest_mode(reference_geometry)


@pytest.fixture(scope="session")
def reference_coupling(reference_geometry, reference_mode):
    return coupling_from_sin_gamma(reference_mode, reference_geometry, 1.0)
