import math
import pytest
from simadc.constants import GAMMA_DEFAULT
from simadc.llg.integrator import IntegratorParams
from simadc.magnet.core import MagnetConfig
from simadc.units import UnitsService


# Larmor period of the precession oracle, a whole number of steps of 0.1 ps
LARMOR_PERIOD = 256e-12


@pytest.fixture(scope='session')
def units_service():
    return UnitsService().start()


@pytest.fixture(scope='session')
def low_barrier_cfg():
    return MagnetConfig()


@pytest.fixture(scope='session')
def frozen_cfg():
    '''Low barrier device without thermal noise.'''
    return MagnetConfig(temperature=0.0)


@pytest.fixture(scope='session')
def high_barrier_cfg():
    return MagnetConfig(
        length_x=150e-9, length_y=60e-9, thickness=2.5e-9
    ).with_energy_barrier(40)


@pytest.fixture(scope='session')
def larmor_cfg():
    '''Cube without anisotropy, damping or noise: the only torque comes from
    an applied field.'''
    return MagnetConfig(
        length_x=10e-9,
        length_y=10e-9,
        thickness=10e-9,
        ku2=0.0,
        ki=0.0,
        alpha=0.0,
        temperature=0.0,
    )


@pytest.fixture(scope='session')
def larmor_field():
    return 2 * math.pi / (GAMMA_DEFAULT * LARMOR_PERIOD)


@pytest.fixture(scope='function')
def params():
    return IntegratorParams()
