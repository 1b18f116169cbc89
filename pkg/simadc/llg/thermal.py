'''Thermal field of Brown's model.

Each Cartesian component is an independent normal variable with standard
deviation sqrt(2 alpha k T / (gamma mu0 Ms V dt)), drawn once per time step.
Random streams come from numpy PCG64 generators seeded by
SeedSequence(seed, spawn_key=stream): trial i of an experiment uses stream
(i,), so trials are independent and reproducible whatever the execution
order.
'''

import math
from typing import Sequence
import numpy as np
from simadc import logging
from simadc.constants import KB, MU0
from simadc.magnet.core import FieldVector, MagnetConfig
from simadc.units import UnitsService


__all__ = [
    'ThermalFieldSampler',
    'make_generator',
    'thermal_sigma',
    'thermal_sigma_quantity',
    'sample_thermal_field',
]


logger = logging.getLogger(__name__)


def make_generator(
    seed: int, stream: Sequence[int] = ()
) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=tuple(stream))
    return np.random.Generator(np.random.PCG64(sequence))


def thermal_sigma(cfg: MagnetConfig, dt: float) -> float:
    '''Per component standard deviation of the thermal field in A/m.'''
    if cfg.temperature == 0 or cfg.alpha == 0:
        return 0.0
    return math.sqrt(
        2
        * cfg.alpha
        * KB
        * cfg.temperature
        / (cfg.gamma * MU0 * cfg.ms * cfg.volume() * dt)
    )


def thermal_sigma_quantity(cfg: MagnetConfig, dt: float):
    '''Same as thermal_sigma but carried through Pint with units on every
    factor. Returns a quantity in A/m.'''
    service = UnitsService()
    q = service.quantity
    variance = (
        2
        * q(cfg.alpha)
        * q(KB, 'J/K')
        * q(cfg.temperature, 'K')
        / (
            q(cfg.gamma, 'm/(A*s)')
            * q(MU0, 'N/A**2')
            * q(cfg.ms, 'A/m')
            * q(cfg.volume(), 'm**3')
            * q(dt, 's')
        )
    )
    return service.check(variance**0.5, 'A/m')


class ThermalFieldSampler:
    '''Draws thermal fields for one trajectory. The scale follows the
    configuration and time step it was built (or reconfigured) with.'''

    def __init__(
        self,
        cfg: MagnetConfig,
        dt: float,
        seed: int,
        stream: Sequence[int] = (),
    ) -> None:
        self._rng = make_generator(seed, stream)
        self._seed = seed
        self._stream = tuple(stream)
        self._sigma = 0.0
        self.reconfigure(cfg, dt)

    @property
    def sigma(self) -> float:
        return self._sigma

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def stream(self) -> tuple:
        return self._stream

    def reconfigure(self, cfg: MagnetConfig, dt: float) -> None:
        self._sigma = thermal_sigma(cfg, dt)
        logger.debug(
            'Thermal field sigma {} A/m (dt={}, stream={})'.format(
                self._sigma, dt, self._stream
            )
        )

    def sample(self) -> FieldVector:
        return self.sample_block(1)[0]

    def sample_block(self, n: int) -> np.ndarray:
        '''Returns n thermal fields as an (n, 3) array. The stream advances
        even when the scale is zero.'''
        return self._rng.standard_normal((n, 3)) * self._sigma


def sample_thermal_field(sampler: ThermalFieldSampler) -> FieldVector:
    return sampler.sample()
