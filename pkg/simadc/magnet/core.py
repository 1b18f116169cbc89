'''Macrospin device model: configuration, deterministic field terms and
derived scalars.

Every field function accepts a single unit vector of shape (3,) or a stack of
them of shape (..., 3) and returns an array of the same shape in A/m.
'''

import math
from dataclasses import dataclass, fields, replace
from typing import Optional, Tuple, Union
import numpy as np
from simadc import logging
from simadc.constants import GAMMA_DEFAULT, KB, MU0, SPEED_OF_LIGHT
from simadc.exceptions import ConfigException, InputException
from simadc.magnet.demag import prism_demag_factors


__all__ = [
    'FieldVector',
    'MagnetConfig',
    'MagState',
    'demag_field',
    'uniaxial_field',
    'interface_anisotropy_field',
    'me_field',
    'effective_field',
    'energy_barrier',
    'mean_lifetime',
]


logger = logging.getLogger(__name__)

# A field in A/m, numpy array of shape (3,) or (..., 3)
FieldVector = np.ndarray
VectorLike = Union[np.ndarray, Tuple[float, float, float]]


@dataclass(frozen=True)
class MagnetConfig:
    '''Geometry and material of the free layer. Easy axis along x,
    interface anisotropy along z. All values SI.'''

    length_x: float = 20e-9
    length_y: float = 10e-9
    thickness: float = 1.35e-9
    ms: float = 600.3e3
    alpha: float = 0.012
    ku2: float = 15.3e3
    ki: float = 1e-5
    t_me: float = 5e-9
    alpha_me: float = 0.05 / SPEED_OF_LIGHT
    temperature: float = 300.0
    gamma: float = GAMMA_DEFAULT
    t_l0: float = 1e-9

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)
            if not math.isfinite(value):
                raise ConfigException(
                    '{} must be finite, got {}'.format(field.name, value),
                    extra={'key': field.name},
                )
        positive = (
            'length_x',
            'length_y',
            'thickness',
            'ms',
            't_me',
            'gamma',
            't_l0',
        )
        for key in positive:
            if getattr(self, key) <= 0:
                raise ConfigException(
                    '{} must be positive, got {}'.format(
                        key, getattr(self, key)
                    ),
                    extra={'key': key},
                )
        if not 0 <= self.alpha < 1:
            raise ConfigException(
                'alpha must be in [0, 1), got {}'.format(self.alpha),
                extra={'key': 'alpha'},
            )
        if self.temperature < 0:
            raise ConfigException(
                'temperature must not be negative, got {}'.format(
                    self.temperature
                ),
                extra={'key': 'temperature'},
            )
        if self.ku2 < 0:
            raise ConfigException(
                'ku2 must not be negative, got {}'.format(self.ku2),
                extra={'key': 'ku2'},
            )

    def volume(self) -> float:
        return self.length_x * self.length_y * self.thickness

    def energy_barrier(self) -> float:
        '''Anisotropy barrier K_u2 V in joules.'''
        return self.ku2 * self.volume()

    @property
    def kt(self) -> float:
        return KB * self.temperature

    @property
    def energy_barrier_kt(self) -> float:
        if self.temperature == 0:
            return math.inf
        return self.energy_barrier() / self.kt

    @property
    def demag_factors(self) -> Tuple[float, float, float]:
        return prism_demag_factors(
            self.length_x, self.length_y, self.thickness
        )

    @property
    def anisotropy_field(self) -> float:
        return 2 * self.ku2 / (MU0 * self.ms)

    @property
    def interface_field(self) -> float:
        return 2 * self.ki / (MU0 * self.ms * self.thickness)

    @property
    def me_field_per_volt(self) -> float:
        return self.alpha_me / MU0 / self.t_me

    def field_coefficients(self) -> np.ndarray:
        '''Packs the deterministic field of the model into
        (Ms N_x, Ms N_y, Ms N_z, H_k, H_i) for the integration kernels.'''
        n_x, n_y, n_z = self.demag_factors
        return np.array(
            [
                self.ms * n_x,
                self.ms * n_y,
                self.ms * n_z,
                self.anisotropy_field,
                self.interface_field,
            ],
            dtype=np.float64,
        )

    def with_energy_barrier(self, e_b_over_kt: float) -> 'MagnetConfig':
        '''Returns a copy whose K_u2 gives the requested E_B/kT for this
        volume and temperature.

        Raises:
            ConfigException: If the temperature is zero or the barrier
                negative.
        '''
        if self.temperature <= 0:
            raise ConfigException(
                'An energy barrier in kT needs a positive temperature',
                extra={'key': 'energy_barrier_kt'},
            )
        if not (math.isfinite(e_b_over_kt) and e_b_over_kt >= 0):
            raise ConfigException(
                'energy_barrier_kt must be a non negative number, '
                'got {}'.format(e_b_over_kt),
                extra={'key': 'energy_barrier_kt'},
            )
        ku2 = e_b_over_kt * self.kt / self.volume()
        logger.debug(
            'E_B = {} kT gives ku2 = {} J/m^3'.format(e_b_over_kt, ku2)
        )
        return replace(self, ku2=ku2)


@dataclass(frozen=True, eq=False)
class MagState:
    '''Unit magnetization and the simulation clock.'''

    m: np.ndarray
    t: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, 'm', np.asarray(self.m, dtype=np.float64))

    @property
    def m_x(self) -> float:
        return float(self.m[0])

    def norm_error(self) -> float:
        return abs(float(np.linalg.norm(self.m)) - 1.0)


def _as_vectors(m: VectorLike) -> np.ndarray:
    return np.asarray(m, dtype=np.float64)


def demag_field(cfg: MagnetConfig, m: VectorLike) -> FieldVector:
    m = _as_vectors(m)
    factors = np.asarray(cfg.demag_factors)
    return -cfg.ms * factors * m


def uniaxial_field(cfg: MagnetConfig, m: VectorLike) -> FieldVector:
    m = _as_vectors(m)
    h = np.zeros_like(m)
    h[..., 0] = cfg.anisotropy_field * m[..., 0]
    return h


def interface_anisotropy_field(cfg: MagnetConfig, m: VectorLike) -> FieldVector:
    m = _as_vectors(m)
    h = np.zeros_like(m)
    h[..., 2] = cfg.interface_field * m[..., 2]
    return h


def me_field(cfg: MagnetConfig, v_me: float) -> FieldVector:
    '''Magnetoelectric field, along x only and linear in V_ME.'''
    return np.array([cfg.me_field_per_volt * v_me, 0.0, 0.0])


def effective_field(
    cfg: MagnetConfig,
    m: VectorLike,
    v_me: float,
    h_thermal: VectorLike,
    h_external: Optional[VectorLike] = None,
) -> FieldVector:
    '''Sum of demag, uniaxial, interface, ME and thermal fields, plus an
    optional constant applied field.'''
    h = (
        demag_field(cfg, m)
        + uniaxial_field(cfg, m)
        + interface_anisotropy_field(cfg, m)
        + me_field(cfg, v_me)
        + np.asarray(h_thermal, dtype=np.float64)
    )
    if h_external is not None:
        h = h + np.asarray(h_external, dtype=np.float64)
    return h


def energy_barrier(cfg: MagnetConfig) -> float:
    return cfg.energy_barrier()


def mean_lifetime(e_b: float, t_l0: float, temperature: float) -> float:
    '''Mean dwell time t_l0 exp(E_B/kT) of one of the two easy-axis states.

    Raises:
        InputException: If t_l0 or temperature is not positive.
    '''
    if t_l0 <= 0:
        raise InputException(
            't_l0 must be positive, got {}'.format(t_l0),
            extra={'t_l0': t_l0},
        )
    if temperature <= 0:
        raise InputException(
            'temperature must be positive, got {}'.format(temperature),
            extra={'temperature': temperature},
        )
    try:
        return t_l0 * math.exp(e_b / (KB * temperature))
    except OverflowError:
        return math.inf
