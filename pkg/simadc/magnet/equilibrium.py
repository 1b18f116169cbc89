'''Long time limits of the free layer statistics.

The stationary distribution of the stochastic LLG dynamics is the Boltzmann
distribution of the macrospin energy on the unit sphere. With
m = (u, sqrt(1 - u^2) cos(phi), sqrt(1 - u^2) sin(phi)) the surface measure is
du dphi, so the azimuth is averaged on a uniform grid (spectrally accurate for
a periodic integrand) and the remaining integral over u uses scipy quad.
'''

from dataclasses import dataclass
import numpy as np
from scipy import integrate
from simadc.constants import MU0
from simadc.exceptions import InputException
from simadc.magnet.core import MagnetConfig


__all__ = ['Equilibrium', 'boltzmann_equilibrium', 'energy_density']


AZIMUTH_POINTS = 256


@dataclass(frozen=True)
class Equilibrium:
    mean_mx: float
    p_below: float
    threshold: float


def energy_density(cfg: MagnetConfig, m: np.ndarray, v_me: float) -> np.ndarray:
    '''Energy per volume (J/m^3) of the macrospin for unit vectors m.'''
    m = np.asarray(m, dtype=np.float64)
    n_x, n_y, n_z = cfg.demag_factors
    shape = 0.5 * MU0 * cfg.ms**2
    h_me = cfg.me_field_per_volt * v_me
    return (
        -cfg.ku2 * m[..., 0] ** 2
        + shape
        * (n_x * m[..., 0] ** 2 + n_y * m[..., 1] ** 2 + n_z * m[..., 2] ** 2)
        - cfg.ki / cfg.thickness * m[..., 2] ** 2
        - MU0 * cfg.ms * h_me * m[..., 0]
    )


def boltzmann_equilibrium(
    cfg: MagnetConfig, v_me: float = 0.0, threshold: float = 0.0
) -> Equilibrium:
    '''Returns the stationary <m_x> and the probability that m_x lies below
    threshold.

    Raises:
        InputException: If the temperature is zero (no stationary spread).
    '''
    if cfg.temperature <= 0:
        raise InputException(
            'Boltzmann statistics need a positive temperature',
            extra={'temperature': cfg.temperature},
        )
    beta_v = cfg.volume() / cfg.kt
    phi = np.linspace(0, 2 * np.pi, AZIMUTH_POINTS, endpoint=False)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)

    def reduced_energy(u: float) -> np.ndarray:
        s = np.sqrt(max(0.0, 1 - u * u))
        m = np.stack(
            [np.full_like(phi, u), s * cos_phi, s * sin_phi], axis=-1
        )
        return beta_v * energy_density(cfg, m, v_me)

    # Shift by the minimum over a coarse scan so the weights stay finite
    scan = np.linspace(-1, 1, 201)
    offset = min(float(np.min(reduced_energy(u))) for u in scan)

    def weight(u: float) -> float:
        return float(np.mean(np.exp(offset - reduced_energy(u))))

    points = [threshold] if -1 < threshold < 1 else None
    z, _ = integrate.quad(weight, -1, 1, points=points, limit=200)
    first, _ = integrate.quad(
        lambda u: u * weight(u), -1, 1, points=points, limit=200
    )
    if threshold <= -1:
        below = 0.0
    elif threshold >= 1:
        below = z
    else:
        below, _ = integrate.quad(weight, -1, threshold, limit=200)
    return Equilibrium(
        mean_mx=first / z, p_below=below / z, threshold=threshold
    )
