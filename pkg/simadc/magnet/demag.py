'''Demagnetizing factors of a uniformly magnetized rectangular prism.

The closed form is the one for a prism with half sides a, b, c along x, y, z;
the factor along z is computed by _aharoni_nz and the other two follow by
permuting the sides. prism_demag_oracle integrates the field of the two
charged faces numerically and is used to cross check the closed form.
'''

import math
from functools import lru_cache
from typing import Tuple
import numpy as np
from simadc import logging
from simadc.exceptions import ConfigException


__all__ = ['prism_demag_factors', 'prism_demag_oracle']


logger = logging.getLogger(__name__)

DemagFactors = Tuple[float, float, float]


def _aharoni_nz(a: float, b: float, c: float) -> float:
    r = math.sqrt(a * a + b * b + c * c)
    r_ab = math.sqrt(a * a + b * b)
    r_bc = math.sqrt(b * b + c * c)
    r_ac = math.sqrt(a * a + c * c)
    abc = a * b * c

    value = (b * b - c * c) / (2 * b * c) * math.log((r - a) / (r + a))
    value += (a * a - c * c) / (2 * a * c) * math.log((r - b) / (r + b))
    value += b / (2 * c) * math.log((r_ab + a) / (r_ab - a))
    value += a / (2 * c) * math.log((r_ab + b) / (r_ab - b))
    value += c / (2 * a) * math.log((r_bc - b) / (r_bc + b))
    value += c / (2 * b) * math.log((r_ac - a) / (r_ac + a))
    value += 2 * math.atan(a * b / (c * r))
    value += (a**3 + b**3 - 2 * c**3) / (3 * abc)
    value += (a * a + b * b - 2 * c * c) / (3 * abc) * r
    value += c / (a * b) * (r_ac + r_bc)
    value -= (r_ab**3 + r_bc**3 + r_ac**3) / (3 * abc)
    return value / math.pi


def _check_sides(length_x: float, length_y: float, thickness: float) -> None:
    for key, value in (
        ('length_x', length_x),
        ('length_y', length_y),
        ('thickness', thickness),
    ):
        if not (math.isfinite(value) and value > 0):
            raise ConfigException(
                '{} must be a positive length, got {}'.format(key, value),
                extra={'key': key},
            )


@lru_cache(maxsize=64)
def prism_demag_factors(
    length_x: float, length_y: float, thickness: float
) -> DemagFactors:
    '''Returns (N_x, N_y, N_z) of a rectangular prism with the given full
    side lengths. The factors sum to one.

    Raises:
        ConfigException: If a side is not a positive finite length.
    '''
    _check_sides(length_x, length_y, thickness)
    a, b, c = length_x / 2, length_y / 2, thickness / 2
    n_x = _aharoni_nz(b, c, a)
    n_y = _aharoni_nz(a, c, b)
    n_z = _aharoni_nz(a, b, c)
    logger.debug(
        'Demag factors for {}x{}x{}: {}, {}, {}'.format(
            length_x, length_y, thickness, n_x, n_y, n_z
        )
    )
    return n_x, n_y, n_z


def _solid_angle(
    x: np.ndarray, y: np.ndarray, d: np.ndarray, a: float, b: float
) -> np.ndarray:
    # Solid angle of the face [-a, a] x [-b, b] seen from (x, y) at height d
    def corner(u, v):
        return np.arctan(u * v / (d * np.sqrt(u * u + v * v + d * d)))

    return (
        corner(a - x, b - y)
        - corner(-a - x, b - y)
        - corner(a - x, -b - y)
        + corner(-a - x, -b - y)
    )


def _face_average(a: float, b: float, c: float, n: int) -> float:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    x = a * nodes[:, None, None]
    y = b * nodes[None, :, None]
    z = c * nodes[None, None, :]
    weight = (
        weights[:, None, None] * weights[None, :, None] * weights[None, None, :]
    )
    omega = _solid_angle(x, y, c - z, a, b) + _solid_angle(x, y, c + z, a, b)
    return float(np.sum(weight * omega) / 8 / (4 * np.pi))


def prism_demag_oracle(
    length_x: float, length_y: float, thickness: float, n: int = 64
) -> DemagFactors:
    '''Numerical demagnetizing factors: volume average, on an n^3
    Gauss-Legendre grid, of the field created by the two faces normal to
    each axis (solid angle form).
    '''
    _check_sides(length_x, length_y, thickness)
    a, b, c = length_x / 2, length_y / 2, thickness / 2
    return (
        _face_average(b, c, a, n),
        _face_average(a, c, b, n),
        _face_average(a, b, c, n),
    )
