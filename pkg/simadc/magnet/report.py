'''Derived quantities of a device configuration, as (quantity, value, unit)
rows for the report experiment.'''

from typing import List, Tuple
import numpy as np
from simadc.magnet.core import (
    MagnetConfig,
    demag_field,
    interface_anisotropy_field,
    mean_lifetime,
    uniaxial_field,
)
from simadc.llg.thermal import thermal_sigma


__all__ = ['derived_report']


ReportRow = Tuple[str, float, str]


def derived_report(cfg: MagnetConfig, dt: float) -> List[ReportRow]:
    n_x, n_y, n_z = cfg.demag_factors
    x_hat = np.array([1.0, 0.0, 0.0])
    z_hat = np.array([0.0, 0.0, 1.0])
    rows = [
        ('volume', cfg.volume(), 'm^3'),
        ('energy_barrier', cfg.energy_barrier(), 'J'),
        ('energy_barrier_kt', cfg.energy_barrier_kt, ''),
        ('demag_nx', n_x, ''),
        ('demag_ny', n_y, ''),
        ('demag_nz', n_z, ''),
        ('demag_field_x', float(demag_field(cfg, x_hat)[0]), 'A/m'),
        ('uniaxial_field_x', float(uniaxial_field(cfg, x_hat)[0]), 'A/m'),
        (
            'interface_field_z',
            float(interface_anisotropy_field(cfg, z_hat)[2]),
            'A/m',
        ),
        ('me_field_per_volt', cfg.me_field_per_volt, 'A/m/V'),
        ('thermal_sigma', thermal_sigma(cfg, dt), 'A/m'),
    ]
    if cfg.temperature > 0:
        rows.append(
            (
                'mean_lifetime',
                mean_lifetime(cfg.energy_barrier(), cfg.t_l0, cfg.temperature),
                's',
            )
        )
    return rows
