'''Keys accepted in a simulation config file, with their SI unit and
default.

A key with default None has no fixed default: energy_barrier_kt is optional,
r_ref and v_threshold are derived from other keys when absent.
'''

from dataclasses import dataclass
from typing import Dict, Tuple, Union
from simadc.constants import (
    DEFAULT_SEED,
    DT_DEFAULT,
    GAMMA_DEFAULT,
    M0_TILT_DEFAULT,
    RENORM_TOL_DEFAULT,
    SPEED_OF_LIGHT,
)


__all__ = ['ConfigKey', 'CONFIG_KEYS', 'SECTIONS', 'Value']


Value = Union[None, int, float, Tuple[float, ...]]

SECTIONS = (
    'magnet',
    'integrator',
    'device',
    'adc',
    'telegraph',
    'experiment',
)


@dataclass(frozen=True)
class ConfigKey:
    name: str
    section: str
    unit: str = ''
    default: Value = None
    kind: str = 'float'


def _keys(*keys: ConfigKey) -> Dict[str, ConfigKey]:
    return {key.name: key for key in keys}


CONFIG_KEYS = _keys(
    # magnet
    ConfigKey('length_x', 'magnet', 'm', 20e-9),
    ConfigKey('length_y', 'magnet', 'm', 10e-9),
    ConfigKey('thickness', 'magnet', 'm', 1.35e-9),
    ConfigKey('ms', 'magnet', 'A/m', 600.3e3),
    ConfigKey('alpha', 'magnet', '', 0.012),
    ConfigKey('ku2', 'magnet', 'J/m**3', 15.3e3),
    ConfigKey('ki', 'magnet', 'J/m**2', 1e-5),
    ConfigKey('t_me', 'magnet', 'm', 5e-9),
    ConfigKey('alpha_me', 'magnet', 's/m', 0.05 / SPEED_OF_LIGHT),
    ConfigKey('temperature', 'magnet', 'K', 300.0),
    ConfigKey('gamma', 'magnet', 'm/(A*s)', GAMMA_DEFAULT),
    ConfigKey('energy_barrier_kt', 'magnet', '', None),
    ConfigKey('t_l0', 'magnet', 's', 1e-9),
    # integrator
    ConfigKey('dt', 'integrator', 's', DT_DEFAULT),
    ConfigKey('seed', 'integrator', '', DEFAULT_SEED, 'int'),
    ConfigKey('renorm_tol', 'integrator', '', RENORM_TOL_DEFAULT),
    ConfigKey('m0_tilt', 'integrator', '', M0_TILT_DEFAULT),
    # device
    ConfigKey('r_p', 'device', 'ohm', 1e6),
    ConfigKey('r_ap', 'device', 'ohm', 3e6),
    ConfigKey('r_ref', 'device', 'ohm', None),
    ConfigKey('v_read', 'device', 'V', 0.17),
    ConfigKey('v_threshold', 'device', 'V', None),
    ConfigKey('me_polarity', 'device', '', -1, 'int'),
    ConfigKey('pinned_x', 'device', '', 1.0),
    ConfigKey('pinned_y', 'device', '', 0.0),
    ConfigKey('pinned_z', 'device', '', 0.0),
    # adc
    ConfigKey('f_clk', 'adc', 'Hz', 1e9),
    ConfigKey('t_s', 'adc', 's', 1e-5),
    ConfigKey('v_min', 'adc', 'V', -0.4),
    ConfigKey('v_max', 'adc', 'V', 0.4),
    ConfigKey('bits', 'adc', '', 4, 'int'),
    ConfigKey('t_burn_in', 'adc', 's', 10e-9),
    # telegraph
    ConfigKey('hysteresis_hi', 'telegraph', '', 0.5),
    ConfigKey('hysteresis_lo', 'telegraph', '', -0.5),
    ConfigKey('t_pulse', 'telegraph', 's', 10e-9),
    ConfigKey('t_settle', 'telegraph', 's', 10e-9),
    ConfigKey('n_trials', 'telegraph', '', 1000, 'int'),
    ConfigKey(
        'psw_voltages',
        'telegraph',
        'V',
        (0.0, 0.6, 0.9, 1.0, 1.1, 1.2, 1.3, 1.5, 2.0, 2.5),
        'list',
    ),
    ConfigKey(
        'eb_ladder_kt', 'telegraph', '', (0.5, 1.0, 1.5, 2.0, 2.5), 'list'
    ),
    ConfigKey('dwell_record_every', 'telegraph', 's', 10e-12),
    ConfigKey('dwell_duration', 'telegraph', 's', 20e-6),
    # experiment
    ConfigKey('duration', 'experiment', 's', 500e-9),
    ConfigKey('record_every', 'experiment', 's', 1e-9),
    ConfigKey('voltages', 'experiment', 'V', (-0.8, 0.0, 0.8), 'list'),
    ConfigKey('n_seeds', 'experiment', '', 4, 'int'),
)
