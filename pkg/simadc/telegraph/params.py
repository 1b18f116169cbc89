from dataclasses import dataclass
from typing import Tuple
from simadc.exceptions import ConfigException


__all__ = ['TelegraphParams']


@dataclass(frozen=True)
class TelegraphParams:
    '''Dwell detection, lifetime ladder and pulse experiment settings.'''

    hysteresis_hi: float = 0.5
    hysteresis_lo: float = -0.5
    t_pulse: float = 10e-9
    t_settle: float = 10e-9
    n_trials: int = 1000
    psw_voltages: Tuple[float, ...] = (
        0.0,
        0.6,
        0.9,
        1.0,
        1.1,
        1.2,
        1.3,
        1.5,
        2.0,
        2.5,
    )
    eb_ladder_kt: Tuple[float, ...] = (0.5, 1.0, 1.5, 2.0, 2.5)
    dwell_record_every: float = 10e-12
    dwell_duration: float = 20e-6

    def __post_init__(self) -> None:
        if not -1 <= self.hysteresis_lo < self.hysteresis_hi <= 1:
            raise ConfigException(
                'Need -1 <= hysteresis_lo < hysteresis_hi <= 1, '
                'got {} and {}'.format(self.hysteresis_lo, self.hysteresis_hi),
                extra={'key': 'hysteresis_hi'},
            )
        for key in ('t_pulse', 'dwell_record_every', 'dwell_duration'):
            if not getattr(self, key) > 0:
                raise ConfigException(
                    '{} must be positive'.format(key), extra={'key': key}
                )
        if self.t_settle < 0:
            raise ConfigException(
                't_settle must not be negative', extra={'key': 't_settle'}
            )
        if self.n_trials < 1:
            raise ConfigException(
                'n_trials must be positive, got {}'.format(self.n_trials),
                extra={'key': 'n_trials'},
            )
        if not self.psw_voltages:
            raise ConfigException(
                'psw_voltages must not be empty',
                extra={'key': 'psw_voltages'},
            )
        if any(kt < 0 for kt in self.eb_ladder_kt):
            raise ConfigException(
                'eb_ladder_kt values must not be negative',
                extra={'key': 'eb_ladder_kt'},
            )
