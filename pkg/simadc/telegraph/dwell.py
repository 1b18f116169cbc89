'''Dwell times of a telegraphing trace.

A two threshold (Schmitt) detector turns m_x into UP/DOWN: the state becomes
UP once m_x > hi and DOWN once m_x < lo, and keeps its value in between. A
dwell is the time between two consecutive changes; the partial dwells before
the first and after the last change are dropped.
'''

import math
from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from simadc import logging
from simadc.exceptions import InputException, InsufficientDataException
from simadc.llg.integrator import TraceRecord


__all__ = ['DwellStats', 'UP', 'DOWN', 'schmitt_states', 'extract_dwells']


logger = logging.getLogger(__name__)

UP = 1
DOWN = -1


@dataclass(frozen=True, eq=False)
class DwellStats:
    up: np.ndarray
    down: np.ndarray
    n_transitions: int

    @property
    def sufficient(self) -> bool:
        return self.n_transitions >= 2

    @property
    def mean_up(self) -> float:
        return float(np.mean(self.up)) if len(self.up) else math.nan

    @property
    def mean_down(self) -> float:
        return float(np.mean(self.down)) if len(self.down) else math.nan

    @property
    def mean_dwell(self) -> float:
        dwells = np.concatenate([self.up, self.down])
        return float(np.mean(dwells)) if len(dwells) else math.nan

    @property
    def total(self) -> float:
        return float(np.sum(self.up) + np.sum(self.down))

    def rows(self) -> List[Tuple[str, float]]:
        '''(state, dwell) rows, UP dwells first.'''
        return [('up', float(d)) for d in self.up] + [
            ('down', float(d)) for d in self.down
        ]

    def require(self) -> 'DwellStats':
        if not self.sufficient:
            raise InsufficientDataException(
                'Only {} transitions detected, need at least 2'.format(
                    self.n_transitions
                ),
                extra={'n_transitions': self.n_transitions},
            )
        return self


def schmitt_states(m_x: np.ndarray, hi: float, lo: float) -> np.ndarray:
    '''UP/DOWN per sample, 0 before the first threshold crossing.'''
    raw = np.where(m_x > hi, UP, np.where(m_x < lo, DOWN, 0))
    # Forward fill the undecided samples with the last decided state
    index = np.where(raw != 0, np.arange(len(raw)), 0)
    np.maximum.accumulate(index, out=index)
    states = raw[index]
    return states


def extract_dwells(
    trace: TraceRecord, hi: float = 0.5, lo: float = -0.5
) -> DwellStats:
    '''Dwell times per state. Fewer than two transitions gives a result with
    empty samples and sufficient == False.

    Raises:
        InputException: If hi is not above lo.
    '''
    if not hi > lo:
        raise InputException(
            'Need hi > lo, got {} and {}'.format(hi, lo),
            extra={'hi': hi, 'lo': lo},
        )
    states = schmitt_states(np.asarray(trace.m_x), hi, lo)
    change = np.flatnonzero(
        (states[1:] != states[:-1]) & (states[:-1] != 0)
    ) + 1
    times = np.asarray(trace.t)[change]
    dwells = np.diff(times)
    entered = states[change[:-1]]
    stats = DwellStats(
        up=dwells[entered == UP],
        down=dwells[entered == DOWN],
        n_transitions=len(change),
    )
    logger.debug(
        '{} transitions, mean up {} s, mean down {} s'.format(
            stats.n_transitions, stats.mean_up, stats.mean_down
        )
    )
    return stats
