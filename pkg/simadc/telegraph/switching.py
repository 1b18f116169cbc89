'''Pulse driven switching of a high barrier magnet.

A trial starts in the antiparallel well (m = -x plus the symmetry breaking
tilt), applies V_ME = v_pulse for t_pulse, relaxes at zero bias for t_settle
and succeeds when the final m_x is positive. Trial j of voltage point i draws
its noise from stream (i, j).
'''

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, List, Sequence, Tuple
import numpy as np
from scipy import stats
from simadc import logging
from simadc.exceptions import InputException
from simadc.llg.integrator import IntegratorParams, simulate_trace, tilted_state
from simadc.llg.thermal import ThermalFieldSampler
from simadc.magnet.core import MagnetConfig


__all__ = [
    'SwitchingRow',
    'SwitchingCurve',
    'wilson_interval',
    'switching_probability',
    'switching_curve',
]


logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], Iterable]

MIN_BARRIER_KT = 10.0


@dataclass(frozen=True)
class SwitchingRow:
    v_pulse: float
    successes: int
    n_trials: int
    ci_lo: float
    ci_hi: float

    @property
    def p_switch(self) -> float:
        return self.successes / self.n_trials


@dataclass(frozen=True)
class SwitchingCurve:
    rows: Tuple[SwitchingRow, ...]

    @property
    def v_pulse(self) -> np.ndarray:
        return np.array([row.v_pulse for row in self.rows])

    @property
    def p_switch(self) -> np.ndarray:
        return np.array([row.p_switch for row in self.rows])


def wilson_interval(
    successes: int, n: int, confidence: float = 0.95
) -> Tuple[float, float]:
    '''Wilson score interval of a binomial proportion.

    Raises:
        InputException: If n < 1 or successes is outside [0, n].
    '''
    if n < 1 or not 0 <= successes <= n:
        raise InputException(
            'Need n >= 1 and 0 <= successes <= n, got {} of {}'.format(
                successes, n
            ),
            extra={'successes': successes, 'n': n},
        )
    z = float(stats.norm.ppf(1 - (1 - confidence) / 2))
    p = successes / n
    z2n = z * z / n
    center = (p + z2n / 2) / (1 + z2n)
    half = z * math.sqrt(p * (1 - p) / n + z2n / (4 * n)) / (1 + z2n)
    return max(0.0, center - half), min(1.0, center + half)


class _TrialTask:
    def __init__(self, cfg, params, t_pulse, t_settle):
        self.cfg = cfg
        self.params = params
        self.t_pulse = t_pulse
        self.t_settle = t_settle

    def __call__(self, item: Tuple[Tuple[int, int], float]) -> bool:
        stream, v_pulse = item
        params = self.params
        sampler = ThermalFieldSampler(self.cfg, params.dt, params.seed, stream)
        pulse = simulate_trace(
            self.cfg,
            params,
            tilted_state(-1, params.m0_tilt),
            v_pulse,
            self.t_pulse,
            self.t_pulse,
            sampler,
        )
        final = pulse.final
        if self.t_settle > 0:
            final = simulate_trace(
                self.cfg,
                params,
                final,
                0.0,
                self.t_settle,
                self.t_settle,
                sampler,
            ).final
        return final.m_x > 0


def _check_barrier(cfg: MagnetConfig) -> None:
    if cfg.energy_barrier_kt < MIN_BARRIER_KT:
        raise InputException(
            'Switching experiments need E_B >= {} kT, got {:.2f} kT'.format(
                MIN_BARRIER_KT, cfg.energy_barrier_kt
            ),
            extra={'energy_barrier_kt': cfg.energy_barrier_kt},
        )


def switching_probability(
    cfg: MagnetConfig,
    params: IntegratorParams,
    v_pulse: float,
    t_pulse: float,
    n_trials: int,
    master_seed: int,
    t_settle: float = 10e-9,
    point: int = 0,
    mapper: Mapper = map,
) -> SwitchingRow:
    '''Fraction of n_trials pulses of V_ME = v_pulse that switch the magnet,
    with its 95% Wilson interval.

    Raises:
        InputException: If E_B < 10 kT or n_trials < 1.
    '''
    _check_barrier(cfg)
    if n_trials < 1:
        raise InputException(
            'n_trials must be positive, got {}'.format(n_trials),
            extra={'n_trials': n_trials},
        )
    task = _TrialTask(cfg, replace(params, seed=master_seed), t_pulse, t_settle)
    items = [((point, j), float(v_pulse)) for j in range(n_trials)]
    successes = sum(bool(s) for s in mapper(task, items))
    ci_lo, ci_hi = wilson_interval(successes, n_trials)
    logger.info(
        'v_pulse={} V: {}/{} switched'.format(v_pulse, successes, n_trials)
    )
    return SwitchingRow(
        v_pulse=float(v_pulse),
        successes=successes,
        n_trials=n_trials,
        ci_lo=ci_lo,
        ci_hi=ci_hi,
    )


def switching_curve(
    cfg: MagnetConfig,
    params: IntegratorParams,
    voltages: Sequence[float],
    t_pulse: float,
    t_settle: float,
    n_trials: int,
    master_seed: int,
    mapper: Mapper = map,
) -> SwitchingCurve:
    rows: List[SwitchingRow] = [
        switching_probability(
            cfg,
            params,
            v,
            t_pulse,
            n_trials,
            master_seed,
            t_settle=t_settle,
            point=i,
            mapper=mapper,
        )
        for i, v in enumerate(voltages)
    ]
    return SwitchingCurve(rows=tuple(rows))
