'''Fit of the Arrhenius lifetime law t_l = t_l0 exp(E_B / kT).'''

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, List, Sequence, Tuple
import numpy as np
from scipy import stats
from simadc import logging
from simadc.constants import KB
from simadc.exceptions import InputException
from simadc.llg.integrator import IntegratorParams, simulate_trace, tilted_state
from simadc.magnet.core import MagnetConfig
from simadc.telegraph.dwell import extract_dwells


__all__ = ['ArrheniusFit', 'fit_arrhenius', 'arrhenius_ladder']


logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], Iterable]
LadderPoint = Tuple[float, float]

MIN_SPAN_KT = 2.0


@dataclass(frozen=True)
class ArrheniusFit:
    t_l0_fit: float
    slope_fit: float
    r_squared: float


def fit_arrhenius(
    points: Sequence[Tuple[float, float]], temperature: float
) -> ArrheniusFit:
    '''Least squares line through ln(mean_dwell) against E_B/kT.

    Args:
        points: (E_B in joules, mean dwell in seconds) pairs.

    Raises:
        InputException: With fewer than 3 points, a barrier span below 2 kT,
            a non positive dwell or a non positive temperature.
    '''
    if temperature <= 0:
        raise InputException(
            'temperature must be positive, got {}'.format(temperature),
            extra={'temperature': temperature},
        )
    data = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if len(data) < 3:
        raise InputException(
            'Arrhenius fit needs at least 3 points, got {}'.format(len(data)),
            extra={'n_points': len(data)},
        )
    if np.any(~(data[:, 1] > 0)):
        raise InputException(
            'Mean dwell times must be positive', extra={'points': data}
        )
    x = data[:, 0] / (KB * temperature)
    if np.ptp(x) < MIN_SPAN_KT * (1 - 1e-9):
        raise InputException(
            'Barriers span {:.3f} kT, need at least {} kT'.format(
                np.ptp(x), MIN_SPAN_KT
            ),
            extra={'span_kt': float(np.ptp(x))},
        )
    fit = stats.linregress(x, np.log(data[:, 1]))
    return ArrheniusFit(
        t_l0_fit=math.exp(fit.intercept),
        slope_fit=float(fit.slope),
        r_squared=float(fit.rvalue**2),
    )


class _LadderTask:
    def __init__(self, cfg, params, duration, record_every, hi, lo):
        self.cfg = cfg
        self.params = params
        self.duration = duration
        self.record_every = record_every
        self.hi = hi
        self.lo = lo

    def __call__(self, item: Tuple[int, float]) -> LadderPoint:
        index, e_b_over_kt = item
        cfg = self.cfg.with_energy_barrier(e_b_over_kt)
        trace = simulate_trace(
            cfg,
            self.params,
            tilted_state(1, self.params.m0_tilt),
            0.0,
            self.duration,
            self.record_every,
            stream=(index,),
        )
        dwells = extract_dwells(trace, self.hi, self.lo).require()
        logger.info(
            'E_B={} kT: {} transitions, mean dwell {} s'.format(
                e_b_over_kt, dwells.n_transitions, dwells.mean_dwell
            )
        )
        return cfg.energy_barrier(), dwells.mean_dwell


def arrhenius_ladder(
    cfg: MagnetConfig,
    params: IntegratorParams,
    ladder_kt: Sequence[float],
    duration: float,
    record_every: float,
    master_seed: int,
    hi: float = 0.5,
    lo: float = -0.5,
    mapper: Mapper = map,
) -> Tuple[List[LadderPoint], ArrheniusFit]:
    '''Zero bias traces for every barrier of the ladder (point k on stream
    (k,)), their mean dwell times and the Arrhenius fit through them.

    Raises:
        InsufficientDataException: If a trace has fewer than 2 transitions.
    '''
    params = replace(params, seed=master_seed)
    task = _LadderTask(cfg, params, duration, record_every, hi, lo)
    points = list(mapper(task, list(enumerate(ladder_kt))))
    return points, fit_arrhenius(points, cfg.temperature)
