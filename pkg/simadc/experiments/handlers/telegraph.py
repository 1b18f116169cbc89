from typing import List
from simadc import logging
from simadc.constants import KB
from simadc.experiments.artifacts import Table
from simadc.experiments.handlers.base import ExperimentHandler
from simadc.experiments.queue import WorkQueue
from simadc.llg.integrator import simulate_trace, tilted_state
from simadc.telegraph.arrhenius import arrhenius_ladder
from simadc.telegraph.dwell import extract_dwells
from simadc.telegraph.switching import switching_curve


__all__ = ['DwellHandler', 'ArrheniusHandler', 'SwitchingHandler']


logger = logging.getLogger(__name__)


class DwellHandler(ExperimentHandler):
    '''Zero bias telegraph trace and its dwell times.'''

    kind = 'dwell'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        telegraph = self.config.telegraph
        params = self.integrator
        trace = simulate_trace(
            self.config.magnet,
            params,
            tilted_state(1, params.m0_tilt),
            0.0,
            telegraph.dwell_duration,
            telegraph.dwell_record_every,
            stream=(0,),
        )
        stats = extract_dwells(
            trace, telegraph.hysteresis_hi, telegraph.hysteresis_lo
        )
        if not stats.sufficient:
            logger.warning(
                'Only {} transitions in {} s, dwell statistics are '
                'empty'.format(stats.n_transitions, telegraph.dwell_duration)
            )
        summary = [
            ('up', len(stats.up), stats.mean_up),
            ('down', len(stats.down), stats.mean_down),
            ('all', len(stats.up) + len(stats.down), stats.mean_dwell),
        ]
        return [
            Table('dwells.csv', ('state', 'dwell_s'), stats.rows()),
            Table(
                'dwell_summary.csv',
                ('state', 'n_dwells', 'mean_dwell_s'),
                summary,
            ),
        ]


class ArrheniusHandler(ExperimentHandler):
    '''Mean dwell time over a ladder of barriers and the lifetime fit.'''

    kind = 'arrhenius'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        cfg = self.config.magnet
        telegraph = self.config.telegraph
        points, fit = arrhenius_ladder(
            cfg,
            self.integrator,
            telegraph.eb_ladder_kt,
            telegraph.dwell_duration,
            telegraph.dwell_record_every,
            self.seed,
            hi=telegraph.hysteresis_hi,
            lo=telegraph.hysteresis_lo,
            mapper=queue.map,
        )
        kt = KB * cfg.temperature
        logger.info(
            'Arrhenius fit: t_l0={} s, slope={}, r^2={}'.format(
                fit.t_l0_fit, fit.slope_fit, fit.r_squared
            )
        )
        return [
            Table(
                'arrhenius.csv',
                ('e_b_over_kt', 'mean_dwell_s'),
                [(e_b / kt, dwell) for e_b, dwell in points],
            ),
            Table(
                'arrhenius_fit.csv',
                ('t_l0_fit_s', 'slope_fit', 'r_squared'),
                [(fit.t_l0_fit, fit.slope_fit, fit.r_squared)],
            ),
        ]


class SwitchingHandler(ExperimentHandler):
    '''Switching probability of a high barrier magnet against pulse
    amplitude.'''

    kind = 'psw'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        telegraph = self.config.telegraph
        curve = switching_curve(
            self.config.magnet,
            self.integrator,
            telegraph.psw_voltages,
            telegraph.t_pulse,
            telegraph.t_settle,
            telegraph.n_trials,
            self.seed,
            mapper=queue.map,
        )
        return [
            Table(
                'switching_curve.csv',
                ('v_pulse', 'p_switch', 'ci_lo', 'ci_hi', 'n_trials'),
                [
                    (r.v_pulse, r.p_switch, r.ci_lo, r.ci_hi, r.n_trials)
                    for r in curve.rows
                ],
            )
        ]
