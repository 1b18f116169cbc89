from typing import List
from simadc.adc.engine import magnetization_sweep, sweep_transfer_curve
from simadc.experiments.artifacts import Table
from simadc.experiments.handlers.base import ExperimentHandler
from simadc.experiments.queue import WorkQueue


__all__ = ['SweepHandler', 'AdcHandler']


class SweepHandler(ExperimentHandler):
    '''Time averaged m_x on the 2^m + 1 point grid of [v_min, v_max] over
    several seeds, and the NRMSD of its linear trend.'''

    kind = 'sweep'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        adc = self.config.adc
        sweep = magnetization_sweep(
            self.config.magnet,
            self.integrator,
            adc,
            adc.voltages(),
            self.config.experiment.n_seeds,
            self.seed,
            device=self.config.device,
            mapper=queue.map,
        )
        return [
            Table(
                'sweep.csv',
                ('v_in', 'mean_mx', 'std_mx', 'boltzmann_mx'),
                sweep.rows(),
            ),
            Table(
                'sweep_metrics.csv',
                (
                    'slope',
                    'intercept',
                    'nrmsd_percent',
                    'n_points',
                    'bits',
                    't_s',
                    'n_seeds',
                    'seed',
                ),
                [
                    (
                        sweep.slope,
                        sweep.intercept,
                        sweep.nrmsd_percent,
                        len(sweep),
                        adc.bits,
                        adc.t_s,
                        sweep.n_seeds,
                        self.seed,
                    )
                ],
            ),
        ]


class AdcHandler(ExperimentHandler):
    '''Transfer curve of the counter based converter, its linearity metrics
    and the count to code table. A curve that cannot be calibrated fails the
    run.'''

    kind = 'adc'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        curve = sweep_transfer_curve(
            self.config.magnet,
            self.integrator,
            self.config.adc,
            self.seed,
            device=self.config.device,
            mapper=queue.map,
        )
        return [
            Table(
                'transfer_curve.csv',
                ('v_in', 'mean_mx', 'c_out', 'code'),
                curve.rows(),
            ),
            Table(
                'adc_metrics.csv',
                (
                    'slope',
                    'intercept',
                    'nrmsd_percent',
                    'n_points',
                    't_s',
                    'f_clk',
                    'seed',
                ),
                [
                    (
                        curve.slope,
                        curve.intercept,
                        curve.nrmsd_percent,
                        len(curve),
                        curve.t_s,
                        curve.f_clk,
                        curve.seed,
                    )
                ],
            ),
            Table(
                'lut.csv',
                ('count', 'code'),
                list(enumerate(curve.lut.table)),
            ),
        ]
