from typing import List, Tuple
from simadc import logging
from simadc.config.loader import SimulationConfig
from simadc.experiments.artifacts import Table
from simadc.experiments.handlers.base import ExperimentHandler, voltage_tag
from simadc.experiments.queue import WorkQueue
from simadc.llg.integrator import (
    IntegratorParams,
    TraceRecord,
    simulate_trace,
    tilted_state,
)


__all__ = ['TraceHandler']


logger = logging.getLogger(__name__)

TRACE_HEADER = ('t_s', 'm_x', 'm_y', 'm_z')
STATE_HEADER = ('t_s', 'v_sense', 'state')


class _TraceTask:
    def __init__(self, config: SimulationConfig, params: IntegratorParams):
        self.config = config
        self.params = params

    def __call__(self, item: Tuple[int, float]) -> TraceRecord:
        index, v_in = item
        device = self.config.device
        experiment = self.config.experiment
        trace = simulate_trace(
            self.config.magnet,
            self.params,
            tilted_state(1, self.params.m0_tilt),
            device.me_voltage(v_in),
            experiment.duration,
            experiment.record_every,
            stream=(index,),
        )
        return device.read_trace(trace)


class TraceHandler(ExperimentHandler):
    '''m(t) traces, one per input voltage, each starting near +x.'''

    kind = 'trace'

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        voltages = self.config.experiment.voltages
        task = _TraceTask(self.config, self.integrator)
        traces = queue.map(task, list(enumerate(voltages)))
        tables = []
        for v_in, trace in zip(voltages, traces):
            tag = voltage_tag(v_in)
            tables.append(
                Table(
                    'trace_v{}.csv'.format(tag),
                    TRACE_HEADER,
                    list(zip(trace.t, *trace.m.T)),
                )
            )
            tables.append(
                Table(
                    'state_v{}.csv'.format(tag),
                    STATE_HEADER,
                    list(zip(trace.t, trace.v_sense, trace.state)),
                )
            )
            logger.info(
                'v={} V: {} samples, mean m_x {:.4f}'.format(
                    tag, len(trace), float(trace.m_x.mean())
                )
            )
        return tables
