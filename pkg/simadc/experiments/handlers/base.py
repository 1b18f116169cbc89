import time
from dataclasses import replace
from functools import wraps
from typing import Any, Callable, List, TypeVar
from simadc import logging
from simadc.config.loader import SimulationConfig
from simadc.experiments.artifacts import Table
from simadc.experiments.queue import WorkQueue
from simadc.experiments.spec import ExperimentSpec
from simadc.llg.integrator import IntegratorParams


__all__ = ['ExperimentHandler', 'voltage_tag']


RT = TypeVar('RT')

logger = logging.getLogger(__name__)


def voltage_tag(v: float) -> str:
    '''Signed file name tag of a voltage, '+0.800' or '-0.800'.'''
    return '{:+.3f}'.format(float(v) + 0.0)


class ExperimentHandler:
    '''Runs one kind of experiment. run returns the tables to write; handlers
    never touch the output directory themselves.'''

    kind = ''
    plottable = True

    class Decorators:
        @staticmethod
        def timed(func: Callable[..., RT]) -> Callable[..., RT]:
            @wraps(func)
            def _wrapper(self: 'ExperimentHandler', *args, **kwargs) -> Any:
                logger.info('Running {} experiment'.format(self.kind))
                start = time.perf_counter()
                result = func(self, *args, **kwargs)
                self._wall_time = time.perf_counter() - start
                logger.info(
                    'Finished {} in {:.3f} s'.format(self.kind, self._wall_time)
                )
                return result

            return _wrapper

    def __init__(self, config: SimulationConfig, spec: ExperimentSpec) -> None:
        self._config = config
        self._spec = spec
        self._wall_time = 0.0

    @property
    def config(self) -> SimulationConfig:
        return self._config

    @property
    def spec(self) -> ExperimentSpec:
        return self._spec

    @property
    def seed(self) -> int:
        if self._spec.master_seed is not None:
            return self._spec.master_seed
        return self._config.integrator.seed

    @property
    def integrator(self) -> IntegratorParams:
        return replace(self._config.integrator, seed=self.seed)

    @property
    def wall_time(self) -> float:
        return self._wall_time

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        raise NotImplementedError

    @Decorators.timed
    def run(self, queue: WorkQueue) -> List[Table]:
        return self.run_raw(queue)
