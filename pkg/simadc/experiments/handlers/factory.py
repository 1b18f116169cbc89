from typing import Dict, Type
from simadc.config.loader import SimulationConfig
from simadc.exceptions import ConfigException
from simadc.experiments.handlers.adc import AdcHandler, SweepHandler
from simadc.experiments.handlers.base import ExperimentHandler
from simadc.experiments.handlers.report import ReportHandler
from simadc.experiments.handlers.telegraph import (
    ArrheniusHandler,
    DwellHandler,
    SwitchingHandler,
)
from simadc.experiments.handlers.trace import TraceHandler
from simadc.experiments.spec import ExperimentSpec


__all__ = ['ExperimentHandlerFactory']


class ExperimentHandlerFactory:
    handlers: Dict[str, Type[ExperimentHandler]] = {
        handler.kind: handler
        for handler in (
            TraceHandler,
            SweepHandler,
            AdcHandler,
            DwellHandler,
            ArrheniusHandler,
            SwitchingHandler,
            ReportHandler,
        )
    }

    @staticmethod
    def get_handler(
        config: SimulationConfig, spec: ExperimentSpec
    ) -> ExperimentHandler:
        if spec.kind in ExperimentHandlerFactory.handlers:
            return ExperimentHandlerFactory.handlers[spec.kind](config, spec)
        raise ConfigException(
            'No handler found for experiment "{}"'.format(spec.kind),
            extra={'key': 'kind'},
        )
