from simadc.experiments.handlers.base import ExperimentHandler, voltage_tag
from simadc.experiments.handlers.trace import TraceHandler
from simadc.experiments.handlers.adc import AdcHandler, SweepHandler
from simadc.experiments.handlers.telegraph import (
    ArrheniusHandler,
    DwellHandler,
    SwitchingHandler,
)
from simadc.experiments.handlers.report import ReportHandler
from simadc.experiments.handlers.factory import ExperimentHandlerFactory


__all__ = [
    'ExperimentHandler',
    'voltage_tag',
    'TraceHandler',
    'AdcHandler',
    'SweepHandler',
    'ArrheniusHandler',
    'DwellHandler',
    'SwitchingHandler',
    'ReportHandler',
    'ExperimentHandlerFactory',
]
