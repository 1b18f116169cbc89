from simadc.experiments.spec import ExperimentSpec, KINDS
from simadc.experiments.queue import WorkQueue
from simadc.experiments.artifacts import ArtifactWriter, Table
from simadc.experiments.handlers import (
    ExperimentHandler,
    ExperimentHandlerFactory,
)
from simadc.experiments.plots import emit_plot_scripts
from simadc.experiments.runner import RunResult, run_experiment


__all__ = [
    'ExperimentSpec',
    'KINDS',
    'WorkQueue',
    'ArtifactWriter',
    'Table',
    'ExperimentHandler',
    'ExperimentHandlerFactory',
    'emit_plot_scripts',
    'RunResult',
    'run_experiment',
]
