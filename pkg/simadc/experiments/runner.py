import os
import time
from dataclasses import dataclass, field
from typing import List, Optional
import simadc
from simadc import logging
from simadc.config.loader import load_config
from simadc.constants import EXIT_IO_ERROR, EXIT_RUNTIME_ERROR, EXIT_SUCCESS
from simadc.exceptions import ExtendedException
from simadc.experiments.artifacts import ArtifactWriter
from simadc.experiments.handlers import ExperimentHandlerFactory
from simadc.experiments.plots import emit_plot_scripts
from simadc.experiments.queue import WorkQueue
from simadc.experiments.spec import ExperimentSpec


__all__ = ['RunResult', 'run_experiment']


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    files: List[str] = field(default_factory=list)
    manifest: Optional[str] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_SUCCESS


def _failure(e: BaseException, exit_code: int) -> RunResult:
    return RunResult(exit_code=exit_code, error=str(e))


def _emit_plots(spec: ExperimentSpec) -> RunResult:
    try:
        scripts = emit_plot_scripts(spec.output_dir)
    except ExtendedException as e:
        logger.error(str(e))
        return _failure(e, e.exit_code)
    return RunResult(
        exit_code=EXIT_SUCCESS,
        files=[os.path.basename(path) for path in scripts],
    )


def run_experiment(spec: ExperimentSpec) -> RunResult:
    '''Runs one experiment and writes its CSVs, plot scripts, manifest and
    log into spec.output_dir.

    The config is loaded and validated before the output directory is
    touched, so a config error leaves nothing behind.
    '''
    if spec.kind == 'plots':
        return _emit_plots(spec)

    try:
        config = load_config(spec.config_path, spec.overrides)
        handler = ExperimentHandlerFactory.get_handler(config, spec)
    except ExtendedException as e:
        logger.error(str(e))
        return _failure(e, e.exit_code)

    try:
        os.makedirs(spec.output_dir, exist_ok=True)
    except OSError as e:
        logger.error('Cannot create {}: {}'.format(spec.output_dir, e))
        return _failure(e, EXIT_IO_ERROR)

    start = time.perf_counter()
    try:
        with logging.run_log(spec.output_dir, spec.kind):
            with WorkQueue(spec.workers) as queue:
                tables = handler.run(queue)
            writer = ArtifactWriter(spec.output_dir)
            for table in tables:
                writer.write_table(table)
            if handler.plottable:
                for path in emit_plot_scripts(spec.output_dir):
                    writer.register(path)
            manifest = writer.write_manifest(
                kind=spec.kind,
                version=simadc.__version__,
                seed=handler.seed,
                workers=spec.workers,
                config_path=config.source,
                config=dict(config.values),
                simulation_time_s=handler.wall_time,
                wall_time_s=time.perf_counter() - start,
            )
    except ExtendedException as e:
        logger.error(str(e))
        return _failure(e, e.exit_code)
    except OSError as e:
        logger.error('I/O error: {}'.format(e))
        return _failure(e, EXIT_IO_ERROR)
    except Exception as e:
        logger.exception('Experiment {} failed'.format(spec.kind))
        return _failure(e, EXIT_RUNTIME_ERROR)

    return RunResult(
        exit_code=EXIT_SUCCESS, files=writer.files, manifest=manifest
    )
