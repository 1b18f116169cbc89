'''Logging module.

Every logger obtained with getLogger writes to stderr through a color
formatter. While an experiment runs, run_log additionally mirrors all of
them into a rotating log file inside the run's output directory, tagging
each line with the experiment kind.
'''

import os
import sys
import copy
import logging as _logging
from contextlib import contextmanager
from logging.handlers import RotatingFileHandler
from typing import Dict, Iterator, Optional


__all__ = [
    'DEBUG',
    'INFO',
    'WARNING',
    'ERROR',
    'CRITICAL',
    'RUN_LOG_NAME',
    'ColorFormatter',
    'getLogger',
    'setLevel',
    'level_from_env',
    'run_log',
]


DEBUG = _logging.DEBUG
INFO = _logging.INFO
WARNING = _logging.WARNING
ERROR = _logging.ERROR
CRITICAL = _logging.CRITICAL

RUN_LOG_NAME = 'simadc.log'
RUN_LOG_MAX_BYTES = 1 << 20


class ColorFormatter(_logging.Formatter):
    RESET = '\033[0m'
    BOLD = '\033[1m'
    LEVEL_COLORS = {
        'DEBUG': 34,
        'INFO': 37,
        'WARNING': 33,
        'ERROR': 31,
        'CRITICAL': 35,
    }
    FORMAT = (
        '{{asctime}}.{{msecs:03.0f}} | {{levelname}} | {prefix}'
        '[{bold}{{name}}.{{funcName}}:{{lineno}}{reset}]: {{message}}'
    )

    def __init__(self, use_color: bool = True, with_run: bool = False):
        '''Args:
        use_color (bool): Color the level name and bold the origin
        with_run (bool): Add the {run} field set by run_log after the level
        '''
        bold, reset = (self.BOLD, self.RESET) if use_color else ('', '')
        fmt = self.FORMAT.format(
            prefix='{run} | ' if with_run else '', bold=bold, reset=reset
        )
        super().__init__(fmt, '%Y-%m-%d:%H:%M:%S', style='{')
        self._use_color = use_color

    def format(self, record: _logging.LogRecord) -> str:
        color = self.LEVEL_COLORS.get(record.levelname)
        if self._use_color and color is not None:
            # Other handlers see the same record
            record = copy.copy(record)
            record.levelname = '\033[0;{}m{}{}'.format(
                color, record.levelname, self.RESET
            )
        return super().format(record)


class _RunFilter(_logging.Filter):
    def __init__(self, run: str):
        super().__init__()
        self.run = run

    def filter(self, record: _logging.LogRecord) -> bool:
        record.run = self.run
        return True


def level_from_env(
    var: str = 'SIMADC_VERBOSE', default: int = INFO
) -> int:
    '''Level named by the environment variable, e.g. SIMADC_VERBOSE=debug.
    Unknown or missing names give default.'''
    level = _logging.getLevelName(os.environ.get(var, '').upper())
    return level if isinstance(level, int) else default


class _Registry:
    def __init__(self) -> None:
        self.level = level_from_env()
        self.stderr_hdlr = _logging.StreamHandler(sys.stderr)
        self.stderr_hdlr.setFormatter(
            ColorFormatter(use_color=sys.stderr.isatty())
        )
        self.run_hdlr: Optional[_logging.Handler] = None
        self.loggers: Dict[str, _logging.Logger] = {}

    def get_logger(self, name: str) -> _logging.Logger:
        if name not in self.loggers:
            logger = _logging.getLogger(name)
            logger.setLevel(self.level)
            logger.addHandler(self.stderr_hdlr)
            if self.run_hdlr is not None:
                logger.addHandler(self.run_hdlr)
            self.loggers[name] = logger
        return self.loggers[name]

    def set_level(self, level: int) -> None:
        self.level = level
        for logger in self.loggers.values():
            logger.setLevel(level)

    def swap_run_handler(self, hdlr: Optional[_logging.Handler]) -> None:
        old = self.run_hdlr
        for logger in self.loggers.values():
            if old is not None:
                logger.removeHandler(old)
            if hdlr is not None:
                logger.addHandler(hdlr)
        if old is not None:
            old.close()
        self.run_hdlr = hdlr


_registry = _Registry()


def getLogger(name: str) -> _logging.Logger:
    '''Returns the logger called name, wired to stderr and to the log file of
    the current run if there is one.'''
    return _registry.get_logger(name)


def setLevel(level: int) -> None:
    '''Sets the level of every logger from this module'''
    _registry.set_level(level)


@contextmanager
def run_log(output_dir: str, run: str = '-') -> Iterator[str]:
    '''Mirrors all simadc loggers into output_dir/simadc.log while the block
    runs. Lines carry run, usually the experiment kind. The file is closed
    on exit, also when the block raises.

    Yields:
        str: The path of the log file
    '''
    path = os.path.join(output_dir, RUN_LOG_NAME)
    hdlr = RotatingFileHandler(
        path, maxBytes=RUN_LOG_MAX_BYTES, backupCount=1, encoding='utf-8'
    )
    hdlr.setFormatter(ColorFormatter(use_color=False, with_run=True))
    hdlr.addFilter(_RunFilter(run))
    _registry.swap_run_handler(hdlr)
    try:
        yield path
    finally:
        _registry.swap_run_handler(None)
