'''All exceptions found in this module

All exceptions are subclass of ExtendedException. Each class carries the
process exit code the command line reports when it escapes a run.
'''

from typing import Any, Optional
from simadc.constants import (
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_RUNTIME_ERROR,
)


class ExtendedException(Exception):
    exit_code = EXIT_RUNTIME_ERROR
    '''An extended Exception which apart from message
    holds extra information
    '''

    def __init__(self, message: str = '', extra: Optional[Any] = None) -> None:
        '''Args:
        message (str): The message for this exception
        extra (any, optional): Any extra information to be kept
            and used later
        '''
        super().__init__(message)
        self.extra = extra or {}


# Configuration


class ConfigException(ExtendedException):
    exit_code = EXIT_CONFIG_ERROR

    @property
    def key(self) -> Optional[str]:
        return self.extra.get('key')


class ConfigParseException(ConfigException):
    @property
    def line(self) -> Optional[int]:
        return self.extra.get('line')


class UnitException(ConfigException):
    pass


# Simulation


class SimulationException(ExtendedException):
    exit_code = EXIT_RUNTIME_ERROR


class IntegratorBlowUpException(SimulationException):
    pass


class InputException(SimulationException):
    pass


class InsufficientDataException(SimulationException):
    pass


class CalibrationException(SimulationException):
    pass


# Artifacts


class ArtifactException(ExtendedException):
    exit_code = EXIT_IO_ERROR
