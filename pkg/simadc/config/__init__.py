from simadc.config.schema import CONFIG_KEYS, ConfigKey
from simadc.config.parser import ConfigParser, ParsedValue
from simadc.config.loader import (
    ExperimentParams,
    SimulationConfig,
    build_config,
    load_config,
    resolve_config_path,
)


__all__ = [
    'CONFIG_KEYS',
    'ConfigKey',
    'ConfigParser',
    'ParsedValue',
    'ExperimentParams',
    'SimulationConfig',
    'build_config',
    'load_config',
    'resolve_config_path',
]
