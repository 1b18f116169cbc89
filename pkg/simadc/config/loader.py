'''Turns parsed config values into validated parameter records.

Precedence: explicit overrides (command line), then the file, then the key
defaults.
'''

import math
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple
from simadc import logging
from simadc.config.parser import ConfigParser
from simadc.config.schema import CONFIG_KEYS, Value
from simadc.constants import CONFIGS_DIR
from simadc.adc.engine import AdcParams
from simadc.device.stack import DeviceStack, MtjParams, SenseParams
from simadc.exceptions import ConfigException, ConfigParseException
from simadc.llg.integrator import IntegratorParams
from simadc.magnet.core import MagnetConfig
from simadc.telegraph.params import TelegraphParams


__all__ = [
    'ExperimentParams',
    'SimulationConfig',
    'build_config',
    'load_config',
    'resolve_config_path',
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentParams:
    duration: float = 500e-9
    record_every: float = 1e-9
    voltages: Tuple[float, ...] = (-0.8, 0.0, 0.8)
    n_seeds: int = 4

    def __post_init__(self) -> None:
        if not self.duration > 0:
            raise ConfigException(
                'duration must be positive, got {}'.format(self.duration),
                extra={'key': 'duration'},
            )
        if not self.record_every > 0:
            raise ConfigException(
                'record_every must be positive, got {}'.format(
                    self.record_every
                ),
                extra={'key': 'record_every'},
            )
        if not self.voltages:
            raise ConfigException(
                'voltages must not be empty', extra={'key': 'voltages'}
            )
        if self.n_seeds < 1:
            raise ConfigException(
                'n_seeds must be positive, got {}'.format(self.n_seeds),
                extra={'key': 'n_seeds'},
            )


@dataclass(frozen=True)
class SimulationConfig:
    magnet: MagnetConfig = field(default_factory=MagnetConfig)
    integrator: IntegratorParams = field(default_factory=IntegratorParams)
    device: DeviceStack = field(default_factory=DeviceStack)
    adc: AdcParams = field(default_factory=AdcParams)
    telegraph: TelegraphParams = field(default_factory=TelegraphParams)
    experiment: ExperimentParams = field(default_factory=ExperimentParams)
    values: Mapping[str, Value] = field(default_factory=dict)
    source: Optional[str] = None


def _section(values: Mapping[str, Value], section: str) -> Dict[str, Any]:
    return {
        name: values[name]
        for name, key in CONFIG_KEYS.items()
        if key.section == section and values.get(name) is not None
    }


def build_config(
    values: Mapping[str, Value], source: Optional[str] = None
) -> SimulationConfig:
    '''Builds every record from a complete key -> SI value mapping (missing
    keys take their default).

    Raises:
        ConfigException: If a record rejects its values, naming the key.
    '''
    resolved: Dict[str, Value] = {
        name: key.default for name, key in CONFIG_KEYS.items()
    }
    resolved.update(values)

    magnet_values = _section(resolved, 'magnet')
    e_b_over_kt = magnet_values.pop('energy_barrier_kt', None)
    magnet = MagnetConfig(**magnet_values)
    if e_b_over_kt is not None:
        magnet = magnet.with_energy_barrier(e_b_over_kt)
        resolved['ku2'] = magnet.ku2

    if resolved['r_ref'] is None:
        resolved['r_ref'] = math.sqrt(resolved['r_p'] * resolved['r_ap'])
    if resolved['v_threshold'] is None:
        resolved['v_threshold'] = resolved['v_read'] / 2
    mtj = MtjParams(
        r_p=resolved['r_p'],
        r_ap=resolved['r_ap'],
        m_pinned=(
            resolved['pinned_x'],
            resolved['pinned_y'],
            resolved['pinned_z'],
        ),
    )
    sense = SenseParams(
        r_ref=resolved['r_ref'],
        v_read=resolved['v_read'],
        v_threshold=resolved['v_threshold'],
    )
    device = DeviceStack(
        mtj=mtj, sense=sense, me_polarity=int(resolved['me_polarity'])
    )
    return SimulationConfig(
        magnet=magnet,
        integrator=IntegratorParams(**_section(resolved, 'integrator')),
        device=device,
        adc=AdcParams(**_section(resolved, 'adc')),
        telegraph=TelegraphParams(**_section(resolved, 'telegraph')),
        experiment=ExperimentParams(**_section(resolved, 'experiment')),
        values=resolved,
        source=source,
    )


def resolve_config_path(path: str) -> str:
    '''Returns path, or the bundled config of that name (with or without
    the .conf suffix) when path does not exist.'''
    if os.path.exists(path):
        return path
    name = path if path.endswith('.conf') else path + '.conf'
    bundled = os.path.join(CONFIGS_DIR, name)
    if os.path.exists(bundled):
        return bundled
    raise ConfigException(
        'Config file not found: {}'.format(path), extra={'path': path}
    )


def load_config(
    path: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> SimulationConfig:
    '''Reads the config file (or only defaults when path is None) and
    applies overrides. String overrides are parsed like file values.

    Raises:
        ConfigException: On any parse or validation error.
    '''
    parser = ConfigParser()
    values: Dict[str, Value] = {}
    source = None
    if path is not None:
        source = resolve_config_path(path)
        try:
            with open(source, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise ConfigException(
                'Cannot read config {}: {}'.format(source, e),
                extra={'path': source},
            ) from e
        parsed = parser.parse(text, source)
        values = {name: entry.value for name, entry in parsed.items()}

    for name, value in (overrides or {}).items():
        if name not in CONFIG_KEYS:
            raise ConfigParseException(
                'override: {}: unknown key'.format(name),
                extra={'key': name, 'line': None},
            )
        if isinstance(value, str):
            value = parser.parse_value(name, value, source='override')
        elif CONFIG_KEYS[name].kind == 'list':
            value = tuple(float(v) for v in value)
        elif CONFIG_KEYS[name].kind == 'int':
            value = int(value)
        else:
            value = float(value)
        values[name] = value
        logger.debug('Override {} = {}'.format(name, value))

    return build_config(values, source)
