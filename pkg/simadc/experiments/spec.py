from dataclasses import dataclass, field
from typing import Any, Dict, Optional
from simadc.exceptions import ConfigException


__all__ = ['ExperimentSpec', 'KINDS']


KINDS = (
    'trace',
    'sweep',
    'adc',
    'dwell',
    'arrhenius',
    'psw',
    'report',
    'plots',
)


@dataclass(frozen=True)
class ExperimentSpec:
    '''What to run and where to put it. master_seed None means the seed key
    of the config.'''

    kind: str
    config_path: Optional[str] = None
    output_dir: str = 'simadc_output'
    master_seed: Optional[int] = None
    workers: int = 1
    overrides: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ConfigException(
                'Unknown experiment "{}", expected one of {}'.format(
                    self.kind, ', '.join(KINDS)
                ),
                extra={'key': 'kind'},
            )
        if self.workers < 1:
            raise ConfigException(
                'workers must be positive, got {}'.format(self.workers),
                extra={'key': 'workers'},
            )
        if self.master_seed is not None and not 0 <= self.master_seed < 2**64:
            raise ConfigException(
                'seed must be a 64-bit unsigned integer, got {}'.format(
                    self.master_seed
                ),
                extra={'key': 'seed'},
            )
