from test.fixtures import (
    units_service,
    low_barrier_cfg,
    frozen_cfg,
    high_barrier_cfg,
    larmor_cfg,
    larmor_field,
    params,
)


__all__ = [
    'units_service',
    'low_barrier_cfg',
    'frozen_cfg',
    'high_barrier_cfg',
    'larmor_cfg',
    'larmor_field',
    'params',
]
