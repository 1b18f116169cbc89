from simadc.llg.thermal import (
    ThermalFieldSampler,
    make_generator,
    sample_thermal_field,
    thermal_sigma,
    thermal_sigma_quantity,
)
from simadc.llg.integrator import (
    IntegratorParams,
    TraceRecord,
    heun_step,
    llg_rhs,
    simulate_trace,
    tilted_state,
)


__all__ = [
    'ThermalFieldSampler',
    'make_generator',
    'sample_thermal_field',
    'thermal_sigma',
    'thermal_sigma_quantity',
    'IntegratorParams',
    'TraceRecord',
    'heun_step',
    'llg_rhs',
    'simulate_trace',
    'tilted_state',
]
