from simadc.adc.engine import (
    AdcParams,
    Conversion,
    LookupTable,
    MagnetizationSweep,
    TransferCurve,
    calibrate_lut,
    convert,
    count_states,
    linear_fit,
    magnetization_sweep,
    nrmsd,
    sweep_transfer_curve,
)


__all__ = [
    'AdcParams',
    'Conversion',
    'LookupTable',
    'MagnetizationSweep',
    'TransferCurve',
    'calibrate_lut',
    'convert',
    'count_states',
    'linear_fit',
    'magnetization_sweep',
    'nrmsd',
    'sweep_transfer_curve',
]
