from simadc.telegraph.params import TelegraphParams
from simadc.telegraph.dwell import DwellStats, extract_dwells, schmitt_states
from simadc.telegraph.arrhenius import (
    ArrheniusFit,
    arrhenius_ladder,
    fit_arrhenius,
)
from simadc.telegraph.switching import (
    SwitchingCurve,
    SwitchingRow,
    switching_curve,
    switching_probability,
    wilson_interval,
)


__all__ = [
    'TelegraphParams',
    'DwellStats',
    'extract_dwells',
    'schmitt_states',
    'ArrheniusFit',
    'arrhenius_ladder',
    'fit_arrhenius',
    'SwitchingCurve',
    'SwitchingRow',
    'switching_curve',
    'switching_probability',
    'wilson_interval',
]
