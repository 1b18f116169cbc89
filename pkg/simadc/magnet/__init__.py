from simadc.magnet.core import (
    FieldVector,
    MagnetConfig,
    MagState,
    demag_field,
    effective_field,
    energy_barrier,
    interface_anisotropy_field,
    me_field,
    mean_lifetime,
    uniaxial_field,
)
from simadc.magnet.demag import prism_demag_factors, prism_demag_oracle
from simadc.magnet.equilibrium import (
    Equilibrium,
    boltzmann_equilibrium,
    energy_density,
)


__all__ = [
    'FieldVector',
    'MagnetConfig',
    'MagState',
    'demag_field',
    'effective_field',
    'energy_barrier',
    'interface_anisotropy_field',
    'me_field',
    'mean_lifetime',
    'uniaxial_field',
    'prism_demag_factors',
    'prism_demag_oracle',
    'Equilibrium',
    'boltzmann_equilibrium',
    'energy_density',
]
