'''Constants used by simadc

Constants consist of physical constants, directories and defaults shared by
more than one module.
'''

import os
import math
import simadc

APP_NAME = 'simadc'

MAIN_DIR = os.path.dirname(os.path.dirname(os.path.realpath(simadc.__file__)))
CONFIGS_DIR = os.path.join(MAIN_DIR, 'data', 'configs')

# CODATA values, SI
MU0 = 4e-7 * math.pi
KB = 1.380649e-23
SPEED_OF_LIGHT = 299792458.0
ELEMENTARY_CHARGE = 1.602176634e-19
PLANCK = 6.62607015e-34

# Free electron gyromagnetic ratio times mu0, m/(A s)
GAMMA_DEFAULT = 2.21e5

# Integration policy
DT_DEFAULT = 0.5e-12
DT_MAX = 1e-12
RENORM_TOL_DEFAULT = 1e-9
M0_TILT_DEFAULT = 1e-3
NOISE_CHUNK_STEPS = 1 << 16

DEFAULT_SEED = 42

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2
EXIT_IO_ERROR = 3
