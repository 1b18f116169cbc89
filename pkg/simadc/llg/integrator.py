'''Heun integration of the stochastic LLG equation.

The thermal field is drawn once per step and held through both Heun stages
(Stratonovich interpretation). The magnetization is renormalized after every
step unless the drift diagnostic is requested.
'''

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union
import numpy as np
from simadc import logging
from simadc.constants import (
    DEFAULT_SEED,
    DT_DEFAULT,
    DT_MAX,
    M0_TILT_DEFAULT,
    NOISE_CHUNK_STEPS,
    RENORM_TOL_DEFAULT,
)
from simadc.exceptions import (
    ConfigException,
    InputException,
    IntegratorBlowUpException,
)
from simadc.magnet.core import MagnetConfig, MagState, me_field
from simadc.llg.kernels import as_triple, heun_chunk, heun_update, rhs
from simadc.llg.thermal import ThermalFieldSampler


__all__ = [
    'IntegratorParams',
    'TraceRecord',
    'llg_rhs',
    'heun_step',
    'simulate_trace',
    'tilted_state',
]


logger = logging.getLogger(__name__)

StateLike = Union[MagState, np.ndarray, Sequence[float]]

# Relative slack when checking that a cadence is a whole number of steps
CADENCE_TOL = 1e-6


@dataclass(frozen=True)
class IntegratorParams:
    dt: float = DT_DEFAULT
    seed: int = DEFAULT_SEED
    renorm_tol: float = RENORM_TOL_DEFAULT
    m0_tilt: float = M0_TILT_DEFAULT

    def __post_init__(self) -> None:
        if not (math.isfinite(self.dt) and 0 < self.dt <= DT_MAX):
            raise ConfigException(
                'dt must be in (0, {}] s, got {}'.format(DT_MAX, self.dt),
                extra={'key': 'dt'},
            )
        if not 0 <= self.seed < 2**64:
            raise ConfigException(
                'seed must be a 64-bit unsigned integer, got {}'.format(
                    self.seed
                ),
                extra={'key': 'seed'},
            )
        if not self.renorm_tol > 0:
            raise ConfigException(
                'renorm_tol must be positive, got {}'.format(self.renorm_tol),
                extra={'key': 'renorm_tol'},
            )
        if not 0 <= self.m0_tilt < 1:
            raise ConfigException(
                'm0_tilt must be in [0, 1), got {}'.format(self.m0_tilt),
                extra={'key': 'm0_tilt'},
            )


@dataclass(frozen=True, eq=False)
class TraceRecord:
    '''Recorded samples of one trajectory. m has shape (n, 3) and the first
    row is the initial state. v_sense and state are filled in by the device
    readout.'''

    t: np.ndarray
    m: np.ndarray
    final: MagState
    v_me: float
    max_drift: float = 0.0
    v_sense: Optional[np.ndarray] = None
    state: Optional[np.ndarray] = None

    @property
    def m_x(self) -> np.ndarray:
        return self.m[:, 0]

    @property
    def duration(self) -> float:
        return float(self.t[-1] - self.t[0])

    def __len__(self) -> int:
        return len(self.t)

    def with_readout(
        self, v_sense: np.ndarray, state: np.ndarray
    ) -> 'TraceRecord':
        return replace(self, v_sense=v_sense, state=state)


def tilted_state(sign: int = 1, tilt: float = M0_TILT_DEFAULT) -> MagState:
    '''Easy axis state (sign * x) tilted towards y to break the symmetry of
    the exact alignment.'''
    m = np.array([float(sign), tilt, 0.0])
    return MagState(m / np.linalg.norm(m), 0.0)


def _as_state(m0: StateLike, renorm_tol: float) -> MagState:
    state = m0 if isinstance(m0, MagState) else MagState(np.array(m0), 0.0)
    if state.m.shape != (3,) or not np.all(np.isfinite(state.m)):
        raise InputException(
            'Initial magnetization must be a finite 3-vector',
            extra={'m0': state.m},
        )
    if state.norm_error() > renorm_tol:
        raise InputException(
            'Initial magnetization is not a unit vector (|m| - 1 = {})'.format(
                state.norm_error()
            ),
            extra={'m0': state.m},
        )
    return state


def _bias(
    cfg: MagnetConfig, v_me: float, h_external: Optional[np.ndarray]
) -> np.ndarray:
    h = me_field(cfg, v_me)
    if h_external is not None:
        h = h + np.asarray(h_external, dtype=np.float64)
    return h


def llg_rhs(cfg: MagnetConfig, m: np.ndarray, h_eff: np.ndarray) -> np.ndarray:
    '''dm/dt in 1/s for magnetization m in the total field h_eff.'''
    m = np.asarray(m, dtype=np.float64)
    h = np.asarray(h_eff, dtype=np.float64)
    return np.array(rhs(*as_triple(m), *as_triple(h), cfg.gamma, cfg.alpha))


def heun_step(
    cfg: MagnetConfig,
    params: IntegratorParams,
    state: StateLike,
    v_me: float,
    sampler: Optional[ThermalFieldSampler] = None,
    h_external: Optional[np.ndarray] = None,
) -> MagState:
    '''Advances state by one step of params.dt.

    Without a sampler one is built from params.seed, so repeated calls
    reuse the same draw; pass a sampler to continue a stream.

    Raises:
        IntegratorBlowUpException: If the new state is not finite.
    '''
    state = _as_state(state, params.renorm_tol)
    if sampler is None:
        sampler = ThermalFieldSampler(cfg, params.dt, params.seed)
    bias = _bias(cfg, v_me, h_external) + sampler.sample()
    m = np.array(
        heun_update(
            *as_triple(state.m),
            *as_triple(bias),
            cfg.field_coefficients(),
            cfg.gamma,
            cfg.alpha,
            params.dt,
        )
    )
    norm = float(np.linalg.norm(m))
    if not math.isfinite(norm) or norm == 0.0:
        raise IntegratorBlowUpException(
            'Non finite magnetization at t={} s, dt={} s is too large for '
            'the applied fields'.format(state.t, params.dt),
            extra={'t': state.t, 'dt': params.dt},
        )
    return MagState(m / norm, state.t + params.dt)


def _steps(interval: float, dt: float, name: str) -> int:
    steps = int(round(interval / dt))
    if abs(steps * dt - interval) > CADENCE_TOL * max(interval, dt):
        raise InputException(
            '{} ({} s) is not a whole number of steps of {} s'.format(
                name, interval, dt
            ),
            extra={name: interval, 'dt': dt},
        )
    return steps


def simulate_trace(
    cfg: MagnetConfig,
    params: IntegratorParams,
    m0: StateLike,
    v_me: float,
    duration: float,
    record_every: float,
    sampler: Optional[ThermalFieldSampler] = None,
    stream: Sequence[int] = (),
    h_external: Optional[np.ndarray] = None,
    renormalize: bool = True,
) -> TraceRecord:
    '''Integrates for duration seconds and records the state every
    record_every seconds, starting with m0.

    Args:
        sampler (ThermalFieldSampler, optional): Noise source to continue.
            When omitted one is built from (params.seed, stream).
        renormalize (bool): False turns on the drift diagnostic, the norm is
            left free and TraceRecord.max_drift reports the largest change of
            |m| over a single step.

    Raises:
        InputException: On a negative duration, or a cadence shorter than
            (or not a multiple of) dt.
        IntegratorBlowUpException: If the state becomes non finite.
    '''
    if not duration >= 0:
        raise InputException(
            'duration must not be negative, got {}'.format(duration),
            extra={'duration': duration},
        )
    if record_every < params.dt * (1 - CADENCE_TOL):
        raise InputException(
            'record_every ({} s) is shorter than dt ({} s)'.format(
                record_every, params.dt
            ),
            extra={'record_every': record_every},
        )
    state = _as_state(m0, params.renorm_tol)
    if sampler is None:
        sampler = ThermalFieldSampler(cfg, params.dt, params.seed, stream)
    n_steps = _steps(duration, params.dt, 'duration')
    stride = _steps(record_every, params.dt, 'record_every')

    n_records = n_steps // stride
    records = np.empty((n_records + 1, 3))
    records[0] = state.m
    m = state.m.copy()
    coeffs = cfg.field_coefficients()
    bias = _bias(cfg, v_me, h_external)

    done, written, phase, max_drift = 0, 1, 0, 0.0
    while done < n_steps:
        n = min(NOISE_CHUNK_STEPS, n_steps - done)
        noise = sampler.sample_block(n)
        steps, n_rec, drift, phase = heun_chunk(
            m,
            noise,
            coeffs,
            bias,
            cfg.gamma,
            cfg.alpha,
            params.dt,
            stride,
            phase,
            renormalize,
            records[written:],
        )
        if steps < n:
            t_fail = state.t + (done + steps) * params.dt
            raise IntegratorBlowUpException(
                'Non finite magnetization at t={} s, dt={} s is too large '
                'for the applied fields'.format(t_fail, params.dt),
                extra={'t': t_fail, 'dt': params.dt},
            )
        done += n
        written += n_rec
        max_drift = max(max_drift, drift)
    logger.debug(
        'Integrated {} steps (v_me={}, stream={})'.format(
            n_steps, v_me, sampler.stream
        )
    )
    t = state.t + np.arange(n_records + 1) * (stride * params.dt)
    final = MagState(m, state.t + n_steps * params.dt)
    return TraceRecord(
        t=t, m=records, final=final, v_me=v_me, max_drift=max_drift
    )
