'''Counter based conversion.

STATE is sampled on every clock edge during the conversion window t_s and the
ones are counted. Sweeping the input over 2^m + 1 equally spaced voltages
gives the transfer curve, whose least squares line defines both the
linearity metric and the count to code table.
'''

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, List, Optional, Sequence, Tuple
import numpy as np
from scipy import stats
from simadc import logging
from simadc.exceptions import (
    CalibrationException,
    ConfigException,
    InputException,
)
from simadc.device.stack import DeviceStack
from simadc.llg.integrator import (
    IntegratorParams,
    StateLike,
    simulate_trace,
    tilted_state,
)
from simadc.llg.thermal import ThermalFieldSampler
from simadc.magnet.core import MagnetConfig
from simadc.magnet.equilibrium import boltzmann_equilibrium


__all__ = [
    'AdcParams',
    'Conversion',
    'TransferCurve',
    'LookupTable',
    'MagnetizationSweep',
    'count_states',
    'convert',
    'linear_fit',
    'nrmsd',
    'calibrate_lut',
    'sweep_transfer_curve',
    'magnetization_sweep',
]


logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], Iterable]

# Fitted ranges below this fraction of the data range count as a flat fit
FLAT_FIT_TOL = 1e-12


@dataclass(frozen=True)
class AdcParams:
    f_clk: float = 1e9
    t_s: float = 1e-5
    v_min: float = -0.4
    v_max: float = 0.4
    bits: int = 4
    t_burn_in: float = 10e-9

    def __post_init__(self) -> None:
        if not (self.f_clk > 0 and self.t_s > 0):
            raise ConfigException(
                'f_clk and t_s must be positive',
                extra={'key': 'f_clk' if self.f_clk <= 0 else 't_s'},
            )
        count = self.f_clk * self.t_s
        if abs(count - round(count)) > 1e-6 * count or round(count) < 1:
            raise ConfigException(
                'f_clk * t_s must be a positive integer, got {}'.format(count),
                extra={'key': 't_s'},
            )
        if not self.v_min < self.v_max:
            raise ConfigException(
                'Need v_min < v_max, got {} and {}'.format(
                    self.v_min, self.v_max
                ),
                extra={'key': 'v_min'},
            )
        if int(self.bits) != self.bits or self.bits < 1:
            raise ConfigException(
                'bits must be a positive integer, got {}'.format(self.bits),
                extra={'key': 'bits'},
            )
        if self.t_burn_in < 0:
            raise ConfigException(
                't_burn_in must not be negative, got {}'.format(
                    self.t_burn_in
                ),
                extra={'key': 't_burn_in'},
            )

    @property
    def n_samples(self) -> int:
        return int(round(self.f_clk * self.t_s))

    @property
    def n_points(self) -> int:
        return 2**self.bits + 1

    @property
    def clock_period(self) -> float:
        return 1 / self.f_clk

    def voltages(self) -> np.ndarray:
        return np.linspace(self.v_min, self.v_max, self.n_points)


@dataclass(frozen=True)
class Conversion:
    v_in: float
    mean_mx: float
    c_out: int
    n_samples: int

    @property
    def occupancy(self) -> float:
        return self.c_out / self.n_samples


@dataclass(frozen=True, eq=False)
class LookupTable:
    '''Count to code mapping; count c gets the number of boundaries that are
    not above c.'''

    boundaries: np.ndarray
    n_samples: int

    @property
    def bits(self) -> int:
        return int(round(math.log2(len(self.boundaries) + 1)))

    def code(self, count: int) -> int:
        return int(np.searchsorted(self.boundaries, count, side='right'))

    def codes(self, counts: Sequence[int]) -> np.ndarray:
        return np.searchsorted(
            self.boundaries, np.asarray(counts), side='right'
        )

    @property
    def table(self) -> np.ndarray:
        return self.codes(np.arange(self.n_samples + 1))


@dataclass(frozen=True, eq=False)
class TransferCurve:
    v_in: np.ndarray
    mean_mx: np.ndarray
    c_out: np.ndarray
    code: Optional[np.ndarray]
    slope: float
    intercept: float
    nrmsd_percent: float
    n_samples: int
    bits: int
    t_s: float
    f_clk: float
    seed: int
    lut: Optional[LookupTable] = field(default=None)

    def __len__(self) -> int:
        return len(self.v_in)

    def rows(self) -> List[Tuple]:
        '''(v_in, mean_mx, c_out, code) rows, without code when the curve
        was not calibrated.'''
        rows = [
            (float(v), float(mx), int(c))
            for v, mx, c in zip(self.v_in, self.mean_mx, self.c_out)
        ]
        if self.code is None:
            return rows
        return [row + (int(k),) for row, k in zip(rows, self.code)]


@dataclass(frozen=True, eq=False)
class MagnetizationSweep:
    v_in: np.ndarray
    mean_mx: np.ndarray
    std_mx: np.ndarray
    boltzmann_mx: np.ndarray
    n_seeds: int
    slope: float = math.nan
    intercept: float = math.nan
    nrmsd_percent: float = math.nan

    def __len__(self) -> int:
        return len(self.v_in)

    def rows(self) -> List[Tuple[float, float, float, float]]:
        return [
            (float(v), float(mx), float(s), float(b))
            for v, mx, s, b in zip(
                self.v_in, self.mean_mx, self.std_mx, self.boltzmann_mx
            )
        ]


def count_states(state_stream: Sequence[int], n_samples: int) -> int:
    '''Number of ones among the first n_samples samples.

    Raises:
        InputException: If the stream is shorter than n_samples.
    '''
    stream = np.asarray(state_stream)
    if n_samples < 0 or len(stream) < n_samples:
        raise InputException(
            'Stream of {} samples is shorter than {}'.format(
                len(stream), n_samples
            ),
            extra={'n_samples': n_samples},
        )
    return int(np.count_nonzero(stream[:n_samples]))


def convert(
    v_in: float,
    cfg: MagnetConfig,
    params: IntegratorParams,
    adc: AdcParams,
    seed: int,
    device: Optional[DeviceStack] = None,
    stream: Sequence[int] = (),
    m0: Optional[StateLike] = None,
) -> Conversion:
    '''One conversion: after a burn-in at the input voltage the magnet runs
    for t_s and STATE is sampled at k / f_clk for k = 1..n_samples.'''
    device = device or DeviceStack()
    v_me = device.me_voltage(v_in)
    m0 = m0 if m0 is not None else tilted_state(1, params.m0_tilt)
    sampler = ThermalFieldSampler(cfg, params.dt, seed, stream)
    if adc.t_burn_in > 0:
        burn_in = simulate_trace(
            cfg, params, m0, v_me, adc.t_burn_in, adc.t_burn_in, sampler
        )
        m0 = burn_in.final
    trace = simulate_trace(
        cfg, params, m0, v_me, adc.t_s, adc.clock_period, sampler
    )
    _, state = device.state_trace(trace)
    samples = state[1:]
    c_out = count_states(samples, adc.n_samples)
    mean_mx = float(np.mean(trace.m_x[1 : adc.n_samples + 1]))
    logger.debug(
        'v_in={} V: c_out={}/{}, <m_x>={}'.format(
            v_in, c_out, adc.n_samples, mean_mx
        )
    )
    return Conversion(
        v_in=float(v_in),
        mean_mx=mean_mx,
        c_out=c_out,
        n_samples=adc.n_samples,
    )


def linear_fit(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    '''Least squares slope and intercept.

    Raises:
        InputException: With fewer than 2 points or a degenerate x range.
    '''
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(x) < 2 or len(x) != len(y):
        raise InputException(
            'Need at least 2 paired points for a line fit',
            extra={'n_points': len(x)},
        )
    if np.ptp(x) == 0:
        raise InputException(
            'Degenerate x range, all x equal {}'.format(x[0]),
            extra={'x': float(x[0])},
        )
    fit = stats.linregress(x, y)
    return float(fit.slope), float(fit.intercept)


def nrmsd(points: Sequence[Tuple[float, float]]) -> float:
    '''RMS deviation from the least squares line in percent of the fitted
    range, or of the data range when the fit is flat.

    Raises:
        InputException: With fewer than 3 points or a degenerate x range.
    '''
    data = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if len(data) < 3:
        raise InputException(
            'NRMSD needs at least 3 points, got {}'.format(len(data)),
            extra={'n_points': len(data)},
        )
    x, y = data[:, 0], data[:, 1]
    slope, intercept = linear_fit(x, y)
    fitted = slope * x + intercept
    rms = float(np.sqrt(np.mean((y - fitted) ** 2)))
    scale = float(np.ptp(fitted))
    data_range = float(np.ptp(y))
    if scale <= FLAT_FIT_TOL * data_range:
        scale = data_range
    if scale == 0:
        return 0.0
    return 100 * rms / scale


def calibrate_lut(
    curve: TransferCurve, bits: Optional[int] = None
) -> LookupTable:
    '''Splits the count axis with the fitted line evaluated at the code
    boundaries v_min + k (v_max - v_min) / 2^m, k = 1..2^m - 1.

    Raises:
        CalibrationException: If the fitted slope is not positive.
    '''
    bits = curve.bits if bits is None else bits
    if not curve.slope > 0:
        raise CalibrationException(
            'Transfer curve slope must be positive to build a monotone '
            'table, got {}'.format(curve.slope),
            extra={'slope': curve.slope},
        )
    v_min, v_max = float(curve.v_in[0]), float(curve.v_in[-1])
    k = np.arange(1, 2**bits)
    v_edges = v_min + k * (v_max - v_min) / 2**bits
    boundaries = curve.slope * v_edges + curve.intercept
    return LookupTable(boundaries=boundaries, n_samples=curve.n_samples)


class _ConvertTask:
    '''Picklable conversion of one (point index, voltage) for a worker
    pool.'''

    def __init__(self, cfg, params, adc, master_seed, device, stream_suffix=()):
        self.cfg = cfg
        self.params = params
        self.adc = adc
        self.master_seed = master_seed
        self.device = device
        self.stream_suffix = tuple(stream_suffix)

    def __call__(self, item: Tuple[Tuple[int, ...], float]) -> Conversion:
        key, v_in = item
        return convert(
            v_in,
            self.cfg,
            self.params,
            self.adc,
            self.master_seed,
            self.device,
            stream=tuple(key) + self.stream_suffix,
        )


def sweep_transfer_curve(
    cfg: MagnetConfig,
    params: IntegratorParams,
    adc: AdcParams,
    master_seed: int,
    device: Optional[DeviceStack] = None,
    mapper: Mapper = map,
    calibrate: bool = True,
) -> TransferCurve:
    '''Converts the 2^m + 1 grid voltages, point i on stream (i,), fits the
    counts against the input and maps them through the calibrated table.
    With calibrate=False only the counts and the fit are returned, code and
    lut are None.

    Raises:
        CalibrationException: If calibrating and the fitted slope is not
            positive.
    '''
    device = device or DeviceStack()
    voltages = adc.voltages()
    task = _ConvertTask(cfg, params, adc, master_seed, device)
    items = [((i,), float(v)) for i, v in enumerate(voltages)]
    logger.info(
        'Sweeping {} points over [{}, {}] V, t_s={} s'.format(
            len(items), adc.v_min, adc.v_max, adc.t_s
        )
    )
    results = list(mapper(task, items))
    c_out = np.array([r.c_out for r in results], dtype=np.int64)
    mean_mx = np.array([r.mean_mx for r in results])
    slope, intercept = linear_fit(voltages, c_out)
    error = nrmsd(np.column_stack([voltages, c_out]))
    curve = TransferCurve(
        v_in=voltages,
        mean_mx=mean_mx,
        c_out=c_out,
        code=None,
        slope=slope,
        intercept=intercept,
        nrmsd_percent=error,
        n_samples=adc.n_samples,
        bits=adc.bits,
        t_s=adc.t_s,
        f_clk=adc.f_clk,
        seed=master_seed,
    )
    logger.info('NRMSD {:.3f}% over {} points'.format(error, len(voltages)))
    if not calibrate:
        return curve
    lut = calibrate_lut(curve)
    return replace(curve, code=lut.codes(c_out).astype(np.int64), lut=lut)


def _linear_trend(
    v_in: np.ndarray, mean_mx: np.ndarray
) -> Tuple[float, float, float]:
    # nrmsd needs 3 points
    if len(v_in) < 3:
        return math.nan, math.nan, math.nan
    slope, intercept = linear_fit(v_in, mean_mx)
    return slope, intercept, nrmsd(np.column_stack([v_in, mean_mx]))


def magnetization_sweep(
    cfg: MagnetConfig,
    params: IntegratorParams,
    adc: AdcParams,
    voltages: Sequence[float],
    n_seeds: int,
    master_seed: int,
    device: Optional[DeviceStack] = None,
    mapper: Mapper = map,
) -> MagnetizationSweep:
    '''Time averaged m_x over t_s for each voltage and seed (stream
    (i, s, 0)), with the seed spread, the Boltzmann reference and, from 3
    points on, the linear trend of the seed means and its NRMSD.'''
    if n_seeds < 1:
        raise InputException(
            'n_seeds must be positive, got {}'.format(n_seeds),
            extra={'n_seeds': n_seeds},
        )
    device = device or DeviceStack()
    voltages = np.asarray(voltages, dtype=np.float64)
    task = _ConvertTask(cfg, params, adc, master_seed, device, (0,))
    items = [
        ((i, s), float(v))
        for i, v in enumerate(voltages)
        for s in range(n_seeds)
    ]
    results = list(mapper(task, items))
    mx = np.array([r.mean_mx for r in results]).reshape(len(voltages), n_seeds)
    std = mx.std(axis=1, ddof=1) if n_seeds > 1 else np.zeros(len(voltages))
    reference = np.array(
        [
            boltzmann_equilibrium(cfg, device.me_voltage(v)).mean_mx
            if cfg.temperature > 0
            else math.nan
            for v in voltages
        ]
    )
    mean_mx = mx.mean(axis=1)
    slope, intercept, error = _linear_trend(voltages, mean_mx)
    if len(voltages) >= 3:
        logger.info(
            '<m_x> trend NRMSD {:.3f}% over {} points'.format(
                error, len(voltages)
            )
        )
    return MagnetizationSweep(
        v_in=voltages,
        mean_mx=mean_mx,
        std_mx=std,
        boltzmann_mx=reference,
        n_seeds=n_seeds,
        slope=slope,
        intercept=intercept,
        nrmsd_percent=error,
    )
