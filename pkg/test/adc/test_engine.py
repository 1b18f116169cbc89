import math
import numpy as np
import pytest
from simadc.adc import (
    AdcParams,
    Conversion,
    LookupTable,
    TransferCurve,
    calibrate_lut,
    convert,
    count_states,
    linear_fit,
    magnetization_sweep,
    nrmsd,
    sweep_transfer_curve,
)
from simadc.exceptions import (
    CalibrationException,
    ConfigException,
    InputException,
)
from simadc.llg import tilted_state


@pytest.fixture(scope='module')
def short_adc():
    '''Ten clock edges after a short burn-in.'''
    return AdcParams(t_s=10e-9, t_burn_in=2e-9)


def make_curve(v_in, c_out, slope, intercept, bits, n_samples):
    v_in = np.asarray(v_in, dtype=np.float64)
    return TransferCurve(
        v_in=v_in,
        mean_mx=np.zeros(len(v_in)),
        c_out=np.asarray(c_out),
        code=np.zeros(len(v_in), dtype=np.int64),
        slope=slope,
        intercept=intercept,
        nrmsd_percent=0.0,
        n_samples=n_samples,
        bits=bits,
        t_s=1e-6,
        f_clk=1e9,
        seed=1,
    )


def test_adc_params():
    adc = AdcParams()
    assert adc.n_samples == 10000
    assert adc.n_points == 17
    assert adc.clock_period == pytest.approx(1e-9)
    assert adc.voltages()[0] == pytest.approx(-0.4)
    assert adc.voltages()[8] == pytest.approx(0.0)
    assert len(AdcParams(bits=8).voltages()) == 257


@pytest.mark.parametrize(
    'kwargs,key',
    [
        ({'f_clk': 0.0}, 'f_clk'),
        ({'t_s': 10.5e-9}, 't_s'),
        ({'t_s': 0.1e-9}, 't_s'),
        ({'v_min': 0.4}, 'v_min'),
        ({'bits': 0}, 'bits'),
        ({'bits': 2.5}, 'bits'),
        ({'t_burn_in': -1e-9}, 't_burn_in'),
    ],
)
def test_adc_params_validation(kwargs, key):
    with pytest.raises(ConfigException) as info:
        AdcParams(**kwargs)
    assert info.value.key == key


def test_count_states():
    assert count_states([1, 0, 1, 1, 0], 5) == 3
    assert count_states([1, 0, 1, 1, 0], 3) == 2
    assert count_states([], 0) == 0

    rng = np.random.default_rng(2)
    stream = rng.integers(0, 2, size=1_000_000, dtype=np.int8)
    assert count_states(stream, len(stream)) == int(stream.sum())

    with pytest.raises(InputException):
        count_states([1, 0], 3)


def test_convert_frozen(frozen_cfg, params, short_adc):
    up = convert(0.0, frozen_cfg, params, short_adc, seed=1)
    assert up.c_out == 0
    assert up.mean_mx > 0.99
    assert up.n_samples == 10
    assert up.occupancy == 0

    down = convert(
        0.0, frozen_cfg, params, short_adc, seed=1, m0=tilted_state(-1)
    )
    assert down.c_out == down.n_samples
    assert down.mean_mx == pytest.approx(-1, abs=0.01)
    assert down.occupancy == 1


def test_convert_deterministic(low_barrier_cfg, params, short_adc):
    def run(stream):
        return convert(
            0.1, low_barrier_cfg, params, short_adc, seed=3, stream=stream
        )

    a = run((0,))
    assert isinstance(a, Conversion)
    assert a == run((0,))
    assert 0 <= a.c_out <= a.n_samples
    assert -1 <= a.mean_mx <= 1


def test_linear_fit():
    assert linear_fit([0, 1, 2], [1, 3, 5]) == pytest.approx((2.0, 1.0))
    with pytest.raises(InputException):
        linear_fit([1, 1, 1], [0, 1, 2])
    with pytest.raises(InputException):
        linear_fit([1], [1])
    with pytest.raises(InputException):
        linear_fit([0, 1], [0, 1, 2])


def test_nrmsd():
    assert nrmsd([(0, 0), (1, 1), (2, 0)]) == pytest.approx(47.14, abs=0.01)
    assert nrmsd([(0, 1), (1, 3), (2, 5), (3, 7)]) == pytest.approx(0, abs=1e-9)
    # Flat data has no range to normalize by
    assert nrmsd([(0, 2), (1, 2), (2, 2)]) == 0
    with pytest.raises(InputException):
        nrmsd([(0, 0), (1, 1)])


@pytest.mark.parametrize('scale,offset', [(2.0, 0.0), (-3.5, 7.0), (1e4, -2)])
def test_nrmsd_affine_invariant(scale, offset):
    rng = np.random.default_rng(8)
    x = np.linspace(-0.4, 0.4, 17)
    y = 100 * x + 50 + rng.normal(0, 2, len(x))
    base = nrmsd(np.column_stack([x, y]))
    assert base > 0
    moved = nrmsd(np.column_stack([x, scale * y + offset]))
    assert moved == pytest.approx(base, rel=1e-9)


def test_calibrate_lut():
    # Boundaries at 50 k + 100 for k = 1..15
    v_in = np.linspace(0, 16, 17)
    curve = make_curve(v_in, 50 * v_in + 100, 50.0, 100.0, 4, 1000)
    lut = calibrate_lut(curve)
    assert lut.bits == 4
    assert list(lut.boundaries) == [50.0 * k + 100 for k in range(1, 16)]
    assert lut.code(0) == 0
    assert lut.code(149) == 0
    assert lut.code(150) == 1
    assert lut.code(851) == 15
    assert lut.code(1000) == 15
    assert list(lut.codes([149, 150, 200, 900])) == [0, 1, 2, 15]

    table = lut.table
    assert len(table) == 1001
    assert np.all(np.diff(table) >= 0)
    assert set(table) == set(range(16))


def test_calibrate_one_bit():
    curve = make_curve([-1, 0, 1], [0, 5000, 10000], 5000.0, 5000.0, 1, 10000)
    lut = calibrate_lut(curve)
    assert list(lut.boundaries) == [5000.0]
    assert lut.code(4999) == 0
    assert lut.code(5000) == 1


@pytest.mark.parametrize('slope', [0.0, -1.0, math.nan])
def test_calibrate_needs_rising_curve(slope):
    curve = make_curve([0, 1, 2], [0, 0, 0], slope, 0.0, 1, 10)
    with pytest.raises(CalibrationException):
        calibrate_lut(curve)


def test_lookup_table_direct():
    lut = LookupTable(boundaries=np.array([2.5]), n_samples=5)
    assert list(lut.table) == [0, 0, 0, 1, 1, 1]


def test_sweep_transfer_curve_frozen(frozen_cfg, params):
    adc = AdcParams(t_s=5e-9, bits=1, t_burn_in=0.0)
    curve = sweep_transfer_curve(
        frozen_cfg, params, adc, master_seed=9, calibrate=False
    )
    assert len(curve) == 3
    assert list(curve.c_out) == [0, 0, 0]
    assert curve.slope == 0
    assert curve.nrmsd_percent == 0
    assert curve.lut is None
    assert curve.code is None
    assert curve.seed == 9
    rows = curve.rows()
    assert rows[0][0] == pytest.approx(-0.4)
    assert rows[0][2:] == (0,)

    # A flat curve has no code table
    with pytest.raises(CalibrationException):
        sweep_transfer_curve(frozen_cfg, params, adc, master_seed=9)


def fixed_counts(counts):
    '''Mapper that skips the simulation and reports the given counts.'''

    def mapper(func, items):
        return [
            Conversion(v_in=v, mean_mx=0.0, c_out=c, n_samples=10)
            for (_, v), c in zip(items, counts)
        ]

    return mapper


def test_sweep_transfer_curve_calibrates(frozen_cfg, params):
    adc = AdcParams(t_s=10e-9, bits=1, t_burn_in=0.0)
    curve = sweep_transfer_curve(
        frozen_cfg, params, adc, 1, mapper=fixed_counts([0, 4, 10])
    )
    assert curve.slope == pytest.approx(12.5)
    assert curve.intercept == pytest.approx(14 / 3)
    assert list(curve.code) == [0, 0, 1]
    assert curve.lut.boundaries == pytest.approx(np.array([14 / 3]))
    assert curve.rows()[1] == (0.0, 0.0, 4, 0)


def test_sweep_transfer_curve_falling(frozen_cfg, params):
    adc = AdcParams(t_s=10e-9, bits=1, t_burn_in=0.0)
    with pytest.raises(CalibrationException) as info:
        sweep_transfer_curve(
            frozen_cfg, params, adc, 1, mapper=fixed_counts([10, 5, 0])
        )
    assert info.value.extra['slope'] < 0
    assert info.value.exit_code == 2


def test_sweep_transfer_curve_mapper(low_barrier_cfg, params):
    adc = AdcParams(t_s=5e-9, bits=1, t_burn_in=0.0)
    seen = []

    def mapper(func, items):
        items = list(items)
        seen.extend(items)
        return [func(item) for item in reversed(items)][::-1]

    curve = sweep_transfer_curve(
        low_barrier_cfg,
        params,
        adc,
        master_seed=4,
        mapper=mapper,
        calibrate=False,
    )
    assert [key for key, _ in seen] == [(0,), (1,), (2,)]
    again = sweep_transfer_curve(
        low_barrier_cfg, params, adc, master_seed=4, calibrate=False
    )
    assert np.array_equal(curve.c_out, again.c_out)
    assert np.array_equal(curve.mean_mx, again.mean_mx)


def test_magnetization_sweep(frozen_cfg, low_barrier_cfg, params):
    adc = AdcParams(t_s=5e-9, t_burn_in=0.0)
    frozen = magnetization_sweep(
        frozen_cfg, params, adc, [-0.4, 0.4], 2, master_seed=1
    )
    assert frozen.n_seeds == 2
    assert len(frozen) == 2
    assert np.all(frozen.mean_mx > 0.99)
    assert np.all(frozen.std_mx == 0)
    assert np.all(np.isnan(frozen.boltzmann_mx))
    # Two points have no trend NRMSD
    assert math.isnan(frozen.nrmsd_percent)

    warm = magnetization_sweep(
        low_barrier_cfg, params, adc, [0.0], 1, master_seed=1
    )
    assert warm.std_mx[0] == 0
    assert warm.boltzmann_mx[0] == pytest.approx(0, abs=1e-6)
    assert len(warm.rows()) == 1

    with pytest.raises(InputException):
        magnetization_sweep(frozen_cfg, params, adc, [0.0], 0, master_seed=1)


def test_magnetization_sweep_trend(frozen_cfg, params):
    adc = AdcParams(t_s=5e-9, bits=1, t_burn_in=0.0)
    seen = []

    def mapper(func, items):
        items = list(items)
        seen.extend(key for key, _ in items)
        return [
            Conversion(v_in=v, mean_mx=-v + 0.01 * s, c_out=0, n_samples=5)
            for (_, s), v in items
        ]

    sweep = magnetization_sweep(
        frozen_cfg, params, adc, adc.voltages(), 2, 3, mapper=mapper
    )
    assert seen == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    assert len(sweep) == 3
    assert sweep.mean_mx == pytest.approx(np.array([0.405, 0.005, -0.395]))
    assert sweep.std_mx == pytest.approx(np.full(3, 0.01 / math.sqrt(2)))
    assert sweep.slope == pytest.approx(-1.0)
    assert sweep.intercept == pytest.approx(0.005)
    assert sweep.nrmsd_percent == pytest.approx(0, abs=1e-9)


def test_counts_follow_magnetization(low_barrier_cfg, params):
    # AP (STATE = 1) is m_x near -1, so more ones means lower <m_x>
    adc = AdcParams(t_s=200e-9, bits=2, v_min=-0.8, v_max=0.8)
    curve = sweep_transfer_curve(
        low_barrier_cfg, params, adc, master_seed=5, calibrate=False
    )
    occupancy = curve.c_out / curve.n_samples
    r = np.corrcoef(curve.mean_mx, occupancy)[0, 1]
    assert r < -0.95


def test_convert_bands(low_barrier_cfg, params):
    adc = AdcParams(t_s=1e-6)

    def occupancy(v_in, stream):
        conversion = convert(
            v_in, low_barrier_cfg, params, adc, seed=21, stream=stream
        )
        return conversion.occupancy

    assert 0.40 <= occupancy(0.0, (1,)) <= 0.55
    assert occupancy(adc.v_max, (2,)) > 0.55
    assert occupancy(adc.v_min, (0,)) < 0.40
