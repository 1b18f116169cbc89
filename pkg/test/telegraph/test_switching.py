import pytest
from simadc.exceptions import InputException
from simadc.telegraph import (
    SwitchingCurve,
    switching_curve,
    switching_probability,
    wilson_interval,
)


def test_wilson_interval():
    lo, hi = wilson_interval(0, 10)
    assert lo == pytest.approx(0, abs=1e-12)
    assert hi == pytest.approx(0.2775, abs=1e-4)

    lo, hi = wilson_interval(5, 10)
    assert lo + hi == pytest.approx(1)
    assert lo < 0.5 < hi

    lo, hi = wilson_interval(10, 10)
    assert hi == pytest.approx(1, abs=1e-12)
    assert lo == pytest.approx(1 - 0.2775, abs=1e-4)

    # Wider with more confidence, narrower with more trials
    assert wilson_interval(5, 10, 0.99)[0] < wilson_interval(5, 10)[0]
    assert wilson_interval(50, 100)[0] > wilson_interval(5, 10)[0]


@pytest.mark.parametrize('successes,n', [(0, 0), (-1, 10), (11, 10)])
def test_wilson_interval_rejects(successes, n):
    with pytest.raises(InputException):
        wilson_interval(successes, n)


def test_switching_probability(high_barrier_cfg, params):
    strong = switching_probability(
        high_barrier_cfg, params, 5.0, 20e-9, 8, master_seed=3
    )
    assert strong.n_trials == 8
    assert strong.p_switch >= 0.75
    assert strong.ci_lo <= strong.p_switch <= strong.ci_hi

    idle = switching_probability(
        high_barrier_cfg, params, 0.0, 20e-9, 8, master_seed=3
    )
    assert idle.successes == 0
    assert idle.ci_lo == pytest.approx(0, abs=1e-12)


def test_switching_probability_rejects(
    low_barrier_cfg, high_barrier_cfg, params
):
    with pytest.raises(InputException):
        switching_probability(
            low_barrier_cfg, params, 1.0, 10e-9, 4, master_seed=1
        )
    with pytest.raises(InputException):
        switching_probability(
            high_barrier_cfg, params, 1.0, 10e-9, 0, master_seed=1
        )


def test_switching_curve(high_barrier_cfg, params):
    seen = []

    def mapper(func, items):
        items = list(items)
        seen.extend(key for key, _ in items)
        return map(func, items)

    curve = switching_curve(
        high_barrier_cfg,
        params,
        [0.0, 5.0],
        t_pulse=5e-9,
        t_settle=5e-9,
        n_trials=2,
        master_seed=5,
        mapper=mapper,
    )
    assert isinstance(curve, SwitchingCurve)
    assert seen == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(curve.v_pulse) == [0.0, 5.0]
    assert curve.p_switch[0] == 0
    assert len(curve.rows) == 2
