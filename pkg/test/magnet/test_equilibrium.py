import numpy as np
import pytest
from simadc.exceptions import InputException
from simadc.magnet import boltzmann_equilibrium, energy_density


def test_symmetric_at_zero_bias(low_barrier_cfg):
    eq = boltzmann_equilibrium(low_barrier_cfg)
    assert eq.mean_mx == pytest.approx(0.0, abs=1e-6)
    assert eq.p_below == pytest.approx(0.5, abs=1e-6)
    assert eq.threshold == 0.0


def test_monotone_in_bias(low_barrier_cfg):
    means = [
        boltzmann_equilibrium(low_barrier_cfg, v).mean_mx
        for v in (-0.8, -0.4, 0.0, 0.4, 0.8)
    ]
    assert np.all(np.diff(means) > 0)
    assert -1 < means[0] < 0 < means[-1] < 1
    assert means[0] == pytest.approx(-means[-1], abs=1e-6)


def test_readout_threshold(low_barrier_cfg):
    eq = boltzmann_equilibrium(low_barrier_cfg, threshold=-0.268)
    assert 0.40 <= eq.p_below <= 0.55
    assert eq.p_below < 0.5

    assert boltzmann_equilibrium(low_barrier_cfg, threshold=-1).p_below == 0
    assert boltzmann_equilibrium(
        low_barrier_cfg, threshold=1
    ).p_below == pytest.approx(1.0)


def test_needs_temperature(frozen_cfg):
    with pytest.raises(InputException):
        boltzmann_equilibrium(frozen_cfg)


def test_energy_density(low_barrier_cfg):
    x = np.array([1.0, 0.0, 0.0])
    y = np.array([0.0, 1.0, 0.0])
    # The easy axis is lower in energy than the in-plane hard axis
    assert energy_density(low_barrier_cfg, x, 0.0) < energy_density(
        low_barrier_cfg, y, 0.0
    )
    assert energy_density(low_barrier_cfg, x, 0.0) == pytest.approx(
        energy_density(low_barrier_cfg, -x, 0.0)
    )
    # A positive bias favours +x
    assert energy_density(low_barrier_cfg, x, 0.4) < energy_density(
        low_barrier_cfg, -x, 0.4
    )
    stacked = energy_density(low_barrier_cfg, np.stack([x, y, -x]), 0.0)
    assert stacked.shape == (3,)
