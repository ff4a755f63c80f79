import math

import numpy as np
import pytest

import isosqueeze as iq


def test_vacuum_state():
    v = iq.build_state("iii", 0.0)
    assert v.base_index == 3
    assert v.amps[0] == 1.0
    assert np.all(v.amps[1:] == 0.0)


def test_squeezed_vacuum_closed_forms():
    v = iq.build_state("iii", 0.4)
    mean, _ = iq.k0_moments(v)
    assert mean == pytest.approx(0.16 / 0.84, abs=1e-10)
    assert iq.mandel_q(v) == pytest.approx(2 * mean + 1, abs=1e-8)
    i1, i2 = iq.quadrature_identities(v)
    assert i1 == pytest.approx(0.8 / 0.6, abs=1e-6)
    assert i2 == pytest.approx(-0.8 / 1.4, abs=1e-6)


def test_nonlinear_state_statistics():
    v = iq.build_state("i", 20.0, 0.0, 70)
    assert v.norm() == pytest.approx(1.0, abs=1e-12)
    p = iq.photon_distribution(v)
    assert p[:, 1].sum() == pytest.approx(1.0, abs=1e-12)
    assert np.all(p[1::2, 1] == 0.0)
    assert iq.mandel_q(v) > 0.0
    assert iq.g2_zero(v) > 1.0


def test_errors_map_to_python():
    with pytest.raises(iq.RadiusViolation):
        iq.build_state("iii", 1.0)
    with pytest.raises(iq.UndefinedMoment):
        iq.mandel_q(iq.build_state("i", 0.0))
    with pytest.raises(iq.SParameterOutOfRange):
        iq.quasi_probability(iq.build_state("i", 0.0), 0.0, 1.0)


def test_reports():
    rep = iq.verify_commutators(3, 60)
    assert rep["max_deviation"] < 1e-10
    assert iq.dual_series_diagnosis(50)["verdict"] == "divergent"


def test_distributions():
    vac = iq.FockVector(np.array([1.0 + 0j]))
    assert iq.quasi_probability(vac, 0j, 0.0) == pytest.approx(2 / math.pi, abs=1e-12)
    v = iq.build_state("i", 10.0, 0.5)
    xs = np.linspace(-8, 8, 1601)
    grid = iq.quadrature_grid(v, xs, [0.0, 1.0])
    assert grid.shape == (1601, 2)
    assert np.trapezoid(grid[:, 0], xs) == pytest.approx(1.0, abs=1e-6)
    f = iq.quasi_probability_grid(iq.build_state("iii", 0.5), np.linspace(-4, 4, 81), np.linspace(-4, 4, 81), 0.0)
    assert f.sum() * 0.1 * 0.1 == pytest.approx(1.0, abs=1e-2)
