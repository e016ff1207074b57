import math

import numpy as np
import pytest

from hfs_entangle.entanglement import l1_coherence, wootters_concurrence
from hfs_entangle.heisenberg import (
    EIGENBASIS,
    HcParams,
    build_hc_hamiltonian,
    hc_coherence,
    hc_concurrence,
    hc_critical_temperature,
    hc_energies,
    hc_entanglement_condition,
    hc_thermal_state,
)
from hfs_entangle.linalg import eigendecompose_hermitian

TC = 4 / math.log(3)


def test_zero_field_spectrum():
    w = eigendecompose_hermitian(build_hc_hamiltonian(0.0)).eigenvalues
    assert np.allclose(w, [-3, 1, 1, 1], atol=1e-14)


def test_unit_field_spectrum():
    w = eigendecompose_hermitian(build_hc_hamiltonian(1.0)).eigenvalues
    assert np.allclose(w, sorted([5, -3, 1, -3]), atol=1e-13)
    assert np.array_equal(hc_energies(1.0), [5, -3, 1, -3])


@pytest.mark.parametrize("xi", [0.0, 0.5, 1.0, 10.0])
def test_fixed_eigenbasis(xi):
    h = build_hc_hamiltonian(xi)
    e = hc_energies(xi)
    for i in range(4):
        v = EIGENBASIS[:, i]
        assert np.linalg.norm(h @ v - e[i] * v) < 1e-13


def test_eigenvectors_field_independent():
    # rank-one projectors per eigenvalue branch are unaffected by the field
    for xi in (0.3, 10.0):
        es = eigendecompose_hermitian(build_hc_hamiltonian(xi))
        for i in range(4):
            v = es.eigenvectors[:, i]
            overlaps = np.abs(EIGENBASIS.conj().T @ v) ** 2
            assert abs(overlaps.max() - 1) < 1e-12


def test_critical_temperature():
    assert abs(hc_critical_temperature() - 3.6409569) < 1e-7
    for xi in (0, 1, 10):
        assert hc_concurrence(TC * 1.001, xi) == 0.0
    assert hc_concurrence(TC * 0.999, 0) > 0


def test_vanishes_above_threshold_for_all_fields():
    xi = np.linspace(0, 50, 201)
    for T in (3.68, 5.0, 100.0):
        assert np.all(hc_concurrence(T, xi) == 0.0)


def test_oracle_grid():
    for T in (0.01, 1, 2, 3, 3.64, 5):
        for xi in (0, 0.5, 0.99, 1.01, 2, 10):
            rho = hc_thermal_state(T, xi)
            assert abs(hc_concurrence(T, xi) - wootters_concurrence(rho)) <= 1e-10
            assert abs(hc_coherence(T, xi) - l1_coherence(rho)) <= 1e-10


def test_oracle_example_point():
    assert abs(hc_concurrence(2.0, 0.5) - wootters_concurrence(hc_thermal_state(2.0, 0.5))) < 1e-10


def test_vanishing_temperature_is_field_independent():
    for xi in (0, 1, 5, 20):
        lo, hi = 1.0, 10.0
        while hi - lo > 1e-9:
            mid = (lo + hi) / 2
            lo, hi = (mid, hi) if hc_concurrence(mid, xi) > 0 else (lo, mid)
        assert abs(lo - TC) < 1e-6


def test_step_sharpness_near_zero_temperature():
    assert hc_concurrence(0.001, 0.99) > 0.999
    assert hc_concurrence(0.001, 1.01) < 0.001
    assert hc_concurrence(0.001, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_step_smooths_with_temperature():
    # at T = 0.01 the gap 0.04 J at xi = 0.99 gives C = 1/(1 + e^-4)
    assert hc_concurrence(0.01, 0.99) == pytest.approx(1 / (1 + math.exp(-4)), rel=1e-12)


def test_ferromagnet_never_entangled():
    for T in (0.01, 0.5, 2.0):
        for xi in (0, 0.5, 3):
            assert hc_concurrence(T, xi, antiferromagnetic=False) == 0.0
            rho = hc_thermal_state(T, xi, antiferromagnetic=False)
            assert wootters_concurrence(rho) < 1e-12
            assert abs(hc_coherence(T, xi, False) - l1_coherence(rho)) < 1e-10


def test_condition_matches_sign():
    T = np.array([0.5, 3.0, 3.7, 10.0])
    assert list(hc_entanglement_condition(T, 2.0)) == [True, True, False, False]
    assert hc_entanglement_condition(1.0) is True


def test_params_validation():
    HcParams(1.0, 0.0)
    with pytest.raises(ValueError):
        HcParams(-1.0, 0.0)
    with pytest.raises(ValueError):
        HcParams(1.0, -2.0)
