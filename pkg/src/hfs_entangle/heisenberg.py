"""Two spins of an isotropic Heisenberg chain in a uniform field.

``H = J σ1·σ2 + mu_B B (σ1_z + σ2_z)`` with ``mu_B B = 2 |J| xi``. Energies are in
units of ``|J|`` and ``T = 1/(beta |J|)``. ``antiferromagnetic=True`` means
``J > 0``. Unlike hydrogen, the field only shifts the energies of the fixed
eigenbasis ``|↑↑>, |↓↓>, (|↑↓> ± |↓↑>)/√2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .hydrogen import _check_T, _check_xi, _out

T_CRITICAL = 4 / math.log(3)

_R2 = 1 / math.sqrt(2)
# columns: |1> = |↑↑>, |2> = |↓↓>, |3> = triplet zero, |4> = singlet
EIGENBASIS = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, _R2, _R2],
        [0, 0, _R2, -_R2],
        [0, 1, 0, 0],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class HcParams:
    temperature_T: float
    xi: float
    antiferromagnetic: bool = True

    def __post_init__(self):
        _check_T(self.temperature_T)
        _check_xi(self.xi)


def _sign(antiferromagnetic: bool) -> float:
    return 1.0 if antiferromagnetic else -1.0


def build_hc_hamiltonian(xi: float, antiferromagnetic: bool = True) -> np.ndarray:
    """``H/|J| = ±σ1·σ2 + 2 xi (σ1_z + σ2_z)``."""
    xi = float(_check_xi(xi))
    spin_spin = sum(linalg.kron(s, s) for s in linalg.PAULI)
    z_total = linalg.kron(linalg.SIGMA_Z, linalg.IDENTITY2) + linalg.kron(
        linalg.IDENTITY2, linalg.SIGMA_Z
    )
    return linalg.as_hermitian(_sign(antiferromagnetic) * spin_spin + 2 * xi * z_total)


def hc_energies(xi, antiferromagnetic: bool = True) -> np.ndarray:
    """``(E1, E2, E3, E4)/|J|`` for ``|↑↑>, |↓↓>``, triplet zero and singlet."""
    xi = _check_xi(xi)
    j = _sign(antiferromagnetic)
    one = np.ones_like(xi)
    return np.stack([j + 4 * xi, j - 4 * xi, j * one, -3 * j * one], axis=-1)


def hc_thermal_state(T: float, xi: float, antiferromagnetic: bool = True) -> np.ndarray:
    T = float(_check_T(T))
    return linalg.gibbs_state(build_hc_hamiltonian(xi, antiferromagnetic), T)


def _terms(T, xi, antiferromagnetic):
    # exponents of 1, e^{4bJxi}, e^{-4bJxi}, e^{4bJ} shifted by their maximum
    bj = _sign(antiferromagnetic) / np.asarray(T, dtype=float)
    bx = 4 * np.asarray(xi, dtype=float) / np.asarray(T, dtype=float)
    m = np.maximum.reduce([np.zeros_like(bx), bx, -bx, 4 * bj + 0 * bx])
    den = np.exp(-m) + np.exp(bx - m) + np.exp(-bx - m) + np.exp(4 * bj - m)
    return bj, m, den


def hc_concurrence(T, xi, antiferromagnetic: bool = True):
    """``max(0, (e^{4bJ} - 3) / (1 + e^{4bJxi} + e^{-4bJxi} + e^{4bJ}))``; broadcasts."""
    T, xi = _check_T(T), _check_xi(xi)
    bj, m, den = _terms(T, xi, antiferromagnetic)
    num = np.exp(4 * bj - m) - 3 * np.exp(-m)
    return _out(np.where(num > 0, num / den, 0.0))


def hc_coherence(T, xi, antiferromagnetic: bool = True):
    """l1 coherence ``|e^{4bJ} - 1| / (1 + e^{4bJxi} + e^{-4bJxi} + e^{4bJ})``."""
    T, xi = _check_T(T), _check_xi(xi)
    bj, m, den = _terms(T, xi, antiferromagnetic)
    return _out(np.abs(np.exp(4 * bj - m) - np.exp(-m)) / den)


def hc_entanglement_condition(T, xi=0.0, antiferromagnetic: bool = True):
    """``e^{4bJ} > 3``; independent of the field."""
    T, xi = _check_T(T), _check_xi(xi)
    res = np.broadcast_to(4 * _sign(antiferromagnetic) / T > math.log(3), np.broadcast(T, xi).shape)
    return bool(res) if res.ndim == 0 else res.copy()


def hc_critical_temperature() -> float:
    """``4 / ln 3``, the same for every field."""
    return T_CRITICAL
