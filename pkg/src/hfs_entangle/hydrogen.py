"""Hyperfine manifold of ground-state hydrogen in a static magnetic field.

All quantities are dimensionless: energies in units of the spin-spin constant
``A``, temperature ``T = kB tau / A`` and field ``xi = mu_B B / (2 A)``. The
Hamiltonian ``H/A = σe·σp + 2 xi σe_z`` acts on the product basis
``(|↑e↑p>, |↑e↓p>, |↓e↑p>, |↓e↓p>)``; the nuclear Zeeman term is neglected.

Eigenstates are labelled a, b, c, d by increasing energy at zero field:
``a`` is the singlet-like ground state, ``d = |↑↑>``, ``b = |↓↓>`` and ``c`` the
other mixed state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .constants import (
    CODATA,
    PhysicalConstants,
    kelvin_to_temperature,
    tesla_to_xi,
    xi_to_tesla,
)
from .exceptions import DomainError
from .roots import expand_upper, find_root

__all__ = [
    "T_CRITICAL_ZERO_FIELD",
    "HfsParams",
    "HfsEigenSystem",
    "build_hamiltonian",
    "energies",
    "analytic_eigensystem",
    "thermal_state",
    "partition_function",
    "g_factor_sum",
    "concurrence_closed_form",
    "coherence_closed_form",
    "entanglement_condition",
    "low_temperature_concurrence",
    "strong_field_coherence_approx",
    "critical_temperature",
    "critical_field",
    "critical_field_high_T_approx",
    "high_T_approx_temperature",
    "tau_c_physical",
    "tau_c_fundamental",
    "xi_to_tesla",
    "tesla_to_xi",
]

T_CRITICAL_ZERO_FIELD = 4 / math.log(3)

# Product-basis indices of |↑↑>, |↑↓>, |↓↑>, |↓↓>.
UU, UD, DU, DD = range(4)

XI_MAX = 1e6


def _check_T(T) -> np.ndarray:
    T = np.asarray(T, dtype=float)
    if not np.all(np.isfinite(T)) or np.any(T <= 0):
        raise DomainError("temperature T must be finite and > 0")
    return T


def _check_xi(xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    if not np.all(np.isfinite(xi)) or np.any(xi < 0):
        raise DomainError("field xi must be finite and >= 0")
    return xi


def _out(x: np.ndarray):
    return float(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class HfsParams:
    """A dimensionless state point: ``T = 1/(beta A)`` and ``xi = mu_B B / (2 A)``."""

    temperature_T: float
    xi: float

    def __post_init__(self):
        _check_T(self.temperature_T)
        _check_xi(self.xi)

    @property
    def beta_A(self) -> float:
        return 1.0 / self.temperature_T

    @classmethod
    def from_si(cls, kelvin: float, tesla: float, k: PhysicalConstants = CODATA) -> "HfsParams":
        return cls(kelvin_to_temperature(kelvin, k), tesla_to_xi(abs(tesla), k))


def build_hamiltonian(xi: float) -> np.ndarray:
    """``H/A`` as a 4x4 complex matrix (real symmetric in practice)."""
    xi = float(_check_xi(xi))
    spin_spin = sum(linalg.kron(s, s) for s in linalg.PAULI)
    zeeman = 2 * xi * linalg.kron(linalg.SIGMA_Z, linalg.IDENTITY2)
    return linalg.as_hermitian(spin_spin + zeeman)


def _energies(xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    s = np.hypot(1.0, xi)
    return np.stack([-1 - 2 * s, 1 - 2 * xi, -1 + 2 * s, 1 + 2 * xi], axis=-1)


def energies(xi) -> np.ndarray:
    """Energies ``(E_a, E_b, E_c, E_d) / A``; broadcasts over ``xi``."""
    return _energies(_check_xi(xi))


@dataclass(frozen=True)
class HfsEigenSystem:
    energies_over_A: dict[str, float]
    states: dict[str, np.ndarray]
    x_plus: float
    x_minus: float
    y_plus: float
    y_minus: float


def analytic_eigensystem(xi: float) -> HfsEigenSystem:
    """Closed-form eigenpairs.

    ``|c> = x+ |↑↓> + y+ |↓↑>`` and ``|a> = x- |↑↓> + y- |↓↑>`` with
    ``x± = (s ± xi)/sqrt(1 + (s ± xi)^2)``, ``y± = ±1/sqrt(1 + (s ± xi)^2)``,
    ``s = sqrt(1 + xi^2)``.
    """
    xi = float(_check_xi(xi))
    s = math.hypot(1.0, xi)
    # s - xi = 1/(s + xi) avoids cancellation at large xi
    k_plus, k_minus = s + xi, 1.0 / (s + xi)
    n_plus, n_minus = math.hypot(1.0, k_plus), math.hypot(1.0, k_minus)
    x_plus, y_plus = k_plus / n_plus, 1.0 / n_plus
    x_minus, y_minus = k_minus / n_minus, -1.0 / n_minus

    def ket(**amps):
        v = np.zeros(4, dtype=complex)
        for idx, amp in amps.items():
            v[{"uu": UU, "ud": UD, "du": DU, "dd": DD}[idx]] = amp
        return v

    e = _energies(xi)
    return HfsEigenSystem(
        energies_over_A=dict(zip("abcd", map(float, e))),
        states={
            "a": ket(ud=x_minus, du=y_minus),
            "b": ket(dd=1.0),
            "c": ket(ud=x_plus, du=y_plus),
            "d": ket(uu=1.0),
        },
        x_plus=x_plus,
        x_minus=x_minus,
        y_plus=y_plus,
        y_minus=y_minus,
    )


def thermal_state(T: float, xi: float) -> np.ndarray:
    """Gibbs density matrix ``exp(-H/T)/Z`` in the product basis.

    Built numerically (Jacobi eigendecomposition of the Hamiltonian, exponents
    shifted by the ground energy), so it is independent of the closed forms.
    """
    T = float(_check_T(T))
    return linalg.gibbs_state(build_hamiltonian(xi), T)


def partition_function(T, xi):
    """``Z = sum_u exp(-E_u / T)``. Overflows for very small ``T``; use ratios there."""
    T, xi = _check_T(T), _check_xi(xi)
    e = _energies(xi)
    return _out(np.exp(-e / T[..., None]).sum(axis=-1))


def g_factor_sum(T, xi):
    """``G = exp(-2/T) cosh(2 xi/T) + cosh(2 s/T)``; equals ``Z exp(-1/T) / 2``."""
    T, xi = _check_T(T), _check_xi(xi)
    b = 1 / T
    s = np.hypot(1.0, xi)
    return _out(np.exp(-2 * b) * np.cosh(2 * b * xi) + np.cosh(2 * b * s))


def _scaled_terms(T, xi):
    """Numerator and denominator of the closed forms, both multiplied by ``2 exp(-2bs)``.

    Every exponent is non-positive (``s >= |xi|``), so nothing overflows.
    Valid for either sign of ``xi``.
    """
    b = 1.0 / np.asarray(T, dtype=float)
    xi = np.asarray(xi, dtype=float)
    s = np.hypot(1.0, xi)
    head = -np.expm1(-4 * b * s)
    num = head / s - 2 * np.exp(-2 * b * (1 + s))
    den = (
        np.exp(-2 * b) * (np.exp(2 * b * (xi - s)) + np.exp(-2 * b * (xi + s)))
        + 1.0
        + np.exp(-4 * b * s)
    )
    return s, head, num, den


def _concurrence(T, xi):
    _, _, num, den = _scaled_terms(T, xi)
    return np.where(num > 0, num / den, 0.0)


def _coherence(T, xi):
    s, head, _, den = _scaled_terms(T, xi)
    return head / (s * den)


def concurrence_closed_form(T, xi):
    """``C = max(0, sinh(2bs)/s - exp(-2b)) / G`` with ``b = 1/T``; broadcasts."""
    return _out(_concurrence(_check_T(T), _check_xi(xi)))


def coherence_closed_form(T, xi):
    """l1-norm coherence ``D = sinh(2bs) / (G s)`` of the thermal state; broadcasts."""
    return _out(_coherence(_check_T(T), _check_xi(xi)))


def entanglement_condition(T, xi):
    """True where ``sinh(2bs) - s exp(-2b) > 0``, i.e. exactly where ``C > 0``."""
    _, _, num, _ = _scaled_terms(_check_T(T), _check_xi(xi))
    res = num > 0
    return bool(res) if np.ndim(res) == 0 else res


def low_temperature_concurrence(xi):
    """``T -> 0`` limit shared by C and D: ``1/sqrt(1 + xi^2)``."""
    return _out(1.0 / np.hypot(1.0, _check_xi(xi)))


def strong_field_coherence_approx(T, xi):
    """Large-field estimate ``D ~ (1 - exp(-2/T)) / xi``.

    This is first order in ``exp(-2/T)``; the exact leading behaviour is
    ``1 / (xi (1 + exp(-2/T)))``, so the estimate degrades as ``T`` grows.
    """
    T, xi = _check_T(T), _check_xi(xi)
    return _out(-np.expm1(-2 / T) / xi)


def _condition_scaled(b: float, xi: float) -> float:
    # exp(-2bs) * (sinh(2bs) - s exp(-2b)); same sign, bounded
    s = math.hypot(1.0, xi)
    return -math.expm1(-4 * b * s) / 2 - s * math.exp(-2 * b * (1 + s))


def critical_temperature(xi: float) -> float:
    """Temperature at which the thermal state at field ``xi`` becomes separable."""
    xi = float(_check_xi(xi))
    f = lambda b: _condition_scaled(b, xi)  # noqa: E731
    lo, hi = expand_upper(f, 1e-300, 1.0, limit=1e6)
    return 1.0 / find_root(f, lo, hi)


def critical_field(T: float) -> float | None:
    """Smallest field ``xi_c`` that induces entanglement at temperature ``T``.

    Returns ``None`` when the state is already entangled at zero field
    (``T < 4/ln 3``).
    """
    T = float(_check_T(T))
    b = 1.0 / T
    f = lambda xi: _condition_scaled(b, xi)  # noqa: E731
    f0 = f(0.0)
    if f0 > 0:
        return None
    if f0 == 0:
        return 0.0
    lo, hi = expand_upper(f, 0.0, 1.0, limit=XI_MAX)
    return find_root(f, lo, hi)


def high_T_approx_temperature(xi_c):
    """``T = 2 (xi_c + 1) / ln(2 xi_c)``, the large-field reduction of the critical condition."""
    xi_c = np.asarray(xi_c, dtype=float)
    if np.any(xi_c <= 0.5):
        raise DomainError("approximation requires xi_c > 1/2")
    return _out(2 * (xi_c + 1) / np.log(2 * xi_c))


def _approx_peak() -> float:
    # maximiser of ln(2x)/(x+1): (x+1)/x = ln(2x)
    return find_root(lambda x: (x + 1) / x - math.log(2 * x), 1.0, 10.0)


HIGH_T_APPROX_MIN_T = 5.0


def critical_field_high_T_approx(T: float) -> float:
    """Invert ``2/T = ln(2 xi)/(xi + 1)`` on its large-``xi`` branch. Valid for ``T >= 5``."""
    T = float(_check_T(T))
    if T < HIGH_T_APPROX_MIN_T:
        raise DomainError(f"high-temperature approximation needs T >= {HIGH_T_APPROX_MIN_T:g}")
    f = lambda x: math.log(2 * x) / (x + 1) - 2 / T  # noqa: E731
    lo = _approx_peak()
    lo, hi = expand_upper(f, lo, 2 * lo, limit=XI_MAX)
    return find_root(f, lo, hi)


def tau_c_physical(k: PhysicalConstants = CODATA) -> tuple[float, float]:
    """Zero-field threshold from the measured splitting: ``(kB tau_c in eV, tau_c in K)``."""
    energy = k.hfs_splitting / math.log(3)
    return energy / k.e_charge, energy / k.kB


def tau_c_fundamental(k: PhysicalConstants = CODATA) -> float:
    """``kB tau_c`` in eV from ``2/(3 ln 3) alpha^2 hbar^2 g_e g_p / (a0^2 m_p)``.

    This is the Fermi contact splitting over ln 3; it omits reduced-mass and
    radiative corrections, so it sits a few 1e-3 above the measured value.
    """
    energy = 2 / (3 * math.log(3)) * k.alpha**2 * k.hbar**2 * k.g_e * k.g_p / (k.a0**2 * k.mp)
    return energy / k.e_charge
