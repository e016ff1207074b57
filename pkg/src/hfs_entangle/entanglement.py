"""Two-qubit entanglement and coherence of arbitrary 4x4 density matrices.

These routines know nothing about hydrogen or spin chains; they serve as the
numerical oracle for the closed-form expressions in the model modules.
"""

from __future__ import annotations

import numpy as np

from .exceptions import NotPSDError
from .linalg import (
    PSD_CLAMP_TOL,
    SIGMA_Y,
    as_hermitian,
    clamp_psd,
    eigendecompose_hermitian,
    kron,
    singular_values,
    sqrtm_psd,
)

TRACE_TOL = 1e-12

SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y).real.astype(complex)


def as_density_matrix(rho) -> np.ndarray:
    """Validate a 4x4 density matrix: Hermitian, unit trace, PSD up to the clamp tolerance."""
    m = as_hermitian(rho, 4)
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace is {tr!r}, expected 1")
    w = eigendecompose_hermitian(m).eigenvalues
    if w[0] < -PSD_CLAMP_TOL:
        raise NotPSDError(f"density matrix has eigenvalue {w[0]:.3e}")
    return m


def spin_flip(rho) -> np.ndarray:
    """Wootters spin-flipped state ``(σy⊗σy) ρ* (σy⊗σy)``."""
    m = as_hermitian(rho, 4)
    return SPIN_FLIP @ m.conj() @ SPIN_FLIP


def wootters_lambdas(rho, method: str = "svd") -> np.ndarray:
    """The four Wootters lambdas, sorted descending.

    ``method``:

    * ``"svd"`` (default) -- singular values of ``√ρ (σy⊗σy) √ρ*``. Since
      ``R² = (√ρ Y √ρ*)(√ρ Y √ρ*)^H`` these are exactly the eigenvalues of
      ``R``, but tiny lambdas are resolved to ``eps`` instead of ``sqrt(eps)``.
    * ``"hermitian"`` -- eigenvalues of ``R = sqrt(√ρ ρ̃ √ρ)`` from two PSD
      square roots.
    * ``"product"`` -- square roots of the eigenvalues of the non-Hermitian
      product ``ρ ρ̃`` (LAPACK general eigensolver); debug cross-check only.
    """
    m = as_density_matrix(rho)
    if method == "svd":
        root = sqrtm_psd(m)
        lam = singular_values(root @ SPIN_FLIP @ root.conj())
    elif method == "hermitian":
        root = sqrtm_psd(m)
        inner = root @ spin_flip(m) @ root
        lam = eigendecompose_hermitian(sqrtm_psd(inner)).eigenvalues
    elif method == "product":
        ev = np.linalg.eigvals(m @ spin_flip(m))
        lam = np.sqrt(clamp_psd(ev.real))
    else:
        raise ValueError(f"unknown method {method!r}")
    return np.sort(np.asarray(lam, dtype=float))[::-1]


def wootters_concurrence(rho, method: str = "svd") -> float:
    """Concurrence ``max(0, λ1 - λ2 - λ3 - λ4)`` of a two-qubit density matrix."""
    lam = wootters_lambdas(rho, method)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def pure_state_concurrence(psi) -> float:
    """``|<ψ|σy⊗σy|ψ*>|`` for a normalised two-qubit ket."""
    psi = np.asarray(psi, dtype=complex).reshape(4)
    return float(abs(psi.conj() @ SPIN_FLIP @ psi.conj()))


def l1_coherence(rho) -> float:
    """Sum of moduli of the off-diagonal entries, in the basis ``rho`` is given in."""
    m = as_density_matrix(rho)
    return float(np.abs(m[~np.eye(4, dtype=bool)]).sum())


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())
