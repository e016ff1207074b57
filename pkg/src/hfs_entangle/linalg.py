"""Dense complex linear algebra for 2x2 and 4x4 Hermitian matrices.

Everything here works on small numpy arrays (``complex128``). Eigenpairs come
from a cyclic Jacobi scheme, which is unconditionally stable at this size and
keeps the numerical oracle independent of LAPACK.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .exceptions import ConvergenceError, NotPSDError

HERMITIAN_TOL = 1e-12
PSD_CLAMP_TOL = 1e-10
MAX_SWEEPS = 100

_EPS = np.finfo(float).eps
# Off-diagonal entries below this fraction of the Frobenius norm are left alone.
_FLOOR = 1e-200

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class EigenSystem4(NamedTuple):
    """Eigenvalues in ascending order; column ``i`` of ``eigenvectors`` pairs with ``eigenvalues[i]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(m, n: int | None = None) -> np.ndarray:
    """Return ``m`` as a finite square complex array, optionally of fixed size ``n``."""
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if n is not None and arr.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def as_hermitian(m, n: int | None = 4, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate Hermiticity and return an exactly Hermitian copy.

    The tolerance is absolute for matrices with entries of order one and
    scales with the largest entry otherwise.
    """
    arr = as_matrix(m, n)
    scale = max(1.0, float(np.max(np.abs(arr))))
    dev = float(np.max(np.abs(arr - arr.conj().T)))
    if dev > tol * scale:
        raise ValueError(f"matrix is not Hermitian (max |m - m^H| = {dev:.3e})")
    return 0.5 * (arr + arr.conj().T)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices, ``(a⊗b)[2i+k, 2j+l] = a[i, j] b[k, l]``."""
    a = as_matrix(a, 2)
    b = as_matrix(b, 2)
    out = np.empty((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = a[i, j] * b
    return out


def _rotation(app: float, apq: complex, aqq: float) -> np.ndarray:
    """2x2 unitary ``U`` such that ``U^H [[app, apq], [conj(apq), aqq]] U`` is diagonal."""
    r = abs(apq)
    phase = apq / r
    tau = (aqq - app) / (2.0 * r)
    if tau == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    return np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=complex)


def _negligible(x: float, dp: float, dq: float, floor: float) -> bool:
    return x == 0.0 or x <= _EPS * math.sqrt(abs(dp) * abs(dq)) or x <= floor


def eigendecompose_hermitian(m, max_sweeps: int = MAX_SWEEPS) -> EigenSystem4:
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Returns eigenvalues sorted ascending with orthonormal eigenvectors as
    columns. Raises ``ConvergenceError`` if the off-diagonal part has not been
    annihilated after ``max_sweeps`` full sweeps.
    """
    a = as_hermitian(m, n=None)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    floor = _FLOOR * float(np.linalg.norm(a))
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p].real
                aqq = a[q, q].real
                if _negligible(abs(apq), app, aqq, floor):
                    continue
                u = _rotation(app, apq, aqq)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ u
                rotated = True
        if not rotated:
            w = np.diag(a).real
            order = np.argsort(w, kind="stable")
            return EigenSystem4(w[order].copy(), v[:, order].copy())
    raise ConvergenceError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")


def singular_values(m, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Singular values in descending order via one-sided (Hestenes) Jacobi.

    Columns are orthogonalised pairwise; the singular values are the final
    column norms. Small singular values keep absolute accuracy of order
    ``eps * ||m||`` rather than ``sqrt(eps) * ||m||`` as they would if taken
    as square roots of eigenvalues of ``m m^H``.
    """
    a = as_matrix(m).copy()
    n = a.shape[1]
    floor = _FLOOR * float(np.linalg.norm(a)) ** 2
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = float(np.vdot(a[:, p], a[:, p]).real)
                beta = float(np.vdot(a[:, q], a[:, q]).real)
                gamma = complex(np.vdot(a[:, p], a[:, q]))
                if _negligible(abs(gamma), alpha, beta, floor):
                    continue
                u = _rotation(alpha, gamma, beta)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                rotated = True
        if not rotated:
            return np.sort(np.linalg.norm(a, axis=0))[::-1]
    raise ConvergenceError(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")


def reconstruct(es: EigenSystem4, values=None) -> np.ndarray:
    """``sum_i values[i] v_i v_i^H`` (the eigenvalues themselves by default)."""
    w = es.eigenvalues if values is None else np.asarray(values)
    vecs = es.eigenvectors
    out = (vecs * w) @ vecs.conj().T
    return 0.5 * (out + out.conj().T)


def matrix_function_hermitian(m, f: Callable) -> np.ndarray:
    """Apply a real scalar function through the spectral decomposition of ``m``.

    ``np.sqrt`` and ``math.sqrt`` are routed through :func:`sqrtm_psd`, which
    clamps round-off negatives and rejects genuinely indefinite input.
    """
    if f is np.sqrt or f is math.sqrt:
        return sqrtm_psd(m)
    es = eigendecompose_hermitian(m)
    values = np.array([f(float(x)) for x in es.eigenvalues], dtype=float)
    return reconstruct(es, values)


def clamp_psd(eigenvalues: np.ndarray, tol: float = PSD_CLAMP_TOL) -> np.ndarray:
    w = np.asarray(eigenvalues, dtype=float)
    if np.any(w < -tol):
        raise NotPSDError(f"eigenvalue {w.min():.3e} below -{tol:g}; matrix is not PSD")
    return np.clip(w, 0.0, None)


def sqrtm_psd(m) -> np.ndarray:
    es = eigendecompose_hermitian(m)
    return reconstruct(es, np.sqrt(clamp_psd(es.eigenvalues)))


def gibbs_state(h, temperature: float) -> np.ndarray:
    """Normalised ``exp(-h/T)`` built with exponents shifted by the ground energy."""
    if not temperature > 0:
        raise ValueError("temperature must be positive")
    es = eigendecompose_hermitian(h)
    w = np.exp(-(es.eigenvalues - es.eigenvalues[0]) / temperature)
    return reconstruct(es, w / w.sum())
