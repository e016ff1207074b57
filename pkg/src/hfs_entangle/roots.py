"""Bracketed scalar root finding."""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .exceptions import ConvergenceError, DomainError

MAX_ITER = 200
F_TOL = 1e-12


def find_root(f: Callable[[float], float], lo: float, hi: float) -> float:
    """Root of ``f`` in ``[lo, hi]`` by Brent's method, refined to full double precision."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise DomainError(f"no sign change on [{lo:g}, {hi:g}] (f={flo:.3e}, {fhi:.3e})")
    try:
        x = brentq(f, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=MAX_ITER)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from None
    if abs(f(x)) > F_TOL:
        raise ConvergenceError(f"residual {f(x):.3e} at root {x!r} exceeds {F_TOL:g}")
    return float(x)


def expand_upper(
    f: Callable[[float], float], lo: float, hi: float, limit: float
) -> tuple[float, float]:
    """Double ``hi`` until ``f`` changes sign relative to ``f(lo)``.

    Returns the last bracket ``(lo, hi)``, so the first sign change encountered is kept.
    """
    s = np.sign(f(lo))
    while np.sign(f(hi)) == s:
        lo, hi = hi, 2 * hi
        if hi > limit:
            raise DomainError(f"no sign change found below {limit:g}")
    return lo, hi
