"""Physical constants and the SI boundary of the dimensionless models.

Defaults are CODATA values from :mod:`scipy.constants` plus the measured
1S hyperfine frequency of hydrogen. Constants files are flat ``key=value``
text in SI units; unknown keys are rejected.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
from dataclasses import dataclass
from pathlib import Path

from scipy import constants as _sc

H_HYPERFINE_FREQ_HZ = 1420.405751768e6

_MU_B_CONSISTENCY = 1e-6


def _codata(name: str) -> float:
    return float(_sc.physical_constants[name][0])


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants. ``g_e`` and ``g_p`` are stored as positive magnitudes."""

    hbar: float = _sc.hbar
    kB: float = _sc.k
    c: float = _sc.c
    e_charge: float = _sc.e
    eps0: float = _sc.epsilon_0
    me: float = _sc.m_e
    mp: float = _sc.m_p
    a0: float = _codata("Bohr radius")
    alpha: float = _sc.alpha
    mu_B: float = _codata("Bohr magneton")
    mu_N: float = _codata("nuclear magneton")
    g_e: float = abs(_codata("electron g factor"))
    g_p: float = _codata("proton g factor")
    rydberg: float = _sc.Rydberg
    hfs_splitting_freq: float = H_HYPERFINE_FREQ_HZ

    def __post_init__(self):
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"constant {f.name} must be a finite positive number, got {v!r}")
        mu_b = self.e_charge * self.hbar / (2 * self.me)
        if abs(self.mu_B / mu_b - 1) > _MU_B_CONSISTENCY:
            raise ValueError(
                f"mu_B={self.mu_B!r} inconsistent with e*hbar/(2 me)={mu_b!r}"
            )

    @property
    def h(self) -> float:
        return 2 * math.pi * self.hbar

    @property
    def hfs_splitting(self) -> float:
        """Zero-field gap between singlet and triplet, joules."""
        return self.h * self.hfs_splitting_freq

    @property
    def hfs_constant(self) -> float:
        """The spin-spin energy scale (a quarter of the splitting), joules."""
        return self.hfs_splitting / 4

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)

    def checksum(self) -> str:
        text = "".join(f"{k}={v!r}\n" for k, v in sorted(self.as_dict().items()))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


CODATA = PhysicalConstants()


def parse_constants(text: str, base: PhysicalConstants = CODATA) -> PhysicalConstants:
    """Override fields of ``base`` from ``key=value`` lines. ``#`` starts a comment."""
    known = {f.name for f in dataclasses.fields(PhysicalConstants)}
    updates: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"line {lineno}: unknown constant {key!r}")
        try:
            updates[key] = float(value)
        except ValueError:
            raise ValueError(f"line {lineno}: {key} value {value!r} is not a number") from None
    return dataclasses.replace(base, **updates)


def load_constants(path: str | Path) -> PhysicalConstants:
    return parse_constants(Path(path).read_text(encoding="utf-8"))


def joule_to_ev(energy: float, k: PhysicalConstants = CODATA) -> float:
    return energy / k.e_charge


def xi_to_tesla(xi: float, k: PhysicalConstants = CODATA) -> float:
    """Field ``B = 2 A xi / mu_B`` for the hydrogen normalisation."""
    return 2 * k.hfs_constant * xi / k.mu_B


def tesla_to_xi(field: float, k: PhysicalConstants = CODATA) -> float:
    return k.mu_B * field / (2 * k.hfs_constant)


def temperature_to_kelvin(T: float, k: PhysicalConstants = CODATA) -> float:
    """Dimensionless ``T = kB tau / A`` to kelvin."""
    return T * k.hfs_constant / k.kB


def kelvin_to_temperature(tau: float, k: PhysicalConstants = CODATA) -> float:
    return k.kB * tau / k.hfs_constant
