"""Thermal entanglement and l1 coherence of the hydrogen hyperfine manifold.

The hydrogen model lives in :mod:`hfs_entangle.hydrogen`, the two-spin
Heisenberg benchmark in :mod:`hfs_entangle.heisenberg`, and the model-agnostic
measures (Wootters concurrence, l1 coherence) in
:mod:`hfs_entangle.entanglement`.
"""

__version__ = "0.1.0"

from .constants import CODATA, PhysicalConstants  # noqa: E402
from .entanglement import l1_coherence, spin_flip, wootters_concurrence  # noqa: E402
from .exceptions import ConvergenceError, DomainError, NotPSDError  # noqa: E402
from .heisenberg import hc_concurrence, hc_critical_temperature  # noqa: E402
from .hydrogen import (  # noqa: E402
    HfsParams,
    coherence_closed_form,
    concurrence_closed_form,
    critical_field,
    critical_temperature,
    thermal_state,
)

__all__ = [
    "CODATA",
    "PhysicalConstants",
    "HfsParams",
    "DomainError",
    "ConvergenceError",
    "NotPSDError",
    "wootters_concurrence",
    "l1_coherence",
    "spin_flip",
    "thermal_state",
    "concurrence_closed_form",
    "coherence_closed_form",
    "critical_temperature",
    "critical_field",
    "hc_concurrence",
    "hc_critical_temperature",
]
