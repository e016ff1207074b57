"""Parameter sweeps over (T, xi), CSV emission and figure presets."""

from __future__ import annotations

import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__, heisenberg, hydrogen
from .constants import CODATA, PhysicalConstants
from .exceptions import DomainError

MODELS = ("hydrogen-hfs", "heisenberg")
AXES = ("temperature", "field")
SPACINGS = ("linear", "log")
QUANTITIES = ("concurrence", "coherence", "energies", "condition")

_ENERGY_LABELS = {"hydrogen-hfs": ("E_a", "E_b", "E_c", "E_d"), "heisenberg": ("E_1", "E_2", "E_3", "E_4")}
_AXIS_SYMBOL = {"temperature": "T", "field": "xi"}


class SweepSpecError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field_name = field_name


def fmt_value(v: float) -> str:
    return np.format_float_positional(float(v), trim="-")


def fmt_cell(v: float) -> str:
    return f"{v:.16e}"


@dataclass(frozen=True)
class AxisRange:
    min: float
    max: float
    points: int
    spacing: str = "linear"

    def __post_init__(self):
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise SweepSpecError("range", "bounds must be finite")
        if not self.min < self.max:
            raise SweepSpecError("range", f"min ({self.min:g}) must be < max ({self.max:g})")
        if int(self.points) != self.points or self.points < 2:
            raise SweepSpecError("range", "points must be an integer >= 2")
        if self.spacing not in SPACINGS:
            raise SweepSpecError("range", f"spacing must be one of {SPACINGS}")
        if self.spacing == "log" and self.min <= 0:
            raise SweepSpecError("range", "log spacing requires min > 0")

    @classmethod
    def parse(cls, text: str) -> "AxisRange":
        """``MIN:MAX:N`` or ``MIN:MAX:N:log``."""
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise SweepSpecError("range", f"expected MIN:MAX:N[:log], got {text!r}")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise SweepSpecError("range", f"cannot parse {text!r}") from None
        return cls(lo, hi, n, parts[3] if len(parts) == 4 else "linear")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)

    def __str__(self) -> str:
        return f"{fmt_value(self.min)}:{fmt_value(self.max)}:{self.points}:{self.spacing}"


@dataclass(frozen=True)
class SweepSpec:
    model: str
    axis: str
    axis_range: AxisRange
    fixed_values: tuple[float, ...]
    quantities: tuple[str, ...] = ("concurrence",)

    def __post_init__(self):
        if self.model not in MODELS:
            raise SweepSpecError("model", f"must be one of {MODELS}, got {self.model!r}")
        if self.axis not in AXES:
            raise SweepSpecError("axis", f"must be one of {AXES}, got {self.axis!r}")
        object.__setattr__(self, "fixed_values", tuple(float(v) for v in self.fixed_values))
        object.__setattr__(self, "quantities", tuple(self.quantities))
        if self.axis == "temperature" and self.axis_range.min <= 0:
            raise SweepSpecError("range", "temperature axis requires min > 0")
        if self.axis == "field" and self.axis_range.min < 0:
            raise SweepSpecError("range", "field axis requires min >= 0")
        if not self.fixed_values:
            raise SweepSpecError("series", "at least one series value is required")
        for v in self.fixed_values:
            if not np.isfinite(v):
                raise SweepSpecError("series", f"non-finite value {v!r}")
            if self.axis == "field" and v <= 0:
                raise SweepSpecError("series", f"temperatures must be > 0, got {v:g}")
            if self.axis == "temperature" and v < 0:
                raise SweepSpecError("series", f"fields must be >= 0, got {v:g}")
        if not self.quantities:
            raise SweepSpecError("quantities", "at least one quantity is required")
        for q in self.quantities:
            if q not in QUANTITIES:
                raise SweepSpecError("quantities", f"unknown quantity {q!r}; choose from {QUANTITIES}")
        if len(set(self.quantities)) != len(self.quantities):
            raise SweepSpecError("quantities", "duplicate quantity")

    @property
    def axis_symbol(self) -> str:
        return _AXIS_SYMBOL[self.axis]

    @property
    def series_symbol(self) -> str:
        return _AXIS_SYMBOL["field" if self.axis == "temperature" else "temperature"]

    def column_names(self) -> list[str]:
        names = [self.axis_symbol]
        for v in self.fixed_values:
            tag = f"[{self.series_symbol}={fmt_value(v)}]"
            for q in self.quantities:
                if q == "energies":
                    names.extend(label + tag for label in _ENERGY_LABELS[self.model])
                else:
                    names.append(q + tag)
        return names


@dataclass
class SweepTable:
    metadata: dict[str, str]
    columns: list[str]
    data: np.ndarray

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]

    @property
    def axis(self) -> np.ndarray:
        return self.data[:, 0]

    def to_csv(self) -> str:
        buf = io.StringIO()
        for k, v in self.metadata.items():
            buf.write(f"# {k}: {v}\n")
        buf.write(",".join(self.columns) + "\n")
        for row in self.data:
            buf.write(",".join(fmt_cell(x) for x in row) + "\n")
        return buf.getvalue()

    def write_csv(self, path: str | Path) -> Path:
        path = Path(path)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv())
        return path


def _series(spec: SweepSpec, axis_values: np.ndarray, fixed: float) -> np.ndarray:
    if spec.axis == "temperature":
        T, xi = axis_values, np.full_like(axis_values, fixed)
    else:
        T, xi = np.full_like(axis_values, fixed), axis_values
    cols = []
    for q in spec.quantities:
        if spec.model == "hydrogen-hfs":
            if q == "concurrence":
                cols.append(hydrogen.concurrence_closed_form(T, xi))
            elif q == "coherence":
                cols.append(hydrogen.coherence_closed_form(T, xi))
            elif q == "energies":
                cols.extend(hydrogen.energies(xi).T)
            else:
                cols.append(hydrogen.entanglement_condition(T, xi).astype(float))
        else:
            if q == "concurrence":
                cols.append(heisenberg.hc_concurrence(T, xi))
            elif q == "coherence":
                cols.append(heisenberg.hc_coherence(T, xi))
            elif q == "energies":
                cols.extend(heisenberg.hc_energies(xi).T)
            else:
                cols.append(heisenberg.hc_entanglement_condition(T, xi).astype(float))
    return np.column_stack(cols)


def run_sweep(
    spec: SweepSpec,
    jobs: int = 1,
    constants: PhysicalConstants = CODATA,
    extra_metadata: dict[str, str] | None = None,
) -> SweepTable:
    """Evaluate every series of ``spec``; rows ascend along the swept axis.

    ``jobs > 1`` evaluates series on a thread pool. Output is identical for any
    ``jobs`` because results are collected in series order.
    """
    x = spec.axis_range.values()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(lambda v: _series(spec, x, v), spec.fixed_values))
    else:
        blocks = [_series(spec, x, v) for v in spec.fixed_values]
    data = np.column_stack([x, *blocks])
    if np.isnan(data).any():
        raise DomainError("sweep produced NaN values")
    metadata = {
        "model": spec.model,
        "axis": spec.axis,
        "range": str(spec.axis_range),
        "series": f"{spec.series_symbol}=" + ",".join(fmt_value(v) for v in spec.fixed_values),
        "quantities": ",".join(spec.quantities),
        "version": __version__,
        "constants_checksum": constants.checksum(),
    }
    if extra_metadata:
        metadata.update(extra_metadata)
    return SweepTable(metadata, spec.column_names(), data)


@dataclass(frozen=True)
class FigurePreset:
    name: str
    title: str
    ylabel: str
    spec: SweepSpec
    note: str = ""


def _preset(name, title, ylabel, model, axis, rng, series, quantity, note):
    spec = SweepSpec(model, axis, AxisRange(*rng), tuple(series), (quantity,))
    return FigurePreset(name, title, ylabel, spec, note)


# Axis extents are read off the published plots, not stated numerically.
PRESETS: dict[str, FigurePreset] = {
    p.name: p
    for p in [
        _preset("fig1b", "Hydrogen HFS concurrence vs temperature", "C",
                "hydrogen-hfs", "temperature", (0.01, 6.0, 600), (0, 1, 2, 5), "concurrence",
                "each series vanishes at its own critical temperature >= 4/ln3"),
        _preset("fig2a", "Hydrogen HFS concurrence vs field below T_c", "C",
                "hydrogen-hfs", "field", (0.0, 10.0, 501), (1, 2, 3, 3.5), "concurrence",
                "monotone decay at low T, flattening and non-monotone from T=3.5"),
        _preset("fig2b", "Magnetically induced concurrence above T_c", "C",
                "hydrogen-hfs", "field", (0.0, 40.0, 801), (4, 6, 10), "concurrence",
                "zero at xi=0; T=10 series departs from zero near xi=16.5; range covers xi>25"),
        _preset("fig3a", "Hydrogen HFS l1 coherence vs temperature", "D",
                "hydrogen-hfs", "temperature", (0.01, 6.0, 600), (0, 1, 2, 5), "coherence",
                "low-T plateaus at 1/sqrt(1+xi^2)"),
        _preset("fig3b", "Hydrogen HFS l1 coherence vs field", "D",
                "hydrogen-hfs", "field", (0.0, 40.0, 801), (0.1, 0.25, 0.5), "coherence",
                "series bunch together at large xi"),
        _preset("fig4a", "Heisenberg pair concurrence vs temperature", "C",
                "heisenberg", "temperature", (0.01, 5.0, 500), (0, 0.5, 1, 2), "concurrence",
                "every series vanishes at T=4/ln3"),
        _preset("fig4b", "Heisenberg pair concurrence vs field", "C",
                "heisenberg", "field", (0.0, 3.0, 601), (0.01, 0.5, 1, 2), "concurrence",
                "near-step at xi=1 for the lowest temperature"),
    ]
}


def gnuplot_script(preset: FigurePreset, csv_name: str, columns: list[str]) -> str:
    xlabel = "T" if preset.spec.axis == "temperature" else "xi"
    last = len(columns)
    lines = [
        f"# {preset.name}: {preset.title}",
        f"# {preset.note}",
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key autotitle columnhead",
        f"set title '{preset.title}'",
        f"set xlabel '{xlabel}'",
        f"set ylabel '{preset.ylabel}'",
        "set terminal pngcairo size 800,600",
        f"set output '{preset.name}.png'",
        f"plot for [i=2:{last}] '{csv_name}' using 1:i with lines lw 2",
    ]
    return "\n".join(lines) + "\n"


def default_out_dir() -> Path | None:
    env = os.environ.get("HFS_ENTANGLE_OUT")
    return Path(env) if env else None


def figure_preset(
    name: str,
    out_dir: str | Path | None = None,
    constants: PhysicalConstants = CODATA,
) -> tuple[SweepTable, str]:
    """Run a preset and, if ``out_dir`` is given, write ``<name>.csv`` and ``<name>.gp`` there."""
    try:
        preset = PRESETS[name]
    except KeyError:
        raise SweepSpecError("figure", f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    table = run_sweep(
        preset.spec,
        constants=constants,
        extra_metadata={"preset": name, "title": preset.title, "note": preset.note},
    )
    script = gnuplot_script(preset, f"{name}.csv", table.columns)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        table.write_csv(out / f"{name}.csv")
        (out / f"{name}.gp").write_text(script, encoding="utf-8")
    return table, script


def read_csv(path: str | Path) -> SweepTable:
    """Parse a CSV written by :meth:`SweepTable.write_csv`."""
    metadata: dict[str, str] = {}
    columns: list[str] = []
    rows = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            metadata[key] = value
        elif not columns:
            columns = line.split(",")
        elif line:
            rows.append([float(x) for x in line.split(",")])
    return SweepTable(metadata, columns, np.array(rows))
