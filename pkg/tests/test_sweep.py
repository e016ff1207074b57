import math
import time

import numpy as np
import pytest

from hfs_entangle import hydrogen
from hfs_entangle.sweep import (
    PRESETS,
    AxisRange,
    SweepSpec,
    SweepSpecError,
    figure_preset,
    read_csv,
    run_sweep,
)


def spec(**kw):
    base = dict(
        model="hydrogen-hfs",
        axis="temperature",
        axis_range=AxisRange(0.1, 6.0, 60),
        fixed_values=(0, 1, 2, 5),
        quantities=("concurrence",),
    )
    base.update(kw)
    return SweepSpec(**base)


@pytest.mark.parametrize(
    "kwargs,field",
    [
        (dict(model="ising"), "model"),
        (dict(axis="pressure"), "axis"),
        (dict(fixed_values=()), "series"),
        (dict(quantities=("entropy",)), "quantities"),
        (dict(quantities=()), "quantities"),
        (dict(quantities=("coherence", "coherence")), "quantities"),
        (dict(axis="field", fixed_values=(0.0,)), "series"),
        (dict(fixed_values=(-1.0,)), "series"),
        (dict(axis_range=AxisRange(0.0, 1.0, 3)), "range"),
    ],
)
def test_invalid_spec_names_field(kwargs, field):
    with pytest.raises(SweepSpecError) as exc:
        spec(**kwargs)
    assert exc.value.field_name == field


@pytest.mark.parametrize("text", ["1:0:5", "0:1:1", "0:1", "a:b:c", "0:1:5:log", "0:1:5:cubic"])
def test_invalid_ranges(text):
    with pytest.raises(SweepSpecError):
        AxisRange.parse(text)


def test_range_parsing_and_spacing():
    r = AxisRange.parse("0.1:10:3:log")
    assert np.allclose(r.values(), [0.1, 1, 10])
    assert str(r) == "0.1:10:3:log"
    assert np.allclose(AxisRange.parse("0:40:5").values(), [0, 10, 20, 30, 40])


def test_table_shape_and_columns():
    t = run_sweep(spec(quantities=("concurrence", "energies", "condition")))
    assert t.data.shape == (60, 1 + 4 * 6)
    assert t.columns[:7] == [
        "T", "concurrence[xi=0]", "E_a[xi=0]", "E_b[xi=0]", "E_c[xi=0]", "E_d[xi=0]", "condition[xi=0]",
    ]
    assert np.all(np.diff(t.axis) > 0)
    assert not np.isnan(t.data).any()
    c = t.column("concurrence[xi=2]")
    assert np.array_equal(c, hydrogen.concurrence_closed_form(t.axis, 2.0))
    assert np.array_equal(t.column("condition[xi=2]") > 0, c > 0)


def test_zero_field_series_vanishes_near_threshold():
    t = run_sweep(spec(axis_range=AxisRange(0.1, 6.0, 5901)))
    c = t.column("concurrence[xi=0]")
    first_zero = t.axis[np.argmax(c == 0)]
    assert abs(first_zero - 4 / math.log(3)) < 1e-3


def test_field_sweep_mie_onset():
    t = run_sweep(spec(axis="field", axis_range=AxisRange(0, 40, 4001), fixed_values=(4, 6, 10)))
    c = t.column("concurrence[T=10]")
    onset = t.axis[np.argmax(c > 0)]
    assert abs(onset - 16.5) < 0.1


def test_heisenberg_step():
    t = run_sweep(spec(model="heisenberg", axis="field", axis_range=AxisRange(0, 2, 201), fixed_values=(0.001,)))
    c = t.column("concurrence[T=0.001]")
    assert np.all(c[t.axis < 0.99] > 0.999) and np.all(c[t.axis > 1.01] < 0.001)


def test_heisenberg_energy_columns():
    t = run_sweep(spec(model="heisenberg", quantities=("energies", "coherence")))
    assert "E_4[xi=5]" in t.columns and "coherence[xi=5]" in t.columns


def test_csv_deterministic_and_parallel_invariant():
    s = spec(quantities=("concurrence", "coherence", "energies"))
    a = run_sweep(s).to_csv()
    assert a == run_sweep(s).to_csv()
    assert a == run_sweep(s, jobs=4).to_csv()


def test_csv_format(tmp_path):
    t = run_sweep(spec())
    path = t.write_csv(tmp_path / "s.csv")
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode("utf-8").split("\n")
    assert lines[0] == "# model: hydrogen-hfs"
    header = next(i for i, line in enumerate(lines) if not line.startswith("#"))
    assert lines[header].startswith("T,concurrence[xi=0]")
    first = lines[header + 1].split(",")
    assert first[0] == "1.0000000000000001e-01"  # 17 significant digits
    back = read_csv(path)
    assert back.columns == t.columns
    assert np.array_equal(back.data, t.data)
    assert back.metadata["constants_checksum"] == t.metadata["constants_checksum"]


def test_presets_complete_quickly(tmp_path):
    for name in PRESETS:
        start = time.perf_counter()
        table, script = figure_preset(name, tmp_path)
        assert time.perf_counter() - start < 5.0
        assert (tmp_path / f"{name}.csv").exists()
        assert f"'{name}.csv'" in script
        assert table.metadata["preset"] == name


def test_preset_matches_manual_sweep():
    table, _ = figure_preset("fig1b")
    p = PRESETS["fig1b"].spec
    manual = run_sweep(SweepSpec("hydrogen-hfs", "temperature", p.axis_range, (0.0,), ("concurrence",)))
    assert np.array_equal(table.column("concurrence[xi=0]"), manual.column("concurrence[xi=0]"))


def test_unknown_preset():
    with pytest.raises(SweepSpecError):
        figure_preset("fig9")
