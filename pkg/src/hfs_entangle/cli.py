"""``hfs-entangle`` command line: sweeps, figure presets, critical-point solvers, constants.

Exit codes: 0 success, 1 usage error, 2 numeric or domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, hydrogen
from .constants import (
    CODATA,
    PhysicalConstants,
    joule_to_ev,
    load_constants,
    temperature_to_kelvin,
    xi_to_tesla,
)
from .exceptions import ConvergenceError, DomainError, NotPSDError
from .sweep import (
    AXES,
    MODELS,
    PRESETS,
    QUANTITIES,
    AxisRange,
    SweepSpec,
    SweepSpecError,
    default_out_dir,
    figure_preset,
    run_sweep,
)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

SOLVE_KINDS = ("critical-temperature", "critical-field", "critical-field-approx")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _preset_help() -> str:
    lines = ["presets:"]
    for p in PRESETS.values():
        s = p.spec
        lines.append(
            f"  {p.name}: {s.model}, {s.axis} axis {s.axis_range}, "
            f"series {s.series_symbol} in {{{', '.join(f'{v:g}' for v in s.fixed_values)}}}, "
            f"{','.join(s.quantities)}"
        )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfs-entangle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_constants(p):
        p.add_argument("--constants", metavar="FILE", help="key=value file of SI constants overriding CODATA")

    p = sub.add_parser("sweep", help="evaluate quantities over a (T, xi) grid and emit CSV")
    p.add_argument("--model", choices=MODELS, default="hydrogen-hfs")
    p.add_argument("--axis", choices=AXES, required=True)
    p.add_argument("--range", dest="range_", metavar="MIN:MAX:N[:log]", required=True)
    p.add_argument("--series", required=True, metavar="v1,v2,...",
                   help="fixed values of the other parameter, one output series each")
    p.add_argument("--quantities", default="concurrence", metavar="q1,q2,...",
                   help=f"subset of {','.join(QUANTITIES)}")
    p.add_argument("--out", metavar="DIR", help="output directory (default $HFS_ENTANGLE_OUT, else stdout)")
    p.add_argument("--name", default="sweep", help="CSV file stem inside the output directory")
    p.add_argument("--jobs", type=int, default=1, help="threads used to evaluate series")
    add_constants(p)

    p = sub.add_parser("figure", help="reproduce a figure as CSV plus gnuplot script",
                       epilog=_preset_help(), formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("names", nargs="+", choices=[*PRESETS, "all"], metavar="NAME",
                   help=f"one or more of {', '.join(PRESETS)}, or 'all'")
    p.add_argument("--out", metavar="DIR", help="output directory (default $HFS_ENTANGLE_OUT, else .)")
    add_constants(p)

    p = sub.add_parser("solve", help="critical temperature or critical field")
    p.add_argument("kind", choices=SOLVE_KINDS)
    p.add_argument("value", type=float,
                   help="xi for critical-temperature; T for critical-field(-approx)")
    add_constants(p)

    p = sub.add_parser("constants", help="report constants and the zero-field threshold")
    add_constants(p)
    return parser


def _constants(path: str | None) -> PhysicalConstants:
    if not path:
        return CODATA
    try:
        return load_constants(path)
    except OSError as exc:
        raise UsageError(f"cannot read constants file: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"constants file {path}: {exc}") from None


def _floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise SweepSpecError(what, f"cannot parse {text!r}") from None


def cmd_sweep(args, out) -> int:
    k = _constants(args.constants)
    spec = SweepSpec(
        model=args.model,
        axis=args.axis,
        axis_range=AxisRange.parse(args.range_),
        fixed_values=_floats(args.series, "series"),
        quantities=tuple(q.strip() for q in args.quantities.split(",") if q.strip()),
    )
    table = run_sweep(spec, jobs=max(1, args.jobs), constants=k)
    out_dir = Path(args.out) if args.out else default_out_dir()
    if out_dir is None:
        out.write(table.to_csv())
        return EXIT_OK
    out_dir.mkdir(parents=True, exist_ok=True)
    path = table.write_csv(out_dir / f"{args.name}.csv")
    print(f"wrote {path}", file=out)
    return EXIT_OK


def cmd_figure(args, out) -> int:
    k = _constants(args.constants)
    names = list(PRESETS) if "all" in args.names else args.names
    out_dir = Path(args.out) if args.out else (default_out_dir() or Path("."))
    for name in names:
        figure_preset(name, out_dir, constants=k)
        print(f"wrote {out_dir / (name + '.csv')} and {out_dir / (name + '.gp')}", file=out)
    return EXIT_OK


def cmd_solve(args, out) -> int:
    k = _constants(args.constants)
    v = args.value
    if args.kind == "critical-temperature":
        T = hydrogen.critical_temperature(v)
        print(f"xi: {v:.10g}", file=out)
        print(f"field_T: {xi_to_tesla(v, k):.6g}", file=out)
        print(f"critical_temperature: {T:.10g}", file=out)
        print(f"critical_temperature_K: {temperature_to_kelvin(T, k):.6g}", file=out)
        return EXIT_OK
    if args.kind == "critical-field":
        xi = hydrogen.critical_field(v)
    else:
        xi = hydrogen.critical_field_high_T_approx(v)
    print(f"temperature: {v:.10g}", file=out)
    print(f"temperature_K: {temperature_to_kelvin(v, k):.6g}", file=out)
    if xi is None:
        print("critical_field: none (entangled at zero field, T < 4/ln3)", file=out)
        return EXIT_OK
    print(f"critical_field: {xi:.10g}", file=out)
    print(f"critical_field_T: {xi_to_tesla(xi, k):.6g}", file=out)
    return EXIT_OK


def cmd_constants(args, out) -> int:
    k = _constants(args.constants)
    source = args.constants or "CODATA (scipy.constants)"
    print(f"source: {source}", file=out)
    if args.constants:
        overridden = [n for n, v in k.as_dict().items() if v != CODATA.as_dict()[n]]
        print(f"overridden: {','.join(overridden) or 'none'}", file=out)
    print(f"checksum: {k.checksum()}", file=out)
    for name, value in k.as_dict().items():
        print(f"{name}: {value!r}", file=out)
    e_measured, tau_k = hydrogen.tau_c_physical(k)
    e_formula = hydrogen.tau_c_fundamental(k)
    print(f"hfs_constant_eV: {joule_to_ev(k.hfs_constant, k):.6e}", file=out)
    print(f"hfs_splitting_eV: {joule_to_ev(k.hfs_splitting, k):.6e}", file=out)
    print(f"kB_tau_c_eV: {e_measured:.6e}", file=out)
    print(f"tau_c_K: {tau_k:.6e}", file=out)
    print(f"kB_tau_c_fundamental_eV: {e_formula:.6e}", file=out)
    print(f"fundamental_relative_deviation: {e_formula / e_measured - 1:+.3e}", file=out)
    return EXIT_OK


COMMANDS = {"sweep": cmd_sweep, "figure": cmd_figure, "solve": cmd_solve, "constants": cmd_constants}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, SweepSpecError) as exc:
        print(f"hfs-entangle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hfs-entangle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceError, NotPSDError) as exc:
        print(f"hfs-entangle: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
