"""``domino-forge`` command line.

Results go to stdout as JSON lines; human-readable notes go to stderr.
Exit codes: 0 success, 1 usage, 2 inapplicable method, 3 precision
exhausted, 4 cross-method mismatch or failed verification, 5 search
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import verify
from .board import BoardDims, PathVariant, tiling_from_text, tiling_to_text
from .enumeration import EnumerationCap, enumerate_tilings
from .errors import CapExceeded, DominoForgeError, NoHamiltonianPath, ParseError, PrecisionExhausted, SearchExhausted
from .kasteleyn import PrecisionConfig
from .methods import CountMethod, InapplicableMethod, count, six_wide_count, step_count
from .paths import DEFAULT_BUDGET, find_fault_lines, hamiltonian_path, side_partition
from .render import RenderOptions, render_ascii, render_svg
from .series import extend, gf6, recurrence_from_gf, series_expand
from .transfer import BigMatrix, MultiplicationCounter, paper_matrix_C

EXIT_OK, EXIT_USAGE, EXIT_INAPPLICABLE, EXIT_PRECISION, EXIT_MISMATCH, EXIT_BUDGET = range(6)

BENCH_SIZES = (64, 256, 1024, 4096)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def emit(obj) -> None:
    print(json.dumps(obj), flush=True)


def note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_tiling(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text("ascii")
    return tiling_from_text(text)


def cmd_count(args) -> int:
    method = CountMethod(args.method)
    cfg = PrecisionConfig(args.initial_bits, args.max_bits)
    start = time.perf_counter_ns()
    value = count(args.rows, args.cols, method, cfg)
    elapsed = time.perf_counter_ns() - start
    emit({"rows": args.rows, "cols": args.cols, "method": method.value, "count": str(value), "elapsed_ns": elapsed})
    return EXIT_OK


def compact_sequence(N: int) -> list[int]:
    c = paper_matrix_C()
    power = BigMatrix.identity(c.dim)
    out = []
    for n in range(N + 1):
        if n:
            power = power @ c
        out.append(power[0, 0])
    return out


def cmd_sequence(args) -> int:
    if args.N < 0:
        raise UsageError("N must be non-negative")
    values = compact_sequence(args.N)
    seed = series_expand(gf6(), 6)
    check = extend(recurrence_from_gf(gf6()), seed, args.N + 1)[: args.N + 1]
    if values != check:
        bad = next(n for n, (a, b) in enumerate(zip(values, check)) if a != b)
        note(f"compact matrix and order-7 recurrence disagree at n = {bad}")
        return EXIT_MISMATCH
    emit([str(v) for v in values])
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify.run(args.scope, seed=args.seed, workers=args.workers, census=args.census)
    for c in checks:
        emit(c.to_json())
    failed = [c.name for c in checks if not c.ok]
    note(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    for name in failed:
        note(f"FAILED: {name}")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_bench(args) -> int:
    sizes = [n for n in BENCH_SIZES if n <= args.n] or [args.n]
    if args.n not in sizes:
        sizes.append(args.n)
    methods = [CountMethod(m) for m in args.method] if args.method else [
        CountMethod.COMPACT, CountMethod.REC7, CountMethod.GF, CountMethod.TRANSFER,
    ]
    for n in sizes:
        values = {}
        for method in methods:
            counter = MultiplicationCounter()
            start = time.perf_counter_ns()
            values[method] = six_wide_count(n, method, counter)
            elapsed = time.perf_counter_ns() - start
            steps = counter.count if method is CountMethod.COMPACT else step_count(n, method)
            emit({"n": n, "method": method.value, "steps": steps, "elapsed_ns": elapsed})
        if len(set(values.values())) != 1:
            note(f"methods disagree on c_{n}")
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(args) -> int:
    dims = BoardDims(args.rows, args.cols)
    for i, t in enumerate(enumerate_tilings(dims, EnumerationCap(args.cap))):
        if args.limit is not None and i >= args.limit:
            break
        emit({"index": i, "tiling": tiling_to_text(t)})
    return EXIT_OK


def cmd_faults(args) -> int:
    t = _read_tiling(args.tiling)
    emit([f.to_json() for f in find_fault_lines(t)])
    return EXIT_OK


def cmd_hampath(args) -> int:
    t = _read_tiling(args.tiling)
    variant = PathVariant(args.variant)
    p = hamiltonian_path(t, variant, args.budget)
    record = {"variant": variant.value, "path": p.to_json()}
    if args.sides:
        record["sides"] = side_partition(t, p).to_json()
    emit(record)
    return EXIT_OK


def cmd_render(args) -> int:
    t = _read_tiling(args.tiling)
    path = None
    if args.path:
        path = hamiltonian_path(t, PathVariant(args.path), args.budget)
    faults = find_fault_lines(t) if args.faults else None
    if args.svg:
        opts = RenderOptions(
            cell_size=args.cell_size,
            show_fault_lines=args.faults,
            show_path=path is not None,
            show_orientations=args.orientations,
            variant=PathVariant(args.path or "A"),
        )
        Path(args.svg).write_bytes(render_svg(t, path, faults, opts))
        note(f"wrote {args.svg}")
    if args.ascii or not args.svg:
        sys.stdout.write(render_ascii(t, path))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domino-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count tilings of a rows x cols board")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("--method", choices=[m.value for m in CountMethod], default="transfer")
    p.add_argument("--initial-bits", type=int, default=64)
    p.add_argument("--max-bits", type=int, default=1 << 20)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", help="c_0..c_N for 6 x 2n boards")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="run cross-method verification suites")
    p.add_argument("scope", choices=["counts", "matrix", "series", "paths6x6", "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--census", action="store_true", help="also count all paths per tiling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the 6 x 2n methods")
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--method", action="append", choices=["compact", "rec7", "rec20", "gf", "transfer"])
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("enumerate", help="list every tiling of a small board")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("faults", help="fault lines of a tiling file")
    p.add_argument("tiling", help="tiling file, or - for stdin")
    p.set_defaults(func=cmd_faults)

    p = sub.add_parser("hampath", help="traffic-rule Hamiltonian path of a tiling file")
    p.add_argument("tiling")
    p.add_argument("--variant", choices=["A", "B"], default="A")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--sides", action="store_true", help="include the side partition")
    p.set_defaults(func=cmd_hampath)

    p = sub.add_parser("render", help="draw a tiling as ASCII or SVG")
    p.add_argument("tiling")
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--path", choices=["A", "B"])
    p.add_argument("--faults", action="store_true")
    p.add_argument("--orientations", action="store_true")
    p.add_argument("--cell-size", type=int, default=40)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InapplicableMethod as exc:
        note(f"error: {exc}")
        return EXIT_INAPPLICABLE
    except PrecisionExhausted as exc:
        note(f"error: {exc}")
        return EXIT_PRECISION
    except SearchExhausted as exc:
        note(f"error: {exc}")
        return EXIT_BUDGET
    except NoHamiltonianPath as exc:
        note(f"error: {exc}")
        return EXIT_MISMATCH
    except (UsageError, ParseError, CapExceeded, ValueError, OSError) as exc:
        note(f"error: {exc}")
        return EXIT_USAGE
    except DominoForgeError as exc:
        note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
