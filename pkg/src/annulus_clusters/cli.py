"""Command line interface.

Exit codes: 0 success, 1 malformed input, 2 domain error, 3 failed check.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import io
from .annulus import Direction, DomainError, Side, Triangulation
from .checks import run_checks
from .cluster import cluster_of, steep_frame, verify_family_theorem
from .families import (
    brute_force_small_triangulations,
    canonicalize,
    count_families,
    enumerate_representatives,
)
from .mutation import IntegrityError, LaurentSeed, mutate_sequence
from .render import render
from .strings import Orientation, StringWord, annulus_signature, tau

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _integer(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="annulus-clusters",
                     description="Families of annulus triangulations and type Ã cluster objects.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="number of families of A(n, m)")
    p.add_argument("n", type=_integer)
    p.add_argument("m", type=_integer)

    for name, text in (("enumerate", "one representative per family"),
                       ("brute", "every small triangulation (exhaustive search)")):
        p = sub.add_parser(name, help=text)
        p.add_argument("n", type=_integer)
        p.add_argument("m", type=_integer)
        p.add_argument("--json", action="store_true", help="emit a JSON array")
        if name == "enumerate":
            p.add_argument("--svg", metavar="DIR", help="also write one SVG figure per representative")

    p = sub.add_parser("canonical", help="family cell, representative and twist count")
    p.add_argument("file")

    p = sub.add_parser("twist", help="Dehn twist a triangulation")
    p.add_argument("file")
    p.add_argument("--boundary", choices=["inner", "outer"], required=True)
    p.add_argument("--dir", choices=["cw", "ccw"], required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--full", type=int, metavar="K", help="apply K full twists")
    g.add_argument("--elementary", action="store_true", help="apply one elementary twist (default)")

    p = sub.add_parser("phi", help="cluster object of a triangulation")
    p.add_argument("file")
    p.add_argument("--eps", help="orientation vector; defaults to + n times then - m times")

    p = sub.add_parser("tau", help="Auslander-Reiten translate of a string")
    p.add_argument("string", help="a name such as 22_1, or a string JSON file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--eps", help="orientation vector (required for names)")

    p = sub.add_parser("mutate", help="mutate a quiver or seed")
    p.add_argument("file")
    p.add_argument("--at", required=True, help="comma separated vertices, applied left to right")

    p = sub.add_parser("verify-family", help="compare full twists with moves along rays")
    p.add_argument("file")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--eps", help="orientation vector; defaults to + n times then - m times")

    p = sub.add_parser("check", help="run the invariant suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("render", help="draw a triangulation as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--cover", action="store_true", help="draw a strip of the universal cover")
    p.add_argument("--eps", help="orientation for the steep chords in the cover view")
    return parser


def _load_triangulation(path: str) -> Triangulation:
    return io.triangulation_from_json(io.load_json(path))


def _orientation(text: str) -> Orientation:
    if not re.fullmatch(r"[+\-−]+", text.strip()):
        raise io.FormatError(f"--eps must be a string of + and - signs, got {text!r}")
    return Orientation.parse(text)


def _frame(t: Triangulation, eps: str | None):
    ann = t.annulus
    o = _orientation(eps) if eps else Orientation.parse("+" * ann.n + "-" * ann.m)
    if annulus_signature(o) != (ann.n, ann.m):
        raise DomainError(f"orientation {o} does not describe A({ann.n},{ann.m})")
    return steep_frame(o)


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_count(args) -> int:
    _print(str(count_families(args.n, args.m)))
    return EXIT_OK


def _emit_triangulations(pairs, as_json: bool) -> None:
    if as_json:
        _print(io.dumps([io.triangulation_to_json(t, cell) for cell, t in pairs]))
        return
    for cell, t in pairs:
        prefix = f"k={cell.k} i={cell.i} j={cell.j}\t" if cell is not None else ""
        _print(prefix + str(t))


def _cmd_enumerate(args) -> int:
    pairs = list(enumerate_representatives(args.n, args.m))
    if args.svg:
        out = Path(args.svg)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(len(pairs)))
        for idx, (cell, t) in enumerate(pairs, start=1):
            (out / f"rep_{idx:0{width}d}.svg").write_text(render(t), encoding="utf-8")
    _emit_triangulations(pairs, args.json)
    return EXIT_OK


def _cmd_brute(args) -> int:
    _emit_triangulations([(None, t) for t in brute_force_small_triangulations(args.n, args.m)], args.json)
    return EXIT_OK


def _cmd_canonical(args) -> int:
    cell, rep, z = canonicalize(_load_triangulation(args.file))
    _print(io.dumps({"cell": io.cell_to_json(cell), "representative": io.triangulation_to_json(rep), "z": z}))
    return EXIT_OK


def _cmd_twist(args) -> int:
    t = _load_triangulation(args.file)
    elementary = args.full is None
    times = 1 if elementary else args.full
    out = t.twisted(Side(args.boundary), Direction(args.dir), elementary=elementary, times=times)
    _print(io.dumps(io.triangulation_to_json(out)))
    return EXIT_OK


def _cmd_phi(args) -> int:
    t = _load_triangulation(args.file)
    _print(io.dumps(io.cluster_to_json(cluster_of(t, _frame(t, args.eps)))))
    return EXIT_OK


def _cmd_tau(args) -> int:
    path = Path(args.string)
    if path.suffix == ".json" or path.is_file():
        s = io.string_from_json(io.load_json(path))
    else:
        if not args.eps:
            raise io.FormatError("--eps is required when the string is given by name")
        if not re.fullmatch(r"\d+,?\d+_\d+|\d+,\d+,\d+", args.string.strip()):
            raise io.FormatError(f"cannot read string name {args.string!r}")
        s = StringWord.named(_orientation(args.eps), args.string)
    result = tau(s, inverse=args.inverse)
    _print("undefined" if result is None else result.name)
    return EXIT_OK


def _cmd_mutate(args) -> int:
    data = io.load_json(args.file)
    try:
        ks = [int(k) for k in args.at.split(",") if k.strip()]
    except ValueError:
        raise io.FormatError(f"cannot read vertex list {args.at!r}") from None
    if isinstance(data, dict) and "variables" in data:
        seed = io.seed_from_json(data)
    else:
        seed = LaurentSeed.initial(io.quiver_from_json(data))
    _print(io.dumps(io.seed_to_json(mutate_sequence(seed, ks))))
    return EXIT_OK


def _cmd_verify(args) -> int:
    t = _load_triangulation(args.file)
    report = verify_family_theorem(t, args.z, _frame(t, args.eps))
    _print(io.dumps(io.report_to_json(report)))
    return EXIT_OK if report.passed else EXIT_CHECK


def _cmd_check(args) -> int:
    results = run_checks(args.level, args.seed)
    for r in results:
        _print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def _cmd_render(args) -> int:
    t = _load_triangulation(args.file)
    frame = _frame(t, args.eps) if args.cover else None
    Path(args.out).write_text(render(t, cover=args.cover, frame=frame), encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "brute": _cmd_brute,
    "canonical": _cmd_canonical,
    "twist": _cmd_twist,
    "phi": _cmd_phi,
    "tau": _cmd_tau,
    "mutate": _cmd_mutate,
    "verify-family": _cmd_verify,
    "check": _cmd_check,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (io.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, IntegrityError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
