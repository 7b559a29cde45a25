"""Command line: ``generate``, ``verify`` and ``report``.

Exit codes: 0 success / all checks pass, 1 a check failed or I/O error,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from . import geometry as geo
from .checks import CATALOG, run_all, run_check
from .lattice import (
    ShellDecomposition,
    d6_roots,
    e8_roots,
    icosian_module,
    pure_imaginary_submodule,
    short_vectors,
)
from .projection import CONVENTIONS, project_d6_roots, project_e8_roots
from .quaternion import GQuat, binary_icosahedral_group, format_float

FORMATS = ("off", "json", "csv")


class UsageError(Exception):
    pass


# -- objects ----------------------------------------------------------------
# Each builder returns (kind, payload):
#   "points3": list of components (lists of 3d GoldenNum points)
#   "quats":   list of GQuat
#   "rational": list of rational tuples
#   "shells3" / "shells4": ShellDecomposition


def _by_radius(points):
    sh = ShellDecomposition(points, geo.norm_sq)
    return [list(v) for v in sh.shells.values()]


def _slice():
    return geo.slice_600cell(binary_icosahedral_group())


def _icosian_minimal():
    return [GQuat.from_rational_coords(v) for v in short_vectors(icosian_module(), 2)]


def _imaginary_minimal():
    return [GQuat.from_rational_coords(v).imag for v in short_vectors(pure_imaginary_submodule(), 2)]


OBJECTS = {
    "icosahedron": lambda: ("points3", [geo.icosahedron()]),
    "icosidodecahedron-midpoint": lambda: ("points3", [geo.midpoint_icosidodecahedron(geo.icosahedron())]),
    "icosidodecahedron-slice": lambda: ("points3", [_slice()]),
    "golden-boxes": lambda: ("points3", geo.golden_boxes()),
    "octahedron": lambda: ("points3", [geo.octahedron()]),
    "600cell": lambda: ("quats", list(binary_icosahedral_group())),
    "d6-roots": lambda: ("rational", d6_roots()),
    "e8-roots": lambda: ("rational", e8_roots()),
    "icosian-minimal": lambda: ("quats", _icosian_minimal()),
    "imaginary-minimal": lambda: ("points3", _by_radius(_imaginary_minimal())),
    "d6-projection": lambda: ("shells3", project_d6_roots()),
    "e8-projection": lambda: ("shells4", project_e8_roots()),
}


def _gjson(g):
    return list(g.to_tuple())


def _rjson(x: Fraction):
    return [x.numerator, x.denominator]


def _rfloat(x: Fraction, precision):
    return f"{float(x):.{precision}g}"


def render_object(name: str, fmt: str, precision: int = 17) -> str:
    if name not in OBJECTS:
        raise UsageError(f"unknown object {name!r}")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    kind, payload = OBJECTS[name]()
    if fmt == "off":
        if kind == "points3":
            return geo.to_off(payload, precision)
        if kind == "shells3":
            return geo.to_off([list(v) for v in payload.shells.values()], precision)
        raise UsageError(f"{name} is not a 3d object; OFF is unavailable")

    if kind == "shells3":
        if fmt == "json":
            return payload.to_json(lambda p: [_gjson(c) for c in p]) + "\n"
        kind, payload = "points3", [list(v) for v in payload.shells.values()]
    if kind == "shells4":
        if fmt == "json":
            return payload.to_json(lambda q: [_gjson(c) for c in q.coeffs]) + "\n"
        kind, payload = "quats", payload.points()

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if kind == "points3":
        pts = [p for comp in payload for p in comp]
        if fmt == "json":
            return json.dumps({"object": name, "dimension": 3, "count": len(pts),
                               "points": [[_gjson(c) for c in p] for p in pts]}) + "\n"
        w.writerow(["x", "y", "z"])
        for p in pts:
            w.writerow([format_float(c, precision) for c in p])
    elif kind == "quats":
        if fmt == "json":
            return json.dumps({"object": name, "dimension": 4, "count": len(payload),
                               "quaternions": [[_gjson(c) for c in q.coeffs] for q in payload]}) + "\n"
        w.writerow(["a", "b", "c", "d"])
        for q in payload:
            w.writerow([format_float(c, precision) for c in q.coeffs])
    elif kind == "rational":
        dim = len(payload[0])
        if fmt == "json":
            return json.dumps({"object": name, "dimension": dim, "count": len(payload),
                               "vectors": [[_rjson(x) for x in v] for v in payload]}) + "\n"
        w.writerow([f"x{i + 1}" for i in range(dim)])
        for v in payload:
            w.writerow([_rfloat(x, precision) for x in v])
    return buf.getvalue()


# -- commands ---------------------------------------------------------------


def cmd_generate(args) -> int:
    text = render_object(args.object, args.format, args.float_precision)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    names = list(CATALOG) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in CATALOG:
        raise UsageError(f"unknown check {args.check!r}")
    reports = [run_check(n, args.convention) for n in names]
    for r in reports:
        if args.json:
            out.write(json.dumps(r.to_dict()) + "\n")
        else:
            out.write(f"{r.status.upper():4s}  {r.check_name}\n")
            if not r.passed:
                out.write(f"      expected: {r.expected}\n      actual:   {r.actual}\n")
                if "witness" in r.detail:
                    out.write(f"      witness:  {json.dumps(r.detail['witness'])}\n")
    return 0 if all(r.passed for r in reports) else 1


def build_report(convention: str = "default", timing: bool = False) -> str:
    conv = CONVENTIONS[convention]
    reports = run_all(convention)
    doc = {
        "tool": "icosilab",
        "version": __version__,
        "convention": {"name": conv.name, "negated_coordinates": [i + 1 for i in conv.negate],
                       "scale": [conv.scale.numerator, conv.scale.denominator]},
        "catalog": list(CATALOG),
        "checks": [r.to_dict(timing=timing) for r in reports],
        "failures": sum(1 for r in reports if not r.passed),
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_report(args) -> int:
    text = build_report(args.convention, args.timing)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    # the report is written either way; failures still set the exit code
    return 1 if json.loads(text)["failures"] else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="icosilab", description="Exact icosian / E8 / D6 verification lab.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write an object to a file")
    g.add_argument("object", help="one of: " + ", ".join(OBJECTS))
    g.add_argument("--format", required=True, help="off, json or csv")
    g.add_argument("--out", required=True)
    g.add_argument("--float-precision", type=int, default=17)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run checks")
    v.add_argument("check", help="check id or 'all'")
    v.add_argument("--json", action="store_true")
    v.add_argument("--convention", choices=sorted(CONVENTIONS), default="default")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="run every check and write a JSON report")
    r.add_argument("--out", required=True)
    r.add_argument("--convention", choices=sorted(CONVENTIONS), default="default")
    r.add_argument("--timing", action="store_true", help="include elapsed_ms (output no longer byte-stable)")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
