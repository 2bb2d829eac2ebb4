"""Command line interface: ``lwz mesh|curvature|transform|symmetry|verify|catalog``.

Exit codes: 0 success, 1 a check or computation failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .errors import LWZError
from .goursat import parse_literal, parse_matrix_spec, transform
from .mesh import MeshGrid, report_curvature, sample_mesh
from .paracomplex import PCMatrix
from .symmetry import DomainIsometry, detect, family_report
from .verify import SCOPES, run_suite
from .weierstrass import Surface, WeierstrassData

CONFIG_KEYS = ("h", "eta", "heta", "h2eta", "base", "value", "matrix", "domain")


class UsageError(Exception):
    pass


def _floats(text: str, n: int, key: str) -> tuple:
    try:
        vals = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"{key}: expected {n} comma-separated numbers") from None
    if len(vals) != n:
        raise UsageError(f"{key}: expected {n} values, got {len(vals)}")
    return vals


def read_config(path) -> tuple[Surface, tuple]:
    """Parse a ``key = value`` config file into a surface and its domain."""
    fields = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of {', '.join(CONFIG_KEYS)} = ...")
        fields[key] = value.strip()
    if "h" not in fields or "eta" not in fields:
        raise UsageError(f"{path}: both 'h' and 'eta' are required")
    base = _floats(fields["base"], 2, "base") if "base" in fields else (0.0, 0.0)
    value = _floats(fields["value"], 3, "value") if "value" in fields else (0.0, 0.0, 0.0)
    domain = _floats(fields["domain"], 4, "domain") if "domain" in fields else (-1.0, 1.0, -1.0, 1.0)
    data = WeierstrassData(
        fields["h"], fields["eta"], base, value,
        h_eta=fields.get("heta"), h2_eta=fields.get("h2eta"),
    )
    surface = Surface(data, name=Path(path).stem)
    if "matrix" in fields:
        entries = [parse_literal(e) for e in fields["matrix"].split(",")]
        surface = transform(surface, PCMatrix.from_entries(entries), name=Path(path).stem)
    return surface, domain


def resolve(target: str) -> tuple[Surface, tuple, str]:
    if os.path.isfile(target):
        surface, domain = read_config(target)
        return surface, domain, surface.name
    try:
        entry = catalog.get(target)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    return entry.surface, entry.default_domain, entry.name


def _grid(text: str) -> tuple[int, int]:
    try:
        nu, nv = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"--grid expects NUxNV, got {text!r}") from None
    return nu, nv


def _mesh_grid(args, domain, skip=True) -> MeshGrid:
    nu, nv = _grid(args.grid)
    dom = _floats(args.domain, 4, "--domain") if args.domain else domain
    try:
        return MeshGrid(nu, nv, dom, skip)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_mesh(args) -> int:
    surface, domain, _ = resolve(args.target)
    grid = _mesh_grid(args, domain, not args.keep_singular)
    _emit(sample_mesh(surface, grid, euclidean_view=args.euclidean_view), args.out)
    return 0


def cmd_curvature(args) -> int:
    surface, domain, _ = resolve(args.target)
    _emit(report_curvature(surface, _mesh_grid(args, domain, False)), args.out)
    return 0


def cmd_transform(args) -> int:
    surface, domain, name = resolve(args.target)
    try:
        M = parse_matrix_spec(args.matrix)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"--matrix: {exc}") from None
    image = transform(surface, M, name=f"{name}[{args.matrix}]")
    grid = _mesh_grid(args, domain, not args.keep_singular)
    text = f"# conformal factor {M.c.re!r} + {M.c.im!r}j\n" + sample_mesh(
        image, grid, euclidean_view=args.euclidean_view
    )
    _emit(text, args.out)
    return 0


def cmd_symmetry(args) -> int:
    surface, _, name = resolve(args.target)
    try:
        g = DomainIsometry.from_name(args.map)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"--map: {exc}") from None
    if args.family:
        try:
            report = family_report(surface, g)
        except ValueError as exc:
            print(json.dumps({"entry": name, "map": args.map, "symmetry": None, "error": str(exc)}))
            return 1
        doc = {"entry": name, "map": args.map, **report.to_dict()}
        print(json.dumps(doc, sort_keys=True))
        return 0 if report.pattern_holds else 1
    found = detect(surface, g)
    doc = {"entry": name, "map": args.map, "symmetry": None if found is None else found.to_dict()}
    print(json.dumps(doc, sort_keys=True))
    return 0 if found is not None else 1


def cmd_verify(args) -> int:
    if args.scope not in SCOPES:
        raise UsageError(f"unknown scope {args.scope!r}; choose from {', '.join(SCOPES)}")
    report = run_suite(args.scope)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["failed"] == 0 else 1


def cmd_catalog(args) -> int:
    for name in catalog.NAMES:
        if name.startswith("bonnet"):
            desc = "Lopez-Ros deformation of the elliptic catenoid; select as bonnet:1.5"
        else:
            desc = catalog.get(name).description
        print(f"{name}\t{desc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lwz", description="Timelike minimal surfaces from split-complex Weierstrass data.")
    sub = p.add_subparsers(dest="command", required=True)

    def grid_opts(sp, default="21x21"):
        sp.add_argument("--grid", default=default, help="samples as NUxNV")
        sp.add_argument("--domain", help="x0,x1,y0,y1 (default: the entry's domain)")
        sp.add_argument("--out", help="output file (default: stdout)")

    sp = sub.add_parser("mesh", help="write a Wavefront OBJ mesh")
    sp.add_argument("target", help="catalog entry or config file")
    grid_opts(sp)
    sp.add_argument("--euclidean-view", action="store_true", help="emit axes as (x2, x3, x1)")
    sp.add_argument("--keep-singular", action="store_true", help="do not drop singular vertices")
    sp.set_defaults(func=cmd_mesh)

    sp = sub.add_parser("curvature", help="write a CSV curvature table")
    sp.add_argument("target")
    grid_opts(sp)
    sp.set_defaults(func=cmd_curvature)

    sp = sub.add_parser("transform", help="mesh of a Goursat transform")
    sp.add_argument("target")
    sp.add_argument("--matrix", required=True, help="J, D, assoc:t, anti:t, lopezros:l or 9 entries")
    grid_opts(sp)
    sp.add_argument("--euclidean-view", action="store_true")
    sp.add_argument("--keep-singular", action="store_true")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("symmetry", help="detect a symmetry for a domain map")
    sp.add_argument("target")
    sp.add_argument("--map", required=True, help="zbar, negz, negzbar or shift:a+bj")
    sp.add_argument("--family", action="store_true", help="report the associated family too")
    sp.set_defaults(func=cmd_symmetry)

    sp = sub.add_parser("verify", help="run the self-check suite")
    sp.add_argument("scope", nargs="?", default="all")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", help="list catalog entries")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lwz: error: {exc}", file=sys.stderr)
        return 2
    except LWZError as exc:
        print(f"lwz: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
