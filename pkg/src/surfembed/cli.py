"""Command line entry point.

Exit status 0 means success, 1 a valid run with a negative verdict, and 2
a usage or data error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, enumeration, gadget, normal, sat, verifier
from .homology import homology
from .triangulation import (TriangulationFormatError, check_closed_3_manifold,
                            parse_triangulation, serialize_triangulation)

OK, NEGATIVE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _dump(obj):
    print(json.dumps(obj, sort_keys=True))


def _tri(path):
    return parse_triangulation(_read(path))


def _coords(path, tri=None):
    x = normal.parse_coordinates(_read(path))
    if tri is not None and len(x) != 7 * tri.tet_count:
        raise UsageError(f"{path} has {len(x) // 7} rows, triangulation has "
                         f"{tri.tet_count} tetrahedra")
    return x


# -- subcommands --------------------------------------------------------------


def cmd_build_gadget(args):
    inst = sat.parse_sat(_read(args.sat))
    orders = gadget.parse_circle_orders(args.circle_order) if args.circle_order else None
    _write(args.output, serialize_triangulation(gadget.build_gadget(inst, orders)))
    return OK


def cmd_witness(args):
    inst = sat.parse_sat(_read(args.sat))
    if args.assignment == "auto":
        assignment = sat.solve_one_in_three(inst)
        if assignment is None:
            print("unsatisfiable")
            return NEGATIVE
    else:
        assignment = sat.parse_assignment(args.assignment, inst.variable_count)
    try:
        w = gadget.witness_surface(inst, assignment)
    except gadget.NotOneInThree as exc:
        if args.json:
            _dump({"error": str(exc), "clause": exc.clause, "true_literals": exc.true_count})
        else:
            print(exc)
        return NEGATIVE
    info = {"assignment": sat.format_assignment(w.assignment),
            "euler_characteristic": w.euler_characteristic,
            "euler_genus": w.euler_genus, "orientable": w.orientable,
            "triangles": w.surface.triangle_count}
    if args.json:
        _dump(info)
    else:
        for k in ("assignment", "euler_characteristic", "euler_genus", "orientable",
                  "triangles"):
            print(f"{k}: {info[k]}")
    return OK


def cmd_solve_sat(args):
    inst = sat.parse_sat(_read(args.sat))
    a = sat.solve_one_in_three(inst)
    if a is None:
        print("unsatisfiable")
        return NEGATIVE
    print(sat.format_assignment(a))
    return OK


def cmd_check_manifold(args):
    tri = _tri(args.tri)
    rep = check_closed_3_manifold(tri)
    info = {"closed": rep.is_closed, "manifold": rep.is_manifold,
            "reversed_edges": list(rep.reversed_edges),
            "bad_vertices": list(rep.bad_vertices),
            "boundary_faces": [list(f) for f in rep.boundary_faces]}
    if args.json:
        _dump(info)
    else:
        print(f"closed: {rep.is_closed}")
        print(f"manifold: {rep.is_manifold}")
        if rep.reversed_edges:
            print(f"reversed edge classes: {list(rep.reversed_edges)}")
        if rep.bad_vertices:
            print(f"bad vertex classes: {list(rep.bad_vertices)}")
    return OK if rep.is_closed and rep.is_manifold else NEGATIVE


def cmd_homology(args):
    tri = _tri(args.tri)
    coeff = "Z2" if args.z2 else "Z"
    ks = [args.k] if args.k is not None else [0, 1, 2, 3]
    groups = {k: homology(tri, k, coeff) for k in ks}
    if args.json:
        _dump({f"H_{k}": {"free_rank": g.free_rank, "torsion": list(g.torsion),
                          "coefficients": coeff} for k, g in groups.items()})
    else:
        for k, g in groups.items():
            print(f"H_{k} = {g}")
    return OK


def cmd_enumerate(args):
    tri = _tri(args.tri)
    if args.vertex:
        cfg = enumeration.EnumerationConfig(vertex_cap=args.cap or 10)
        sols = enumeration.vertex_surfaces(tri, cfg)
    else:
        cfg = enumeration.EnumerationConfig(fundamental_cap=args.cap or 6)
        sols = enumeration.fundamental_surfaces(tri, cfg)
    if args.json:
        out = []
        for x in sols:
            s = normal.reconstruct(tri, x)
            out.append({"coordinates": list(x), **s.as_dict()})
        _dump(out)
    else:
        for x in sols:
            print(" ".join(map(str, x)))
    return OK


def cmd_surface_info(args):
    tri = _tri(args.tri)
    x = _coords(args.coords, tri)
    if not normal.is_admissible(tri, x):
        _dump({"admissible": False, "residual": normal.matching_residual(tri, x),
               "quad_constraint": normal.quad_constraint_ok(x)})
        return NEGATIVE
    _dump({"admissible": True, **normal.reconstruct(tri, x).as_dict()})
    return OK


def cmd_haken_sum(args):
    tri = _tri(args.tri)
    x, y = _coords(args.a, tri), _coords(args.b, tri)
    try:
        z = normal.haken_sum(tri, x, y)
    except normal.IncompatibleError as exc:
        print(exc)
        return NEGATIVE
    _write(args.output, normal.serialize_coordinates(z))
    return OK


def cmd_min_odd_genus(args):
    tri = _tri(args.tri)
    cfg = enumeration.EnumerationConfig(fundamental_cap=args.cap or 6)
    res = enumeration.min_odd_genus(tri, cfg)
    if args.json:
        _dump(None if res is None else {"genus": res.genus,
                                        "coordinates": list(res.coordinates)})
    elif res is None:
        print("none")
    else:
        print(f"genus {res.genus}")
        sys.stdout.write(normal.serialize_coordinates(res.coordinates))
    return NEGATIVE if res is None else OK


def cmd_verify(args):
    tri = _tri(args.tri)
    x = _coords(args.coords)
    bound = verifier.BitBound.parse(args.bound_poly) if args.bound_poly else verifier.DEFAULT_BOUND
    try:
        cert = verifier.Certificate(x, args.claimed)
        verdict = verifier.verify_certificate(tri, cert, args.genus, bound)
    except verifier.PreconditionError as exc:
        _dump({"accepted": False, "error": str(exc)})
        return ERROR
    _dump({**verdict.as_dict(), "bound": bound.describe()})
    return OK if verdict.accepted else NEGATIVE


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfembed", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build-gadget", help="compile a SAT instance to a closed triangulation")
    s.add_argument("sat")
    s.add_argument("-o", "--output", default="-")
    s.add_argument("--circle-order", help="e.g. 'u1=0,2,1;c1=3,2,1,0'")
    s.set_defaults(func=cmd_build_gadget)

    s = sub.add_parser("witness", help="assemble the witness surface of an assignment")
    s.add_argument("sat")
    s.add_argument("--assignment", default="auto", help="T/F string or 'auto'")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("solve-sat", help="brute-force one-in-three satisfiability")
    s.add_argument("sat")
    s.set_defaults(func=cmd_solve_sat)

    s = sub.add_parser("check-manifold", help="closedness and vertex-link checks")
    s.add_argument("tri")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check_manifold)

    s = sub.add_parser("homology", help="simplicial homology of the triangulation")
    s.add_argument("tri")
    s.add_argument("--k", type=int, choices=range(4))
    s.add_argument("--z2", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("enumerate", help="vertex or fundamental normal surfaces")
    s.add_argument("tri")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--vertex", action="store_true")
    mode.add_argument("--fundamental", action="store_true")
    s.add_argument("--cap", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("surface-info", help="reconstruct a normal surface")
    s.add_argument("tri")
    s.add_argument("coords")
    s.set_defaults(func=cmd_surface_info)

    s = sub.add_parser("haken-sum", help="sum two compatible normal surfaces")
    s.add_argument("tri")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_haken_sum)

    s = sub.add_parser("min-odd-genus", help="smallest odd genus among fundamental surfaces")
    s.add_argument("tri")
    s.add_argument("--cap", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_min_odd_genus)

    s = sub.add_parser("verify", help="check an odd-genus certificate")
    s.add_argument("tri")
    s.add_argument("coords")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--claimed", type=int, help="genus claimed by the certificate")
    s.add_argument("--bound-poly", help="'c' or 'c,k' for c*t^k*(log2 t + 1) bits")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    try:
        return args.func(args)
    except (UsageError, TriangulationFormatError, sat.SatFormatError,
            normal.CoordinateFormatError, gadget.CircleOrderError,
            enumeration.CapExceeded, normal.NotAdmissibleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
