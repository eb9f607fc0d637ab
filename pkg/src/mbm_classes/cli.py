"""Command-line interface: ``mbm-classes {enumerate,classify,walls,bm-check}``.

Throughout, ``--d`` is HALF the square of x: q(x) = 2d.

Exit codes: 0 success, 1 invalid input (or an incomplete bm-check scan),
2 a theorem-guaranteed bound was violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import curves, mukai, orbits, walls
from .lattice import Family, LatticeError, PicClass, bb_square, delta, divisibility, dual_square
from .orbits import InternalConsistencyError

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INTERNAL = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def class_record(alpha: PicClass) -> dict:
    return {"f": alpha.f, "c": alpha.c, "d": alpha.d, "square": bb_square(alpha)}


def orbit_record(o: orbits.OrbitDescriptor) -> dict:
    return {
        "a": o.a,
        "b": o.b,
        "q_hat": rational(o.q_hat),
        "delta_abs": o.delta_abs,
        "canonical_rep": class_record(o.canonical_rep),
    }


def curve_record(cr: curves.CurveRealization) -> dict:
    return {
        "genus": cr.genus,
        "k": cr.k,
        "r": cr.r,
        "b_norm": cr.b_norm,
        "homology_class": {
            "f_hat": rational(cr.homology_class.f_hat),
            "c_hat": rational(cr.homology_class.c_hat),
            "square": rational(cr.homology_class.square()),
        },
        "locus_dim": cr.locus_dim,
        "fiber_dim": cr.fiber_dim,
        "exceptional": cr.exceptional,
    }


def wall_record(w: walls.WallRay) -> dict:
    return {
        "generator": {"p": w.p, "q": w.q},
        "slope": rational(w.slope),
        "source": {"f": w.source.f, "c": w.source.c},
        "orbit": {"a": w.orbit.a, "b": w.orbit.b},
    }


def envelope(command: str, family: Family, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "family": {"kind": family.kind.value, "n": family.n},
        "payload": payload,
    }


def dump_json(record: dict) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LatticeError(f"not an exact rational: {text!r}")


def parse_pair(text: str) -> tuple[int, int]:
    try:
        f, c = (int(p) for p in text.split(","))
    except ValueError:
        raise LatticeError(f"expected 'f,c' integers, got {text!r}")
    return f, c


# -- commands -----------------------------------------------------------------


def cmd_enumerate(args) -> tuple[str, int]:
    family = Family.parse(args.type, args.n)
    entries = []
    for o in orbits.enumerate_mbm_orbits(family):
        entries.append((o, curves.realize_orbit(o)))
    if args.format == "csv":
        header = ["a", "b", "q_hat_num", "q_hat_den", "delta_abs", "rep_f", "rep_c", "rep_d",
                  "genus", "k", "locus_dim", "fiber_dim", "exceptional"]
        rows = []
        for o, cr in entries:
            rep = o.canonical_rep
            rows.append([o.a, o.b, o.q_hat.numerator, o.q_hat.denominator, o.delta_abs,
                         rep.f, rep.c, rep.d, cr.genus, cr.k, cr.locus_dim, cr.fiber_dim,
                         int(cr.exceptional)])
        return dump_csv(header, rows), EXIT_OK
    payload = {
        "count": len(entries),
        "extremal_q_hat": rational(curves.extremal_qhat(family)),
        "genus_bound": curves.genus_bound(family),
        "orbits": [dict(orbit_record(o), curve=curve_record(cr)) for o, cr in entries],
    }
    return dump_json(envelope("enumerate", family, payload)), EXIT_OK


def cmd_classify(args) -> tuple[str, int]:
    family = Family.parse(args.type, args.n)
    alpha = PicClass(args.f, args.c, args.d, family)
    verdict = orbits.classify(alpha)
    delta_el = delta(alpha)
    norm = verdict.normalized
    payload = {
        "class": class_record(alpha),
        "divisibility": divisibility(alpha),
        "delta": {"residue": delta_el.value, "signed_rep": delta_el.signed_rep},
        "dual_square": rational(dual_square(alpha)),
        "verdict": verdict.verdict.value,
        "reason": verdict.reason,
        "normalization": None if norm is None else {
            "r": norm.r,
            "b_norm": norm.b_norm,
            "b": norm.b,
            "q_x": norm.q_x,
            "l": norm.shift,
        },
        "orbit": None if verdict.orbit is None else orbit_record(verdict.orbit),
    }
    return dump_json(envelope("classify", family, payload)), EXIT_OK


def cmd_walls(args) -> tuple[str, int]:
    family = Family.parse(args.type, args.n)
    lo = None if args.slope_lo is None else parse_rational(args.slope_lo)
    hi = None if args.slope_hi is None else parse_rational(args.slope_hi)
    window = walls.ScanWindow(args.bound, lo, hi)
    rays = walls.scan_walls(family, args.d, window)
    for ray in rays:
        if not walls.check_ray(ray):
            raise InternalConsistencyError(f"emitted ray {ray} fails the wall checks")

    if args.format == "csv":
        header = ["slope_num", "slope_den", "source_f", "source_c", "orbit_a", "orbit_b"]
        rows = [[w.slope.numerator, w.slope.denominator, w.source.f, w.source.c,
                 w.orbit.a, w.orbit.b] for w in rays]
        return dump_csv(header, rows), EXIT_OK

    chamber = None
    if args.probe is not None:
        pf, pc = parse_pair(args.probe)
        ch = walls.chamber_of(family, args.d, PicClass(pf, pc, args.d, family), window)
        chamber = {
            "probe": class_record(ch.probe),
            "lower": None if ch.lower is None else wall_record(ch.lower),
            "upper": None if ch.upper is None else wall_record(ch.upper),
            "on_wall": ch.on_wall,
        }
    payload = {
        "d": args.d,
        "window": {
            "coeff_bound": args.bound,
            "slope_lo": None if lo is None else rational(lo),
            "slope_hi": None if hi is None else rational(hi),
        },
        "completeness": {
            "complete_within_bound": True,
            "coeff_bound": args.bound,
            "note": "every emitted ray is a wall; walls with source coefficients above the bound are not listed",
        },
        "sources": walls.classify_sources(family, args.d, args.bound),
        "walls": [wall_record(w) for w in rays],
        "chamber": chamber,
    }
    return dump_json(envelope("walls", family, payload)), EXIT_OK


def cmd_bm_check(args) -> tuple[str, int]:
    family = Family.parse(args.type, args.n)
    if min(args.u, args.s, args.kappa) <= 0:
        raise LatticeError("bm-check bounds must be positive")
    result = mukai.bm_check(family, args.u, args.s, args.kappa)
    wall_set = set(result["wall_orbits"])
    theorem_set = set(result["theorem_orbits"])
    payload = {
        "bounds": {"u": args.u, "s": args.s, "kappa": args.kappa},
        "wall_orbits": [{"a": a, "b": b} for a, b in result["wall_orbits"]],
        "theorem_orbits": [{"a": a, "b": b} for a, b in result["theorem_orbits"]],
        "match": result["match"],
    }
    if not wall_set <= theorem_set:
        code = EXIT_INTERNAL
    elif not result["match"]:
        code = EXIT_DOMAIN
    else:
        code = EXIT_OK
    return dump_json(envelope("bm-check", family, payload)), code


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mbm-classes", description="Exact enumeration of MBM classes (K3^[n] and Kummer types).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(p):
        p.add_argument("--type", required=True, choices=["k3", "kummer"])
        p.add_argument("--n", required=True, type=int, help="half the complex dimension (n >= 2)")

    p = sub.add_parser("enumerate", help="list all MBM monodromy orbits")
    family_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify the class f*x + c*e")
    family_args(p)
    p.add_argument("--f", required=True, type=int)
    p.add_argument("--c", required=True, type=int)
    p.add_argument("--d", required=True, type=int, help="half-square of x: q(x) = 2d")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("walls", help="scan MBM walls of the positive cone of <2d> + <-t>")
    family_args(p)
    p.add_argument("--d", required=True, type=int, help="half-square of x: q(x) = 2d")
    p.add_argument("--bound", required=True, type=int, help="cap on |f|, |c| of wall sources")
    p.add_argument("--slope-lo", help="lower bound on ray slope q/p, exact (write negatives as --slope-lo=-2/3)")
    p.add_argument("--slope-hi", help="upper bound on ray slope q/p")
    p.add_argument("--probe", help="positive class 'f,c' whose chamber to report")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("bm-check", help="compare Bayer-Macri/Yoshioka walls with the orbit list")
    family_args(p)
    p.add_argument("--u", required=True, type=int, help="bound on |u| (rank component)")
    p.add_argument("--s", required=True, type=int, help="bound on |s| (degree component)")
    p.add_argument("--kappa", required=True, type=int, help="bound on |kappa^2|")
    p.set_defaults(func=cmd_bm_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
