"""Command-line front end.

Every verb renders the same numeric content as text (default) or JSON
(``--format json``; schema in ``flagdom/schema/report.schema.json``).  The
environment variable ``FLAGDOM_FORMAT`` sets the default output format.
Exit codes: 0 success, 1 domain error, 2 usage error.

Note: option values starting with '-' (weights, directions) need the
``--weight=-4,0`` form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cert as certmod
from . import orbits as orbitsmod
from .bbw import bbw_line, simple_flag
from .errors import FlagdomError, UnsupportedFamilyError
from .realform import (
    KWeight,
    facet_values,
    iwasawa_dims,
    membership,
    parse_form,
    polytope_U,
    restricted_roots,
)
from .rootsys import (
    DEFAULT_WEYL_CAP,
    Weight,
    build_root_system,
    enumerate_weyl_group,
    root_to_weight,
)
from .schubert import betti_numbers, flag_manifold, minimal_coset_reps, poincare_dual

REPORT_FORMAT = "flagdom.report/1"


def _parse_type(text: str):
    text = text.strip().lower()
    if len(text) < 2:
        raise UnsupportedFamilyError(f"malformed simple type {text!r}, expected e.g. a2")
    return build_root_system(text[0].upper(), int(text[1:]))


def _parse_flag(spec, text: str):
    text = text.strip().lower()
    if text == "proj":
        return orbitsmod.projective_space(spec)
    parts = text.split(",")
    if parts[0] == "gr" and len(parts) == 2:
        return orbitsmod.grassmannian(spec, int(parts[1]))
    if parts[0] == "flag" and len(parts) > 1:
        return orbitsmod.partial_flag(spec, [int(v) for v in parts[1:]])
    raise UnsupportedFamilyError(
        f"malformed flag {text!r}; expected proj, gr,k or flag,k1,k2,...")


def _parse_orbit(spec, flag, text: str):
    text = text.strip().lower()
    if text in ("open", "plus", "minus"):
        signature = text
    else:
        pairs = [part.strip("()") for part in text.split(";")]
        signature = tuple(tuple(int(v) for v in part.split(",")) for part in pairs)
        signature = tuple((a, b) for a, b in signature)
    for orbit in orbitsmod.enumerate_open_orbits(spec, flag):
        if orbit.signature == signature:
            return orbit
    raise UnsupportedFamilyError(
        f"{text!r} is not an open orbit of {spec.name} on this flag manifold")


def _parse_weight(rank: int, flag, text: str) -> Weight:
    values = [int(v) for v in text.split(",")]
    if len(values) == rank:
        return Weight(tuple(values))
    if len(values) == 1 and flag is not None:
        steps = tuple(sorted(set(range(1, rank + 1)) - flag.q_parab.levi_simples))
        if len(steps) == 1:
            coords = [0] * rank
            coords[steps[0] - 1] = values[0]
            return Weight(tuple(coords))
    raise UnsupportedFamilyError(
        f"weight {text!r} needs {rank} comma-separated coordinates "
        "(a single integer is allowed for one-step flags: k times the step's "
        "fundamental weight)")


def _parse_fractions(text: str):
    return tuple(Fraction(part) for part in text.split(","))


def _parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UnsupportedFamilyError(f"malformed range {text!r}; expected a..b")
    return range(int(lo), int(hi) + 1)


def _pi(value: Fraction) -> str:
    return f"{value} pi"


def _emit(payload: dict, text_lines, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


# -- verb handlers ---------------------------------------------------------------

def _cmd_roots(args, fmt):
    rs = _parse_type(args.type)
    fund = [list(root_to_weight(rs, r).coords) for r in rs.positive_roots]
    payload = {
        "format": REPORT_FORMAT, "verb": "roots",
        "family": rs.family, "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "num_positive_roots": rs.num_positive_roots,
        "positive_roots": [list(r) for r in rs.positive_roots],
        "positive_roots_fundamental": fund,
    }
    lines = [f"root system {rs.family}{rs.rank} (rank {rs.rank})", "cartan matrix:"]
    lines += ["  " + " ".join(f"{v:2d}" for v in row) for row in rs.cartan]
    lines.append(f"positive roots ({rs.num_positive_roots}), simple | fundamental coordinates:")
    for simple, f in zip(rs.positive_roots, fund):
        lines.append("  " + " ".join(str(v) for v in simple) + "  |  "
                     + " ".join(str(v) for v in f))
    _emit(payload, lines, fmt)


def _cmd_weyl(args, fmt):
    rs = _parse_type(args.type)
    group = enumerate_weyl_group(rs, cap=args.cap)
    hist = [0] * (rs.num_positive_roots + 1)
    for w in group.elements:
        hist[w.length] += 1
    payload = {
        "format": REPORT_FORMAT, "verb": "weyl",
        "family": rs.family, "rank": rs.rank, "order": group.order,
        "longest_word": list(group.longest.word),
        "length_histogram": hist,
    }
    lines = [f"weyl group of {rs.family}{rs.rank}: order {group.order}",
             "longest element: " + ("e" if not group.longest.word else
                                    " ".join(f"s{i}" for i in group.longest.word))
             + f" (length {group.longest.length})",
             "elements by length: " + " ".join(str(v) for v in hist)]
    _emit(payload, lines, fmt)


def _word_str(word) -> str:
    return "e" if not word else "*".join(f"s{i}" for i in word)


def _cmd_schubert(args, fmt):
    rs = _parse_type(args.type)
    levi = sorted(int(v) for v in args.levi.split(",")) if args.levi else []
    flag = flag_manifold(rs, levi)
    reps = minimal_coset_reps(flag, cap=args.cap)
    rep_rows = [{"word": list(sv.rep.word), "dim": sv.dim, "codim": sv.codim,
                 "dual_word": list(poincare_dual(sv).rep.word)} for sv in reps]
    payload = {
        "format": REPORT_FORMAT, "verb": "schubert",
        "family": rs.family, "rank": rs.rank, "levi": levi,
        "dim": flag.dim, "num_classes": len(reps),
        "reps": rep_rows, "betti": list(betti_numbers(flag, cap=args.cap)),
    }
    levi_str = "{" + ",".join(str(v) for v in levi) + "}"
    lines = [f"flag manifold {rs.family}{rs.rank} / levi {levi_str}: "
             f"dim {flag.dim}, {len(reps)} schubert classes",
             "  word          dim codim  dual"]
    for row in rep_rows:
        lines.append(f"  {_word_str(row['word']):<13} {row['dim']:<3} {row['codim']:<6} "
                     + _word_str(row["dual_word"]))
    lines.append("betti numbers: " + " ".join(str(v) for v in payload["betti"]))
    _emit(payload, lines, fmt)


def _cmd_restricted(args, fmt):
    spec = parse_form(args.form)
    rrs = restricted_roots(spec)
    a0, n0 = iwasawa_dims(spec)
    rows = [{"ambient": [str(v) for v in r.ambient],
             "simple_coords": list(r.simple_coords),
             "multiplicity": r.multiplicity} for r in rrs.roots]
    payload = {
        "format": REPORT_FORMAT, "verb": "restricted",
        "form": spec.name, "a_rank": rrs.a_rank, "ambient_dim": rrs.ambient_dim,
        "roots": rows, "dim_a0": a0, "dim_n0": n0,
    }
    lines = [f"restricted roots of {spec.name}: a-rank {rrs.a_rank} "
             f"(ambient dim {rrs.ambient_dim}), {len(rows)} roots",
             "  ambient | simple coords | multiplicity"]
    for row in rows:
        lines.append("  " + " ".join(row["ambient"]) + " | "
                     + " ".join(str(v) for v in row["simple_coords"])
                     + f" | {row['multiplicity']}")
    lines.append(f"iwasawa dimensions: dim A0 = {a0}, dim N0 = {n0}")
    _emit(payload, lines, fmt)


def _cmd_polytope(args, fmt):
    spec = parse_form(args.form)
    poly = polytope_U(spec)
    xi = _parse_fractions(args.test)
    scale = Fraction(args.scale)
    inside = membership(poly, xi, scale)
    values = facet_values(poly, xi, scale)
    payload = {
        "format": REPORT_FORMAT, "verb": "polytope",
        "form": spec.name, "a_rank": poly.a_rank,
        "point": [_pi(v) for v in (Fraction(x) for x in xi)],
        "scale": str(scale), "inside": inside, "bound": _pi(poly.bound),
        "facets": [{"normal": list(n), "value": _pi(v)}
                   for n, v in zip(poly.facet_normals, values)],
    }
    lines = [f"universal-domain polytope V for {spec.name} (a-rank {poly.a_rank})",
             "point (values of the simple restricted roots): ("
             + ", ".join(payload["point"]) + f"), scale {scale}",
             f"facet values (strict bound {payload['bound']}):"]
    for facet in payload["facets"]:
        normal = " ".join(str(v) for v in facet["normal"])
        mark = ""
        value = Fraction(facet["value"].split()[0])
        if not (-poly.bound < value < poly.bound):
            mark = "   <-- violated"
        lines.append(f"  normal {normal}: {facet['value']}{mark}")
    lines.append("result: " + ("inside" if inside else "outside"))
    _emit(payload, lines, fmt)


def _cmd_orbits(args, fmt):
    spec = parse_form(args.form)
    flag = _parse_flag(spec, args.flag)
    orbits = orbitsmod.enumerate_open_orbits(spec, flag)
    rows = []
    for orbit in orbits:
        cycle = orbitsmod.base_cycle(orbit)
        rows.append({"signature": orbit.describe(), "q": cycle.q,
                     "base_cycle": cycle.description,
                     "classification": orbitsmod.classify_exception(orbit).value})
    steps = orbits[0].steps if orbits else ()
    payload = {
        "format": REPORT_FORMAT, "verb": "orbits",
        "form": spec.name, "flag_steps": list(steps), "dim_z": flag.dim,
        "orbits": rows,
    }
    lines = [f"open orbits of {spec.name} on flag steps "
             f"({','.join(str(v) for v in steps)}), dim Z = {flag.dim}: {len(rows)}"]
    for row in rows:
        lines.append(f"  {row['signature']}: q = {row['q']}, C0 = {row['base_cycle']}, "
                     f"classification {row['classification']}")
    _emit(payload, lines, fmt)


def _cmd_basecycle(args, fmt):
    spec = parse_form(args.form)
    flag = _parse_flag(spec, args.flag)
    orbit = _parse_orbit(spec, flag, args.orbit)
    cycle = orbitsmod.base_cycle(orbit)
    factors = [f.family + str(f.rank) for f in cycle.k_flag.k_group.factors]
    payload = {
        "format": REPORT_FORMAT, "verb": "basecycle",
        "form": spec.name, "flag_steps": list(orbit.steps),
        "signature": orbit.describe(), "q": cycle.q,
        "description": cycle.description, "k_factors": factors,
        "classification": orbitsmod.classify_exception(orbit).value,
    }
    lines = [f"base cycle of {spec.name}, orbit {orbit.describe()}:",
             f"  C0 = {cycle.description}",
             f"  q = dim C0 = {cycle.q}",
             f"  K simple factors: {', '.join(factors) if factors else '(torus only)'}",
             f"  classification: {payload['classification']}"]
    _emit(payload, lines, fmt)


def _cmd_bbw(args, fmt):
    rs = _parse_type(args.k_type)
    levi = sorted(int(v) for v in args.levi.split(",")) if args.levi else []
    flag = simple_flag(rs, levi)
    weight = _parse_weight(rs.rank, None, args.weight)
    res = bbw_line(flag, KWeight((weight.coords,), ()))
    result = {"zero": res.zero}
    if not res.zero:
        result |= {"degree": res.degree, "dim": res.dim,
                   "highest_weight": {"parts": [list(p) for p in res.highest_weight.parts],
                                      "torus": []}}
    payload = {
        "format": REPORT_FORMAT, "verb": "bbw",
        "k_type": f"{rs.family}{rs.rank}", "levi": levi,
        "weight": list(weight.coords), "result": result,
    }
    lines = [f"line-bundle cohomology on {rs.family}{rs.rank} / levi "
             + "{" + ",".join(str(v) for v in levi) + "}, weight "
             + ",".join(str(v) for v in weight.coords)]
    if res.zero:
        lines.append("  all cohomology vanishes (rho-shifted weight is singular)")
    else:
        hw = ",".join(str(v) for v in res.highest_weight.parts[0])
        lines.append(f"  degree {res.degree}, dimension {res.dim}, highest weight ({hw})")
    _emit(payload, lines, fmt)


def _cmd_certify(args, fmt):
    spec = parse_form(args.form)
    flag = _parse_flag(spec, args.flag)
    orbit = _parse_orbit(spec, flag, args.orbit)
    weight = _parse_weight(spec.complex_rank, flag, args.weight)
    certificate = certmod.certify(orbit, weight,
                                  force_holomorphic_type=args.force_holomorphic_type)
    payload = {"format": REPORT_FORMAT, "verb": "certify",
               "certificate": certmod.to_json_dict(certificate)}
    _emit(payload, certmod.render_text(certificate).rstrip("\n").split("\n"), fmt)


def _cmd_scan(args, fmt):
    spec = parse_form(args.form)
    flag = _parse_flag(spec, args.flag)
    orbit = _parse_orbit(spec, flag, args.orbit)
    direction = _parse_weight(spec.complex_rank, flag, args.direction)
    ks = _parse_range(args.range)
    report = certmod.threshold_scan(orbit, direction, ks,
                                    force_holomorphic_type=args.force_holomorphic_type)
    payload = {"format": REPORT_FORMAT, "verb": "scan",
               "scan": certmod.scan_to_json_dict(report)}
    lines = [f"threshold scan for {spec.name}, orbit {orbit.describe()}, "
             f"direction {','.join(str(c) for c in direction.coords)}",
             "   k  verdict"]
    for k, verdict in report.entries:
        lines.append(f"  {k:2d}  {verdict}")
    if report.boundary is None:
        lines.append("boundary: none (no injective verdict in range)")
    else:
        lines.append(f"boundary: k = {report.boundary} "
                     + ("(injective region contiguous)" if report.contiguous
                        else "(region NOT contiguous)"))
    _emit(payload, lines, fmt)


# -- parser ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagdom",
        description="Exact flag-domain combinatorics and double-fibration-"
                    "transform injectivity certificates.")
    default_fmt = os.environ.get("FLAGDOM_FORMAT", "text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_fmt,
                        help="output format (default from FLAGDOM_FORMAT, else text)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("roots", parents=[common], help="root system data")
    p.add_argument("--type", required=True, help="simple type, e.g. a2")

    p = sub.add_parser("weyl", parents=[common], help="Weyl group enumeration")
    p.add_argument("--type", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_WEYL_CAP)

    p = sub.add_parser("schubert", parents=[common],
                       help="Schubert classes of G/Q with duals and Betti numbers")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", default="", help="Levi simple roots, e.g. 1,3")
    p.add_argument("--cap", type=int, default=DEFAULT_WEYL_CAP)

    p = sub.add_parser("restricted", parents=[common],
                       help="restricted roots with multiplicities")
    p.add_argument("--form", required=True, help="real form, e.g. su,2,1 or sl_r,3")

    p = sub.add_parser("polytope", parents=[common],
                       help="membership in the universal-domain polytope V")
    p.add_argument("--form", required=True)
    p.add_argument("--test", required=True,
                   help="point as rational values of the simple restricted roots "
                        "in units of pi, e.g. 1/2 or 1/3,1/3")
    p.add_argument("--scale", default="1", help="rational scale factor")

    p = sub.add_parser("orbits", parents=[common], help="open orbits on a flag manifold")
    p.add_argument("--form", required=True)
    p.add_argument("--flag", required=True, help="proj | gr,k | flag,k1,k2,...")

    p = sub.add_parser("basecycle", parents=[common], help="base cycle of one orbit")
    p.add_argument("--form", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--orbit", required=True, help="open | plus | minus | a,b[;a,b...]")

    p = sub.add_parser("bbw", parents=[common],
                       help="line-bundle cohomology on a K-type flag manifold")
    p.add_argument("--k-type", required=True, dest="k_type", help="e.g. a1")
    p.add_argument("--levi", default="")
    p.add_argument("--weight", required=True, help="fundamental coordinates, e.g. -2")

    p = sub.add_parser("certify", parents=[common],
                       help="injectivity certificate for the double fibration transform")
    p.add_argument("--form", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--orbit", required=True)
    p.add_argument("--weight", required=True,
                   help="bundle character (use --weight=-4 for negatives)")
    p.add_argument("--force-holomorphic-type", action="store_true",
                   help="override: treat the orbit as Hermitian holomorphic type")

    p = sub.add_parser("scan", parents=[common],
                       help="certify along k*direction and report the boundary")
    p.add_argument("--form", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--orbit", required=True)
    p.add_argument("--direction", required=True, help="e.g. --direction=-1")
    p.add_argument("--range", required=True, help="inclusive, e.g. 0..12")
    p.add_argument("--force-holomorphic-type", action="store_true")

    return parser


_HANDLERS = {
    "roots": _cmd_roots,
    "weyl": _cmd_weyl,
    "schubert": _cmd_schubert,
    "restricted": _cmd_restricted,
    "polytope": _cmd_polytope,
    "orbits": _cmd_orbits,
    "basecycle": _cmd_basecycle,
    "bbw": _cmd_bbw,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format not in ("text", "json"):
        print(f"flagdom: invalid output format {args.format!r}", file=sys.stderr)
        return 2
    try:
        _HANDLERS[args.verb](args, args.format)
    except FlagdomError as exc:
        print(f"flagdom: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"flagdom: {exc}", file=sys.stderr)
        return 2
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
