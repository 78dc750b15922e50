"""Command-line front end. Every command prints one JSON document."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import oracle, selftest, toolkit
from .arrangement import (LinearSystem, chamber_of, in_cone, is_regular, new_system,
                          resolve_chamber)
from .errors import BudgetExceeded, JKError, NonUnimodular, ValidationError
from .exact import format_fraction, to_fraction
from .models import (kostant_system, margins_to_xi, network_system, parse_arcs,
                     transportation_system)
from .polynomial import MPoly
from .residue import var_names

EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_NON_UNIMODULAR = 4

COMMANDS = ("chamber", "volume", "count", "volume-poly", "count-poly", "ehrhart",
            "toric-integral", "oracle-count", "oracle-volume", "check")


class BadRequest(ValidationError):
    code = "bad_request"


def _common(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file", help="read the instance JSON from this file")
    src.add_argument("--json", dest="inline", help="instance JSON given inline")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle path")
    p.add_argument("--check", action="store_true", help="run residue and oracle paths and compare")
    p.add_argument("--symbolic", action="store_true", help="also emit the chamber polynomial")
    p.add_argument("--chamber-point", help="point selecting the chamber, e.g. '2,1'")
    p.add_argument("--budget", type=int, help="oracle table cap (default: JKRES_BUDGET or 1e7)")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jkres", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        _common(sub.add_parser(name))

    gen = sub.add_parser("gen", help="emit a model instance")
    gsub = gen.add_subparsers(dest="family", required=True)
    k = gsub.add_parser("kostant")
    k.add_argument("--rank", type=int, required=True)
    k.add_argument("--xi", help="optional target in simple-root coordinates")
    t = gsub.add_parser("transport")
    t.add_argument("--rows", required=True)
    t.add_argument("--cols", required=True)
    nw = gsub.add_parser("network")
    nw.add_argument("--arcs", required=True, help='arcs as "u>v,v>w"')
    nw.add_argument("--xi", help="optional net supply vector (dropped vertex omitted)")
    for g in (k, t, nw):
        g.add_argument("--format", choices=("json", "text"), default="json")

    st = sub.add_parser("selftest", help="run the embedded acceptance criteria")
    st.add_argument("--quick", action="store_true", help="criteria 1, 2 and 5 only")
    return parser


# --- input parsing ----------------------------------------------------------

def _load(args) -> dict:
    if args.inline is not None:
        text = args.inline
    elif args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise BadRequest(str(exc)) from None
    else:
        text = sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadRequest(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "betas" not in doc:
        raise BadRequest('expected an object with "betas"')
    return doc


def _rationals(values, what: str) -> list[Fraction]:
    if not isinstance(values, list):
        raise BadRequest(f"{what} must be a list")
    try:
        return [to_fraction(x) for x in values]
    except (TypeError, ValueError, ZeroDivisionError):
        raise BadRequest(f"{what} must contain integers or 'p/q' strings") from None


def _point(text: str) -> list[Fraction]:
    text = text.strip()
    if text.startswith("["):
        return _rationals(json.loads(text), "--chamber-point")
    return _rationals([x for x in text.split(",") if x.strip()], "--chamber-point")


def _system(doc) -> LinearSystem:
    betas = doc["betas"]
    if not isinstance(betas, list) or not all(isinstance(b, list) for b in betas):
        raise BadRequest("betas must be a list of integer lists")
    return new_system(betas)


def _xi(doc, system: LinearSystem, required: bool = True) -> Optional[list[Fraction]]:
    if "xi" not in doc:
        if required:
            raise BadRequest('missing "xi"')
        return None
    xi = _rationals(doc["xi"], "xi")
    if len(xi) != system.r:
        raise BadRequest(f"xi has length {len(xi)}, expected {system.r}")
    return xi


def _chamber(args, doc, system):
    point = _point(args.chamber_point) if args.chamber_point else _xi(doc, system)
    if len(point) != system.r:
        raise BadRequest(f"chamber point has length {len(point)}, expected {system.r}")
    return resolve_chamber(system, point)


# --- commands ---------------------------------------------------------------

def _poly_json(p) -> dict:
    return p.to_json()


def cmd_chamber(args, doc):
    s = _system(doc)
    point = _point(args.chamber_point) if args.chamber_point else _xi(doc, s)
    regular = is_regular(s, point)
    c = chamber_of(s, point) if regular else resolve_chamber(s, point)
    return {"chamber": c.to_json(), "regular": regular}


def _residue_volume(s, xi, args, out):
    out["volume"] = format_fraction(toolkit.volume(s, xi))
    if args.symbolic and out["feasible"]:
        out["polynomial"] = toolkit.volume_polynomial(s, resolve_chamber(s, xi)).to_json()


def cmd_volume(args, doc):
    s = _system(doc)
    xi = _xi(doc, s)
    out = {"feasible": in_cone(s, xi)}
    if args.check:
        return _check(s, xi, args, volume_only=True)
    if args.oracle:
        out["volume"] = format_fraction(oracle.oracle_volume(s, xi, args.budget)) if out["feasible"] else "0"
    else:
        _residue_volume(s, xi, args, out)
    return out


def cmd_count(args, doc):
    s = _system(doc)
    xi = _xi(doc, s)
    if args.check:
        return _check(s, xi, args, count_only=True)
    out = {"feasible": in_cone(s, xi)}
    if args.oracle:
        out["count"] = str(oracle.dp_count(s, xi, args.budget))
    else:
        out["count"] = str(toolkit.count(s, xi))
        if args.symbolic and out["feasible"]:
            out["polynomial"] = toolkit.count_polynomial(s, resolve_chamber(s, xi)).to_json()
    return out


def cmd_volume_poly(args, doc):
    s = _system(doc)
    return {"polynomial": toolkit.volume_polynomial(s, _chamber(args, doc, s)).to_json()}


def cmd_count_poly(args, doc):
    s = _system(doc)
    return {"polynomial": toolkit.count_polynomial(s, _chamber(args, doc, s)).to_json()}


def cmd_ehrhart(args, doc):
    s = _system(doc)
    xi = _xi(doc, s)
    if args.oracle or args.check:
        if not in_cone(s, xi):
            raise toolkit.Infeasible("xi is outside Cone(B)")
        low_to_high = oracle.oracle_ehrhart(s, xi, args.budget)
        oracle_coeffs = [format_fraction(c) for c in reversed(low_to_high)]
        if args.oracle:
            return {"ehrhart": oracle_coeffs}
        residue = toolkit.ehrhart(s, xi).to_json()
        return {"agree": residue == oracle_coeffs,
                "ehrhart": {"oracle": oracle_coeffs, "residue": residue}}
    return {"ehrhart": toolkit.ehrhart(s, xi).to_json()}


def cmd_toric_integral(args, doc):
    s = _system(doc)
    if "poly" not in doc:
        raise BadRequest('missing "poly" (term list in phi)')
    try:
        p = MPoly.from_json(var_names("phi", s.r), doc["poly"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadRequest(f"bad polynomial: {exc}") from None
    c = _chamber(args, doc, s)
    return {"integral": format_fraction(toolkit.toric_integral(s, c, p))}


def cmd_oracle_count(args, doc):
    s = _system(doc)
    return {"count": str(oracle.dp_count(s, _xi(doc, s), args.budget))}


def cmd_oracle_volume(args, doc):
    s = _system(doc)
    xi = _xi(doc, s)
    if not in_cone(s, xi):
        return {"volume": "0", "feasible": False}
    return {"volume": format_fraction(oracle.oracle_volume(s, xi, args.budget)), "feasible": True}


def _check(s, xi, args, count_only=False, volume_only=False):
    out = {"feasible": in_cone(s, xi)}
    agree = True
    if not volume_only:
        if not s.unimodular:
            raise NonUnimodular("count check needs a unimodular system")
        res, orc = toolkit.count(s, xi), oracle.dp_count(s, xi, args.budget)
        out["count"] = {"residue": str(res), "oracle": str(orc)}
        agree &= res == orc
    if not count_only:
        res = toolkit.volume(s, xi)
        orc = oracle.oracle_volume(s, xi, args.budget) if out["feasible"] else Fraction(0)
        out["volume"] = {"residue": format_fraction(res), "oracle": format_fraction(orc)}
        agree &= res == orc
    out["agree"] = agree
    return out


def cmd_check(args, doc):
    s = _system(doc)
    xi = _xi(doc, s)
    return _check(s, xi, args, volume_only=not s.unimodular)


def cmd_gen(args):
    if args.family == "kostant":
        s = kostant_system(args.rank)
        out = s.to_json()
        if args.xi:
            out["xi"] = [format_fraction(x) for x in _point(args.xi)]
        out["labels"] = {"family": "kostant", "type": "A", "rank": args.rank}
        return out
    if args.family == "transport":
        rows = [int(x) for x in args.rows.split(",")]
        cols = [int(x) for x in args.cols.split(",")]
        xi = margins_to_xi(rows, cols)
        out = transportation_system(len(rows), len(cols)).to_json()
        out["xi"] = [str(x) for x in xi]
        out["labels"] = {"family": "transportation", "rows": rows, "cols": cols}
        return out
    arcs = parse_arcs(args.arcs)
    out = network_system(arcs).to_json()
    if args.xi:
        out["xi"] = [format_fraction(x) for x in _point(args.xi)]
    out["labels"] = {"family": "network", "arcs": [f"{u}>{v}" for u, v in arcs]}
    return out


HANDLERS = {
    "chamber": cmd_chamber, "volume": cmd_volume, "count": cmd_count,
    "volume-poly": cmd_volume_poly, "count-poly": cmd_count_poly, "ehrhart": cmd_ehrhart,
    "toric-integral": cmd_toric_integral, "oracle-count": cmd_oracle_count,
    "oracle-volume": cmd_oracle_volume, "check": cmd_check,
}


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        else:
            lines.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")

    walk("", doc)
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        ok = selftest.run(selftest.QUICK if args.quick else None)
        return 0 if ok else 1
    fmt = getattr(args, "format", "json")
    try:
        if args.command == "gen":
            doc = cmd_gen(args)
        else:
            if args.budget is not None and args.budget <= 0:
                raise BadRequest("--budget must be positive")
            doc = HANDLERS[args.command](args, _load(args))
    except BudgetExceeded as exc:
        print(render({"error": exc.code, "detail": str(exc)}, fmt))
        return EXIT_BUDGET
    except NonUnimodular as exc:
        print(render({"error": exc.code, "detail": str(exc)}, fmt))
        return EXIT_NON_UNIMODULAR
    except JKError as exc:
        print(render({"error": exc.code, "detail": str(exc)}, fmt))
        return EXIT_VALIDATION
    print(render(doc, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
