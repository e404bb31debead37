"""Command line front end: a thin client over the same mode layer the
service exposes.

Everything influencing the output is a flag, so runs are reproducible.
Input comes from --poly or from --input FILE (line 1 "field: GF(p^d)",
line 2 "G = <expr>").  The hidden "oracle" subcommand exposes the
brute-force reference for generating expected values in tests.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, KxError
from .fields import parse_field
from .modes import run_factor, run_irreducible, run_restricted, run_roots
from .oracle import oracle_absolute_irreducible, oracle_factor
from .parse import parse_tpoly
from .poly import tpoly_str


def _build_parser():
    ap = argparse.ArgumentParser(prog="kxfactor",
                                 description="Factor separable polynomials over rational function fields GF(p^d)(x)")
    ap.add_argument("--field", help="coefficient field, e.g. GF(2) or GF(3^2)")
    ap.add_argument("--poly", help="polynomial in T over k[x], e.g. \"T^2+x*T+1\"")
    ap.add_argument("--input", help="input file: line 1 'field: GF(p^d)', line 2 'G = <expr>'")
    ap.add_argument("--mode", choices=["factor", "irreducible", "roots", "restricted"],
                    default="factor")
    ap.add_argument("--place", help="override the place search: alpha=<elem>@GF(p^e)")
    ap.add_argument("--space", help="roots mode: comma-separated basis, e.g. 1,x,x^2")
    ap.add_argument("--r", type=int, help="restricted mode: factor degree")
    ap.add_argument("--spaces", help="restricted mode: bases V_0;..;V_{r-1}, e.g. \"1,x;1\"")
    ap.add_argument("--trace", metavar="FILE", help="write the elimination trace as JSON lines")
    ap.add_argument("--json", action="store_true", help="emit the result as JSON")
    ap.add_argument("--seed", type=int, default=0, help="PRNG seed for constant-field factorization")
    return ap


def _build_oracle_parser():
    ap = argparse.ArgumentParser(prog="kxfactor oracle",
                                 description="Brute-force reference search (test-only)")
    ap.add_argument("--field", required=True)
    ap.add_argument("--poly", required=True)
    ap.add_argument("--r", type=int, required=True)
    ap.add_argument("--bounds", required=True, help="comma-separated degree bounds, one per coefficient")
    ap.add_argument("--absolute", action="store_true", help="run the absolute irreducibility oracle instead")
    ap.add_argument("--max-ext", type=int, default=None)
    return ap


def _read_input_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if len(lines) < 2 or not lines[0].lower().startswith("field:"):
        raise InputError("input file needs 'field: GF(p^d)' then 'G = <expr>'")
    field = lines[0].split(":", 1)[1].strip()
    expr = lines[1]
    if "=" in expr:
        expr = expr.split("=", 1)[1].strip()
    return field, expr


def _render_human(out):
    lines = [f"mode: {out['mode']}   field: {out['field']}"]
    lines.append(f"input: {out['input']}")
    if out.get("place"):
        p = out["place"]
        lines.append(f"place: alpha={p['alpha']} in {p['field']} (degree {p['degree']})")
    if out.get("delta") is not None:
        lines.append(f"delta: {out['delta']}   q: {out['q']}")
    if out["mode"] == "irreducible":
        lines.append(f"absolutely irreducible: {out['absolutely_irreducible']}")
        if out.get("witness"):
            w = out["witness"]
            lines.append(f"witness factor: {w['poly']} over {w['field_of_definition']}")
    elif out["mode"] == "roots":
        if out["roots"]:
            lines.append("roots: " + ", ".join(out["roots"]))
        else:
            lines.append("roots: none in the prescribed space")
    elif out["mode"] == "restricted":
        lines.append(f"outcome: {out['outcome']}")
    if out["mode"] != "irreducible" and out.get("factors"):
        lines.append("factors:")
        for f in out["factors"]:
            ann = f" (over {f['field_of_definition']})" if f["field_of_definition"] != out["field"] else ""
            lines.append(f"  {f['poly']}{ann}   [{f['summand_path']}]")
    if out["mode"] == "factor":
        lines.append(f"product check: {'ok' if out.get('product_check') else 'FAILED'}")
    return "\n".join(lines)


def _run_oracle(argv):
    args = _build_oracle_parser().parse_args(argv)
    ctx = parse_field(args.field)
    g = parse_tpoly(args.poly, ctx)
    if args.absolute:
        result = {"absolutely_irreducible": oracle_absolute_irreducible(g, args.max_ext)}
    else:
        bounds = [int(b) for b in args.bounds.split(",")]
        hits = oracle_factor(g, args.r, bounds)
        result = {"factors": [tpoly_str(h) for h in hits]}
    print(json.dumps(result, indent=2))
    return 0


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        if argv and argv[0] == "oracle":
            return _run_oracle(argv[1:])
        args = _build_parser().parse_args(argv)
        if args.input:
            field, poly = _read_input_file(args.input)
        else:
            if not args.field or not args.poly:
                raise InputError("need --field and --poly (or --input FILE)")
            field, poly = args.field, args.poly
        want_trace = args.trace is not None
        if args.mode == "factor":
            out = run_factor(field, poly, args.place, args.seed, want_trace)
        elif args.mode == "irreducible":
            out = run_irreducible(field, poly, args.place, args.seed, want_trace)
        elif args.mode == "roots":
            if not args.space:
                raise InputError("roots mode needs --space")
            out = run_roots(field, poly, args.space, args.place, args.seed, want_trace)
        else:
            if args.r is None or not args.spaces:
                raise InputError("restricted mode needs --r and --spaces")
            out = run_restricted(field, poly, args.r, args.spaces, args.place, args.seed, want_trace)
        if args.trace:
            with open(args.trace, "w", encoding="utf-8") as fh:
                for rec in out.get("trace") or []:
                    fh.write(json.dumps(rec) + "\n")
            out.pop("trace", None)
        if args.json:
            print(json.dumps(out, indent=2))
        else:
            print(_render_human(out))
        return 0
    except InputError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    except KxError as exc:
        print(f"internal error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
