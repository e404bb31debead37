"""The four top-level operations behind the service endpoints and the CLI.

Each returns a plain dict matching the output schema; both front ends are
thin presentation layers over these functions.
"""

from __future__ import annotations

from .bounds import SubspaceSpec, compute_delta, default_subspaces, find_place, place_from_alpha, q_power
from .errors import InputError, SubspaceSpecError
from .fields import parse_field
from .fffactor import factor_over_ff
from .parse import parse_basis, parse_elem, parse_tpoly
from .poly import RatFunc, TPoly, make_separable_check, ratfunc_str, tpoly_str
from .search import collect_all_restricted_factors, restricted_factor


def _place_dict(place):
    if place is None:
        return None
    return {"alpha": repr(place.alpha), "field": place.ell.label(),
            "degree": place.degree, "min_poly": repr(place.min_poly)}


def resolve_place(g, place_spec, keep_integral=()):
    """place_spec: None (search) or "alpha=<elem>@GF(p^e)"."""
    if place_spec is None:
        return find_place(g, keep_integral=keep_integral)
    text = place_spec.strip()
    if not text.startswith("alpha="):
        raise InputError(f"bad place spec {place_spec!r}; expected alpha=<elem>@GF(p^e)")
    body = text[len("alpha="):]
    if "@" in body:
        elem_s, field_s = body.split("@", 1)
        ell = parse_field(field_s)
        if ell.p != g.ctx.p:
            raise InputError("place field has the wrong characteristic")
        if ell.d == g.ctx.d:
            ell = g.ctx
        elif ell.d % g.ctx.d == 0:
            from .fields import extension_of

            ell = extension_of(g.ctx, ell.d // g.ctx.d)
        else:
            raise InputError("place field does not contain the coefficient field")
    else:
        elem_s = body
        ell = g.ctx
    alpha = parse_elem(elem_s, ell)
    return place_from_alpha(g.ctx, ell, alpha)


def _common(g, ctx, mode, place):
    return {
        "input": tpoly_str(g),
        "field": ctx.label(),
        "mode": mode,
        "place": _place_dict(place),
        "delta": None,
        "q": None,
        "factors": [],
        "certificates": [],
    }


def run_factor(field_spec, poly_src, place_spec=None, seed=0, collect_trace=False):
    """Full factorization over K, iterating degrees and dividing out."""
    ctx = parse_field(field_spec)
    g = parse_tpoly(poly_src, ctx)
    make_separable_check(g)
    trace = [] if collect_trace else None

    if g.all_coeffs_constant():
        # constant coefficients: k[T]-irreducible factors stay irreducible
        # over k(x), so the constant-field routine settles it
        fp = g.to_field_poly()
        irr = factor_over_ff(fp, seed)
        factors = []
        for f, mult in irr:
            assert mult == 1, "separable input cannot have repeated factors"
            factors.append(TPoly(ctx, [RatFunc.const(c) for c in f.coeffs]))
        out = _common(g, ctx, "factor", None)
        out["delta"] = 0
        out["factors"] = [{"poly": tpoly_str(f), "field_of_definition": ctx.label(),
                           "summand_path": "constant-coefficients"} for f in factors]
        out["product_check"] = _product_check(g, factors)
        if trace is not None:
            out["trace"] = trace
        return out

    place = resolve_place(g, place_spec)
    factors = []
    details = []
    certificates = []
    first_bounds = None
    cur = g
    r = 1
    while cur.degree >= 2 and r <= cur.degree // 2:
        spec = default_subspaces(cur, r)
        rep = restricted_factor(cur, spec, place, over_k_only=True, seed=seed,
                                collect_trace=collect_trace)
        if first_bounds is None:
            first_bounds = (rep.delta, rep.q)
        if trace is not None and rep.trace:
            trace.extend(rep.trace)
        if rep.outcome == "factors":
            progressed = False
            for ff in rep.factors:
                quot, rem = cur.divrem(ff.poly)
                if rem.is_zero():
                    factors.append(ff.poly)
                    details.append(ff)
                    cur = quot
                    progressed = True
            if progressed:
                continue
        certificates.extend(rep.certificates)
        r += 1
    if cur.degree >= 1:
        factors.append(cur)
        details.append(None)

    factors_sorted = sorted(zip(factors, details), key=lambda fd: (fd[0].degree, tpoly_str(fd[0])))
    out = _common(g, ctx, "factor", place)
    if first_bounds is not None:
        out["delta"], out["q"] = first_bounds
    out["factors"] = [{
        "poly": tpoly_str(f),
        "field_of_definition": ctx.label(),
        "summand_path": d.summand_path if d is not None else "quotient",
    } for f, d in factors_sorted]
    out["certificates"] = certificates
    out["product_check"] = _product_check(g, [f for f, _ in factors_sorted])
    if trace is not None:
        out["trace"] = trace
    return out


def _product_check(g, factors):
    prod = TPoly.const(RatFunc.from_int(g.ctx, 1))
    for f in factors:
        prod = prod * f
    return prod == g


def run_irreducible(field_spec, poly_src, place_spec=None, seed=0, collect_trace=False):
    """Absolute irreducibility: true iff every summand at every candidate
    degree reaches full rank."""
    ctx = parse_field(field_spec)
    g = parse_tpoly(poly_src, ctx)
    make_separable_check(g)
    out = _common(g, ctx, "irreducible", None)
    trace = [] if collect_trace else None
    if g.degree <= 1:
        out["absolutely_irreducible"] = True
        out["witness"] = None
        return out
    place = resolve_place(g, place_spec)
    out["place"] = _place_dict(place)
    witness = None
    certificates = []
    first_bounds = None
    for r in range(1, g.degree // 2 + 1):
        spec = default_subspaces(g, r)
        rep = restricted_factor(g, spec, place, over_k_only=False, seed=seed,
                                collect_trace=collect_trace)
        if first_bounds is None:
            first_bounds = (rep.delta, rep.q)
        if trace is not None and rep.trace:
            trace.extend(rep.trace)
        certificates.extend(rep.certificates)
        if rep.outcome == "factors":
            witness = rep.factors[0]
            out["factors"] = [ff.as_dict() for ff in rep.factors]
            break
    out["delta"], out["q"] = first_bounds
    out["absolutely_irreducible"] = witness is None
    out["witness"] = witness.as_dict() if witness else None
    out["certificates"] = certificates
    if trace is not None:
        out["trace"] = trace
    return out


def run_roots(field_spec, poly_src, basis_src, place_spec=None, seed=0, collect_trace=False):
    """All roots of G inside the span of the given basis."""
    ctx = parse_field(field_spec)
    g = parse_tpoly(poly_src, ctx)
    make_separable_check(g)
    basis = parse_basis(basis_src, ctx) if isinstance(basis_src, str) else basis_src
    spec = SubspaceSpec(1, [basis])
    place = resolve_place(g, place_spec, keep_integral=basis) if g.degree > 1 else None
    roots = []
    if g.degree == 1:
        # T + a0: the single root, kept only if it lies in the span
        from .hasse import wronskian_rank_over_K

        rho = -g.coeff(0)
        rank, _ = wronskian_rank_over_K(basis + [rho]) if not rho.is_zero() else (len(basis), [])
        if rank == len(basis):
            roots.append((rho, None))
        out = _common(g, ctx, "roots", place)
        out["roots"] = [ratfunc_str(r) for r, _ in roots]
        out["factors"] = []
        return out
    facs = collect_all_restricted_factors(g, spec, place, seed=seed)
    for ff in facs:
        rho = -ff.poly.coeff(0)
        val = g.evaluate(rho)
        assert val.is_zero(), "reported root fails evaluation"
        roots.append((rho, ff))
    roots.sort(key=lambda rf: ratfunc_str(rf[0]))
    out = _common(g, ctx, "roots", place)
    if g.degree > 1:
        out["delta"] = compute_delta(g, 1)
        out["q"] = q_power(ctx.p, max(spec.m, out["delta"]))
    out["roots"] = [ratfunc_str(r) for r, _ in roots]
    out["factors"] = [ff.as_dict() for _, ff in roots]
    return out


def run_restricted(field_spec, poly_src, r, spaces_src, place_spec=None, seed=0, collect_trace=False):
    """One restricted search pass, rendered as a FactorReport."""
    ctx = parse_field(field_spec)
    g = parse_tpoly(poly_src, ctx)
    make_separable_check(g)
    if r >= g.degree or r < 1:
        raise SubspaceSpecError(f"r={r} must satisfy 1 <= r < deg G = {g.degree}")
    if isinstance(spaces_src, str):
        parts = [p for p in spaces_src.split(";") if p.strip()]
        spaces = [parse_basis(p, ctx) for p in parts]
    else:
        spaces = spaces_src
    spec = SubspaceSpec(r, spaces)
    place = resolve_place(g, place_spec, keep_integral=[h for basis in spaces for h in basis])
    rep = restricted_factor(g, spec, place, over_k_only=True, seed=seed,
                            collect_trace=collect_trace)
    out = _common(g, ctx, "restricted", place)
    out["delta"], out["q"], out["m"] = rep.delta, rep.q, rep.m
    out["outcome"] = rep.outcome
    out["factors"] = [ff.as_dict() for ff in rep.factors]
    out["certificates"] = rep.certificates
    out["deferred"] = rep.deferred
    out["spaces"] = spec.basis_strings()
    if rep.trace is not None:
        out["trace"] = rep.trace
    return out
