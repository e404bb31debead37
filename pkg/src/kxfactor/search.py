"""Driver for the restricted-coefficient factor search.

Pipeline per input: assemble the column vector Phi from the coefficient
spaces, pick the truncation order from the degree bound, expand everything
at the place, build the Wronskian matrix and eliminate.  Full-rank summands
certify that no factor of the required shape vanishes there; rank-m
summands produce a normalized kernel vector whose residues in each local
summand are constants, from which candidate factors are reconstructed and
accepted only after exact trial division.
"""

from __future__ import annotations

import math

from .artinian import constant_of, decompose_to_locals, hensel_split, ArtinRing
from .bounds import compute_delta, q_power, validate_place
from .elimination import NormalizationSplit, NoSolution, Solution, eliminate, solve_rank_m
from .errors import SubspaceSpecError
from .fffactor import factor_over_ff, roots_in_field
from .fields import element_degree, is_in_subfield, project_to_subfield, FieldCtx, find_irreducible
from .hasse import PhiEntry, build_deriv_table, build_wronskian, hasse_of_element, wronskian_rank_over_K
from .poly import Poly, RatFunc, TPoly, make_separable_check, tpoly_str
from .series import SeriesCtx, expand_at_place


class FoundFactor:
    __slots__ = ("poly", "field", "field_label", "summand_path", "constants")

    def __init__(self, poly, field, field_label, summand_path, constants):
        self.poly = poly
        self.field = field
        self.field_label = field_label
        self.summand_path = summand_path
        self.constants = constants

    def key(self):
        return (self.field_label, tpoly_str(self.poly))

    def as_dict(self):
        return {
            "poly": tpoly_str(self.poly),
            "field_of_definition": self.field_label,
            "summand_path": self.summand_path,
        }

    def __repr__(self):
        return f"FoundFactor({tpoly_str(self.poly)} over {self.field_label})"


class FactorReport:
    """Outcome of one restricted search: either factors with provenance, or
    a no-factor certificate per summand, or (never observed in practice) a
    deferred summand list."""

    __slots__ = ("outcome", "factors", "certificates", "deferred", "delta", "q", "m", "trace")

    def __init__(self, outcome, factors, certificates, deferred, delta, q, m, trace):
        self.outcome = outcome
        self.factors = factors
        self.certificates = certificates
        self.deferred = deferred
        self.delta = delta
        self.q = q
        self.m = m
        self.trace = trace


def build_phi(spec, sctx):
    """Phi entries in the fixed order: i ascending, basis order within each
    V_i, and t^r last."""
    from .errors import NotIntegralAtPlace, PlaceInvalid

    entries = []
    for i, basis in enumerate(spec.spaces):
        for j, h in enumerate(basis):
            try:
                hs = expand_at_place(h, sctx)
            except NotIntegralAtPlace as exc:
                raise PlaceInvalid(
                    f"basis function of V_{i} has a pole at the place; pick another place") from exc
            entries.append(PhiEntry(h, i, hs, f"h[{i}][{j + 1}]"))
    one = RatFunc.from_int(spec.spaces[0][0].ctx, 1)
    entries.append(PhiEntry(one, spec.r, sctx.one(), f"t^{spec.r}"))
    return entries


def restricted_factor(g, spec, place, over_k_only=True, seed=0, collect_trace=False):
    """Run the search for a monic degree-r factor with coefficients in the
    prescribed spaces."""
    make_separable_check(g)
    if spec.r >= g.degree:
        raise SubspaceSpecError(f"factor degree {spec.r} must be smaller than deg G = {g.degree}")
    validate_place(g, place)

    delta = compute_delta(g, spec.r)
    m = spec.m
    p = g.ctx.p
    q = q_power(p, max(m, delta))
    sctx = SeriesCtx(place.ell, q, place.alpha)
    root = ArtinRing.from_tpoly(g, sctx)
    phi_full = build_phi(spec, sctx)

    trace = [] if collect_trace else None
    factors = {}
    certificates = []
    deferred = []

    queue = [(root, phi_full)]
    while queue:
        ring, phi = queue.pop(0)
        m_cur = len(phi) - 1
        table = build_deriv_table(ring)
        matrix = build_wronskian(table, phi)
        out = eliminate(matrix, trace)
        for leaf in out.leaves:
            if leaf.rank == m_cur + 1:
                certificates.append({
                    "path": leaf.ring.path_str(),
                    "rank": leaf.rank,
                    "m": m_cur,
                    "pivots": leaf.pivot_cols(),
                })
            elif leaf.rank == m_cur:
                res = solve_rank_m(leaf, m_cur)
                if isinstance(res, NormalizationSplit):
                    side_h, side_e = hensel_split(leaf.ring, res.h0)
                    queue.append((side_h, phi))
                    queue.append((side_e, phi))
                elif isinstance(res, NoSolution):
                    certificates.append({
                        "path": leaf.ring.path_str(),
                        "rank": leaf.rank,
                        "m": m_cur,
                        "no_normalized_solution": res.reason,
                    })
                else:
                    for ff in _identify_constants(g, leaf, res.u, phi, over_k_only, seed):
                        factors.setdefault(ff.key(), ff)
            else:
                if len(phi) > 2:
                    queue.append((leaf.ring, phi[:-2] + phi[-1:]))
                else:
                    deferred.append({"path": leaf.ring.path_str(), "rank": leaf.rank})

    found = sorted(factors.values(), key=lambda f: f.key())
    if found:
        outcome = "factors"
    elif deferred:
        outcome = "deferred"
    else:
        outcome = "no_factor"
    return FactorReport(outcome, found, certificates, deferred, delta, q, m, trace)


def _identify_constants(g, leaf, u, phi, over_k_only, seed):
    """Turn a rank-m solution into verified factors, one candidate per local
    summand of the leaf ring."""
    ring = leaf.ring
    table = leaf.table
    q = ring.sctx.q
    # Lemma precondition, checked rather than trusted: the solution entries
    # are annihilated by all positive-order derivatives.
    for coord in u:
        for i in range(1, q):
            if not hasse_of_element(table, i, coord).is_zero():
                return []
    irreducibles = [f for f, _ in factor_over_ff(ring.g0, seed)]
    out = []
    for loc in decompose_to_locals(ring, irreducibles):
        consts = [constant_of(loc.project(coord), loc) for coord in u]
        ff = _reconstruct(g, phi, consts, loc, over_k_only)
        if ff is not None:
            out.append(ff)
    return out


def _reconstruct(g, phi, consts, loc, over_k_only):
    base = g.ctx
    r = phi[-1].power
    res_ctx = loc.residue.ctx
    if over_k_only:
        kvals = []
        for c in consts:
            if not is_in_subfield(c, base):
                return None
            kvals.append(project_to_subfield(c, base))
        coeffs = [RatFunc.from_int(base, 0) for _ in range(r + 1)]
        for val, entry in zip(kvals[:-1], phi[:-1]):
            if not val.is_zero():
                coeffs[entry.power] = coeffs[entry.power] + entry.h * val
        coeffs[r] = RatFunc.from_int(base, 1)
        cand = TPoly(base, coeffs)
        _, rem = g.divrem(cand)
        if not rem.is_zero():
            return None
        if not _span_membership(cand, phi):
            return None
        return FoundFactor(cand, base, base.label(), loc.ring.path_str(),
                           [(e.label, repr(v)) for e, v in zip(phi, kvals)])
    # absolute route: work over the residue field, then shrink to the
    # minimal field of definition
    d_def = base.d
    for c in consts:
        d_def = _lcm(d_def, element_degree(c))
    ge = g.embed_into(res_ctx)
    coeffs = [RatFunc.from_int(res_ctx, 0) for _ in range(r + 1)]
    for val, entry in zip(consts[:-1], phi[:-1]):
        if not val.is_zero():
            coeffs[entry.power] = coeffs[entry.power] + entry.h.embed_into(res_ctx) * val
    coeffs[r] = RatFunc.from_int(res_ctx, 1)
    cand = TPoly(res_ctx, coeffs)
    _, rem = ge.divrem(cand)
    if not rem.is_zero():
        return None
    if d_def == base.d:
        # the constants already live in k; use the tracked embedding chain
        down = _project_tpoly_chain(cand, base)
        if down is None:
            return None
        return FoundFactor(down, base, base.label(), loc.ring.path_str(),
                           [(e.label, repr(v)) for e, v in zip(phi, consts)])
    target = _canonical_field(base.p, d_def)
    down = _project_tpoly(cand, target, res_ctx)
    if down is None:
        return None
    return FoundFactor(down, target, target.label(), loc.ring.path_str(),
                       [(e.label, repr(v)) for e, v in zip(phi, consts)])


def _lcm(a, b):
    return a * b // math.gcd(a, b)


_FIELD_CACHE = {}


def _canonical_field(p, d):
    key = (p, d)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(p, find_irreducible(p, d)) if d > 1 else FieldCtx(p)
        _FIELD_CACHE[key] = ctx
    return ctx


def _project_tpoly_chain(cand, base):
    """Project coefficients down the tracked embedding chain into base."""
    def proj(c):
        if not is_in_subfield(c, base):
            return None
        return project_to_subfield(c, base)

    out = []
    for rf in cand.coeffs:
        num = _project_poly(rf.num, proj, base)
        den = _project_poly(rf.den, proj, base)
        if num is None or den is None:
            return None
        out.append(RatFunc(num, den, reduce=False))
    return TPoly(base, out)


def _project_tpoly(cand, target, res_ctx):
    """Rewrite a T-polynomial over the residue field with coefficients in
    target, via a deterministic root of target's modulus."""
    if target.d == 1:
        # prime-field elements are exactly those with vanishing higher
        # coefficients in any representation over an extension
        def proj(c):
            if any(c.coeffs[1:]):
                return None
            return target.from_int(c.coeffs[0])
    else:
        lifted = Poly(res_ctx, [res_ctx.from_int(v) for v in target.modulus], "Z")
        roots = roots_in_field(lifted)
        if not roots:
            return None
        root = roots[0]
        basis = []
        g = res_ctx.one()
        for _ in range(target.d):
            basis.append(g)
            g = g * root

        def proj(c):
            from .fields import _solve_mod_p
            sol = _solve_mod_p([list(b.coeffs) for b in basis], list(c.coeffs), target.p)
            if sol is None:
                return None
            return target.from_coeffs(sol)

    out = []
    for rf in cand.coeffs:
        num = _project_poly(rf.num, proj, target)
        den = _project_poly(rf.den, proj, target)
        if num is None or den is None:
            return None
        out.append(RatFunc(num, den, reduce=False))
    return TPoly(target, out)


def _project_poly(f, proj, target):
    out = []
    for c in f.coeffs:
        v = proj(c)
        if v is None:
            return None
        out.append(v)
    return Poly(target, out, f.var)


def _span_membership(cand, phi):
    """Each coefficient must stay inside the span of its prescribed basis;
    checked by an independent rank computation over K."""
    by_power = {}
    for e in phi[:-1]:
        by_power.setdefault(e.power, []).append(e.h)
    r = phi[-1].power
    for i in range(r):
        b = cand.coeff(i)
        basis = by_power.get(i, [])
        if b.is_zero():
            continue
        if not basis:
            return False
        rank, _ = wronskian_rank_over_K(basis + [b])
        if rank != len(basis):
            return False
    return True


def collect_all_restricted_factors(g, spec, place, seed=0):
    """Repeat the search on successive exact quotients until no factor of
    the required shape remains; returns every distinct factor discovered."""
    found = {}
    cur = g
    while cur.degree > spec.r:
        rep = restricted_factor(cur, spec, place, over_k_only=True, seed=seed)
        if rep.outcome != "factors":
            break
        progressed = False
        for ff in rep.factors:
            if ff.key() not in found:
                found[ff.key()] = ff
            quot, rem = cur.divrem(ff.poly)
            if rem.is_zero():
                cur = quot
                progressed = True
        if not progressed:
            break
    return [found[k] for k in sorted(found)]
