"""Brute-force reference implementations, used only by tests and expected
value generation.

oracle_factor enumerates every monic degree-r candidate with polynomial
coefficients inside given degree bounds and keeps the exact divisors.  The
complete-factorization and absolute-irreducibility wrappers drive it with
sound bounds small enough to stay inside the search-space guard.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import SearchSpaceTooLarge
from .fields import extension_of
from .poly import Poly, RatFunc, TPoly

SEARCH_SPACE_LIMIT = 10 ** 7


def _coeff_candidates(ctx, bound):
    """All polynomials of degree <= bound over ctx, coefficient-lex order."""
    elems = list(ctx.elements())
    for tup in itertools.product(elems, repeat=bound + 1):
        yield RatFunc(Poly(ctx, list(tup), "x"))


def oracle_factor(g, r, coeff_degree_bounds, ctx=None):
    """Monic degree-r divisors of g with polynomial coefficients of degree
    <= coeff_degree_bounds[j] for coefficient j."""
    ctx = ctx or g.ctx
    if len(coeff_degree_bounds) != r:
        raise ValueError("need one degree bound per non-leading coefficient")
    size = 1
    for b in coeff_degree_bounds:
        size *= ctx.order ** (b + 1)
        if size > SEARCH_SPACE_LIMIT:
            raise SearchSpaceTooLarge(f"candidate space exceeds {SEARCH_SPACE_LIMIT}")
    ge = g if ctx.same_field(g.ctx) else g.embed_into(ctx)
    one = RatFunc.from_int(ctx, 1)
    # cheap pre-filter: a true factor specializes to a factor at any point,
    # so divisibility of G(xi, T) by H(xi, T) in ctx[T] is necessary
    filter_points = []
    if all(a.den.degree == 0 for a in ge.coeffs):
        for xi in ctx.elements():
            filter_points.append((xi, Poly(ctx, [a.evaluate(xi) for a in ge.coeffs], "T")))
            if len(filter_points) == 2:
                break
    found = []
    pools = [list(_coeff_candidates(ctx, b)) for b in coeff_degree_bounds]
    pool_evals = [
        [tuple(rf.evaluate(xi) for xi, _ in filter_points) for rf in pool]
        for pool in pools
    ]
    one_elem = ctx.one()
    for idxs in itertools.product(*[range(len(p)) for p in pools]):
        ok = True
        for tpt, (_, gxi) in enumerate(filter_points):
            hxi = Poly(ctx, [pool_evals[j][i][tpt] for j, i in enumerate(idxs)] + [one_elem], "T")
            if not (gxi % hxi).is_zero():
                ok = False
                break
        if not ok:
            continue
        cand = TPoly(ctx, [pools[j][i] for j, i in enumerate(idxs)] + [one])
        _, rem = ge.divrem(cand)
        if rem.is_zero():
            found.append(cand)
    return found


def _lemma_bounds(g, r):
    """Infinite-place coefficient degree bounds for a degree-r monic factor
    of a polynomial-coefficient g, improved at j=0 by deg(b_0) <= deg(a_0)
    (the constant terms multiply across the complementary factor)."""
    s = g.degree
    worst = Fraction(0)
    for i in range(s):
        a = g.coeff(i)
        if a.is_zero():
            continue
        worst = max(worst, Fraction(a.num.degree - a.den.degree, s - i))
    bounds = [math.ceil((r - j) * worst) for j in range(r)]
    a0 = g.coeff(0)
    if not a0.is_zero() and a0.den.degree == 0:
        bounds[0] = min(bounds[0], a0.num.degree)
    return bounds


def oracle_complete_factorization(g):
    """Complete factorization over k(x) for polynomial-coefficient monic
    separable g of T-degree <= 4, as a sorted list of irreducible TPoly."""
    factors = []
    cur = g
    r = 1
    while cur.degree >= 2 and r <= cur.degree // 2:
        hits = oracle_factor(cur, r, _lemma_bounds(cur, r))
        if not hits:
            r += 1
            continue
        progressed = False
        for cand in hits:
            quot, rem = cur.divrem(cand)
            if rem.is_zero():
                factors.append(cand)
                cur = quot
                progressed = True
        if not progressed:
            r += 1
    if cur.degree >= 1:
        factors.append(cur)
    from .poly import tpoly_str

    factors.sort(key=lambda f: (f.degree, tpoly_str(f)))
    return factors


def oracle_absolute_irreducible(g, max_ext=None):
    """True iff no proper factor exists over any constant field extension.

    Pairs (extension degree e, factor degree r) are pruned to e = 1 with
    any r <= s/2, plus e | s with r = s/e: a polynomial irreducible over k
    that splits absolutely does so into e conjugate factors of degree s/e
    over the degree-e constant extension, so these pairs detect every case,
    and a k-reducible polynomial is caught at e = 1.
    """
    s = g.degree
    if s <= 1:
        return True
    if max_ext is None:
        max_ext = s
    base = g.ctx
    for r in range(1, s // 2 + 1):
        if oracle_factor(g, r, _lemma_bounds(g, r)):
            return False
    for e in range(2, max_ext + 1):
        if s % e != 0:
            continue
        r = s // e
        if r < 1:
            continue
        ext = extension_of(base, e)
        if oracle_factor(g, r, _lemma_bounds(g, r), ctx=ext):
            return False
    return True
