"""Full factorization of univariate polynomials over finite fields.

Pipeline: squarefree decomposition (with p-th power descent), distinct
degree splitting via T^(Q^i) mod f, and Cantor-Zassenhaus equal-degree
splitting driven by a seeded PRNG so runs are reproducible.
"""

from __future__ import annotations

import random

from .errors import ZeroPolynomial
from .fields import frobenius_power
from .poly import Poly


def _pow_mod(base, e, modulus):
    result = Poly.from_ints(base.ctx, [1], base.var)
    b = base % modulus
    while e:
        if e & 1:
            result = (result * b) % modulus
        b = (b * b) % modulus
        e >>= 1
    return result


def _pth_root_poly(f):
    """For f with f' = 0: the g with g(T^p) = f (coefficient p-th roots)."""
    ctx = f.ctx
    p = ctx.p
    out = []
    for i in range(0, f.degree + 1, p):
        c = f.coeff(i)
        out.append(frobenius_power(c, ctx.d - 1) if ctx.d > 1 else c)
    return Poly(ctx, out, f.var)


def squarefree_decomposition(f):
    """List of (monic squarefree g, multiplicity e) with product g^e = f/lc."""
    f = f.monic()
    acc = {}

    def _add(g, e):
        key = g
        acc[key] = acc.get(key, 0) + e

    def _rec(g, mult):
        if g.degree < 1:
            return
        gp = g.derivative()
        if gp.is_zero():
            _rec(_pth_root_poly(g), mult * g.ctx.p)
            return
        c = g.gcd(gp)
        w = g // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree > 0:
                _add(z, mult * i)
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            _rec(_pth_root_poly(c), mult * g.ctx.p)

    _rec(f, 1)
    return sorted(acc.items(), key=lambda kv: (kv[0].degree, _poly_key(kv[0])))


def _poly_key(g):
    return tuple(c.coeffs for c in g.coeffs)


def _distinct_degree(f):
    """(g, d) pairs: g = product of the irreducible factors of squarefree f
    having degree d."""
    ctx = f.ctx
    Q = ctx.order
    out = []
    h = Poly.x(ctx, f.var) % f
    x = Poly.x(ctx, f.var)
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = _pow_mod(h, Q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree_split(f, d, rng):
    """One random Cantor-Zassenhaus attempt; returns a proper factor or None."""
    ctx = f.ctx
    Q = ctx.order
    n = f.degree
    coeffs = [ctx.random_element(rng) for _ in range(n)]
    a = Poly(ctx, coeffs, f.var)
    if a.degree < 1:
        return None
    g = f.gcd(a)
    if 0 < g.degree < n:
        return g
    if Q % 2 == 1:
        b = _pow_mod(a, (Q ** d - 1) // 2, f)
        g = f.gcd(b - Poly.from_ints(ctx, [1], f.var))
    else:
        # char 2: additive trace map over F_{2^(e*d)}
        e = ctx.d * d
        b = a % f
        t = b
        for _ in range(e - 1):
            b = _pow_mod(b, 2, f)
            t = t + b
        g = f.gcd(t)
    if 0 < g.degree < n:
        return g
    return None


def _equal_degree(f, d, rng):
    if f.degree == d:
        return [f]
    while True:
        g = _equal_degree_split(f, d, rng)
        if g is not None:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor_over_ff(f, seed=0):
    """Irreducible factorization [(poly, multiplicity)] of f/lc(f), sorted
    by (degree, coefficient order) so output is deterministic."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    rng = random.Random(seed)
    out = []
    for sqf, mult in squarefree_decomposition(f):
        for prod, d in _distinct_degree(sqf):
            for irr in _equal_degree(prod, d, rng):
                out.append((irr.monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, _poly_key(fm[0])))
    return out


def is_irreducible_ff(f):
    """Rabin's test: T^(Q^n) = T mod f and gcd(T^(Q^(n/rho)) - T, f) = 1
    for each prime rho dividing n."""
    ctx = f.ctx
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    Q = ctx.order
    x = Poly.x(ctx, f.var)
    if _pow_mod(x, Q ** n, f) != x % f:
        return False
    for rho in _prime_divisors(n):
        h = _pow_mod(x, Q ** (n // rho), f) - x
        if f.gcd(h).degree != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def roots_in_field(f, seed=0):
    """All roots of f in its coefficient field, sorted by coefficient order."""
    roots = []
    for g, _ in factor_over_ff(f, seed):
        if g.degree == 1:
            roots.append(-g.coeff(0))
    roots.sort(key=lambda r: tuple(reversed(r.coeffs)))
    return roots


def linear_factors_exhaustive(f):
    """Brute root scan; test oracle for small fields."""
    out = []
    for a in f.ctx.elements():
        if f.evaluate(a).is_zero():
            out.append(a)
    return out
