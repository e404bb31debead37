"""The truncated series ring S_q = l[X]/(X^q) at a place x = alpha.

The uniformizer is always X = x - alpha, so expanding a rational function
means Taylor-shifting numerator and denominator to the place and dividing.
q is a power of the characteristic, which is what makes the Hasse
derivative operators act on the quotient.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NonUnitSeries, NotIntegralAtPlace, OrderOutOfRange
from .fields import embed


@lru_cache(maxsize=None)
def binom_mod_p(n, i, p):
    """C(n, i) mod p by Lucas' theorem on base-p digits."""
    if i < 0 or i > n:
        return 0
    r = 1
    while i:
        nd, id_ = n % p, i % p
        if id_ > nd:
            return 0
        num = 1
        den = 1
        for t in range(id_):
            num = num * (nd - t) % p
            den = den * (t + 1) % p
        r = r * num * pow(den, -1, p) % p
        if r == 0:
            return 0
        n //= p
        i //= p
    return r


class SeriesCtx:
    __slots__ = ("field", "q", "alpha")

    def __init__(self, field, q, alpha):
        p = field.p
        qq = q
        while qq % p == 0:
            qq //= p
        if qq != 1 or q < 1:
            raise ValueError(f"truncation order {q} is not a power of {p}")
        if alpha.ctx is not field and not alpha.ctx.same_field(field):
            raise ValueError("expansion point must live in the residue field")
        self.field = field
        self.q = q
        self.alpha = alpha

    def zero(self):
        z = self.field.zero()
        return SeriesElem(self, [z] * self.q)

    def one(self):
        return self.from_scalar(self.field.one())

    def from_scalar(self, c):
        coeffs = [self.field.zero()] * self.q
        coeffs[0] = c
        return SeriesElem(self, coeffs)

    def from_coeffs(self, coeffs):
        z = self.field.zero()
        c = list(coeffs[: self.q])
        c += [z] * (self.q - len(c))
        return SeriesElem(self, c)

    def x_series(self):
        """The series of x itself: alpha + X."""
        coeffs = [self.field.zero()] * self.q
        coeffs[0] = self.alpha
        if self.q > 1:
            coeffs[1] = self.field.one()
        return SeriesElem(self, coeffs)

    def same(self, other):
        return self.q == other.q and self.field.same_field(other.field) and self.alpha == other.alpha

    def __repr__(self):
        return f"{self.field.label()}[[X]]/(X^{self.q}) at alpha={self.alpha!r}"


class SeriesElem:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = list(coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def constant_term(self):
        return self.coeffs[0]

    def is_unit(self):
        return not self.coeffs[0].is_zero()

    def __eq__(self, other):
        if not isinstance(other, SeriesElem):
            return NotImplemented
        return self.ctx.same(other.ctx) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        return SeriesElem(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return SeriesElem(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SeriesElem(self.ctx, [-a for a in self.coeffs])

    def __mul__(self, other):
        q = self.ctx.q
        zero = self.ctx.field.zero()
        out = [zero] * q
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(q - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return SeriesElem(self.ctx, out)

    def scale(self, c):
        if c.is_zero():
            return self.ctx.zero()
        return SeriesElem(self.ctx, [a * c for a in self.coeffs])

    def shift(self, k):
        """Multiply by X^k."""
        zero = self.ctx.field.zero()
        return SeriesElem(self.ctx, [zero] * k + self.coeffs[: self.ctx.q - k])

    def inv(self):
        """Newton iteration with doubling precision."""
        if not self.is_unit():
            raise NonUnitSeries("series with zero constant term has no inverse")
        ctx = self.ctx
        q = ctx.q
        w = ctx.from_scalar(self.coeffs[0].inv())
        prec = 1
        two = ctx.from_scalar(ctx.field.from_int(2))
        while prec < q:
            prec *= 2
            w = w * (two - self * w)
        return w

    def hasse(self, i):
        """D^(i) applied coefficient-wise: X^n -> C(n,i) X^(n-i)."""
        ctx = self.ctx
        if i < 0 or i >= ctx.q:
            raise OrderOutOfRange(f"Hasse order {i} outside [0, {ctx.q})")
        if i == 0:
            return SeriesElem(ctx, self.coeffs)
        p = ctx.field.p
        zero = ctx.field.zero()
        out = [zero] * ctx.q
        for n in range(i, ctx.q):
            c = self.coeffs[n]
            if c.is_zero():
                continue
            b = binom_mod_p(n, i, p)
            if b:
                out[n - i] = out[n - i] + c * ctx.field.from_int(b)
        return SeriesElem(ctx, out)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(repr(c))
            else:
                xs = "X" if i == 1 else f"X^{i}"
                parts.append(xs if c == c.ctx.one() else f"({c!r})*{xs}")
        return " + ".join(parts) if parts else "0"


def expand_poly_at_place(poly, ctx):
    """Image of a k[x] polynomial under x -> alpha + X, truncated to X^q."""
    acc = ctx.zero()
    x = ctx.x_series()
    for c in reversed(poly.coeffs):
        acc = acc * x + ctx.from_scalar(embed(c, ctx.field))
    return acc


def expand_at_place(r, ctx):
    """Image of a rational function in l[[X]]/(X^q); the denominator must
    not vanish at the place."""
    den_at = r.den.evaluate(ctx.alpha)
    if den_at.is_zero():
        raise NotIntegralAtPlace(f"{r!r} has a pole at the expansion point")
    num_s = expand_poly_at_place(r.num, ctx)
    den_s = expand_poly_at_place(r.den, ctx)
    return num_s * den_s.inv()
