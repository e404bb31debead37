"""Dense univariate polynomials over a finite field, rational functions
K = k(x), and the bivariate layer K[T].

Coefficient vectors are low-to-high with no trailing zeros; the zero
polynomial has an empty vector.  RatFunc keeps gcd(num, den) = 1 with a
monic denominator, so equality is structural.
"""

from __future__ import annotations

from .errors import (
    DivisionByZeroPoly,
    Inseparable,
    NotMonic,
    PoleAtPoint,
    ZeroConstantTerm,
)
from .fields import FieldElem, embed, format_elem


class Poly:
    __slots__ = ("ctx", "coeffs", "var")

    def __init__(self, ctx, coeffs, var="x"):
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero():
            n -= 1
        self.ctx = ctx
        self.coeffs = tuple(coeffs[:n])
        self.var = var

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ctx, var="x"):
        return cls(ctx, [], var)

    @classmethod
    def const(cls, c, var="x"):
        return cls(c.ctx, [c], var)

    @classmethod
    def from_ints(cls, ctx, ints, var="x"):
        return cls(ctx, [ctx.from_int(n) for n in ints], var)

    @classmethod
    def x(cls, ctx, var="x"):
        return cls(ctx, [ctx.zero(), ctx.one()], var)

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.ctx.one()

    def lc(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return not self.is_zero() and self.lc() == self.ctx.one()

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.from_ints(self.ctx, [other], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx.same_field(other.ctx) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.modulus, self.coeffs, self.var))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.from_ints(self.ctx, [other], self.var)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return Poly(self.ctx, out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.from_ints(self.ctx, [other], self.var)
        return self + (-other)

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            if other.is_zero():
                return Poly.zero(self.ctx, self.var)
            return Poly(self.ctx, [c * other for c in self.coeffs], self.var)
        if isinstance(other, int):
            return self * self.ctx.from_int(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ctx, self.var)
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out, self.var)

    __rmul__ = __mul__

    def divrem(self, other):
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.ctx, self.var), self
        inv_lead = other.lc().inv()
        rem = list(self.coeffs)
        db = other.degree
        q = [self.ctx.zero()] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            f = rem[i + db] * inv_lead
            if f.is_zero():
                continue
            q[i] = f
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    rem[i + j] = rem[i + j] - f * b
        return Poly(self.ctx, q, self.var), Poly(self.ctx, rem[:db], self.var)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __pow__(self, e):
        result = Poly.from_ints(self.ctx, [1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self * self.lc().inv()

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = Poly.from_ints(self.ctx, [1], self.var), Poly.zero(self.ctx, self.var)
        t0, t1 = Poly.zero(self.ctx, self.var), Poly.from_ints(self.ctx, [1], self.var)
        while not r1.is_zero():
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = r0.lc().inv()
        return r0 * c, s0 * c, t0 * c

    def derivative(self):
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * self.ctx.from_int(i))
        return Poly(self.ctx, out, self.var)

    def evaluate(self, at):
        """Horner evaluation; at may live in an extension of the coefficient
        field (coefficients are embedded)."""
        target = at.ctx
        acc = target.zero()
        for c in reversed(self.coeffs):
            acc = acc * at + embed(c, target)
        return acc

    def map_coeffs(self, fn, ctx=None):
        return Poly(ctx or self.ctx, [fn(c) for c in self.coeffs], self.var)

    def embed_into(self, target):
        return Poly(target, [embed(c, target) for c in self.coeffs], self.var)

    def shift_var(self, a):
        """self(var + a) by Horner."""
        ctx = self.ctx
        acc = Poly.zero(ctx, self.var)
        xa = Poly(ctx, [a, ctx.one()], self.var)
        for c in reversed(self.coeffs):
            acc = acc * xa + Poly.const(c, self.var)
        return acc

    def __repr__(self):
        return poly_str(self)


def poly_str(f, var=None):
    var = var or f.var
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if c.is_zero():
            continue
        cs = format_elem(c)
        if i == 0:
            terms.append(cs)
            continue
        v = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            terms.append(v)
        elif "+" in cs or "*" in cs:
            terms.append(f"({cs})*{v}")
        else:
            terms.append(f"{cs}*{v}")
    return "+".join(terms)


class RatFunc:
    """Element of k(x), stored as reduced num/den with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = Poly.from_ints(num.ctx, [1], num.var)
        if den.is_zero():
            raise DivisionByZeroPoly("rational function with zero denominator")
        if reduce:
            g = num.gcd(den)
            if not g.is_zero() and g.degree > 0:
                num = num // g
                den = den // g
            if not den.is_monic():
                c = den.lc().inv()
                num = num * c
                den = den * c
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        return cls(Poly.const(c, "x"))

    @classmethod
    def from_int(cls, ctx, n):
        return cls(Poly.from_ints(ctx, [n], "x"))

    @classmethod
    def x(cls, ctx):
        return cls(Poly.x(ctx))

    @property
    def ctx(self):
        return self.num.ctx

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_poly(self):
        return self.den.degree == 0

    def is_const(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.ctx, other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.ctx, other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.ctx, other)
        if isinstance(other, FieldElem):
            other = RatFunc.const(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.ctx, other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inv(self):
        if self.is_zero():
            raise DivisionByZeroPoly("inverting zero rational function")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.ctx, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, at):
        d = self.den.evaluate(at)
        if d.is_zero():
            raise PoleAtPoint(f"pole at {at!r}")
        return self.num.evaluate(at) * d.inv()

    def embed_into(self, target):
        return RatFunc(self.num.embed_into(target), self.den.embed_into(target), reduce=False)

    def __repr__(self):
        return ratfunc_str(self)


def ratfunc_str(r):
    ns = poly_str(r.num)
    if r.den.is_one():
        return ns
    ds = poly_str(r.den)
    if "+" in ns:
        ns = f"({ns})"
    if "+" in ds or "*" in ds:
        ds = f"({ds})"
    return f"{ns}/{ds}"


class TPoly:
    """Polynomial in T over K = k(x)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero():
            n -= 1
        self.ctx = ctx
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    @classmethod
    def const(cls, r):
        return cls(r.ctx, [r])

    @classmethod
    def t(cls, ctx):
        return cls(ctx, [RatFunc.from_int(ctx, 0), RatFunc.from_int(ctx, 1)])

    @classmethod
    def from_coeff_list(cls, ctx, rats):
        return cls(ctx, rats)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RatFunc.from_int(self.ctx, 0)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return not self.is_zero() and self.coeffs[-1].is_one()

    def lc(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.ctx.same_field(other.ctx) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return TPoly(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return TPoly(self.ctx, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return TPoly.zero(self.ctx)
        zero = RatFunc.from_int(self.ctx, 0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TPoly(self.ctx, out)

    __rmul__ = __mul__

    def divrem(self, other):
        """Exact division over K; other must be nonzero."""
        if other.is_zero():
            raise DivisionByZeroPoly("T-polynomial division by zero")
        if self.degree < other.degree:
            return TPoly.zero(self.ctx), self
        inv_lead = other.lc().inv()
        rem = list(self.coeffs)
        db = other.degree
        zero = RatFunc.from_int(self.ctx, 0)
        q = [zero] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            f = rem[i + db] * inv_lead
            if f.is_zero():
                continue
            q[i] = f
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    rem[i + j] = rem[i + j] - f * b
        return TPoly(self.ctx, q), TPoly(self.ctx, rem[:db])

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def derivative(self):
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * i)
        return TPoly(self.ctx, out)

    def evaluate(self, at):
        """Evaluate at a RatFunc."""
        acc = RatFunc.from_int(self.ctx, 0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def embed_into(self, target):
        return TPoly(target, [c.embed_into(target) for c in self.coeffs])

    def all_coeffs_constant(self):
        return all(c.is_const() for c in self.coeffs)

    def to_field_poly(self):
        """For constant-coefficient input: the same polynomial over k."""
        return Poly(self.ctx, [c.const_value() for c in self.coeffs], "T")

    def __repr__(self):
        return tpoly_str(self)


def resultant(a, b):
    """Res(a, b) over K via the Euclidean recursion."""
    ctx = a.ctx
    zero = RatFunc.from_int(ctx, 0)
    res = RatFunc.from_int(ctx, 1)
    while True:
        if b.is_zero():
            return zero if a.degree > 0 else res
        if a.degree == 0:
            return res * _rpow(a.coeffs[0], b.degree)
        if b.degree == 0:
            return res * _rpow(b.coeffs[0], a.degree)
        if a.degree < b.degree:
            if (a.degree * b.degree) % 2 == 1:
                res = -res
            a, b = b, a
            continue
        r = a % b
        if (a.degree * b.degree) % 2 == 1:
            res = -res
        if r.is_zero():
            return zero if b.degree > 0 else res * _rpow(b.lc(), a.degree)
        res = res * _rpow(b.lc(), a.degree - r.degree)
        a, b = b, r


def _rpow(r, e):
    out = RatFunc.from_int(r.ctx, 1)
    for _ in range(e):
        out = out * r
    return out


def discriminant(g):
    """Res(G, G')/lc with the classical sign (-1)^(s(s-1)/2)."""
    if g.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    gp = g.derivative()
    if gp.is_zero():
        return RatFunc.from_int(g.ctx, 0)
    s = g.degree
    r = resultant(g, gp) / g.lc()
    if (s * (s - 1) // 2) % 2 == 1:
        r = -r
    return r


def make_separable_check(g):
    """Raise unless g is monic, has nonzero constant term and is separable."""
    if g.is_zero() or not g.is_monic():
        raise NotMonic("input polynomial must be monic in T")
    if g.coeff(0).is_zero():
        raise ZeroConstantTerm("input polynomial must have a nonzero constant term")
    if g.degree >= 1 and discriminant(g).is_zero():
        raise Inseparable("input polynomial must be separable (nonzero discriminant)")


def tpoly_str(g):
    if g.is_zero():
        return "0"
    parts = []
    for i in range(g.degree, -1, -1):
        c = g.coeff(i)
        if c.is_zero():
            continue
        if i == 0:
            cs = ratfunc_str(c)
            parts.append(f"({cs})" if ("+" in cs or "*" in cs or "/" in cs) else cs)
            continue
        v = "T" if i == 1 else f"T^{i}"
        if c.is_one():
            parts.append(v)
        else:
            cs = ratfunc_str(c)
            parts.append(f"({cs})*{v}")
    return " + ".join(parts)
