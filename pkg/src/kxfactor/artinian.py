"""The Artinian ring S_q[T]/(G~) at a place: invertibility with zero-divisor
witnesses, Hensel lifting of coprime factorizations, ring splitting into
summands, and constants of local summands.

A ring is described by its monic modulus over the series ring together with
its reduction at X = 0; splitting keeps a provenance path so reported
factors can name the summand they came from.
"""

from __future__ import annotations

from .errors import BadFactorization, NotCoprime, RingMismatch
from .fields import embed, extension_of
from .poly import Poly, poly_str
from .series import expand_at_place


# -- T-polynomials with series coefficients (plain lists, low-to-high) -------

def _tp_trim(c):
    n = len(c)
    while n and c[n - 1].is_zero():
        n -= 1
    return c[:n]


def _tp_mul(a, b, sctx):
    a = _tp_trim(a)
    b = _tp_trim(b)
    if not a or not b:
        return []
    out = [sctx.zero() for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return out


def _tp_sub(a, b, sctx):
    out = list(a) + [sctx.zero()] * max(0, len(b) - len(a))
    for i, cb in enumerate(b):
        out[i] = out[i] - cb
    return out


def _tp_divrem(a, b, sctx):
    """Division by a monic T-polynomial over the series ring."""
    b = _tp_trim(b)
    assert b and b[-1] == sctx.one(), "divisor must be monic over the series ring"
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return [], rem
    q = [sctx.zero() for _ in range(len(rem) - db)]
    for i in range(len(rem) - db - 1, -1, -1):
        f = rem[i + db]
        if f.is_zero():
            continue
        q[i] = f
        for j in range(db + 1):
            if not b[j].is_zero():
                rem[i + j] = rem[i + j] - f * b[j]
    return q, rem[:db]


class ArtinRing:
    __slots__ = ("sctx", "modulus", "g0", "path")

    def __init__(self, sctx, modulus, path=()):
        modulus = _tp_trim(list(modulus))
        assert modulus and modulus[-1] == sctx.one(), "ring modulus must be monic"
        assert len(modulus) >= 2, "ring modulus must have degree >= 1"
        self.sctx = sctx
        self.modulus = tuple(modulus)
        field = sctx.field
        self.g0 = Poly(field, [c.constant_term() for c in modulus], "T")
        self.path = tuple(path)

    @classmethod
    def from_tpoly(cls, g, sctx, path=()):
        """Expand a monic T-polynomial over K at the place."""
        coeffs = [expand_at_place(c, sctx) for c in g.coeffs]
        return cls(sctx, coeffs, path)

    @property
    def n(self):
        return len(self.modulus) - 1

    def zero(self):
        return ArtinElem(self, [self.sctx.zero() for _ in range(self.n)])

    def one(self):
        return self.from_series(self.sctx.one())

    def from_series(self, s):
        coeffs = [self.sctx.zero() for _ in range(self.n)]
        coeffs[0] = s
        return ArtinElem(self, coeffs)

    def from_tp(self, coeffs):
        """Element from a T-polynomial over the series ring, reduced mod the
        modulus."""
        _, rem = _tp_divrem(list(coeffs), list(self.modulus), self.sctx)
        rem = list(rem) + [self.sctx.zero()] * (self.n - len(rem))
        return ArtinElem(self, rem[: self.n])

    def t_element(self):
        if self.n == 1:
            return ArtinElem(self, [-self.modulus[0]])
        coeffs = [self.sctx.zero() for _ in range(self.n)]
        coeffs[1] = self.sctx.one()
        return ArtinElem(self, coeffs)

    def t_powers(self, up_to):
        """[1, t, t^2, ..., t^up_to] as ring elements."""
        out = [self.one()]
        t = self.t_element()
        for _ in range(up_to):
            out.append(out[-1] * t)
        return out

    def project(self, elem, sub):
        """Canonical image of an element of this ring in a split summand."""
        _, rem = _tp_divrem(list(elem.coeffs), list(sub.modulus), self.sctx)
        rem = list(rem) + [self.sctx.zero()] * (sub.n - len(rem))
        return ArtinElem(sub, rem[: sub.n])

    def path_str(self):
        return "/".join(("root",) + self.path)

    def __repr__(self):
        return f"ArtinRing(n={self.n}, q={self.sctx.q}, path={self.path_str()})"


class ArtinElem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        assert len(coeffs) == ring.n
        self.ring = ring
        self.coeffs = list(coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other):
        if other.ring is not self.ring:
            raise RingMismatch("elements live in different rings")

    def __add__(self, other):
        self._check(other)
        return ArtinElem(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return ArtinElem(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ArtinElem(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        ring = self.ring
        prod = _tp_mul(self.coeffs, other.coeffs, ring.sctx)
        return ring.from_tp(prod)

    def scale(self, s):
        """Multiply by a series ring scalar."""
        return ArtinElem(self.ring, [c * s for c in self.coeffs])

    def reduce_mod_x(self):
        """Image in l[T]/(G0)."""
        return Poly(self.ring.sctx.field, [c.constant_term() for c in self.coeffs], "T")

    def __eq__(self, other):
        if not isinstance(other, ArtinElem):
            return NotImplemented
        return self.ring is other.ring and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(tuple(c.coeffs[i] for i in range(c.ctx.q)) for c in self.coeffs))

    def __repr__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            ts = "1" if j == 0 else ("t" if j == 1 else f"t^{j}")
            parts.append(f"({c!r})*{ts}")
        return " + ".join(parts) if parts else "0"


# -- invertibility ------------------------------------------------------------


class Inverse:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


class ZeroDivisorWitness:
    __slots__ = ("h0", "nilpotent")

    def __init__(self, h0, nilpotent=False):
        self.h0 = h0
        self.nilpotent = nilpotent


class ZeroElement:
    __slots__ = ()


def try_invert(a):
    """Total trichotomy: Inverse(w) with a*w = 1, or a zero-divisor witness
    dividing G0, or Zero."""
    ring = a.ring
    if a.is_zero():
        return ZeroElement()
    a0 = a.reduce_mod_x()
    g0 = ring.g0
    if a0.is_zero():
        # divisible by X: nilpotent, no proper factor of G0 exposed
        return ZeroDivisorWitness(g0, nilpotent=True)
    g, u, _ = a0.xgcd(g0)
    if g.degree > 0:
        return ZeroDivisorWitness(g, nilpotent=False)
    # a0 * u = g (a nonzero constant) mod g0
    w0 = u * g.coeff(0).inv()
    sctx = ring.sctx
    w = ring.from_tp([sctx.from_scalar(c) for c in w0.coeffs])
    two = ring.one() + ring.one()
    prec = 1
    while prec < sctx.q:
        w = w * (two - a * w)
        prec *= 2
    assert (a * w - ring.one()).is_zero(), "Newton inversion failed to converge"
    return Inverse(w)


# -- Hensel lifting and splitting ---------------------------------------------


def hensel_split(ring, h0):
    """Split the ring along a monic proper factor h0 of G0.

    Returns (ring_h, ring_e) with monic lifted moduli H~, E~ satisfying
    H~ * E~ = G~ exactly in S_q[T]; elements are moved across with
    ring.project.
    """
    g0 = ring.g0
    if not (0 < h0.degree < g0.degree):
        raise BadFactorization("split factor must be a proper divisor of G0")
    e0, rem = g0.divrem(h0)
    if not rem.is_zero():
        raise BadFactorization("split factor does not divide G0")
    g, u, v = h0.xgcd(e0)
    if g.degree != 0:
        raise NotCoprime("factor and cofactor are not coprime mod X")
    cinv = g.coeff(0).inv()
    u = u * cinv  # u*h0 + v*e0 = 1
    v = v * cinv
    sctx = ring.sctx
    field = sctx.field
    q = sctx.q

    H = [sctx.from_scalar(c) for c in h0.coeffs]
    E = [sctx.from_scalar(c) for c in e0.coeffs]
    err = _tp_sub(list(ring.modulus), _tp_mul(H, E, sctx), sctx)

    for ell in range(1, q):
        c = Poly(field, [co.coeffs[ell] if ell < co.ctx.q else field.zero() for co in err], "T")
        if c.is_zero():
            continue
        vc = v * c
        w, dh = vc.divrem(h0)
        de = u * c + w * e0
        assert de.degree < e0.degree or de.is_zero(), "Hensel correction degree overflow"
        # fold the corrections into H, E and update the error incrementally
        dh_term = _series_shift_poly(dh, ell, sctx)
        de_term = _series_shift_poly(de, ell, sctx)
        upd = _tp_mul(dh_term, E, sctx)
        upd = _tp_add_into(upd, _tp_mul(de_term, H, sctx), sctx)
        if 2 * ell < q:
            upd = _tp_add_into(upd, _series_shift_poly2(dh * de, 2 * ell, sctx), sctx)
        err = _tp_sub(err, upd, sctx)
        H = _tp_add_into(H, dh_term, sctx)
        E = _tp_add_into(E, de_term, sctx)

    assert all(c.is_zero() for c in err), "Hensel lift did not converge"
    label_h = f"H({poly_str(h0)})"
    label_e = f"E({poly_str(e0)})"
    ring_h = ArtinRing(sctx, H, ring.path + (label_h,))
    ring_e = ArtinRing(sctx, E, ring.path + (label_e,))
    return ring_h, ring_e


def _series_shift_poly(fp, ell, sctx):
    """X^ell * fp for fp over the residue field."""
    out = []
    for c in fp.coeffs:
        s = sctx.zero()
        if not c.is_zero() and ell < sctx.q:
            s.coeffs[ell] = c
        out.append(s)
    return out


def _series_shift_poly2(fp, ell, sctx):
    return _series_shift_poly(fp, ell, sctx)


def _tp_add_into(a, b, sctx):
    out = list(a) + [sctx.zero()] * max(0, len(b) - len(a))
    for i, cb in enumerate(b):
        out[i] = out[i] + cb
    return out


# -- local decomposition -------------------------------------------------------


class ResidueField:
    """The constants of a local summand: l_e = l[T]/(F_e) realized as a
    FieldCtx extension of l, with the image of the T-class."""

    __slots__ = ("ctx", "t_image", "base")

    def __init__(self, ctx, t_image, base):
        self.ctx = ctx
        self.t_image = t_image
        self.base = base


class LocalSummand:
    __slots__ = ("ring", "residue", "_chain")

    def __init__(self, ring, residue, chain):
        self.ring = ring
        self.residue = residue
        self._chain = chain  # list of (parent_ring, child_ring) projections

    def project(self, elem):
        for parent, child in self._chain:
            elem = parent.project(elem, child)
        return elem


def residue_field_for(field, f0):
    """Residue field data for an irreducible f0 over l."""
    if f0.degree == 1:
        return ResidueField(field, -f0.coeff(0), field)
    ext = extension_of(field, f0.degree)
    from .fffactor import roots_in_field

    lifted = f0.embed_into(ext)
    roots = roots_in_field(lifted)
    assert roots, "irreducible factor must split in its residue field"
    return ResidueField(ext, roots[0], field)


def decompose_to_locals(ring, factors):
    """Iterated Hensel splitting along the full irreducible factorization of
    G0; one local summand per factor, each carrying its residue field."""
    prod = Poly(ring.sctx.field, [ring.sctx.field.one()], "T")
    for f in factors:
        prod = prod * f
    if prod != ring.g0:
        raise BadFactorization("provided factorization does not multiply to G0")
    if len(factors) == 1:
        return [LocalSummand(ring, residue_field_for(ring.sctx.field, factors[0]), [])]
    out = []
    cur = ring
    chain = []
    for f in factors[:-1]:
        ring_h, ring_e = hensel_split(cur, f)
        out.append(LocalSummand(ring_h, residue_field_for(ring.sctx.field, f), chain + [(cur, ring_h)]))
        chain = chain + [(cur, ring_e)]
        cur = ring_e
    out.append(LocalSummand(cur, residue_field_for(ring.sctx.field, factors[-1]), chain))
    return out


def constant_of(elem, summand):
    """Residue of a (caller-certified constant) element of a local summand,
    read as an element of the residue field."""
    res = summand.residue
    acc = res.ctx.zero()
    power = res.ctx.one()
    for c in elem.coeffs:
        acc = acc + embed(c.constant_term(), res.ctx) * power
        power = power * res.t_image
    return acc
