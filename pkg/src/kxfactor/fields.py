"""Arithmetic in F_p and its extensions F_{p^d}.

An extension is always represented as F_p[z]/(modulus) with the modulus a
monic irreducible over the prime field.  Towers (k inside l inside l_e) are
tracked as embedding data only: a context may point at a parent context
together with the image of the parent's generator, which is enough to embed
elements, test subfield membership and project back.
"""

from __future__ import annotations

import re
from .counters import OPS
from .errors import NotInSubfield, ParseError, ZeroInversion

MAX_CHARACTERISTIC = 1 << 16


# ---------------------------------------------------------------------------
# Prime-field coefficient-list helpers (lists of ints mod p, low-to-high).

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, y in enumerate(b):
        r[i] = (r[i] + y) % p
    return _trim(r)


def _psub(a, b, p):
    r = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        r[i] = (r[i] - y) % p
    return _trim(r)


def _pmul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            r[i + j] = (r[i + j] + x * y) % p
    return _trim(r)


def _pdivmod(a, b, p):
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, da - db + 1)
    for i in range(da - db, -1, -1):
        f = a[i + db] * inv_lead % p
        if f:
            q[i] = f
            for j in range(db + 1):
                a[i + j] = (a[i + j] - f * b[j]) % p
    return _trim(q), _trim(a[:db])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    b = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, b, p), mod, p)[1]
        b = _pdivmod(_pmul(b, b, p), mod, p)[1]
        e >>= 1
    return result


def _is_irreducible_int(coeffs, p):
    """Trial division by every monic polynomial of degree <= d/2."""
    d = len(coeffs) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for idx in range(p ** deg):
            div = []
            n = idx
            for _ in range(deg):
                div.append(n % p)
                n //= p
            div.append(1)
            if not _pdivmod(coeffs, div, p)[1]:
                return False
    return True


def find_irreducible(p, d):
    """Lexicographically first (by low-to-high coefficient scan) monic
    irreducible of degree d over F_p."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    for idx in range(p ** d):
        coeffs = []
        n = idx
        for _ in range(d):
            coeffs.append(n % p)
            n //= p
        coeffs.append(1)
        if _is_irreducible_int(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible found")  # cannot happen


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------


class FieldCtx:
    """Descriptor of F_{p^d} = F_p[z]/(modulus).

    parent/parent_gen_image describe an embedding of a smaller context into
    this one; chains of those links form the tower.
    """

    __slots__ = ("p", "modulus", "d", "parent", "parent_gen_image", "_elems", "_mulcache")

    def __init__(self, p, modulus=None, parent=None, parent_gen_image=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p > MAX_CHARACTERISTIC:
            raise ValueError(f"characteristic {p} exceeds supported bound {MAX_CHARACTERISTIC}")
        if modulus is None:
            modulus = find_irreducible(p, 1)
        modulus = tuple(c % p for c in modulus)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if len(modulus) >= 3 and not _is_irreducible_int(list(modulus), p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.modulus = modulus
        self.d = len(modulus) - 1
        self.parent = parent
        self.parent_gen_image = parent_gen_image
        self._elems = None
        # memo for extension-field products; small fields only
        self._mulcache = {} if self.d > 1 and self.order <= 128 else None
        if parent is not None:
            if parent.p != p:
                raise ValueError("embedding must preserve the characteristic")
            if parent_gen_image is None:
                if parent.d != 1:
                    raise ValueError("missing parent generator image")
                parent_gen_image = self.zero()
            if not (parent_gen_image.ctx is self or parent_gen_image.ctx.same_field(self)):
                raise ValueError("parent generator image must live in this context")
            self.parent_gen_image = FieldElem(self, parent_gen_image.coeffs)
            # the embedding must kill the parent modulus
            img = self._eval_int_poly(parent.modulus, self.parent_gen_image)
            if not img.is_zero():
                raise ValueError("parent generator image is not a root of the parent modulus")

    # -- basic constructors -------------------------------------------------

    @property
    def order(self):
        return self.p ** self.d

    def zero(self):
        return FieldElem(self, (0,) * self.d)

    def one(self):
        return self.from_int(1)

    def gen(self):
        if self.d == 1:
            raise ValueError("prime field has no extension generator")
        return FieldElem(self, tuple(1 if i == 1 else 0 for i in range(self.d)))

    def from_int(self, n):
        return FieldElem(self, (n % self.p,) + (0,) * (self.d - 1))

    def from_coeffs(self, coeffs):
        c = [x % self.p for x in coeffs]
        if len(c) > self.d:
            c = list(_pdivmod(c, list(self.modulus), self.p)[1])
        c += [0] * (self.d - len(c))
        return FieldElem(self, tuple(c))

    def elements(self):
        """All field elements in coefficient-lexicographic order (constant
        coefficient varies fastest)."""
        for idx in range(self.order):
            n = idx
            coeffs = []
            for _ in range(self.d):
                coeffs.append(n % self.p)
                n //= self.p
            yield FieldElem(self, tuple(coeffs))

    def random_element(self, rng):
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.d)))

    def _eval_int_poly(self, coeffs, at):
        acc = self.zero()
        for c in reversed(coeffs):
            acc = acc * at + self.from_int(c)
        return acc

    # -- tower plumbing ------------------------------------------------------

    def same_field(self, other):
        return self is other or (self.p == other.p and self.modulus == other.modulus)

    def ancestor_chain(self):
        chain = [self]
        c = self
        while c.parent is not None:
            c = c.parent
            chain.append(c)
        return chain

    def is_ancestor(self, sub):
        return any(c.same_field(sub) for c in self.ancestor_chain())

    def label(self):
        return f"GF({self.p})" if self.d == 1 else f"GF({self.p}^{self.d})"

    def __repr__(self):
        return self.label()


class FieldElem:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def is_zero(self):
        return not any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is self.ctx or other.ctx.same_field(self.ctx):
                return other
            raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        ctx = self.ctx
        if type(other) is not FieldElem:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.ctx is not ctx and not other.ctx.same_field(ctx):
            raise ValueError(f"field mismatch: {ctx} vs {other.ctx}")
        OPS.add += 1
        p = ctx.p
        if ctx.d == 1:
            return FieldElem(ctx, ((self.coeffs[0] + other.coeffs[0]) % p,))
        return FieldElem(ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        ctx = self.ctx
        if type(other) is not FieldElem:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.ctx is not ctx and not other.ctx.same_field(ctx):
            raise ValueError(f"field mismatch: {ctx} vs {other.ctx}")
        OPS.add += 1
        p = ctx.p
        if ctx.d == 1:
            return FieldElem(ctx, ((self.coeffs[0] - other.coeffs[0]) % p,))
        return FieldElem(ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.ctx.from_int(other) - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        ctx = self.ctx
        if type(other) is not FieldElem:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.ctx is not ctx and not other.ctx.same_field(ctx):
            raise ValueError(f"field mismatch: {ctx} vs {other.ctx}")
        OPS.mul += 1
        p = ctx.p
        if ctx.d == 1:
            return FieldElem(ctx, ((self.coeffs[0] * other.coeffs[0]) % p,))
        cache = ctx._mulcache
        if cache is not None:
            key = (self.coeffs, other.coeffs)
            hit = cache.get(key)
            if hit is not None:
                return FieldElem(ctx, hit)
        prod = _pmul(list(self.coeffs), list(other.coeffs), p)
        rem = _pdivmod(prod, list(ctx.modulus), p)[1]
        rem = tuple(rem) + (0,) * (ctx.d - len(rem))
        if cache is not None:
            cache[key] = rem
        return FieldElem(ctx, rem)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroInversion("division by zero field element")
        OPS.inv += 1
        ctx = self.ctx
        p = ctx.p
        if ctx.d == 1:
            return FieldElem(ctx, (pow(self.coeffs[0], -1, p),))
        # extended Euclid against the modulus
        a, b = list(ctx.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while len(b) > 1 or (b and b[0] != 0):
            if len(b) == 1:
                break
            q, r = _pdivmod(a, b, p)
            a, b = b, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        # now b is a nonzero constant
        c = pow(b[0], -1, p)
        res = [x * c % p for x in s1]
        res = _pdivmod(res, list(ctx.modulus), p)[1]
        res = list(res) + [0] * (ctx.d - len(res))
        return FieldElem(ctx, tuple(res))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ctx.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx.same_field(other.ctx) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.modulus, self.coeffs))

    def __repr__(self):
        return format_elem(self)


# ---------------------------------------------------------------------------
# Tower operations.


def embed(a, target):
    """Image of a under the tracked embedding chain into target."""
    if a.ctx.same_field(target):
        return FieldElem(target, a.coeffs)
    chain = []
    c = target
    while c is not None and not c.same_field(a.ctx):
        chain.append(c)
        c = c.parent
    if c is None:
        raise ValueError(f"{a.ctx} is not an ancestor of {target}")
    cur = a
    for ctx in reversed(chain):
        img = ctx.parent_gen_image
        acc = ctx.zero()
        for coeff in reversed(cur.coeffs):
            acc = acc * img + ctx.from_int(coeff)
        cur = acc
    return cur


def frobenius_power(a, e):
    """a^(p^e)."""
    result = a
    for _ in range(e):
        result = result ** a.ctx.p
    return result


def is_in_subfield(a, sub):
    """True iff a is fixed by the |sub|-power Frobenius.  sub must be an
    ancestor of a's context (or the same field)."""
    if not a.ctx.is_ancestor(sub):
        raise ValueError(f"{sub} is not an ancestor of {a.ctx}")
    return frobenius_power(a, sub.d) == a


def project_to_subfield(a, sub):
    """The element of sub mapping to a under the tracked embedding."""
    if a.ctx.same_field(sub):
        return FieldElem(sub, a.coeffs)
    if not is_in_subfield(a, sub):
        raise NotInSubfield(f"{a!r} does not lie in {sub}")
    # solve  sum_i c_i * embed(gen_sub^i) = a  over F_p
    p = a.ctx.p
    basis = []
    g = sub.one()
    gen = sub.gen() if sub.d > 1 else sub.one()
    for i in range(sub.d):
        basis.append(embed(g, a.ctx).coeffs)
        g = g * gen
    sol = _solve_mod_p([list(col) for col in basis], list(a.coeffs), p)
    if sol is None:
        raise NotInSubfield(f"{a!r} does not lie in {sub}")
    return sub.from_coeffs(sol)


def _solve_mod_p(cols, rhs, p):
    """Solve M c = rhs over F_p where M's columns are given; None if
    inconsistent."""
    ncols = len(cols)
    nrows = len(rhs)
    aug = [[cols[j][i] % p for j in range(ncols)] + [rhs[i] % p] for i in range(nrows)]
    piv_cols = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if aug[r][col]:
                sel = r
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [v * inv % p for v in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[row])]
        piv_cols.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][ncols]:
            return None
    sol = [0] * ncols
    for r, col in enumerate(piv_cols):
        sol[col] = aug[r][ncols]
    return sol


def extension_of(base, ext_degree):
    """F_{p^(d*e)} as a fresh context with base embedded in it."""
    if ext_degree == 1:
        return base
    p = base.p
    new_d = base.d * ext_degree
    modulus = find_irreducible(p, new_d)
    ctx = FieldCtx(p, modulus)
    if base.d == 1:
        return FieldCtx(p, modulus, parent=base)
    # find a root of base.modulus inside the new field
    img = _root_in_field(list(base.modulus), ctx)
    return FieldCtx(p, modulus, parent=base, parent_gen_image=FieldElem(ctx, img.coeffs))


def _root_in_field(int_coeffs, ctx):
    """Deterministic first root (coefficient-lex order) of an F_p polynomial
    inside ctx; the polynomial is assumed to split there."""
    from .fffactor import roots_in_field  # local import to avoid a cycle
    from .poly import Poly

    f = Poly(ctx, [ctx.from_int(c) for c in int_coeffs], "x")
    roots = roots_in_field(f)
    if not roots:
        raise AssertionError("expected a root in the extension field")
    return roots[0]


def element_degree(a):
    """Degree over F_p of the subfield generated by a."""
    for n in range(1, a.ctx.d + 1):
        if a.ctx.d % n == 0 and frobenius_power(a, n) == a:
            return n
    return a.ctx.d


# ---------------------------------------------------------------------------
# Parsing / printing.

_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$")


def parse_field(spec):
    """Parse "GF(p)" or "GF(p^d)" into a fresh context with the canonical
    (lexicographically first) modulus."""
    m = _FIELD_RE.match(spec)
    if not m:
        raise ParseError(f"bad field spec {spec!r}; expected GF(p) or GF(p^d)")
    p = int(m.group(1))
    d = int(m.group(2)) if m.group(2) else 1
    if d < 1:
        raise ParseError("extension degree must be >= 1")
    if not _is_prime(p):
        # allow GF(q) with q an explicit prime power, e.g. GF(4)
        q = p
        base = None
        for cand in range(2, q + 1):
            if _is_prime(cand) and q % cand == 0:
                base = cand
                break
        e = 0
        while base and q % base == 0 and q > 1:
            q //= base
            e += 1
        if base is None or q != 1 or d != 1:
            raise ParseError(f"field order in {spec!r} is not a prime power")
        p, d = base, e
    prime = FieldCtx(p)
    if d == 1:
        return prime
    modulus = find_irreducible(p, d)
    ctx = FieldCtx(p, modulus)
    return FieldCtx(p, modulus, parent=prime)


def format_elem(a, gen_symbol="z"):
    if a.ctx.d == 1 or all(c == 0 for c in a.coeffs[1:]):
        return str(a.coeffs[0])
    terms = []
    for i in range(a.ctx.d - 1, -1, -1):
        c = a.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            v = gen_symbol if i == 1 else f"{gen_symbol}^{i}"
            terms.append(v if c == 1 else f"{c}*{v}")
    return "+".join(terms) if terms else "0"
