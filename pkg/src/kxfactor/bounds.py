"""The degree bound controlling the truncation order, default coefficient
subspaces from the valuation bounds on factor coefficients, and the place
search over k and its extensions.

Valuations of k(x) run over the monic irreducibles of k[x] plus the place
at infinity; each place is weighted by its degree, which can only enlarge
the bound and keeps it valid over a non-algebraically-closed constant
field.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PlaceInvalid, SubspaceSpecError
from .fffactor import factor_over_ff
from .fields import extension_of, project_to_subfield
from .hasse import wronskian_rank_over_K
from .poly import Poly, RatFunc, discriminant, ratfunc_str


class SubspaceSpec:
    """Prescribed coefficient spaces V_0..V_{r-1}; the first basis element
    of V_0 is the constant 1 and the leading coefficient is implicitly 1."""

    __slots__ = ("r", "spaces")

    def __init__(self, r, spaces, validate=True):
        if r < 1:
            raise SubspaceSpecError("factor degree r must be >= 1")
        if len(spaces) != r:
            raise SubspaceSpecError(f"expected {r} coefficient spaces, got {len(spaces)}")
        spaces = [list(basis) for basis in spaces]
        if not spaces[0]:
            raise SubspaceSpecError("V_0 must be nonempty")
        one = RatFunc.from_int(spaces[0][0].ctx, 1)
        if one in spaces[0]:
            spaces[0].remove(one)
            spaces[0].insert(0, one)
        else:
            raise SubspaceSpecError("V_0 must contain the constant 1")
        if validate:
            for i, basis in enumerate(spaces):
                if not basis:
                    raise SubspaceSpecError(f"V_{i} must be nonempty")
                rank, _ = wronskian_rank_over_K(basis)
                if rank != len(basis):
                    raise SubspaceSpecError(f"basis of V_{i} is linearly dependent over k")
        self.r = r
        self.spaces = spaces

    @property
    def m(self):
        return sum(len(b) for b in self.spaces)

    def basis_strings(self):
        return [[ratfunc_str(h) for h in basis] for basis in self.spaces]


class BoundsReport:
    __slots__ = ("delta", "coeff_bounds", "m", "q")

    def __init__(self, delta, coeff_bounds, m, q):
        self.delta = delta
        self.coeff_bounds = coeff_bounds
        self.m = m
        self.q = q


class PlaceData:
    """A degree-one place of l(x) over the residue field l = k(alpha)."""

    __slots__ = ("base", "ell", "alpha", "degree", "min_poly")

    def __init__(self, base, ell, alpha, degree, min_poly):
        self.base = base
        self.ell = ell
        self.alpha = alpha
        self.degree = degree
        self.min_poly = min_poly

    def label(self):
        return f"alpha={self.alpha!r}@{self.ell.label()}"

    def __repr__(self):
        return f"Place({self.label()}, degree {self.degree})"


def place_from_alpha(base, ell, alpha):
    """Package alpha with its degree and minimal polynomial over k."""
    qk = base.order
    conj = alpha
    conjugates = [alpha]
    while True:
        conj = conj ** qk
        if conj == alpha:
            break
        conjugates.append(conj)
    deg = len(conjugates)
    mp = Poly(ell, [ell.one()], "x")
    for c in conjugates:
        mp = mp * Poly(ell, [-c, ell.one()], "x")
    mp_base = Poly(base, [project_to_subfield(c, base) for c in mp.coeffs], "x")
    return PlaceData(base, ell, alpha, deg, mp_base)


def validate_place(g, place):
    """Integrality of G at the place and v(disc) = 0.

    The reduction of G at the place may have a vanishing constant term
    (the zero-divisor machinery copes); only separability of the reduction
    is required, and v(disc) = 0 guarantees it.
    """
    alpha = place.alpha
    for j, a in enumerate(g.coeffs):
        if a.den.evaluate(alpha).is_zero():
            raise PlaceInvalid(f"coefficient of T^{j} has a pole at the place")
    f = discriminant(g)
    if f.is_zero():
        raise PlaceInvalid("discriminant vanishes identically (inseparable input)")
    if f.den.evaluate(alpha).is_zero() or f.num.evaluate(alpha).is_zero():
        raise PlaceInvalid("discriminant has nonzero valuation at the place")


def find_place(g, max_ext=64, keep_integral=()):
    """First alpha (k first, then extensions of growing degree, elements in
    coefficient-lexicographic order) with all denominators and the
    discriminant nonvanishing.

    keep_integral: extra rational functions (e.g. subspace basis elements)
    whose denominators must also stay nonzero at the place.
    """
    base = g.ctx
    f = discriminant(g)
    if f.is_zero():
        raise PlaceInvalid("cannot pick a place: the discriminant is zero")
    for e in range(1, max_ext + 1):
        ell = base if e == 1 else extension_of(base, e)
        for alpha in ell.elements():
            if _alpha_ok(g, f, alpha, keep_integral):
                place = place_from_alpha(base, ell, alpha)
                validate_place(g, place)  # re-check the predicates post hoc
                return place
    raise PlaceInvalid("no usable place found within the extension search bound")


def _alpha_ok(g, f, alpha, keep_integral=()):
    for a in g.coeffs:
        if a.den.evaluate(alpha).is_zero():
            return False
    if f.den.evaluate(alpha).is_zero() or f.num.evaluate(alpha).is_zero():
        return False
    for h in keep_integral:
        if h.den.evaluate(alpha).is_zero():
            return False
    return True


# -- valuations and the degree bound -------------------------------------------


def _ord_at(poly, pi):
    if poly.is_zero():
        return None  # +infinity
    n = 0
    cur = poly
    while True:
        q, r = cur.divrem(pi)
        if not r.is_zero():
            return n
        n += 1
        cur = q


def _finite_places(g):
    """Monic irreducibles dividing some coefficient denominator."""
    seen = {}
    for a in g.coeffs:
        if a.den.degree < 1:
            continue
        for pi, _ in factor_over_ff(a.den):
            seen[(pi.degree, tuple(c.coeffs for c in pi.coeffs))] = pi
    return [seen[k] for k in sorted(seen)]


def _place_min_ratio(g, vals_fn):
    """min over i < s of v(a_i)/(s - i), as a Fraction (None = +inf)."""
    s = g.degree
    best = None
    for i in range(s):
        a = g.coeff(i)
        if a.is_zero():
            continue
        v = vals_fn(a)
        ratio = Fraction(v, s - i)
        if best is None or ratio < best:
            best = ratio
    return best


def compute_delta(g, r):
    """Degree bound: -r * sum over places of min{0, min_i v(a_i)/(s-i)},
    weighting each finite place by its degree, rounded up."""
    total = Fraction(0)
    for pi in _finite_places(g):
        ratio = _place_min_ratio(g, lambda a: _ord_at(a.num, pi) - _ord_at(a.den, pi))
        if ratio is not None and ratio < 0:
            total += Fraction(pi.degree) * ratio
    ratio = _place_min_ratio(g, lambda a: a.den.degree - a.num.degree)
    if ratio is not None and ratio < 0:
        total += ratio
    delta = -r * total
    return max(0, math.ceil(delta))


def q_power(p, bound):
    """Smallest power of p strictly above the bound."""
    q = p
    while q <= bound:
        q *= p
    return q


def default_subspaces(g, r):
    """Riemann-Roch style coefficient spaces from the valuation bounds.

    For polynomial coefficients this is polynomials of degree <= B_j; in
    general the basis is x^u / den_j with den_j soaking up the allowed
    finite poles.
    """
    ctx = g.ctx
    s = g.degree
    if not (1 <= r < s):
        raise SubspaceSpecError(f"factor degree r={r} must satisfy 1 <= r < deg G={s}")
    finite = []
    for pi in _finite_places(g):
        ratio = _place_min_ratio(g, lambda a: _ord_at(a.num, pi) - _ord_at(a.den, pi))
        if ratio is not None and ratio < 0:
            finite.append((pi, -ratio))
    ratio_inf = _place_min_ratio(g, lambda a: a.den.degree - a.num.degree)
    winf = -ratio_inf if (ratio_inf is not None and ratio_inf < 0) else Fraction(0)

    x = Poly.x(ctx)
    spaces = []
    for j in range(r):
        den = Poly(ctx, [ctx.one()], "x")
        for pi, w in finite:
            den = den * pi ** math.ceil((r - j) * w)
        ninf = math.ceil((r - j) * winf)
        top = den.degree + ninf
        if den.degree == 0:
            basis = [RatFunc(x ** u) for u in range(top + 1)]
        elif j == 0:
            # swap the x^(deg den)/den slot for the constant 1 so h_01 = 1;
            # the span is unchanged because den is monic
            basis = [RatFunc.from_int(ctx, 1)]
            basis += [RatFunc(x ** u, den) for u in range(top + 1) if u != den.degree]
        else:
            basis = [RatFunc(x ** u, den) for u in range(top + 1)]
        spaces.append(basis)
    return SubspaceSpec(r, spaces)


def lemma_degree_bounds(g, r):
    """Per-coefficient polynomial degree bounds B_j for a degree-r factor of
    a polynomial-coefficient G (the infinite-place bound alone)."""
    s = g.degree
    ratio_inf = _place_min_ratio(g, lambda a: a.den.degree - a.num.degree)
    winf = -ratio_inf if (ratio_inf is not None and ratio_inf < 0) else Fraction(0)
    return [math.ceil((r - j) * winf) for j in range(r)]


def bounds_report(g, r, m):
    delta = compute_delta(g, r)
    q = q_power(g.ctx.p, max(m, delta))
    return BoundsReport(delta, lemma_degree_bounds(g, r), m, q)
