"""Hasse derivatives on the Artinian ring and over K itself.

The central object is the derivative table: D^(b)(t^j) for all powers of
the ring generator and all orders b < q, bootstrapped from the implicit
relation 0 = D^(i)(G(t)), whose only occurrence of the unknown D^(i)(t)
carries the invertible coefficient G'(t).  Everything else (derivatives of
arbitrary elements, the Wronskian matrix, the independence test over K)
reduces to table lookups plus the Leibniz rule.
"""

from __future__ import annotations

from .artinian import Inverse, try_invert
from .errors import NonUnitDerivativePivot, OrderOutOfRange
from .poly import Poly, RatFunc
from .series import binom_mod_p


class DerivTable:
    """tpow[j][b] = D^(b)(t^j) for 0 <= j <= n, 0 <= b < q, plus the inverse
    of G'(t)."""

    __slots__ = ("ring", "tpow", "gprime_inv")

    def __init__(self, ring, tpow, gprime_inv):
        self.ring = ring
        self.tpow = tpow
        self.gprime_inv = gprime_inv

    @property
    def q(self):
        return self.ring.sctx.q

    def d_of_t(self, i):
        """D^(i)(t)."""
        return self.tpow[1][i]


def build_deriv_table(ring, verify=True):
    """Fill the power/derivative table by induction on the order.

    At order i the relation 0 = sum_j sum_{a+b=i} D^(a)(g_j) D^(b)(t^j)
    pins D^(i)(t) with coefficient G'(t), a unit because G0 is separable at
    the place.
    """
    sctx = ring.sctx
    q = sctx.q
    n = ring.n
    p = sctx.field.p
    mod = ring.modulus

    zero = ring.zero()
    one = ring.one()
    t = ring.t_element()

    # plain powers 1, t, ..., t^n (t^n reduced mod the modulus)
    powers = ring.t_powers(n)

    # G'(t)
    gp = [sctx.zero() for _ in range(max(n, 1))]
    for j in range(1, n + 1):
        cj = j % p
        if cj:
            s = mod[j]
            gp[j - 1] = gp[j - 1] + (s if cj == 1 else s.scale(sctx.field.from_int(cj)))
    gprime = ring.from_tp(gp)
    inv_res = try_invert(gprime)
    if not isinstance(inv_res, Inverse):
        raise NonUnitDerivativePivot("G'(t) is not a unit; the place does not satisfy v(disc) = 0")
    gprime_inv = inv_res.value

    # precompute series Hasse derivatives of the modulus coefficients
    mod_hasse = [[mod[j].hasse(a) for a in range(q)] for j in range(n + 1)]

    tpow = [[None] * q for _ in range(n + 1)]
    for j in range(n + 1):
        tpow[j][0] = powers[j]
    for b in range(1, q):
        tpow[0][b] = zero

    for i in range(1, q):
        # Q[j] = D^(i)(t^j) computed with D^(i)(t) set to 0
        Q = [zero, zero]
        for j in range(2, n + 1):
            acc = t * Q[j - 1]
            for c in range(1, i):
                term = tpow[1][c] * tpow[j - 1][i - c]
                acc = acc + term
            Q.append(acc)
        known = zero
        for j in range(n + 1):
            for a in range(1, i + 1):
                ha = mod_hasse[j][a]
                if ha.is_zero():
                    continue
                pw = tpow[j][i - a]
                if not pw.is_zero():
                    known = known + _scale_elem(pw, ha)
            qji = Q[j] if j >= 2 else zero
            if not qji.is_zero():
                known = known + _scale_elem(qji, mod[j])
        d_i = -(gprime_inv * known)
        tpow[1][i] = d_i
        for j in range(2, n + 1):
            cj = j % p
            if cj and not d_i.is_zero():
                corr = powers[j - 1] * d_i
                if cj != 1:
                    corr = _scale_elem(corr, sctx.from_scalar(sctx.field.from_int(cj)))
                tpow[j][i] = Q[j] + corr
            else:
                tpow[j][i] = Q[j]

    table = DerivTable(ring, tpow, gprime_inv)
    if verify:
        _verify_relation(table, mod_hasse)
    return table


def _scale_elem(elem, series):
    return elem.scale(series)


def _verify_relation(table, mod_hasse):
    """Defining certificate: D^(i)(G(t)) = 0 exactly for every i < q."""
    ring = table.ring
    zero = ring.zero()
    n = ring.n
    for i in range(1, table.q):
        acc = zero
        for j in range(n + 1):
            for a in range(0, i + 1):
                ha = mod_hasse[j][a]
                if ha.is_zero():
                    continue
                pw = table.tpow[j][i - a]
                if not pw.is_zero():
                    acc = acc + pw.scale(ha)
        assert acc.is_zero(), f"derivative table violates D^({i})(G(t)) = 0"


def hasse_of_element(table, i, elem):
    """D^(i) of an arbitrary ring element via the Leibniz rule."""
    ring = table.ring
    if i < 0 or i >= table.q:
        raise OrderOutOfRange(f"Hasse order {i} outside [0, {table.q})")
    if i == 0:
        return elem
    acc = ring.zero()
    for j, cj in enumerate(elem.coeffs):
        if cj.is_zero():
            continue
        for a in range(0, i + 1):
            if j == 0 and a < i:
                continue  # D^(b)(1) = 0 for b > 0
            ha = cj.hasse(a)
            if ha.is_zero():
                continue
            pw = table.tpow[j][i - a]
            if not pw.is_zero():
                acc = acc + pw.scale(ha)
    return acc


# -- the Wronskian matrix -----------------------------------------------------


class PhiEntry:
    """One column of Phi: the function h (a rational function over k), the
    power of t it multiplies, and the expansion of h at the place."""

    __slots__ = ("h", "power", "h_series", "label")

    def __init__(self, h, power, h_series, label):
        self.h = h
        self.power = power
        self.h_series = h_series
        self.label = label


class WronskianMatrix:
    __slots__ = ("ring", "table", "entries", "rows")

    def __init__(self, ring, table, entries, rows):
        self.ring = ring
        self.table = table
        self.entries = entries
        self.rows = rows

    @property
    def ncols(self):
        return len(self.entries)

    @property
    def nrows(self):
        return len(self.rows)


def build_wronskian(table, entries):
    """Matrix with rows D^(i)(Phi), i = 0..q-1."""
    ring = table.ring
    q = table.q
    cols = []
    cache_powers = {}
    for e in entries:
        pw = cache_powers.get(e.power)
        if pw is None:
            pw = ring.t_powers(e.power)[-1] if e.power else ring.one()
            cache_powers[e.power] = pw
        cols.append(pw.scale(e.h_series))
    rows = []
    for i in range(q):
        rows.append([hasse_of_element(table, i, c) for c in cols])
    return WronskianMatrix(ring, table, list(entries), rows)


# -- Wronskian independence test over K ----------------------------------------


def hasse_ratfunc(r, i, _memo=None):
    """D^(i) of a rational function over k, exact in K.

    Uses P = f*Q with Leibniz to peel the numerator derivative; polynomial
    Hasse derivatives come straight from the binomial rule.
    """
    if _memo is None:
        _memo = {}
    if i in _memo:
        return _memo[i]
    if i == 0:
        _memo[0] = r
        return r
    num_d = _hasse_poly(r.num, i)
    acc = RatFunc(num_d, r.den)
    for j in range(i):
        dj = hasse_ratfunc(r, j, _memo)
        qd = _hasse_poly(r.den, i - j)
        if qd.is_zero() or dj.is_zero():
            continue
        acc = acc - dj * RatFunc(qd, r.den)
    _memo[i] = acc
    return acc


def _hasse_poly(f, i):
    ctx = f.ctx
    p = ctx.p
    out = []
    for nn in range(i, f.degree + 1):
        b = binom_mod_p(nn, i, p)
        c = f.coeff(nn)
        out.append(c * ctx.from_int(b) if b else ctx.zero())
    return Poly(ctx, out, f.var)


def wronskian_rank_over_K(funcs, order_cap=None):
    """k-dimension of span(funcs), via ranks of Hasse-Wronskian rows over K.

    Returns (rank, orders) where orders is the list of derivative orders at
    which the incremental rank grew (a prefix of the gap sequence).
    """
    if not funcs:
        return 0, []
    if order_cap is None:
        order_cap = sum(f.num.degree + f.den.degree for f in funcs) + len(funcs)
    memos = [{} for _ in funcs]
    basis = []  # rows already reduced, with pivot column index
    orders = []
    rank = 0
    for i in range(order_cap + 1):
        row = [hasse_ratfunc(f, i, memos[c]) for c, f in enumerate(funcs)]
        row = _reduce_row(row, basis)
        piv = _first_nonzero(row)
        if piv is not None:
            inv = row[piv].inv()
            row = [v * inv for v in row]
            basis.append((piv, row))
            orders.append(i)
            rank += 1
            if rank == len(funcs):
                break
    return rank, orders


def _reduce_row(row, basis):
    for piv, brow in basis:
        c = row[piv]
        if not c.is_zero():
            row = [v - c * w for v, w in zip(row, brow)]
    return row


def _first_nonzero(row):
    for idx, v in enumerate(row):
        if not v.is_zero():
            return idx
    return None
