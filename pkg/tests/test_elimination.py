import random

import pytest

from kxfactor.artinian import ArtinRing, hensel_split
from kxfactor.elimination import (
    NoSolution,
    NormalizationSplit,
    Solution,
    eliminate,
    solve_rank_m,
    verify_transform,
)
from kxfactor.errors import RankMismatch
from kxfactor.fields import parse_field
from kxfactor.hasse import PhiEntry, build_deriv_table, build_wronskian
from kxfactor.parse import parse_ratfunc, parse_tpoly
from kxfactor.series import SeriesCtx, expand_at_place

F2 = parse_field("GF(2)")
GP_SRC = "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)"


def _sctx(q=4, alpha=1):
    return SeriesCtx(F2, q, F2.from_int(alpha))


def _phi_r1(sctx):
    one = parse_ratfunc("1", F2)
    x = parse_ratfunc("x", F2)
    return [
        PhiEntry(one, 0, expand_at_place(one, sctx), "h[0][1]"),
        PhiEntry(x, 0, expand_at_place(x, sctx), "h[0][2]"),
        PhiEntry(one, 1, sctx.one(), "t^1"),
    ]


def test_elimination_splits_on_second_derivative():
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    table = build_deriv_table(ring)
    m = build_wronskian(table, _phi_r1(sctx))
    trace = []
    out = eliminate(m, trace)
    # the t-column's D^(2) entry exposes gcd(G0, .) = T^2+T
    splits = [t for t in trace if t["event"] == "split"]
    assert splits and splits[0]["h0"] == "T^2+T"
    assert splits[0]["pivot_column"] == 2
    assert out.splits <= ring.n
    ranks = sorted(leaf.rank for leaf in out.leaves)
    assert ranks == [2, 3]
    for leaf in out.leaves:
        assert verify_transform(leaf)


def test_split_ring_leaf_rank_two():
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly("T^2+T+x^2+x", F2), sctx)
    table = build_deriv_table(ring)
    m = build_wronskian(table, _phi_r1(sctx))
    out = eliminate(m)
    assert len(out.leaves) == 1
    leaf = out.leaves[0]
    assert leaf.rank == 2
    assert leaf.pivot_cols() == [0, 1]
    assert verify_transform(leaf)
    res = solve_rank_m(leaf, 2)
    assert isinstance(res, Solution)
    b, a, last = res.u
    assert last == leaf.ring.one()
    assert a == leaf.ring.one()  # a = D(t) = 1
    # b = t + x at the place
    xs = leaf.ring.from_series(expand_at_place(parse_ratfunc("x", F2), sctx))
    assert b == leaf.ring.t_element() + xs
    # solution certificate: M u = 0 exactly
    for row in leaf.matrix:
        acc = leaf.ring.zero()
        for c, uc in zip(row, res.u):
            acc = acc + c * uc
        assert acc.is_zero()


def test_all_zero_matrix():
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly("T^2+T+x^2+x", F2), sctx)
    table = build_deriv_table(ring)
    m = build_wronskian(table, _phi_r1(sctx))
    for i in range(m.nrows):
        for j in range(m.ncols):
            m.rows[i][j] = ring.zero()
    out = eliminate(m)
    assert len(out.leaves) == 1
    assert out.leaves[0].rank == 0
    assert out.splits == 0


def test_solve_rank_mismatch():
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly("T^2+T+x^2+x", F2), sctx)
    table = build_deriv_table(ring)
    m = build_wronskian(table, _phi_r1(sctx))
    out = eliminate(m)
    with pytest.raises(RankMismatch):
        solve_rank_m(out.leaves[0], 3)


def test_trivial_kernel_passthrough():
    # a leaf whose kernel vector is already normalized returns unchanged:
    # engineered via the split quadratic ring with Phi = (1, t)
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly("T^2+T+x^2+x", F2), sctx)
    table = build_deriv_table(ring)
    one = parse_ratfunc("1", F2)
    entries = [PhiEntry(one, 0, sctx.one(), "h[0][1]"), PhiEntry(one, 1, sctx.one(), "t^1")]
    m = build_wronskian(table, entries)
    out = eliminate(m)
    # D(t) = 1 != 0 so rank is 2 (full) here: no kernel at rank m=1
    assert out.leaves[0].rank == 2


def test_solve_normalization_split_and_nilpotent():
    # engineered leaves where the kernel's t^r coordinate is a proper zero
    # divisor (split requested) or nilpotent (summand yields nothing)
    from kxfactor.elimination import Leaf

    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    table = build_deriv_table(ring)
    t = ring.t_element()
    zero, one = ring.zero(), ring.one()

    def leaf_with_corner(entry):
        # rank 1 on 2 columns, pivot in the t^r column; kernel = (1, -entry)
        ech = [[entry, one]] + [[zero, zero] for _ in range(3)]
        raw = [row[:] for row in ech]
        transform = [[one if i == j else zero for j in range(4)] for i in range(4)]
        return Leaf(ring, table, [], raw, ech, transform, [(0, 1)])

    res = solve_rank_m(leaf_with_corner(-t), 1)
    assert isinstance(res, NormalizationSplit)
    from kxfactor.poly import poly_str

    assert poly_str(res.h0) == "T"

    nil = one.scale(sctx.from_coeffs([F2.zero(), F2.one()]))  # X * 1
    res = solve_rank_m(leaf_with_corner(-nil), 1)
    assert isinstance(res, NoSolution)


def test_split_soundness_projection_injectivity():
    rng = random.Random(51)
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    from kxfactor.poly import Poly

    rh, re = hensel_split(ring, Poly.from_ints(F2, [0, 1, 1], "T"))
    for _ in range(60):
        a = ring.from_tp([sctx.from_coeffs([F2.random_element(rng) for _ in range(4)]) for _ in range(4)])
        if a.is_zero():
            continue
        assert not (ring.project(a, rh).is_zero() and ring.project(a, re).is_zero())


def test_projected_matrix_agrees_with_recomputed():
    # recomputing the raw Wronskian in a summand equals projecting the
    # parent's raw matrix: the derivative operators commute with splitting
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    table = build_deriv_table(ring)
    phi = _phi_r1(sctx)
    m = build_wronskian(table, phi)
    from kxfactor.poly import Poly

    rh, re = hensel_split(ring, Poly.from_ints(F2, [0, 1, 1], "T"))
    for side in (rh, re):
        side_table = build_deriv_table(side)
        side_m = build_wronskian(side_table, phi)
        for i in range(m.nrows):
            for j in range(m.ncols):
                assert side_m.rows[i][j] == ring.project(m.rows[i][j], side)


def test_leaf_count_bounded_by_degree():
    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    table = build_deriv_table(ring)
    out = eliminate(build_wronskian(table, _phi_r1(sctx)))
    assert len(out.leaves) <= ring.n


def test_leaf_moduli_multiply_to_root_modulus():
    from kxfactor.artinian import _tp_mul

    sctx = _sctx()
    ring = ArtinRing.from_tpoly(parse_tpoly(GP_SRC, F2), sctx)
    table = build_deriv_table(ring)
    out = eliminate(build_wronskian(table, _phi_r1(sctx)))
    assert len(out.leaves) == 2
    prod = [sctx.one()]
    for leaf in out.leaves:
        prod = _tp_mul(prod, list(leaf.ring.modulus), sctx)
    assert prod == list(ring.modulus)
