"""Gaussian elimination over the Artinian ring with zero-divisor pivot
splitting.

A candidate pivot that is neither a unit nor zero exposes a proper factor
of G0; the ring is split along it, the derivative table and the raw matrix
are rebuilt in each summand, and the row operations performed so far are
reused by projecting the partially reduced matrix and its transform record
into the summands.  Pivot choice is deterministic: columns left to right,
rows top to bottom, first unit wins; if a column has no unit, split on the
first proper zero divisor seen; nilpotent entries are skipped like zeros.
"""

from __future__ import annotations

from .artinian import Inverse, ZeroDivisorWitness, hensel_split, try_invert
from .errors import RankMismatch, SplitDepthExceeded
from .hasse import build_deriv_table, build_wronskian
from .poly import poly_str


class Leaf:
    __slots__ = ("ring", "table", "entries", "matrix", "echelon", "transform", "pivots", "rank")

    def __init__(self, ring, table, entries, matrix, echelon, transform, pivots):
        self.ring = ring
        self.table = table
        self.entries = entries
        self.matrix = matrix
        self.echelon = echelon
        self.transform = transform
        self.pivots = pivots
        self.rank = len(pivots)

    def pivot_cols(self):
        return [c for _, c in self.pivots]


class EliminationOutcome:
    __slots__ = ("leaves", "trace", "splits")

    def __init__(self, leaves, trace, splits):
        self.leaves = leaves
        self.trace = trace
        self.splits = splits


class _State:
    __slots__ = ("ring", "table", "entries", "matrix", "work", "transform", "pivots", "col", "pivot_row")

    def __init__(self, ring, table, entries, matrix, work, transform, pivots, col, pivot_row):
        self.ring = ring
        self.table = table
        self.entries = entries
        self.matrix = matrix
        self.work = work
        self.transform = transform
        self.pivots = pivots
        self.col = col
        self.pivot_row = pivot_row


def eliminate(M, trace=None):
    """Row-reduce M over its ring, splitting as needed; one Leaf per final
    summand, each in reduced row echelon form with unit pivots."""
    ring = M.ring
    q = M.nrows
    ident = _identity(ring, q)
    trace_list = trace if trace is not None else []
    s_bound = ring.n
    splits = 0

    start = _State(ring, M.table, M.entries, [row[:] for row in M.rows],
                   [row[:] for row in M.rows], ident, [], 0, 0)
    leaves = []
    stack = [start]
    while stack:
        st = stack.pop()
        outcome = _advance(st)
        if isinstance(outcome, Leaf):
            leaves.append(outcome)
            trace_list.append({
                "event": "leaf",
                "rank": outcome.rank,
                "pivots": outcome.pivot_cols(),
                "path": outcome.ring.path_str(),
            })
            continue
        # a split request: (column, witness)
        col, h0 = outcome
        splits += 1
        if splits > s_bound:
            raise SplitDepthExceeded(
                f"{splits} splits exceed the summand bound {s_bound}")
        trace_list.append({
            "event": "split",
            "pivot_column": col,
            "h0": poly_str(h0),
            "depth": len(st.ring.path),
        })
        ring_h, ring_e = hensel_split(st.ring, h0)
        for side in (ring_h, ring_e):
            table = build_deriv_table(side)
            raw = build_wronskian(table, st.entries)
            work = [[st.ring.project(e, side) for e in row] for row in st.work]
            transform = [[st.ring.project(e, side) for e in row] for row in st.transform]
            stack.append(_State(side, table, st.entries, raw.rows, work,
                                transform, list(st.pivots), st.col, st.pivot_row))
    leaves.sort(key=lambda lf: lf.ring.path)
    return EliminationOutcome(leaves, trace_list, splits)


def _identity(ring, q):
    one = ring.one()
    zero = ring.zero()
    return [[one if i == j else zero for j in range(q)] for i in range(q)]


def _advance(st):
    """Run elimination until done (returns a Leaf) or until a split is
    needed (returns (column, witness))."""
    q = len(st.work)
    ncols = len(st.work[0]) if q else 0
    while st.col < ncols:
        col = st.col
        unit_row = None
        unit_inv = None
        zdw = None
        for r in range(st.pivot_row, q):
            entry = st.work[r][col]
            res = try_invert(entry)
            if isinstance(res, Inverse):
                unit_row = r
                unit_inv = res.value
                break
            if isinstance(res, ZeroDivisorWitness) and not res.nilpotent and zdw is None:
                zdw = res
        if unit_row is not None:
            pr = st.pivot_row
            if unit_row != pr:
                st.work[pr], st.work[unit_row] = st.work[unit_row], st.work[pr]
                st.transform[pr], st.transform[unit_row] = st.transform[unit_row], st.transform[pr]
            st.work[pr] = [e * unit_inv for e in st.work[pr]]
            st.transform[pr] = [e * unit_inv for e in st.transform[pr]]
            for r in range(q):
                if r == pr:
                    continue
                f = st.work[r][col]
                if f.is_zero():
                    continue
                st.work[r] = [a - f * b for a, b in zip(st.work[r], st.work[pr])]
                st.transform[r] = [a - f * b for a, b in zip(st.transform[r], st.transform[pr])]
            st.pivots.append((pr, col))
            st.pivot_row += 1
        elif zdw is not None:
            return (col, zdw.h0)
        st.col += 1
    return Leaf(st.ring, st.table, st.entries, st.matrix, st.work, st.transform, st.pivots)


# -- solving at rank m ----------------------------------------------------------


class Solution:
    __slots__ = ("u",)

    def __init__(self, u):
        self.u = u


class NormalizationSplit:
    __slots__ = ("h0",)

    def __init__(self, h0):
        self.h0 = h0


class NoSolution:
    __slots__ = ("reason",)

    def __init__(self, reason):
        self.reason = reason


def solve_rank_m(leaf, m):
    """Kernel vector of the leaf matrix with the last (t^r) coordinate
    normalized to 1.

    If the raw kernel vector's t^r coordinate is a proper zero divisor the
    caller must split the ring (NormalizationSplit); if it is nilpotent or
    zero this summand admits no normalized solution.
    """
    if leaf.rank != m:
        raise RankMismatch(f"leaf has rank {leaf.rank}, expected {m}")
    ncols = m + 1
    ring = leaf.ring
    pivot_cols = set(leaf.pivot_cols())
    free = [c for c in range(ncols) if c not in pivot_cols]
    assert len(free) == 1
    free = free[0]
    v = [None] * ncols
    v[free] = ring.one()
    for row, col in leaf.pivots:
        v[col] = -leaf.echelon[row][free]
    if free != ncols - 1:
        w = v[ncols - 1]
        res = try_invert(w)
        if isinstance(res, Inverse):
            v = [vi * res.value for vi in v]
        elif isinstance(res, ZeroDivisorWitness) and not res.nilpotent:
            return NormalizationSplit(res.h0)
        else:
            return NoSolution("t^r coordinate of the kernel vector is nilpotent or zero")
    # exact certificate against the unreduced matrix
    for row in leaf.matrix:
        acc = ring.zero()
        for c in range(ncols):
            acc = acc + row[c] * v[c]
        if not acc.is_zero():
            return NoSolution("kernel residual is nonzero in this summand")
    return Solution(v)


def verify_transform(leaf):
    """transform * matrix == echelon, exactly (test helper)."""
    ring = leaf.ring
    q = len(leaf.matrix)
    ncols = len(leaf.matrix[0]) if q else 0
    for i in range(q):
        for j in range(ncols):
            acc = ring.zero()
            for k in range(q):
                acc = acc + leaf.transform[i][k] * leaf.matrix[k][j]
            if not (acc == leaf.echelon[i][j]):
                return False
    return True
