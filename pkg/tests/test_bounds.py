import random

import pytest

from kxfactor.bounds import (
    SubspaceSpec,
    compute_delta,
    default_subspaces,
    find_place,
    lemma_degree_bounds,
    place_from_alpha,
    q_power,
    validate_place,
)
from kxfactor.errors import PlaceInvalid, SubspaceSpecError
from kxfactor.fields import parse_field
from kxfactor.parse import parse_ratfunc, parse_tpoly
from kxfactor.poly import Poly, RatFunc, TPoly

F2 = parse_field("GF(2)")
GP_SRC = "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)"


def test_delta_worked_example():
    g = parse_tpoly(GP_SRC, F2)
    assert compute_delta(g, 1) == 1
    # with m = 2 this forces q = 4
    assert q_power(2, max(2, 1)) == 4


def test_delta_constant_coefficients():
    g = parse_tpoly("T^3+T+1", F2)
    assert compute_delta(g, 1) == 0


def test_delta_finite_place_contribution():
    x = parse_ratfunc("x", F2)
    one = RatFunc.from_int(F2, 1)
    g = TPoly(F2, [one, one / x, one])  # T^2 + (1/x) T + 1
    assert compute_delta(g, 1) == 1


def test_delta_invariant_under_clearing_denominators():
    rng = random.Random(15)
    F3 = parse_field("GF(3)")
    x = Poly.x(F3)
    for _ in range(30):
        # random monic cubic with a shared denominator on the lower coeffs
        den = Poly(F3, [F3.random_element(rng) for _ in range(2)] + [F3.one()], "x")
        coeffs = []
        for _ in range(3):
            num = Poly(F3, [F3.random_element(rng) for _ in range(3)], "x")
            coeffs.append(RatFunc(num, den))
        g = TPoly(F3, coeffs + [RatFunc.from_int(F3, 1)])
        if g.degree != 3:
            continue
        d1 = compute_delta(g, 1)
        # same polynomial with every coefficient scaled by den/den (no-op
        # after reduction): delta must be reproducible
        g2 = TPoly(F3, [RatFunc(c.num * den, c.den * den) for c in g.coeffs])
        assert compute_delta(g2, 1) == d1


def test_default_subspaces_worked_example():
    g = parse_tpoly(GP_SRC, F2)
    spec = default_subspaces(g, 1)
    assert spec.basis_strings() == [["1", "x"]]
    assert spec.m == 2
    spec2 = default_subspaces(g, 2)
    assert spec2.basis_strings() == [["1", "x", "x^2"], ["1", "x"]]


def test_default_subspaces_high_degree_coefficient():
    g = parse_tpoly("T^2 + x^3*T + x", F2)
    spec = default_subspaces(g, 1)
    assert spec.basis_strings() == [["1", "x", "x^2", "x^3"]]
    assert lemma_degree_bounds(g, 1) == [3]


def test_default_subspaces_rational_coefficients():
    x = parse_ratfunc("x", F2)
    one = RatFunc.from_int(F2, 1)
    g = TPoly(F2, [one, one / x, one])
    spec = default_subspaces(g, 1)
    # allowed pole of order 1 at x: span {1, 1/x}
    strs = spec.basis_strings()[0]
    assert strs[0] == "1"
    assert "1/x" in strs
    assert len(strs) == 2


def test_subspace_spec_validation():
    one = RatFunc.from_int(F2, 1)
    x = parse_ratfunc("x", F2)
    with pytest.raises(SubspaceSpecError):
        SubspaceSpec(1, [[x]])  # missing the constant 1
    with pytest.raises(SubspaceSpecError):
        SubspaceSpec(1, [[one, x, x + one]])  # dependent basis
    spec = SubspaceSpec(1, [[x, one]])  # 1 moved to front
    assert spec.basis_strings() == [["1", "x"]]


def test_find_place_worked_example():
    g = parse_tpoly(GP_SRC, F2)
    place = find_place(g)
    assert place.ell.label() == "GF(2)"
    assert place.alpha == F2.one()
    assert place.degree == 1
    validate_place(g, place)


def test_find_place_rejects_alpha_zero_for_worked_example():
    # disc = x^4 vanishes at 0, so alpha = 0 cannot carry the computation
    g = parse_tpoly(GP_SRC, F2)
    place0 = place_from_alpha(F2, F2, F2.zero())
    with pytest.raises(PlaceInvalid):
        validate_place(g, place0)


def test_find_place_obstruction_family_needs_degree_three():
    # T^2 + (x^4+x) T + 1: the discriminant vanishes on all of F4
    g = parse_tpoly("T^2 + (x^4+x)*T + 1", F2)
    place = find_place(g)
    assert place.degree == 3
    assert place.ell.d == 3
    assert place.min_poly.degree == 3
    validate_place(g, place)


def test_find_place_constant_discriminant():
    g = parse_tpoly("T^2+T+x", F2)  # disc = 1
    place = find_place(g)
    assert place.alpha == F2.zero()
    assert place.degree == 1


def test_find_place_inseparable_rejected():
    g = parse_tpoly("T^2+x", F2)
    with pytest.raises(PlaceInvalid):
        find_place(g)


def test_place_min_poly():
    F4 = parse_field("GF(4)")
    from kxfactor.fields import extension_of

    ell = extension_of(F2, 2)
    z = ell.gen()
    place = place_from_alpha(F2, ell, z)
    assert place.degree == 2
    # min poly of the F4 generator over F2 is x^2+x+1
    assert [c.coeffs[0] for c in place.min_poly.coeffs] == [1, 1, 1]


def test_q_power():
    assert q_power(2, 1) == 2
    assert q_power(2, 2) == 4
    assert q_power(2, 4) == 8
    assert q_power(3, 3) == 9
    assert q_power(5, 5) == 25


def test_bounds_report():
    from kxfactor.bounds import bounds_report

    g = parse_tpoly(GP_SRC, F2)
    rep = bounds_report(g, 1, 2)
    assert rep.delta == 1
    assert rep.q == 4
    assert rep.m == 2
    assert rep.coeff_bounds == [1]
    rep2 = bounds_report(g, 2, 5)
    assert rep2.coeff_bounds == [2, 1]
    assert rep2.q == 8


def test_lemma_bounds_cover_real_factor_coefficients():
    # every factor the exhaustive search finds has coefficients inside the
    # default subspace spans (the valuation bound made testable)
    from corpus import random_separable

    from kxfactor.hasse import wronskian_rank_over_K
    from kxfactor.oracle import _lemma_bounds, oracle_factor

    rng = random.Random(88)
    checked = 0
    for spec_field in ("GF(2)", "GF(3)"):
        ctx = parse_field(spec_field)
        for _ in range(12):
            s = rng.choice([2, 3])
            g = random_separable(ctx, rng, s, 2)
            hits = oracle_factor(g, 1, _lemma_bounds(g, 1))
            if not hits:
                continue
            spec = default_subspaces(g, 1)
            basis = spec.spaces[0]
            for h in hits:
                b0 = h.coeff(0)
                if b0.is_zero():
                    continue
                rank, _ = wronskian_rank_over_K(basis + [b0])
                assert rank == len(basis)
                checked += 1
    assert checked > 0


def test_validate_place_integrality():
    x = parse_ratfunc("x", F2)
    one = RatFunc.from_int(F2, 1)
    g = TPoly(F2, [one, one / x, one])
    place0 = place_from_alpha(F2, F2, F2.zero())
    with pytest.raises(PlaceInvalid):
        validate_place(g, place0)
    place1 = place_from_alpha(F2, F2, F2.one())
    validate_place(g, place1)
