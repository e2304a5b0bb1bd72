"""Monomial ideal arithmetic, standard bases, socle, integral closure."""

import random

import oracles
from burchkit.monomial import (
    MonomialIdeal,
    QuotientContext,
    integral_closure,
    is_integrally_closed,
    maximal_ideal,
    min_term_degree_check,
    mpow,
)


def test_minimal_generators_drop_multiples():
    i = MonomialIdeal(2, [(2, 0), (2, 1), (3, 3)])
    assert i.gens == ((2, 0),)
    assert MonomialIdeal(2, []).is_zero()
    assert MonomialIdeal(2, [(0, 0), (1, 0)]).is_unit()


def test_membership_matches_divisibility():
    rng = random.Random(3)
    for _ in range(60):
        nvars, _, igens, _ = oracles.rand_monomial_instance(rng)
        i = MonomialIdeal(nvars, igens)
        for u in oracles.box_monomials((5,) * nvars):
            assert i.member(u) == oracles.brute_member(igens, u)


def test_ops_match_enumeration():
    rng = random.Random(4)
    for _ in range(60):
        nvars, _, igens, jgens = oracles.rand_monomial_instance(rng)
        i = MonomialIdeal(nvars, igens)
        j = MonomialIdeal(nvars, jgens)
        box = oracles.box_monomials((6,) * nvars)
        prod = i * j
        inter = i.intersect(j)
        quot = i.colon(j)
        pgens = oracles.brute_product_gens(igens, jgens)
        for u in box:
            assert prod.member(u) == oracles.brute_member(pgens, u)
            assert inter.member(u) == (
                oracles.brute_member(igens, u) and oracles.brute_member(jgens, u)
            )
            assert quot.member(u) == oracles.brute_colon_member(igens, jgens, u)


def test_colon_known_values():
    # (x^2, y^3) : (x) = (x, y^3)
    i = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert i.colon(MonomialIdeal(2, [(1, 0)])) == MonomialIdeal(2, [(1, 0), (0, 3)])
    # colon by the unit ideal is the ideal itself
    assert i.colon(MonomialIdeal(2, [(0, 0)])) == i


def test_mpow_and_maximal_ideal():
    assert set(maximal_ideal(2).gens) == {(1, 0), (0, 1)}
    assert set(mpow(2, 3).gens) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    assert mpow(3, 0).is_unit()


def test_std_basis_dimensions():
    ctx = QuotientContext(2, mpow(2, 3))
    assert [len(ctx.std_basis(d)) for d in range(4)] == [1, 2, 3, 0]
    assert ctx.is_artinian()
    poly = QuotientContext(2, MonomialIdeal(2, []))
    assert not poly.is_artinian()
    assert len(poly.std_basis(5)) == 6


def test_socle_values():
    ctx = QuotientContext(2, MonomialIdeal(2, [(3, 0), (0, 3)]))
    assert set(ctx.socle()) == {(2, 2)}
    stairs = QuotientContext(2, MonomialIdeal(2, [(3, 0), (1, 2), (0, 3)]))
    # both corners of the staircase survive multiplication by nothing
    assert set(stairs.socle()) == {(2, 1), (0, 2)}
    assert stairs.depth_zero()
    poly = QuotientContext(2, MonomialIdeal(2, []))
    assert not poly.depth_zero()
    assert set(poly.socle()) == set()


def test_integral_closure_known_values():
    # closure of (x^2, y^2) picks up xy
    i = MonomialIdeal(2, [(2, 0), (0, 2)])
    assert integral_closure(i) == MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    # powers of the maximal ideal are closed
    assert is_integrally_closed(mpow(2, 4))
    assert is_integrally_closed(mpow(3, 2))
    # (x^4, y^4) closes to m^4
    j = MonomialIdeal(2, [(4, 0), (0, 4)])
    assert integral_closure(j) == mpow(2, 4)
    assert not is_integrally_closed(j)


def test_integral_closure_properties():
    rng = random.Random(9)
    for _ in range(40):
        nvars, _, igens, _ = oracles.rand_monomial_instance(rng)
        i = MonomialIdeal(nvars, igens)
        c = integral_closure(i)
        assert i.subset_of(c)
        assert is_integrally_closed(c)
        # closure preserves the minimal generator degree
        if not i.is_zero():
            lo = min(sum(g) for g in i.gens)
            assert all(sum(g) >= lo for g in c.gens)


def test_min_term_degree_check():
    assert min_term_degree_check([(4, 4), (17, 16)], 4)
    assert not min_term_degree_check([(4, 3)], 4)
    assert min_term_degree_check([], 10)
