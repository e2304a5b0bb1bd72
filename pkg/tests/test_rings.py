"""Uniform ideal handles over both ring backends."""

import random

import pytest

import oracles
from burchkit.rings import QuotientRing, SemigroupRing


def test_monomial_handles_match_enumeration():
    rng = random.Random(101)
    for _ in range(250):
        assert oracles.check_monomial_instance(rng) == []


def test_semigroup_handles_match_enumeration():
    rng = random.Random(202)
    for _ in range(250):
        assert oracles.check_semigroup_instance(rng) == []


def test_quotient_ring_basics():
    ring = QuotientRing(2, [(3, 0), (2, 1), (1, 2), (0, 3)])
    assert ring.is_artinian()
    assert not ring.depth_positive()
    m = ring.maximal_ideal()
    assert m.is_m_primary()
    assert ring.mpow(3).is_zero()
    assert ring.mpow(0).is_unit()
    assert ring.zero_ideal().loewy_length() == 3

    poly = QuotientRing(2)
    assert not poly.is_artinian()
    assert poly.depth_positive()
    assert poly.zero_ideal().loewy_length() == oracles.INFINITY


def test_semigroup_ring_basics():
    ring = SemigroupRing((4, 5, 6))
    assert not ring.is_regular()
    assert not ring.is_artinian()
    m = ring.maximal_ideal()
    assert set(m.min_gens()) == {4, 5, 6}
    assert set(ring.mpow(2).min_gens()) == {8, 9, 10, 11}
    assert ring.ideal([17, 19, 20]).is_m_primary()
    assert not ring.zero_ideal().is_m_primary()
    assert not ring.unit_ideal().is_m_primary()
    assert SemigroupRing((1,)).is_regular()


def test_subset_and_equality():
    ring = QuotientRing(2)
    i = ring.ideal([(2, 0), (0, 2)])
    j = ring.ideal([(1, 0), (0, 1)])
    assert i.subset_of(j)
    assert not j.subset_of(i)
    assert i != j
    assert i == ring.ideal([(2, 0), (0, 2), (2, 2)])

    sg = SemigroupRing((3, 4, 5))
    a = sg.ideal([6, 7])
    assert a.subset_of(sg.maximal_ideal())
    assert a == sg.ideal([6, 7, 10])


def test_cross_ring_operations_rejected():
    a = QuotientRing(2).ideal([(1, 0)])
    b = QuotientRing(3).ideal([(1, 0, 0)])
    with pytest.raises(ValueError):
        a.colon(b)
    c = SemigroupRing((3, 4, 5)).ideal([3])
    d = SemigroupRing((4, 5, 6)).ideal([4])
    with pytest.raises(ValueError):
        c.intersect(d)


def test_intersect_matches_pairwise_membership():
    rng = random.Random(303)
    for _ in range(60):
        gens, ivals, jvals = oracles.rand_semigroup_instance(rng)
        ring = SemigroupRing(gens)
        i = ring.ideal(ivals)
        j = ring.ideal(jvals)
        inter = i.intersect(j)
        window = max(ivals + jvals) + 2 * ring.S.conductor + 2
        for v in range(window + 1):
            assert inter.member(v) == (i.member(v) and j.member(v))


def test_named_ideals_keep_their_name():
    ring = SemigroupRing((4, 5, 6))
    assert ring.ideal([17], name="I").name == "I"
    assert ring.ideal([17]).name is None
