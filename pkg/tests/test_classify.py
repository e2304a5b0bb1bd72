"""Burch / weakly m-full predicates and the colon-Loewy identities."""

import random

import pytest

from burchkit.classify import (
    burch_via_loewy,
    classification_report,
    cor214_classify,
    depth_quotient_positive,
    is_burch,
    is_weakly_mfull,
    is_weakly_mfull_wrt,
    l2_identities,
    l3_equivalence,
    lemma213_check,
    loewy_length,
    remark32_equivalence,
)
from burchkit.rings import QuotientRing, SemigroupRing

INFINITY = float("inf")


def _random_artinian_ideal(rng):
    n = rng.randint(1, 2)
    defining = [
        tuple(rng.randint(2, 4) if k == v else 0 for k in range(n)) for v in range(n)
    ]
    ring = QuotientRing(n, defining)
    gens = []
    for _ in range(rng.randint(1, 3)):
        mono = tuple(rng.randint(0, 3) for _ in range(n))
        if any(mono):
            gens.append(mono)
    return ring.ideal(gens or [defining[0]])


def _random_semigroup_ideal(rng):
    ring = SemigroupRing(rng.choice([(3, 4, 5), (4, 5, 6), (4, 5, 11), (2, 3)]))
    window = ring.S.conductor + 12
    pool = [v for v in range(1, window) if v in ring.S]
    return ring.ideal(sorted(rng.sample(pool, rng.randint(1, 3))))


def test_square_of_max_ideal_not_weakly_mfull_over_4_5_11():
    ring = SemigroupRing((4, 5, 11))
    m2 = ring.mpow(2)
    assert not is_weakly_mfull(m2)
    # witness: t^11 sits in (m*m^2 : m) but not in m^2
    assert not m2.member(11)
    assert (ring.maximal_ideal() * m2).colon(ring.maximal_ideal()).member(11)


def test_planar_staircase_ideal_is_burch_but_not_weakly_mfull():
    ring = QuotientRing(2)
    i = ring.ideal([(5, 0), (3, 1), (1, 3), (0, 5)])
    assert is_burch(i)
    assert not is_weakly_mfull(i)
    assert is_weakly_mfull_wrt(i, ring.mpow(3))
    assert loewy_length(i) == 5
    assert not depth_quotient_positive(i)


def test_weakly_mfull_wrt_colon_ideal_when_i_is_m_times_j():
    # I = m*J is weakly m-full with respect to every K between J and (I:m)
    ring = QuotientRing(2, [(3, 0), (2, 1), (1, 2), (0, 3)])
    m = ring.maximal_ideal()
    j = ring.ideal([(0, 1)])
    i = m * j
    k = i.colon(m)
    assert is_weakly_mfull_wrt(i, j)
    assert is_weakly_mfull_wrt(i, k)
    rec = lemma213_check(j, k)
    assert rec.applicable
    assert rec.wmf_wrt_k
    assert rec.colon_equals_m
    assert rec.all_hold


def test_integrally_closed_ideals_are_weakly_mfull():
    ring = QuotientRing(2)
    for gens in ([(2, 0), (1, 1), (0, 2)], [(3, 0), (2, 1), (1, 2), (0, 3)]):
        i = ring.ideal(gens)
        assert i.is_integrally_closed()
        assert is_weakly_mfull(i)
        for s in range(4):
            assert is_weakly_mfull_wrt(i, ring.mpow(s))


def test_burch_via_loewy_is_a_sound_certificate():
    # the Loewy step is sufficient for Burch, not equivalent to it
    rng = random.Random(21)
    seen = 0
    for _ in range(60):
        i = _random_artinian_ideal(rng)
        if i.is_unit() or i.is_zero():
            continue
        got = burch_via_loewy(i)
        if got:
            assert is_burch(i)
            seen += 1
    for _ in range(60):
        i = _random_semigroup_ideal(rng)
        if i.is_unit():
            continue
        got = burch_via_loewy(i)
        if got:
            assert is_burch(i)
            seen += 1
    assert seen >= 10
    assert burch_via_loewy(QuotientRing(2).ideal([(2, 0)])) is None


def test_l2_identities_hold_on_random_instances():
    rng = random.Random(22)
    seen = 0
    for _ in range(40):
        i = _random_artinian_ideal(rng)
        ring = i.ring
        gens = []
        for _ in range(rng.randint(1, 2)):
            mono = tuple(rng.randint(0, 2) for _ in range(ring.nvars))
            if any(mono):
                gens.append(mono)
        j = ring.ideal(gens or [(1,) + (0,) * (ring.nvars - 1)])
        if i.is_unit() or i.is_zero() or j.is_zero() or j.is_unit():
            continue
        rec = l2_identities(i, j)
        assert rec.all_hold
        seen += 1
    assert seen >= 10


def test_l3_equivalence_conditions_agree():
    rng = random.Random(23)
    for _ in range(60):
        i = _random_semigroup_ideal(rng)
        rec = l3_equivalence(i)
        assert rec.cond_i == rec.cond_ii == rec.cond_iii


def test_remark32_socle_colon_link():
    rng = random.Random(24)
    for _ in range(60):
        i = _random_artinian_ideal(rng)
        if i.is_unit() or i.is_zero():
            continue
        rec = remark32_equivalence(i)
        assert rec.wmf_wrt_colon == rec.burch_or_posdepth


def test_depth_positive_iff_colon_fixed():
    ring = QuotientRing(2)
    i = ring.ideal([(2, 0)])
    # (x^2) : m = (x^2) in the polynomial ring
    assert depth_quotient_positive(i)
    art = QuotientRing(2, [(2, 0), (0, 2)])
    assert not depth_quotient_positive(art.ideal([(1, 0)]))


def test_weakly_mfull_implies_socle_inside_ideal():
    rng = random.Random(25)
    for _ in range(80):
        i = _random_artinian_ideal(rng)
        if i.is_unit() or i.is_zero() or not is_weakly_mfull(i):
            continue
        soc = i.ring.ideal(list(i.ring.ctx.socle()))
        assert soc.subset_of(i)


def test_unit_and_mismatched_inputs_raise():
    ring = QuotientRing(2)
    with pytest.raises(ValueError):
        is_burch(ring.unit_ideal())
    with pytest.raises(ValueError):
        is_weakly_mfull(ring.unit_ideal())
    with pytest.raises(ValueError):
        is_weakly_mfull_wrt(ring.ideal([(1, 0)]), ring.zero_ideal())
    other = QuotientRing(3)
    with pytest.raises(ValueError):
        is_weakly_mfull_wrt(ring.ideal([(1, 0)]), other.ideal([(1, 0, 0)]))


def test_cor214_classification_is_stable():
    ring = SemigroupRing((4, 5, 6))
    m = ring.maximal_ideal()
    got = cor214_classify(m)
    assert got == cor214_classify(ring.ideal([4, 5, 6]))
    assert isinstance(got, frozenset)
    # classes only make sense for m-primary ideals
    assert cor214_classify(ring.mpow(2)) == cor214_classify(ring.mpow(2))


def test_classification_report_shape():
    ring = SemigroupRing((4, 5, 6))
    i = ring.ideal([17, 19, 20], name="I")
    m4 = ring.mpow(4)
    m4.name = "m4"
    rep = classification_report(i, named=(m4,))
    assert rep.is_burch
    assert not rep.is_weakly_mfull
    assert rep.loewy_R_mod_I == 5
    assert rep.wmf_wrt_mpow[4] is True
    assert rep.wmf_wrt_mpow[3] is False
    assert rep.wmf_wrt_named["m4"] is True
    assert rep.is_m_primary
    poly = QuotientRing(2)
    rep2 = classification_report(poly.ideal([(2, 0)]))
    assert rep2.loewy_R_mod_I == INFINITY
    assert not rep2.is_m_primary
