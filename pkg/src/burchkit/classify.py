"""Predicate layer: Burch ideals, weak m-fullness, Loewy calculus.

All functions are generic over the ideal-handle contract from rings.py
and work identically on both backends.  Loewy lengths are integers or
math.inf; record types are small frozen dataclasses so property suites
can assert on individual fields.
"""

import math
from dataclasses import dataclass

INFINITY = math.inf


def _same_ring(i, j):
    if i.ring != j.ring:
        raise ValueError("ambient mismatch")


def _require_proper(i):
    if i.is_unit():
        raise ValueError("unit ideal")


def is_weakly_mfull_wrt(i, j):
    """(I : J) = (mI : mJ)?

    J must be nonzero; a unit J reproduces the plain weakly-m-full test.
    """
    _same_ring(i, j)
    if j.is_zero():
        raise ValueError("colon by the zero ideal")
    m = i.ring.maximal_ideal()
    return i.colon(j) == (m * i).colon(m * j)


def is_weakly_mfull(i):
    """I = (mI : m)?"""
    _require_proper(i)
    m = i.ring.maximal_ideal()
    return i == (m * i).colon(m)


def is_burch(i):
    """(I : m) != (mI : m)?"""
    _require_proper(i)
    m = i.ring.maximal_ideal()
    return i.colon(m) != (m * i).colon(m)


def loewy_length(i):
    """min s with m^s <= I; math.inf when I is not m-primary."""
    return i.loewy_length()


def depth_quotient_positive(i):
    """depth(R/I) > 0, decided by (I : m) = I."""
    _require_proper(i)
    m = i.ring.maximal_ideal()
    return i.colon(m) == i


def _inf_mpow_multiplier(i, j, cap):
    """min s with m^s * J <= I, scanned up to cap; math.inf past it."""
    ring = i.ring
    for s in range(cap + 1):
        if (ring.mpow(s) * j).subset_of(i):
            return s
    return INFINITY


@dataclass(frozen=True)
class ColonLoewyRecord:
    """Both sides of the two colon/Loewy identities.

    First identity: ll(R/(I:J)) = min{s : m^s*J <= I}.
    Second (needs J not inside I):
    ll(R/(I:J)) = ll(R/(I:mJ)) + 1 = ll(R/((I:m):J)) + 1.
    """

    loewy_of_colon: float
    direct_multiplier: float
    first_holds: bool
    second_applicable: bool
    loewy_colon_mj_plus1: float = None
    loewy_nested_plus1: float = None
    second_holds: bool = None
    all_hold: bool = False


def l2_identities(i, j):
    _same_ring(i, j)
    m = i.ring.maximal_ideal()
    c = i.colon(j)
    lhs = c.loewy_length()
    # bounded independent scan; a finite lhs certifies the bound
    cap = int(lhs) + 1 if lhs != INFINITY else int(_default_scan_cap(i))
    rhs = _inf_mpow_multiplier(i, j, cap)
    first = lhs == rhs

    if j.subset_of(i):
        return ColonLoewyRecord(lhs, rhs, first, False, all_hold=first)
    mid = i.colon(m * j).loewy_length() + 1
    nested = i.colon(m).colon(j).loewy_length() + 1
    second = lhs == mid == nested
    return ColonLoewyRecord(
        lhs, rhs, first, True, mid, nested, second, first and second
    )


def _default_scan_cap(i):
    ll = i.loewy_length()
    return ll if ll != INFINITY else 12


def burch_via_loewy(i):
    """ll(R/mI) = ll(R/I) + 1?  A sufficient certificate for Burch.

    Returns None when I is not m-primary.
    """
    if not i.is_m_primary():
        return None
    m = i.ring.maximal_ideal()
    return (m * i).loewy_length() == i.loewy_length() + 1


@dataclass(frozen=True)
class LoewyStepRecord:
    """Three equivalent conditions for an m-primary ideal.

    cond_i: ll(R/mI) = ll(R/I) + 1.
    cond_ii: (I : m^s) = (mI : m^{s+1}) at s = ll(R/I) - 1.
    cond_iii: the same equality for some s in [0, ll(R/I)).
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witness_s: int = None


def l3_equivalence(i):
    if not i.is_m_primary():
        raise ValueError("requires an m-primary ideal")
    ring = i.ring
    m = ring.maximal_ideal()
    ll = i.loewy_length()
    cond_i = (m * i).loewy_length() == ll + 1

    def step_eq(s):
        return i.colon(ring.mpow(s)) == (m * i).colon(ring.mpow(s + 1))

    cond_ii = step_eq(ll - 1)
    witness = None
    for s in range(ll):
        if step_eq(s):
            witness = s
            break
    return LoewyStepRecord(cond_i, cond_ii, witness is not None, witness)


@dataclass(frozen=True)
class SocleColonRecord:
    """wmf w.r.t. (I:m) versus [Burch or depth(R/I) > 0]."""

    wmf_wrt_colon: bool
    burch_or_posdepth: bool


def remark32_equivalence(i):
    _require_proper(i)
    m = i.ring.maximal_ideal()
    k = i.colon(m)
    # the backend colon convention (I : 0) = R makes a zero k harmless
    wmf_colon = i.colon(k) == (m * i).colon(m * k)
    other = is_burch(i) or depth_quotient_positive(i)
    return SocleColonRecord(wmf_colon, other)


@dataclass(frozen=True)
class ScaledWmfRecord:
    """For I = mJ and J <= K <= (I:m): wmf w.r.t. K, and (I:K) = m."""

    applicable: bool
    wmf_wrt_k: bool = None
    colon_equals_m: bool = None

    @property
    def all_hold(self):
        return bool(self.applicable and self.wmf_wrt_k and self.colon_equals_m)


def lemma213_check(j, k):
    _same_ring(j, k)
    ring = j.ring
    m = ring.maximal_ideal()
    i = m * j
    if i.is_zero() or not j.subset_of(k) or not k.subset_of(i.colon(m)):
        return ScaledWmfRecord(False)
    return ScaledWmfRecord(
        True,
        wmf_wrt_k=is_weakly_mfull_wrt(i, k),
        colon_equals_m=(i.colon(k) == m),
    )


def cor214_classify(i):
    """Membership in the four torsion-friendly classes.

    i:   wmf w.r.t. m^s for some s with I <= m^{s+1}
    ii:  weakly m-full
    iii: I = mJ for an m-primary J, decided by I = m(I:m) with (I:m)
         proper (mJ = m(mJ:m) always; conversely (I:m) can only fail to
         be m-primary by being the unit ideal, and m = mJ forces m = 0)
    iv:  I = m^s
    """
    if not i.is_m_primary():
        raise ValueError("requires an m-primary ideal")
    ring = i.ring
    m = ring.maximal_ideal()
    ll = i.loewy_length()
    classes = set()

    for s in range(ll):
        if not i.subset_of(ring.mpow(s + 1)):
            break
        if i.colon(ring.mpow(s)) == (m * i).colon(ring.mpow(s + 1)):
            classes.add("i")
            break
    if is_weakly_mfull(i):
        classes.add("ii")
    k = i.colon(m)
    if not k.is_unit() and i == m * k:
        classes.add("iii")
    if i == ring.mpow(ll):
        classes.add("iv")
    return frozenset(classes)


@dataclass(frozen=True)
class ClassificationReport:
    is_m_primary: bool
    loewy_R_mod_I: float
    loewy_R_mod_mI: float
    is_burch: bool
    is_weakly_mfull: bool
    wmf_wrt_mpow: dict
    wmf_wrt_named: dict
    is_integrally_closed: object
    depth_R_mod_I_positive: bool
    cor214_class: frozenset
    open_pd_question: bool


def classification_report(i, named=()):
    """Aggregate every predicate for one ideal.

    wmf_wrt_mpow covers 0 <= s <= ll(R/I) (capped at 8 past a
    non-m-primary ideal's infinite Loewy length).  Integral closure is
    decided only over a polynomial ring; None elsewhere.
    open_pd_question flags the combination Burch + not weakly m-full +
    m-primary over a positive-depth ring, where Tor-rigidity of R/I is
    not decided either way by the results encoded here.
    """
    _require_proper(i)
    ring = i.ring
    m = ring.maximal_ideal()
    primary = i.is_m_primary()
    ll = i.loewy_length()
    ll_mi = (m * i).loewy_length()
    burch = is_burch(i)
    wmf = is_weakly_mfull(i)

    s_top = ll if ll != INFINITY else 8
    wmf_pows = {}
    for s in range(int(s_top) + 1):
        wmf_pows[s] = i.colon(ring.mpow(s)) == (m * i).colon(ring.mpow(s + 1))

    wmf_named = {}
    for idx, j in enumerate(named):
        label = j.name if j.name is not None else "J%d" % idx
        wmf_named[label] = is_weakly_mfull_wrt(i, j)

    return ClassificationReport(
        is_m_primary=primary,
        loewy_R_mod_I=ll,
        loewy_R_mod_mI=ll_mi,
        is_burch=burch,
        is_weakly_mfull=wmf,
        wmf_wrt_mpow=wmf_pows,
        wmf_wrt_named=wmf_named,
        is_integrally_closed=i.is_integrally_closed(),
        depth_R_mod_I_positive=depth_quotient_positive(i),
        cor214_class=cor214_classify(i) if primary else frozenset(),
        open_pd_question=bool(
            ring.depth_positive() and primary and burch and not wmf
        ),
    )
