"""Ideal handles over the two ring backends.

The predicate layer needs only a small contract from an ideal: colon,
product, sum, comparison, subset, m-primariness, and Loewy length, plus
access to the ambient ring's maximal-ideal powers.  QuotientRing/QIdeal
implement the contract for monomial quotients of polynomial rings,
SemigroupRing/SgIdeal for numerical semigroup rings.  Everything is
immutable and value-compared.

Colon here is always the ring-level colon (I : J) = {x in R : xJ <= I}.
Colon by the zero ideal returns the unit ideal.
"""

import math

from .monomial import (
    MonomialIdeal,
    QuotientContext,
    integral_closure,
    maximal_ideal,
    mpow,
)
from .semigroup import (
    NumericalSemigroup,
    RelativeIdealSet,
    maximal_ideal_set,
    mpow_set,
    relset_colon,
    restrict_to_semigroup,
)

INFINITY = math.inf


class QuotientRing:
    """k[x_1..x_n] / A for a proper monomial ideal A (A may be zero)."""

    backend = "polynomial-quotient"
    __slots__ = ("ctx",)

    def __init__(self, nvars, defining_gens=()):
        defining = MonomialIdeal(nvars, defining_gens)
        self.ctx = QuotientContext(nvars, defining)

    @property
    def nvars(self):
        return self.ctx.nvars

    @property
    def defining(self):
        return self.ctx.defining

    def ideal(self, gens, name=None):
        return QIdeal(self, gens, name=name)

    def zero_ideal(self):
        return QIdeal(self, ())

    def unit_ideal(self):
        return QIdeal(self, ((0,) * self.nvars,))

    def maximal_ideal(self):
        return QIdeal(self, maximal_ideal(self.nvars).gens)

    def mpow(self, s):
        if s < 0:
            raise ValueError("negative power")
        return QIdeal(self, mpow(self.nvars, s).gens)

    def depth_positive(self):
        return not self.ctx.depth_zero()

    def is_regular(self):
        return self.defining.is_zero()

    def is_artinian(self):
        return self.ctx.is_artinian()

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.ctx == other.ctx

    def __hash__(self):
        return hash(self.ctx)

    def __repr__(self):
        return "QuotientRing(%d, %r)" % (self.nvars, list(self.defining.gens))


class QIdeal:
    """Ideal of a QuotientRing, stored as a polynomial-ring representative.

    The representative always contains the defining ideal; two handles
    are equal iff the representatives have the same minimal generators.
    """

    __slots__ = ("ring", "rep", "name")

    def __init__(self, ring, gens, name=None):
        self.ring = ring
        if isinstance(gens, MonomialIdeal):
            gens = gens.gens
        self.rep = MonomialIdeal(ring.nvars, tuple(gens) + ring.defining.gens)
        self.name = name

    # containment of a monomial, as an element of R
    def member(self, v):
        return self.rep.member(v)

    def is_zero(self):
        return self.rep == self.ring.defining

    def is_unit(self):
        return self.rep.is_unit()

    def is_proper(self):
        return not self.rep.is_unit()

    def subset_of(self, other):
        self._check(other)
        return self.rep.subset_of(other.rep)

    def __add__(self, other):
        self._check(other)
        return QIdeal(self.ring, self.rep + other.rep)

    def __mul__(self, other):
        self._check(other)
        return QIdeal(self.ring, self.rep * other.rep)

    def intersect(self, other):
        self._check(other)
        return QIdeal(self.ring, self.rep.intersect(other.rep))

    def colon(self, other):
        self._check(other)
        if other.rep.is_zero():
            return self.ring.unit_ideal()
        return QIdeal(self.ring, self.rep.colon(other.rep))

    def min_gens(self):
        """Minimal generators of the ideal inside R.

        A minimal generator of the representative survives exactly when
        it lies outside the defining ideal.
        """
        a = self.ring.defining
        return tuple(g for g in self.rep.gens if not a.member(g))

    def is_m_primary(self):
        # R/I is Artinian iff the representative traps a pure power of
        # every variable; unit ideals are excluded by convention.
        if self.is_unit():
            return False
        n = self.ring.nvars
        seen = [False] * n
        for g in self.rep.gens:
            support = [i for i in range(n) if g[i] > 0]
            if len(support) == 1:
                seen[support[0]] = True
        return all(seen)

    def _pure_power_bound(self):
        n = self.ring.nvars
        best = [None] * n
        for g in self.rep.gens:
            support = [i for i in range(n) if g[i] > 0]
            if len(support) == 1:
                i = support[0]
                if best[i] is None or g[i] < best[i]:
                    best[i] = g[i]
        return best

    def loewy_length(self):
        """min s with m^s <= I, or infinity when I is not m-primary.

        For m-primary I with x_i^{b_i} in the representative, any
        monomial of total degree sum(b_i - 1) + 1 has some exponent at
        least b_i, so the scan below is certified to stop.
        """
        if self.is_unit():
            return 0
        if not self.is_m_primary():
            return INFINITY
        bound = sum(b - 1 for b in self._pure_power_bound()) + 1
        for s in range(bound + 1):
            if mpow(self.ring.nvars, s).subset_of(self.rep):
                return s
        raise AssertionError("certified Loewy bound failed")

    def is_integrally_closed(self):
        """Only meaningful over the polynomial ring itself."""
        if not self.ring.defining.is_zero():
            return None
        return integral_closure(self.rep) == self.rep

    def _check(self, other):
        if not isinstance(other, QIdeal) or other.ring != self.ring:
            raise ValueError("ambient mismatch")

    def __eq__(self, other):
        if not isinstance(other, QIdeal):
            return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __repr__(self):
        return "QIdeal(%r)" % (list(self.min_gens()),)


class SemigroupRing:
    """Numerical semigroup ring k[[t^a : a in S]] for S = <generators>."""

    backend = "semigroup-ring"
    __slots__ = ("S",)

    def __init__(self, generators):
        self.S = NumericalSemigroup(generators)

    def ideal(self, vals, name=None):
        return SgIdeal(self, vals, name=name)

    def zero_ideal(self):
        return SgIdeal(self, ())

    def unit_ideal(self):
        return SgIdeal(self, (0,))

    def maximal_ideal(self):
        return SgIdeal(self, maximal_ideal_set(self.S).gens)

    def mpow(self, s):
        if s < 0:
            raise ValueError("negative power")
        return SgIdeal(self, mpow_set(self.S, s).gens)

    def depth_positive(self):
        # one-dimensional domain, depth 1
        return True

    def is_regular(self):
        return self.S.conductor == 0

    def is_artinian(self):
        return False

    def __eq__(self, other):
        if not isinstance(other, SemigroupRing):
            return NotImplemented
        return self.S == other.S

    def __hash__(self):
        return hash(self.S)

    def __repr__(self):
        return "SemigroupRing(%r)" % (list(self.S.generators),)


class SgIdeal:
    """Monomial ideal of a semigroup ring, stored by its value set."""

    __slots__ = ("ring", "relset", "name")

    def __init__(self, ring, vals, name=None):
        self.ring = ring
        if isinstance(vals, RelativeIdealSet):
            vals = vals.gens
        for v in vals:
            if v not in ring.S:
                raise ValueError("value %d is not in the semigroup" % v)
        self.relset = RelativeIdealSet(ring.S, vals)
        self.name = name

    def member(self, v):
        return v in self.relset

    def is_zero(self):
        return self.relset.is_zero()

    def is_unit(self):
        return self.relset.is_ring()

    def is_proper(self):
        return not self.is_unit()

    def subset_of(self, other):
        self._check(other)
        return self.relset.subset_of(other.relset)

    def __add__(self, other):
        self._check(other)
        return SgIdeal(self.ring, self.relset.union(other.relset))

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero_ideal()
        return SgIdeal(self.ring, self.relset + other.relset)

    def intersect(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero_ideal()
        S = self.ring.S
        # both value sets contain everything from max(gens) + conductor
        # on; one extra least-generator stride certifies the window
        hi = (
            max(max(self.relset.gens), max(other.relset.gens))
            + S.conductor
            + S.generators[0]
        )
        vals = [
            v
            for v in range(hi + 1)
            if v in self.relset and v in other.relset
        ]
        return SgIdeal(self.ring, vals)

    def colon(self, other):
        self._check(other)
        if other.is_zero():
            return self.ring.unit_ideal()
        if self.is_zero():
            # annihilator of a nonzero ideal in a domain
            return self.ring.zero_ideal()
        frac = relset_colon(self.relset, other.relset)
        return SgIdeal(self.ring, restrict_to_semigroup(frac))

    def min_gens(self):
        return self.relset.gens

    def is_m_primary(self):
        # every nonzero proper ideal of a one-dimensional local domain
        return not self.is_zero() and not self.is_unit()

    def loewy_length(self):
        """min s with m^s <= I, or infinity when I is zero.

        Every value of m^s is at least s*a for the smallest generator a,
        and I contains all semigroup values from max(gens) + conductor
        on, so the scan stops by (max(gens) + conductor) // a + 1.
        """
        if self.is_unit():
            return 0
        if self.is_zero():
            return INFINITY
        S = self.ring.S
        a = S.generators[0]
        bound = (max(self.relset.gens) + S.conductor) // a + 1
        for s in range(bound + 1):
            if mpow_set(S, s).subset_of(self.relset):
                return s
        raise AssertionError("certified Loewy bound failed")

    def is_integrally_closed(self):
        return None

    def _check(self, other):
        if not isinstance(other, SgIdeal) or other.ring != self.ring:
            raise ValueError("ambient mismatch")

    def __eq__(self, other):
        if not isinstance(other, SgIdeal):
            return NotImplemented
        return self.ring == other.ring and self.relset == other.relset

    def __hash__(self):
        return hash((self.ring, self.relset))

    def __repr__(self):
        return "SgIdeal(%r)" % (list(self.relset.gens),)
