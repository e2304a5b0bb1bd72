"""Numerical semigroups and their relative (fractional) ideals.

Everything here is exact integer combinatorics.  A semigroup is stored as
its Apery table modulo the smallest generator, a relative ideal as the
unique minimal set of generating valuations.  Products of monomial ideals
of k[[S]] turn into Minkowski sums of these sets, colons into the finite
scan implemented in :func:`relset_colon`.
"""

from __future__ import annotations

import heapq
from functools import reduce
from math import gcd


class NumericalSemigroup:
    """Additive submonoid of the nonnegative integers with finite complement."""

    __slots__ = ("generators", "frobenius", "conductor", "_apery", "_min_gen", "_minimal_gens")

    def __init__(self, generators):
        gens = sorted({int(g) for g in generators})
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise ValueError("gcd of generators must be 1")
        self.generators = tuple(gens)
        self._min_gen = gens[0]
        # Dense reachability is fine for small multiplicity; for large
        # multiplicity the table would be ~min_gen*max_gen entries, so
        # switch to shortest paths on residues mod the smallest generator.
        if self._min_gen > 64:
            self._apery = self._apery_by_shortest_path(gens)
        else:
            self._apery = self._apery_by_table(gens)
        self.frobenius = max(self._apery) - self._min_gen
        self.conductor = self.frobenius + 1
        self._minimal_gens = None

    @staticmethod
    def _apery_by_table(gens):
        a = gens[0]
        # Brauer: the largest gap is below a*max(gens), so every residue
        # class has a member within the table.
        bound = a * gens[-1] + 1
        reach = bytearray(bound)
        reach[0] = 1
        for v in range(1, bound):
            for g in gens:
                if g > v:
                    break
                if reach[v - g]:
                    reach[v] = 1
                    break
        apery = [-1] * a
        found = 0
        for v in range(bound):
            if reach[v] and apery[v % a] < 0:
                apery[v % a] = v
                found += 1
                if found == a:
                    break
        return tuple(apery)

    @staticmethod
    def _apery_by_shortest_path(gens):
        # Dijkstra on residues mod the smallest generator; dist[r] is the
        # least semigroup element congruent to r.
        a = gens[0]
        dist = [None] * a
        dist[0] = 0
        queue = [(0, 0)]
        while queue:
            d, r = heapq.heappop(queue)
            if dist[r] is not None and d > dist[r]:
                continue
            for g in gens[1:]:
                nd, nr = d + g, (r + g) % a
                if dist[nr] is None or nd < dist[nr]:
                    dist[nr] = nd
                    heapq.heappush(queue, (nd, nr))
        return tuple(dist)

    def __contains__(self, v) -> bool:
        return v >= 0 and self._apery[v % self._min_gen] <= v

    def contains(self, v) -> bool:
        return v in self

    def gaps(self):
        return tuple(v for v in range(self.conductor) if v not in self)

    def minimal_generators(self):
        """Generators that are not sums of two nonzero elements."""
        if self._minimal_gens is None:
            kept = []
            for g in self.generators:
                if not any(g - h in self and g != h for h in kept):
                    kept.append(g)
            self._minimal_gens = tuple(kept)
        return self._minimal_gens

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "NumericalSemigroup(%s)" % (list(self.generators),)


class RelativeIdealSet:
    """S-stable set of integers ``{g + s : g in gens, s in S}`` by minimal gens.

    Generators may be negative (fractional sets); the empty set is the
    zero ideal.  Minimal generators are unique, so equality of sets is
    equality of the stored tuples.
    """

    __slots__ = ("ambient", "gens")

    def __init__(self, ambient: NumericalSemigroup, gens, *, minimal=False):
        self.ambient = ambient
        vals = sorted({int(v) for v in gens})
        if not minimal:
            vals = _minimalize(ambient, vals)
        self.gens = tuple(vals)

    def contains(self, v) -> bool:
        return any(v - g in self.ambient for g in self.gens)

    def __contains__(self, v):
        return self.contains(v)

    def is_zero(self) -> bool:
        return not self.gens

    def is_ring(self) -> bool:
        return self.gens == (0,)

    def is_integral(self) -> bool:
        return all(g in self.ambient for g in self.gens)

    def subset_of(self, other: "RelativeIdealSet") -> bool:
        _check_ambient(self, other)
        return all(other.contains(g) for g in self.gens)

    def __add__(self, other: "RelativeIdealSet") -> "RelativeIdealSet":
        """Minkowski sum; this is the product of the corresponding ideals."""
        _check_ambient(self, other)
        if not self.gens or not other.gens:
            return RelativeIdealSet(self.ambient, (), minimal=True)
        sums = {a + b for a in self.gens for b in other.gens}
        return RelativeIdealSet(self.ambient, sums)

    def union(self, other: "RelativeIdealSet") -> "RelativeIdealSet":
        """Set union; this is the sum of the corresponding ideals."""
        _check_ambient(self, other)
        return RelativeIdealSet(self.ambient, self.gens + other.gens)

    def shift(self, c: int) -> "RelativeIdealSet":
        # Adding a constant preserves S-incomparability of the generators.
        return RelativeIdealSet(self.ambient, tuple(g + c for g in self.gens), minimal=True)

    def integral_shift(self) -> int:
        """Least c >= 0 with all generators + c in the ambient semigroup."""
        if not self.gens:
            return 0
        c = max(0, -min(self.gens))
        while not all(g + c in self.ambient for g in self.gens):
            c += 1
        return c

    def __eq__(self, other):
        return (
            isinstance(other, RelativeIdealSet)
            and self.ambient == other.ambient
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ambient, self.gens))

    def __repr__(self):
        return "RelativeIdealSet(%r, %s)" % (self.ambient, list(self.gens))


def _check_ambient(e, f):
    if e.ambient != f.ambient:
        raise ValueError("operands live over different semigroups")


def _minimalize(S, vals):
    kept = []
    for v in vals:  # ascending, so covering generators come first
        if not any(v - g in S for g in kept):
            kept.append(v)
    return kept


def relset_colon(e: RelativeIdealSet, f: RelativeIdealSet) -> RelativeIdealSet:
    """The set ``{z : z + f in e for all f}``, i.e. the colon (E : F).

    F must be nonzero.  Every z > max(gens E) + frobenius - min(gens F)
    belongs: z + f - max(gens E) > frobenius lands in S, so z + f sits in
    max(gens E) + S.  Scanning one conductor past that cutoff is enough to
    recover all minimal generators, because the element just past the
    cutoff covers everything at distance >= conductor beyond it.
    """
    _check_ambient(e, f)
    if f.is_zero():
        raise ValueError("colon by the zero set")
    if e.is_zero():
        return RelativeIdealSet(e.ambient, (), minimal=True)
    S = e.ambient
    lo = min(e.gens) - max(f.gens)
    hi = max(e.gens) + S.frobenius - min(f.gens)
    members = [z for z in range(lo, hi + 1) if all(e.contains(z + g) for g in f.gens)]
    members.extend(range(hi + 1, hi + S.conductor + 2))
    return RelativeIdealSet(S, members)


def restrict_to_semigroup(e: RelativeIdealSet) -> RelativeIdealSet:
    """E intersected with the ambient semigroup.

    Turns the fractional colon into the ring-level colon: the valuations
    of (I :_R J) are exactly {z in S : z + v(J) <= v(I)}.  Everything at
    or past max(gens E) + conductor lies in both E and S, so a bounded
    scan finds all minimal generators.
    """
    S = e.ambient
    if e.is_zero():
        return e
    lo = max(0, min(e.gens))
    hi = max(max(e.gens), 0) + S.conductor
    members = [z for z in range(lo, hi + 1) if z in S and e.contains(z)]
    members.extend(range(hi + 1, hi + S.conductor + 2))
    return RelativeIdealSet(S, members)


def maximal_ideal_set(S: NumericalSemigroup) -> RelativeIdealSet:
    return RelativeIdealSet(S, S.minimal_generators(), minimal=True)


def mpow_set(S: NumericalSemigroup, s: int) -> RelativeIdealSet:
    """The set of valuations of the s-th power of the maximal ideal."""
    if s < 0:
        raise ValueError("negative power")
    if s == 0:
        return RelativeIdealSet(S, (0,), minimal=True)
    m = maximal_ideal_set(S)
    out = m
    for _ in range(s - 1):
        out = out + m
    return out
