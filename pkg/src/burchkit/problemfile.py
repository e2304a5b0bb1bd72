"""Line-oriented input format for rings, ideals, and module presentations.

Grammar, one statement per line, '#' starts a comment:

    field GF(<prime>)
    ring <name> = poly(<var>[, <var>...]) [mod [<monomial>, ...]]
    ring <name> = semigroup(<int>[, <int>...])
    ideal <name> in <ring> = [<monomial or valuation>, ...]
    module <name> in <ring> = coker rows=<r> cols=<c>
        entries=[(i,j,<monomial>), ...] shifts=[...]

Monomials look like x^2*y; the literal 1 is the unit monomial.  Over a
semigroup ring, ideal generators and matrix entries are valuations.
Matrix indices are 1-based; shifts list the degrees of the <r> target
generators and column degrees are inferred from the entries.  Every
error carries the 1-based line number of the offending statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .homalg import (
    DEFAULT_PRIME,
    GradedAlgebra,
    GradedFreeModule,
    GradedPresentation,
    HomogeneousMap,
    free_presentation,
)
from .rings import QuotientRing, SemigroupRing


class ProblemFileError(ValueError):
    """Parse or resolution failure, tagged with the source line."""

    def __init__(self, line, message):
        super().__init__("line %d: %s" % (line, message))
        self.line = line
        self.message = message


_NAME = r"[A-Za-z_]\w*"
_FIELD_RE = re.compile(r"^field\s+GF\(\s*(\d+)\s*\)$")
_RING_POLY_RE = re.compile(
    r"^ring\s+(%s)\s*=\s*poly\(([^()]*)\)(?:\s+mod\s+\[(.*)\])?$" % _NAME
)
_RING_SG_RE = re.compile(r"^ring\s+(%s)\s*=\s*semigroup\(([^()]*)\)$" % _NAME)
_IDEAL_RE = re.compile(r"^ideal\s+(%s)\s+in\s+(%s)\s*=\s*\[(.*)\]$" % (_NAME, _NAME))
_MODULE_RE = re.compile(
    r"^module\s+(%s)\s+in\s+(%s)\s*=\s*coker\s+rows=(\d+)\s+cols=(\d+)"
    r"\s+entries=\[(.*)\]\s+shifts=\[(.*)\]$" % (_NAME, _NAME)
)
_FACTOR_RE = re.compile(r"(%s)(?:\^(\d+))?$" % _NAME)
_ENTRY_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*,\s*([^()]+?)\s*\)$")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _split_items(text):
    """Top-level comma split, ignoring commas inside parentheses."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        cur.append(ch)
    items.append("".join(cur))
    return [s.strip() for s in items if s.strip()]


def _parse_monomial(text, varindex, line):
    text = text.strip()
    if text == "1":
        return (0,) * len(varindex)
    expo = [0] * len(varindex)
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if m is None:
            raise ProblemFileError(line, "bad monomial factor: %r" % factor.strip())
        name, power = m.group(1), m.group(2)
        if name not in varindex:
            raise ProblemFileError(line, "unknown variable: %s" % name)
        expo[varindex[name]] += int(power) if power is not None else 1
    return tuple(expo)


def _parse_int(text, line, what):
    if not re.fullmatch(r"-?\d+", text):
        raise ProblemFileError(line, "%s must be an integer: %r" % (what, text))
    return int(text)


@dataclass
class ParsedProblem:
    """Resolved declarations from one problem file."""

    prime: int = DEFAULT_PRIME
    rings: dict = field(default_factory=dict)
    ring_vars: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    ideal_ring: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    module_ring: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)

    def algebra_for(self, ring_name):
        got = self.algebras.get(ring_name)
        if got is None:
            got = GradedAlgebra(self.rings[ring_name], self.prime)
            self.algebras[ring_name] = got
        return got

    def get_ideal(self, name):
        if name not in self.ideals:
            raise ValueError("unknown ideal: %s" % name)
        return self.ideals[name]

    def get_module(self, name):
        if name not in self.modules:
            raise ValueError("unknown module: %s" % name)
        return self.modules[name]


def parse_problem(text):
    """Parse and resolve the whole file; raises ProblemFileError."""
    prob = ParsedProblem()
    field_line = None
    saw_decl = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stmt = raw.split("#", 1)[0].strip()
        if not stmt:
            continue
        head = stmt.split(None, 1)[0]
        if head == "field":
            if field_line is not None:
                raise ProblemFileError(lineno, "duplicate field declaration")
            if saw_decl:
                raise ProblemFileError(
                    lineno, "field must be declared before any ring"
                )
            m = _FIELD_RE.match(stmt)
            if m is None:
                raise ProblemFileError(lineno, "bad field declaration")
            p = int(m.group(1))
            if not _is_prime(p):
                raise ProblemFileError(lineno, "%d is not prime" % p)
            prob.prime = p
            field_line = lineno
            continue
        saw_decl = True
        if head == "ring":
            _parse_ring(prob, stmt, lineno)
        elif head == "ideal":
            _parse_ideal(prob, stmt, lineno)
        elif head == "module":
            _parse_module(prob, stmt, lineno)
        else:
            raise ProblemFileError(lineno, "unrecognized statement: %r" % head)
    return prob


def load_problem(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _parse_ring(prob, stmt, lineno):
    m = _RING_POLY_RE.match(stmt)
    if m is not None:
        name, varpart, modpart = m.group(1), m.group(2), m.group(3)
        if name in prob.rings:
            raise ProblemFileError(lineno, "duplicate ring name: %s" % name)
        varnames = _split_items(varpart)
        if not varnames:
            raise ProblemFileError(lineno, "poly ring needs at least one variable")
        for v in varnames:
            if not re.fullmatch(_NAME, v):
                raise ProblemFileError(lineno, "bad variable name: %r" % v)
        if len(set(varnames)) != len(varnames):
            raise ProblemFileError(lineno, "repeated variable name")
        varindex = {v: k for k, v in enumerate(varnames)}
        defining = []
        if modpart is not None:
            for item in _split_items(modpart):
                expo = _parse_monomial(item, varindex, lineno)
                if not any(expo):
                    raise ProblemFileError(
                        lineno, "defining monomial must not be a unit"
                    )
                defining.append(expo)
        try:
            ring = QuotientRing(len(varnames), defining)
        except ValueError as exc:
            raise ProblemFileError(lineno, str(exc)) from exc
        prob.rings[name] = ring
        prob.ring_vars[name] = tuple(varnames)
        return
    m = _RING_SG_RE.match(stmt)
    if m is not None:
        name, genpart = m.group(1), m.group(2)
        if name in prob.rings:
            raise ProblemFileError(lineno, "duplicate ring name: %s" % name)
        gens = [_parse_int(s, lineno, "semigroup generator") for s in _split_items(genpart)]
        if not gens:
            raise ProblemFileError(lineno, "semigroup needs at least one generator")
        if any(g < 1 for g in gens):
            raise ProblemFileError(lineno, "semigroup generators must be positive")
        try:
            ring = SemigroupRing(tuple(gens))
        except ValueError as exc:
            raise ProblemFileError(lineno, str(exc)) from exc
        prob.rings[name] = ring
        return
    raise ProblemFileError(lineno, "bad ring declaration")


def _parse_ideal(prob, stmt, lineno):
    m = _IDEAL_RE.match(stmt)
    if m is None:
        raise ProblemFileError(lineno, "bad ideal declaration")
    name, ring_name, body = m.group(1), m.group(2), m.group(3)
    if name in prob.ideals:
        raise ProblemFileError(lineno, "duplicate ideal name: %s" % name)
    ring = prob.rings.get(ring_name)
    if ring is None:
        raise ProblemFileError(lineno, "unknown ring: %s" % ring_name)
    items = _split_items(body)
    if isinstance(ring, SemigroupRing):
        vals = [_parse_int(s, lineno, "valuation") for s in items]
        if any(v < 0 for v in vals):
            raise ProblemFileError(lineno, "valuations must be nonnegative")
        try:
            ideal = ring.ideal(vals, name=name)
        except ValueError as exc:
            raise ProblemFileError(lineno, str(exc)) from exc
    else:
        varindex = {v: k for k, v in enumerate(prob.ring_vars[ring_name])}
        gens = [_parse_monomial(s, varindex, lineno) for s in items]
        ideal = ring.ideal(gens, name=name)
    prob.ideals[name] = ideal
    prob.ideal_ring[name] = ring_name
    return


def _parse_module(prob, stmt, lineno):
    m = _MODULE_RE.match(stmt)
    if m is None:
        raise ProblemFileError(lineno, "bad module declaration")
    name, ring_name = m.group(1), m.group(2)
    rows, cols_n = int(m.group(3)), int(m.group(4))
    if name in prob.modules:
        raise ProblemFileError(lineno, "duplicate module name: %s" % name)
    ring = prob.rings.get(ring_name)
    if ring is None:
        raise ProblemFileError(lineno, "unknown ring: %s" % ring_name)
    if rows < 1:
        raise ProblemFileError(lineno, "rows must be at least 1")
    shifts = [_parse_int(s, lineno, "shift") for s in _split_items(m.group(6))]
    if len(shifts) != rows:
        raise ProblemFileError(
            lineno, "expected %d shifts, got %d" % (rows, len(shifts))
        )
    if any(s < 0 for s in shifts):
        raise ProblemFileError(lineno, "shifts must be nonnegative")

    algebra = prob.algebra_for(ring_name)
    entries = {}
    for item in _split_items(m.group(5)):
        em = _ENTRY_RE.match(item)
        if em is None:
            raise ProblemFileError(lineno, "bad entry: %r" % item)
        i, j = int(em.group(1)), int(em.group(2))
        if not (1 <= i <= rows and 1 <= j <= cols_n):
            raise ProblemFileError(lineno, "entry (%d, %d) out of range" % (i, j))
        if (i, j) in entries:
            raise ProblemFileError(lineno, "duplicate entry (%d, %d)" % (i, j))
        label = _parse_entry_label(prob, ring, ring_name, em.group(3), lineno)
        entries[(i, j)] = label

    if cols_n == 0:
        pres = free_presentation(algebra, tuple(shifts))
    else:
        sshifts = []
        for j in range(1, cols_n + 1):
            degs = {
                shifts[i - 1] + algebra.deg(lab)
                for (i, jj), lab in entries.items()
                if jj == j
            }
            if not degs:
                raise ProblemFileError(lineno, "column %d has no entries" % j)
            if len(degs) != 1:
                raise ProblemFileError(lineno, "column %d is not homogeneous" % j)
            sshifts.append(degs.pop())
        col_dicts = [
            [dict() for _ in range(rows)] for _ in range(cols_n)
        ]
        for (i, j), lab in entries.items():
            col_dicts[j - 1][i - 1] = {lab: 1}
        try:
            pmap = HomogeneousMap(
                algebra,
                GradedFreeModule(tuple(sshifts)),
                GradedFreeModule(tuple(shifts)),
                col_dicts,
            )
        except ValueError as exc:
            raise ProblemFileError(lineno, str(exc)) from exc
        pres = GradedPresentation(pmap)
    prob.modules[name] = pres
    prob.module_ring[name] = ring_name
    return


def _parse_entry_label(prob, ring, ring_name, text, lineno):
    if isinstance(ring, SemigroupRing):
        v = _parse_int(text, lineno, "entry valuation")
        if v <= 0:
            raise ProblemFileError(lineno, "entry must have positive degree")
        if v not in ring.S:
            raise ProblemFileError(lineno, "valuation %d is not in the semigroup" % v)
        return v
    varindex = {v: k for k, v in enumerate(prob.ring_vars[ring_name])}
    expo = _parse_monomial(text, varindex, lineno)
    if not any(expo):
        raise ProblemFileError(lineno, "entry must have positive degree")
    if ring.defining.member(expo):
        raise ProblemFileError(lineno, "entry is zero in the ring")
    return expo
