"""Dense GF(p) kernels: RREF, nullspace, incremental echelon spans."""

import random

import pytest

from burchkit import linalg
from burchkit.linalg import EchelonSpan, available_backends, set_backend

PRIMES = (2, 3, 101)


def _rand_matrix(rng, p):
    nrows = rng.randint(0, 5)
    ncols = rng.randint(1, 6)
    return [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)], ncols


def _matvec(rows, v, p):
    return [sum(a * b for a, b in zip(r, v)) % p for r in rows]


def test_rref_structure():
    rng = random.Random(31)
    for p in PRIMES:
        for _ in range(40):
            rows, ncols = _rand_matrix(rng, p)
            red, pivots = linalg.rref(rows, ncols, p)
            assert len(red) == len(pivots)
            assert pivots == sorted(pivots)
            for r, pc in enumerate(pivots):
                assert red[r][pc] == 1
                # pivot column is elsewhere zero
                assert all(red[k][pc] == 0 for k in range(len(red)) if k != r)
                assert all(red[r][c] == 0 for c in range(pc))
            # idempotence
            again, pivots2 = linalg.rref(red, ncols, p)
            assert again == red and pivots2 == pivots


def test_nullspace_vectors_annihilate():
    rng = random.Random(32)
    for p in PRIMES:
        for _ in range(40):
            rows, ncols = _rand_matrix(rng, p)
            basis = linalg.nullspace(rows, ncols, p)
            _, pivots = linalg.rref(rows, ncols, p)
            assert len(basis) == ncols - len(pivots)
            for v in basis:
                assert all(x == 0 for x in _matvec(rows, v, p))
            # basis vectors are independent: each has a 1 in a distinct free column
            red, piv = linalg.rref(basis, ncols, p)
            assert len(red) == len(basis)


def test_reduce_row_semantics():
    p = 101
    red, pivots = linalg.rref([[1, 2, 3], [0, 1, 4]], 3, p)
    # a row in the span reduces to None
    combo = [(1 * a + 5 * b) % p for a, b in zip(red[0], red[1])]
    assert linalg.reduce_row(combo, red, pivots, p) is None
    # an independent row leaves a nonzero residual
    res = linalg.reduce_row([0, 0, 1], red, pivots, p)
    assert res is not None and any(res)


def test_echelon_span_incremental():
    rng = random.Random(33)
    p = 101
    for _ in range(30):
        ncols = rng.randint(1, 6)
        span = EchelonSpan(ncols, p)
        vecs = []
        for _ in range(rng.randint(1, 8)):
            v = [rng.randrange(p) for _ in range(ncols)]
            grew = span.add(v)
            vecs.append(v)
            red, pivots = linalg.rref(vecs, ncols, p)
            assert span.rank == len(pivots)
            if grew:
                # the vector was outside the previous span
                assert span.rank <= len(vecs)
        # every added vector now reduces to zero
        for v in vecs:
            assert span.reduce(v) is None


def test_backends_agree():
    rng = random.Random(34)
    cases = []
    for _ in range(25):
        rows, ncols = _rand_matrix(rng, 101)
        cases.append((rows, ncols))
    results = {}
    for name in available_backends():
        set_backend(name)
        results[name] = [
            (linalg.rref(rows, ncols, 101), linalg.nullspace(rows, ncols, 101))
            for rows, ncols in cases
        ]
    set_backend("python")
    rref_py = results["python"]
    for name, got in results.items():
        assert got == rref_py, name
    # leave whichever backend is preferred active for the rest of the run
    if "compiled" in available_backends():
        set_backend("compiled")


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        set_backend("gpu")
