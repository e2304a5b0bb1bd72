"""Pure-Python GF(p) dense kernels: RREF, nullspace, row reduction.

Matrices are lists of equal-length lists of ints in [0, p).  This module
mirrors the compiled kernel exactly; `burchkit.linalg` picks one of the
two at import time.
"""

from __future__ import annotations


def rref(rows, ncols, p):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  Pivoting is
    deterministic: first nonzero entry of the topmost unprocessed row.
    """
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = -1
        for r in range(rank, len(mat)):
            if mat[r][col] % p:
                sel = r
                break
        if sel < 0:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        row = mat[rank]
        inv = pow(row[col] % p, p - 2, p)
        for c in range(col, ncols):
            row[c] = row[c] * inv % p
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col] % p
                other = mat[r]
                for c in range(col, ncols):
                    other[c] = (other[c] - f * row[c]) % p
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def nullspace(rows, ncols, p):
    """Basis of the right kernel {v : A v = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][free]) % p
        basis.append(v)
    return basis


def reduce_row(row, red, pivots, p):
    """Residual of row after eliminating against RREF rows; None if zero."""
    out = [x % p for x in row]
    for r, pc in enumerate(pivots):
        f = out[pc]
        if f:
            rr = red[r]
            for c in range(pc, len(out)):
                if rr[c]:
                    out[c] = (out[c] - f * rr[c]) % p
    return out if any(out) else None
