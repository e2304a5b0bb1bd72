# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) dense kernels; API identical to burchkit._gfp_py."""

from libc.stdlib cimport free, malloc


cdef long _inv(long a, long p):
    # Fermat: a^(p-2) mod p by binary exponentiation.
    cdef long result = 1
    cdef long base = a % p
    cdef long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef long* _load(rows, Py_ssize_t nrows, Py_ssize_t ncols, long p) except NULL:
    cdef long* mat = <long*> malloc(nrows * ncols * sizeof(long))
    if mat == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c
    for r in range(nrows):
        row = rows[r]
        for c in range(ncols):
            mat[r * ncols + c] = row[c] % p
    return mat


cdef Py_ssize_t _rref_inplace(long* mat, Py_ssize_t nrows, Py_ssize_t ncols,
                              long p, long* pivots):
    cdef Py_ssize_t rank = 0, col, r, c, sel
    cdef long inv, f
    cdef long* prow
    cdef long* orow
    for col in range(ncols):
        sel = -1
        for r in range(rank, nrows):
            if mat[r * ncols + col]:
                sel = r
                break
        if sel < 0:
            continue
        if sel != rank:
            prow = mat + sel * ncols
            orow = mat + rank * ncols
            for c in range(ncols):
                f = prow[c]
                prow[c] = orow[c]
                orow[c] = f
        prow = mat + rank * ncols
        inv = _inv(prow[col], p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(nrows):
            if r != rank:
                orow = mat + r * ncols
                f = orow[col]
                if f:
                    for c in range(col, ncols):
                        if prow[c]:
                            orow[c] = (orow[c] - f * prow[c]) % p
                            if orow[c] < 0:
                                orow[c] += p
        pivots[rank] = col
        rank += 1
        if rank == nrows:
            break
    return rank


def rref(rows, ncols, p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nc = ncols
    cdef long pp = p
    if nrows == 0 or nc == 0:
        return [], []
    cdef long* mat = _load(rows, nrows, nc, pp)
    cdef long* pivots = <long*> malloc(nrows * sizeof(long))
    if pivots == NULL:
        free(mat)
        raise MemoryError()
    cdef Py_ssize_t rank, r, c
    try:
        rank = _rref_inplace(mat, nrows, nc, pp, pivots)
        out = [[mat[r * nc + c] for c in range(nc)] for r in range(rank)]
        piv = [pivots[r] for r in range(rank)]
        return out, piv
    finally:
        free(mat)
        free(pivots)


def nullspace(rows, ncols, p):
    cdef Py_ssize_t nc = ncols
    if nc == 0:
        return []
    red, pivots = rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    cdef Py_ssize_t free_col, r
    for free_col in range(nc):
        if free_col in pivot_set:
            continue
        v = [0] * nc
        v[free_col] = 1
        for r in range(len(pivots)):
            v[pivots[r]] = (p - red[r][free_col]) % p
        basis.append(v)
    return basis


def reduce_row(row, red, pivots, p):
    cdef Py_ssize_t nc = len(row)
    cdef long pp = p
    cdef Py_ssize_t nred = len(red)
    if nc == 0:
        return None
    cdef long* out = <long*> malloc(nc * sizeof(long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t c, r, pc
    cdef long f
    try:
        for c in range(nc):
            out[c] = row[c] % pp
        for r in range(nred):
            pc = pivots[r]
            f = out[pc]
            if f:
                rr = red[r]
                for c in range(pc, nc):
                    v = rr[c]
                    if v:
                        out[c] = (out[c] - f * <long> v) % pp
                        if out[c] < 0:
                            out[c] += pp
        nonzero = False
        for c in range(nc):
            if out[c]:
                nonzero = True
                break
        if not nonzero:
            return None
        return [out[c] for c in range(nc)]
    finally:
        free(out)
