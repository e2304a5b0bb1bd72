"""GF(p) kernel dispatch: compiled extension when available, else pure Python.

Set BURCHKIT_PURE_PYTHON=1 to force the fallback; `set_backend` switches at
runtime (the benchmark uses it).  All callers go through the module-level
functions so the switch is visible everywhere.
"""

from __future__ import annotations

import os

from . import _gfp_py

_impl = _gfp_py
BACKEND = "python"

if not os.environ.get("BURCHKIT_PURE_PYTHON"):
    try:
        from . import _gfp_kernel

        _impl = _gfp_kernel
        BACKEND = "compiled"
    except ImportError:
        pass


def available_backends():
    names = ["python"]
    try:
        from . import _gfp_kernel  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    return tuple(names)


def set_backend(name: str) -> None:
    global _impl, BACKEND
    if name == "python":
        _impl = _gfp_py
    elif name == "compiled":
        from . import _gfp_kernel

        _impl = _gfp_kernel
    else:
        raise ValueError("unknown backend %r" % name)
    BACKEND = name


def rref(rows, ncols, p):
    return _impl.rref(rows, ncols, p)


def nullspace(rows, ncols, p):
    return _impl.nullspace(rows, ncols, p)


def reduce_row(row, red, pivots, p):
    return _impl.reduce_row(row, red, pivots, p)


class EchelonSpan:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.rows = []
        self.pivots = []

    def reduce(self, vec):
        """Residual of vec modulo the span, or None if it lies inside."""
        if self.ncols == 0:
            return None
        return reduce_row(vec, self.rows, self.pivots, self.p)

    def add(self, vec) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        res = self.reduce(vec)
        if res is None:
            return False
        pc = next(i for i, x in enumerate(res) if x)
        inv = pow(res[pc], self.p - 2, self.p)
        res = [x * inv % self.p for x in res]
        # Eliminate the new pivot from existing rows to stay reduced.
        for r in self.rows:
            f = r[pc]
            if f:
                for c in range(pc, self.ncols):
                    r[c] = (r[c] - f * res[c]) % self.p
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pc:
            at += 1
        self.rows.insert(at, res)
        self.pivots.insert(at, pc)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)
