"""Compare the compiled GF(p) kernels against the pure-Python fallback.

Two workloads: raw row reduction on dense random matrices, and the
resolution pipeline that dominates real usage (resolving the residue
field over an Artinian monomial quotient, which is all rref and
nullspace underneath).

Usage: python3 benchmarks/bench_gfp.py [--stages 4] [--size 140]
"""

import argparse
import random
import time

from burchkit import linalg
from burchkit.homalg import GradedAlgebra, cyclic_presentation, resolve
from burchkit.rings import QuotientRing


def time_once(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_rref(size, trials, seed, p=101):
    rng = random.Random(seed)
    mats = [
        [[rng.randrange(p) for _ in range(size + size // 4)] for _ in range(size)]
        for _ in range(trials)
    ]

    def work():
        for rows in mats:
            linalg.rref([list(r) for r in rows], size + size // 4, p)

    return time_once(work)


def bench_resolution(stages, reps):
    ring = QuotientRing(2, [(3, 0), (2, 1), (1, 2), (0, 3)])

    def work():
        for _ in range(reps):
            algebra = GradedAlgebra(ring)
            pres = cyclic_presentation(algebra, ring.maximal_ideal())
            resolve(pres, stages)

    return time_once(work)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--stages", type=int, default=6, help="resolution depth")
    parser.add_argument("--reps", type=int, default=2, help="resolution repeats")
    parser.add_argument("--size", type=int, default=140, help="rref matrix rows")
    parser.add_argument("--trials", type=int, default=4, help="rref matrices")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    rows = []
    for backend in linalg.available_backends():
        linalg.set_backend(backend)
        rref_s = bench_rref(args.size, args.trials, args.seed)
        res_s = bench_resolution(args.stages, args.reps)
        rows.append((backend, rref_s, res_s))

    default = "compiled" if "compiled" in linalg.available_backends() else "python"
    linalg.set_backend(default)

    print("%-10s %14s %18s" % ("backend", "rref (s)", "resolution (s)"))
    for backend, rref_s, res_s in rows:
        print("%-10s %14.4f %18.4f" % (backend, rref_s, res_s))
    if len(rows) == 2:
        base = dict((r[0], r) for r in rows)
        print(
            "speedup: rref x%.1f, resolution x%.1f"
            % (
                base["python"][1] / max(base["compiled"][1], 1e-9),
                base["python"][2] / max(base["compiled"][2], 1e-9),
            )
        )


if __name__ == "__main__":
    main()
