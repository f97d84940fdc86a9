"""Compare the compiled Boolean kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from hstaralg import _accel
from hstaralg import _boolkern_py
from hstaralg import hstar as hs
from hstaralg.groups import parse_group


def right_mult_masks(names):
    alg = hs.make_rel_group_algebra([parse_group(g) for g in names])
    return alg.dim, [[sum(x << j for j, x in enumerate(row)) for row in r.entries]
                     for r in hs.basis_right_mults(alg)]


def cases():
    rng = random.Random(0)
    a = [rng.getrandbits(24) for _ in range(24)]
    b = [rng.getrandbits(24) for _ in range(24)]
    n5, gens5 = right_mult_masks(["z2", "z3"])
    n6, gens6 = right_mult_masks(["z1", "z1", "z4"])
    return [
        ("matmul 24x24", lambda k: k.matmul(a, b)),
        ("commutant search, Z2+Z3 (dim 5)", lambda k: k.commutant_search(n5, gens5, 1 << 30)),
        ("commutant search, Z1+Z1+Z4 (dim 6)", lambda k: k.commutant_search(n6, gens6, 1 << 30)),
        ("commutant brute, dim 4 cycle", lambda k: k.commutant_brute(4, [[2, 4, 8, 1]], 1 << 30)),
        ("census prefilter, dim 3", lambda k: k.census_commutative_special(3)),
    ]


def solutions(result):
    # (solutions, ...) tuples compare by solution set; node counts may differ
    if isinstance(result, tuple):
        return sorted(tuple(x) for x in result[0])
    return list(result)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _accel.COMPILED:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'case':40s} {'python ms':>11s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_boolkern_py), number=1, repeat=args.repeat)) * 1000
        if _accel.COMPILED:
            if solutions(fn(_boolkern_py)) != solutions(fn(_accel.kernels)):
                raise SystemExit(f"{name}: implementations disagree")
            c = min(timeit.repeat(lambda: fn(_accel.kernels), number=1, repeat=args.repeat)) * 1000
            print(f"{name:40s} {py:11.2f} {c:12.2f} {py / c:8.1f}x")
        else:
            print(f"{name:40s} {py:11.2f} {'-':>12s}")


if __name__ == "__main__":
    main()
