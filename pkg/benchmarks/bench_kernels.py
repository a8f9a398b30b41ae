"""
Compare the compiled and pure-Python hopping kernels.

    python benchmarks/bench_kernels.py --pairs 20000 --rank 8
"""

import argparse
import random
import timeit

from demhop import _kernels_py as pure
from demhop import kernels


def random_perm(rng, n):
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def random_signed(rng, n, even):
    w = [x if rng.random() < 0.5 else -x for x in random_perm(rng, n)]
    if even and sum(x < 0 for x in w) % 2:
        w[0] = -w[0]
    return tuple(w)


def cases(rng, pairs, n):
    a = [(random_perm(rng, n), random_perm(rng, n)) for _ in range(pairs)]
    b = [(random_signed(rng, n, False), random_signed(rng, n, False)) for _ in range(pairs)]
    d = [(random_signed(rng, n, True), random_signed(rng, n, True)) for _ in range(pairs)]
    return {
        "star_a": lambda m: [m.star_a(w, v) for w, v in a],
        "star_signed (B)": lambda m: [m.star_signed(w, v, True) for w, v in b],
        "star_signed (D)": lambda m: [m.star_signed(w, v, False) for w, v in d],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--pairs", type=int, default=20_000)
    parser.add_argument("--rank", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = {"python": pure}
    if kernels.compiled is not None:
        backends["cython"] = kernels.compiled
    else:
        print("compiled extension not available; timing the pure backend only")

    work = cases(random.Random(args.seed), args.pairs, args.rank)
    print(f"{args.pairs} random pairs at rank {args.rank}, best of {args.repeat}")
    print(f"{'kernel':<18}" + "".join(f"{name:>12}" for name in backends) + "     speedup")
    for label, fn in work.items():
        if "cython" in backends:
            assert fn(pure) == fn(backends["cython"]), f"backends disagree on {label}"
        times = {name: min(timeit.repeat(lambda m=mod: fn(m), number=1, repeat=args.repeat))
                 for name, mod in backends.items()}
        row = f"{label:<18}" + "".join(f"{t:>11.3f}s" for t in times.values())
        if "cython" in times:
            row += f"   {times['python'] / times['cython']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
