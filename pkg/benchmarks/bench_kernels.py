"""Compare the compiled and pure-Python GF(2) kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each row times one kernel on fixed random inputs (seeded) under both
backends and reports the best-of-repeat wall time and the speedup.
The last rows time end-to-end workloads that lean on the kernels.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import timeit

from skewcyc import _kernels

DEG = 62  # F_{2^62}, the field of the rank-HT example


def _kernel_cases(rng: random.Random):
    from skewcyc import tower

    MOD = tower(2, 31, 1, 62)._mod
    elems = [rng.getrandbits(DEG) for _ in range(2000)]
    cols = [rng.getrandbits(DEG) for _ in range(DEG)]
    matrix = [rng.getrandbits(DEG) for _ in range(DEG)]

    def mulmod():
        f = _kernels.gf2_mulmod
        for a, b in zip(elems, elems[1:]):
            f(a, b, MOD, DEG)

    def powmod():
        f = _kernels.gf2_powmod
        for a in elems[:200]:
            f(a, (1 << 61) - 1, MOD, DEG)

    def apply():
        f = _kernels.gf2_apply
        for a in elems:
            f(a, cols)

    def rref():
        for _ in range(20):
            _kernels.gf2_rref(list(matrix))

    def rank():
        for _ in range(20):
            _kernels.gf2_rank(list(matrix))

    return [("gf2_mulmod x2000", mulmod), ("gf2_powmod x200", powmod),
            ("gf2_apply x2000", apply), ("gf2_rref 62x62 x20", rref), ("gf2_rank 62x62 x20", rank)]


def _workloads():
    from skewcyc.examples import ht_root_space
    from skewcyc.fieldtower import build_tower
    from skewcyc.lattice import enumerate_codes

    def ht_space():
        build_tower.cache_clear()
        ht_root_space()

    def lattice():
        build_tower.cache_clear()
        from skewcyc import tower

        enumerate_codes(tower(2, 2, 1, 4), max_size=1000)

    return [("root space of the HT example", ht_space), ("lattice of (2,2,1,4)", lattice)]


def _best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args(argv)

    backends = _kernels.available_backends()
    if "native" not in backends:
        print("compiled kernels are not built; only the pure backend is available", file=sys.stderr)
    rows = []
    cases = _kernel_cases(random.Random(2024)) + _workloads()
    for name, fn in cases:
        times = {}
        for b in backends:
            _kernels.set_backend(b)
            fn()  # warm caches
            times[b] = _best(fn, args.repeat)
        rows.append({"case": name, **{f"{b}_s": t for b, t in times.items()},
                     "speedup": times["pure"] / times["native"] if "native" in times else None})
    _kernels.set_backend(backends[0])

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    width = max(len(r["case"]) for r in rows)
    print(f"{'case':<{width}}  {'native (s)':>11}  {'pure (s)':>10}  {'speedup':>8}")
    for r in rows:
        nat = f"{r['native_s']:.4f}" if "native_s" in r else "-"
        sp = f"{r['speedup']:.1f}x" if r["speedup"] else "-"
        print(f"{r['case']:<{width}}  {nat:>11}  {r['pure_s']:>10.4f}  {sp:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
