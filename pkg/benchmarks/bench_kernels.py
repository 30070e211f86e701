"""Benchmark the compiled kernels against the pure-Python fallback.

Times automorphism enumeration and conjugacy partitioning (the two hot
loops of `classify`) on a chosen carrier, for every importable backend.

    python benchmarks/bench_kernels.py --group 2,2,2,2 --repeat 3
"""

from __future__ import annotations

import argparse
import time

from alexq.abelian import AbelianGroup
from alexq.autgroup import _group_tables
from alexq.kernels import available_backends


def bench(group_spec: str, repeat: int) -> None:
    G = AbelianGroup.from_spec(group_spec)
    add, allowed = _group_tables(G)
    backends = available_backends()
    print(f"carrier {G.spec()} (order {G.order})")
    print(f"{'backend':<10} {'enumerate':>12} {'partition':>12} {'autos':>8} {'classes':>8}")
    timings: dict[str, tuple[float, float]] = {}
    for name, impl in backends.items():
        best_enum = best_part = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            perms = impl.enumerate_linear_bijections(
                G.order, G.factors, G.generator_indices, add, allowed
            )
            t1 = time.perf_counter()
            _, reps = impl.conjugacy_partition(perms)
            t2 = time.perf_counter()
            best_enum = min(best_enum, t1 - t0)
            best_part = min(best_part, t2 - t1)
        timings[name] = (best_enum, best_part)
        print(
            f"{name:<10} {best_enum * 1e3:>10.2f}ms {best_part * 1e3:>10.2f}ms "
            f"{len(perms):>8} {len(reps):>8}"
        )
    if "python" in timings and "cython" in timings:
        pe, pp = timings["python"]
        ce, cp = timings["cython"]
        print(
            f"speedup    {pe / ce:>10.1f}x {pp / cp:>10.1f}x"
            f"   (total {(pe + pp) / (ce + cp):.1f}x)"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--group", default="2,2,2,2", help="carrier spec, e.g. 4,4")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    bench(args.group, args.repeat)


if __name__ == "__main__":
    main()
