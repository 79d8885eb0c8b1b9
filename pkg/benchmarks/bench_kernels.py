"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--sizes 16,20,24] [--reps 3]
"""
import argparse

from lacuna import kernels
from lacuna.bench import compare_kernels, format_table


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", default="16,20,24")
    p.add_argument("--reps", type=int, default=3)
    args = p.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    recs = compare_kernels(sizes, args.reps)
    print(format_table(("backend", "task", "n", "wall_time_ns", "result"),
                       [(r.backend, r.task, r.n, r.wall_time_ns, r.result) for r in recs]))

    times = {(r.backend, r.task, r.n): r.wall_time_ns for r in recs}
    if "cython" in kernels.available_backends():
        print()
        for (backend, task, n), t in sorted(times.items()):
            if backend == "cython":
                print(f"{task:>17} n={n:<3} speedup {times[('python', task, n)] / t:7.1f}x")


if __name__ == "__main__":
    main()
