"""Time L_n by iteration, fast doubling and lacunary recombination.

    python benchmarks/bench_strategies.py [--n 1000,10000,100000] [--gap 5]
"""
import argparse

from lacuna.bench import CSV_HEADER, Strategy, format_table, run_bench

p = argparse.ArgumentParser()
p.add_argument("--n", default="1000,10000,100000")
p.add_argument("--gap", type=int, default=5)
p.add_argument("--reps", type=int, default=3)
args = p.parse_args()

records = run_bench(list(Strategy), [int(s) for s in args.n.split(",")], args.gap, args.reps)
print(format_table(CSV_HEADER, (r.row() for r in records)))
