"""Wall-clock cost of the three statistics on random permutations.

The counting algorithms are O(n log n); the log-log slope printed at the
end is what the acceptance suite compares with 1.  Pass sizes on the
command line to override the defaults.

    python3 demos/scaling.py 100000 1000000
"""

import sys

from rankindep.benchmark import run_benchmark

sizes = [int(a) for a in sys.argv[1:]] or [10**4, 10**5, 10**6]
rep = run_benchmark(sizes, repeats=3)

print(f"{'n':>10}  " + "".join(f"{s:>12}" for s in rep.timings))
for i, n in enumerate(rep.sizes):
    print(f"{n:>10}  " + "".join(f"{t[i]:>11.4f}s" for t in rep.timings.values()))
print(f"{'slope':>10}  " + "".join(f"{v:>12.3f}" for v in rep.slopes.values()))
