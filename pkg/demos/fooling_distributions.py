"""Dependent samples that Hoeffding's D cannot see.

Each generator below produces dependent (x, y) pairs with uniform
marginals whose population D is zero.  tau* and the refined statistic R
stay consistent, so their p-values collapse as n grows while D's stay
spread over (0, 1).

    python3 demos/fooling_distributions.py
"""

import numpy as np

from rankindep import generate, independence_tests

SEEDS = 50

print(f"{'generator':<12}{'n':>6}  {'median p (D)':>13}{'median p (R)':>13}{'median p (tau*)':>16}")
for name in ("yanagimoto", "hyperbola", "binary", "independent"):
    for n in (300, 2000):
        p = np.array([[r.p_value for r in independence_tests(*generate(name, n, seed=s))]
                      for s in range(SEEDS)])
        med = np.median(p, axis=0)
        print(f"{name:<12}{n:>6}  {med[0]:>13.3g}{med[1]:>13.3g}{med[2]:>16.3g}")

# binary expansion is the slowest to reveal itself: its tau* sits close to
# the null critical value at n = 300 and clears it comfortably by n = 2000
