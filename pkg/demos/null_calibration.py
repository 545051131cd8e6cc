"""Compare the asymptotic null law with finite-sample permutation nulls.

Under independence n*D, n*R and n*tau*/36 all converge to the same
weighted sum of centred chi-squares.  This prints its quantiles next to
the empirical quantiles of the scaled statistics at a few sample sizes.

    python3 demos/null_calibration.py
"""

import numpy as np

from rankindep import limit_law, hoeffding_D, refined_R, tau_star

law = limit_law()
probs = (0.5, 0.9, 0.99, 0.999)
print("limit law   " + "  ".join(f"q{p:<6} {q:+.4f}" for p, q in zip(probs, np.quantile(law.samples, probs))))

rng = np.random.default_rng(0)
for n in (20, 100, 1000):
    draws = np.array([[n * hoeffding_D(p), n * refined_R(p), n * tau_star(p) / 36]
                      for p in (rng.permutation(n) + 1 for _ in range(4000))])
    for j, name in enumerate(("D", "R", "tau*")):
        q = np.quantile(draws[:, j], probs)
        print(f"n={n:<5}{name:<5} " + "  ".join(f"q{p:<6} {v:+.4f}" for p, v in zip(probs, q)))
