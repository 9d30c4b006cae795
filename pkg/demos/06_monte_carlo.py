# Simulating the urn experiment and comparing with the exact all-red probability.
from fractions import Fraction

from rawmoments.analysis import mc_all_red
from rawmoments.exact import MomentQuery, all_red_probability

for n, p, k in [(10, 0.5, 3), (4, 0.25, 2), (20, 0.8, 10)]:
    est = mc_all_red(n, p, k, samples=500_000, seed=2024)
    exact = all_red_probability(MomentQuery(n, Fraction(str(p)), k))
    z = (est.estimate - float(exact)) / est.stderr
    print(f"n={n:<3} p={p:<5} k={k:<3} simulated {est.estimate:.5f} +/- {est.stderr:.5f}"
          f"   exact {float(exact):.5f} ({exact})   z={z:+.2f}")
