# Exact raw moments of a binomial variable, two ways.
#
# Paint n balls red with probability p, then draw k with replacement. The
# chance that every drawn ball is red equals E(R^k) / n^k. Summing over the
# number of red balls gives one formula; summing over the number of distinct
# balls drawn gives another, built from Stirling numbers of the second kind.
from fractions import Fraction

from rawmoments import (
    MomentQuery,
    all_red_probability,
    raw_moment_direct,
    raw_moment_stirling,
    sample_size_pmf,
    stirling_row,
)

q = MomentQuery(n=12, p=Fraction(1, 3), k=6)
print("E(R^6) for B(12, 1/3), summed over R:        ", raw_moment_direct(q))
print("E(R^6) for B(12, 1/3), summed over sample size:", raw_moment_stirling(q))
print("P(all 6 draws red) =", all_red_probability(q))

# Stirling rows are exact integers, so they grow without bound.
print("S(6, j):", stirling_row(6).entries)
print("number of digits in max_j S(300, j):", len(str(max(stirling_row(300).entries))))

# The distribution of the number of distinct balls among k draws.
pmf = sample_size_pmf(k=6, n=12)
for j, prob in enumerate(pmf, start=1):
    print(f"P(S = {j}) = {prob}  ({float(prob):.4f})")
print("sums to", sum(pmf))
