# Exact moments approach the asymptote; the summands are log-concave.
from fractions import Fraction

from rawmoments.analysis import converge_table, unimodality_check
from rawmoments.asymptote import log_psi

for beta, p in [(1.0, Fraction(1, 2)), (2.0, Fraction(1, 3)), (0.5, Fraction(9, 10))]:
    print(f"beta={beta}, p={p}")
    for row in converge_table(beta, p, [25, 50, 100, 200, 400, 800]):
        print(f"  k={row.k:<4} n={row.n:<4} (log E - k log k)/k = {row.normalized_log_moment:.6f}"
              f"   log Psi = {row.log_psi:.6f}   gap = {row.gap:.2e}")

# The gap shrinks roughly like 1/k here, though nothing guarantees a rate.

tau0 = log_psi(1.0, 0.5).tau0
print(f"\nmode of S(k,j)(n)_j p^j divided by k, beta=1, p=1/2 (tau0 = {tau0:.4f})")
for k in [10, 50, 100, 200, 400]:
    report = unimodality_check(k, k, Fraction(1, 2))
    print(f"  k={k:<4} mode/k = {report.mode_index / k:.4f}  all properties hold: {report.ok}")
