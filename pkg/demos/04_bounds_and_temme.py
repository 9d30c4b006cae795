# Simple bounds on E(R^k), Ahle's bound, and the saddle-point approximation of S(k, j).
#
# Everything is in natural-log space: n^k overflows a double long before k is large.
from fractions import Fraction

from rawmoments.bounds import bound_report, temme_relative_error
from rawmoments.exact import MomentQuery

for n, k in [(10, 10), (5, 50), (100, 20), (200, 200)]:
    r = bound_report(MomentQuery(n, Fraction(1, 2), k))
    print(f"n={n:<4} k={k:<4}")
    for name in ["log_trivial_lower", "log_jensen_lower", "log_exact",
                 "log_ahle_upper", "log_trivial_upper_p", "log_trivial_upper_n"]:
        print(f"    {name:<20} {getattr(r, name).log_e:12.4f}")
    print("    violations:", r.violations() or "none")

# Ahle's bound is sharp when n >> k but can lose even to n^k p when k >> n (see n=5, k=50).

print("\nrelative error of the Stirling approximation at j = k/2")
for k in [20, 40, 80, 160, 320, 640]:
    print(f"k={k:<4} {temme_relative_error(k, k // 2):.3e}")
