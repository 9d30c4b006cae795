# The large-k asymptote of E(R^k) when n grows in proportion to k.
#
# With n ~ beta k, E(R^k) = k^k (Psi + o(1))^k. log Psi is the maximum of the
# growth rate psi(tau) of the j = tau k term in the Stirling-number sum, and
# the maximiser has a closed form in terms of W_0.
import numpy as np

from rawmoments.asymptote import grid_max_log_psi, log_psi, psi_of_tau

sol = log_psi(beta=1.0, p=0.5)
print(sol)
print("Psi =", sol.psi)
print("brute-force max of psi on a 1e5-point grid:", grid_max_log_psi(1.0, 0.5))

# The growth-rate curve and its peak.
taus = np.linspace(0.05, 0.95, 10)
for t, v in zip(taus, psi_of_tau(taus, 1.0, 0.5)):
    marker = " <- near tau0" if abs(t - sol.tau0) < 0.05 else ""
    print(f"tau={t:.2f}  psi={v: .5f}{marker}")

# The closed-form product beta^beta (e^chi - 1)^tau / (tau^tau (beta-tau)^(beta-tau) chi)
# lacks the p^tau / e factor and breaks the trivial ceiling Psi <= beta.
print("closed-form product:", sol.theorem_form_value, "exceeds beta:", sol.theorem_form_exceeds_ceiling)

for beta in [0.25, 1.0, 4.0]:
    for p in [0.1, 0.5, 0.9]:
        s = log_psi(beta, p)
        print(f"beta={beta:<5} p={p:<4} tau0={s.tau0:.4f}  Psi={s.psi:.5f}  Psi/beta={s.psi / beta:.4f}")
