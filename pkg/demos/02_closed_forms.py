"""Gaps n - k = 2..6 have explicit answers. Compare them with the root finder."""
from chebtau import tau, tau_closed
from chebtau.closed_forms import alpha, alpha_limit, beta, beta_limit, gap_limit

print(" k  m        closed form          root finding     rel diff")
for k in (1, 2, 5, 15):
    for m in range(2, 7):
        c = tau_closed(k, m).value
        r = tau(k + m, k).value
        print(f"{k:2d}  {m}  {c:.16f}  {r:.16f}  {abs(c - r) / c:.1e}")

# the m = 5 and m = 6 formulas carry slowly increasing corrections
print()
for k in (1, 10, 100, 10_000):
    print(f"k={k:6d}  alpha={alpha(k):.8f}  beta={beta(k):.8f}")
print(f"limits      alpha={alpha_limit():.8f}  beta={beta_limit():.8f}")

# so k^{m/2} tau_{k+m,k} settles down for each gap
print()
for m in range(2, 7):
    k = 10**6
    print(f"m={m}: k^(m/2) tau = {k ** (m / 2) * tau_closed(k, m).value:.6f}   limit {gap_limit(m):.6f}")
