"""Upper bounds for tau, from the tight one to the convenient ones."""
from chebtau import bound_report

print("   n   k        tau      delta   sqrt(1st)  sqrt(2nd)  fixed-k   fixed-m")
for n, k in [(5, 1), (12, 2), (30, 5), (60, 10), (200, 10), (200, 190)]:
    r = bound_report(n, k)
    print(
        f"{n:4d} {k:3d}  {r.tau:9.2e}  {r.delta:9.2e}  {r.thm12_first ** 0.5:9.2e}  "
        f"{r.thm12_second ** 0.5:9.2e}  {r.regime_fixed_k:8.2e}  {r.regime_fixed_m:8.2e}",
        "" if not r.violations() else r.violations(),
    )

# delta is where the majorant is evaluated; each column is a looser, simpler bound.
# fixed-k is good when k << n, fixed-m when n - k is small; each is weak elsewhere.
