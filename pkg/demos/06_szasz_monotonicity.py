"""Local maxima of normalized ultraspherical polynomials as the degree increases."""
from chebtau import monotonicity_report, relative_extrema, szasz_identity_residual

for lam in (1.5, 0.5, 0.0, -0.25):
    rep = monotonicity_report(lam, 1, range(2, 13))
    vals = "  ".join(f"{v:.4f}" for _, v in rep.rows)
    print(f"lambda={lam:5.2f} ({rep.expected:10s}) mu_1: {vals}")

# the profile for one degree: largest bump nearest the ends, smallest in the middle
prof = relative_extrema(9, 2.0)
for y, mu in zip(prof.abscissae, prof.values):
    print(f"  y={y:+.5f}  |p_9(y)|={mu:.5f}")

# the identity that drives all of this, checked on a few points
worst = max(abs(szasz_identity_residual(n, 2.5, x / 10)) for n in range(1, 10) for x in range(-10, 11))
print("largest identity residual:", worst)
