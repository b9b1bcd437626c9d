"""The majorant D_{n,k} sits above |T_n^(k)| and touches it at alternate extrema."""
import numpy as np

from chebtau import cheb_deriv_eval, duffin_schaeffer_check, majorant

n, k = 12, 3
for x in np.linspace(0, 0.95, 12):
    d = majorant(n, k, x).value
    t = abs(float(cheb_deriv_eval(n, k, x)))
    print(f"x={x:5.3f}  |T^(3)|={t:12.2f}  D={d:12.2f}  ratio={t / d:6.4f}")

# at 0 the two agree when n - k is even
print("D(0) vs |T_12^(4)(0)|:", majorant(12, 4, 0.0).value, abs(float(cheb_deriv_eval(12, 4, 0.0))))

# any polynomial whose Chebyshev coefficients have |c| summing to at most 1 obeys the same bound
rng = np.random.default_rng(7)
ok = 0
for _ in range(500):
    c = rng.normal(size=10)
    c /= np.abs(c).sum()
    x = rng.uniform(-0.99, 0.99)
    ok += duffin_schaeffer_check(c, 9, 2, x)
print(f"random bounded polynomials respecting the majorant: {ok}/500")
