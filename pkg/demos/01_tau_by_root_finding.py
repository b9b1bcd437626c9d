"""tau_{n,k}: how big is the largest interior bump of T_n^(k), relative to its value at 1?"""
import numpy as np

from chebtau import cheb_deriv_at_one, cheb_deriv_eval, derivative_zeros, tau

# T_6'' has critical points at 0 and +-sqrt(0.3); the rightmost one carries tau
t = tau(6, 2)
print("omega_{6,2} =", t.omega, " sqrt(0.3) =", np.sqrt(0.3))
print("tau_{6,2}   =", t.value)

# same number straight from the definition
print("check       =", abs(cheb_deriv_eval(6, 2, t.omega)) / float(cheb_deriv_at_one(6, 2)))

# zeros of each derivative sit between zeros of the one before (Rolle)
for k in range(4):
    print(f"zeros of T_8^({k}):", np.round(derivative_zeros(8, k), 5))

# the first few rows of the table, k down the side, n across
print()
print("k\\n " + "".join(f"{n:>9d}" for n in range(3, 12)))
for k in range(1, 6):
    row = [f"{tau(n, k).value:9.5f}" if n >= k + 2 else " " * 9 for n in range(3, 12)]
    print(f"{k:3d} " + "".join(row))

# big degrees are fine: Sturm counts isolate the zero, Newton finishes it
print()
for n in (100, 1000, 5000):
    print(f"tau({n}, 1) = {tau(n, 1).value:.12f}")
