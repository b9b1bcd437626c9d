"""What happens as n grows: Bessel limits for fixed k, Hermite limits for fixed n - k."""
from chebtau import bessel_at_next_zero, convergence_table, tau_double_star, tau_star
from chebtau.special import airy_constants

c = airy_constants()
print("i1 =", float(c.i1), " Ai'(i1) =", float(c.ai_prime_at_i1))
print(f"a0={float(c.a0):.6f}  C0={float(c.C0):.6f}  a1={float(c.a1):.6f}  C1={float(c.C1):.6f}")

print("\nfixed k: exact limit against its leading approximation")
for k in (1, 2, 5, 20, 100, 400):
    v = tau_star(k)
    print(f"k={k:4d}  exact={v.exact:.6e}  approx={v.asymptotic:.6e}  ratio={v.ratio:.4f}")

print("\nfixed m = n - k (grows like (em/2)^(m/2), so shown via logs)")
for m in (2, 3, 6, 50, 1000, 10_000):
    v = tau_double_star(m)
    print(f"m={m:6d}  log exact={v.log_exact:12.4f}  ratio={v.ratio:.4f}")

print("\nhow fast tau_{n,1} reaches its limit")
for r in convergence_table("tau_star", 1, [10, 50, 250, 1000]):
    print(f"n={r.n:5d}  tau={r.finite:.10f}  gap={r.gap:.3e}  n^2*gap={r.n**2 * r.gap:.5f}")

print("\nJ_nu at the first zero of J_{nu+1}, against its Airy estimate")
for nu in (10, 40, 160):
    val, approx = bessel_at_next_zero(nu)
    print(f"nu={nu:4d}  J={val:.6f}  estimate={approx:.6f}")
