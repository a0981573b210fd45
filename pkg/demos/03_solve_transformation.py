"""Points where a degree-5 transformation meets the involution beta = 1 - alpha.

Run with ``python3 demos/03_solve_transformation.py``.
"""

from fractions import Fraction

from ramanujan_pi import derive_coefficients, g_transfer, load_catalog, select_solution, solve_beta_complement

cat = load_catalog()
t = cat.transformations[0]
print(f"transformation {t.name}: level s={t.level.s}, degree {t.d}")
print("alpha(x) =", t.alpha)
print("beta(x)  =", t.beta)

points = solve_beta_complement(t)
print(f"\n{len(points)} solution points")
for sp in points:
    flag = "consistent" if sp.consistent else "spurious"
    print(f"  z0 = {str(sp.z0):>8}  m0 = {str(sp.m0):<28} {flag}")

# The two real series come from z0 = 1/81 and z0 = -1/48.
for z in (Fraction(1, 81), Fraction(-1, 48)):
    sp = select_solution(points, z)
    cf, cg = g_transfer(sp)
    co = derive_coefficients(sp)
    print(f"\nz0 = {z}")
    print("  x0     =", sp.x0)
    print("  alpha0 =", sp.alpha0)
    print("  G(alpha0) = cF*F(beta0) + cG*G(beta0) with cF =", cf, " cG =", cg)
    print(f"  a = {co.a}, b = {co.b}, C = {co.C}, exact = {co.exact}")
