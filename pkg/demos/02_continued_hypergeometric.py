"""The functions F_s(alpha) = 2F1(1/s, 1 - 1/s; 1; alpha) off the unit disc.

Run with ``python3 demos/02_continued_hypergeometric.py``.
"""

import mpmath

from ramanujan_pi import BranchPolicy, LevelParam, clausen_residual, eval_F, legendre_residual

mpmath.mp.dps = 30

for s in (2, 3, 4, 6):
    lp = LevelParam(s)
    v = eval_F(lp, mpmath.mpf("0.3"))
    print(f"s={s}  F(0.3) = {mpmath.nstr(v.f, 20)}  G(0.3) = {mpmath.nstr(v.g, 20)}")

# Real arguments above 1 sit on the branch cut; the two sides differ by
# complex conjugation.
lp = LevelParam(4)
lower = eval_F(lp, 3, BranchPolicy.LOWER).f
upper = eval_F(lp, 3, BranchPolicy.UPPER).f
print("F(3) from below:", mpmath.nstr(lower, 15))
print("F(3) from above:", mpmath.nstr(upper, 15))

# Both quadratic identities hold anywhere the continuation reaches.
for alpha in (mpmath.mpf("-2.5"), mpmath.mpc(2, 1), mpmath.mpf(3)):
    print(f"Legendre residual at {alpha}: {mpmath.nstr(legendre_residual(lp, alpha), 3)}")
for alpha in (mpmath.mpf("-0.2"), mpmath.mpf("0.1"), mpmath.mpc("0.2", "0.1")):
    print(f"Clausen residual at {alpha}: {mpmath.nstr(clausen_residual(lp, alpha), 3)}")
