"""Sweep the shipped catalog: sum every series and recover its degree.

Run with ``python3 demos/05_degree_detection.py``.
"""

import time

import mpmath

from ramanujan_pi import conjecture_m0, detect_degree, evaluate_series, load_catalog, modular_q
from ramanujan_pi.ramanujan import degree_test

cat = load_catalog()
start = time.perf_counter()
print(f"{'row':<12} {'z':>24} {'method':<16} {'|sum - 1/pi|':>12} {'d':>3}  4r=b^2/(1-z)")
for s in cat.series:
    v = evaluate_series(s)
    with mpmath.workdps(70):
        err = abs(v.value - 1 / mpmath.pi)
    d = detect_degree(s.level, s.z)
    ok = modular_q(s).identity_holds
    print(f"{s.name:<12} {str(s.z):>24} {v.method:<16} {mpmath.nstr(err, 2):>12} {d:>3}  {ok}")
print(f"{len(cat.series)} rows in {time.perf_counter() - start:.1f}s")

# On alternating rows the ratio F(alpha0)/F(beta0) has a closed form.
s = cat.find("l3-d23-neg")
with mpmath.workdps(70):
    got = degree_test(s.level, s.z).ratio
    want = conjecture_m0(s.d, s.level)
    print(f"\n{s.name}: ratio {mpmath.nstr(got, 20)}")
    print(f"closed form {want} differs by {mpmath.nstr(abs(got - want.to_mp()), 3)}")
