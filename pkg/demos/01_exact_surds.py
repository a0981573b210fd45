"""Exact surd arithmetic and recognition of high-precision numbers.

Run with ``python3 demos/01_exact_surds.py``.
"""

import mpmath

from ramanujan_pi import CSurd, Surd, identify, identify_complex, parse_surd

# Literals are parsed into canonical form: rational multiples of square
# roots of squarefree integers.
a = parse_surd("4/(9*sqrt(2))")
b = parse_surd("40/(9*sqrt(2))")
print("a =", a)
print("b =", b)
print("b/a =", b / a)

# Products of radicals stay exact.
print("sqrt(2)*sqrt(6) =", Surd.sqrt(2) * Surd.sqrt(6))
print("(sqrt(5)-2)*(sqrt(5)+2) =", parse_surd("(sqrt(5)-2)*(sqrt(5)+2)"))

# Complex surds carry an exact imaginary part.
m0 = parse_surd("(3+i)*sqrt(2)/10")
print("m0 =", m0, " |m0|^2 =", m0 * m0.conjugate())
assert isinstance(m0, CSurd)

# Going the other way: a 70-digit number is recognized as a surd.
with mpmath.workdps(70):
    x = mpmath.mpf(1) / 2 - 7 * mpmath.sqrt(3) / 24
    print("identify(%s...) =" % mpmath.nstr(x, 20), identify(x))
    z = m0.to_mp()
    print("identify_complex(m0 numeric) =", identify_complex(z))
