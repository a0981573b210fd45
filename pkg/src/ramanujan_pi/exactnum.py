"""Precision policy, exact quadratic surds and constant recognition.

A :class:`Surd` is a finite sum ``sum(c_k * sqrt(k))`` with rational ``c_k``
and squarefree ``k >= 1``.  :class:`CSurd` pairs two of them as real and
imaginary parts.  Both are immutable and canonical, so ``==`` is
mathematical equality.  Numeric work uses :mod:`mpmath` at the working
precision of a :class:`PrecisionPolicy`.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath
import numpy as np
from mpmath import mp

from .errors import DivisionByZero, ParseError, UnsupportedRadicalDepth

__all__ = [
    "PrecisionPolicy",
    "DEFAULT_POLICY",
    "Surd",
    "CSurd",
    "I",
    "parse_surd",
    "parse_literal",
    "surd_arith",
    "surd_eval",
    "to_mp",
    "is_exact",
    "identify",
    "identify_complex",
    "squarefree_part",
]


@dataclass(frozen=True)
class PrecisionPolicy:
    """Decimal accuracy requested from a computation.

    Work is carried out at ``target_digits + guard_digits`` decimal digits;
    checks against identities use :attr:`tolerance`, i.e. ``10**(5 - target)``.
    """

    target_digits: int = 50
    guard_digits: int = 20

    def __post_init__(self):
        if int(self.target_digits) < 10:
            raise ValueError("target_digits must be >= 10")
        if int(self.guard_digits) < 10:
            raise ValueError("guard_digits must be >= 10")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    @property
    def tolerance(self):
        return mpmath.mpf(10) ** (5 - self.target_digits)

    @property
    def epsilon(self):
        """``10**(-target_digits)``."""
        return mpmath.mpf(10) ** (-self.target_digits)

    def workdps(self):
        """Context manager switching mpmath to the working precision."""
        return mp.workdps(self.working_digits)


DEFAULT_POLICY = PrecisionPolicy()


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError("expected a positive integer")
    out = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p, step = 7, 4
    while p * p <= n and p < 100_000:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            out.append((n, 1))
        else:
            from sympy import factorint

            out.extend(sorted(factorint(n).items()))
    return tuple(out)


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(s, k)`` with ``n == s*s*k`` and ``k`` squarefree."""
    s = k = 1
    for p, e in _factor(n):
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    return s, k


def _primes_of(k: int) -> tuple[int, ...]:
    return tuple(p for p, _ in _factor(k))


def _radical_rank(keys) -> int:
    """Rank over GF(2) of the square classes ``{sqrt(k)}``."""
    index: dict[int, int] = {}
    basis: list[int] = []
    for k in keys:
        v = 0
        for p in _primes_of(k):
            v ^= 1 << index.setdefault(p, len(index))
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


# ---------------------------------------------------------------------------
# exact surds


def _is_mp_number(x) -> bool:
    return isinstance(x, (mpmath.mpf, mpmath.mpc, float, complex))


class Surd:
    """Real quadratic surd ``sum(c_k * sqrt(k))``.

    >>> Surd.sqrt(2) * Surd.sqrt(6)
    Surd('2*sqrt(3)')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Surd):
            terms = value._terms
        elif isinstance(value, dict):
            terms = _normalize(value.items())
        elif isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            q = Fraction(value)
            terms = ((1, q),) if q else ()
        elif isinstance(value, str):
            parsed = parse_surd(value)
            if not isinstance(parsed, Surd):
                raise ParseError("literal is not real")
            terms = parsed._terms
        else:
            raise TypeError(f"cannot build a Surd from {type(value).__name__}")
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def _from_terms(cls, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def sqrt(cls, q) -> "Surd":
        """Exact square root of a non-negative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("sqrt of a negative rational is not a real surd")
        if q == 0:
            return cls()
        # sqrt(p/r) = sqrt(p*r)/r
        s, k = squarefree_part(q.numerator * q.denominator)
        return cls._from_terms(((k, Fraction(s, q.denominator)),))

    # --- structure -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def radicands(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self._terms if k != 1)

    def is_rational(self) -> bool:
        return all(k == 1 for k, _ in self._terms)

    def rational_part(self) -> Fraction:
        for k, c in self._terms:
            if k == 1:
                return c
        return Fraction(0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    @property
    def real(self) -> "Surd":
        return self

    @property
    def imag(self) -> "Surd":
        return Surd()

    def conjugate(self) -> "Surd":
        return self

    # --- arithmetic ------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self._terms == other._terms
        if isinstance(other, CSurd):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self._terms == Surd(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("Surd", self._terms)))
        return self._hash

    def __neg__(self):
        return Surd._from_terms(tuple((k, -c) for k, c in self._terms))

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        if isinstance(other, Surd):
            acc = dict(self._terms)
            for k, c in other._terms:
                acc[k] = acc.get(k, 0) + c
            return Surd._from_terms(_normalize(acc.items()))
        if _is_mp_number(other):
            return self.to_mp() + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        if isinstance(other, Surd):
            return self + (-other)
        if _is_mp_number(other):
            return self.to_mp() - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        if isinstance(other, Surd):
            acc: dict[int, Fraction] = {}
            for k1, c1 in self._terms:
                for k2, c2 in other._terms:
                    g = math.gcd(k1, k2)
                    # sqrt(k1)*sqrt(k2) = g*sqrt(k1*k2/g^2) for squarefree k1, k2
                    k = (k1 // g) * (k2 // g)
                    acc[k] = acc.get(k, 0) + c1 * c2 * g
            return Surd._from_terms(_normalize(acc.items()))
        if _is_mp_number(other):
            return self.to_mp() * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            inv = 1 / Fraction(other)
            return Surd._from_terms(tuple((k, c * inv) for k, c in self._terms))
        if isinstance(other, Surd):
            return self * other.reciprocal()
        if _is_mp_number(other):
            return self.to_mp() / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd(other) * self.reciprocal()
        if _is_mp_number(other):
            return other / self.to_mp()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        result, base = Surd(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "Surd":
        if not self._terms:
            raise DivisionByZero("division by zero")
        if len(self._terms) == 1:
            (k, c), = self._terms
            return Surd._from_terms(((k, 1 / (c * k)),))
        if _radical_rank(self.radicands()) > 2:
            raise UnsupportedRadicalDepth(
                f"cannot rationalize {self}: more than two independent radicals"
            )
        num, den = Surd(1), self
        while not den.is_rational():
            p = max(max(_primes_of(k)) for k in den.radicands())
            conj = Surd._from_terms(
                _normalize((k, -c if k % p == 0 else c) for k, c in den._terms)
            )
            num = num * conj
            den = den * conj
        return num / den.rational_part()

    # --- numerics --------------------------------------------------------

    def to_mp(self):
        """Value as an ``mpf`` at the current mpmath precision."""
        acc = mpmath.mpf(0)
        for k, c in self._terms:
            term = mpmath.mpf(c.numerator) / c.denominator
            if k != 1:
                term *= mpmath.sqrt(k)
            acc += term
        return acc

    def __float__(self):
        with mp.workdps(30):
            return float(self.to_mp())

    def sign(self) -> int:
        """Exact sign, decided numerically with increasing precision."""
        if not self._terms:
            return 0
        if self.is_rational():
            return 1 if self.rational_part() > 0 else -1
        dps = 30
        while True:
            with mp.workdps(dps):
                v = self.to_mp()
                if abs(v) > mpmath.mpf(10) ** (5 - dps):
                    return 1 if v > 0 else -1
            dps *= 2

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # --- text ------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self._terms):
            neg = c < 0
            a = -c if neg else c
            if k == 1:
                body = str(a)
            elif a == 1:
                body = f"sqrt({k})"
            else:
                body = f"{a}*sqrt({k})"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Surd('{self}')"


def _normalize(items) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    for k, c in items:
        k = int(k)
        c = Fraction(c)
        if k < 1:
            raise ValueError("radicands must be positive")
        s, kk = squarefree_part(k)
        acc[kk] = acc.get(kk, 0) + c * s
    return tuple(sorted((k, c) for k, c in acc.items() if c))


class CSurd:
    """Complex surd ``re + im*i`` with :class:`Surd` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Surd) else Surd(re))
        object.__setattr__(self, "im", im if isinstance(im, Surd) else Surd(im))

    def __setattr__(self, name, value):
        raise AttributeError("CSurd is immutable")

    @property
    def real(self) -> Surd:
        return self.re

    @property
    def imag(self) -> Surd:
        return self.im

    def conjugate(self) -> "CSurd":
        return CSurd(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def simplify(self):
        """Drop to a :class:`Surd` when the imaginary part vanishes."""
        return self.re if not self.im else self

    def abs2(self) -> Surd:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, CSurd):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (Surd, int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash(("CSurd", self.re, self.im))

    @staticmethod
    def _lift(other):
        if isinstance(other, CSurd):
            return other
        if isinstance(other, (Surd, int, Fraction)):
            return CSurd(other)
        return None

    def __neg__(self):
        return CSurd(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return self.to_mp() + other if _is_mp_number(other) else NotImplemented
        return CSurd(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return self.to_mp() - other if _is_mp_number(other) else NotImplemented
        return CSurd(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return self.to_mp() * other if _is_mp_number(other) else NotImplemented
        return CSurd(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def reciprocal(self) -> "CSurd":
        n = self.abs2()
        if not n:
            raise DivisionByZero("division by zero")
        inv = n.reciprocal()
        return CSurd(self.re * inv, -self.im * inv)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return self.to_mp() / other if _is_mp_number(other) else NotImplemented
        if not o.im:
            inv = o.re.reciprocal() if o.re else None
            if inv is None:
                raise DivisionByZero("division by zero")
            return CSurd(self.re * inv, self.im * inv)
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return other / self.to_mp() if _is_mp_number(other) else NotImplemented
        return o * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        result, base = CSurd(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_mp(self):
        return mpmath.mpc(self.re.to_mp(), self.im.to_mp())

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"({self.im})*i"
        if not self.re:
            return imag
        if imag.startswith("-"):
            return f"{self.re}{imag}"
        return f"{self.re}+{imag}"

    def __repr__(self):
        return f"CSurd('{self}')"


I = CSurd(0, 1)


def surd_arith(lhs, rhs, op: str):
    """Apply ``op`` in ``{"add", "sub", "mul", "div"}`` to two surds."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if not rhs:
            raise DivisionByZero("division by zero")
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


def is_exact(value) -> bool:
    return isinstance(value, (Surd, CSurd, int, Fraction))


def to_mp(value):
    """Convert an exact or numeric value to mpmath at the current precision."""
    if isinstance(value, (Surd, CSurd)):
        return value.to_mp()
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return +value
    if isinstance(value, (complex,)):
        return mpmath.mpc(value)
    return mpmath.mpf(value)


def surd_eval(e, policy: PrecisionPolicy = DEFAULT_POLICY):
    """Evaluate a surd as an ``mpc`` at the policy's working precision."""
    with policy.workdps():
        v = to_mp(e)
        return mpmath.mpc(v) if not isinstance(v, mpmath.mpc) else v


# ---------------------------------------------------------------------------
# literal grammar


def parse_literal(text: str, names: dict, sqrt=True):
    """Evaluate an exact arithmetic literal.

    ``names`` maps identifiers to values; ``sqrt(q)`` is available when
    ``sqrt`` is true.  Only integers, ``+ - * /``, integer powers
    (``^`` or ``**``) and parentheses are accepted.
    """
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty literal", 1, 1)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"invalid literal {text!r}: {exc.msg}", exc.lineno, exc.offset) from None
    return _eval_node(tree.body, names, sqrt, text)


def _eval_node(node, names, allow_sqrt, text):
    def fail(msg):
        raise ParseError(f"{msg} in {text!r}", getattr(node, "lineno", 1), getattr(node, "col_offset", 0) + 1)

    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            fail("only integer literals are accepted")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in names:
            fail(f"unknown name {node.id!r}")
        return names[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, names, allow_sqrt, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, names, allow_sqrt, text)
        if isinstance(node.op, ast.Pow):
            right = _eval_node(node.right, names, allow_sqrt, text)
            if not (isinstance(right, Fraction) and right.denominator == 1):
                fail("exponents must be integers")
            return left ** int(right)
        right = _eval_node(node.right, names, allow_sqrt, text)
        try:
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        except ZeroDivisionError:
            fail("division by zero")
        fail("unsupported operator")
    if isinstance(node, ast.Call) and allow_sqrt:
        if not (isinstance(node.func, ast.Name) and node.func.id == "sqrt") or node.keywords or len(node.args) != 1:
            fail("only sqrt(n) calls are accepted")
        arg = _eval_node(node.args[0], names, allow_sqrt, text)
        if isinstance(arg, Surd) and arg.is_rational():
            arg = arg.rational_part()
        if not isinstance(arg, Fraction) or arg <= 0:
            fail("sqrt expects a positive rational")
        return Surd.sqrt(arg)
    fail("unsupported syntax")


def parse_surd(text: str):
    """Parse a surd literal such as ``1/2-7/24*sqrt(3)`` or ``(3+i)*sqrt(2)/10``.

    Returns a :class:`Surd` for real values and a :class:`CSurd` otherwise.
    """
    value = parse_literal(text, {"i": I})
    if isinstance(value, Fraction):
        return Surd(value)
    if isinstance(value, CSurd):
        return value.simplify()
    return value


# ---------------------------------------------------------------------------
# recognition

_SQUAREFREE_CACHE: dict[int, list[int]] = {}


def _squarefree_upto(n: int) -> list[int]:
    if n not in _SQUAREFREE_CACHE:
        _SQUAREFREE_CACHE[n] = [k for k in range(1, n + 1) if squarefree_part(k)[1] == k]
    return _SQUAREFREE_CACHE[n]


def _mp_fraction(x) -> Fraction:
    man, exp = x.man_exp if x else (0, 0)
    return Fraction(man) * (Fraction(2) ** exp)


def identify(
    x,
    max_denominator: int = 1000,
    max_radicand: int = 100,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    *,
    two_term: bool = True,
    max_pair_radicand: int = 30,
    max_pair_denominator: int = 300,
    max_pair_numerator: int = 1000,
):
    """Recognize ``x`` as a simple surd, or return ``None``.

    Tried in order: a rational ``p/q``; a single radical ``(p/q)*sqrt(k)``,
    found from continued-fraction convergents of ``x**2``; and, when
    ``two_term`` is set, a sum ``c1*sqrt(k1) + c2*sqrt(k2)`` by exhaustive
    search over small common denominators.  A candidate is accepted when it
    matches ``x`` to within ``policy.tolerance``.
    """
    with policy.workdps():
        x = mpmath.mpf(x)
        tol = policy.tolerance

        def close(c: Surd) -> bool:
            return abs(c.to_mp() - x) < tol

        if abs(x) < tol:
            return Surd()
        fx = _mp_fraction(x)
        r = fx.limit_denominator(max_denominator)
        if abs(mpmath.mpf(r.numerator) / r.denominator - x) < tol:
            return Surd(r)

        sq = _mp_fraction(x * x).limit_denominator(max_denominator**2)
        if sq > 0:
            cand = Surd.sqrt(sq)
            (k, c), = cand.terms.items()
            if x < 0:
                cand = -cand
            if k <= max_radicand and c.denominator <= max_denominator and close(cand):
                return cand

        if not two_term:
            return None
        return _identify_pair(x, tol, max_pair_radicand, max_pair_denominator, max_pair_numerator)


def _identify_pair(x, tol, kmax, qmax, pmax):
    ks = _squarefree_upto(kmax)
    pairs = sorted(((k1, k2) for k1 in ks for k2 in ks if k1 < k2), key=lambda p: (p[1], p[0]))
    xf = float(x)
    q = np.arange(1, qmax + 1, dtype=np.float64)[:, None]
    p2 = np.arange(-pmax, pmax + 1, dtype=np.float64)[None, :]
    slack = 1e-9 * max(1.0, abs(xf) * qmax + pmax * math.sqrt(kmax))
    for k1, k2 in pairs:
        s1, s2 = math.sqrt(k1), math.sqrt(k2)
        p1 = (q * xf - p2 * s2) / s1
        near = np.abs(p1 - np.rint(p1)) < slack
        near &= np.abs(p1) <= pmax
        near[:, pmax] = False  # single-term cases were handled already
        if not near.any():
            continue
        for qi, ji in zip(*np.nonzero(near)):
            den = int(qi) + 1
            c1 = Fraction(int(round(p1[qi, ji])), den)
            c2 = Fraction(int(ji) - pmax, den)
            if not c1:
                continue
            cand = Surd({k1: c1, k2: c2})
            if abs(cand.to_mp() - x) < tol:
                return cand
    return None


def identify_complex(z, max_denominator: int = 1000, max_radicand: int = 100,
                     policy: PrecisionPolicy = DEFAULT_POLICY, **kw):
    """Recognize real and imaginary parts separately; ``None`` if either fails."""
    with policy.workdps():
        z = mpmath.mpc(z)
        re = identify(z.real, max_denominator, max_radicand, policy, **kw)
        if re is None:
            return None
        im = identify(z.imag, max_denominator, max_radicand, policy, **kw)
        if im is None:
            return None
    return CSurd(re, im).simplify()
