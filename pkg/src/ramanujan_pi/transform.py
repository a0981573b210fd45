"""Rational functions over Q, polynomial roots, and the condition beta = 1 - alpha.

A :class:`Transformation` carries rational functions ``alpha(x)``,
``beta(x)`` and ``m(x)**2`` such that ``F_s(alpha(x)) = m(x) F_s(beta(x))``.
:func:`solve_beta_complement` finds every ``x0`` with
``beta(x0) = 1 - alpha(x0)`` and assembles the values and ``x``-derivatives
the coefficient formulas need, exactly when the root is a recognizable surd.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .errors import NoSolutions, PoleAtPoint, ValidationError
from .exactnum import (
    DEFAULT_POLICY,
    CSurd,
    PrecisionPolicy,
    Surd,
    identify_complex,
    is_exact,
    parse_literal,
    to_mp,
)
from .hyper import BranchPolicy, LevelParam, eval_F

__all__ = [
    "Poly",
    "RationalFunction",
    "Root",
    "Transformation",
    "SolutionPoint",
    "parse_rational_function",
    "rf_eval",
    "rf_derivative",
    "poly_roots",
    "squarefree_decomposition",
    "solve_beta_complement",
    "select_solution",
    "multiplier_formula",
    "multiplier_check",
    "derivative_identity_check",
    "g_transfer",
]


def _frac(c) -> Fraction:
    if isinstance(c, Surd):
        return c.to_fraction()
    return Fraction(c)


class Poly:
    """Dense univariate polynomial with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead()
        while len(rem) >= len(other.coeffs) and any(rem):
            shift = len(rem) - len(other.coeffs)
            c = rem[-1] / lead
            q[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        return Poly(c / self.lead() for c in self.coeffs) if self else self

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic() if a else Poly.constant(1)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, int):
            acc = Fraction(acc)
        return acc

    def eval_mp(self, x):
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mon:
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            sign = "-" if neg else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly('{self}')"


Poly.X = Poly((0, 1))


class RationalFunction:
    """Quotient of two :class:`Poly` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._lift(num) if not isinstance(num, Poly) else num
        den = Poly.constant(1) if den is None else (Poly._lift(den) if not isinstance(den, Poly) else den)
        if num is None or den is None:
            raise TypeError("expected polynomials")
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if num else den.monic()
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.lead()
        object.__setattr__(self, "num", Poly(c / lead for c in num.coeffs))
        object.__setattr__(self, "den", Poly(c / lead for c in den.coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RationalFunction(other)
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        """Evaluate exactly at surds/rationals, numerically at mpmath numbers."""
        if is_exact(x):
            d = self.den(x)
            if not d:
                raise PoleAtPoint(f"denominator vanishes at {x}")
            n = self.num(x)
            return n / d
        x = to_mp(x)
        d = self.den.eval_mp(x)
        if abs(d) <= mpmath.eps * 16 * max(1, abs(x)) ** self.den.degree:
            raise PoleAtPoint(f"denominator vanishes at {mpmath.nstr(x, 15)}")
        return self.num.eval_mp(x) / d

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction('{self}')"


RationalFunction.X = RationalFunction(Poly.X)


def parse_rational_function(text: str) -> RationalFunction:
    """Parse literals like ``64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)``."""
    value = parse_literal(text, {"x": RationalFunction.X}, sqrt=False)
    return RationalFunction._lift(value)


def rf_eval(f: RationalFunction, at):
    return f(at)


def rf_derivative(f: RationalFunction) -> RationalFunction:
    return f.derivative()


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class Root:
    value: mpmath.mpc
    multiplicity: int
    radius: mpmath.mpf


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lead * prod(q_i ** i)`` with squarefree ``q_i``."""
    if p.degree < 1:
        return []
    p = p.monic()
    out = []
    a = p.gcd(p.derivative())
    b = p.divmod(a)[0]
    c = p.derivative().divmod(a)[0]
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b = b.divmod(a)[0]
        c = d.divmod(a)[0]
        if a.degree > 0:
            out.append((a, i))
        d = c - b.derivative()
        i += 1
    return out


def _aberth(coeffs, tol, maxiter=1000):
    """Simultaneous Aberth-Ehrlich iteration on a monic polynomial (highest degree last)."""
    n = len(coeffs) - 1
    if n == 1:
        return [-coeffs[0]]
    center = -coeffs[n - 1] / n
    radius = 1 + max(abs(c) for c in coeffs[:-1])
    radius = min(radius, 2 * max(abs(coeffs[k]) ** (mpmath.mpf(1) / (n - k)) for k in range(n)) + 1)
    zs = [center + radius * mpmath.expjpi(mpmath.mpf(2 * k) / n + mpmath.mpf(0.4) / n) for k in range(n)]

    def pv(z):
        v = mpmath.mpc(1)
        dv = mpmath.mpc(0)
        for c in reversed(coeffs[:-1]):
            dv = dv * z + v
            v = v * z + c
        return v, dv

    for _ in range(maxiter):
        worst = 0
        for k in range(n):
            z = zs[k]
            v, dv = pv(z)
            if v == 0:
                continue
            w = v / dv
            s = mpmath.fsum(1 / (z - zs[j]) for j in range(n) if j != k)
            corr = w / (1 - w * s)
            zs[k] = z - corr
            worst = max(worst, abs(corr) / max(1, abs(z)))
        if worst < tol:
            break
    return zs


def poly_roots(poly, p: PrecisionPolicy = DEFAULT_POLICY) -> list[Root]:
    """All complex roots of an exact polynomial with multiplicities.

    Each root comes with an inclusion radius ``deg * |q(z)/q'(z)|`` for its
    squarefree factor ``q``; roots are sorted by real then imaginary part.
    """
    if not isinstance(poly, Poly):
        poly = Poly(poly)
    if poly.degree < 1:
        raise ValueError("polynomial of degree >= 1 expected")
    out: list[Root] = []
    with p.workdps():
        tol = mpmath.mpf(10) ** (-p.working_digits + 3)
        for q, mult in squarefree_decomposition(poly):
            cs = [mpmath.mpf(c.numerator) / c.denominator for c in q.coeffs]
            zs = _aberth(cs, tol)
            dq = q.derivative()
            for z in zs:
                # two Newton polishing steps
                for _ in range(2):
                    dv = dq.eval_mp(z)
                    if dv:
                        z = z - q.eval_mp(z) / dv
                dv = dq.eval_mp(z)
                rad = q.degree * abs(q.eval_mp(z) / dv) if dv else mpmath.inf
                if abs(mpmath.im(z)) <= rad:
                    z = mpmath.mpc(mpmath.re(z), 0)
                out.append(Root(mpmath.mpc(z), mult, mpmath.mpf(rad)))
    out.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    return out


# ---------------------------------------------------------------------------
# transformations


@dataclass(frozen=True)
class Transformation:
    """``F_s(alpha(x)) = m(x) F_s(beta(x))`` with ``m(x)**2 = m_squared(x)``; degree ``1/d``."""

    name: str
    level: LevelParam
    d: int
    alpha: RationalFunction
    beta: RationalFunction
    m_squared: RationalFunction

    def equation(self) -> Poly:
        """Numerator of ``alpha + beta - 1`` (denominators cleared)."""
        return (self.alpha + self.beta - 1).num

    def real_runs(self, lo=-2.0, hi=2.0, n=4000) -> list[tuple[float, float]]:
        """Maximal runs of real ``x`` with ``0 < alpha, beta < 1`` and ``m**2 > 0``, longest first."""
        fa = _float_rf(self.alpha)
        fb = _float_rf(self.beta)
        fm = _float_rf(self.m_squared)
        runs, run_start, prev_x = [], None, None
        step = (hi - lo) / n
        for i in range(n + 1):
            x = lo + i * step
            try:
                ok = 0 < fa(x) < 1 and 0 < fb(x) < 1 and fm(x) > 0
            except ZeroDivisionError:
                ok = False
            if ok and run_start is None:
                run_start = x
            if (not ok or i == n) and run_start is not None:
                end = x if ok else prev_x
                if end > run_start:
                    pad = (end - run_start) * 0.02
                    runs.append((run_start + pad, end - pad))
                run_start = None
            prev_x = x
        runs.sort(key=lambda r: r[0] - r[1])
        return runs

    def _residual_at(self, x, p):
        a = to_mp(self.alpha(x))
        b = to_mp(self.beta(x))
        m = mpmath.sqrt(to_mp(self.m_squared(x)))
        return abs(eval_F(self.level, a, p=p).f - m * eval_F(self.level, b, p=p).f)

    def sample_interval(self, p: PrecisionPolicy = DEFAULT_POLICY) -> tuple[float, float] | None:
        """The longest real run on which the transformation identity holds."""
        with p.workdps():
            for lo, hi in self.real_runs():
                mid = Fraction((lo + hi) / 2).limit_denominator(10**6)
                if self._residual_at(mid, p) < p.tolerance:
                    return lo, hi
        return None

    def sample_points(self, k=3, p: PrecisionPolicy = DEFAULT_POLICY) -> list[Fraction]:
        iv = self.sample_interval(p)
        if iv is None:
            return []
        lo, hi = iv
        return [Fraction(lo + (hi - lo) * (j + 1) / (k + 1)).limit_denominator(10**6) for j in range(k)]

    def validate(self, p: PrecisionPolicy = DEFAULT_POLICY, samples: int = 3):
        """Check ``F(alpha(x)) = m(x) F(beta(x))`` numerically at sample points.

        Returns the largest residual; raises :class:`ValidationError` when no
        real run satisfies the identity.
        """
        pts = self.sample_points(samples, p)
        if not pts:
            raise ValidationError(
                f"transformation {self.name!r}: F(alpha) = m F(beta) fails on every real run with 0 < alpha, beta < 1"
            )
        with p.workdps():
            worst = max(self._residual_at(x, p) for x in pts)
            if worst > p.tolerance:
                raise ValidationError(
                    f"transformation {self.name!r}: F(alpha) != m F(beta) (residual {mpmath.nstr(worst, 3)})"
                )
        return worst


def _float_rf(f: RationalFunction):
    num = [float(c) for c in f.num.coeffs]
    den = [float(c) for c in f.den.coeffs]

    def ev(x):
        n = 0.0
        for c in reversed(num):
            n = n * x + c
        d = 0.0
        for c in reversed(den):
            d = d * x + c
        return n / d

    return ev


_FIELDS = ("x0", "alpha0", "beta0", "m0", "alpha0_prime", "beta0_prime", "m0_prime")


@dataclass(frozen=True)
class SolutionPoint:
    """A root ``x0`` of ``beta(x) = 1 - alpha(x)`` with the derived values.

    Each value field is a :class:`Surd`/:class:`CSurd` when known exactly
    and an mpmath number otherwise.  Derivatives are taken in ``x``.
    ``consistent`` records whether ``m0`` agrees with the numerically
    computed ratio ``F(alpha0)/F(beta0)`` on the chosen branch.
    """

    x0: object
    alpha0: object
    beta0: object
    m0: object
    alpha0_prime: object
    beta0_prime: object
    m0_prime: object
    z0: object
    d: int
    level: LevelParam
    consistent: bool = True
    branch_residual: object = None
    transformation: str = ""
    exact_fields: tuple = field(default=())

    def numeric(self, name: str):
        return to_mp(getattr(self, name))

    @property
    def recognized(self) -> bool:
        return set(_FIELDS) <= set(self.exact_fields)


def _numeric_sqrt_choice(m2, ratio):
    r = mpmath.sqrt(m2)
    if ratio is None:
        return r, None
    if abs(r - ratio) <= abs(-r - ratio):
        return r, abs(r - ratio)
    return -r, abs(-r - ratio)


def solve_beta_complement(t: Transformation, p: PrecisionPolicy = DEFAULT_POLICY,
                          bp: BranchPolicy = BranchPolicy.LOWER, recognize: bool = True) -> list[SolutionPoint]:
    """All solutions of ``beta(x) = 1 - alpha(x)`` for ``t``.

    Poles and points with ``alpha in {0, 1}`` are discarded.  The sign of
    ``m0 = +-sqrt(m_squared(x0))`` is the one closest to the ratio
    ``F(alpha0)/F(beta0)`` on branch ``bp``; ``m0' = (m^2)'(x0) / (2 m0)``.
    """
    bp = BranchPolicy(bp)
    eq = t.equation()
    if eq.degree < 1:
        raise NoSolutions(f"beta = 1 - alpha has no isolated solutions for {t.name!r}")
    da = t.alpha.derivative()
    db = t.beta.derivative()
    dm2 = t.m_squared.derivative()
    points = []
    with p.workdps():
        tol = p.tolerance
        for root in poly_roots(eq, p):
            x = root.value
            try:
                a = t.alpha(x)
                t.beta(x)
            except PoleAtPoint:
                continue
            if abs(a) < tol or abs(a - 1) < tol:
                continue

            exact: dict[str, object] = {}
            xe = identify_complex(x, policy=p) if recognize else None
            if xe is not None and not eq(xe):
                try:
                    exact["x0"] = xe
                    exact["alpha0"] = t.alpha(xe)
                    exact["beta0"] = 1 - exact["alpha0"]
                    exact["alpha0_prime"] = da(xe)
                    exact["beta0_prime"] = db(xe)
                    m2e = t.m_squared(xe)
                    dm2e = dm2(xe)
                except (PoleAtPoint, ArithmeticError):
                    exact = {}
            else:
                xe = None

            vals = {k: to_mp(v) for k, v in exact.items()}
            if "alpha0" not in vals:
                vals = {
                    "x0": x,
                    "alpha0": a,
                    "beta0": 1 - a,
                    "alpha0_prime": da(x),
                    "beta0_prime": db(x),
                }
                exact = {}
            m2 = t.m_squared(x) if "alpha0" not in exact else to_mp(m2e)
            dm2v = dm2(x) if "alpha0" not in exact else to_mp(dm2e)
            try:
                fa = eval_F(t.level, vals["alpha0"], bp, p).f
                fb = eval_F(t.level, vals["beta0"], bp, p).f
                ratio = fa / fb
            except ArithmeticError:
                ratio = None
            m0, resid = _numeric_sqrt_choice(m2, ratio)
            consistent = resid is not None and resid < tol

            if exact:
                me = identify_complex(m0, policy=p) if recognize else None
                if me is not None and me * me == m2e:
                    exact["m0"] = me
                    exact["m0_prime"] = dm2e / (2 * me)

            def pick(name, numeric):
                return exact.get(name, numeric)

            alpha0 = pick("alpha0", vals["alpha0"])
            z0 = 4 * alpha0 * (1 - alpha0)
            if isinstance(z0, CSurd):
                z0 = z0.simplify()
            sp = SolutionPoint(
                x0=pick("x0", x),
                alpha0=alpha0,
                beta0=pick("beta0", vals["beta0"]),
                m0=pick("m0", m0),
                alpha0_prime=pick("alpha0_prime", vals["alpha0_prime"]),
                beta0_prime=pick("beta0_prime", vals["beta0_prime"]),
                m0_prime=pick("m0_prime", dm2v / (2 * m0)),
                z0=z0,
                d=t.d,
                level=t.level,
                consistent=consistent,
                branch_residual=resid,
                transformation=t.name,
                exact_fields=tuple(k for k in _FIELDS if k in exact),
            )
            points.append(sp)
    if not points:
        raise NoSolutions(f"no admissible solutions of beta = 1 - alpha for {t.name!r}")
    return points


def select_solution(points: Sequence[SolutionPoint], z, p: PrecisionPolicy = DEFAULT_POLICY,
                    require_consistent: bool = True) -> SolutionPoint | None:
    """Pick the solution whose ``z0 = 4 alpha0 (1 - alpha0)`` equals ``z``."""
    with p.workdps():
        for sp in points:
            if require_consistent and not sp.consistent:
                continue
            if is_exact(sp.z0) and is_exact(z):
                if sp.z0 == z:
                    return sp
            elif abs(to_mp(sp.z0) - to_mp(z)) < p.tolerance:
                return sp
    return None


def multiplier_formula(t: Transformation, x, p: PrecisionPolicy = DEFAULT_POLICY):
    """``(1/sqrt(d)) * sqrt(beta(1-beta)/(alpha(1-alpha)) * alpha'(x)/beta'(x))`` (principal root)."""
    with p.workdps():
        x = to_mp(x)
        a = t.alpha(x)
        b = t.beta(x)
        da = t.alpha.derivative()(x)
        db = t.beta.derivative()(x)
        inner = b * (1 - b) / (a * (1 - a)) * da / db
        return mpmath.sqrt(inner) / mpmath.sqrt(t.d)


def multiplier_check(t: Transformation, x, p: PrecisionPolicy = DEFAULT_POLICY, m=None):
    """Residual between ``m(x)`` and the multiplier formula.

    ``m`` defaults to the principal root of ``m_squared(x)``; the formula's
    square root is matched up to sign, since the formula fixes ``m`` only
    up to that sign.
    """
    with p.workdps():
        r = multiplier_formula(t, x, p)
        if m is None:
            m = mpmath.sqrt(t.m_squared(to_mp(x)))
        m = to_mp(m)
        return min(abs(m - r), abs(m + r))


def derivative_identity_check(sp: SolutionPoint, p: PrecisionPolicy = DEFAULT_POLICY):
    """``|beta0'/alpha0' - 1/(d m0^2)|``."""
    if all(is_exact(getattr(sp, k)) for k in ("alpha0_prime", "beta0_prime", "m0")):
        diff = sp.beta0_prime / sp.alpha0_prime - 1 / (sp.d * sp.m0 * sp.m0)
        if not diff:
            return mpmath.mpf(0)
    with p.workdps():
        ap, bp_, m0 = sp.numeric("alpha0_prime"), sp.numeric("beta0_prime"), sp.numeric("m0")
        return abs(bp_ / ap - 1 / (sp.d * m0 * m0))


def g_transfer(sp: SolutionPoint, p: PrecisionPolicy = DEFAULT_POLICY):
    """Coefficients ``(cF, cG)`` with ``G(alpha0) = cF F(beta0) + cG G(beta0)``.

    ``cF = alpha0 m0'/alpha0'`` and ``cG = alpha0 (m0/beta0)(beta0'/alpha0')``;
    exact when every ingredient is.
    """
    names = ("alpha0", "beta0", "m0", "alpha0_prime", "beta0_prime", "m0_prime")
    if all(is_exact(getattr(sp, k)) for k in names):
        cf = sp.alpha0 * sp.m0_prime / sp.alpha0_prime
        cg = sp.alpha0 * (sp.m0 / sp.beta0) * (sp.beta0_prime / sp.alpha0_prime)
        return _simplify(cf), _simplify(cg)
    with p.workdps():
        a, b, m, ap, bp_, mp_ = (sp.numeric(k) for k in names)
        return a * mp_ / ap, a * (m / b) * (bp_ / ap)


def _simplify(v):
    return v.simplify() if isinstance(v, CSurd) else v
