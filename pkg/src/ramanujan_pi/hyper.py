"""The functions ``F_s(a) = 2F1(1/s, 1-1/s; 1; a)`` and ``G_s(a) = a F_s'(a)``.

Inside ``|a| <= 1/2`` the hypergeometric power series is summed directly
with a rigorous geometric tail bound.  Elsewhere the pair ``(F, F')`` is
carried from a base point on ``|a| = 1/2`` to the target by Taylor-series
steps of the hypergeometric differential equation

    a(1-a) F'' + (1-2a) F' - (1/s)(1-1/s) F = 0,

each step no longer than half the distance to the nearest singular point
(0 or 1).  Real arguments beyond 1 sit on the branch cut; the path then
approaches them from the half-plane named by :class:`BranchPolicy`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import mp

from .errors import DivergentSeries, PrecisionLoss, SingularArgument
from .exactnum import DEFAULT_POLICY, PrecisionPolicy, Surd, to_mp

__all__ = [
    "LevelParam",
    "BranchPolicy",
    "HyperValue",
    "KernelSums",
    "eval_F",
    "legendre_residual",
    "clausen_residual",
    "kernel_series",
    "kernel_term_ratio",
    "continuation_path",
]

_ELL = {2: 4, 3: 3, 4: 2, 6: 1}
_SIN_PI_OVER_S = {2: "1", 3: "sqrt(3)/2", 4: "sqrt(2)/2", 6: "1/2"}

# fraction of the distance to the nearest singularity covered by one step
STEP_RATIO = 0.5


@dataclass(frozen=True)
class LevelParam:
    """Hypergeometric parameter ``s`` and the level ``ell = 4 sin^2(pi/s)``."""

    s: int

    def __post_init__(self):
        if self.s not in _ELL:
            raise ValueError(f"s must be one of 2, 3, 4, 6 (got {self.s})")

    @classmethod
    def from_ell(cls, ell: int) -> "LevelParam":
        for s, l in _ELL.items():
            if l == ell:
                return cls(s)
        raise ValueError(f"level must be one of 1, 2, 3, 4 (got {ell})")

    @property
    def ell(self) -> int:
        return _ELL[self.s]

    @property
    def a(self) -> Fraction:
        return Fraction(1, self.s)

    @property
    def b(self) -> Fraction:
        return 1 - Fraction(1, self.s)

    @property
    def sin_pi_over_s(self) -> Surd:
        """``sin(pi/s)`` as an exact surd."""
        return Surd(_SIN_PI_OVER_S[self.s])


class BranchPolicy(str, enum.Enum):
    """Half-plane from which real arguments ``> 1`` are approached."""

    LOWER = "lower"
    UPPER = "upper"

    @property
    def sign(self) -> int:
        return -1 if self is BranchPolicy.LOWER else 1


@dataclass(frozen=True)
class HyperValue:
    f: mpmath.mpc
    df: mpmath.mpc
    g: mpmath.mpc
    err_bound: mpmath.mpf


def _ab(lp: LevelParam):
    return mpmath.mpf(lp.s - 1) / (lp.s * lp.s)


def _direct_series(ab, alpha, eps):
    """Sum ``F`` and ``G`` at ``|alpha| <= 1/2``; returns ``(F, G, err)``."""
    if not alpha:
        return mpmath.mpf(1), mpmath.mpf(0), mpmath.mpf(0)
    r = abs(alpha)
    t = mpmath.mpf(1)
    f = mpmath.mpf(1)
    g = mpmath.mpf(0)
    n = 0
    while True:
        t = t * alpha * (n * n + n + ab) / ((n + 1) * (n + 1))
        n += 1
        f += t
        g += n * t
        # (n+1) t_{n+1} / (n t_n) = alpha (1 + ab/(n(n+1))), decreasing in n
        rho = r * (1 + ab / (n * (n + 1)))
        if rho < 1:
            at = abs(t)
            tail_f = at * rho / (1 - rho)
            tail_g = n * tail_f
            if n > 4 and tail_g < eps and tail_f < eps:
                return f, g, tail_f + tail_g


def _taylor_step(ab, c, h, f, df, eps):
    """Advance ``(F, F')`` from ``c`` to ``c + h`` with the local Taylor series."""
    A = c * (1 - c)
    B = 1 - 2 * c
    u = h * h / A
    v = B * h / A
    w0 = f
    w1 = df * h
    val = w0 + w1
    der = w1
    scale = max(abs(w0), abs(w1), 1)
    n = 0
    small = 0
    while True:
        n1 = n + 1
        w2 = ((n * n + n + ab) * w0 * u - n1 * n1 * w1 * v) / (n1 * (n + 2))
        val += w2
        der += (n + 2) * w2
        w0, w1 = w1, w2
        n += 1
        size = (abs(w0) + abs(w1)) * (n + 2)
        if size < eps * scale:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    # geometric majorant with ratio <= STEP_RATIO
    tail = 4 * size
    return val, der / h, tail


def continuation_path(alpha, branch: BranchPolicy = BranchPolicy.LOWER, via: Sequence | None = None):
    """Polyline used to continue from the base disc to ``alpha``.

    The first point lies on ``|a| <= 1/2``.  ``via`` overrides the default
    intermediate waypoints; the caller is then responsible for the path
    staying clear of the cut ``[1, inf)``.
    """
    alpha = mpmath.mpc(alpha)
    if via:
        pts = [mpmath.mpc(p) for p in via]
        first = pts[0]
        if abs(first) > 0.5:
            pts.insert(0, first / abs(first) / 2)
        return pts + [alpha]
    if alpha.imag == 0 and alpha.real > 1:
        return [mpmath.mpc(0.5), mpmath.mpc(1, 0.5 * branch.sign), alpha]
    return [alpha / abs(alpha) / 2, alpha]


def eval_F(lp: LevelParam, alpha, bp: BranchPolicy = BranchPolicy.LOWER,
           p: PrecisionPolicy = DEFAULT_POLICY, *, via: Sequence | None = None) -> HyperValue:
    """Evaluate ``F_s`` and ``G_s`` at a complex argument.

    ``alpha`` may be an mpmath number, a Python number or an exact surd.
    Raises :class:`SingularArgument` at ``alpha == 1`` and
    :class:`PrecisionLoss` when the estimated error exceeds
    ``10**(-target_digits)`` relative to ``max(1, |F|)``.
    """
    bp = BranchPolicy(bp)
    with p.workdps():
        alpha = mpmath.mpc(to_mp(alpha))
        if alpha == 1:
            raise SingularArgument("F_s has a logarithmic singularity at 1")
        ab = _ab(lp)
        eps = mpmath.mpf(10) ** (-(p.target_digits + p.guard_digits // 2))
        if alpha.imag == 0:
            alpha = alpha.real
        if abs(alpha) <= 0.5 and not via:
            f, g, err = _direct_series(ab, alpha, eps)
            df = g / alpha if alpha else +ab
        else:
            pts = continuation_path(alpha, bp, via)
            if all(q.imag == 0 for q in pts):
                pts = [q.real for q in pts]
            base = pts[0]
            f, g, err = _direct_series(ab, base, eps)
            df = g / base
            c = base
            for target in pts[1:]:
                while c != target:
                    dist = min(abs(c), abs(1 - c))
                    if dist == 0:
                        raise SingularArgument("continuation path hits a singular point")
                    remaining = target - c
                    step = STEP_RATIO * dist
                    if abs(remaining) <= step:
                        h = remaining
                    else:
                        h = remaining * (step / abs(remaining))
                    f, df, tail = _taylor_step(ab, c, h, f, df, eps)
                    err += tail * max(1, abs(f))
                    c = target if h is remaining else c + h
            g = alpha * df
        f, df, g = mpmath.mpc(f), mpmath.mpc(df), mpmath.mpc(g)
        if err > p.epsilon * max(1, abs(f)):
            raise PrecisionLoss(
                f"estimated error {mpmath.nstr(err, 3)} exceeds the target; raise guard digits"
            )
        return HyperValue(f=f, df=df, g=g, err_bound=mpmath.mpf(err))


def legendre_residual(lp: LevelParam, alpha, bp: BranchPolicy = BranchPolicy.LOWER,
                      p: PrecisionPolicy = DEFAULT_POLICY):
    """``|a F(a) G(b) + b F(b) G(a) - sin(pi/s)/pi|`` with ``b = 1 - a``."""
    with p.workdps():
        alpha = mpmath.mpc(to_mp(alpha))
        if alpha == 0 or alpha == 1:
            raise SingularArgument("alpha must avoid 0 and 1")
        beta = 1 - alpha
        va = eval_F(lp, alpha, bp, p)
        vb = eval_F(lp, beta, bp, p)
        lhs = alpha * va.f * vb.g + beta * vb.f * va.g
        return abs(lhs - lp.sin_pi_over_s.to_mp() / mpmath.pi)


@dataclass(frozen=True)
class KernelSums:
    """``s0 = sum t_n z^n`` and ``s1 = sum n t_n z^n`` for the Clausen kernel."""

    s0: mpmath.mpc
    s1: mpmath.mpc
    terms: int
    tail0: mpmath.mpf
    tail1: mpmath.mpf
    last_term: mpmath.mpf


def kernel_term_ratio(s: int, n: int) -> Fraction:
    """``t_n / t_(n-1)`` for ``t_n = (1/2)_n (1/s)_n (1-1/s)_n / n!^3``."""
    return Fraction((2 * n - 1) * (s * n - s + 1) * (s * n - 1), 2 * s * s * n**3)


def kernel_series(s: int, z, p: PrecisionPolicy = DEFAULT_POLICY, terms: int | None = None) -> KernelSums:
    """Sum the Clausen kernel series in binary fixed point.

    Summation stops once the certified tails (term ratio ``< |z|``) fall
    below ``10**(-working_digits)``, or after exactly ``terms`` terms past
    the constant one when ``terms`` is given.
    """
    with p.workdps():
        z = to_mp(z)
        az = abs(z)
        if az >= 1:
            raise DivergentSeries("the kernel series needs |z| < 1")
        cplx = isinstance(z, mpmath.mpc) and z.imag != 0
        bits = int(p.working_digits * 3.33) + 64
        one = 1 << bits
        zr = int(mpmath.nint(mpmath.ldexp(mpmath.re(z), bits)))
        zi = int(mpmath.nint(mpmath.ldexp(mpmath.im(z), bits))) if cplx else 0
        ratio = az / (1 - az)
        rnum = mpmath.mpf(ratio) * (1 + mpmath.mpf(10) ** -6)
        threshold = one >> int(p.working_digits * 3.33 + 8)
        # integer test  n*|t|*ratio < threshold  without float overflow
        rfrac = Fraction(int(mpmath.ceil(mpmath.ldexp(rnum, 64))), 1 << 64)
        tr, ti = one, 0
        s0r, s0i, s1r, s1i = one, 0, 0, 0
        n = 0
        while True:
            if terms is not None and n >= terms:
                break
            n += 1
            if cplx:
                tr, ti = (tr * zr - ti * zi) >> bits, (tr * zi + ti * zr) >> bits
            else:
                tr = (tr * zr) >> bits
            num = (2 * n - 1) * (s * n - s + 1) * (s * n - 1)
            den = 2 * s * s * n**3
            tr = tr * num // den
            if cplx:
                ti = ti * num // den
            s0r += tr
            s1r += n * tr
            if cplx:
                s0i += ti
                s1i += n * ti
            if terms is None:
                at = abs(tr) + abs(ti)
                if n * at * rfrac.numerator < threshold * rfrac.denominator:
                    break
        scale = mpmath.ldexp(1, -bits)
        at = (abs(tr) + abs(ti)) * scale
        rounding = 4 * (n + 1) ** 2 * scale
        tail0 = at * rnum + rounding
        tail1 = max(n, 1) * at * rnum + rounding
        s0 = mpmath.mpc(s0r * scale, s0i * scale)
        s1 = mpmath.mpc(s1r * scale, s1i * scale)
        return KernelSums(s0=s0, s1=s1, terms=n, tail0=tail0, tail1=tail1, last_term=at)


def clausen_residual(lp: LevelParam, alpha, p: PrecisionPolicy = DEFAULT_POLICY):
    """``|sum t_n z^n - F_s(alpha)^2|`` with ``z = 4 alpha (1 - alpha)``.

    ``alpha`` must lie on the side ``Re(alpha) <= 1/2`` of the map
    ``alpha -> z``; raises :class:`DivergentSeries` when ``|z| >= 1``.
    """
    with p.workdps():
        alpha = to_mp(alpha)
        if mpmath.re(alpha) > 0.5:
            raise ValueError("alpha must satisfy Re(alpha) <= 1/2")
        z = 4 * alpha * (1 - alpha)
        lhs = kernel_series(lp.s, z, p).s0
        rhs = eval_F(lp, alpha, p=p).f ** 2
        return abs(lhs - rhs)
