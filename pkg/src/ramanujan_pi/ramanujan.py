"""Ramanujan-type series for 1/pi: evaluation, coefficient formulas and proofs.

A series is

    sum_n (1/2)_n (1/s)_n (1-1/s)_n / n!^3 * (a + b n) * z^n = 1/pi.

Writing ``z = 4 alpha (1 - alpha)`` turns the kernel into ``F_s(alpha)**2``.
Given a solution point of a modular transformation with
``beta = 1 - alpha`` the coefficients follow in closed form:

    b = (1 - 2 alpha0) Re(m0) d / sin(pi/s)
    a = -(1 + C i) (alpha0 beta0 / alpha0') (m0' / m0) b / (1 - 2 alpha0),
    C = Im(m0) / Re(m0).

:func:`prove_series` runs the whole chain and records the result in a
:class:`Certificate`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .errors import (
    DivergentSeries,
    IdentificationFailed,
    MissingDegree,
    NonRealCoefficient,
    OutOfRange,
    RamanujanPiError,
)
from .exactnum import (
    DEFAULT_POLICY,
    CSurd,
    I,
    PrecisionPolicy,
    Surd,
    identify,
    is_exact,
    to_mp,
)
from .hyper import (
    BranchPolicy,
    LevelParam,
    clausen_residual,
    eval_F,
    kernel_series,
    kernel_term_ratio,
    legendre_residual,
)
from .transform import (
    SolutionPoint,
    Transformation,
    derivative_identity_check,
    g_transfer,
    multiplier_check,
    select_solution,
    solve_beta_complement,
)

__all__ = [
    "SeriesSpec",
    "SeriesValue",
    "Coefficients",
    "ModularQ",
    "DegreeTest",
    "Verdict",
    "Certificate",
    "alpha_from_z",
    "evaluate_series",
    "verify_series",
    "derive_coefficients",
    "conjecture_m0",
    "modular_q",
    "degree_test",
    "detect_degree",
    "legendre_reduction",
    "prove_series",
    "certificate_to_dict",
    "certificate_from_dict",
]

# |z| above which alternating series are summed with acceleration
ACCELERATE_ABOVE = Fraction(9, 10)


@dataclass(frozen=True)
class SeriesSpec:
    """One series normalized so that its sum is exactly ``1/pi``."""

    level: LevelParam
    z: Surd
    a: Surd
    b: Surd
    d: int | None = None
    name: str = ""
    aliases: tuple = ()
    table: int | None = None

    def __post_init__(self):
        for key in ("z", "a", "b"):
            v = getattr(self, key)
            if isinstance(v, (int, Fraction)):
                object.__setattr__(self, key, Surd(v))
            elif not isinstance(v, Surd):
                raise TypeError(f"{key} must be a real surd")
        if not self.z:
            raise ValueError("z must be nonzero")
        if abs(self.z) > 1:
            raise ValueError("|z| must not exceed 1")
        if self.z.sign() > 0 and self.z >= 1:
            raise ValueError("positive z must satisfy z < 1")

    @property
    def sign(self) -> str:
        return "negative" if self.z.sign() < 0 else "positive"

    @property
    def alternating(self) -> bool:
        return self.z.sign() < 0


@dataclass(frozen=True)
class SeriesValue:
    value: mpmath.mpf
    tail_bound: mpmath.mpf
    terms: int
    method: str


def alpha_from_z(z):
    """The root ``alpha0 = (1 - sqrt(1 - z))/2 <= 1/2`` of ``z = 4 alpha (1 - alpha)``.

    Exact whenever ``1 - z`` has a surd square root; otherwise an ``mpf``
    at the current precision.
    """
    if isinstance(z, (int, Fraction)):
        z = Surd(z)
    if isinstance(z, Surd):
        if z > 1:
            raise OutOfRange("z must be <= 1")
        w = 1 - z
        if w.is_rational():
            return (1 - Surd.sqrt(w.rational_part())) / 2
        root = identify(mpmath.sqrt(w.to_mp()), two_term=True)
        if root is not None and root * root == w and root.sign() >= 0:
            return (1 - root) / 2
        z = z.to_mp()
    z = to_mp(z)
    if z > 1:
        raise OutOfRange("z must be <= 1")
    return (1 - mpmath.sqrt(1 - z)) / 2


def _cvz_alternating(terms, n):
    """Cohen-Rodriguez Villegas-Zagier sum of ``sum (-1)^k terms[k]``."""
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpmath.mpf(-1)
    c = -d
    s = mpmath.mpf(0)
    for k in range(n):
        c = b - c
        s += c * terms[k]
        b = (k + n) * (k - n) * b / ((k + mpmath.mpf(1) / 2) * (k + 1))
    return s / d


def evaluate_series(spec: SeriesSpec, p: PrecisionPolicy = DEFAULT_POLICY, terms: int | None = None) -> SeriesValue:
    """Sum the series with a tail bound.

    Ordinary rows use the fixed-point kernel sums with the certified
    geometric tail.  For ``-1 <= z <= -9/10`` the alternating series is
    accelerated (error model ``2 |c_0| / (3 + sqrt 8)**n`` for totally
    monotone terms).
    """
    with p.workdps():
        zq = spec.z
        az = abs(zq)
        a = spec.a.to_mp()
        b = spec.b.to_mp()
        if az == 1 and zq.sign() > 0:
            raise DivergentSeries("z = 1 diverges")
        if spec.alternating and az >= ACCELERATE_ABOVE:
            n = terms or int(math.ceil(p.working_digits * math.log(10) / math.log(3 + math.sqrt(8)))) + 2
            absz = az.to_mp()
            cs = []
            t = mpmath.mpf(1)
            for k in range(n):
                if k:
                    r = kernel_term_ratio(spec.level.s, k)
                    t = t * absz * r.numerator / r.denominator
                cs.append(t * (a + b * k))
            value = _cvz_alternating(cs, n)
            bound = 2 * abs(cs[0]) / (3 + mpmath.sqrt(8)) ** n
            return SeriesValue(value=value, tail_bound=bound, terms=n, method="cvz-alternating")
        ks = kernel_series(spec.level.s, zq.to_mp(), p, terms=terms)
        value = a * ks.s0.real + b * ks.s1.real
        bound = abs(a) * ks.tail0 + abs(b) * ks.tail1
        return SeriesValue(value=value, tail_bound=bound, terms=ks.terms, method="direct")


def verify_series(spec: SeriesSpec, p: PrecisionPolicy = DEFAULT_POLICY):
    """``|sum - 1/pi|``; the row passes when this is below ``p.tolerance``."""
    with p.workdps():
        return abs(evaluate_series(spec, p).value - 1 / mpmath.pi)


@dataclass(frozen=True)
class Coefficients:
    a: object
    b: object
    C: object
    exact: bool
    imag_residual: object = 0


def _all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def derive_coefficients(sp: SolutionPoint, p: PrecisionPolicy = DEFAULT_POLICY, recognize: bool = True) -> Coefficients:
    """Series coefficients ``(a, b)`` and the constant ``C`` at a solution point.

    The imaginary part of ``a`` must vanish (exactly, or to the policy's
    tolerance); otherwise :class:`NonRealCoefficient` is raised, which
    usually means the wrong branch or point.
    """
    lp = sp.level
    ingredients = (sp.alpha0, sp.beta0, sp.m0, sp.alpha0_prime, sp.m0_prime)
    if _all_exact(ingredients):
        alpha0, beta0, m0, ap, mp_ = ingredients
        re_m, im_m = m0.real, m0.imag
        if not re_m:
            raise NonRealCoefficient("Re(m0) = 0")
        factor = re_m * sp.d / lp.sin_pi_over_s
        b = (1 - 2 * alpha0) * factor
        C = im_m / re_m
        # b / (1 - 2 alpha0) written as ``factor`` so alpha0 = 1/2 stays finite
        a = -(1 + C * I) * (alpha0 * beta0 / ap) * (mp_ / m0) * factor
        b, a = _real_part_exact(b, "b"), _real_part_exact(a, "a")
        return Coefficients(a=a, b=b, C=_real_part_exact(C, "C"), exact=True)
    with p.workdps():
        alpha0, beta0, m0, ap, mp_ = (to_mp(v) for v in ingredients)
        m0 = mpmath.mpc(m0)
        factor = m0.real * sp.d / lp.sin_pi_over_s.to_mp()
        b = (1 - 2 * alpha0) * factor
        C = m0.imag / m0.real
        a = -mpmath.mpc(1, C) * (alpha0 * beta0 / ap) * (mp_ / m0) * factor
        tol = p.tolerance
        imag = max(abs(mpmath.im(a)), abs(mpmath.im(b)))
        if imag > tol * max(1, abs(a)):
            raise NonRealCoefficient(f"Im(a) = {mpmath.nstr(mpmath.im(a), 5)} does not vanish")
        a, b = mpmath.re(a), mpmath.re(b)
        exact = False
        if recognize:
            ae, be = identify(a, policy=p), identify(b, policy=p)
            if ae is not None and be is not None:
                a, b, exact = ae, be, True
        return Coefficients(a=a, b=b, C=C, exact=exact, imag_residual=imag)


def _real_part_exact(v, name):
    if isinstance(v, CSurd):
        if v.im:
            raise NonRealCoefficient(f"{name} has nonzero imaginary part {v.im}")
        return v.re
    return v


def conjecture_m0(d: int, lp: LevelParam) -> CSurd:
    """``sqrt(4d - ell)/(2d) + i sqrt(ell)/(2d)``, the observed ``m0`` of alternating series."""
    if d < 1 or 4 * d < lp.ell:
        raise ValueError("need d >= 1 and 4d >= ell")
    return CSurd(Surd.sqrt(Fraction(4 * d - lp.ell, 4 * d * d)), Surd.sqrt(Fraction(lp.ell, 4 * d * d)))


@dataclass(frozen=True)
class ModularQ:
    q: mpmath.mpf
    r: Fraction
    identity_holds: bool | None


def modular_q(spec: SeriesSpec, d: int | None = None, p: PrecisionPolicy = DEFAULT_POLICY) -> ModularQ:
    """Nome ``q = +-exp(-2 pi sqrt(r))`` with ``r = d/ell`` (``- 1/4`` when ``z < 0``).

    Also checks ``4 r = b**2 / (1 - z)`` in exact surd arithmetic.
    """
    d = d if d is not None else spec.d
    if d is None:
        raise MissingDegree(f"series {spec.name!r} has no degree")
    ell = spec.level.ell
    r = Fraction(d, ell) - (Fraction(1, 4) if spec.alternating else 0)
    holds = None
    try:
        holds = spec.b * spec.b / (1 - spec.z) == Surd(4 * r)
    except ArithmeticError:
        pass
    with p.workdps():
        q = mpmath.exp(-2 * mpmath.pi * mpmath.sqrt(mpmath.mpf(r.numerator) / r.denominator))
        if spec.alternating:
            q = -q
    return ModularQ(q=q, r=r, identity_holds=holds)


@dataclass(frozen=True)
class DegreeTest:
    ratio: mpmath.mpc
    modulus: mpmath.mpf
    d: int | None


def degree_test(lp: LevelParam, z, p: PrecisionPolicy = DEFAULT_POLICY,
                bp: BranchPolicy = BranchPolicy.LOWER, dmax: int = 60) -> DegreeTest:
    """Ratio ``m0 = F(alpha0)/F(beta0)`` and the integer ``d`` with ``|m0|^2 = 1/d`` if any."""
    with p.workdps():
        alpha0 = to_mp(alpha_from_z(z))
        ratio = eval_F(lp, alpha0, bp, p).f / eval_F(lp, 1 - alpha0, bp, p).f
        modulus = abs(ratio)
        inv = 1 / (modulus * modulus)
        d = int(mpmath.nint(inv))
        found = d if 1 <= d <= dmax and abs(inv - d) < p.tolerance * d else None
        return DegreeTest(ratio=ratio, modulus=modulus, d=found)


def detect_degree(lp: LevelParam, z, dmax: int = 60, p: PrecisionPolicy = DEFAULT_POLICY,
                  bp: BranchPolicy = BranchPolicy.LOWER) -> int:
    """Identify ``|F(alpha0)/F(beta0)|^2`` as ``1/d`` with integer ``d <= dmax``."""
    res = degree_test(lp, z, p, bp, dmax)
    if res.d is None:
        raise IdentificationFailed(
            f"|m0|^2 = {mpmath.nstr(res.modulus**2, 20)} is not 1/d for any d <= {dmax}"
        )
    return res.d


def legendre_reduction(sp: SolutionPoint, a, b, cF, cG, p: PrecisionPolicy = DEFAULT_POLICY):
    """Coefficients left after substituting the transformation relations.

    With ``k = b beta0 / (1 - 2 alpha0)`` the operator ``a + b z d/dz``
    applied to ``F(alpha)**2`` at ``alpha0`` becomes

        (a m0 + k(1+Ci) cF) F(a0)F(b0) + k(1+Ci) cG F(a0)G(b0) + k(1-Ci) m0 F(b0)G(a0),

    which must equal ``(alpha0 F(a0)G(b0) + beta0 F(b0)G(a0)) / sin(pi/s)``.
    Returns the three deviations (exact zeros when everything is exact).
    """
    lam = 1 / sp.level.sin_pi_over_s
    vals = (sp.alpha0, sp.beta0, sp.m0, a, b, cF, cG)
    if _all_exact(vals):
        alpha0, beta0, m0 = sp.alpha0, sp.beta0, sp.m0
        C = m0.imag / m0.real
        k = b * beta0 / (1 - 2 * alpha0)
        plus, minus = 1 + C * I, 1 - C * I
        return (
            a * m0 + k * plus * cF,
            k * plus * cG - lam * alpha0,
            k * minus * m0 - lam * beta0,
        )
    with p.workdps():
        alpha0, beta0, m0, a, b, cF, cG = (to_mp(v) for v in vals)
        m0 = mpmath.mpc(m0)
        C = m0.imag / m0.real
        k = b * beta0 / (1 - 2 * alpha0)
        lam = lam.to_mp()
        return (
            a * m0 + k * mpmath.mpc(1, C) * cF,
            k * mpmath.mpc(1, C) * cG - lam * alpha0,
            k * mpmath.mpc(1, -C) * m0 - lam * beta0,
        )


class Verdict(str, enum.Enum):
    PROVEN_NUMERIC = "PROVEN_NUMERIC"
    VERIFIED_ONLY = "VERIFIED_ONLY"
    FAILED = "FAILED"


@dataclass
class Certificate:
    """Everything computed while proving one series."""

    series: SeriesSpec
    verdict: Verdict
    digits: int
    branch: str = "lower"
    solution: SolutionPoint | None = None
    transformation: str | None = None
    detected_d: int | None = None
    degree_modulus: object = None
    derived_a: object = None
    derived_b: object = None
    C: object = None
    g_transfer: tuple | None = None
    coefficients_match: bool | None = None
    residuals: dict = field(default_factory=dict)
    q: object = None
    r: Fraction | None = None
    q_identity: bool | None = None
    notes: list = field(default_factory=list)


@lru_cache(maxsize=16)
def _solutions(t: Transformation, p: PrecisionPolicy, bp: BranchPolicy):
    return tuple(solve_beta_complement(t, p, bp))


def _abs_mp(v):
    if isinstance(v, (Surd, CSurd)):
        return mpmath.mpf(0) if not v else abs(v.to_mp())
    return abs(to_mp(v))


def prove_series(spec: SeriesSpec, catalog, p: PrecisionPolicy = DEFAULT_POLICY,
                 bp: BranchPolicy = BranchPolicy.LOWER, dmax: int = 60) -> Certificate:
    """Run the method end to end and return a :class:`Certificate`.

    ``catalog`` is any iterable of :class:`Transformation` (or an object
    with a ``transformations`` attribute).  Failures never raise; they
    surface in the verdict, residuals and notes.
    """
    bp = BranchPolicy(bp)
    transformations = getattr(catalog, "transformations", catalog) or ()
    lp = spec.level
    cert = Certificate(series=spec, verdict=Verdict.FAILED, digits=p.target_digits, branch=bp.value)
    res = cert.residuals
    tol = p.tolerance

    with p.workdps():
        alpha0 = alpha_from_z(spec.z)

        # degree
        try:
            dt = degree_test(lp, spec.z, p, bp, dmax)
            cert.detected_d = dt.d
            cert.degree_modulus = dt.modulus
        except RamanujanPiError as exc:
            cert.notes.append(f"degree test failed: {exc}")
        d = spec.d if spec.d is not None else cert.detected_d
        degree_ok = True
        if spec.d is not None and cert.detected_d is not None and spec.d != cert.detected_d:
            cert.notes.append(f"degree hint {spec.d} disagrees with detected degree {cert.detected_d}")
            degree_ok = False
        if d is None:
            cert.notes.append("degree unknown")

        # identities at alpha0 and the series itself
        try:
            res["clausen"] = clausen_residual(lp, alpha0, p)
        except RamanujanPiError as exc:
            cert.notes.append(f"clausen check skipped: {exc}")
        res["legendre"] = legendre_residual(lp, alpha0, bp, p)
        try:
            res["final_sum"] = verify_series(spec, p)
        except RamanujanPiError as exc:
            cert.notes.append(f"series evaluation failed: {exc}")
        if d is not None:
            mq = modular_q(spec, d, p)
            cert.q, cert.r, cert.q_identity = mq.q, mq.r, mq.identity_holds

        # transformation
        sp = t_used = None
        if d is not None:
            for t in transformations:
                if t.level == lp and t.d == d:
                    sp = select_solution(_solutions(t, p, bp), spec.z, p)
                    if sp is not None:
                        t_used = t
                        break
        summed = "final_sum" in res and res["final_sum"] < tol
        if sp is None:
            cert.notes.append(f"no catalog transformation of level {lp.ell} and degree 1/{d} reaches z = {spec.z}")
            cert.verdict = Verdict.VERIFIED_ONLY if summed and degree_ok else Verdict.FAILED
            return cert

        cert.solution = sp
        cert.transformation = t_used.name
        res["multiplier"] = multiplier_check(t_used, sp.x0, p, m=sp.m0)
        res["derivative_identity"] = derivative_identity_check(sp, p)
        cF, cG = g_transfer(sp, p)
        cert.g_transfer = (cF, cG)
        fa = eval_F(lp, sp.alpha0, bp, p)
        fb = eval_F(lp, sp.beta0, bp, p)
        res["g_transfer"] = abs(fa.g - to_mp(cF) * fb.f - to_mp(cG) * fb.g)
        try:
            coeffs = derive_coefficients(sp, p)
        except NonRealCoefficient as exc:
            cert.notes.append(str(exc))
            return cert
        cert.derived_a, cert.derived_b, cert.C = coeffs.a, coeffs.b, coeffs.C
        if coeffs.exact:
            cert.coefficients_match = coeffs.a == spec.a and coeffs.b == spec.b
            res["coefficients"] = max(_abs_mp(coeffs.a - spec.a), _abs_mp(coeffs.b - spec.b))
        else:
            res["coefficients"] = max(abs(to_mp(coeffs.a) - spec.a.to_mp()), abs(to_mp(coeffs.b) - spec.b.to_mp()))
            cert.coefficients_match = res["coefficients"] < tol
        red = legendre_reduction(sp, spec.a, spec.b, cF, cG, p)
        res["legendre_reduction"] = max(_abs_mp(v) for v in red)
        a_n, b_n = spec.a.to_mp(), spec.b.to_mp()
        alpha_n, beta_n = to_mp(sp.alpha0), to_mp(sp.beta0)
        op = a_n * fa.f**2 + 2 * b_n * beta_n / (1 - 2 * alpha_n) * fa.f * fa.g
        res["operator"] = abs(op - 1 / mpmath.pi)

        if not degree_ok:
            return cert
        if cert.coefficients_match and all(v < tol for v in res.values()):
            cert.verdict = Verdict.PROVEN_NUMERIC
        elif summed:
            cert.notes.append("transformation steps did not all pass; series verified numerically only")
            cert.verdict = Verdict.VERIFIED_ONLY
        return cert


# ---------------------------------------------------------------------------
# certificate records

SCHEMA_VERSION = 1

_SOLUTION_VALUES = ("x0", "alpha0", "beta0", "m0", "alpha0_prime", "beta0_prime", "m0_prime", "z0")


def _enc(v, digits):
    if v is None:
        return None
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        v = Surd(v)
    if isinstance(v, CSurd) and not v.imag:
        v = v.real
    if isinstance(v, Surd):
        return {"exact": str(v), "decimal": mpmath.nstr(v.to_mp(), digits)}
    if isinstance(v, CSurd):
        n = v.to_mp()
        return {"exact": str(v), "re": mpmath.nstr(n.real, digits), "im": mpmath.nstr(n.imag, digits)}
    if isinstance(v, mpmath.mpc):
        return {"re": mpmath.nstr(v.real, digits), "im": mpmath.nstr(v.imag, digits)}
    return {"decimal": mpmath.nstr(mpmath.mpf(v), digits)}


def _dec(rec):
    from .exactnum import parse_surd

    if rec is None:
        return None
    if "exact" in rec:
        return parse_surd(rec["exact"])
    if "decimal" in rec:
        return mpmath.mpf(rec["decimal"])
    return mpmath.mpc(rec["re"], rec["im"])


def certificate_to_dict(c: Certificate) -> dict:
    """JSON-ready record: surd literals for exact values, decimal strings otherwise."""
    digits = c.digits
    with mpmath.workdps(digits + 10):
        s = c.series
        sp = c.solution
        solution = None
        if sp is not None:
            solution = {k: _enc(getattr(sp, k), digits) for k in _SOLUTION_VALUES}
            solution.update(
                degree=sp.d,
                consistent=sp.consistent,
                branch_residual=_enc(sp.branch_residual, digits),
                transformation=sp.transformation,
                exact_fields=list(sp.exact_fields),
            )
        return {
            "schema_version": SCHEMA_VERSION,
            "series": {
                "name": s.name,
                "aliases": list(s.aliases),
                "level": s.level.ell,
                "degree": s.d,
                "table": s.table,
                "sign": s.sign,
                "z": str(s.z),
                "a": str(s.a),
                "b": str(s.b),
            },
            "verdict": c.verdict.value,
            "digits": digits,
            "branch": c.branch,
            "transformation": c.transformation,
            "detected_degree": c.detected_d,
            "degree_modulus": _enc(c.degree_modulus, digits),
            "derived_a": _enc(c.derived_a, digits),
            "derived_b": _enc(c.derived_b, digits),
            "C": _enc(c.C, digits),
            "g_transfer": None if c.g_transfer is None else {
                "cF": _enc(c.g_transfer[0], digits),
                "cG": _enc(c.g_transfer[1], digits),
            },
            "coefficients_match": c.coefficients_match,
            "residuals": {k: _enc(v, digits) for k, v in c.residuals.items()},
            "q": _enc(c.q, digits),
            "r": None if c.r is None else str(c.r),
            "q_identity": c.q_identity,
            "notes": list(c.notes),
            "solution": solution,
        }


def certificate_from_dict(rec: dict) -> Certificate:
    """Rebuild a :class:`Certificate` from :func:`certificate_to_dict` output."""
    from .exactnum import parse_surd

    if rec.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate schema {rec.get('schema_version')!r}")
    digits = rec["digits"]
    with mpmath.workdps(digits + 10):
        sr = rec["series"]
        lp = LevelParam.from_ell(sr["level"])
        spec = SeriesSpec(
            lp, parse_surd(sr["z"]), parse_surd(sr["a"]), parse_surd(sr["b"]),
            d=sr["degree"], name=sr["name"], aliases=tuple(sr["aliases"]), table=sr["table"],
        )
        sol = None
        if rec["solution"] is not None:
            so = rec["solution"]
            sol = SolutionPoint(
                **{k: _dec(so[k]) for k in _SOLUTION_VALUES},
                d=so["degree"],
                level=lp,
                consistent=so["consistent"],
                branch_residual=_dec(so["branch_residual"]),
                transformation=so["transformation"],
                exact_fields=tuple(so["exact_fields"]),
            )
        gt = rec["g_transfer"]
        return Certificate(
            series=spec,
            verdict=Verdict(rec["verdict"]),
            digits=digits,
            branch=rec["branch"],
            solution=sol,
            transformation=rec["transformation"],
            detected_d=rec["detected_degree"],
            degree_modulus=_dec(rec["degree_modulus"]),
            derived_a=_dec(rec["derived_a"]),
            derived_b=_dec(rec["derived_b"]),
            C=_dec(rec["C"]),
            g_transfer=None if gt is None else (_dec(gt["cF"]), _dec(gt["cG"])),
            coefficients_match=rec["coefficients_match"],
            residuals={k: _dec(v) for k, v in rec["residuals"].items()},
            q=_dec(rec["q"]),
            r=None if rec["r"] is None else Fraction(rec["r"]),
            q_identity=rec["q_identity"],
            notes=list(rec["notes"]),
        )
