from dataclasses import replace
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_pi.errors import PoleAtPoint, ValidationError
from ramanujan_pi.exactnum import DEFAULT_POLICY, CSurd, Surd, parse_surd, to_mp
from ramanujan_pi.hyper import LevelParam, eval_F
from ramanujan_pi.transform import (
    Poly,
    RationalFunction,
    derivative_identity_check,
    g_transfer,
    multiplier_check,
    multiplier_formula,
    parse_rational_function,
    poly_roots,
    select_solution,
    squarefree_decomposition,
)

TOL = DEFAULT_POLICY.tolerance
WORK = DEFAULT_POLICY.working_digits
X = Poly.X

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(Poly)


class TestPoly:
    def test_arithmetic(self):
        p = (X + 1) ** 2
        assert p == Poly([1, 2, 1])
        assert p.derivative() == Poly([2, 2])
        q, r = p.divmod(X + 1)
        assert q == X + 1 and not r
        assert p.gcd(X * X - 1) == X + 1

    def test_str_round_trip(self):
        p = Poly([Fraction(1, 2), 0, -3, 4])
        assert parse_rational_function(str(p)) == RationalFunction(p)

    @given(small_polys, small_polys)
    def test_ring_laws(self, p, q):
        assert p * q == q * p
        assert (p + q) - q == p
        if q:
            quo, rem = p.divmod(q)
            assert quo * q + rem == p
            assert rem.degree < q.degree or not rem

    def test_exact_evaluation_on_surds(self):
        x0 = parse_surd("-1+1/2*sqrt(5)")
        assert (4 * X * X + 8 * X - 1)(x0) == 0


class TestRationalFunction:
    def test_normalized(self):
        f = RationalFunction(X * X - 1, 2 * X - 2)
        assert f.den == Poly([1]) or f.den.lead == 1
        assert f == RationalFunction((X + 1) * Fraction(1, 2))

    def test_quotient_rule_against_finite_difference(self, level2_degree5):
        a = level2_degree5.alpha
        with mpmath.workdps(WORK):
            x = mpmath.mpf("0.13")
            fd = mpmath.diff(lambda t: a(t), x)
            assert abs(a.derivative()(x) - fd) < mpmath.mpf(10) ** -50

    def test_pole(self):
        f = parse_rational_function("1/(x-1)")
        with pytest.raises(PoleAtPoint):
            f(Surd(1))
        with pytest.raises(PoleAtPoint):
            f(mpmath.mpf(1))

    def test_parse_rejects_sqrt(self):
        with pytest.raises(Exception):
            parse_rational_function("sqrt(2)*x")


class TestRoots:
    def test_against_mpmath_polyroots(self, level2_degree5):
        eq = level2_degree5.equation()
        with mpmath.workdps(WORK):
            ours = sorted((r.value for r in poly_roots(eq)), key=lambda z: (mpmath.re(z), mpmath.im(z)))
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(eq.coeffs)]
            ref = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
            for r in ours:
                assert min(abs(r - q) for q in ref) < TOL

    def test_multiple_roots(self):
        p = (X - 1) ** 3 * (X * X + 2)
        parts = squarefree_decomposition(p)
        assert {m for _, m in parts} == {1, 3}
        roots = poly_roots(p)
        assert sorted(r.multiplicity for r in roots) == [1, 1, 3]
        with mpmath.workdps(WORK):
            one = [r for r in roots if r.multiplicity == 3][0]
            assert abs(one.value - 1) < TOL

    def test_transformation_equation_factors(self, level2_degree5):
        eq = level2_degree5.equation()
        f1 = Poly([-1, 8, 4])
        f2 = Poly([1, -4, 20, 16, 16])
        f3 = Poly([1, -12, 44, 48, 16])
        assert eq.monic() == (f1 * f2 * f3).monic()


class TestTransformation:
    def test_validate(self, level2_degree5):
        assert level2_degree5.validate() < TOL
        lo, hi = level2_degree5.sample_interval()
        assert 0 < lo < hi < 0.25

    def test_validate_rejects_wrong_multiplier(self, level2_degree5):
        bad = replace(level2_degree5, name="broken", m_squared=level2_degree5.m_squared * 2)
        with pytest.raises(ValidationError, match="broken"):
            bad.validate()

    @settings(max_examples=20)
    @given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(6, 25), max_denominator=10**4))
    def test_multiplier_formula(self, level2_degree5, x):
        assert multiplier_check(level2_degree5, x) < TOL

    @settings(max_examples=10)
    @given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(6, 25), max_denominator=10**4))
    def test_transformation_identity(self, level2_degree5, x):
        t = level2_degree5
        with mpmath.workdps(WORK):
            m = mpmath.sqrt(to_mp(t.m_squared(x)))
            fa = eval_F(t.level, to_mp(t.alpha(x))).f
            fb = eval_F(t.level, to_mp(t.beta(x))).f
            assert abs(fa - m * fb) < TOL


class TestSolutions:
    def test_all_points_exact(self, solution_points):
        assert len(solution_points) == 10
        assert all(sp.recognized for sp in solution_points)
        for sp in solution_points:
            assert sp.alpha0 + sp.beta0 == 1

    def test_derivative_identity_everywhere(self, solution_points):
        for sp in solution_points:
            assert derivative_identity_check(sp) == 0
            with mpmath.workdps(WORK):
                ap, bp, m0 = (to_mp(getattr(sp, k)) for k in ("alpha0_prime", "beta0_prime", "m0"))
                assert abs(bp / ap - 1 / (sp.d * m0 * m0)) < TOL

    def test_multiplier_at_points(self, level2_degree5, solution_points):
        for sp in solution_points:
            assert multiplier_check(level2_degree5, sp.x0, m=sp.m0) < TOL

    def test_positive_point(self, solution_points):
        sp = select_solution(solution_points, Fraction(1, 81))
        assert sp.x0 == parse_surd("(sqrt(5)-2)/2")
        assert sp.alpha0 == parse_surd("1/2-2*sqrt(5)/9")
        assert sp.m0 == parse_surd("1/sqrt(5)")
        assert sp.alpha0_prime == sp.beta0_prime == parse_surd("(sqrt(5)+2)/27")
        assert sp.m0_prime == parse_surd("(-8*sqrt(5)-16)/15")
        cf, cg = g_transfer(sp)
        assert cf == parse_surd("(16*sqrt(5)-36)/5")
        assert cg == parse_surd("(161*sqrt(5)-360)/5")

    def test_alternating_point(self, solution_points):
        sp = select_solution(solution_points, Fraction(-1, 48))
        assert sp.consistent
        assert sp.x0 == parse_surd("(2*sqrt(3)-3)/4 - (2-sqrt(3))/4*i")
        assert sp.alpha0 == parse_surd("1/2-7*sqrt(3)/24")
        assert sp.m0 == parse_surd("(3+i)*sqrt(2)/10")
        assert sp.m0_prime == parse_surd("(-27/40*sqrt(2) - 69/200*sqrt(6)) - (33/200*sqrt(6) + 9/40*sqrt(2))*i")
        assert sp.alpha0_prime == parse_surd("(-23/240 - sqrt(3)/16) - (sqrt(3)/48 + 11/240)*i")
        assert sp.beta0_prime == parse_surd("(-5/48 - sqrt(3)/16) + (1/48 + sqrt(3)/48)*i")
        cf, cg = g_transfer(sp)
        assert cf == parse_surd("-63/20*sqrt(2) + 9*sqrt(6)/5")
        assert cg == parse_surd("(-291/10*sqrt(2) + 84/5*sqrt(6)) + (-28/5*sqrt(6) + 97/10*sqrt(2))*i")

    @pytest.mark.parametrize("z", [Fraction(1, 81), Fraction(-1, 48)])
    def test_g_transfer_numerically(self, solution_points, z):
        sp = select_solution(solution_points, z)
        cf, cg = g_transfer(sp)
        lp = LevelParam(4)
        with mpmath.workdps(WORK):
            ga = eval_F(lp, sp.alpha0).g
            fb = eval_F(lp, sp.beta0)
            assert abs(ga - to_mp(cf) * fb.f - to_mp(cg) * fb.g) < TOL

    def test_multiplier_formula_matches_principal_root(self, level2_degree5):
        x = Fraction(1, 10)
        with mpmath.workdps(WORK):
            m = mpmath.sqrt(to_mp(level2_degree5.m_squared(x)))
            assert abs(multiplier_formula(level2_degree5, x) - m) < TOL

    def test_inconsistent_points_skipped(self, solution_points):
        # alpha0 <-> beta0 swaps and complex conjugates all give z = -1/48;
        # only one of them agrees with F(alpha0)/F(beta0) on the lower branch
        matches = [sp for sp in solution_points if sp.z0 == Fraction(-1, 48)]
        assert len(matches) == 4
        good = [sp for sp in matches if sp.consistent]
        assert len(good) == 1
        assert isinstance(good[0].x0, CSurd) and good[0].m0.imag.sign() > 0
