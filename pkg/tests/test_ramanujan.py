from dataclasses import replace
from fractions import Fraction

import mpmath
import pytest

from ramanujan_pi.errors import DivergentSeries, IdentificationFailed, MissingDegree, NonRealCoefficient, OutOfRange
from ramanujan_pi.exactnum import DEFAULT_POLICY, I, PrecisionPolicy, Surd, parse_surd, to_mp
from ramanujan_pi.hyper import BranchPolicy, LevelParam
from ramanujan_pi.ramanujan import (
    SeriesSpec,
    Verdict,
    alpha_from_z,
    certificate_from_dict,
    certificate_to_dict,
    conjecture_m0,
    derive_coefficients,
    detect_degree,
    evaluate_series,
    legendre_reduction,
    modular_q,
    prove_series,
    verify_series,
)
from ramanujan_pi.transform import g_transfer, select_solution

TOL = DEFAULT_POLICY.tolerance
WORK = DEFAULT_POLICY.working_digits
L2 = LevelParam(4)


def spec(s, z, a, b, d=None, name="t"):
    return SeriesSpec(LevelParam(s), parse_surd(z), parse_surd(a), parse_surd(b), d=d, name=name)


def brute_force_sum(sp, terms):
    """Plain term-by-term partial sum as an independent oracle."""
    s = sp.level.s
    with mpmath.workdps(WORK + 10):
        z, a, b = sp.z.to_mp(), sp.a.to_mp(), sp.b.to_mp()
        q = [mpmath.mpf(1) / 2, mpmath.mpf(1) / s, 1 - mpmath.mpf(1) / s]
        total = mpmath.mpf(0)
        for n in range(terms):
            t = mpmath.rf(q[0], n) * mpmath.rf(q[1], n) * mpmath.rf(q[2], n) / mpmath.factorial(n) ** 3
            total += t * (a + b * n) * z**n
        return total


class TestSeriesSpec:
    def test_sign_class(self):
        assert spec(4, "-1/48", "1", "1").sign == "negative"
        assert spec(4, "1/81", "1", "1").sign == "positive"

    @pytest.mark.parametrize("z", ["0", "1", "3/2", "-2"])
    def test_rejects_bad_z(self, z):
        with pytest.raises(ValueError):
            spec(4, z, "1", "1")


class TestAlpha:
    def test_exact(self):
        assert alpha_from_z(Fraction(1, 81)) == parse_surd("1/2-2*sqrt(5)/9")
        assert alpha_from_z(Fraction(-1, 250000)) == parse_surd("1/2-53*sqrt(89)/1000")
        assert alpha_from_z(Fraction(1)) == Fraction(1, 2)

    def test_round_trip(self):
        for z in [Fraction(-1, 48), Fraction(32, 81), Fraction(-64, 125)]:
            a = alpha_from_z(z)
            assert 4 * a * (1 - a) == z
            assert a <= Fraction(1, 2)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            alpha_from_z(Fraction(2))


class TestEvaluate:
    def test_against_brute_force(self):
        sp = spec(4, "1/81", "4/(9*sqrt(2))", "40/(9*sqrt(2))")
        with mpmath.workdps(WORK):
            assert abs(evaluate_series(sp).value - brute_force_sum(sp, 60)) < TOL

    def test_doubled_truncation_within_tail_bound(self):
        sp = spec(3, "1/2", "1/(3*sqrt(3))", "6/(3*sqrt(3))")
        short = evaluate_series(sp, terms=30)
        longer = evaluate_series(sp, terms=60)
        with mpmath.workdps(WORK):
            assert abs(longer.value - short.value) <= short.tail_bound

    def test_alternating_acceleration(self):
        sp = spec(2, "-1", "1/2", "2")
        sv = evaluate_series(sp)
        assert sv.method == "cvz-alternating"
        with mpmath.workdps(WORK):
            assert abs(sv.value - 1 / mpmath.pi) < mpmath.mpf(10) ** -25
            assert sv.tail_bound < mpmath.mpf(10) ** -25

    def test_divergent(self):
        sp = SeriesSpec.__new__(SeriesSpec)
        object.__setattr__(sp, "level", L2)
        for k, v in dict(z=Surd(1), a=Surd(1), b=Surd(1), d=None, name="", aliases=(), table=None).items():
            object.__setattr__(sp, k, v)
        with pytest.raises(DivergentSeries):
            evaluate_series(sp)

    def test_four_classical_examples(self):
        rows = [
            (2, "1/64", "5/16", "42/16"),
            (3, "4/125", "8/(15*sqrt(3))", "66/(15*sqrt(3))"),
            (4, "1/99^4", "4412/(9801*sqrt(2))", "105560/(9801*sqrt(2))"),
            (6, "-64/125", "8/(5*sqrt(15))", "63/(5*sqrt(15))"),
        ]
        for row in rows:
            assert verify_series(spec(*row)) < mpmath.mpf(10) ** -45

    def test_corrupted_coefficient_fails(self):
        good = spec(3, "4/125", "8/(15*sqrt(3))", "66/(15*sqrt(3))")
        bad = replace(good, a=good.a + Fraction(1, 10**10))
        r = verify_series(bad)
        assert mpmath.mpf(10) ** -11 < r < mpmath.mpf(10) ** -9
        assert r > TOL


class TestCoefficients:
    def test_positive_point(self, solution_points):
        co = derive_coefficients(select_solution(solution_points, Fraction(1, 81)))
        assert co.exact
        assert co.a == parse_surd("4/(9*sqrt(2))")
        assert co.b == parse_surd("40/(9*sqrt(2))")
        assert co.C == 0

    def test_alternating_point(self, solution_points):
        co = derive_coefficients(select_solution(solution_points, Fraction(-1, 48)))
        assert co.a == parse_surd("3*sqrt(3)/16")
        assert co.b == parse_surd("28*sqrt(3)/16")
        assert co.C == Fraction(1, 3)

    def test_numeric_path_recognizes(self, solution_points):
        sp = select_solution(solution_points, Fraction(-1, 48))
        with mpmath.workdps(WORK):
            numeric = replace(sp, **{k: to_mp(getattr(sp, k)) for k in
                                     ("alpha0", "beta0", "m0", "alpha0_prime", "m0_prime")})
        co = derive_coefficients(numeric)
        assert co.exact and co.a == parse_surd("3*sqrt(3)/16")

    def test_corrupted_point_gives_complex_a(self, solution_points):
        sp = select_solution(solution_points, Fraction(-1, 48))
        wrong = replace(sp, m0_prime=sp.m0_prime * (1 + I))
        with pytest.raises(NonRealCoefficient):
            derive_coefficients(wrong)
        with mpmath.workdps(WORK):
            numeric = replace(wrong, **{k: to_mp(getattr(wrong, k)) for k in
                                        ("alpha0", "beta0", "m0", "alpha0_prime", "m0_prime")})
        with pytest.raises(NonRealCoefficient):
            derive_coefficients(numeric)

    def test_positive_specialization(self, solution_points):
        # with m0 = 1/sqrt(d): b = 2 (1 - 2 alpha0) sqrt(d / ell)
        for sp in solution_points:
            if sp.consistent and sp.m0.imag == 0:
                co = derive_coefficients(sp)
                assert co.b == 2 * (1 - 2 * sp.alpha0) * Surd.sqrt(Fraction(sp.d, sp.level.ell))

    def test_symmetric_point_gives_zero_b(self, solution_points):
        sp = replace(select_solution(solution_points, Fraction(1, 81)),
                     alpha0=Surd(Fraction(1, 2)), beta0=Surd(Fraction(1, 2)))
        assert derive_coefficients(sp).b == 0

    def test_legendre_reduction_is_exact(self, solution_points):
        for z, a, b in [("1/81", "4/(9*sqrt(2))", "40/(9*sqrt(2))"), ("-1/48", "3*sqrt(3)/16", "28*sqrt(3)/16")]:
            sp = select_solution(solution_points, parse_surd(z))
            cf, cg = g_transfer(sp)
            assert all(not v for v in legendre_reduction(sp, parse_surd(a), parse_surd(b), cf, cg))


class TestConjecture:
    def test_level2_degree5_value(self):
        assert conjecture_m0(5, L2) == parse_surd("(3+i)*sqrt(2)/10")

    def test_modulus(self):
        assert conjecture_m0(23, LevelParam(3)).abs2() == Fraction(1, 23)
        assert conjecture_m0(1, LevelParam(2)).abs2() == 1

    def test_rejects_small_d(self):
        with pytest.raises(ValueError):
            conjecture_m0(0, L2)


class TestModularQ:
    def test_positive(self):
        mq = modular_q(spec(4, "1/81", "4/(9*sqrt(2))", "40/(9*sqrt(2))", d=5))
        assert mq.r == Fraction(5, 2) and mq.identity_holds
        with mpmath.workdps(WORK):
            assert abs(mq.q - mpmath.exp(-2 * mpmath.pi * mpmath.sqrt(mpmath.mpf(5) / 2))) < TOL

    def test_alternating(self):
        mq = modular_q(spec(4, "-1/48", "3*sqrt(3)/16", "28*sqrt(3)/16", d=5))
        assert mq.r == Fraction(9, 4) and mq.identity_holds
        with mpmath.workdps(WORK):
            assert abs(mq.q + mpmath.exp(-3 * mpmath.pi)) < TOL

    def test_trivial(self):
        mq = modular_q(spec(4, "1/81", "1", "1", d=2))
        assert mq.r == 1 and not mq.identity_holds

    def test_missing_degree(self):
        with pytest.raises(MissingDegree):
            modular_q(spec(4, "1/81", "1", "1"))


class TestDegree:
    @pytest.mark.parametrize("s,z,d", [(3, "-1/250000", 23), (4, "1/81", 5), (4, "-1/48", 5)])
    def test_detect(self, s, z, d):
        assert detect_degree(LevelParam(s), parse_surd(z)) == d

    def test_identification_fails_for_generic_z(self):
        with pytest.raises(IdentificationFailed):
            detect_degree(L2, parse_surd("1/7"), dmax=60)

    def test_dmax_is_respected(self):
        with pytest.raises(IdentificationFailed):
            detect_degree(LevelParam(3), parse_surd("-1/250000"), dmax=20)


class TestProve:
    def test_positive_series(self, catalog):
        c = prove_series(catalog.find("series-10n+1"), catalog)
        assert c.verdict is Verdict.PROVEN_NUMERIC
        assert c.coefficients_match
        assert all(v < TOL for v in c.residuals.values())

    def test_alternating_series(self, catalog):
        c = prove_series(catalog.find("series-28n+3"), catalog)
        assert c.verdict is Verdict.PROVEN_NUMERIC
        assert c.C == Fraction(1, 3)

    def test_without_transformation(self, catalog):
        c = prove_series(catalog.find("l3-d23-neg"), catalog)
        assert c.verdict is Verdict.VERIFIED_ONLY
        assert c.detected_d == 23

    def test_degree_mismatch_fails(self, catalog):
        bad = replace(catalog.find("l2-d7-neg"), d=5)
        c = prove_series(bad, catalog)
        assert c.verdict is Verdict.FAILED
        assert any("disagrees" in n for n in c.notes)

    def test_wrong_coefficients_fail(self, catalog):
        good = catalog.find("series-10n+1")
        bad = replace(good, b=good.b + 1)
        c = prove_series(bad, catalog)
        assert c.verdict is Verdict.FAILED
        assert c.coefficients_match is False

    def test_upper_branch_does_not_prove(self, catalog):
        # the exact multiplier (3+i)sqrt(2)/10 belongs to the lower branch
        c = prove_series(catalog.find("series-28n+3"), catalog, bp=BranchPolicy.UPPER)
        assert c.verdict is not Verdict.PROVEN_NUMERIC or c.solution.m0.imag.sign() < 0

    def test_deterministic(self, catalog):
        s = catalog.find("series-28n+3")
        a = certificate_to_dict(prove_series(s, catalog))
        b = certificate_to_dict(prove_series(s, catalog))
        assert a == b

    def test_certificate_round_trip(self, catalog):
        c = prove_series(catalog.find("series-28n+3"), catalog)
        rec = certificate_to_dict(c)
        assert certificate_to_dict(certificate_from_dict(rec)) == rec
        assert rec["C"]["exact"] == "1/3"

    def test_lower_precision_policy(self, catalog):
        p = PrecisionPolicy(30, 15)
        c = prove_series(catalog.find("series-10n+1"), catalog, p)
        assert c.verdict is Verdict.PROVEN_NUMERIC
        assert c.digits == 30
