"""Command-line interface: one subcommand per pipeline stage.

Exit status is 0 on success, 1 when a check fails and 2 on usage or
parse errors.  ``RAMANUJAN_PI_DIGITS`` and ``RAMANUJAN_PI_CATALOG``
override the defaults of ``--digits`` and ``--catalog``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import mpmath

from .catalog import DEFAULT_CATALOG, emit_certificate, load_catalog
from .errors import ParseError, RamanujanPiError
from .exactnum import CSurd, PrecisionPolicy, Surd, parse_surd
from .hyper import BranchPolicy, LevelParam, clausen_residual, legendre_residual
from .ramanujan import (
    SeriesSpec,
    Verdict,
    certificate_to_dict,
    degree_test,
    derive_coefficients,
    evaluate_series,
    modular_q,
    prove_series,
    verify_series,
)
from .transform import select_solution, solve_beta_complement

# options whose values may start with '-' (negative literals)
_VALUE_OPTIONS = {"--z", "--a", "--b", "--alpha"}

_DEFAULTS = {
    "digits": 50,
    "guard": 20,
    "branch": "lower",
    "catalog": DEFAULT_CATALOG,
    "dmax": 60,
    "output": "text",
    "skip_validate": False,
}


class _UsageError(Exception):
    pass


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("precision and input")
    g.add_argument("--digits", type=int, default=argparse.SUPPRESS, help="target digits (default 50)")
    g.add_argument("--guard", type=int, default=argparse.SUPPRESS, help="guard digits (default 20)")
    g.add_argument("--branch", choices=["lower", "upper"], default=argparse.SUPPRESS,
                   help="side from which real arguments > 1 are approached (default lower)")
    g.add_argument("--catalog", default=argparse.SUPPRESS, help="catalog file or 'default'")
    g.add_argument("--skip-validate", action="store_true", default=argparse.SUPPRESS,
                   help="do not check catalog transformations numerically")
    g.add_argument("--dmax", type=int, default=argparse.SUPPRESS, help="largest degree tried (default 60)")
    g.add_argument("--output", choices=["text", "json"], default=argparse.SUPPRESS)
    return common


def _series_options(p: argparse.ArgumentParser, need_ab=True):
    p.add_argument("--series", help="catalog series name or alias")
    p.add_argument("--s", type=int, choices=[2, 3, 4, 6], help="hypergeometric parameter s")
    p.add_argument("--level", type=int, choices=[1, 2, 3, 4], help="level ell (alternative to --s)")
    p.add_argument("--z", help="argument z, e.g. -1/48")
    if need_ab:
        p.add_argument("--a", help="constant coefficient")
        p.add_argument("--b", help="linear coefficient")
    p.add_argument("--degree", type=int, help="degree hint d")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="ramanujan-pi",
        description="Evaluate, verify and prove Ramanujan-type series for 1/pi.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-series", parents=[common], help="sum a series with a tail bound")
    _series_options(p)
    p.add_argument("--terms", type=int, help="fixed number of terms")

    sub.add_parser("verify-tables", parents=[common], help="check every catalog row against 1/pi")

    p = sub.add_parser("detect-degree", parents=[common], help="identify d from |F(alpha0)/F(beta0)|^2 = 1/d")
    _series_options(p, need_ab=False)

    p = sub.add_parser("solve-transform", parents=[common], help="solution points of beta = 1 - alpha")
    p.add_argument("--transformation", help="transformation name (default: all)")

    p = sub.add_parser("derive-coefficients", parents=[common], help="(a, b, C) at a solution point")
    _series_options(p, need_ab=False)

    for name, what in (("legendre-check", "Legendre relation"), ("clausen-check", "Clausen identity")):
        p = sub.add_parser(name, parents=[common], help=f"residual of the {what} at alpha")
        p.add_argument("--s", type=int, choices=[2, 3, 4, 6])
        p.add_argument("--level", type=int, choices=[1, 2, 3, 4])
        p.add_argument("--alpha", required=True, help="exact literal, e.g. 1/3 or 2+i")

    p = sub.add_parser("q-modulus", parents=[common], help="nome q and the check 4r = b^2/(1-z)")
    _series_options(p)

    p = sub.add_parser("prove", parents=[common], help="run the full proof pipeline")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--series", help="catalog series name or alias")
    grp.add_argument("--all", action="store_true", help="every catalog row")
    p.add_argument("--certificate", help="write the certificate JSON here (single series)")
    return parser


def _preprocess(argv):
    out = []
    for tok in argv:
        if out and out[-1] in _VALUE_OPTIONS and tok.startswith("-") and not tok.startswith("--"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


class _Context:
    def __init__(self, args):
        self.args = args
        given = set(vars(args))
        for key, default in _DEFAULTS.items():
            if key not in given:
                setattr(args, key, default)
        if "digits" not in given and os.environ.get("RAMANUJAN_PI_DIGITS"):
            try:
                args.digits = int(os.environ["RAMANUJAN_PI_DIGITS"])
            except ValueError:
                raise _UsageError("RAMANUJAN_PI_DIGITS must be an integer") from None
        if "catalog" not in given and os.environ.get("RAMANUJAN_PI_CATALOG"):
            args.catalog = os.environ["RAMANUJAN_PI_CATALOG"]
        try:
            self.policy = PrecisionPolicy(args.digits, args.guard)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        self.branch = BranchPolicy(args.branch)
        self._catalog = None

    @property
    def catalog(self):
        if self._catalog is None:
            self._catalog = load_catalog(self.args.catalog, validate=not self.args.skip_validate, p=self.policy)
        return self._catalog

    def fmt(self, v) -> str:
        return _fmt(v, self.policy.target_digits)


def _fmt(v, digits) -> str:
    if v is None:
        return "-"
    if isinstance(v, (Surd, CSurd)):
        return str(v)
    if isinstance(v, mpmath.mpc):
        if not v.imag:
            return mpmath.nstr(v.real, digits)
        return f"{mpmath.nstr(v.real, digits)} + {mpmath.nstr(v.imag, digits)}*i"
    return mpmath.nstr(v, digits)


def _level(args) -> LevelParam:
    if args.s is not None:
        return LevelParam(args.s)
    if args.level is not None:
        return LevelParam.from_ell(args.level)
    raise _UsageError("one of --s or --level is required")


def _real(text, name):
    if text is None:
        raise _UsageError(f"--{name} is required")
    v = parse_surd(text)
    if not isinstance(v, Surd):
        raise _UsageError(f"--{name} must be real")
    return v


def _series(ctx: _Context, need_ab=True) -> SeriesSpec:
    args = ctx.args
    if args.series:
        try:
            return ctx.catalog.find(args.series)
        except KeyError:
            raise _UsageError(f"no series named {args.series!r} in the catalog") from None
    lp = _level(args)
    z = _real(args.z, "z")
    a = _real(args.a, "a") if need_ab else Surd(0)
    b = _real(args.b, "b") if need_ab else Surd(0)
    try:
        return SeriesSpec(lp, z, a, b, d=args.degree, name="command-line")
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _emit(ctx: _Context, record: dict, lines: list[str]):
    if ctx.args.output == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval_series(ctx):
    spec = _series(ctx)
    sv = evaluate_series(spec, ctx.policy, terms=ctx.args.terms)
    with ctx.policy.workdps():
        residual = abs(sv.value - 1 / mpmath.pi)
    ok = residual < ctx.policy.tolerance
    rec = {"series": spec.name, "value": ctx.fmt(sv.value), "tail_bound": ctx.fmt(sv.tail_bound),
           "terms": sv.terms, "method": sv.method, "residual": ctx.fmt(residual), "pass": ok}
    _emit(ctx, rec, [
        f"series     = {spec.name}",
        f"value      = {rec['value']}",
        f"tail bound = {rec['tail_bound']}",
        f"terms      = {sv.terms} ({sv.method})",
        f"|S - 1/pi| = {rec['residual']}",
        "PASS" if ok else "FAIL",
    ])
    return 0 if ok else 1


def cmd_verify_tables(ctx):
    rows, lines, passed = [], [], 0
    tol = ctx.policy.tolerance
    for s in ctx.catalog.series:
        try:
            r = verify_series(s, ctx.policy)
            ok = r < tol
            shown = ctx.fmt(r) if r else "0"
        except RamanujanPiError as exc:
            ok, shown = False, f"error: {exc}"
        passed += ok
        rows.append({"series": s.name, "residual": shown, "pass": ok})
        lines.append(f"{'PASS' if ok else 'FAIL'}  {s.name:<12} residual {shown}")
    total = len(ctx.catalog.series)
    lines.append(f"{passed}/{total} PASS")
    _emit(ctx, {"rows": rows, "passed": passed, "total": total}, lines)
    return 0 if passed == total else 1


def cmd_detect_degree(ctx):
    spec = _series(ctx, need_ab=False)
    res = degree_test(spec.level, spec.z, ctx.policy, ctx.branch, ctx.args.dmax)
    with ctx.policy.workdps():
        inv = 1 / res.modulus**2
    rec = {"d": res.d, "modulus": ctx.fmt(res.modulus), "inverse_square": ctx.fmt(inv), "m0": ctx.fmt(res.ratio)}
    lines = [f"|m0|       = {rec['modulus']}", f"1/|m0|^2   = {rec['inverse_square']}"]
    if res.d is None:
        lines.append(f"no integer d <= {ctx.args.dmax}")
        _emit(ctx, rec, lines)
        return 1
    lines.append(f"d = {res.d}")
    _emit(ctx, rec, lines)
    return 0


def _solution_record(ctx, sp):
    keys = ("x0", "alpha0", "beta0", "m0", "alpha0_prime", "beta0_prime", "m0_prime", "z0")
    return {k: ctx.fmt(getattr(sp, k)) for k in keys} | {"consistent": sp.consistent}


def cmd_solve_transform(ctx):
    wanted = ctx.args.transformation
    ts = [t for t in ctx.catalog.transformations if wanted in (None, t.name)]
    if not ts:
        raise _UsageError(f"no transformation named {wanted!r}")
    record, lines = {}, []
    for t in ts:
        points = solve_beta_complement(t, ctx.policy, ctx.branch)
        record[t.name] = [_solution_record(ctx, sp) for sp in points]
        lines.append(f"{t.name}: level {t.level.ell}, degree 1/{t.d}, {len(points)} solution points")
        for i, rec in enumerate(record[t.name], 1):
            lines.append(f"  [{i}] consistent = {rec['consistent']}")
            lines += [f"      {k:<12} = {v}" for k, v in rec.items() if k != "consistent"]
    _emit(ctx, record, lines)
    return 0


def _solution_for(ctx, spec):
    d = spec.d
    if d is None:
        d = degree_test(spec.level, spec.z, ctx.policy, ctx.branch, ctx.args.dmax).d
    for t in ctx.catalog.transformations:
        if t.level == spec.level and t.d == d:
            sp = select_solution(solve_beta_complement(t, ctx.policy, ctx.branch), spec.z, ctx.policy)
            if sp is not None:
                return sp
    return None


def cmd_derive_coefficients(ctx):
    spec = _series(ctx, need_ab=False)
    sp = _solution_for(ctx, spec)
    if sp is None:
        print(f"no catalog transformation reaches z = {spec.z}", file=sys.stderr)
        return 1
    co = derive_coefficients(sp, ctx.policy)
    rec = {"a": ctx.fmt(co.a), "b": ctx.fmt(co.b), "C": ctx.fmt(co.C), "exact": co.exact}
    _emit(ctx, rec, [f"a = {rec['a']}", f"b = {rec['b']}", f"C = {rec['C']}"])
    return 0


def _identity_check(ctx, fn, **kw):
    lp = _level(ctx.args)
    alpha = parse_surd(ctx.args.alpha)
    r = fn(lp, alpha, **kw)
    ok = r < ctx.policy.tolerance
    rec = {"residual": ctx.fmt(r), "pass": ok}
    _emit(ctx, rec, [f"residual = {rec['residual']}", "PASS" if ok else "FAIL"])
    return 0 if ok else 1


def cmd_legendre_check(ctx):
    return _identity_check(ctx, legendre_residual, bp=ctx.branch, p=ctx.policy)


def cmd_clausen_check(ctx):
    try:
        return _identity_check(ctx, clausen_residual, p=ctx.policy)
    except ValueError as exc:
        if isinstance(exc, RamanujanPiError):
            raise
        raise _UsageError(str(exc)) from None


def cmd_q_modulus(ctx):
    spec = _series(ctx)
    mq = modular_q(spec, p=ctx.policy)
    rec = {"q": ctx.fmt(mq.q), "r": str(mq.r), "identity": mq.identity_holds}
    _emit(ctx, rec, [f"r = {mq.r}", f"q = {rec['q']}", f"4r = b^2/(1-z): {mq.identity_holds}"])
    return 0 if mq.identity_holds is not False else 1


def cmd_prove(ctx):
    args = ctx.args
    specs = ctx.catalog.series if args.all else [_series(ctx)]
    if args.certificate and len(specs) != 1:
        raise _UsageError("--certificate needs a single --series")
    records, lines, failed = [], [], 0
    for spec in specs:
        c = prove_series(spec, ctx.catalog, ctx.policy, ctx.branch, args.dmax)
        failed += c.verdict is Verdict.FAILED
        if args.certificate:
            emit_certificate(c, args.certificate)
        records.append(certificate_to_dict(c))
        lines.append(f"{spec.name}: {c.verdict.value}")
        if not args.all:
            lines += [f"  degree        = {c.detected_d}", f"  transformation = {c.transformation or '-'}"]
            if c.derived_a is not None:
                lines += [f"  a = {ctx.fmt(c.derived_a)}", f"  b = {ctx.fmt(c.derived_b)}", f"  C = {ctx.fmt(c.C)}"]
            lines += [f"  {k:<20} {ctx.fmt(v)}" for k, v in c.residuals.items()]
            lines += [f"  note: {n}" for n in c.notes]
    if args.all:
        counts = {v.value: sum(r["verdict"] == v.value for r in records) for v in Verdict}
        lines.append(", ".join(f"{k} {n}" for k, n in counts.items()))
    _emit(ctx, records[0] if len(records) == 1 and not args.all else {"certificates": records}, lines)
    return 1 if failed else 0


_COMMANDS = {
    "eval-series": cmd_eval_series,
    "verify-tables": cmd_verify_tables,
    "detect-degree": cmd_detect_degree,
    "solve-transform": cmd_solve_transform,
    "derive-coefficients": cmd_derive_coefficients,
    "legendre-check": cmd_legendre_check,
    "clausen-check": cmd_clausen_check,
    "q-modulus": cmd_q_modulus,
    "prove": cmd_prove,
}


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = _Context(args)
        return _COMMANDS[args.command](ctx)
    except (_UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RamanujanPiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
