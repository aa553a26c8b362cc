"""Command-line surface.

Subcommands map one-to-one onto the library: ``concomitant``, ``classify``,
``factor``, ``quad``, ``symmetric``, ``verify-identities``, ``bench``.  Forms
are accepted inline or as ``@path``.  Every subcommand can emit a versioned
JSON report; the mathematical subcommands produce byte-identical JSON for
identical invocations (timing-carrying subcommands necessarily do not).

Exit codes: 0 success, 1 mathematical negative (not reducible, not
invariant, criterion says no), 2 usage or parse error, 3 internal
cross-check or identity failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Optional

from . import corpus
from .classify import Classification, Criterion, classify, is_completely_reducible
from .concomitants import (
    CONCOMITANT_NAMES,
    GENERIC_TERM_COUNTS,
    concomitant_set,
    generic_concomitant,
)
from .errors import (
    BuilderError,
    CriterionInapplicableError,
    CrossCheckError,
    CubicFormsError,
    DegenerateTangentError,
    DegreeMismatchError,
    DualVanishesError,
    InapplicableError,
    InvalidOrderError,
    IrreducibleError,
    NotApplicableError,
    NotReducibleError,
    NotSingularError,
    PolyParseError,
    PreconditionError,
    UnboundVariableError,
    UnknownVariableError,
    ZeroBinaryCubicError,
    ZeroFormError,
    ZeroLineError,
)
from .factor import TOL_FACTOR, factor_cubic
from .poly import Poly, parse, render
from .quadratics import (
    LinearForm,
    QuadraticForm,
    extract_square,
    factor_quadratic,
    quad_discriminant,
    sum_of_squares,
)
from .symmetry import symmetric_decompose, symmetric_factor, symmetric_reducible

SCHEMA = "cubicforms-report/1"

# a mathematical "no" for predicate-flavoured subcommands
_NEGATIVE_ERRORS = (
    NotReducibleError,
    IrreducibleError,
    NotApplicableError,
    InapplicableError,
    CriterionInapplicableError,
    ZeroFormError,
    DualVanishesError,
    NotSingularError,
    ZeroLineError,
    ZeroBinaryCubicError,
    DegenerateTangentError,
)

# the caller handed us something malformed
_USAGE_ERRORS = (
    PolyParseError,
    UnknownVariableError,
    UnboundVariableError,
    DegreeMismatchError,
    InvalidOrderError,
    PreconditionError,
)


def _exit_code_for(exc: CubicFormsError) -> int:
    if isinstance(exc, _NEGATIVE_ERRORS):
        return 1
    if isinstance(exc, _USAGE_ERRORS):
        return 2
    return 3


# -- serialization helpers ---------------------------------------------------


def _scalar_json(v):
    """Exact values as strings, inexact ones as {re, im} doubles."""
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    z = complex(v)
    return {"re": z.real, "im": z.imag}


def _scalar_text(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    z = complex(v)
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _line_json(line: LinearForm) -> list:
    return [_scalar_json(c) for c in line.c]


def _line_text(line: LinearForm) -> str:
    if line.is_exact():
        return render(line.to_poly())
    parts = []
    for i, c in enumerate(line.c):
        if complex(c) != 0:
            parts.append(f"({_scalar_text(c)}) x{i + 1}")
    return " + ".join(parts) if parts else "0"


def _poly_json(p: Poly) -> dict:
    return {"text": render(p), "terms": p.term_count()}


def _read_form_text(arg: str) -> str:
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


# -- subcommand handlers ------------------------------------------------------


def _cmd_concomitant(args) -> tuple[int, dict, list[str]]:
    form = parse(_read_form_text(args.form))
    cs = concomitant_set(form, verify=args.verify)
    if args.kind is not None:
        name = _normalize_kind(args.kind)
        value = cs.by_name(name)
        payload = {
            "kind": name,
            "value": _poly_json(value),
            "formula": cs.provenance[name],
        }
        return 0, payload, [render(value)]
    values = {
        name: dict(_poly_json(cs.by_name(name)), formula=cs.provenance[name])
        for name in CONCOMITANT_NAMES
    }
    lines = [f"{name}: {render(cs.by_name(name))}" for name in CONCOMITANT_NAMES]
    return 0, {"values": values, "verified": args.verify}, lines


_KIND_ALIASES = {
    "f": "f",
    "delta": "delta",
    "hessian": "delta",
    "theta": "theta",
    "s_uuu": "s_uuu",
    "suuu": "s_uuu",
    "t_uuu": "t_uuu",
    "tuuu": "t_uuu",
    "s": "s",
    "t": "t",
    "pi": "pi",
    "gamma": "gamma",
    "f6u": "f6u",
    "dual": "f6u",
}


def _normalize_kind(kind: str) -> str:
    # upper-case F is the dual sextic, lower-case f the input form
    if kind == "F":
        return "f6u"
    name = _KIND_ALIASES.get(kind.lower())
    if name is None:
        raise PreconditionError(f"unknown concomitant kind {kind!r}")
    return name


def _classification_payload(c: Classification) -> dict:
    payload: dict = {
        "kind": c.kind.value,
        "completely_reducible": c.completely_reducible,
        "criteria": [{"name": n, "holds": v} for n, v in c.criteria_fired],
        "cube_root": None,
        "apex": list(c.apex) if c.apex is not None else None,
        "hessian_multiple": None,
    }
    if c.cube_root is not None:
        scale, line = c.cube_root
        payload["cube_root"] = {"scale": _scalar_json(scale), "line": _line_json(line)}
    if c.hessian_multiple is not None:
        hm = c.hessian_multiple
        payload["hessian_multiple"] = (
            render(hm) if isinstance(hm, Poly) else _scalar_json(hm)
        )
    return payload


def _cmd_classify(args) -> tuple[int, dict, list[str]]:
    form = parse(_read_form_text(args.form))
    if args.criterion is not None:
        crit = Criterion(args.criterion)
        verdict = is_completely_reducible(form, crit)
        payload = {"criterion": crit.value, "completely_reducible": verdict}
        lines = [f"criterion {crit.value}: {'yes' if verdict else 'no'}"]
        return (0 if verdict else 1), payload, lines
    c = classify(form)
    payload = _classification_payload(c)
    lines = [f"kind: {c.kind.value}"]
    for name, holds in c.criteria_fired:
        lines.append(f"test {name}: {'yes' if holds else 'no'}")
    if c.cube_root is not None:
        scale, line = c.cube_root
        lines.append(f"cube root: {_scalar_text(scale)} * ({_line_text(line)})^3")
    if c.apex is not None:
        lines.append(f"apex: ({c.apex[0]}, {c.apex[1]}, {c.apex[2]})")
    if c.hessian_multiple is not None:
        hm = c.hessian_multiple
        lines.append(
            "hessian multiple: "
            + (render(hm) if isinstance(hm, Poly) else _scalar_text(hm))
        )
    return 0, payload, lines


def _factorization_payload(fac) -> dict:
    return {
        "method": fac.method.value,
        "scalar": _scalar_json(fac.scalar),
        "factors": [_line_json(line) for line in fac.factors],
        "residual": fac.residual,
        "exact": fac.is_exact,
    }


def _factorization_lines(fac) -> list[str]:
    lines = [f"method: {fac.method.value}", f"scalar: {_scalar_text(fac.scalar)}"]
    lines.extend(f"factor: {_line_text(line)}" for line in fac.factors)
    lines.append(f"residual: {fac.residual:.3e}")
    return lines


def _cmd_factor(args) -> tuple[int, dict, list[str]]:
    form = parse(_read_form_text(args.form))
    fac = factor_cubic(form, tol=args.tolerance, method=args.method)
    return 0, _factorization_payload(fac), _factorization_lines(fac)


def _cmd_quad(args) -> tuple[int, dict, list[str]]:
    q = QuadraticForm.from_poly(parse(_read_form_text(args.form)))
    if args.factor:
        pair = factor_quadratic(q, tol=args.tolerance)
        if pair is None:
            raise ZeroFormError("the zero quadratic has no factorization")
        payload = {"factors": [_line_json(line) for line in pair]}
        return 0, payload, [f"factor: {_line_text(line)}" for line in pair]
    disc = quad_discriminant(q)
    square = extract_square(q)
    dec = sum_of_squares(q)
    if dec.recombine() != q:
        raise CrossCheckError("sum of squares does not recombine to the input")
    payload = {
        "discriminant": _scalar_json(disc),
        "reducible": disc == 0,
        "square": None,
        "sum_of_squares": [
            {"scale": _scalar_json(c0), "line": _line_json(line)} for c0, line in dec
        ],
    }
    lines = [
        f"discriminant: {_scalar_text(disc)}",
        f"reducible: {'yes' if disc == 0 else 'no'}",
    ]
    if square is not None:
        c0, line = square
        payload["square"] = {"scale": _scalar_json(c0), "line": _line_json(line)}
        lines.append(f"square: {_scalar_text(c0)} * ({_line_text(line)})^2")
    for c0, line in dec:
        lines.append(f"summand: {_scalar_text(c0)} * ({_line_text(line)})^2")
    return 0, payload, lines


def _cmd_symmetric(args) -> tuple[int, dict, list[str]]:
    form = parse(_read_form_text(args.form))
    params = symmetric_decompose(form)
    if params is None:
        payload = {"invariant": False}
        return 1, payload, ["cyclic-invariant: no"]
    reducible = symmetric_reducible(params)
    payload: dict = {
        "invariant": True,
        "params": {
            "a": _scalar_json(params.a),
            "b": _scalar_json(params.b),
            "c": _scalar_json(params.c),
            "d": _scalar_json(params.d),
        },
        "completely_reducible": reducible,
        "factorization": None,
    }
    lines = [
        "cyclic-invariant: yes",
        f"a: {params.a}",
        f"b: {params.b}",
        f"c: {params.c}",
        f"d: {params.d}",
        f"completely-reducible: {'yes' if reducible else 'no'}",
    ]
    if reducible:
        fac = symmetric_factor(params, tol=args.tolerance)
        payload["factorization"] = _factorization_payload(fac)
        lines.extend(_factorization_lines(fac))
    return 0, payload, lines


def _cmd_verify_identities(args) -> tuple[int, dict, list[str]]:
    if args.manifest is not None:
        corpus.write_manifest(args.manifest)
    ids = None
    if args.ids is not None:
        ids = [s for s in args.ids.split(",") if s]
    summary = corpus.verify_all(tier=args.tier, ids=ids)
    if args.reports is not None:
        corpus.write_reports(summary, args.reports)
    payload = {
        "total": len(summary.reports),
        "passed": sum(1 for r in summary.reports if r.passed),
        "failed": list(summary.failed_ids),
        "seconds": round(summary.seconds, 3),
        "reports": [r.to_dict() for r in summary.reports],
    }
    lines = corpus.format_summary(summary).splitlines()
    return (0 if summary.ok else 3), payload, lines


def _random_line(rng: random.Random) -> LinearForm:
    while True:
        c = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        if any(c):
            return LinearForm(*c)


def _cmd_bench(args) -> tuple[int, dict, list[str]]:
    failures = []

    t0 = time.perf_counter()
    counts = {name: generic_concomitant(name).term_count() for name in CONCOMITANT_NAMES}
    generic_seconds = time.perf_counter() - t0
    if any(counts[name] != GENERIC_TERM_COUNTS[name] for name in CONCOMITANT_NAMES):
        failures.append("generic term counts changed")

    flagship = corpus.verify(corpus.get_case("tangent-product-identity"))
    if not flagship.passed:
        failures.append("flagship identity failed")

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    worst = 0.0
    trials = 25
    for _ in range(trials):
        a, b, c = (_random_line(rng) for _ in range(3))
        product = a.to_poly() * b.to_poly() * c.to_poly()
        fac = factor_cubic(product)
        worst = max(worst, fac.residual)
    factor_seconds = time.perf_counter() - t0
    if worst > 1e-8:
        failures.append(f"factor residual {worst:.3e} above 1e-8")

    payload = {
        "seed": args.seed,
        "generic_concomitants": {
            "terms": counts,
            "seconds": round(generic_seconds, 3),
        },
        "flagship": {
            "case": flagship.id,
            "passed": flagship.passed,
            "terms": flagship.left_terms,
            "seconds": round(flagship.seconds, 3),
        },
        "random_factor": {
            "trials": trials,
            "max_residual": worst,
            "seconds": round(factor_seconds, 3),
        },
        "failures": failures,
    }
    lines = [
        f"generic concomitants: {sum(counts.values())} terms in {generic_seconds:.2f}s",
        f"flagship identity: {flagship.left_terms} terms in {flagship.seconds:.2f}s "
        f"({'pass' if flagship.passed else 'FAIL'})",
        f"random factorizations: {trials} trials, max residual {worst:.3e} "
        f"in {factor_seconds:.2f}s",
    ]
    lines.extend(f"FAIL {msg}" for msg in failures)
    return (0 if not failures else 3), payload, lines


# -- driver --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicforms",
        description="Exact calculus of ternary cubic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form(p):
        p.add_argument("form", help="polynomial text, or @path to read a file")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("concomitant", help="compute concomitants of a cubic")
    add_form(p)
    p.add_argument("--kind", help="one of f, delta, theta, S_uuu, T_uuu, S, T, pi, gamma, F")
    p.add_argument(
        "--verify", action="store_true", help="run every cross-check formula"
    )

    p = sub.add_parser("classify", help="walk the reducibility hierarchy")
    add_form(p)
    p.add_argument(
        "--criterion",
        choices=[c.value for c in Criterion],
        help="test a single named criterion instead (exit 1 on a negative)",
    )

    p = sub.add_parser("factor", help="split a completely reducible cubic")
    add_form(p)
    p.add_argument("--tolerance", type=float, default=TOL_FACTOR)
    p.add_argument("--method", choices=["eigen", "cardano"], default="eigen")

    p = sub.add_parser("quad", help="analyze a quadratic form")
    add_form(p)
    p.add_argument("--factor", action="store_true", help="split into two lines")
    p.add_argument("--tolerance", type=float, default=1e-8)

    p = sub.add_parser("symmetric", help="analyze a cyclic-invariant cubic")
    add_form(p)
    p.add_argument("--tolerance", type=float, default=TOL_FACTOR)

    p = sub.add_parser("verify-identities", help="run the identity corpus")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--tier", type=int, choices=[1, 2])
    p.add_argument("--ids", help="comma-separated case ids")
    p.add_argument("--manifest", help="also write the case manifest (JSONL)")
    p.add_argument("--reports", help="also write per-case reports (JSONL)")

    p = sub.add_parser("bench", help="timing and randomized stress numbers")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--seed", type=int, default=0)

    return parser


_HANDLERS = {
    "concomitant": _cmd_concomitant,
    "classify": _cmd_classify,
    "factor": _cmd_factor,
    "quad": _cmd_quad,
    "symmetric": _cmd_symmetric,
    "verify-identities": _cmd_verify_identities,
    "bench": _cmd_bench,
}


def _emit(report: dict, as_json: bool, lines: list[str], stream=None) -> None:
    out = stream or sys.stdout
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)


def run(argv: list[str]) -> int:
    """Execute one command; returns the exit status."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    echo = {
        key: getattr(args, key)
        for key in ("form", "kind", "criterion", "tier", "ids", "seed")
        if hasattr(args, key) and getattr(args, key) is not None
    }
    report = {"schema": SCHEMA, "command": args.command, "input": echo}
    try:
        status, payload, lines = _HANDLERS[args.command](args)
    except CubicFormsError as exc:
        status = _exit_code_for(exc)
        report["error"] = {"code": exc.code, "message": str(exc)}
        report["result"] = None
        if getattr(args, "json", False):
            _emit(report, True, [])
        else:
            print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return status
    report["result"] = payload
    _emit(report, getattr(args, "json", False), lines)
    return status


def main(argv: Optional[list[str]] = None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse usage errors carry status 2
        code = exc.code
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
