"""Executable catalog of the identities the concomitant calculus rests on.

Each case states one polynomial identity as two independently built sides,
fully expanded over generic coefficient symbols, and verification is exact
equality of the canonical forms.  Tier 1 holds the identities the library's
public results depend on; tier 2 holds expansion lemmas that only matter
inside longer derivations.  The suite doubles as the performance benchmark:
reports carry wall time per case.

Term counts recorded in ``_EXPECTED_TERMS`` were frozen from the first
verified run and act as regression values; a changed count means a changed
expansion even when the difference still cancels.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Optional

from . import concomitants as _concomitants
from .calculus import (
    bracket,
    contract,
    contract_power,
    incidence,
    jacobian,
    multi_polar,
    transvectant,
)
from .classify import theta_coefficient
from .concomitants import (
    CubicForm,
    aronhold_determinant,
    as_cubic,
    bordered_determinant,
    generic_concomitant,
    specialize,
)
from .errors import BuilderError
from .poly import (
    CUBIC_INDICES,
    QUADRATIC_INDICES,
    Poly,
    Substitution,
    canonical_name,
    coefficients_in,
    const,
    rewrite_powers,
    rewrite_product,
    var,
)

__all__ = [
    "IdentityCase",
    "CaseReport",
    "CorpusSummary",
    "cases",
    "get_case",
    "verify",
    "verify_all",
    "write_manifest",
    "write_reports",
    "format_summary",
    "clear_caches",
]


# -- case model and runner ---------------------------------------------------


@dataclass(frozen=True)
class IdentityCase:
    """One identity: two builder recipes plus bookkeeping.

    ``left`` and ``right`` expand their side from scratch (shared
    intermediates are memoized module-wide).  ``symbols`` names the generic
    families involved, for reporting only.  ``expected_terms`` pins the term
    count of the common expansion once a case has gone green.
    """

    id: str
    tier: int
    anchor: str
    symbols: tuple[str, ...]
    left: Callable[[], Poly]
    right: Callable[[], Poly]
    expected_terms: Optional[int] = None


@dataclass(frozen=True)
class CaseReport:
    id: str
    tier: int
    passed: bool
    seconds: float
    left_terms: int
    right_terms: int
    expected_terms: Optional[int]
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "tier": self.tier,
            "passed": self.passed,
            "seconds": round(self.seconds, 4),
            "left_terms": self.left_terms,
            "right_terms": self.right_terms,
            "expected_terms": self.expected_terms,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CorpusSummary:
    reports: tuple[CaseReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed_ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.reports if not r.passed)

    @property
    def seconds(self) -> float:
        return sum(r.seconds for r in self.reports)


_REGISTRY: dict[str, IdentityCase] = {}
_CACHED: list = []

# Term counts of the common expansion, frozen from the first verified run.
_EXPECTED_TERMS: dict[str, int] = {
    "adjoint-at-cross-of-two-points": 42,
    "adjoint-cube-of-theta-slice": 1720,
    "adjoint-of-line-blend-quadratic": 432,
    "adjoint-of-pencil-quadratic": 180,
    "binary-discriminant-as-dual-slice": 6568,
    "cubic-form-in-line-basis": 540,
    "double-contraction-line-pair-expansion": 864,
    "dual-sextic-on-product": 2043,
    "dual-sextic-on-two-cubes": 406,
    "dual-sextic-via-nested-transvectant": 418,
    "dual-slice-as-theta-coefficient-minor": 5,
    "dual-slice-no-corner-cubes": 1,
    "euler-cubic": 10,
    "gamma-on-product-vanishes": 0,
    "gamma-slice-no-corner-cubes": 10,
    "gamma-via-hessian-theta-transvectant": 1314,
    "gamma-via-tuuu-theta-combination": 1314,
    "hessian-as-second-partials-det": 73,
    "hessian-on-product": 352,
    "hessian-squared-via-contractions": 1516,
    "hessian-via-gradient-jacobian": 73,
    "j1-with-line-cube-and-line-vanishes": 0,
    "j1-with-line-square-and-line-vanishes": 0,
    "j2-of-cubic-with-line-squares": 306,
    "j2-of-cubic-with-mixed-pair": 306,
    "j2-of-f-with-theta-slice": 537,
    "j2-pair-swap": 63,
    "j2-via-nested-jacobians": 99,
    "j2-with-blended-line-and-line-cube-vanishes": 0,
    "j2-with-blended-line-and-line-square-vanishes": 0,
    "j2-with-blended-line-square-vanishes": 0,
    "j3-mixed-line-symmetry": 102,
    "j3-of-f-with-hessian-vanishes": 0,
    "j3-with-blended-quadratic-vanishes": 0,
    "j3-with-heavy-line-pair-vanishes": 0,
    "j3-with-line-point-square-via-nested": 102,
    "j3-with-line-square-point-via-nested": 102,
    "jacobian-of-cubic-with-two-lines": 612,
    "jacobian-of-quadratic-with-two-lines": 99,
    "l-form-factored-no-corner-cubes": 12,
    "linear-form-in-line-basis": 18,
    "pencil-quadratic-is-degenerate": 0,
    "pi-on-product-vanishes": 0,
    "pi-via-higher-transvectant": 576,
    "quadratic-form-in-line-basis": 126,
    "reduced-transvectant-relation-111": 2,
    "reduced-transvectant-relation-112": 3,
    "reduced-transvectant-relation-122": 3,
    "reduced-transvectant-relation-222": 2,
    "s-gamma-contraction-identity": 17742,
    "s-hessian-t-f-contraction-identity": 1498,
    "s-on-product": 120,
    "s-uuu-as-bordered-coefficient-det": 82,
    "s-uuu-on-product": 415,
    "s-uuu-squared-via-dual-theta-contraction": 1720,
    "s-uuu-squared-via-hessian-adjoint": 1720,
    "s-uuu-via-theta-contraction": 82,
    "s-via-theta-square-contraction": 25,
    "symmetric-dual-at-unit-point": 3,
    "symmetric-hessian-display": 38,
    "symmetric-radical-factorization": 30,
    "syzygy-hessian-adjoint-s-theta": 0,
    "syzygy-s-cubed-t-squared": 0,
    "syzygy-s-dual-suuu-tuuu": 0,
    "syzygy-s-hessian-t-f": 0,
    "syzygy-s-suuu-squared-t-dual": 0,
    "syzygy-s-tuuu-t-suuu": 0,
    "syzygy-t-hessian-s-squared-f": 0,
    "t-on-product": 406,
    "t-uuu-on-product": 2016,
    "t-uuu-via-theta-contraction": 448,
    "t-via-theta-cube-contraction": 103,
    "t-via-tuuu-pairing": 103,
    "tangent-product-identity": 85119,
    "tangent-product-identity-via-dual": 85119,
    "theta-as-bordered-det": 84,
    "theta-on-product": 390,
    "theta-on-two-cubes": 156,
    "theta-polar-cube-defect": 1141,
    "theta-polar-gradient-substitution": 951,
    "theta-polar-minor-factorization": 3729,
    "transvectant-line-power-reduction-k1-n1": 96,
    "transvectant-line-power-reduction-k1-n2": 180,
    "transvectant-line-power-reduction-k1-n3": 294,
    "transvectant-line-power-reduction-k2-n2": 156,
    "transvectant-line-power-reduction-k2-n3": 306,
    "transvectant-line-power-reduction-k3-n3": 162,
    "transvectant-of-line-powers-k1": 6,
    "transvectant-of-line-powers-k2": 21,
    "transvectant-of-line-powers-k3": 54,
    "triple-contraction-line-cube-expansion": 2442,
    "triple-contraction-line-product-expansion": 3048,
    "triple-contraction-mixed-cube-expansion": 3066,
    "triple-contraction-nested-jacobian-expansion": 3084,
}


def _cached(fn):
    wrapped = lru_cache(maxsize=None)(fn)
    _CACHED.append(wrapped)
    return wrapped


def clear_caches() -> None:
    """Drop every memoized intermediate, including the shared generic
    concomitant table.  Needed by tests that patch a defining prefactor."""
    for fn in _CACHED:
        fn.cache_clear()
    _concomitants._generic_table.cache_clear()


def _identity(case_id: str, *, anchor: str, symbols: Iterable[str], tier: int = 1):
    def register(builder):
        if case_id in _REGISTRY:
            raise BuilderError(f"duplicate corpus case id {case_id!r}")
        paired = _cached(builder)
        _REGISTRY[case_id] = IdentityCase(
            id=case_id,
            tier=tier,
            anchor=anchor,
            symbols=tuple(symbols),
            left=lambda: paired()[0],
            right=lambda: paired()[1],
            expected_terms=_EXPECTED_TERMS.get(case_id),
        )
        return paired

    return register


def cases(tier: Optional[int] = None) -> tuple[IdentityCase, ...]:
    out = sorted(_REGISTRY.values(), key=lambda c: c.id)
    if tier is not None:
        out = [c for c in out if c.tier == tier]
    return tuple(out)


def get_case(case_id: str) -> IdentityCase:
    return _REGISTRY[case_id]


def verify(case: IdentityCase) -> CaseReport:
    """Expand both sides and compare exactly.

    Raises BuilderError when a recipe itself is broken; a false identity is
    a failed report, not an exception.
    """
    start = time.perf_counter()
    try:
        left = case.left()
        right = case.right()
    except Exception as exc:
        raise BuilderError(f"case {case.id}: builder failed: {exc}") from exc
    diff = left - right
    passed = diff.is_zero()
    detail = ""
    if not passed:
        detail = f"difference has {diff.term_count()} terms"
    elif case.expected_terms is not None and left.term_count() != case.expected_terms:
        passed = False
        detail = (
            f"expansion has {left.term_count()} terms, expected {case.expected_terms}"
        )
    return CaseReport(
        id=case.id,
        tier=case.tier,
        passed=passed,
        seconds=time.perf_counter() - start,
        left_terms=left.term_count(),
        right_terms=right.term_count(),
        expected_terms=case.expected_terms,
        detail=detail,
    )


def verify_all(
    tier: Optional[int] = None, ids: Optional[Iterable[str]] = None
) -> CorpusSummary:
    """Run the corpus (optionally filtered); reports come back sorted by id.

    An id filter that matches nothing yields an empty, successful summary.
    Builder breakage is folded into a failed report so one bad recipe cannot
    take down the whole run.
    """
    selected = cases(tier)
    if ids is not None:
        wanted = set(ids)
        selected = tuple(c for c in selected if c.id in wanted)
    reports = []
    for case in selected:
        try:
            reports.append(verify(case))
        except BuilderError as exc:
            reports.append(
                CaseReport(
                    id=case.id,
                    tier=case.tier,
                    passed=False,
                    seconds=0.0,
                    left_terms=0,
                    right_terms=0,
                    expected_terms=case.expected_terms,
                    detail=str(exc),
                )
            )
    return CorpusSummary(tuple(reports))


def write_manifest(path: str) -> None:
    """One JSON record per case: id, tier, expected term count, anchor."""
    with open(path, "w", encoding="utf-8") as fh:
        for case in cases():
            fh.write(
                json.dumps(
                    {
                        "id": case.id,
                        "tier": case.tier,
                        "expected_terms": case.expected_terms,
                        "anchor": case.anchor,
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def write_reports(summary: CorpusSummary, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for report in summary.reports:
            fh.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")


def format_summary(summary: CorpusSummary) -> str:
    tiers = sorted({r.tier for r in summary.reports})
    counts = ", ".join(
        f"tier {t}: {sum(1 for r in summary.reports if r.tier == t)}" for t in tiers
    )
    lines = [f"identity corpus: {len(summary.reports)} cases ({counts})"]
    for r in summary.reports:
        status = "PASS" if r.passed else "FAIL"
        extra = f"  [{r.detail}]" if r.detail else ""
        lines.append(
            f"{status} {r.id:<46} {r.seconds:8.3f}s {r.left_terms:>7} terms{extra}"
        )
    failed = len(summary.failed_ids)
    lines.append(
        f"total: {len(summary.reports) - failed} passed, {failed} failed, "
        f"{summary.seconds:.1f}s"
    )
    return "\n".join(lines)


# -- shared generic objects --------------------------------------------------


@_cached
def _f() -> Poly:
    return CubicForm.generic().to_poly()


@_cached
def _gen(name: str) -> Poly:
    return generic_concomitant(name)


@_cached
def _line(family: str) -> Poly:
    return incidence(family)


@_cached
def _generic_cubic(family: str) -> Poly:
    acc = Poly()
    for idx in CUBIC_INDICES:
        term = var(canonical_name(family, idx))
        for i in idx:
            term = term * var(f"x{i}")
        acc = acc + term
    return acc


@_cached
def _generic_quadratic(family: str) -> Poly:
    acc = Poly()
    for i, j in QUADRATIC_INDICES:
        acc = acc + var(f"{family}{i}{j}") * var(f"x{i}") * var(f"x{j}")
    return acc


def _e3_point(p: Poly) -> Poly:
    return p.subs({"u1": 0, "u2": 0, "u3": 1}, strict=False)


@_cached
def _product_poly() -> Poly:
    return _line("a") * _line("b") * _line("c")


@_cached
def _on_product(name: str) -> Poly:
    return specialize(_gen(name), as_cubic(_product_poly()))


@_cached
def _two_cubes_poly() -> Poly:
    return var("a0") * _line("a") ** 3 + var("b0") * _line("b") ** 3


@_cached
def _on_two_cubes(name: str) -> Poly:
    return specialize(_gen(name), as_cubic(_two_cubes_poly()))


@_cached
def _l_display() -> Poly:
    """The degree-five covariant of the two polar directions, spelled out."""
    f = _f()
    fxyy = multi_polar(f, {"y": 2})
    fxyz = multi_polar(f, {"y": 1, "z": 1})
    fxzz = multi_polar(f, {"z": 2})
    fyyy = multi_polar(f, {"y": 3})
    fyyz = multi_polar(f, {"y": 2, "z": 1})
    fyzz = multi_polar(f, {"y": 1, "z": 2})
    fzzz = multi_polar(f, {"z": 3})
    return (
        fxzz ** 3 * fyyy ** 2
        - fxyz * fxzz ** 2 * fyyy * fyyz
        + fxyy * fxzz ** 2 * fyyz ** 2
        + fxyz ** 2 * fxzz * fyyy * fyzz
        - 2 * fxyy * fxzz ** 2 * fyyy * fyzz
        - fxyy * fxyz * fxzz * fyyz * fyzz
        + fxyy ** 2 * fxzz * fyzz ** 2
        - fxyz ** 3 * fyyy * fzzz
        + 3 * fxyy * fxyz * fxzz * fyyy * fzzz
        + fxyy * fxyz ** 2 * fyyz * fzzz
        - 2 * fxyy ** 2 * fxzz * fyyz * fzzz
        - fxyy ** 2 * fxyz * fyzz * fzzz
        + fxyy ** 3 * fzzz ** 2
    )


@_cached
def _delta_display() -> Poly:
    """Discriminant of the restriction to the pencil through y and z."""
    f = _f()
    fyyy = multi_polar(f, {"y": 3})
    fyyz = multi_polar(f, {"y": 2, "z": 1})
    fyzz = multi_polar(f, {"y": 1, "z": 2})
    fzzz = multi_polar(f, {"z": 3})
    return (
        fyyz ** 2 * fyzz ** 2
        - 4 * fyyy * fyzz ** 3
        - 4 * fyyz ** 3 * fzzz
        + 18 * fyyy * fyyz * fyzz * fzzz
        - 27 * fyyy ** 2 * fzzz ** 2
    )


@_cached
def _gamma_yz() -> Poly:
    return Substitution.line_coordinates("u", "y", "z").apply(_gen("gamma"))


@_cached
def _f6u_yz() -> Poly:
    return Substitution.line_coordinates("u", "y", "z").apply(_gen("f6u"))


@_cached
def _sym_basis() -> tuple[Poly, Poly, Poly, Poly]:
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    pa = (2 * x1 - x2 - x3) * (2 * x2 - x3 - x1) * (2 * x3 - x1 - x2)
    pb = (x1 - x2) * (x2 - x3) * (x3 - x1)
    pc = (x1 + x2 + x3) ** 3
    pd = x1 ** 3 + x2 ** 3 + x3 ** 3 - 3 * x1 * x2 * x3
    return pa, pb, pc, pd


@_cached
def _sym_form() -> Poly:
    pa, pb, pc, pd = _sym_basis()
    return var("a0") * pa + var("b0") * pb + var("c0") * pc + var("d0") * pd


def _no_corner_cubes(p: Poly) -> Poly:
    return p.subs({"f111": 0, "f222": 0}, strict=False)


def _span_reconstruction(target: Poly, basis: list[Poly]) -> Poly:
    """Write ``target`` as an exact rational combination of ``basis``.

    Returns the combination when one exists and the zero polynomial when
    none does (so the caller's equality check fails honestly).  Plain
    Gaussian elimination over the union of monomial supports.
    """
    keys: list[int] = sorted(
        {k for b in basis for k in b._t} | set(target._t)
    )
    rows = [
        [Fraction(b._t.get(k, 0)) for b in basis] + [Fraction(target._t.get(k, 0))]
        for k in keys
    ]
    n = len(basis)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n]:
            return Poly()
    coeffs = [Fraction(0)] * n
    for row_idx, col in enumerate(pivots):
        coeffs[col] = rows[row_idx][n]
    acc = Poly()
    for c, b in zip(coeffs, basis):
        if c:
            acc = acc + b * c
    return acc


# -- scaling and polar basics ------------------------------------------------


@_identity(
    "euler-cubic",
    anchor="x1 d1f + x2 d2f + x3 d3f = 3 f for a cubic f",
    symbols=("f",),
)
def _case_euler():
    f = _f()
    left = sum((var(f"x{i}") * f.derive(f"x{i}") for i in (1, 2, 3)), Poly())
    return left, 3 * f


@_identity(
    "hessian-as-second-partials-det",
    anchor="J2[f,f,f] = 6 det(didj f)",
    symbols=("f",),
)
def _case_second_partials_det():
    f = _f()
    d = {
        (i, j): f.derive(f"x{i}").derive(f"x{j}")
        for i in (1, 2, 3)
        for j in (1, 2, 3)
    }
    det = (
        d[(1, 1)] * (d[(2, 2)] * d[(3, 3)] - d[(2, 3)] * d[(3, 2)])
        - d[(1, 2)] * (d[(2, 1)] * d[(3, 3)] - d[(2, 3)] * d[(3, 1)])
        + d[(1, 3)] * (d[(2, 1)] * d[(3, 2)] - d[(2, 2)] * d[(3, 1)])
    )
    return transvectant(2, f, f, f), 6 * det


@_identity(
    "theta-as-bordered-det",
    anchor="J2[f,f,ux^2] = -4 times the u-bordered determinant of didj f",
    symbols=("f", "u"),
)
def _case_bordered_det():
    f = _f()
    ux = _line("u")
    return transvectant(2, f, f, ux * ux), -4 * bordered_determinant(f)


def _eqa22_case(k: int, n: int):
    f = _f()
    a = _line("a")
    g = {1: _line("b"), 2: _generic_quadratic("h"), 3: _generic_cubic("g")}[k]
    left = transvectant(k, f, g * a, a ** n)
    right = comb(n, k) * transvectant(k, f, g, a ** k) * a ** (n + 1 - k)
    return left, right


for _k, _n in ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)):
    _identity(
        f"transvectant-line-power-reduction-k{_k}-n{_n}",
        anchor=(
            f"J{_k}[f, g a, a^{_n}] = C({_n},{_k}) J{_k}[f, g, a^{_k}] "
            f"a^{_n + 1 - _k} for g of degree {_k}"
        ),
        symbols=("f", "a", "bgh"[_k - 1]),
    )(lambda k=_k, n=_n: _eqa22_case(k, n))


@_identity(
    "j1-with-line-square-and-line-vanishes",
    anchor="J[f, a^2, a] = 0",
    symbols=("f", "a"),
)
def _case_j1_a2_a():
    a = _line("a")
    return jacobian(_f(), a * a, a), Poly()


@_identity(
    "j1-with-line-cube-and-line-vanishes",
    anchor="J[f, a^3, a] = 0",
    symbols=("f", "a"),
)
def _case_j1_a3_a():
    a = _line("a")
    return jacobian(_f(), a ** 3, a), Poly()


@_identity(
    "j2-with-blended-line-and-line-cube-vanishes",
    anchor="J2[f, b a, a^3] = 0",
    symbols=("f", "a", "b"),
)
def _case_j2_ba_a3():
    a, b = _line("a"), _line("b")
    return transvectant(2, _f(), b * a, a ** 3), Poly()


@_identity(
    "j2-with-blended-line-and-line-square-vanishes",
    anchor="J2[f, b a, a^2] = 0",
    symbols=("f", "a", "b"),
)
def _case_j2_ba_a2():
    a, b = _line("a"), _line("b")
    return transvectant(2, _f(), b * a, a * a), Poly()


@_identity(
    "j2-with-blended-line-square-vanishes",
    anchor="J2[f, b a^2, a^2] = 0",
    symbols=("f", "a", "b"),
)
def _case_j2_ba2_a2():
    a, b = _line("a"), _line("b")
    return transvectant(2, _f(), b * a * a, a * a), Poly()


@_identity(
    "j3-with-blended-quadratic-vanishes",
    anchor="J3[f, h a, a^3] = 0 for a quadratic h",
    symbols=("f", "a", "h"),
)
def _case_j3_ha_a3():
    a = _line("a")
    return transvectant(3, _f(), _generic_quadratic("h") * a, a ** 3), Poly()


@_identity(
    "j2-pair-swap",
    anchor="2 J2[f, ab, ab] = -J2[f, a^2, b^2]",
    symbols=("f", "a", "b"),
)
def _case_j2_pair_swap():
    f = _f()
    a, b = _line("a"), _line("b")
    return 2 * transvectant(2, f, a * b, a * b), -transvectant(2, f, a * a, b * b)


@_identity(
    "j3-with-heavy-line-pair-vanishes",
    anchor="J3[f, a^2 b, a^2 c] = 0",
    symbols=("f", "a", "b", "c"),
)
def _case_j3_a2b_a2c():
    a, b, c = _line("a"), _line("b"), _line("c")
    return transvectant(3, _f(), a * a * b, a * a * c), Poly()


@_identity(
    "j3-mixed-line-symmetry",
    anchor="J3[f, a b^2, a c^2] = J3[f, b c^2, b a^2]",
    symbols=("f", "a", "b", "c"),
)
def _case_j3_mixed_symmetry():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    return (
        transvectant(3, f, a * b * b, a * c * c),
        transvectant(3, f, b * c * c, b * a * a),
    )


def _eqk_case(k: int):
    a, b, c = _line("a"), _line("b"), _line("c")
    left = transvectant(k, a ** k, b ** k, c ** k)
    right = factorial(k) ** 3 * bracket("a", "b", "c") ** k
    return left, right


for _k in (1, 2, 3):
    _identity(
        f"transvectant-of-line-powers-k{_k}",
        anchor=f"J{_k}[a^{_k}, b^{_k}, c^{_k}] = ({_k}!)^3 [abc]^{_k}",
        symbols=("a", "b", "c"),
    )(lambda k=_k: _eqk_case(k))


@_identity(
    "linear-form-in-line-basis",
    anchor="[abc] d = J[d,b,c] a + J[d,c,a] b + J[d,a,b] c for a linear form d",
    symbols=("d", "a", "b", "c"),
)
def _case_linear_basis():
    a, b, c, d = _line("a"), _line("b"), _line("c"), _line("d")
    left = bracket("a", "b", "c") * d
    right = (
        jacobian(d, b, c) * a + jacobian(d, c, a) * b + jacobian(d, a, b) * c
    )
    return left, right


@_identity(
    "quadratic-form-in-line-basis",
    anchor="8 [abc]^2 h expands over the six products of a, b, c",
    symbols=("h", "a", "b", "c"),
)
def _case_quadratic_basis():
    q = _generic_quadratic("h")
    a, b, c = _line("a"), _line("b"), _line("c")
    left = 8 * bracket("a", "b", "c") ** 2 * q
    right = (
        transvectant(2, q, b * b, c * c) * a * a
        + transvectant(2, q, a * a, c * c) * b * b
        + transvectant(2, q, a * a, b * b) * c * c
        - 2 * transvectant(2, q, a * b, c * c) * a * b
        - 2 * transvectant(2, q, a * c, b * b) * a * c
        - 2 * transvectant(2, q, b * c, a * a) * b * c
    )
    return left, right


@_identity(
    "cubic-form-in-line-basis",
    anchor="216 [abc]^3 f expands over the ten cubic products of a, b, c",
    symbols=("f", "a", "b", "c"),
)
def _case_cubic_basis():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    left = 216 * bracket("a", "b", "c") ** 3 * f
    right = (
        transvectant(3, f, b3, c3) * a3
        + transvectant(3, f, c3, a3) * b3
        + transvectant(3, f, a3, b3) * c3
        + 3 * transvectant(3, f, c3, b * b * a) * a * a * b
        + 3 * transvectant(3, f, b3, a * a * c) * c * c * a
        + 3 * transvectant(3, f, a3, c * c * b) * b * b * c
        - 3 * transvectant(3, f, a3, b * b * c) * c * c * b
        - 3 * transvectant(3, f, b3, c * c * a) * a * a * c
        - 3 * transvectant(3, f, c3, a * a * b) * b * b * a
        + 9 * transvectant(3, f, a * b * b, a * c * c) * a * b * c
    )
    return left, right


@_identity(
    "jacobian-of-quadratic-with-two-lines",
    anchor="4 [abc] J[h,a,b] = -J2[h,ac,b^2] a - J2[h,bc,a^2] b + J2[h,a^2,b^2] c",
    symbols=("h", "a", "b", "c"),
)
def _case_jac_quadratic_lines():
    q = _generic_quadratic("h")
    a, b, c = _line("a"), _line("b"), _line("c")
    left = 4 * bracket("a", "b", "c") * jacobian(q, a, b)
    right = (
        -transvectant(2, q, a * c, b * b) * a
        - transvectant(2, q, b * c, a * a) * b
        + transvectant(2, q, a * a, b * b) * c
    )
    return left, right


@_identity(
    "jacobian-of-cubic-with-two-lines",
    anchor="216 [abc]^2 J[f,a,b] expands over six third transvectants",
    symbols=("f", "a", "b", "c"),
)
def _case_jac_cubic_lines():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    left = 216 * bracket("a", "b", "c") ** 2 * jacobian(f, a, b)
    right = (
        3 * transvectant(3, f, a3, b3) * c * c
        + 6 * transvectant(3, f, b3, a * a * c) * a * c
        + 3 * transvectant(3, f, a3, c * c * b) * b * b
        - 6 * transvectant(3, f, a3, b * b * c) * b * c
        - 3 * transvectant(3, f, b3, c * c * a) * a * a
        + 9 * transvectant(3, f, a * b * b, a * c * c) * a * b
    )
    return left, right


@_identity(
    "j2-of-cubic-with-line-squares",
    anchor="9 [abc] J2[f,a^2,b^2] = J3[f,b^3,a^2 c] a - J3[f,a^3,b^2 c] b + J3[f,a^3,b^3] c",
    symbols=("f", "a", "b", "c"),
)
def _case_j2_line_squares():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    left = 9 * bracket("a", "b", "c") * transvectant(2, f, a * a, b * b)
    right = (
        transvectant(3, f, b ** 3, a * a * c) * a
        - transvectant(3, f, a ** 3, b * b * c) * b
        + transvectant(3, f, a ** 3, b ** 3) * c
    )
    return left, right


@_identity(
    "j2-of-cubic-with-mixed-pair",
    anchor="18 [abc] J2[f,a^2,bc] = -3 J3[f,ab^2,ac^2] a - 2 J3[f,a^3,c^2 b] b + 2 J3[f,a^3,b^2 c] c",
    symbols=("f", "a", "b", "c"),
)
def _case_j2_mixed_pair():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    left = 18 * bracket("a", "b", "c") * transvectant(2, f, a * a, b * c)
    right = (
        -3 * transvectant(3, f, a * b * b, a * c * c) * a
        - 2 * transvectant(3, f, a ** 3, c * c * b) * b
        + 2 * transvectant(3, f, a ** 3, b * b * c) * c
    )
    return left, right


@_identity(
    "j2-via-nested-jacobians",
    anchor="J2[f, a v, u^2] = 4 J[J[f,a,u], v, u]",
    symbols=("f", "a", "u", "v"),
)
def _case_nested_j2():
    f = _f()
    a, u, v = _line("a"), _line("u"), _line("v")
    left = transvectant(2, f, a * v, u * u)
    right = 4 * jacobian(jacobian(f, a, u), v, u)
    return left, right


@_identity(
    "j3-with-line-point-square-via-nested",
    anchor="J3[f, a v^2, u^3] = 9 J[J2[f, a v, u^2], v, u]",
    symbols=("f", "a", "u", "v"),
)
def _case_nested_j3_av2():
    f = _f()
    a, u, v = _line("a"), _line("u"), _line("v")
    left = transvectant(3, f, a * v * v, u ** 3)
    right = 9 * jacobian(transvectant(2, f, a * v, u * u), v, u)
    return left, right


@_identity(
    "j3-with-line-square-point-via-nested",
    anchor="J3[f, a^2 v, u^3] = 9 J[J2[f, a^2, u^2], v, u]",
    symbols=("f", "a", "u", "v"),
)
def _case_nested_j3_a2v():
    f = _f()
    a, u, v = _line("a"), _line("u"), _line("v")
    left = transvectant(3, f, a * a * v, u ** 3)
    right = 9 * jacobian(transvectant(2, f, a * a, u * u), v, u)
    return left, right


# -- quadratic forms ----------------------------------------------------------


@_cached
def _pencil_quadratic() -> Poly:
    """4 h(y) h(x) - h_xy^2: the pair of tangent lines to h through y."""
    q = _generic_quadratic("h")
    qy = multi_polar(q, {"y": 2})
    qxy = multi_polar(q, {"y": 1})
    return 4 * qy * q - qxy * qxy


@_identity(
    "adjoint-at-cross-of-two-points",
    anchor="J2[h,h,u^2] at u = x cross y equals 4 (4 h(y) h - h_xy^2)",
    symbols=("h", "y", "u"),
)
def _case_adjoint_cross():
    q = _generic_quadratic("h")
    ux = _line("u")
    left = Substitution.line_coordinates("u", "x", "y").apply(
        transvectant(2, q, q, ux * ux)
    )
    return left, 4 * _pencil_quadratic()


@_identity(
    "adjoint-of-pencil-quadratic",
    anchor="3 J2[g,g,u^2] = 16 J2[h,h,h] h(y) u_y^2 for g = 4 h(y) h - h_xy^2",
    symbols=("h", "y", "u"),
)
def _case_pencil_adjoint():
    q = _generic_quadratic("h")
    g = _pencil_quadratic()
    ux = _line("u")
    uy = incidence("u", "y")
    left = 3 * transvectant(2, g, g, ux * ux)
    right = 16 * transvectant(2, q, q, q) * multi_polar(q, {"y": 2}) * uy * uy
    return left, right


@_identity(
    "pencil-quadratic-is-degenerate",
    anchor="J2[g,g,g] = 0 for g = 4 h(y) h - h_xy^2",
    symbols=("h", "y"),
)
def _case_pencil_degenerate():
    g = _pencil_quadratic()
    return transvectant(2, g, g, g), Poly()


@_identity(
    "adjoint-of-line-blend-quadratic",
    anchor="J2[g,g,u^2] = a_y^2 u_y^2 J2[h,h,a^2] for g = a^2 h(y) - a a_y h_xy + a_y^2 h",
    symbols=("h", "a", "y", "u"),
)
def _case_line_blend_adjoint():
    q = _generic_quadratic("h")
    a = _line("a")
    ay = incidence("a", "y")
    uy = incidence("u", "y")
    ux = _line("u")
    g = a * a * multi_polar(q, {"y": 2}) - a * ay * multi_polar(q, {"y": 1}) + ay * ay * q
    left = transvectant(2, g, g, ux * ux)
    right = ay * ay * uy * uy * transvectant(2, q, q, a * a)
    return left, right


# -- theta and hessian lemmas -------------------------------------------------


@_identity(
    "theta-polar-cube-defect",
    anchor="4 (27 f_yyy^2 f - f_xyy^3) = ||3 f_yyy theta_uuxy + f_xyy theta_uuyy|| at u = x cross y",
    symbols=("f", "y", "u"),
)
def _case_cube_defect():
    f = _f()
    th = _gen("theta")
    fyyy = multi_polar(f, {"y": 3})
    fxyy = multi_polar(f, {"y": 2})
    th_xy = multi_polar(th, {"y": 1})
    th_yy = multi_polar(th, {"y": 2})
    left = 4 * (27 * fyyy ** 2 * f - fxyy ** 3)
    right = Substitution.line_coordinates("u", "x", "y").apply(
        3 * fyyy * th_xy + fxyy * th_yy
    )
    return left, right


@_identity(
    "s-uuu-squared-via-hessian-adjoint",
    anchor="768 S_uuu^2 = J2[J2[Delta,f,u^2], theta, u^2]",
    symbols=("f", "u"),
)
def _case_suuu_squared_adjoint():
    f = _f()
    ux2 = _line("u") ** 2
    inner = transvectant(2, _gen("delta"), f, ux2)
    left = 768 * _gen("s_uuu") ** 2
    right = transvectant(2, inner, _gen("theta"), ux2)
    return left, right


@_identity(
    "hessian-squared-via-contractions",
    anchor="18 Delta^2 = 111 C3[S_uuu f] f^2 - 4 C3[S_uuu f^3]",
    symbols=("f",),
)
def _case_hessian_squared():
    f = _f()
    s_uuu = _gen("s_uuu")
    left = 18 * _gen("delta") ** 2
    right = 111 * contract_power(s_uuu * f, 3) * f * f - 4 * contract_power(
        s_uuu * f ** 3, 3
    )
    return left, right


@_identity(
    "adjoint-cube-of-theta-slice",
    anchor="J2[theta_vv, theta_vv, theta_vv] = 192 S_vvv^2",
    symbols=("f", "v"),
)
def _case_theta_slice_cube():
    th_v = _gen("theta").rename_family("u", "v")
    s_v = _gen("s_uuu").rename_family("u", "v")
    return transvectant(2, th_v, th_v, th_v), 192 * s_v ** 2


@_identity(
    "j2-of-f-with-theta-slice",
    anchor="27 J2[f, theta_vv, u^2] = 288 S_uuv v_x - 144 S_uvv u_x + 36 ||Delta_xyz|| at y = z = u cross v",
    symbols=("f", "u", "v"),
)
def _case_f_theta_slice():
    f = _f()
    th_v = _gen("theta").rename_family("u", "v")
    s_uuu = _gen("s_uuu")
    s_uuv = multi_polar(s_uuu, {"v": 1}, family="u")
    s_uvv = multi_polar(s_uuu, {"v": 2}, family="u")
    d_xyz = multi_polar(_gen("delta"), {"y": 1, "z": 1})
    d_sub = Substitution.line_coordinates("z", "u", "v").apply(
        Substitution.line_coordinates("y", "u", "v").apply(d_xyz)
    )
    left = 27 * transvectant(2, f, th_v, _line("u") ** 2)
    right = 288 * s_uuv * _line("v") - 144 * s_uvv * _line("u") + 36 * d_sub
    return left, right


@_identity(
    "s-uuu-squared-via-dual-theta-contraction",
    anchor="C2[F theta] = 36 S_uuu^2",
    symbols=("f", "u"),
)
def _case_suuu_squared_dual():
    left = contract_power(_gen("f6u") * _gen("theta"), 2)
    return left, 36 * _gen("s_uuu") ** 2


@_identity(
    "theta-polar-minor-factorization",
    anchor="4 theta_uuyy theta_vvyy - theta_uvyy^2 = 16 Delta(y) ||f_xxy|| at x = u cross v",
    symbols=("f", "y", "u", "v"),
)
def _case_theta_minor():
    th_yy = multi_polar(_gen("theta"), {"y": 2})
    th_vvyy = th_yy.rename_family("u", "v")
    th_uvyy = multi_polar(th_yy, {"v": 1}, family="u")
    delta_y = multi_polar(_gen("delta"), {"y": 3})
    fxxy = multi_polar(_f(), {"y": 1})
    fxxy_uv = Substitution.line_coordinates("x", "u", "v").apply(fxxy)
    left = 4 * th_yy * th_vvyy - th_uvyy ** 2
    return left, 16 * delta_y * fxxy_uv


@_identity(
    "theta-polar-gradient-substitution",
    anchor="theta_uuyy with u -> grad f equals 3 f Delta_xyy - f_xxy Delta_xxy + f_xyy Delta",
    symbols=("f", "y"),
)
def _case_theta_gradient():
    f = _f()
    delta = _gen("delta")
    th_yy = multi_polar(_gen("theta"), {"y": 2})
    grads = {f"u{i}": f.derive(f"x{i}") for i in (1, 2, 3)}
    left = th_yy.subs(grads, strict=False)
    right = (
        3 * f * multi_polar(delta, {"y": 2})
        - multi_polar(f, {"y": 1}) * multi_polar(delta, {"y": 1})
        + multi_polar(f, {"y": 2}) * delta
    )
    return left, right


@_identity(
    "j3-of-f-with-hessian-vanishes",
    anchor="J3[f, Delta, u^3] = 0",
    symbols=("f", "u"),
)
def _case_j3_f_hessian():
    return transvectant(3, _f(), _gen("delta"), _line("u") ** 3), Poly()


# -- concomitants of a product of three lines ---------------------------------


@_identity(
    "hessian-on-product",
    anchor="Delta(abc) = [abc]^2 abc",
    symbols=("a", "b", "c"),
)
def _case_hessian_product():
    return _on_product("delta"), bracket("a", "b", "c") ** 2 * _product_poly()


@_identity(
    "theta-on-product",
    anchor="theta(abc) = [abc]^2 u_x^2 - 2([bcu]^2 a^2 + [cau]^2 b^2 + [abu]^2 c^2)",
    symbols=("a", "b", "c", "u"),
)
def _case_theta_product():
    a, b, c = _line("a"), _line("b"), _line("c")
    ux = _line("u")
    right = bracket("a", "b", "c") ** 2 * ux * ux - 2 * (
        bracket("b", "c", "u") ** 2 * a * a
        + bracket("c", "a", "u") ** 2 * b * b
        + bracket("a", "b", "u") ** 2 * c * c
    )
    return _on_product("theta"), right


@_identity(
    "s-uuu-on-product",
    anchor="S_uuu(abc) = [abc][abu][bcu][cau]",
    symbols=("a", "b", "c", "u"),
)
def _case_suuu_product():
    right = (
        bracket("a", "b", "c")
        * bracket("a", "b", "u")
        * bracket("b", "c", "u")
        * bracket("c", "a", "u")
    )
    return _on_product("s_uuu"), right


@_identity(
    "s-on-product",
    anchor="S(abc) = [abc]^4",
    symbols=("a", "b", "c"),
)
def _case_s_product():
    return _on_product("s"), bracket("a", "b", "c") ** 4


@_identity(
    "t-uuu-on-product",
    anchor="T_uuu(abc) = [abc]^3 [abu][bcu][cau]",
    symbols=("a", "b", "c", "u"),
)
def _case_tuuu_product():
    right = (
        bracket("a", "b", "c") ** 3
        * bracket("a", "b", "u")
        * bracket("b", "c", "u")
        * bracket("c", "a", "u")
    )
    return _on_product("t_uuu"), right


@_identity(
    "t-on-product",
    anchor="T(abc) = [abc]^6",
    symbols=("a", "b", "c"),
)
def _case_t_product():
    return _on_product("t"), bracket("a", "b", "c") ** 6


@_identity(
    "dual-sextic-on-product",
    anchor="F(abc) = [abu]^2 [bcu]^2 [cau]^2",
    symbols=("a", "b", "c", "u"),
)
def _case_f6u_product():
    right = (
        bracket("a", "b", "u") ** 2
        * bracket("b", "c", "u") ** 2
        * bracket("c", "a", "u") ** 2
    )
    return _on_product("f6u"), right


@_identity(
    "pi-on-product-vanishes",
    anchor="Pi(abc) = 0",
    symbols=("a", "b", "c"),
)
def _case_pi_product():
    return _on_product("pi"), Poly()


@_identity(
    "gamma-on-product-vanishes",
    anchor="Gamma(abc) = 0",
    symbols=("a", "b", "c"),
)
def _case_gamma_product():
    return _on_product("gamma"), Poly()


# -- syzygies on a product of three lines -------------------------------------


@_identity(
    "syzygy-s-cubed-t-squared",
    anchor="S^3 - T^2 = 0 on a product of three lines",
    symbols=("a", "b", "c"),
)
def _case_syzygy_st():
    return _on_product("s") ** 3 - _on_product("t") ** 2, Poly()


@_identity(
    "syzygy-s-hessian-t-f",
    anchor="S Delta - T f = 0 on a product of three lines",
    symbols=("a", "b", "c"),
)
def _case_syzygy_sdelta():
    left = _on_product("s") * _on_product("delta") - _on_product("t") * _product_poly()
    return left, Poly()


@_identity(
    "syzygy-s-tuuu-t-suuu",
    anchor="S T_uuu - T S_uuu = 0 on a product of three lines",
    symbols=("a", "b", "c", "u"),
)
def _case_syzygy_stu():
    left = _on_product("s") * _on_product("t_uuu") - _on_product("t") * _on_product(
        "s_uuu"
    )
    return left, Poly()


@_identity(
    "syzygy-t-hessian-s-squared-f",
    anchor="T Delta - S^2 f = 0 on a product of three lines",
    symbols=("a", "b", "c"),
)
def _case_syzygy_tdelta():
    left = (
        _on_product("t") * _on_product("delta")
        - _on_product("s") ** 2 * _product_poly()
    )
    return left, Poly()


@_identity(
    "syzygy-s-suuu-squared-t-dual",
    anchor="S S_uuu^2 - T F = 0 on a product of three lines",
    symbols=("a", "b", "c", "u"),
)
def _case_syzygy_ssuuu():
    left = _on_product("s") * _on_product("s_uuu") ** 2 - _on_product(
        "t"
    ) * _on_product("f6u")
    return left, Poly()


@_identity(
    "syzygy-hessian-adjoint-s-theta",
    anchor="J2[Delta,Delta,u^2] - 4 S theta = 0 on a product of three lines",
    symbols=("a", "b", "c", "u"),
)
def _case_syzygy_hessian_adjoint():
    d = _on_product("delta")
    left = transvectant(2, d, d, _line("u") ** 2) - 4 * _on_product("s") * _on_product(
        "theta"
    )
    return left, Poly()


@_identity(
    "syzygy-s-dual-suuu-tuuu",
    anchor="S F - S_uuu T_uuu = 0 on a product of three lines",
    symbols=("a", "b", "c", "u"),
)
def _case_syzygy_sf():
    left = _on_product("s") * _on_product("f6u") - _on_product("s_uuu") * _on_product(
        "t_uuu"
    )
    return left, Poly()


# -- concomitants of a sum of two cubes ---------------------------------------


@_identity(
    "dual-sextic-on-two-cubes",
    anchor="F(a0 a^3 + b0 b^3) = -27 a0^2 b0^2 [abu]^6",
    symbols=("a", "b", "u"),
)
def _case_f6u_two_cubes():
    right = -27 * var("a0") ** 2 * var("b0") ** 2 * bracket("a", "b", "u") ** 6
    return _on_two_cubes("f6u"), right


@_identity(
    "theta-on-two-cubes",
    anchor="theta(a0 a^3 + b0 b^3) = 36 a0 b0 [abu]^2 a b",
    symbols=("a", "b", "u"),
)
def _case_theta_two_cubes():
    right = (
        36 * var("a0") * var("b0") * bracket("a", "b", "u") ** 2 * _line("a") * _line("b")
    )
    return _on_two_cubes("theta"), right


# -- alternative routes to the concomitants -----------------------------------


@_identity(
    "hessian-via-gradient-jacobian",
    anchor="Delta = (1/2) J[d1f, d2f, d3f]",
    symbols=("f",),
)
def _case_hessian_gradients():
    f = _f()
    right = Fraction(1, 2) * jacobian(
        f.derive("x1"), f.derive("x2"), f.derive("x3")
    )
    return _gen("delta"), right


@_identity(
    "s-uuu-as-bordered-coefficient-det",
    anchor="S_uuu equals the six by six determinant in the coefficients and u",
    symbols=("f", "u"),
)
def _case_suuu_det():
    return _gen("s_uuu"), aronhold_determinant(CubicForm.generic())


@_identity(
    "s-uuu-via-theta-contraction",
    anchor="S_uuu = (1/96) C[J2[theta, f, u^2]]",
    symbols=("f", "u"),
)
def _case_suuu_contraction():
    right = contract(
        transvectant(2, _gen("theta"), _f(), _line("u") ** 2)
    ) * Fraction(1, 96)
    return _gen("s_uuu"), right


@_identity(
    "t-uuu-via-theta-contraction",
    anchor="T_uuu = (1/96) C[J2[theta, Delta, u^2]]",
    symbols=("f", "u"),
)
def _case_tuuu_contraction():
    right = contract(
        transvectant(2, _gen("theta"), _gen("delta"), _line("u") ** 2)
    ) * Fraction(1, 96)
    return _gen("t_uuu"), right


@_identity(
    "s-via-theta-square-contraction",
    anchor="S = (1/576) C4[theta^2]",
    symbols=("f",),
)
def _case_s_contraction():
    th = _gen("theta")
    return _gen("s"), contract_power(th * th, 4) * Fraction(1, 576)


@_identity(
    "t-via-theta-cube-contraction",
    anchor="T = -(1/276480) C6[theta^3]",
    symbols=("f",),
)
def _case_t_contraction():
    th = _gen("theta")
    return _gen("t"), contract_power(th ** 3, 6) * Fraction(-1, 276480)


@_identity(
    "t-via-tuuu-pairing",
    anchor="T = ||T_uuu|| under u^3 -> f",
    symbols=("f",),
)
def _case_t_pairing():
    return _gen("t"), _gen("t_uuu").symbol_power("u", 3, _f())


@_identity(
    "pi-via-higher-transvectant",
    anchor="Pi = (1/576) J3[f, f^2, f u_x]",
    symbols=("f", "u"),
)
def _case_pi_alt():
    f = _f()
    right = transvectant(3, f, f * f, f * _line("u")) * Fraction(1, 576)
    return _gen("pi"), right


@_identity(
    "gamma-via-tuuu-theta-combination",
    anchor="Gamma = (1/24)(2 T_uuu u_x - C[S_uuu theta])",
    symbols=("f", "u"),
)
def _case_gamma_alt():
    right = (
        2 * _gen("t_uuu") * _line("u") - contract(_gen("s_uuu") * _gen("theta"))
    ) * Fraction(1, 24)
    return _gen("gamma"), right


@_identity(
    "dual-sextic-via-nested-transvectant",
    anchor="F = (1/1728) J3[J[theta, f, u_x], f, u_x^3]",
    symbols=("f", "u"),
)
def _case_f6u_alt():
    f = _f()
    ux = _line("u")
    right = transvectant(3, jacobian(_gen("theta"), f, ux), f, ux ** 3) * Fraction(
        1, 1728
    )
    return _gen("f6u"), right


# -- the tangent-product identity and its pieces -------------------------------


@_identity(
    "binary-discriminant-as-dual-slice",
    anchor="the pencil discriminant equals F at u = y cross z",
    symbols=("f", "y", "z"),
)
def _case_delta_slice():
    return _delta_display(), _f6u_yz()


@_identity(
    "tangent-product-identity",
    anchor="L + delta f = [xyz]^2 ||Gamma|| at u = y cross z",
    symbols=("f", "y", "z"),
)
def _case_tangent_product():
    left = _l_display() + _delta_display() * _f()
    right = bracket("x", "y", "z") ** 2 * _gamma_yz()
    return left, right


@_identity(
    "tangent-product-identity-via-dual",
    anchor="L + ||F|| f = [xyz]^2 ||Gamma|| with both norms at u = y cross z",
    symbols=("f", "y", "z"),
)
def _case_tangent_product_dual():
    left = _l_display() + _f6u_yz() * _f()
    right = bracket("x", "y", "z") ** 2 * _gamma_yz()
    return left, right


@_identity(
    "s-gamma-contraction-identity",
    anchor="432 S Gamma = 6 C2[(S F - S_uuu T_uuu) f] - C3[(S F - S_uuu T_uuu) f] u_x",
    symbols=("f", "u"),
)
def _case_s_gamma():
    f = _f()
    excess = _gen("s") * _gen("f6u") - _gen("s_uuu") * _gen("t_uuu")
    left = 432 * _gen("s") * _gen("gamma")
    right = 6 * contract_power(excess * f, 2) - contract_power(excess * f, 3) * _line(
        "u"
    )
    return left, right


@_identity(
    "s-hessian-t-f-contraction-identity",
    anchor="96 (S Delta - T f) = -C2[(J2[Delta,Delta,u^2] - 4 S theta) f]",
    symbols=("f", "u"),
)
def _case_s_hessian_t_f():
    f = _f()
    d = _gen("delta")
    excess = transvectant(2, d, d, _line("u") ** 2) - 4 * _gen("s") * _gen("theta")
    left = 96 * (_gen("s") * d - _gen("t") * f)
    return left, -contract_power(excess * f, 2)


@_identity(
    "gamma-via-hessian-theta-transvectant",
    anchor="2304 Gamma = 14 J2[Delta, theta, u^2] - C[J2[Delta, theta, u^2] u_x]",
    symbols=("f", "u"),
)
def _case_gamma_hessian_theta():
    mixed = transvectant(2, _gen("delta"), _gen("theta"), _line("u") ** 2)
    left = 2304 * _gen("gamma")
    return left, 14 * mixed - contract(mixed * _line("u"))


@_identity(
    "dual-slice-as-theta-coefficient-minor",
    anchor="48 F at u = e3 equals 4 theta_3311 theta_3322 - theta_3312^2",
    symbols=("f",),
)
def _case_dual_slice_minor():
    th = _gen("theta")
    left = 48 * _e3_point(_gen("f6u"))
    right = 4 * theta_coefficient(th, 3, 3, 1, 1) * theta_coefficient(
        th, 3, 3, 2, 2
    ) - theta_coefficient(th, 3, 3, 1, 2) ** 2
    return left, right


# -- the corner-free special case ----------------------------------------------


@_identity(
    "dual-slice-no-corner-cubes",
    anchor="F at u = e3 with f111 = f222 = 0 equals (f112 f122)^2",
    symbols=("f",),
)
def _case_dual_slice_corner_free():
    left = _no_corner_cubes(_e3_point(_gen("f6u")))
    return left, (var("f112") * var("f122")) ** 2


@_identity(
    "gamma-slice-no-corner-cubes",
    anchor="Gamma at u = e3 with f111 = f222 = 0, written out by coefficients",
    symbols=("f",),
)
def _case_gamma_slice_corner_free():
    left = _no_corner_cubes(_e3_point(_gen("gamma")))
    f112, f113, f122, f123 = var("f112"), var("f113"), var("f122"), var("f123")
    f133, f223, f233, f333 = var("f133"), var("f223"), var("f233"), var("f333")
    right = (
        f122 ** 2 * (f113 ** 2 * f122 - f112 * f113 * f123 + f112 ** 2 * f133) * var("x1")
        + f112 ** 2 * (f112 * f223 ** 2 - f122 * f123 * f223 + f122 ** 2 * f233) * var("x2")
        + (
            f113 ** 2 * f122 ** 2 * f223
            - f112 * f113 * f122 * f123 * f223
            + f112 ** 2 * f113 * f223 ** 2
            + f112 ** 2 * f122 ** 2 * f333
        )
        * var("x3")
    )
    return left, right


@_identity(
    "l-form-factored-no-corner-cubes",
    anchor="L at y = e2, z = e1 with f111 = f222 = 0 factors into three lines",
    symbols=("f",),
)
def _case_l_factored_corner_free():
    spec = {"y1": 0, "y2": 1, "y3": 0, "z1": 1, "z2": 0, "z3": 0}
    left = _no_corner_cubes(_l_display().subs(spec, strict=False))
    f112, f113, f122, f123 = var("f112"), var("f113"), var("f122"), var("f123")
    f223 = var("f223")
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    right = -(
        (f112 * x2 + f113 * x3)
        * (f122 * x1 + f223 * x3)
        * (
            f112 * f122 * (f112 * x1 + f122 * x2)
            + (f112 * f122 * f123 - f112 ** 2 * f223 - f113 * f122 ** 2) * x3
        )
    )
    return left, right


# -- coefficient relations of a reduced transvectant ---------------------------


@_cached
def _reduced_transvectant_coefficients() -> list[Poly]:
    """u-coefficients of J3[f, g, u^3] for g with g113 = g123 = g223 = g333 = 0."""
    g = _generic_cubic("g").subs(
        {"g113": 0, "g123": 0, "g223": 0, "g333": 0}, strict=False
    )
    e = transvectant(3, _f(), g, _line("u") ** 3)
    return [p for _, p in sorted(coefficients_in(e, "u").items()) if not p.is_zero()]


def _relation_case(relation: Poly):
    basis = _reduced_transvectant_coefficients()
    return relation, _span_reconstruction(relation, basis)


_RELATIONS = {
    "reduced-transvectant-relation-222": lambda: 3 * var("f333") * var("g222")
    + var("f223") * var("g233"),
    "reduced-transvectant-relation-122": lambda: 3 * var("f333") * var("g122")
    + var("f223") * var("g133")
    + var("f123") * var("g233"),
    "reduced-transvectant-relation-112": lambda: 3 * var("f333") * var("g112")
    + var("f123") * var("g133")
    + var("f113") * var("g233"),
    "reduced-transvectant-relation-111": lambda: 3 * var("f333") * var("g111")
    + var("f113") * var("g133"),
}

for _rid, _rel in _RELATIONS.items():
    _identity(
        _rid,
        anchor=(
            "a displayed coefficient relation is an exact rational combination "
            "of the u-coefficients of J3[f, g, u^3] when g113 = g123 = g223 = g333 = 0"
        ),
        symbols=("f", "g"),
    )(lambda rel=_rel: _relation_case(rel()))


# -- forms fixed by cyclic permutation -----------------------------------------


@_identity(
    "symmetric-hessian-display",
    anchor="Delta of the cyclic-basis form is 81 d^2 f - 108 ((27a^2+b^2)c + d^3) (x1^3+x2^3+x3^3-3x1x2x3)",
    symbols=("abcd",),
)
def _case_symmetric_hessian():
    form = _sym_form()
    _, _, _, pd = _sym_basis()
    a0, b0, c0, d0 = var("a0"), var("b0"), var("c0"), var("d0")
    left = specialize(_gen("delta"), as_cubic(form))
    right = 81 * d0 ** 2 * form - 108 * (
        (27 * a0 ** 2 + b0 ** 2) * c0 + d0 ** 3
    ) * pd
    return left, right


@_identity(
    "symmetric-dual-at-unit-point",
    anchor="F of the cyclic-basis form at u = (1,1,1) is 729 (27a^2 + b^2)^2",
    symbols=("abcd",),
)
def _case_symmetric_dual():
    form = _sym_form()
    left = specialize(_gen("f6u"), as_cubic(form)).subs(
        {"u1": 1, "u2": 1, "u3": 1}, strict=False
    )
    right = 729 * (27 * var("a0") ** 2 + var("b0") ** 2) ** 2
    return left, right


@_identity(
    "symmetric-radical-factorization",
    anchor=(
        "9 f = A B C for the cyclic-basis form, with the radicals kept symbolic "
        "and eliminated through their defining relations"
    ),
    symbols=("abcd", "w", "i", "s"),
)
def _case_symmetric_factorization():
    # omega as a symbol pair: i1^2 -> -1, s1^2 -> 3, so omega = (-1 + i1 s1)/2.
    om = const(Fraction(-1, 2)) + Fraction(1, 2) * var("i1") * var("s1")
    om2 = const(Fraction(-1, 2)) - Fraction(1, 2) * var("i1") * var("s1")
    one = const(1)
    rows = (
        ((one, om2, om), (one, om, om2)),
        ((om2, om, one), (om, om2, one)),
        ((om, one, om2), (om2, one, om)),
    )
    al1, al2, gam = var("w1"), var("w2"), var("w3")
    xs = [var(f"x{i}") for i in (1, 2, 3)]
    sx = sum(xs, Poly())
    factors = []
    for w1, w2 in rows:
        fac = Poly()
        for i in range(3):
            fac = fac + (al1 * w1[i] + gam + al2 * w2[i]) * xs[i]
        factors.append(fac)
    prod = factors[0] * factors[1] * factors[2]
    unit_rules = {"i1": (2, const(-1)), "s1": (2, const(3))}
    prod = rewrite_powers(prod, unit_rules)
    a0, b0, c0, d0 = var("a0"), var("b0"), var("c0"), var("d0")
    isb = var("i1") * var("s1") * b0
    prod = rewrite_powers(
        prod,
        {
            "w1": (3, 9 * a0 - isb),
            "w2": (3, 9 * a0 + isb),
            "w3": (3, const(9) * c0),
        },
    )
    prod = rewrite_product(prod, ("w1", "w2", "w3"), -3 * d0)
    prod = rewrite_powers(prod, unit_rules)
    return 9 * _sym_form(), prod


# -- tier 2: contraction expansion lemmas --------------------------------------


@_identity(
    "triple-contraction-line-cube-expansion",
    anchor="C3[J3[f,a^3,u^3] b^3 c^3] expands over four third transvectants",
    symbols=("f", "a", "b", "c"),
    tier=2,
)
def _case_contract_line_cube():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    left = contract_power(transvectant(3, f, a3, _line("u") ** 3) * b3 * c3, 3)
    right = 36 * (
        transvectant(3, f, a3, b3) * c3
        - transvectant(3, f, c3, a3) * b3
        + 9 * transvectant(3, f, a3, c * c * b) * b * b * c
        + 9 * transvectant(3, f, a3, b * b * c) * c * c * b
    )
    return left, right


@_identity(
    "double-contraction-line-pair-expansion",
    anchor="C2[J2[f,ab,u^2] a b c^2] expands over four second transvectants",
    symbols=("f", "a", "b", "c"),
    tier=2,
)
def _case_contract_line_pair():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    left = contract_power(
        transvectant(2, f, a * b, _line("u") ** 2) * a * b * c * c, 2
    )
    right = (
        4 * transvectant(2, f, a * b, c * c) * a * b
        - 2 * transvectant(2, f, a * a, b * b) * c * c
        - 4 * transvectant(2, f, a * c, b * b) * a * c
        - 4 * transvectant(2, f, b * c, a * a) * b * c
    )
    return left, right


@_identity(
    "triple-contraction-nested-jacobian-expansion",
    anchor="C3[J[J2[f,ab,u^2] u_x c, a^2 c, b^2 c]] expands over eight third transvectants",
    symbols=("f", "a", "b", "c"),
    tier=2,
)
def _case_contract_nested_jacobian():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    inner = transvectant(2, f, a * b, _line("u") ** 2) * _line("u") * c
    left = contract_power(jacobian(inner, a * a * c, b * b * c), 3)
    right = 24 * (
        -2 * transvectant(3, f, a3, b3) * c3
        - transvectant(3, f, c3, b * b * a) * a * a * b
        + 5 * transvectant(3, f, b3, a * a * c) * c * c * a
        + transvectant(3, f, a3, c * c * b) * b * b * c
        - 5 * transvectant(3, f, a3, b * b * c) * c * c * b
        - transvectant(3, f, b3, c * c * a) * a * a * c
        + transvectant(3, f, c3, a * a * b) * b * b * a
        - 12 * transvectant(3, f, a * b * b, a * c * c) * a * b * c
    )
    return left, right


@_identity(
    "triple-contraction-line-product-expansion",
    anchor="C3[J3[f,abc,u^3] a^2 b^2 c^2] expands over six third transvectants",
    symbols=("f", "a", "b", "c"),
    tier=2,
)
def _case_contract_line_product():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    left = contract_power(
        transvectant(3, f, a * b * c, _line("u") ** 3) * a * a * b * b * c * c, 3
    )
    right = 24 * (
        transvectant(3, f, c3, b * b * a) * a * a * b
        + transvectant(3, f, b3, a * a * c) * c * c * a
        + transvectant(3, f, a3, c * c * b) * b * b * c
        + transvectant(3, f, a3, b * b * c) * c * c * b
        + transvectant(3, f, b3, c * c * a) * a * a * c
        + transvectant(3, f, c3, a * a * b) * b * b * a
    )
    return left, right


@_identity(
    "triple-contraction-mixed-cube-expansion",
    anchor="C3[J3[f,a^2 b,u^3] a b^2 c^3] expands over five third transvectants",
    symbols=("f", "a", "b", "c"),
    tier=2,
)
def _case_contract_mixed_cube():
    f = _f()
    a, b, c = _line("a"), _line("b"), _line("c")
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    left = contract_power(
        transvectant(3, f, a * a * b, _line("u") ** 3) * a * b * b * c3, 3
    )
    right = 12 * (
        -transvectant(3, f, a3, b3) * c3
        + 3 * transvectant(3, f, b3, a * a * c) * c * c * a
        - 3 * transvectant(3, f, a3, c * c * b) * b * b * c
        - 3 * transvectant(3, f, c3, a * a * b) * b * b * a
        - 6 * transvectant(3, f, a3, b * b * c) * c * c * b
        - 18 * transvectant(3, f, a * b * b, a * c * c) * a * b * c
    )
    return left, right
