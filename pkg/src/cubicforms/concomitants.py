"""The concomitants of a ternary cubic form.

Each concomitant has one defining formula (the source of truth) and at least
one independent cross-check formula that runs under a verification flag.  All
computation happens once on the fully symbolic generic cubic and is cached;
a concrete cubic gets its concomitants by substituting its ten coefficients
into the cached table.  Numeric and symbolic inputs therefore share a single
code path.

Defining formulas, with u_x the incidence form:

    theta  = (1/4)   J2[f, f, u_x^2]
    Delta  = (1/12)  J2[f, f, f]
    S_uuu  = -(1/576) J4[f u_x, f u_x, f u_x]
    T_uuu  = -(1/576) J4[f u_x, f u_x, Delta u_x]
    S      = ||S_uuu||_{u^3 -> f}        (differential pairing)
    T      = ||S_uuu||_{u^3 -> Delta}
    Pi     = (1/12)  J[Delta, f, u_x]
    Gamma  = (1/432) J3[Pi, f, u_x^3]
    F_6u   = (1/192) J2[theta, theta, u_x^2]

The signs on S_uuu and T_uuu are fixed so that all routes agree: the Aronhold
6x6 determinant, -(1/24)J3[u_x d1 f, u_x d2 f, u_x d3 f], (1/96) of the
contracted J2[theta, f, u^2], and the expansion of S with the f_123^4 term
carrying coefficient +1 are all equal under this choice, and the product
values S_uuu = [abc][abu][bcu][cau], S = [abc]^4 come out positive.  The F_6u
normalization is pinned by the product value [abu]^2[bcu]^2[cau]^2, by
S*F_6u = S_uuu*T_uuu on products, and by the integer identity
C^2[F_6u theta] = 36 S_uuu^2; the same scale makes the alternative route
(1/1728) J3[J[theta, f, u_x], f, u_x^3] exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .calculus import contract, contract_power, incidence, jacobian, transvectant
from .errors import CrossCheckError, DegreeMismatchError
from .poly import (
    CUBIC_INDICES,
    Coeff,
    Poly,
    canonical_name,
    coefficients_in,
    const,
    var,
)

CoeffValue = Union[int, Fraction, Poly]


def _index_to_alpha(idx: tuple[int, ...]) -> tuple[int, int, int]:
    return (idx.count(1), idx.count(2), idx.count(3))


class CubicForm:
    """A ternary cubic as its ten coefficients f_111 ... f_333.

    Coefficient values are exact numbers or polynomials; the fully symbolic
    generic cubic has value ``f111`` for key (1,1,1) and so on.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int, int], CoeffValue]):
        table: dict[tuple[int, int, int], CoeffValue] = {idx: 0 for idx in CUBIC_INDICES}
        for idx, value in coeffs.items():
            key = tuple(sorted(idx))
            if key not in table:
                raise DegreeMismatchError(f"not a cubic coefficient index: {idx}")
            table[key] = value if isinstance(value, (int, Poly)) else Fraction(value)
        self.coeffs = table

    @staticmethod
    def generic() -> "CubicForm":
        return CubicForm({idx: var(canonical_name("f", idx)) for idx in CUBIC_INDICES})

    @staticmethod
    def from_poly(p: Poly, family: str = "x") -> "CubicForm":
        split = coefficients_in(p, family)
        coeffs: dict[tuple[int, int, int], CoeffValue] = {}
        for alpha, cof in split.items():
            if sum(alpha) != 3:
                raise DegreeMismatchError(
                    f"polynomial is not homogeneous of degree 3 in {family!r}"
                )
            idx = (1,) * alpha[0] + (2,) * alpha[1] + (3,) * alpha[2]
            try:
                coeffs[idx] = cof.constant_value()
            except DegreeMismatchError:
                coeffs[idx] = cof
        return CubicForm(coeffs)

    def to_poly(self, family: str = "x") -> Poly:
        acc = Poly()
        for idx, value in self.coeffs.items():
            if isinstance(value, Poly):
                if value.is_zero():
                    continue
                term = value
            else:
                if not value:
                    continue
                term = const(value)
            for i in idx:
                term = term * var(f"{family}{i}")
            acc = acc + term
        return acc

    def is_generic(self) -> bool:
        return all(
            isinstance(v, Poly) and v == var(canonical_name("f", idx))
            for idx, v in self.coeffs.items()
        )

    def is_zero(self) -> bool:
        return all(
            v.is_zero() if isinstance(v, Poly) else v == 0 for v in self.coeffs.values()
        )

    def substitution_map(self) -> dict[str, CoeffValue]:
        return {canonical_name("f", idx): v for idx, v in self.coeffs.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubicForm):
            return NotImplemented
        for idx in CUBIC_INDICES:
            a, b = self.coeffs[idx], other.coeffs[idx]
            if isinstance(a, Poly) != isinstance(b, Poly):
                return False
            if a != b:
                return False
        return True

    def __repr__(self) -> str:
        return f"CubicForm({self.to_poly().render()})"


def as_cubic(f: "CubicForm | Poly") -> CubicForm:
    return f if isinstance(f, CubicForm) else CubicForm.from_poly(f)


# Defining prefactors, kept exactly as the formulas require; the identity
# suite's mutation smoke test patches this table to prove it can detect a
# corrupted normalization.
_PREFACTORS: dict[str, Fraction] = {
    "theta": Fraction(1, 4),
    "delta": Fraction(1, 12),
    "s_uuu": Fraction(-1, 576),
    "t_uuu": Fraction(-1, 576),
    "pi": Fraction(1, 12),
    "gamma": Fraction(1, 432),
    "f6u": Fraction(1, 192),
}

CONCOMITANT_NAMES = ("delta", "theta", "s_uuu", "t_uuu", "s", "t", "pi", "gamma", "f6u")

# Degree of each concomitant in the point variables, the line variables, and
# the coefficients of f, plus the expanded term count for the generic cubic.
CONCOMITANT_DEGREES: dict[str, tuple[int, int, int]] = {
    "f": (3, 0, 1),
    "delta": (3, 0, 3),
    "theta": (2, 2, 2),
    "s_uuu": (0, 3, 3),
    "t_uuu": (0, 3, 5),
    "s": (0, 0, 4),
    "t": (0, 0, 6),
    "pi": (4, 1, 4),
    "gamma": (1, 4, 5),
    "f6u": (0, 6, 4),
}
GENERIC_TERM_COUNTS: dict[str, int] = {
    "f": 10,
    "delta": 73,
    "theta": 84,
    "s_uuu": 82,
    "t_uuu": 448,
    "s": 25,
    "t": 103,
    "pi": 576,
    "gamma": 1314,
    "f6u": 418,
}


@lru_cache(maxsize=1)
def _generic_table() -> dict[str, Poly]:
    f = CubicForm.generic().to_poly()
    ux = incidence("u", "x")
    pf = _PREFACTORS
    theta = transvectant(2, f, f, ux * ux) * pf["theta"]
    delta = transvectant(2, f, f, f) * pf["delta"]
    fux = f * ux
    s_uuu = transvectant(4, fux, fux, fux) * pf["s_uuu"]
    t_uuu = transvectant(4, fux, fux, delta * ux) * pf["t_uuu"]
    s = s_uuu.symbol_power("u", 3, f)
    t = s_uuu.symbol_power("u", 3, delta)
    pi = jacobian(delta, f, ux) * pf["pi"]
    gamma = transvectant(3, pi, f, ux ** 3) * pf["gamma"]
    f6u = transvectant(2, theta, theta, ux * ux) * pf["f6u"]
    return {
        "f": f,
        "delta": delta,
        "theta": theta,
        "s_uuu": s_uuu,
        "t_uuu": t_uuu,
        "s": s,
        "t": t,
        "pi": pi,
        "gamma": gamma,
        "f6u": f6u,
    }


def specialize(p: Poly, f: CubicForm) -> Poly:
    """Substitute a cubic's coefficients into a generic-coefficient form."""
    if f.is_generic():
        return p
    return p.subs(f.substitution_map(), strict=True)


def generic_concomitant(name: str) -> Poly:
    return _generic_table()[name]


def _concomitant(name: str, f: "CubicForm | Poly") -> Poly:
    return specialize(_generic_table()[name], as_cubic(f))


def _det(rows: list[list[Poly]]) -> Poly:
    if len(rows) == 1:
        return rows[0][0]
    acc = Poly()
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [[r[k] for k in range(len(r)) if k != j] for r in rows[1:]]
        term = entry * _det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def aronhold_determinant(f: "CubicForm | Poly") -> Poly:
    """S_uuu as the 6x6 determinant in the coefficients and u1, u2, u3."""
    c = as_cubic(f).coeffs

    def fv(*idx: int) -> Poly:
        v = c[tuple(sorted(idx))]
        return v if isinstance(v, Poly) else const(v)

    u1, u2, u3 = var("u1"), var("u2"), var("u3")
    zero = Poly()
    return _det(
        [
            [3 * fv(1, 1, 1), fv(1, 1, 2), fv(1, 1, 3), u1, zero, zero],
            [2 * fv(1, 1, 2), 2 * fv(1, 2, 2), fv(1, 2, 3), u2, u1, zero],
            [fv(1, 2, 2), 3 * fv(2, 2, 2), fv(2, 2, 3), zero, u2, zero],
            [2 * fv(1, 1, 3), fv(1, 2, 3), 2 * fv(1, 3, 3), u3, zero, u1],
            [fv(1, 2, 3), 2 * fv(2, 2, 3), 2 * fv(2, 3, 3), zero, u3, u2],
            [fv(1, 3, 3), fv(2, 3, 3), 3 * fv(3, 3, 3), zero, zero, u3],
        ]
    )


def bordered_determinant(f: Poly) -> Poly:
    """The symmetric 4x4 determinant bordered by u; J2[f,f,u_x^2] = -4 times
    this for any form f."""
    d = {
        (i, j): f.derive(f"x{i}").derive(f"x{j}") for i in (1, 2, 3) for j in (1, 2, 3)
    }
    u1, u2, u3 = var("u1"), var("u2"), var("u3")
    return _det(
        [
            [d[(1, 1)], d[(1, 2)], d[(1, 3)], u1],
            [d[(1, 2)], d[(2, 2)], d[(2, 3)], u2],
            [d[(1, 3)], d[(2, 3)], d[(3, 3)], u3],
            [u1, u2, u3, Poly()],
        ]
    )


def _check(name: str, main: Poly, alt: Poly) -> None:
    if main != alt:
        raise CrossCheckError(
            f"cross-check failed for {name}: defining and alternative formulas disagree"
        )


def hessian(f: "CubicForm | Poly", verify: bool = False) -> Poly:
    """Delta, the Hessian covariant: (1/12) J2[f, f, f]."""
    cf = as_cubic(f)
    delta = _concomitant("delta", cf)
    if verify:
        fp = cf.to_poly()
        alt = jacobian(fp.derive("x1"), fp.derive("x2"), fp.derive("x3")) * Fraction(1, 2)
        _check("delta", delta, alt)
    return delta


def theta(f: "CubicForm | Poly", verify: bool = False) -> Poly:
    """The quadratic contravariant-covariant: (1/4) J2[f, f, u_x^2]."""
    cf = as_cubic(f)
    th = _concomitant("theta", cf)
    if verify:
        _check("theta", th, -bordered_determinant(cf.to_poly()))
    return th


def aronhold_set(
    f: "CubicForm | Poly", verify: bool = False
) -> tuple[Poly, Poly, Poly, Poly, Poly]:
    """(S_uuu, T_uuu, S, T, Pi) of one cubic.

    Verification recomputes S_uuu by the Aronhold determinant and the
    contraction route, T_uuu by its contraction route, S by the fourth
    contraction of theta^2, T by the pairing against T_uuu and the sixth
    contraction of theta^3, and Pi by its higher-transvectant formula.
    """
    cf = as_cubic(f)
    s_uuu = _concomitant("s_uuu", cf)
    t_uuu = _concomitant("t_uuu", cf)
    s = _concomitant("s", cf)
    t = _concomitant("t", cf)
    pi = _concomitant("pi", cf)
    if verify:
        fp = cf.to_poly()
        ux = incidence("u", "x")
        th = _concomitant("theta", cf)
        delta = _concomitant("delta", cf)
        _check("s_uuu", s_uuu, aronhold_determinant(cf))
        _check(
            "s_uuu",
            s_uuu,
            contract(transvectant(2, th, fp, ux * ux)) * Fraction(1, 96),
        )
        _check(
            "t_uuu",
            t_uuu,
            contract(transvectant(2, th, delta, ux * ux)) * Fraction(1, 96),
        )
        _check("s", s, contract_power(th * th, 4) * Fraction(1, 576))
        _check("t", t, t_uuu.symbol_power("u", 3, fp))
        _check("t", t, contract_power(th ** 3, 6) * Fraction(-1, 276480))
        _check("pi", pi, transvectant(3, fp, fp * fp, fp * ux) * Fraction(1, 576))
    return (s_uuu, t_uuu, s, t, pi)


def f6u(f: "CubicForm | Poly", verify: bool = False) -> Poly:
    """The sextic contravariant: (1/192) J2[theta, theta, u_x^2]."""
    cf = as_cubic(f)
    val = _concomitant("f6u", cf)
    if verify:
        fp = cf.to_poly()
        ux = incidence("u", "x")
        th = _concomitant("theta", cf)
        alt = transvectant(3, jacobian(th, fp, ux), fp, ux ** 3) * Fraction(1, 1728)
        _check("f6u", val, alt)
    return val


def gamma(f: "CubicForm | Poly", verify: bool = False) -> Poly:
    """The reducibility concomitant: (1/432) J3[Pi, f, u_x^3]."""
    cf = as_cubic(f)
    val = _concomitant("gamma", cf)
    if verify:
        ux = incidence("u", "x")
        s_uuu = _concomitant("s_uuu", cf)
        t_uuu = _concomitant("t_uuu", cf)
        th = _concomitant("theta", cf)
        alt = (2 * t_uuu * ux - contract(s_uuu * th)) * Fraction(1, 24)
        _check("gamma", val, alt)
    return val


@dataclass(frozen=True)
class ConcomitantSet:
    """The ten concomitants of one cubic, with the formula that produced
    each entry."""

    f: Poly
    delta: Poly
    theta: Poly
    s_uuu: Poly
    t_uuu: Poly
    s: Poly
    t: Poly
    pi: Poly
    gamma: Poly
    f6u: Poly
    provenance: Mapping[str, str]

    def by_name(self, name: str) -> Poly:
        if name not in CONCOMITANT_DEGREES:
            raise KeyError(name)
        return getattr(self, name)


_PROVENANCE = {
    "f": "input form",
    "delta": "(1/12) J2[f,f,f]",
    "theta": "(1/4) J2[f,f,ux^2]",
    "s_uuu": "-(1/576) J4[f ux, f ux, f ux]",
    "t_uuu": "-(1/576) J4[f ux, f ux, Delta ux]",
    "s": "||S_uuu|| under u^3 -> f",
    "t": "||S_uuu|| under u^3 -> Delta",
    "pi": "(1/12) J[Delta, f, ux]",
    "gamma": "(1/432) J3[Pi, f, ux^3]",
    "f6u": "(1/192) J2[theta, theta, ux^2]",
}


def concomitant_set(f: "CubicForm | Poly", verify: bool = False) -> ConcomitantSet:
    """All ten concomitants; with ``verify`` every cross-check formula runs
    and any disagreement raises CrossCheckError."""
    cf = as_cubic(f)
    if verify:
        hessian(cf, verify=True)
        theta(cf, verify=True)
        aronhold_set(cf, verify=True)
        f6u(cf, verify=True)
        gamma(cf, verify=True)
    values = {name: _concomitant(name, cf) for name in CONCOMITANT_NAMES}
    return ConcomitantSet(
        f=cf.to_poly(), provenance=dict(_PROVENANCE), **values
    )
