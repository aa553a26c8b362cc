"""Reducibility and constructive decompositions of ternary quadratic forms.

A quadratic form is a square iff J2[f,f,u^2] = 0, a product of two linear
forms iff J2[f,f,f] = 0, and always a sum of at most three squares.  The
constructions all run through one device: for fixed y with f(y) != 0, the
form g = 4 f_yy f - f_xy^2 is closer to being a square than f is, and
solving for f turns a decomposition of g into one of f.  Everything here
stays in exact rational arithmetic; only factor_quadratic can leave the
rationals, and it does so explicitly through square roots.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .errors import DegreeMismatchError, IrreducibleError, PreconditionError
from .poly import Poly, QUADRATIC_INDICES, coefficients_in, const, var

Scalar = Union[int, Fraction, float, complex]


def _exact(v) -> bool:
    return isinstance(v, (int, Fraction))


def _sqrt(v: Scalar) -> Scalar:
    """Square root, exact when the radicand is a rational square."""
    if _exact(v):
        fr = Fraction(v)
        if fr >= 0:
            num = math.isqrt(fr.numerator)
            den = math.isqrt(fr.denominator)
            if num * num == fr.numerator and den * den == fr.denominator:
                return Fraction(num, den)
        return cmath.sqrt(complex(fr))
    return cmath.sqrt(complex(v))


class LinearForm:
    """A linear form c1 x1 + c2 x2 + c3 x3; coefficients may be exact
    rationals or complex numbers."""

    __slots__ = ("c",)

    def __init__(self, c1: Scalar, c2: Scalar, c3: Scalar):
        self.c = (c1, c2, c3)

    @staticmethod
    def from_poly(p: Poly, family: str = "x") -> "LinearForm":
        split = coefficients_in(p, family)
        coeffs = [Fraction(0)] * 3
        for alpha, cof in split.items():
            if sum(alpha) != 1:
                raise DegreeMismatchError("not a linear form")
            coeffs[alpha.index(1)] = cof.constant_value()
        return LinearForm(*coeffs)

    def to_poly(self, family: str = "x") -> Poly:
        if not all(_exact(v) for v in self.c):
            raise PreconditionError("inexact coefficients have no Poly image")
        acc = Poly()
        for i, v in enumerate(self.c):
            if v:
                acc = acc + const(Fraction(v)) * var(f"{family}{i + 1}")
        return acc

    def __call__(self, x1: Scalar, x2: Scalar, x3: Scalar) -> Scalar:
        return self.c[0] * x1 + self.c[1] * x2 + self.c[2] * x3

    def is_zero(self, tol: float = 0.0) -> bool:
        if all(_exact(v) for v in self.c):
            return not any(self.c)
        return all(abs(complex(v)) <= tol for v in self.c)

    def is_exact(self) -> bool:
        return all(_exact(v) for v in self.c)

    def scale(self, s: Scalar) -> "LinearForm":
        return LinearForm(s * self.c[0], s * self.c[1], s * self.c[2])

    def monic(self) -> tuple[Scalar, "LinearForm"]:
        """(leading coefficient, self/leading); zero form returns (1, self)."""
        for v in self.c:
            if v:
                if _exact(v):
                    return v, self.scale(Fraction(1) / Fraction(v))
                return v, self.scale(1 / v)
        return 1, self

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self) -> str:
        return f"LinearForm{self.c}"


class QuadraticForm:
    """Six exact coefficients f11, f12, f13, f22, f23, f33 of
    f = f11 x1^2 + f12 x1 x2 + f13 x1 x3 + f22 x2^2 + f23 x2 x3 + f33 x3^2."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        table = {idx: Fraction(0) for idx in QUADRATIC_INDICES}
        for idx, value in dict(coeffs).items():
            key = tuple(sorted(idx))
            if key not in table:
                raise DegreeMismatchError(f"not a quadratic coefficient index: {idx}")
            table[key] = Fraction(value)
        self.coeffs = table

    @staticmethod
    def from_poly(p: Poly, family: str = "x") -> "QuadraticForm":
        split = coefficients_in(p, family)
        coeffs = {}
        for alpha, cof in split.items():
            if sum(alpha) != 2:
                raise DegreeMismatchError(
                    f"polynomial is not homogeneous of degree 2 in {family!r}"
                )
            idx = tuple(
                i + 1 for i, e in enumerate(alpha) for _ in range(e)
            )
            coeffs[idx] = cof.constant_value()
        return QuadraticForm(coeffs)

    def to_poly(self, family: str = "x") -> Poly:
        acc = Poly()
        for (i, j), v in self.coeffs.items():
            if v:
                acc = acc + const(v) * var(f"{family}{i}") * var(f"{family}{j}")
        return acc

    def __getitem__(self, idx) -> Fraction:
        return self.coeffs[tuple(sorted(idx))]

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticForm) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"QuadraticForm({self.to_poly().render()})"

    # pointwise helpers used by the g-form recursion

    def value_at(self, y: Sequence[Fraction]) -> Fraction:
        f = self.coeffs
        y1, y2, y3 = (Fraction(v) for v in y)
        return (
            f[(1, 1)] * y1 * y1 + f[(2, 2)] * y2 * y2 + f[(3, 3)] * y3 * y3
            + f[(1, 2)] * y1 * y2 + f[(1, 3)] * y1 * y3 + f[(2, 3)] * y2 * y3
        )

    def polar_line(self, y: Sequence[Fraction]) -> LinearForm:
        """f_xy: the coefficient of the mixed term in f(x + y)."""
        f = self.coeffs
        y1, y2, y3 = (Fraction(v) for v in y)
        return LinearForm(
            2 * f[(1, 1)] * y1 + f[(1, 2)] * y2 + f[(1, 3)] * y3,
            f[(1, 2)] * y1 + 2 * f[(2, 2)] * y2 + f[(2, 3)] * y3,
            f[(1, 3)] * y1 + f[(2, 3)] * y2 + 2 * f[(3, 3)] * y3,
        )


def square_of(line: LinearForm, scale: Scalar = 1) -> QuadraticForm:
    c1, c2, c3 = (Fraction(v) for v in line.c)
    s = Fraction(scale)
    return QuadraticForm({
        (1, 1): s * c1 * c1, (2, 2): s * c2 * c2, (3, 3): s * c3 * c3,
        (1, 2): 2 * s * c1 * c2, (1, 3): 2 * s * c1 * c3, (2, 3): 2 * s * c2 * c3,
    })


def _add(a: QuadraticForm, b: QuadraticForm, bscale: Fraction = Fraction(1)) -> QuadraticForm:
    return QuadraticForm({k: a.coeffs[k] + bscale * b.coeffs[k] for k in a.coeffs})


def quad_discriminant(q: QuadraticForm) -> Fraction:
    """J2[f, f, f], zero exactly when the form is reducible."""
    f = q.coeffs
    return 12 * (
        4 * f[(1, 1)] * f[(2, 2)] * f[(3, 3)]
        + f[(1, 2)] * f[(2, 3)] * f[(1, 3)]
        - f[(2, 3)] ** 2 * f[(1, 1)]
        - f[(1, 3)] ** 2 * f[(2, 2)]
        - f[(1, 2)] ** 2 * f[(3, 3)]
    )


def square_test_coefficients(q: QuadraticForm) -> tuple[Fraction, ...]:
    """The six coefficients of J2[f, f, u_x^2] in the order
    u1^2, u2^2, u3^2, u1u2, u2u3, u1u3; all zero iff the form is a square."""
    f = q.coeffs
    return (
        4 * (4 * f[(2, 2)] * f[(3, 3)] - f[(2, 3)] ** 2),
        4 * (4 * f[(1, 1)] * f[(3, 3)] - f[(1, 3)] ** 2),
        4 * (4 * f[(1, 1)] * f[(2, 2)] - f[(1, 2)] ** 2),
        8 * (f[(1, 3)] * f[(2, 3)] - 2 * f[(1, 2)] * f[(3, 3)]),
        8 * (f[(1, 2)] * f[(1, 3)] - 2 * f[(1, 1)] * f[(2, 3)]),
        8 * (f[(1, 2)] * f[(2, 3)] - 2 * f[(1, 3)] * f[(2, 2)]),
    )


def scan_points() -> Iterator[tuple[int, int, int]]:
    """Deterministic candidate points: unit vectors, then integer triples in
    growing boxes. Never yields the origin or a repeat."""
    units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    yield from units
    seen = set(units)
    values: list[int] = [0]
    for h in range(1, 64):
        values.extend((h, -h))
        for y in itertools.product(values, repeat=3):
            if y not in seen and any(y):
                seen.add(y)
                yield y


def _nonzero_value_point(q: QuadraticForm) -> tuple[tuple[int, int, int], Fraction]:
    for y in scan_points():
        v = q.value_at(y)
        if v:
            return y, v
    raise PreconditionError("no nonzero value found; form must be zero")


def extract_square(
    q: QuadraticForm, method: str = "auto"
) -> Optional[tuple[Fraction, LinearForm]]:
    """Write q as c0 * line^2, or return None when q is not a square.

    The returned line is monic in its first nonzero coefficient.  With
    f33 != 0 the membership test needs only three coefficient equations
    (the g-form at y = e3 lives in x1, x2 alone); otherwise all six
    coefficients of J2[q, q, u^2] are checked.  ``method`` forces a
    route: "shortcut" (requires f33 != 0), "full", or "auto".
    """
    if method not in ("auto", "full", "shortcut"):
        raise PreconditionError(f"unknown method {method!r}")
    f = q.coeffs
    if q.is_zero():
        return (Fraction(0), LinearForm(Fraction(1), Fraction(0), Fraction(0)))
    f33 = f[(3, 3)]
    use_shortcut = method == "shortcut" or (method == "auto" and f33 != 0)
    if use_shortcut:
        if f33 == 0:
            raise PreconditionError("shortcut test requires f33 != 0")
        if (
            4 * f[(1, 1)] * f33 - f[(1, 3)] ** 2 != 0
            or 2 * f[(1, 2)] * f33 - f[(1, 3)] * f[(2, 3)] != 0
            or 4 * f[(2, 2)] * f33 - f[(2, 3)] ** 2 != 0
        ):
            return None
        line = LinearForm(f[(1, 3)], f[(2, 3)], 2 * f33)
        scale = Fraction(1, 4) / f33
    else:
        if any(square_test_coefficients(q)):
            return None
        y, fyy = _nonzero_value_point(q)
        line = q.polar_line(y)
        scale = Fraction(1, 4) / fyy
    lead, monic = line.monic()
    return (scale * Fraction(lead) ** 2, monic)


@dataclass(frozen=True)
class SquaresDecomposition:
    """q = sum of scalar * line^2 over ``terms``; at most three summands."""

    terms: tuple[tuple[Fraction, LinearForm], ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def recombine(self) -> QuadraticForm:
        acc = QuadraticForm({})
        for c0, line in self.terms:
            acc = _add(acc, square_of(line), Fraction(c0))
        return acc


def sum_of_squares(q: QuadraticForm) -> SquaresDecomposition:
    """Exact decomposition into at most three squares of rational lines.

    The summand count is 0 for the zero form, 1 when J2[q,q,u^2] = 0,
    2 when only J2[q,q,q] = 0, else 3.  The polar square f_xy^2 leads,
    the terms inherited from the g-form recursion follow.
    """
    if q.is_zero():
        return SquaresDecomposition(())
    direct = extract_square(q)
    if direct is not None:
        return SquaresDecomposition((direct,))
    y, fyy = _nonzero_value_point(q)
    fxy = q.polar_line(y)
    # g = 4 f_yy f - f_xy^2 inherits one less obstruction than f
    g = _add(
        square_of(fxy, -1),
        QuadraticForm({k: 4 * fyy * v for k, v in q.coeffs.items()}),
    )
    inv4 = Fraction(1, 4) / fyy
    lead, fxy_monic = fxy.monic()
    head = (inv4 * Fraction(lead) ** 2, fxy_monic)
    if quad_discriminant(q) == 0:
        sq = extract_square(g)
        if sq is None:
            raise PreconditionError("g-form of a reducible form must be a square")
        c0, line = sq
        return SquaresDecomposition((head, (c0 * inv4, line)))
    tail = sum_of_squares(g)
    if len(tail) > 2:
        raise PreconditionError("g-form recursion must terminate in two squares")
    return SquaresDecomposition(
        (head,) + tuple((c0 * inv4, line) for c0, line in tail.terms)
    )


def factor_quadratic(
    q: QuadraticForm, tol: float = 1e-8
) -> Optional[tuple[LinearForm, LinearForm]]:
    """Split a reducible quadratic into two linear factors.

    Requires J2[q,q,q] = 0 (exact test; IrreducibleError otherwise).  The
    factors are exact whenever the two-squares scalars have rational square
    roots of the right signs; otherwise they carry complex coefficients.
    Returns None only for the zero form.  The second factor is monic and
    the product reproduces q (exactly, or within ``tol`` per coefficient
    on the complex path).
    """
    if q.is_zero():
        return None
    if quad_discriminant(q) != 0:
        raise IrreducibleError("quadratic discriminant is nonzero")
    dec = sum_of_squares(q)
    if len(dec) == 1:
        c0, line = dec.terms[0]
        return (line.scale(c0), line)
    (a0, a), (b0, b) = dec.terms
    # orient the pair so the exact branch fires whenever either order allows it
    def exact_pair(p0: Fraction, q0: Fraction) -> bool:
        return _exact(_sqrt(p0)) and _exact(_sqrt(-q0))
    if not exact_pair(a0, b0) and exact_pair(b0, a0):
        (a0, a), (b0, b) = (b0, b), (a0, a)
    alpha = _sqrt(a0)
    minus = _sqrt(-b0)  # i*sqrt(b0) is the rational -minus when b0 = -(r^2)
    if _exact(alpha) and _exact(minus):
        left = LinearForm(*(alpha * av + minus * bv for av, bv in zip(a.c, b.c)))
        right = LinearForm(*(alpha * av - minus * bv for av, bv in zip(a.c, b.c)))
    else:
        al = complex(alpha)
        be = 1j * cmath.sqrt(complex(b0))
        left = LinearForm(*(al * complex(av) + be * complex(bv) for av, bv in zip(a.c, b.c)))
        right = LinearForm(*(al * complex(av) - be * complex(bv) for av, bv in zip(a.c, b.c)))
    lead, right_monic = right.monic()
    return (left.scale(lead), right_monic)


def tangent_split(
    q: QuadraticForm, a: LinearForm
) -> Optional[tuple[LinearForm, Fraction, LinearForm]]:
    """Write q = a*b + c0*c^2 for the given line a, if possible.

    The obstruction is the single scalar J2[q, q, a^2]; when it vanishes the
    decomposition is rebuilt from the square of the auxiliary form
    a_x^2 f_yy - a_x a_y f_xy + a_y^2 f_xx at any point y with a(y) != 0.
    """
    if a.is_zero():
        raise PreconditionError("the tangent line must be nonzero")
    if not a.is_exact():
        raise PreconditionError("tangent_split needs exact line coefficients")
    # J2[q,q,a^2] = the square-test form evaluated at u = a
    cs = square_test_coefficients(q)
    a1, a2, a3 = (Fraction(v) for v in a.c)
    obstruction = (
        cs[0] * a1 * a1 + cs[1] * a2 * a2 + cs[2] * a3 * a3
        + cs[3] * a1 * a2 + cs[4] * a2 * a3 + cs[5] * a1 * a3
    )
    if obstruction != 0:
        return None
    y = next(p for p in scan_points() if a(*p) != 0)
    ay = Fraction(a(*y))
    fyy = q.value_at(y)
    fxy = q.polar_line(y)
    # g = a^2 f_yy - a a_y f_xy + a_y^2 f  is a square when the obstruction is zero
    cross = QuadraticForm({
        (1, 1): a.c[0] * fxy.c[0],
        (2, 2): a.c[1] * fxy.c[1],
        (3, 3): a.c[2] * fxy.c[2],
        (1, 2): a.c[0] * fxy.c[1] + a.c[1] * fxy.c[0],
        (1, 3): a.c[0] * fxy.c[2] + a.c[2] * fxy.c[0],
        (2, 3): a.c[1] * fxy.c[2] + a.c[2] * fxy.c[1],
    })
    g = _add(
        _add(square_of(a, fyy), cross, -ay),
        QuadraticForm({k: ay * ay * v for k, v in q.coeffs.items()}),
    )
    sq = extract_square(g)
    if sq is None:
        raise PreconditionError("auxiliary form must be a square when the obstruction vanishes")
    c0g, cline = sq
    b = LinearForm(*(
        (ay * fv - fyy * av) / (ay * ay) for av, fv in zip(a.c, fxy.c)
    ))
    return (b, c0g / (ay * ay), cline)
