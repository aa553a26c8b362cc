"""Constructive factorization of completely reducible ternary cubics.

Two routes, selected by the Hessian.  When the Hessian is nonzero the
three lines are pairwise independent and the tangent-line recipe applies:
pick u with F_6u(u) != 0, restrict f to the line dual to u, factor the
resulting binary cubic, lift each binary factor to a tangent line, and
recover f = -(1/F_6u(u)) A_x B_x C_x.  When the Hessian vanishes every
linear factor passes through one common point, found exactly as the null
space of f_xxz = 0; in coordinates dual to that apex the problem is again
a binary cubic, and the lift back is linear.

Only the binary root extraction is floating point; everything before it
is exact rational arithmetic, and results that happen to be rational are
re-verified exactly before being reported as exact.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy

from .calculus import multi_polar
from .classify import apex
from .concomitants import CoeffValue, CubicForm, as_cubic, f6u, gamma, hessian, theta
from .errors import (
    CrossCheckError,
    DegenerateTangentError,
    DegreeMismatchError,
    DualVanishesError,
    NotApplicableError,
    NotReducibleError,
    NotSingularError,
    PreconditionError,
    ZeroBinaryCubicError,
    ZeroFormError,
    ZeroLineError,
)
from .poly import CUBIC_INDICES, Poly, coefficients_in, const, var
from .quadratics import LinearForm, QuadraticForm, factor_quadratic, scan_points

Scalar = Union[int, Fraction, float, complex]

TOL_ROOT = 1e-10
TOL_FACTOR = 1e-8

# leeway granted when deciding whether a float deserves an exact re-check;
# the re-check itself is exact, so a wrong guess here only costs time
_SNAP = 1e-6

# a float coefficient this small relative to the largest one is root noise,
# not a leading coefficient; normalizing by it would blow the factor up
_LEAD_EPS = 1e-9


def _exact(v) -> bool:
    return isinstance(v, (int, Fraction))


def _cross(a: Sequence, b: Sequence) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


class FactorMethod(Enum):
    GENERIC = "generic"
    SINGULAR = "singular"
    TWO_CUBES = "two-cubes"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class BinaryCubic:
    """Restriction of a cubic to the plane spanned by y and z:
    f(X1 y + X2 z) = f_yyy X1^3 + f_yyz X1^2 X2 + f_yzz X1 X2^2 + f_zzz X2^3.

    Coefficients are exact rationals for numeric y, z and polynomials when
    the restriction is taken symbolically.
    """

    f_yyy: CoeffValue
    f_yyz: CoeffValue
    f_yzz: CoeffValue
    f_zzz: CoeffValue

    def coefficients(self) -> tuple[CoeffValue, CoeffValue, CoeffValue, CoeffValue]:
        return (self.f_yyy, self.f_yyz, self.f_yzz, self.f_zzz)

    def is_zero(self) -> bool:
        return all(
            c.is_zero() if isinstance(c, Poly) else c == 0 for c in self.coefficients()
        )

    def discriminant(self) -> CoeffValue:
        """Vanishes exactly when the binary cubic has a repeated root."""
        a, b, c, d = self.coefficients()
        return (
            b * b * c * c
            - 4 * a * c * c * c
            - 4 * b * b * b * d
            + 18 * a * b * c * d
            - 27 * a * a * d * d
        )

    def __call__(self, X1: Scalar, X2: Scalar) -> Scalar:
        a, b, c, d = self.coefficients()
        return a * X1**3 + b * X1**2 * X2 + c * X1 * X2**2 + d * X2**3

    def to_poly(self) -> Poly:
        acc = Poly()
        u, v = var("X1"), var("X2")
        for coeff, mono in zip(
            self.coefficients(), (u**3, u**2 * v, u * v**2, v**3)
        ):
            if isinstance(coeff, Poly):
                acc = acc + coeff * mono
            elif coeff:
                acc = acc + const(Fraction(coeff)) * mono
        return acc


@dataclass(frozen=True)
class Factorization:
    """f = scalar * factors[0] * factors[1] * factors[2].

    Factors are monic in their first nonzero coefficient and sorted in
    descending lexicographic order of their coefficient tuples (rounded to
    12 digits), so equal inputs produce identical output.  ``residual`` is
    the absolute max-norm of the coefficient vector of the recombination
    error; exact results have residual 0 and rational data throughout.
    """

    scalar: Scalar
    factors: tuple[LinearForm, LinearForm, LinearForm]
    residual: float
    method: FactorMethod

    @property
    def is_exact(self) -> bool:
        return _exact(self.scalar) and all(f.is_exact() for f in self.factors)

    def recombine(self) -> dict[tuple[int, int, int], Scalar]:
        return _expand_lines(self.scalar, self.factors)


def _expand_lines(scalar: Scalar, lines) -> dict[tuple[int, int, int], Scalar]:
    """Coefficient table of scalar * product of three linear forms."""
    zero = Fraction(0) if _exact(scalar) and all(f.is_exact() for f in lines) else 0.0
    table = {idx: zero for idx in CUBIC_INDICES}
    a, b, c = lines
    for i, j, k in itertools.product(range(3), repeat=3):
        key = tuple(sorted((i + 1, j + 1, k + 1)))
        table[key] = table[key] + scalar * a.c[i] * b.c[j] * c.c[k]
    return table


def _max_norm(cf: CubicForm) -> float:
    return max(abs(float(v)) for v in cf.coeffs.values())


def _residual(scalar: Scalar, lines, cf: CubicForm) -> float:
    table = _expand_lines(scalar, lines)
    return max(
        abs(complex(table[idx]) - complex(cf.coeffs[idx])) for idx in CUBIC_INDICES
    )


def _rational_guess(v: Scalar) -> Optional[Fraction]:
    z = complex(v)
    if abs(z.imag) > _SNAP:
        return None
    guess = Fraction(z.real).limit_denominator(10**8)
    if abs(float(guess) - z.real) > _SNAP:
        return None
    return guess


def _snap_exact(
    scalar: Scalar, lines
) -> Optional[tuple[Fraction, tuple[LinearForm, LinearForm, LinearForm]]]:
    """Rational candidates for a float factorization, or None."""
    snapped = []
    for line in lines:
        cs = []
        for v in line.c:
            g = v if _exact(v) else _rational_guess(v)
            if g is None:
                return None
            cs.append(Fraction(g))
        snapped.append(LinearForm(*cs))
    s = scalar if _exact(scalar) else _rational_guess(scalar)
    if s is None:
        return None
    return Fraction(s), tuple(snapped)


def _normalize_line(line: LinearForm) -> tuple[Scalar, LinearForm]:
    """Monic form with a noise-aware choice of the leading coefficient.

    Exact lines divide by their first nonzero coefficient.  Inexact lines
    treat anything below _LEAD_EPS of the largest magnitude as zero, so a
    root-noise 1e-16 never becomes the divisor."""
    if line.is_exact():
        return line.monic()
    mags = [abs(complex(v)) for v in line.c]
    cmax = max(mags)
    idx = next(i for i in range(3) if mags[i] > _LEAD_EPS * cmax)
    lead = line.c[idx]
    cs = [0.0 if i < idx else line.c[i] / lead for i in range(3)]
    cs[idx] = 1.0
    return lead, LinearForm(*cs)


def _finish(
    scalar: Scalar, lines, cf: CubicForm, method: FactorMethod, tol: float
) -> Factorization:
    """Normalize, order, exactness-check, and residual-gate a raw triple."""
    norm = []
    for line in lines:
        if line.is_zero(tol=0.0 if line.is_exact() else TOL_ROOT):
            raise DegenerateTangentError("a factor came out identically zero")
        lead, monic = _normalize_line(line)
        scalar = scalar * lead
        norm.append(monic)

    # a nearby rational factorization, if one exists, is the true answer;
    # accept it only on exact recombination
    snapped = _snap_exact(scalar, norm)
    if snapped is not None:
        s, cand = snapped
        table = _expand_lines(s, cand)
        if all(table[idx] == cf.coeffs[idx] for idx in CUBIC_INDICES):
            scalar, norm = s, list(cand)

    def key(line: LinearForm):
        return tuple(
            (round(complex(v).real, 12), round(complex(v).imag, 12)) for v in line.c
        )

    norm.sort(key=key, reverse=True)
    residual = _residual(scalar, norm, cf)
    bound = tol * _max_norm(cf)
    if residual > bound:
        raise CrossCheckError(
            f"recombination residual {residual:.3e} exceeds {bound:.3e}"
        )
    if _exact(scalar) and all(f.is_exact() for f in norm):
        residual = 0.0
    return Factorization(scalar, (norm[0], norm[1], norm[2]), residual, method)


# ---------------------------------------------------------------------------
# choosing the auxiliary point u


def _u_candidates():
    """Integer triples in deterministic order: shells of growing max-abs,
    each shell sorted by componentwise absolute values with nonnegative
    entries preceding negative ones."""
    for n in range(1, 8):
        shell = [
            t
            for t in itertools.product(range(-n, n + 1), repeat=3)
            if max(abs(c) for c in t) == n
        ]
        shell.sort(key=lambda t: (tuple(abs(c) for c in t), tuple(c < 0 for c in t)))
        yield from shell


def _first_u(fp: Poly) -> tuple[int, int, int]:
    for u in _u_candidates():
        value = fp.eval_exact({f"u{i + 1}": u[i] for i in range(3)})
        if value:
            return u
    raise CrossCheckError("a nonzero sextic must be nonzero on the scanned grid")


def choose_u(f) -> tuple[int, int, int]:
    """First integer triple (in the documented scan order) where the
    degree-six dual F_6u is nonzero; the scan starts at (0, 0, 1)."""
    cf = as_cubic(f)
    fp = f6u(cf)
    if fp.is_zero():
        raise DualVanishesError("F_6u vanishes identically; no admissible u")
    return _first_u(fp)


def line_points(u: Sequence[Scalar]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Rational points y, z with cross(y, z) = u exactly.

    w is the standard basis vector at the first smallest-|component| index
    of u; then y = w x u is nonzero and orthogonal to u, and
    z = (u x y)/(y.y) completes the pair since y x (u x y) = u (y.y).
    """
    uu = tuple(Fraction(v) for v in u)
    if not any(uu):
        raise ZeroLineError("u must be nonzero")
    m = min(range(3), key=lambda i: abs(uu[i]))
    w = tuple(Fraction(int(i == m)) for i in range(3))
    y = _cross(w, uu)
    yy = sum(v * v for v in y)
    z = tuple(v / yy for v in _cross(uu, y))
    if _cross(y, z) != uu:
        raise CrossCheckError("line_points construction must reproduce u")
    return y, z


# ---------------------------------------------------------------------------
# restriction to a line and binary factorization


def restrict_to_line(f, y: Sequence, z: Sequence, verify: bool = True) -> BinaryCubic:
    """Binary cubic f(X1 y + X2 z) in the coordinates X1, X2.

    Entries of y and z may be rationals or polynomials; with rational data
    the binary discriminant is checked exactly against F_6u at u = y x z,
    which ties the restriction to the dual sextic.
    """
    cf = as_cubic(f)
    fp = cf.to_poly()
    X1, X2 = var("X1"), var("X2")

    def lift(v) -> Poly:
        return v if isinstance(v, Poly) else const(Fraction(v))

    images = {
        f"x{i + 1}": X1 * lift(y[i]) + X2 * lift(z[i]) for i in range(3)
    }
    restricted = fp.subs(images, strict=True)
    split = coefficients_in(restricted, "X")
    table = {}
    numeric = True
    for alpha, slot in (((3, 0, 0), 0), ((2, 1, 0), 1), ((1, 2, 0), 2), ((0, 3, 0), 3)):
        cof = split.get(alpha, Poly())
        try:
            table[slot] = cof.constant_value()
        except DegreeMismatchError:
            table[slot] = cof
            numeric = False
    b = BinaryCubic(table[0], table[1], table[2], table[3])
    if verify and numeric and all(_exact(v) for v in itertools.chain(y, z)):
        u = _cross(tuple(Fraction(v) for v in y), tuple(Fraction(v) for v in z))
        fu = f6u(cf).eval_exact({f"u{i + 1}": u[i] for i in range(3)})
        if b.discriminant() != fu:
            raise CrossCheckError(
                "binary discriminant must equal the dual sextic at y x z"
            )
    return b


def _cardano_roots(c3: float, c2: float, c1: float, c0: float) -> list[complex]:
    """Closed-form roots of c3 t^3 + c2 t^2 + c1 t + c0, c3 != 0."""
    b, c, d = c2 / c3, c1 / c3, c0 / c3
    shift = b / 3
    p = c - b * b / 3
    q = 2 * b**3 / 27 - b * c / 3 + d
    if p == 0 and q == 0:
        return [-shift] * 3
    disc = cmath.sqrt(complex((q / 2) ** 2 + (p / 3) ** 3))
    u3 = -q / 2 + disc
    if abs(u3) < abs(-q / 2 - disc):
        u3 = -q / 2 - disc
    u = u3 ** (1 / 3)
    roots = []
    omega = complex(-0.5, 3**0.5 / 2)
    for k in range(3):
        uk = u * omega**k
        vk = -p / (3 * uk) if uk else 0
        roots.append(uk + vk - shift)
    return roots


def factor_binary_cubic(
    b: BinaryCubic, method: str = "eigen"
) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
    """Split b into three binary linear factors (Ai1 X1 + Ai2 X2).

    The product of the three factors reproduces b; the first factor
    carries the leading coefficient.  Vanishing leading coefficients each
    contribute an exact X2 factor before the root solve.  ``method`` is
    "eigen" (companion-matrix eigenvalues) or "cardano".
    """
    if method not in ("eigen", "cardano"):
        raise PreconditionError(f"unknown root method {method!r}")
    coeffs = list(b.coefficients())
    if any(isinstance(v, Poly) for v in coeffs):
        raise PreconditionError("this operation needs numeric coefficients")
    if b.is_zero():
        raise ZeroBinaryCubicError("cannot factor the zero binary cubic")
    factors: list[tuple[Scalar, Scalar]] = []
    while coeffs and not coeffs[0]:
        factors.append((Fraction(0), Fraction(1)))
        coeffs.pop(0)
    lead = coeffs[0]
    if len(coeffs) == 1:
        factors[0] = (Fraction(0), Fraction(lead))
        return (factors[0], factors[1], factors[2])
    if len(coeffs) == 2:
        # linear: lead*t + coeffs[1)
        factors.append((Fraction(lead), Fraction(coeffs[1])))
        return (factors[0], factors[1], factors[2])
    floats = [float(v) for v in coeffs]
    if len(coeffs) == 3:
        roots = list(numpy.roots(floats)) if method == "eigen" else None
        if roots is None:
            a2, a1, a0 = floats
            disc = cmath.sqrt(a1 * a1 - 4 * a2 * a0)
            roots = [(-a1 + disc) / (2 * a2), (-a1 - disc) / (2 * a2)]
    else:
        if method == "eigen":
            roots = list(numpy.roots(floats))
        else:
            roots = _cardano_roots(*floats)
    first = True
    for t in roots:
        t = complex(t)
        if t.imag == 0:
            t = t.real
        if first:
            factors.append((lead if _exact(lead) else complex(lead), -lead * t))
            first = False
        else:
            factors.append((1, -t))
    return (factors[0], factors[1], factors[2])


# ---------------------------------------------------------------------------
# tangent lines and the generic recipe


def _polar_lines(fp: Poly, y: Sequence, z: Sequence):
    """Coefficient triples of the three mixed polars f_xyy, f_xyz, f_xzz
    at numeric y, z (each a linear form in x)."""
    binding = {f"y{i + 1}": Fraction(y[i]) for i in range(3)}
    binding.update({f"z{i + 1}": Fraction(z[i]) for i in range(3)})
    out = []
    for pattern in ({"y": 2}, {"y": 1, "z": 1}, {"z": 2}):
        p = multi_polar(fp, pattern).subs(binding, strict=True)
        split = coefficients_in(p, "x")
        triple = [Fraction(0)] * 3
        for alpha, cof in split.items():
            triple[alpha.index(1)] = cof.constant_value()
        out.append(tuple(triple))
    return out


def _tangent(polars, A1: Scalar, A2: Scalar) -> LinearForm:
    pyy, pyz, pzz = polars
    cs = [
        pyy[i] * A2 * A2 - pyz[i] * A1 * A2 + pzz[i] * A1 * A1 for i in range(3)
    ]
    line = LinearForm(*cs)
    if line.is_zero(tol=0.0 if line.is_exact() else TOL_ROOT):
        raise DegenerateTangentError("tangent line vanished; intersection is repeated")
    return line


def tangent_line(f, y: Sequence, z: Sequence, A1: Scalar, A2: Scalar) -> LinearForm:
    """Lift of the binary factor A1 X1 + A2 X2 on the line through y, z:
    A_x = f_xyy A2^2 - f_xyz A1 A2 + f_xzz A1^2, a tangent of f."""
    fp = as_cubic(f).to_poly()
    return _tangent(_polar_lines(fp, y, z), A1, A2)


def factor_generic(
    f,
    u: Optional[Sequence[int]] = None,
    tol: float = TOL_FACTOR,
    method: str = "eigen",
) -> Factorization:
    """Tangent-line factorization f = -(1/F_6u(u)) A_x B_x C_x.

    Requires Gamma = 0 (complete reducibility) and F_6u not identically
    zero; both violations raise PreconditionError.  A caller-supplied u is
    honored after checking F_6u(u) != 0 exactly.
    """
    cf = as_cubic(f)
    if not gamma(cf).is_zero():
        raise PreconditionError("factor_generic needs a completely reducible cubic")
    fp6 = f6u(cf)
    if fp6.is_zero():
        raise PreconditionError("the dual sextic vanishes identically; use the singular path")
    if u is None:
        u = _first_u(fp6)
    fu = fp6.eval_exact({f"u{i + 1}": u[i] for i in range(3)})
    if not fu:
        raise PreconditionError(f"F_6u vanishes at u = {tuple(u)}")
    y, z = line_points(u)
    binary = restrict_to_line(cf, y, z)
    pairs = factor_binary_cubic(binary, method=method)
    polars = _polar_lines(cf.to_poly(), y, z)
    lines = [_tangent(polars, a1, a2) for a1, a2 in pairs]
    return _finish(-1 / fu, lines, cf, FactorMethod.GENERIC, tol)


# ---------------------------------------------------------------------------
# the singular (vanishing Hessian) path


def factor_singular(f, tol: float = TOL_FACTOR, method: str = "eigen") -> Factorization:
    """Factorization of a cubic whose linear factors share a common point.

    The apex z is the exact null space of f_xxz = 0 (nonexistent when the
    Hessian is nonzero: NotSingularError).  With a, b two independent
    linear forms vanishing at z and p, q dual points (a_p = 1, b_p = 0,
    a_q = 0, b_q = 1), f(x) equals the restricted binary cubic evaluated
    at (a_x, b_x), so binary factors lift linearly.  Repeated factors are
    fine here.
    """
    cf = as_cubic(f)
    z = apex(cf)
    if z is None:
        raise NotSingularError("no apex: the Hessian of f is nonzero")
    m = next(i for i in range(3) if z[i])
    i, j = (k for k in range(3) if k != m)
    zm = Fraction(z[m])
    a = [Fraction(0)] * 3
    a[i], a[m] = zm, -Fraction(z[i])
    b = [Fraction(0)] * 3
    b[j], b[m] = zm, -Fraction(z[j])
    p = tuple(Fraction(int(k == i)) / zm for k in range(3))
    q = tuple(Fraction(int(k == j)) / zm for k in range(3))
    binary = restrict_to_line(cf, p, q, verify=False)
    pairs = factor_binary_cubic(binary, method=method)
    lines = [
        LinearForm(*(a1 * av + a2 * bv for av, bv in zip(a, b))) for a1, a2 in pairs
    ]
    return _finish(1, lines, cf, FactorMethod.SINGULAR, tol)


# ---------------------------------------------------------------------------
# sums of two cubes


def two_cubes(
    f, tol: float = TOL_FACTOR
) -> Optional[tuple[Scalar, LinearForm, Scalar, LinearForm]]:
    """Write f = a0 a_x^3 + b0 b_x^3 with independent lines a, b.

    Exists exactly when the Hessian vanishes but the dual sextic does not;
    other inputs raise NotApplicableError.  theta at any u off the lines
    is a multiple of a_x b_x, so a quadratic split recovers the two lines
    and a linear solve recovers the weights.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        raise ZeroFormError("the zero form has no two-cube decomposition")
    if not hessian(cf).is_zero():
        raise NotApplicableError("two_cubes requires a vanishing Hessian")
    if f6u(cf).is_zero():
        raise NotApplicableError("two_cubes requires a nonzero dual sextic")
    th = theta(cf)
    for point in scan_points():
        quad = th.subs({f"u{k + 1}": point[k] for k in range(3)}, strict=True)
        if quad.is_zero():
            continue
        split = factor_quadratic(QuadraticForm.from_poly(quad))
        if split is None:
            continue
        left, right = split
        _, lm = _normalize_line(left)
        _, rm = _normalize_line(right)
        weights = _solve_two_weights(cf, lm, rm, tol)
        if weights is None:
            continue
        a0, b0 = weights
        return a0, lm, b0, rm
    return None


def _cube_table(line: LinearForm) -> dict[tuple[int, int, int], Scalar]:
    zero = Fraction(0) if line.is_exact() else 0.0
    table = {idx: zero for idx in CUBIC_INDICES}
    for i, j, k in itertools.product(range(3), repeat=3):
        key = tuple(sorted((i + 1, j + 1, k + 1)))
        table[key] = table[key] + line.c[i] * line.c[j] * line.c[k]
    return table


def _solve_two_weights(
    cf: CubicForm, a: LinearForm, b: LinearForm, tol: float
) -> Optional[tuple[Scalar, Scalar]]:
    """Weights (a0, b0) with a0 a^3 + b0 b^3 = f, or None on mismatch."""
    ta, tb = _cube_table(a), _cube_table(b)
    rows = [
        (complex(ta[idx]), complex(tb[idx]), complex(cf.coeffs[idx]))
        for idx in CUBIC_INDICES
    ]
    best = max(
        itertools.combinations(rows, 2),
        key=lambda pair: abs(
            pair[0][0] * pair[1][1] - pair[0][1] * pair[1][0]
        ),
    )
    (a1, b1, f1), (a2, b2, f2) = best
    det = a1 * b2 - a2 * b1
    if abs(det) < 1e-14:
        return None
    a0 = (f1 * b2 - f2 * b1) / det
    b0 = (a1 * f2 - a2 * f1) / det
    if a.is_exact() and b.is_exact():
        fa = _rational_guess(a0)
        fb = _rational_guess(b0)
        if fa is not None and fb is not None:
            if all(
                fa * ta[idx] + fb * tb[idx] == cf.coeffs[idx] for idx in CUBIC_INDICES
            ):
                return fa, fb
    norm = _max_norm(cf)
    err = max(
        abs(a0 * ra + b0 * rb - rf) for ra, rb, rf in rows
    )
    if err > tol * max(norm, 1.0):
        return None
    if a0.imag == 0:
        a0 = a0.real
    if b0.imag == 0:
        b0 = b0.real
    return a0, b0


# ---------------------------------------------------------------------------
# dispatcher


def factor_cubic(f, tol: float = TOL_FACTOR, method: str = "eigen") -> Factorization:
    """Factor a completely reducible cubic by the appropriate route.

    Nonzero Hessian goes to the tangent-line recipe, vanishing Hessian to
    the apex path; forms that are not completely reducible raise
    NotReducibleError and the zero form raises ZeroFormError.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        raise ZeroFormError("cannot factor the zero form")
    if not gamma(cf).is_zero():
        raise NotReducibleError("the form is not a product of linear forms")
    if hessian(cf).is_zero():
        return factor_singular(cf, tol=tol, method=method)
    return factor_generic(cf, tol=tol, method=method)
