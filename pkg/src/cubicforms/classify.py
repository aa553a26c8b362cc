"""Decision procedures for the complete reducibility of ternary cubics.

A cubic form factors into three linear forms exactly when its Hessian is a
scalar multiple of the form itself.  The concomitant chain refines the
reducible forms into a strict hierarchy:

    theta = 0    perfect cubes                 a0 a_x^3
    F_6u  = 0    a line times a squared line   a_x b_x^2
    Delta = 0    three concurrent lines        a_x b_x c_x, [abc] = 0
    Gamma = 0    completely reducible          a_x b_x c_x

``classify`` walks the chain from the most special class outward and stops
at the first match, attaching a constructive witness where one exists: the
cube root, the common point of the concurrent lines, or the multiplier
lambda with Delta = lambda f.

Beyond the chain, scalar identities among Delta, S, T, S_uuu, T_uuu, F_6u
and theta characterize reducibility outright, or do so whenever S != 0.
``is_completely_reducible`` exposes each as a named criterion, and the
remaining operations cover the classical low-coefficient tests: the
coefficient conditions in Delta and theta behind ``glenn_test``, the five
(or three) vanishing coefficients of Delta333 f - f333 Delta behind
``brill_test``, and the corner-coefficient normalization that reduces an
arbitrary cubic with f333 != 0 to the three-equation Brioschi system.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .calculus import incidence, multi_polar, transvectant
from .concomitants import (
    CoeffValue,
    CubicForm,
    as_cubic,
    aronhold_set,
    f6u,
    gamma,
    hessian,
    theta,
)
from .errors import (
    CriterionInapplicableError,
    CrossCheckError,
    DegreeMismatchError,
    InapplicableError,
    PreconditionError,
    ZeroFormError,
)
from .poly import (
    CUBIC_INDICES,
    Poly,
    _compositions,
    coefficients_in,
    const,
    divide_exact,
    monomial_coefficient,
    var,
)
from .quadratics import LinearForm, scan_points


def _vanishes(v: CoeffValue) -> bool:
    return v.is_zero() if isinstance(v, Poly) else v == 0


def _coeff(cf: CubicForm, idx: Sequence[int]) -> Poly:
    v = cf.coeffs[tuple(sorted(idx))]
    return v if isinstance(v, Poly) else const(v)


def _numeric_coeff(cf: CubicForm, idx: Sequence[int]) -> Fraction:
    v = cf.coeffs[tuple(sorted(idx))]
    if isinstance(v, Poly):
        try:
            v = v.constant_value()
        except DegreeMismatchError:
            raise PreconditionError(
                "this operation needs numeric coefficients"
            ) from None
    return Fraction(v)


def _is_numeric(cf: CubicForm) -> bool:
    for v in cf.coeffs.values():
        if isinstance(v, Poly):
            try:
                v.constant_value()
            except DegreeMismatchError:
                return False
    return True


# -- exact linear algebra ---------------------------------------------------


def _nullspace(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Kernel basis of a rational matrix by Gauss-Jordan elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    free = [c for c in range(ncols) if c not in pivot_cols]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_i, pc in enumerate(pivot_cols):
            vec[pc] = -m[row_i][fc]
        basis.append(tuple(vec))
    return basis


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive leading
    entry."""
    mult = lcm(*(v.denominator for v in vec))
    ints = [int(v * mult) for v in vec]
    g = gcd(*ints)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


# -- the classification hierarchy -------------------------------------------


@unique
class Kind(Enum):
    ZERO = "zero"
    PERFECT_CUBE = "perfect-cube"
    LINE_TIMES_SQUARE = "line-times-square"
    DEPENDENT_PRODUCT = "dependent-product"
    COMPLETELY_REDUCIBLE_GENERIC = "completely-reducible-generic"
    NOT_COMPLETELY_REDUCIBLE = "not-completely-reducible"


@dataclass(frozen=True)
class Classification:
    """Outcome of the hierarchy walk.

    ``kind`` is the most specific class that holds; ``criteria_fired``
    records every test evaluated on the way, in order.  Witnesses are
    populated when the input has numeric coefficients: ``cube_root`` is
    (a0, a_x) with f = a0 a_x^3, ``apex`` is the common point of the factor
    lines of a Hessian-zero form, and ``hessian_multiple`` is the lambda
    with Delta = lambda f (zero throughout the Hessian-zero classes).
    """

    kind: Kind
    criteria_fired: tuple[tuple[str, bool], ...]
    cube_root: Optional[tuple[Fraction, LinearForm]] = None
    apex: Optional[tuple[int, int, int]] = None
    hessian_multiple: Optional[CoeffValue] = None

    @property
    def completely_reducible(self) -> bool:
        return self.kind is not Kind.NOT_COMPLETELY_REDUCIBLE


def apex(f: "CubicForm | Poly") -> Optional[tuple[int, int, int]]:
    """The common point z of the factor lines of a Hessian-zero cubic.

    Solves f_xxz = 0 exactly: six linear equations, one per quadratic
    monomial, in z1, z2, z3.  Returns a primitive integer point, or None
    when only z = 0 works (exactly the Delta != 0 forms).  For a perfect
    cube the solution plane is two dimensional and one basis point is
    returned.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        raise ZeroFormError("the zero form has no apex")
    if not _is_numeric(cf):
        raise PreconditionError("apex needs numeric coefficients")
    fp = cf.to_poly()
    partials = [fp.derive(f"x{i}") for i in (1, 2, 3)]
    rows = []
    for alpha in _compositions(2):
        row = []
        for p in partials:
            cof = coefficients_in(p, "x").get(alpha)
            row.append(Fraction(0) if cof is None else Fraction(cof.constant_value()))
        rows.append(row)
    kernel = _nullspace(rows)
    if not kernel:
        return None
    return _primitive(kernel[0])  # type: ignore[return-value]


def cube_root(f: "CubicForm | Poly") -> tuple[Fraction, LinearForm]:
    """(a0, a_x) with f = a0 a_x^3 and a_x monic; requires theta = 0.

    The root is read off at any point y with f(y) != 0, where
    f = f_xyy^3 / (27 f(y)^2); the first such y in scan order is used.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        raise ZeroFormError("the zero form is not a cube")
    if not _is_numeric(cf):
        raise PreconditionError("cube_root needs numeric coefficients")
    if not theta(cf).is_zero():
        raise PreconditionError("not a perfect cube: theta is nonzero")
    fp = cf.to_poly()
    fxyy = multi_polar(fp, {"y": 2})
    for y in scan_points():
        point = {"x1": y[0], "x2": y[1], "x3": y[2]}
        fy = fp.eval_exact(point)
        if fy:
            break
    line_poly = fxyy.subs(
        {"y1": y[0], "y2": y[1], "y3": y[2]}, strict=True
    )
    lead, line = LinearForm.from_poly(line_poly).monic()
    a0 = Fraction(lead) ** 3 / (27 * fy ** 2)
    if line.to_poly() ** 3 * a0 != fp:
        raise CrossCheckError("cube root reconstruction does not reproduce the form")
    return (a0, line)


def hessian_ratio(f: "CubicForm | Poly") -> Optional[CoeffValue]:
    """lambda with Delta = lambda f, or None when the Hessian is not a
    multiple of the form.

    Proportionality is decided by cross-multiplication over all ten
    coefficient pairs, so zero coefficients need no special cases; lambda is
    then read off the first nonzero coefficient of f.  For symbolic inputs
    the multiplier comes out of exact polynomial division.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        raise ZeroFormError("the zero form has no Hessian multiplier")
    fp = cf.to_poly()
    delta = hessian(cf)
    fc = coefficients_in(fp, "x")
    dc = coefficients_in(delta, "x")
    zero = Poly()
    alphas = [
        (idx.count(1), idx.count(2), idx.count(3)) for idx in CUBIC_INDICES
    ]
    fv = [fc.get(a, zero) for a in alphas]
    dv = [dc.get(a, zero) for a in alphas]
    n = len(alphas)
    for i in range(n):
        for j in range(i + 1, n):
            if fv[i] * dv[j] != fv[j] * dv[i]:
                return None
    num, den = next((dv[i], fv[i]) for i in range(n) if not fv[i].is_zero())
    try:
        return Fraction(num.constant_value()) / Fraction(den.constant_value())
    except DegreeMismatchError:
        ratio = divide_exact(num, den)
        if ratio is None:
            raise PreconditionError(
                "the Hessian multiplier is not polynomial in the coefficients"
            ) from None
        return ratio


def classify(f: "CubicForm | Poly") -> Classification:
    """Walk the hierarchy theta -> F_6u -> Delta -> Gamma and return the most
    specific class, with witnesses.

    Concomitants are computed lazily in that order, so the cheap degenerate
    classes never touch Gamma.  The equivalence S_uuu = 0 iff Delta = 0 is
    re-checked whenever the Hessian is evaluated and recorded alongside the
    hierarchy tests.
    """
    cf = as_cubic(f)
    if cf.is_zero():
        return Classification(Kind.ZERO, ())
    numeric = _is_numeric(cf)
    fired: list[tuple[str, bool]] = []

    th = theta(cf)
    fired.append(("theta-vanishes", th.is_zero()))
    if th.is_zero():
        return Classification(
            Kind.PERFECT_CUBE,
            tuple(fired),
            cube_root=cube_root(cf) if numeric else None,
            hessian_multiple=Fraction(0),
        )

    f6 = f6u(cf)
    fired.append(("f6u-vanishes", f6.is_zero()))
    if f6.is_zero():
        return Classification(
            Kind.LINE_TIMES_SQUARE,
            tuple(fired),
            apex=apex(cf) if numeric else None,
            hessian_multiple=Fraction(0),
        )

    delta = hessian(cf)
    delta_zero = delta.is_zero()
    fired.append(("hessian-vanishes", delta_zero))
    s_uuu = aronhold_set(cf)[0]
    if s_uuu.is_zero() != delta_zero:
        raise CrossCheckError("S_uuu = 0 and Delta = 0 must agree")
    fired.append(("hessian-suuu-agreement", True))
    if delta_zero:
        return Classification(
            Kind.DEPENDENT_PRODUCT,
            tuple(fired),
            apex=apex(cf) if numeric else None,
            hessian_multiple=Fraction(0),
        )

    gm = gamma(cf)
    fired.append(("gamma-vanishes", gm.is_zero()))
    if gm.is_zero():
        lam = hessian_ratio(cf)
        if lam is None:
            raise CrossCheckError(
                "Gamma = 0 forces the Hessian to be a multiple of the form"
            )
        return Classification(
            Kind.COMPLETELY_REDUCIBLE_GENERIC, tuple(fired), hessian_multiple=lam
        )
    return Classification(Kind.NOT_COMPLETELY_REDUCIBLE, tuple(fired))


# -- named reducibility criteria ---------------------------------------------


@unique
class Criterion(Enum):
    """Tests equivalent to complete reducibility.

    The first five hold unconditionally; the last four are equivalences only
    when S != 0 and raise CriterionInapplicableError otherwise.  The S = 0
    escape is real: a form with S = T = 0 satisfies every gated equation
    without being reducible.
    """

    GAMMA = "gamma"
    PI = "pi"
    HESSIAN_PROPORTIONAL = "hessian-proportional"
    DELTA_SQ_MINUS_S_F_SQ = "delta-squared-minus-s-f-squared"
    F6U_DELTA_MINUS_SUUU_SQ_F = "f6u-delta-minus-suuu-squared-f"
    S_DELTA_MINUS_T_F = "s-delta-minus-t-f"
    T_DELTA_MINUS_S_SQ_F = "t-delta-minus-s-squared-f"
    S_F6U_MINUS_SUUU_TUUU = "s-f6u-minus-suuu-tuuu"
    HESSIAN_THETA_MINUS_4S_THETA = "hessian-theta-minus-4s-theta"


GATED_CRITERIA = frozenset(
    {
        Criterion.S_DELTA_MINUS_T_F,
        Criterion.T_DELTA_MINUS_S_SQ_F,
        Criterion.S_F6U_MINUS_SUUU_TUUU,
        Criterion.HESSIAN_THETA_MINUS_4S_THETA,
    }
)


def is_completely_reducible(
    f: "CubicForm | Poly", criterion: Criterion = Criterion.GAMMA
) -> bool:
    """Decide complete reducibility by the named criterion.

    All vanishing tests are exact polynomial identities over every
    coefficient; nothing is sampled.  Ungated criteria agree pairwise on
    every input, gated ones require S != 0.
    """
    cf = as_cubic(f)
    if cf.is_zero() and criterion not in GATED_CRITERIA:
        return True
    if criterion is Criterion.GAMMA:
        return gamma(cf).is_zero()
    if criterion is Criterion.PI:
        return aronhold_set(cf)[4].is_zero()
    if criterion is Criterion.HESSIAN_PROPORTIONAL:
        return hessian_ratio(cf) is not None
    if criterion is Criterion.DELTA_SQ_MINUS_S_F_SQ:
        delta = hessian(cf)
        s = aronhold_set(cf)[2]
        fp = cf.to_poly()
        return (delta * delta - s * fp * fp).is_zero()
    if criterion is Criterion.F6U_DELTA_MINUS_SUUU_SQ_F:
        s_uuu = aronhold_set(cf)[0]
        return (f6u(cf) * hessian(cf) - s_uuu * s_uuu * cf.to_poly()).is_zero()

    s_uuu, t_uuu, s, t, _ = aronhold_set(cf)
    if s.is_zero():
        raise CriterionInapplicableError(
            f"criterion {criterion.value!r} requires S != 0"
        )
    if criterion is Criterion.S_DELTA_MINUS_T_F:
        return (s * hessian(cf) - t * cf.to_poly()).is_zero()
    if criterion is Criterion.T_DELTA_MINUS_S_SQ_F:
        return (t * hessian(cf) - s * s * cf.to_poly()).is_zero()
    if criterion is Criterion.S_F6U_MINUS_SUUU_TUUU:
        return (s * f6u(cf) - s_uuu * t_uuu).is_zero()
    if criterion is Criterion.HESSIAN_THETA_MINUS_4S_THETA:
        delta = hessian(cf)
        ux = incidence("u", "x")
        return (transvectant(2, delta, delta, ux * ux) - 4 * s * theta(cf)).is_zero()
    raise PreconditionError(f"unknown criterion {criterion!r}")


# -- coefficient tests in Delta and theta ------------------------------------


def _pair_monomial(family: str, i: int, j: int) -> dict[str, int]:
    if i == j:
        return {f"{family}{i}": 2}
    return {f"{family}{i}": 1, f"{family}{j}": 1}


def theta_coefficient(th: Poly, iu: int, ju: int, kx: int, lx: int) -> Poly:
    """The coefficient of u_i u_j x_k x_l in theta, u-indices first."""
    return monomial_coefficient(
        th, {**_pair_monomial("u", iu, ju), **_pair_monomial("x", kx, lx)}
    )


def glenn_test(f: "CubicForm | Poly") -> Optional[bool]:
    """Complete reducibility from nine coefficients of Delta and theta.

    Applicable whenever 4 theta_3311 theta_3322 - theta_3312^2 != 0, which
    is 48 times the value of F_6u at u = (0, 0, 1); in that case the three
    displayed coefficient combinations vanish exactly when Gamma does, since
    they are the x1, x2, x3 coefficients of 288 Gamma at that u.  Returns
    None when the gate is zero.
    """
    cf = as_cubic(f)
    th = theta(cf)
    t3311 = theta_coefficient(th, 3, 3, 1, 1)
    t3322 = theta_coefficient(th, 3, 3, 2, 2)
    t3312 = theta_coefficient(th, 3, 3, 1, 2)
    gate = 4 * t3311 * t3322 - t3312 * t3312
    if gate.is_zero():
        return None
    delta = hessian(cf)

    def dd(i: int, j: int, k: int) -> Poly:
        counts: dict[str, int] = {}
        for idx in (i, j, k):
            name = f"x{idx}"
            counts[name] = counts.get(name, 0) + 1
        return monomial_coefficient(delta, counts)

    e1 = dd(1, 2, 2) * t3311 - dd(1, 1, 2) * t3312 + 3 * dd(1, 1, 1) * t3322
    e2 = 3 * dd(2, 2, 2) * t3311 - dd(1, 2, 2) * t3312 + dd(1, 1, 2) * t3322
    e3 = (
        dd(1, 2, 2) * theta_coefficient(th, 1, 3, 1, 1)
        - dd(1, 1, 2) * theta_coefficient(th, 1, 3, 1, 2)
        + 3 * dd(1, 1, 1) * theta_coefficient(th, 1, 3, 2, 2)
        + 3 * dd(2, 2, 2) * theta_coefficient(th, 2, 3, 1, 1)
        - dd(1, 2, 2) * theta_coefficient(th, 2, 3, 1, 2)
        + dd(1, 1, 2) * theta_coefficient(th, 2, 3, 2, 2)
        - 4 * dd(2, 2, 3) * t3311
        + 2 * dd(1, 2, 3) * t3312
        - 4 * dd(1, 1, 3) * t3322
    )
    return e1.is_zero() and e2.is_zero() and e3.is_zero()


@dataclass(frozen=True)
class GlennFactorization:
    """Result of the f111 = f222 = 0 corollary: three degree-at-most-five
    coefficient equations, and the explicit factors when they hold.

    ``scale`` times the product of the factors reproduces f; it is
    1 / (f112 f122)^2, reported when the coefficients are numeric.
    """

    reducible: bool
    scale: Optional[Fraction]
    factors: Optional[tuple[Poly, Poly, Poly]]


def glenn_corollary(f: "CubicForm | Poly") -> Optional[GlennFactorization]:
    """The simple special case f111 = f222 = 0, f112 f122 != 0.

    Under that gate F_6u(0,0,1) = (f112 f122)^2 is automatically nonzero
    and reducibility reduces to three short coefficient equations; on
    success the three linear factors are written down directly.  Returns
    None when the gate fails.
    """
    cf = as_cubic(f)
    c112 = _coeff(cf, (1, 1, 2))
    c122 = _coeff(cf, (1, 2, 2))
    if not _vanishes(cf.coeffs[(1, 1, 1)]) or not _vanishes(cf.coeffs[(2, 2, 2)]):
        return None
    if (c112 * c122).is_zero():
        return None
    c113 = _coeff(cf, (1, 1, 3))
    c123 = _coeff(cf, (1, 2, 3))
    c223 = _coeff(cf, (2, 2, 3))
    c133 = _coeff(cf, (1, 3, 3))
    c233 = _coeff(cf, (2, 3, 3))
    c333 = _coeff(cf, (3, 3, 3))
    e1 = c113 * c113 * c122 - c112 * c113 * c123 + c112 * c112 * c133
    e2 = c112 * c223 * c223 - c122 * c123 * c223 + c122 * c122 * c233
    e3 = (
        c113 * c113 * c122 * c122 * c223
        - c112 * c113 * c122 * c123 * c223
        + c112 * c112 * c113 * c223 * c223
        + c112 * c112 * c122 * c122 * c333
    )
    if not (e1.is_zero() and e2.is_zero() and e3.is_zero()):
        return GlennFactorization(False, None, None)
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    a = c112 * x2 + c113 * x3
    b = c122 * x1 + c223 * x3
    c = c112 * c122 * (c112 * x1 + c122 * x2) + (
        c112 * c122 * c123 - c112 * c112 * c223 - c113 * c122 * c122
    ) * x3
    scale: Optional[Fraction] = None
    if _is_numeric(cf):
        denom = _numeric_coeff(cf, (1, 1, 2)) * _numeric_coeff(cf, (1, 2, 2))
        scale = 1 / denom ** 2
    return GlennFactorization(True, scale, (a, b, c))


# -- the five-coefficient test behind f333 != 0 -------------------------------


@dataclass(frozen=True)
class BrillReport:
    """The auxiliary form g = Delta333 f - f333 Delta and its tested
    coefficients.

    ``reducible`` is the five-coefficient verdict.  The three-coefficient
    shortcut is sound only when 4 f113 f223 - f123^2 != 0;
    ``shortcut_holds`` is reported regardless so the gate's necessity can
    be observed.
    """

    g: Poly
    coefficients: dict[str, Poly]
    reducible: bool
    shortcut_applicable: bool
    shortcut_holds: bool


_BRILL_INDICES = ((1, 1, 3), (1, 2, 3), (2, 2, 3), (1, 3, 3), (2, 3, 3))


def brill_report(f: "CubicForm | Poly") -> Optional[BrillReport]:
    """Evaluate g = Delta333 f - f333 Delta; None when f333 = 0."""
    cf = as_cubic(f)
    f333 = _coeff(cf, (3, 3, 3))
    if f333.is_zero():
        return None
    fp = cf.to_poly()
    delta = hessian(cf)
    d333 = monomial_coefficient(delta, {"x3": 3})
    g = d333 * fp - f333 * delta
    if not monomial_coefficient(g, {"x3": 3}).is_zero():
        raise CrossCheckError("g333 must vanish by construction")
    coeffs: dict[str, Poly] = {}
    for idx in _BRILL_INDICES:
        counts: dict[str, int] = {}
        for i in idx:
            counts[f"x{i}"] = counts.get(f"x{i}", 0) + 1
        coeffs["g" + "".join(str(i) for i in idx)] = monomial_coefficient(g, counts)
    gate = 4 * _coeff(cf, (1, 1, 3)) * _coeff(cf, (2, 2, 3)) - _coeff(
        cf, (1, 2, 3)
    ) ** 2
    return BrillReport(
        g=g,
        coefficients=coeffs,
        reducible=all(v.is_zero() for v in coeffs.values()),
        shortcut_applicable=not gate.is_zero(),
        shortcut_holds=all(
            coeffs[k].is_zero() for k in ("g113", "g123", "g223")
        ),
    )


def brill_test(f: "CubicForm | Poly") -> Optional[bool]:
    """Complete reducibility from five coefficients of
    Delta333 f - f333 Delta; None when f333 = 0."""
    report = brill_report(f)
    return None if report is None else report.reducible


# -- Brioschi's corner normalization ------------------------------------------


@dataclass(frozen=True)
class BrioschiShift:
    """The substitution x3 -> x3 - s1 x1 - s2 x2."""

    s1: Fraction
    s2: Fraction

    @property
    def is_identity(self) -> bool:
        return not (self.s1 or self.s2)

    def apply(self, p: Poly) -> Poly:
        if self.is_identity:
            return p
        image = var("x3") - self.s1 * var("x1") - self.s2 * var("x2")
        return p.subs({"x3": image}, strict=False)


def brioschi_normalize(f: "CubicForm | Poly") -> tuple[CubicForm, BrioschiShift]:
    """Shift x3 so that f133 = f233 = 0 while f333 is untouched.

    Requires f333 != 0.  The shifted form is the input composed with
    x3 -> x3 - f133/(3 f333) x1 - f233/(3 f333) x2, after which the
    three-equation reducibility test applies.
    """
    cf = as_cubic(f)
    if _vanishes(cf.coeffs[(3, 3, 3)]):
        raise InapplicableError("the shift requires f333 != 0")
    f333 = _numeric_coeff(cf, (3, 3, 3))
    shift = BrioschiShift(
        _numeric_coeff(cf, (1, 3, 3)) / (3 * f333),
        _numeric_coeff(cf, (2, 3, 3)) / (3 * f333),
    )
    if shift.is_identity:
        return (cf, shift)
    return (CubicForm.from_poly(shift.apply(cf.to_poly())), shift)


def brioschi_test(f: "CubicForm | Poly") -> Optional[bool]:
    """The three-equation reducibility test for f333 != 0, f133 = f233 = 0.

    The remaining gate Delta333 != 0 reduces to 4 f113 f223 - f123^2 != 0
    because Delta333 = 3 (4 f113 f223 - f123^2) f333 on normalized forms.
    Returns None when any gate fails; apply brioschi_normalize first for a
    general f333 != 0 form.
    """
    cf = as_cubic(f)
    c333 = _coeff(cf, (3, 3, 3))
    if c333.is_zero():
        return None
    if not (_vanishes(cf.coeffs[(1, 3, 3)]) and _vanishes(cf.coeffs[(2, 3, 3)])):
        return None
    c111 = _coeff(cf, (1, 1, 1))
    c112 = _coeff(cf, (1, 1, 2))
    c113 = _coeff(cf, (1, 1, 3))
    c122 = _coeff(cf, (1, 2, 2))
    c123 = _coeff(cf, (1, 2, 3))
    c222 = _coeff(cf, (2, 2, 2))
    c223 = _coeff(cf, (2, 2, 3))
    q = 4 * c113 * c223 - c123 * c123
    if q.is_zero():
        return None
    e1 = c113 * q + 3 * (c112 * c112 - 3 * c111 * c122) * c333
    e2 = c123 * q + 3 * (c112 * c122 - 9 * c111 * c222) * c333
    e3 = c223 * q + 3 * (c122 * c122 - 3 * c112 * c222) * c333
    return e1.is_zero() and e2.is_zero() and e3.is_zero()
