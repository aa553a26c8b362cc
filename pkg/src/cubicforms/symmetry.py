"""Fast path for cubics invariant under cyclic permutation of x1, x2, x3.

Every such form is a unique combination of four visibly reducible forms:

    f = a (2x1-x2-x3)(2x2-x3-x1)(2x3-x1-x2)
      + b (x1-x2)(x2-x3)(x3-x1)
      + c (x1+x2+x3)^3
      + d (x1^3+x2^3+x3^3-3x1x2x3)

and complete reducibility collapses to one scalar test on (a, b, c, d).
The factorization itself comes in radical form: cube roots alpha1, alpha2
of 9a -/+ i sqrt(3) b and a matched cube root gamma of 9c assemble the
three factors directly.  When c != 0 the three factor coefficient triples
are also the roots of one explicit univariate cubic, giving a second,
independent construction; the two must agree and are checked against each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy

from .concomitants import CubicForm, as_cubic
from .errors import (
    CrossCheckError,
    NotReducibleError,
    PreconditionError,
    ZeroFormError,
)
from .factor import (
    TOL_FACTOR,
    TOL_ROOT,
    FactorMethod,
    Factorization,
    _finish,
    _max_norm,
    _normalize_line,
    _residual,
)
from .poly import CUBIC_INDICES, Poly, var
from .quadratics import LinearForm

_OMEGA = complex(-0.5, 3**0.5 / 2)


def _basis_forms() -> tuple[CubicForm, CubicForm, CubicForm, CubicForm]:
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    pa = (2 * x1 - x2 - x3) * (2 * x2 - x3 - x1) * (2 * x3 - x1 - x2)
    pb = (x1 - x2) * (x2 - x3) * (x3 - x1)
    pc = (x1 + x2 + x3) ** 3
    pd = x1**3 + x2**3 + x3**3 - 3 * x1 * x2 * x3
    return tuple(CubicForm.from_poly(p) for p in (pa, pb, pc, pd))


_BASIS = _basis_forms()

# coefficient slots that determine a cyclic-invariant cubic completely
_PIVOTS = ((1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3))

# orbits of the 3-cycle x1 -> x2 -> x3 -> x1 on cubic monomials
_ORBITS = (
    ((1, 1, 1), (2, 2, 2), (3, 3, 3)),
    ((1, 1, 2), (2, 2, 3), (1, 3, 3)),
    ((1, 2, 2), (2, 3, 3), (1, 1, 3)),
    ((1, 2, 3),),
)


@dataclass(frozen=True)
class SymmetricParams:
    """Exact coordinates of a cyclic-invariant cubic in the four-form basis."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def recombine(self) -> CubicForm:
        table = {}
        for idx in CUBIC_INDICES:
            table[idx] = (
                self.a * _BASIS[0].coeffs[idx]
                + self.b * _BASIS[1].coeffs[idx]
                + self.c * _BASIS[2].coeffs[idx]
                + self.d * _BASIS[3].coeffs[idx]
            )
        return CubicForm(table)


def _solve4(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Exact solve of a 4x4 system by Gaussian elimination."""
    n = 4
    aug = [rows[i][:] + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def symmetric_decompose(f) -> Optional[SymmetricParams]:
    """Coordinates (a, b, c, d) of f in the cyclic basis, or None when f is
    not invariant under the 3-cycle of the variables.

    Invariance is an exact coefficient test (each cycle orbit must be
    constant); the coordinates come from an exact 4x4 solve and the
    recombination is re-checked against f before returning.
    """
    cf = as_cubic(f)
    coeffs = cf.coeffs
    if any(isinstance(v, Poly) for v in coeffs.values()):
        raise PreconditionError("this operation needs numeric coefficients")
    for orbit in _ORBITS:
        first = coeffs[orbit[0]]
        if any(coeffs[idx] != first for idx in orbit[1:]):
            return None
    rows = [
        [Fraction(_BASIS[j].coeffs[idx]) for j in range(4)] for idx in _PIVOTS
    ]
    try:
        rhs = [Fraction(coeffs[idx]) for idx in _PIVOTS]
    except (TypeError, ValueError):
        raise PreconditionError("this operation needs rational coefficients")
    sol = _solve4(rows, rhs)
    if sol is None:
        raise CrossCheckError("the cyclic basis must be linearly independent")
    params = SymmetricParams(*sol)
    if params.recombine().coeffs != {k: Fraction(v) for k, v in coeffs.items()}:
        raise CrossCheckError("recombination must reproduce the input exactly")
    return params


def symmetric_reducible(p: SymmetricParams) -> bool:
    """Complete reducibility in coordinates: a = b = c = 0 (a multiple of
    x1^3+x2^3+x3^3-3x1x2x3) or (27a^2+b^2)c + d^3 = 0."""
    if p.a == 0 and p.b == 0 and p.c == 0:
        return True
    return (27 * p.a**2 + p.b**2) * p.c + p.d**3 == 0


def _cbrt(z: complex) -> complex:
    if z == 0:
        return 0j
    return z ** (1 / 3)


def _radical_factors(p: SymmetricParams, tol: float) -> list[LinearForm]:
    """The three factors assembled from matched cube roots.

    alpha1^3 = 9a - i sqrt(3) b, alpha2^3 = 9a + i sqrt(3) b (principal
    roots), and gamma is the cube root of 9c selected so that
    -alpha1 alpha2 gamma = 3d; the selection is validated numerically and
    is guaranteed by (27a^2+b^2)c + d^3 = 0."""
    s3 = 3**0.5
    base = complex(9 * p.a)
    al1 = _cbrt(base - 1j * s3 * float(p.b))
    al2 = _cbrt(base + 1j * s3 * float(p.b))
    g0 = _cbrt(complex(9 * p.c))
    target = complex(3 * p.d)
    scale = max(1.0, abs(target), abs(al1 * al2 * g0))
    best = None
    for k in range(3):
        g = g0 * _OMEGA**k
        err = abs(-al1 * al2 * g - target)
        if best is None or err < best[0]:
            best = (err, g)
    err, gamma = best
    if err > TOL_ROOT * scale * 10:
        raise CrossCheckError("no cube root of 9c matches -a1 a2 g = 3d")
    om, om2 = _OMEGA, _OMEGA**2
    rows = (
        ((1, om2, om), (1, om, om2)),
        ((om2, om, 1), (om, om2, 1)),
        ((om, 1, om2), (om2, 1, om)),
    )
    out = []
    for w1, w2 in rows:
        cs = [al1 * w1[i] + gamma + al2 * w2[i] for i in range(3)]
        out.append(LinearForm(*cs))
    return out


def _cyclic_factors(p: SymmetricParams) -> list[LinearForm]:
    """Second construction for c != 0: the factor coefficients are the
    roots r1, r2, r3 of 27c(x^3 - x^2) + (9c+3d)x - (2a+c+d), indexed so
    that 2b = 27c (r1-r2)(r2-r3)(r3-r1); each factor is one cyclic shift
    of (r1, r2, r3) and the product carries the scalar 27c.

    The sign condition pins the ordering: the x1^2 x2 coefficient of the
    assembled product is 27c (r1^2 r2 + r2^2 r3 + r3^2 r1) and swapping
    two roots trades it with the x1 x2^2 coefficient, i.e. flips b.
    When b = 0 both orderings are valid and the tie goes to numpy's."""
    c0 = float(p.c)
    poly = [27 * c0, -27 * c0, float(9 * p.c + 3 * p.d), -float(2 * p.a + p.c + p.d)]
    r1, r2, r3 = (complex(r) for r in numpy.roots(poly))
    want = complex(2 * p.b)
    got = 27 * c0 * (r1 - r2) * (r2 - r3) * (r3 - r1)
    if abs(got - want) > abs(-got - want):
        r2, r3 = r3, r2
    return [
        LinearForm(r1, r2, r3),
        LinearForm(r2, r3, r1),
        LinearForm(r3, r1, r2),
    ]


def _match_factor_sets(ours, theirs, tol: float = 1e-4) -> None:
    """Greedy matching of two normalized factor triples.

    Repeated roots cost numpy.roots up to eps^(1/3) ~ 5e-6 of accuracy, so
    the threshold is loose; a wrong root ordering would be off by O(1)."""

    def dist(la: LinearForm, lb: LinearForm) -> float:
        return max(abs(complex(u) - complex(v)) for u, v in zip(la.c, lb.c))

    left = list(theirs)
    for lf in ours:
        best = min(range(len(left)), key=lambda i: dist(lf, left[i]))
        if dist(lf, left[best]) > tol:
            raise CrossCheckError(
                "radical and root constructions disagree on a factor"
            )
        left.pop(best)


def _cyclic_cross_check(p: SymmetricParams, cf: CubicForm, result: Factorization) -> None:
    """Verify the root construction reproduces f and the radical factors.

    Its residual gate is looser than the factorization's own: near a
    double root (b near 0) the ordered root products lose about half the
    working precision, which is fine for a consistency check."""
    lines = _cyclic_factors(p)
    res = _residual(27 * p.c, lines, cf)
    if res > max(1e-5 * _max_norm(cf), 1e-12):
        raise CrossCheckError(
            f"root construction misses the form by {res:.3e}"
        )
    normed = [_normalize_line(line)[1] for line in lines]
    _match_factor_sets(result.factors, normed)


def symmetric_factor(p: SymmetricParams, tol: float = TOL_FACTOR) -> Factorization:
    """Factorization of the recombined form; NotReducibleError otherwise.

    a = b = c = 0 yields the fixed factors of x1^3+x2^3+x3^3-3x1x2x3
    scaled by d.  Otherwise the radical construction supplies the result,
    and when c != 0 the root-based construction is run as an independent
    cross-check of the factor set.
    """
    if not symmetric_reducible(p):
        raise NotReducibleError("(27a^2+b^2)c + d^3 != 0 and (a,b,c) != 0")
    cf = p.recombine()
    if cf.is_zero():
        raise ZeroFormError("the zero form has no factorization")
    if p.a == 0 and p.b == 0 and p.c == 0:
        lines = [
            LinearForm(1, 1, 1),
            LinearForm(1, _OMEGA, _OMEGA**2),
            LinearForm(1, _OMEGA**2, _OMEGA),
        ]
        return _finish(p.d, lines, cf, FactorMethod.SYMMETRIC, tol)
    result = _finish(
        Fraction(1, 9), _radical_factors(p, tol), cf, FactorMethod.SYMMETRIC, tol
    )
    if p.c != 0:
        _cyclic_cross_check(p, cf, result)
    return result
