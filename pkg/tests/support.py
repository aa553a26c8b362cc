"""Seeded random builders and matching helpers shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from cubicforms import CubicForm, LinearForm, QuadraticForm
from cubicforms.poly import CUBIC_INDICES, QUADRATIC_INDICES


def rational(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def nonzero_rational(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 3) -> Fraction:
    while True:
        v = rational(rng, lo, hi, max_den)
        if v:
            return v


def random_line(rng: random.Random, lo: int = -4, hi: int = 4, max_den: int = 2) -> LinearForm:
    """A nonzero linear form with small rational coefficients."""
    while True:
        c = tuple(rational(rng, lo, hi, max_den) for _ in range(3))
        if any(c):
            return LinearForm(*c)


def cross(a: LinearForm, b: LinearForm) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(
        a.c[(i + 1) % 3] * b.c[(i + 2) % 3] - a.c[(i + 2) % 3] * b.c[(i + 1) % 3]
        for i in range(3)
    )


def independent_lines(rng: random.Random, n: int = 3) -> list[LinearForm]:
    """n pairwise independent lines; for n = 3 also not concurrent."""
    while True:
        lines = [random_line(rng) for _ in range(n)]
        if any(not any(cross(a, b)) for i, a in enumerate(lines) for b in lines[i + 1:]):
            continue
        if n == 3:
            from cubicforms import bracket

            det = bracket(
                tuple(lines[0].c), tuple(lines[1].c), tuple(lines[2].c)
            ).constant_value()
            if det == 0:
                continue
        return lines


def random_cubic(rng: random.Random) -> CubicForm:
    return CubicForm({idx: rational(rng) for idx in CUBIC_INDICES})


def random_quadratic(rng: random.Random) -> QuadraticForm:
    return QuadraticForm({idx: rational(rng) for idx in QUADRATIC_INDICES})


def line_distance(a: LinearForm, b: LinearForm) -> float:
    return max(abs(complex(x) - complex(y)) for x, y in zip(a.c, b.c))


def match_factor_sets(ours, theirs, tol: float) -> float:
    """Greedy matching of two factor lists; the worst matched distance.

    Raises AssertionError when some factor finds no partner within tol.
    """
    remaining = list(theirs)
    worst = 0.0
    for line in ours:
        dists = [line_distance(line, other) for other in remaining]
        best = min(range(len(dists)), key=dists.__getitem__)
        assert dists[best] <= tol, f"unmatched factor {line!r} (closest {dists[best]:.3e})"
        worst = max(worst, dists[best])
        remaining.pop(best)
    return worst


def coefficient_table(f) -> dict:
    """Exact coefficient table of a cubic Poly or CubicForm."""
    cf = f if isinstance(f, CubicForm) else CubicForm.from_poly(f)
    return {idx: Fraction(v) for idx, v in cf.coeffs.items()}


def recombination_error(fac, f) -> float:
    """Max-norm distance between a Factorization's expansion and f."""
    table = coefficient_table(f)
    built = fac.recombine()
    return max(abs(complex(built[idx]) - complex(table[idx])) for idx in table)
