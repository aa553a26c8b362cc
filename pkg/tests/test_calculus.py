"""Operator tests: brackets, polars, Jacobians, transvectants, contraction."""

import random
from fractions import Fraction

import pytest

from cubicforms import (
    Poly,
    bracket,
    const,
    contract,
    contract_power,
    incidence,
    jacobian,
    multi_polar,
    parse,
    polar,
    transvectant,
    var,
)
from cubicforms.calculus import triple_vars
from cubicforms.errors import InvalidOrderError

from support import random_cubic


def test_incidence_form():
    assert incidence("u") == parse("u1 x1 + u2 x2 + u3 x3")
    assert incidence("y", "z") == parse("y1 z1 + y2 z2 + y3 z3")


def test_bracket_is_alternating():
    triples = ("x", "y", "z")
    base = bracket(*triples)
    assert bracket("y", "x", "z") == -base
    assert bracket("x", "z", "y") == -base
    assert bracket("z", "x", "y") == base
    assert bracket("x", "x", "z").is_zero()


def test_bracket_on_numeric_triples():
    assert bracket((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
    assert bracket((1, 2, 3), (2, 4, 6), (0, 1, 0)).is_zero()


def test_bracket_accepts_polynomials():
    x = triple_vars("x")
    assert bracket(x, "y", "z") == bracket("x", "y", "z")


# -- polars --------------------------------------------------------------------


def test_polar_toward_same_family_is_euler():
    f = parse("x1^3 - 2 x1 x2 x3 + 5 x3^3")
    assert polar(f, "x", "x") == 3 * f


def test_pure_polar_pattern_is_evaluation():
    f = parse("x1^3 + 4 x1 x2^2 - x3^3")
    assert multi_polar(f, {"y": 3}) == f.subs(
        {"x1": var("y1"), "x2": var("y2"), "x3": var("y3")}
    )


def test_mixed_polar_restores_form_on_diagonal():
    # half-normalization: f_xy of a quadratic gives back f when y -> x
    h = parse("x1^2 + 3 x1 x2 - x2 x3")
    hxy = multi_polar(h, {"y": 1})
    assert hxy.subs({"y1": var("x1"), "y2": var("x2"), "y3": var("x3")}) == 2 * h
    f = parse("x1^3 + x2^2 x3")
    fxyy = multi_polar(f, {"y": 2})
    # f_xyy at y = x returns 3f: each slot contributes a degree factor
    assert fxyy.subs({"y1": var("x1"), "y2": var("x2"), "y3": var("x3")}) == 3 * f


def test_polar_expansion_coefficients():
    # f(x + t y) expands with multi_polar terms as the t-coefficients
    f = random_cubic(random.Random(201)).to_poly()
    t = Fraction(3, 7)
    shifted = f.subs(
        {f"x{i}": var(f"x{i}") + t * var(f"y{i}") for i in (1, 2, 3)}
    )
    expansion = Poly()
    for k, pattern in enumerate(({}, {"y": 1}, {"y": 2}, {"y": 3})):
        expansion = expansion + t**k * multi_polar(f, pattern)
    assert shifted == expansion


# -- Jacobians and transvectants -------------------------------------------------


def test_jacobian_is_alternating_and_matches_transvectant():
    rng = random.Random(202)
    f, g, h = (random_cubic(rng).to_poly() for _ in range(3))
    j = jacobian(f, g, h)
    assert jacobian(g, f, h) == -j
    assert jacobian(f, h, g) == -j
    assert jacobian(f, f, h).is_zero()
    assert transvectant(1, f, g, h) == j


def test_jacobian_concrete_value():
    assert jacobian(parse("x1"), parse("x2"), parse("x3")) == 1
    assert jacobian(parse("x1^3"), parse("x2^3"), parse("x3^3")) == parse(
        "27 x1^2 x2^2 x3^2"
    )


def test_transvectant_order_validation():
    f = parse("x1^3")
    with pytest.raises(InvalidOrderError):
        transvectant(0, f, f, f)
    with pytest.raises(InvalidOrderError):
        transvectant(-2, f, f, f)


def test_transvectant_degree_shortfall_gives_zero():
    f = parse("x1^3 + x2^3")
    line = parse("x1 + x2")
    assert transvectant(2, f, f, line).is_zero()
    assert transvectant(4, f, f, f).is_zero()


def test_transvectant_multilinearity():
    rng = random.Random(203)
    f, g, h, k = (random_cubic(rng).to_poly() for _ in range(4))
    c = Fraction(5, 3)
    assert transvectant(2, f + c * k, g, h) == transvectant(2, f, g, h) + c * transvectant(
        2, k, g, h
    )
    assert transvectant(2, f, g + k, h) == transvectant(2, f, g, h) + transvectant(
        2, f, k, h
    )


def test_transvectant_symmetry_by_order_parity():
    rng = random.Random(204)
    f, g, h = (random_cubic(rng).to_poly() for _ in range(3))
    # odd order: alternating; even order: symmetric
    assert transvectant(3, f, g, h) == -transvectant(3, g, f, h)
    assert transvectant(2, f, g, h) == transvectant(2, g, f, h)
    assert transvectant(2, f, g, h) == transvectant(2, f, h, g)


def test_transvectant_degree_bookkeeping():
    f = random_cubic(random.Random(205)).to_poly()
    ux = incidence("u")
    j = transvectant(2, f, f, ux * ux)
    # each slot drops two x-degrees: 3 + 3 + 2 - 6 = 2, and u survives
    assert j.degree_in("x") == 2
    assert j.degree_in("u") == 2
    assert j.is_homogeneous_in("x")


def test_jacobian_of_powers_factors_through_bracket():
    # the Jacobian of three cubes of lines is 27 (abc)^2 [abc]
    a, b, c = parse("x1 + x2"), parse("x2 + x3"), parse("x1 - x3")
    j = jacobian(a**3, b**3, c**3)
    det = bracket((1, 1, 0), (0, 1, 1), (1, 0, -1))
    assert j == 27 * det * (a * b * c) ** 2


# -- contraction -----------------------------------------------------------------


def test_contract_pairs_dual_families():
    assert contract(incidence("u")) == 3
    f = parse("u1^2 x2 x3 + u2 u3 x1^2")
    by_hand = Poly()
    for i in (1, 2, 3):
        by_hand = by_hand + f.derive(f"x{i}").derive(f"u{i}")
    assert contract(f) == by_hand


def test_contract_power_iterates():
    p = incidence("u") ** 2
    assert contract_power(p, 1) == contract(p)
    assert contract_power(p, 2) == contract(contract(p))
    # C^2 of u_x^2 is a constant: 2 * (3 + 3^2) / ... check directly
    assert contract_power(p, 2) == contract(contract(incidence("u") ** 2))
    assert contract_power(p, 2).degree_in("x") == 0


def test_contract_on_disjoint_families_is_zero():
    assert contract(parse("y1 z1")).is_zero()
    assert contract(const(7)).is_zero()
