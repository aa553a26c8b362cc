"""Kernel tests: exact arithmetic, differentiation, substitution, parsing."""

import random
from fractions import Fraction

import pytest

from cubicforms import Poly, const, parse, poly_from, render, var
from cubicforms.errors import (
    DegreeMismatchError,
    PolyParseError,
    UnboundVariableError,
    UnknownVariableError,
)
from cubicforms.poly import (
    coefficients_in,
    cross_map,
    divide_exact,
    monomial_coefficient,
    rewrite_powers,
    rewrite_product,
)


def random_poly(rng, nvars=4, nterms=5, maxexp=3):
    names = ["x1", "x2", "x3", "u1", "u2", "u3"][:nvars]
    terms = []
    for _ in range(nterms):
        mono = {n: rng.randint(0, maxexp) for n in rng.sample(names, rng.randint(1, nvars))}
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        terms.append((mono, coeff))
    return poly_from(terms)


# -- ring structure -----------------------------------------------------------


def test_ring_laws_on_random_polynomials():
    rng = random.Random(101)
    for _ in range(40):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == Poly()
        assert a + Poly() == a
        assert a * const(1) == a
        assert (a * const(0)).is_zero()


def test_power_matches_repeated_multiplication():
    rng = random.Random(102)
    p = random_poly(rng)
    assert p**0 == const(1)
    assert p**1 == p
    assert p**3 == p * p * p


def test_scalar_mixing_and_negation():
    x1, x2 = var("x1"), var("x2")
    p = 3 * x1 - x2 / 2 + Fraction(1, 3)
    assert p.coefficient({"x1": 1}) == 3
    assert p.coefficient({"x2": 1}) == Fraction(-1, 2)
    assert p.coefficient({}) == Fraction(1, 3)
    assert -p + p == Poly()
    assert 1 - x1 == -(x1 - 1)


def test_zero_coefficients_are_dropped():
    x1 = var("x1")
    p = x1 + (-1) * x1
    assert p.is_zero()
    assert p.term_count() == 0
    assert not bool(p)


def test_equality_against_scalars():
    assert const(3) == 3
    assert Poly() == 0
    assert const(Fraction(1, 2)) == Fraction(1, 2)
    assert var("x1") != 0


# -- degrees and structure ----------------------------------------------------


def test_degree_and_homogeneity():
    x1, x2, u1 = var("x1"), var("x2"), var("u1")
    p = x1**2 * x2 * u1 + x1 * x2**2 * u1
    assert p.degree_in("x") == 3
    assert p.degree_in("u") == 1
    assert p.is_homogeneous_in("x")
    assert p.total_degree() == 4
    q = p + x1
    assert not q.is_homogeneous_in("x")
    assert Poly().degree_in("x") == 0


def test_variables_and_term_count():
    p = parse("x1 x2 + u3^2 - 1/2")
    assert p.variables() == {"x1", "x2", "u3"}
    assert p.term_count() == 3


def test_coefficients_in_reconstructs_polynomial():
    rng = random.Random(103)
    p = random_poly(rng, nvars=6, nterms=8)
    split = coefficients_in(p, "x")
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    rebuilt = Poly()
    for (i, j, k), cof in split.items():
        rebuilt = rebuilt + cof * x1**i * x2**j * x3**k
    assert rebuilt == p


def test_monomial_coefficient():
    p = parse("3 x1^2 u1 - 2 x1^2 u2 + x2")
    assert monomial_coefficient(p, {"x1": 2}) == parse("3 u1 - 2 u2")
    assert monomial_coefficient(p, {"x1": 2, "u1": 1}) == 3
    assert monomial_coefficient(p, {"x3": 1}).is_zero()


# -- differentiation ----------------------------------------------------------


def test_derive_product_rule_and_linearity():
    rng = random.Random(104)
    for _ in range(15):
        f, g = random_poly(rng), random_poly(rng)
        for name in ("x1", "u2"):
            assert (f * g).derive(name) == f.derive(name) * g + g.derive(name) * f
            assert (f + g).derive(name) == f.derive(name) + g.derive(name)
    assert const(5).derive("x1").is_zero()


def test_euler_identity_for_homogeneous_forms():
    p = parse("x1^3 - 2 x1 x2 x3 + 5 x3^3")
    acc = Poly()
    for i in (1, 2, 3):
        acc = acc + var(f"x{i}") * p.derive(f"x{i}")
    assert acc == 3 * p


# -- substitution -------------------------------------------------------------


def test_subs_evaluates_and_composes():
    p = parse("x1^2 + x2 x3")
    assert p.subs({"x1": 2, "x2": 3, "x3": 4}) == 16
    q = p.subs({"x1": parse("y1 + y2"), "x2": var("y1"), "x3": var("y2")})
    assert q == parse("y1^2 + 3 y1 y2 + y2^2")


def test_subs_strict_mode_covers_touched_families():
    # strict substitution binds whole families: mentioning x1 obliges x2
    p = parse("x1 + x2")
    with pytest.raises(UnboundVariableError):
        p.subs({"x1": 1}, strict=True)
    assert p.subs({"x1": 1}, strict=False) == parse("x2 + 1")
    # untouched families are left alone even in strict mode
    q = parse("x1 + u1")
    assert q.subs({"x1": 1, "x2": 0, "x3": 0}, strict=True) == parse("u1 + 1")


def test_rename_family():
    p = parse("x1^2 u1 + x2 u2")
    assert p.rename_family("x", "y") == parse("y1^2 u1 + y2 u2")
    assert p.rename_family("v", "w") == p


def test_symbol_power_is_the_differential_pairing():
    # u-monomials map to raw partials of the target
    q = parse("u1^2 u2 + u3^3")
    assert q.symbol_power("u", 3, parse("x1^2 x2")) == 2
    assert q.symbol_power("u", 3, parse("x3^3")) == 6
    # pairing with the cube of the incidence form at a point is 3! f(point)
    f = parse("x1^3 - 2 x1 x2 x3 + 5 x3^3")
    y = (2, -1, 3)
    uy = parse("2 u1 - u2 + 3 u3")
    paired = (uy**3).symbol_power("u", 3, f)
    assert paired == 6 * f.eval_exact({"x1": y[0], "x2": y[1], "x3": y[2]})
    # inhomogeneous input in the symbol family is rejected
    with pytest.raises(DegreeMismatchError):
        parse("u1 + u2^3").symbol_power("u", 3, f)


def test_eval_exact_and_complex_agree():
    rng = random.Random(105)
    p = random_poly(rng, nvars=3)
    point = {"x1": Fraction(1, 2), "x2": Fraction(-2), "x3": Fraction(3, 4)}
    exact = p.eval_exact(point)
    approx = p.eval_complex({k: complex(v) for k, v in point.items()})
    assert abs(complex(exact) - approx) < 1e-12


# -- division and rewriting ---------------------------------------------------


def test_divide_exact_roundtrip():
    rng = random.Random(106)
    for _ in range(10):
        q, d = random_poly(rng), random_poly(rng)
        if d.is_zero():
            continue
        assert divide_exact(q * d, d) == q
    assert divide_exact(parse("x1^2 + x2"), parse("x1")) is None


def test_rewrite_powers_reduces_even_powers():
    # i^2 -> -1 turns i^4 into 1 and i^3 into -i, so i^4 + i^3 + i collapses to 1
    p = parse("i^4 + i^3 + i")
    assert rewrite_powers(p, {"i": (2, const(-1))}) == const(1)
    assert rewrite_powers(parse("i^2"), {"i": (2, const(-1))}) == -1


def test_rewrite_product_replaces_joint_occurrences():
    p = parse("x1 x2 x3 + x1^2 x2 x3")
    out = rewrite_product(p, ["x1", "x2", "x3"], const(5))
    assert out == 5 + 5 * var("x1")


# -- parsing and rendering ----------------------------------------------------


def test_parse_rational_coefficients_and_powers():
    p = parse("3/2 x1^2 x2 - x3^3 + 7")
    assert p.coefficient({"x1": 2, "x2": 1}) == Fraction(3, 2)
    assert p.coefficient({"x3": 3}) == -1
    assert p.coefficient({}) == 7


def test_parse_implicit_and_explicit_multiplication():
    assert parse("x1 x2") == parse("x1*x2")
    assert parse("2(x1 + x2)") == parse("2 x1 + 2 x2")


def test_parse_parenthesized_powers():
    assert parse("(x1 + x2)^3") == parse("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3")


def test_parse_unicode_minus():
    assert parse("−x1 + x2") == parse("-x1 + x2")


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError):
        parse("x1 +")
    with pytest.raises(PolyParseError):
        parse("(x1")
    with pytest.raises(PolyParseError):
        parse("x1 ^ x2")
    with pytest.raises(UnknownVariableError):
        parse("x9")
    with pytest.raises(UnknownVariableError):
        parse("t1")


def test_render_parse_roundtrip():
    rng = random.Random(107)
    for _ in range(20):
        p = random_poly(rng, nvars=6, nterms=6)
        assert parse(render(p)) == p
    assert render(Poly()) == "0"


def test_render_is_deterministic():
    a = parse("x2 + x1")
    b = parse("x1 + x2")
    assert render(a) == render(b)


def test_json_roundtrip():
    rng = random.Random(108)
    p = random_poly(rng)
    assert Poly.from_json(p.to_json()) == p
    assert Poly.from_json(render(p, fmt="json")) == p
    with pytest.raises(ValueError):
        render(p, fmt="latex")


# -- cross maps ---------------------------------------------------------------


def test_cross_map_is_incidence_compatible():
    # w = y x z satisfies w . y = 0 and w . z = 0
    images = cross_map("w", "y", "z")
    for other in ("y", "z"):
        acc = Poly()
        for i in (1, 2, 3):
            acc = acc + images[f"w{i}"] * var(f"{other}{i}")
        assert acc.is_zero()


def test_quadratic_form_roundtrip_errors():
    from cubicforms import QuadraticForm

    with pytest.raises(DegreeMismatchError):
        QuadraticForm.from_poly(parse("x1^3"))
    q = QuadraticForm.from_poly(parse("x1^2 + 4 x2 x3"))
    assert q.to_poly() == parse("x1^2 + 4 x2 x3")
