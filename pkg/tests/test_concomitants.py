"""Concomitant construction: generic tables, specialization, cross-checks."""

import random
from fractions import Fraction

import pytest

from cubicforms import (
    CONCOMITANT_DEGREES,
    CONCOMITANT_NAMES,
    GENERIC_TERM_COUNTS,
    CubicForm,
    Poly,
    aronhold_set,
    concomitant_set,
    f6u,
    gamma,
    generic_concomitant,
    hessian,
    incidence,
    jacobian,
    parse,
    theta,
    transvectant,
)
from cubicforms.concomitants import (
    aronhold_determinant,
    bordered_determinant,
    specialize,
)
from cubicforms.errors import DegreeMismatchError, PreconditionError

from support import independent_lines, random_cubic


def test_generic_term_counts_match_frozen_table():
    counts = {name: generic_concomitant(name).term_count() for name in CONCOMITANT_NAMES}
    counts["f"] = CubicForm.generic().to_poly().term_count()
    assert counts == GENERIC_TERM_COUNTS


def test_generic_degrees_match_declared_table():
    for name in CONCOMITANT_NAMES:
        p = generic_concomitant(name)
        deg_x, deg_u, deg_f = CONCOMITANT_DEGREES[name]
        assert p.degree_in("x") == deg_x, name
        assert p.degree_in("u") == deg_u, name
        assert p.degree_in("f") == deg_f, name
        for fam in ("x", "u", "f"):
            assert p.is_homogeneous_in(fam), (name, fam)


def test_specialize_matches_direct_computation():
    rng = random.Random(301)
    for _ in range(5):
        cf = random_cubic(rng)
        assert specialize(generic_concomitant("delta"), cf) == hessian(cf)
        assert specialize(generic_concomitant("theta"), cf) == theta(cf)
        assert specialize(generic_concomitant("f6u"), cf) == f6u(cf)
        assert specialize(generic_concomitant("gamma"), cf) == gamma(cf)


def test_invariants_are_scalars():
    cf = random_cubic(random.Random(302))
    s_uuu, t_uuu, s, t, pi = aronhold_set(cf)
    for inv in (s, t):
        assert inv.degree_in("x") == 0
        assert inv.degree_in("u") == 0
    assert s_uuu.degree_in("u") == 3 and s_uuu.degree_in("x") == 0
    assert t_uuu.degree_in("u") == 3 and t_uuu.degree_in("x") == 0
    assert pi.degree_in("x") == 4 and pi.degree_in("u") == 1


def test_aronhold_determinant_equals_contracted_route():
    rng = random.Random(303)
    cf = random_cubic(rng)
    assert aronhold_determinant(cf) == aronhold_set(cf)[0]


def test_bordered_determinant_equals_hessian():
    cf = random_cubic(random.Random(304))
    assert bordered_determinant(cf.to_poly()) == hessian(cf)


def test_verify_flag_runs_cross_routes():
    cf = random_cubic(random.Random(305))
    cs = concomitant_set(cf, verify=True)
    assert cs.delta == hessian(cf)
    # and on a known form
    cs2 = concomitant_set(parse("x1 x2 x3"), verify=True)
    assert cs2.s.term_count() <= 1


def test_concomitant_set_by_name_covers_all_names():
    cf = random_cubic(random.Random(306))
    cs = concomitant_set(cf)
    for name in CONCOMITANT_NAMES:
        value = cs.by_name(name)
        assert isinstance(value, Poly)
    assert cs.by_name("f") == cf.to_poly()
    with pytest.raises(PreconditionError):
        cs.by_name("nonsense")
    for name in CONCOMITANT_NAMES:
        assert isinstance(cs.provenance[name], str) and cs.provenance[name]


def test_product_form_satisfies_reducibility_signature():
    lines = independent_lines(random.Random(307))
    f = lines[0].to_poly() * lines[1].to_poly() * lines[2].to_poly()
    assert gamma(f).is_zero()
    assert aronhold_set(f)[4].is_zero()  # pi
    assert not hessian(f).is_zero()


def test_known_form_concomitant_values():
    # f = x1 (x1 x2 + x3^2): Hessian -4 x1^3, S = T = 0, T_uuu = 0
    f = parse("x1 (x1 x2 + x3^2)")
    assert hessian(f) == parse("-4 x1^3")
    s_uuu, t_uuu, s, t, _ = aronhold_set(f)
    assert s.is_zero() and t.is_zero()
    assert t_uuu.is_zero()
    assert not s_uuu.is_zero()
    delta = hessian(f)
    uxux = incidence("u") ** 2
    assert transvectant(2, delta, delta, uxux).is_zero()


def test_theta_of_binary_two_cube_form():
    # 2 x1 (x1^2 + 6 x2^2) = (x1 + r x2)^3 + (x1 - r x2)^3 with r^2 = 2
    f = parse("2 x1 (x1^2 + 6 x2^2)")
    assert theta(f) == parse("288 u3^2 (x1^2 - 2 x2^2)")
    assert f6u(f) == parse("-13824 u3^6")
    assert hessian(f).is_zero()


def test_cubic_form_coefficient_validation():
    with pytest.raises(DegreeMismatchError):
        CubicForm({(1, 1, 4): 1})
    with pytest.raises(DegreeMismatchError):
        CubicForm.from_poly(parse("x1^2"))
    cf = CubicForm({(2, 1, 1): Fraction(3, 2)})  # indices are sorted internally
    assert cf.coeffs[(1, 1, 2)] == Fraction(3, 2)


def test_generic_form_detection():
    assert CubicForm.generic().is_generic()
    assert not CubicForm({(1, 1, 1): 1}).is_generic()
    assert CubicForm({}).is_zero()


def test_euler_relation_for_hessian():
    # the Hessian of a cubic is itself cubic and homogeneous
    cf = random_cubic(random.Random(308))
    d = hessian(cf)
    assert d.degree_in("x") == 3
    assert d.is_homogeneous_in("x")


def test_gradient_jacobian_route_agrees():
    # Delta = (1/2) J[df/dx1, df/dx2, df/dx3] on a random numeric cubic
    cf = random_cubic(random.Random(309))
    fp = cf.to_poly()
    grads = [fp.derive(f"x{i}") for i in (1, 2, 3)]
    assert hessian(cf) == jacobian(*grads) / 2
