"""Buchberger closure, reduction, saturation.

The crafted fixtures here were worked out by hand; the family-level checks
lean on the constructors from families.py.
"""

import random

import pytest

from repunit_toric.binomials import Binomial, Grading, is_homogeneous, oriented
from repunit_toric.families import (
    minors_closed_chain,
    minors_open_chain,
    projective_grading,
    scalar_grading,
    structured_closed_family,
    structured_open_family,
    toric_ideal,
)
from repunit_toric.groebner import (
    buchberger,
    groebner_reduced,
    ideal_equal,
    ideal_member,
    is_groebner_basis,
    is_minimal_basis,
    is_reduced_basis,
    reduce_gb,
    saturate_torus,
    saturate_variable,
)
from repunit_toric.orders import build_order_i
from repunit_toric.semigroup import InstanceParams, generators


def test_single_generator_is_its_own_basis():
    order = build_order_i((15, 18, 24, 36), 1)
    g = oriented(Binomial((0, 3, 0, 0), (2, 0, 1, 0)), order)
    gb = buchberger([g], order)
    assert gb.elements == (g,)
    assert is_groebner_basis(gb.elements, order)


def test_buchberger_closes_a_gap():
    order = build_order_i((2, 1, 1), 3)
    f1 = oriented(Binomial((1, 0, 0), (0, 1, 0)), order)
    f2 = oriented(Binomial((1, 0, 1), (0, 2, 0)), order)
    assert f1.plus == (1, 0, 0) and f2.plus == (1, 0, 1)
    assert not is_groebner_basis((f1, f2), order)
    gb = buchberger([f1, f2], order)
    assert is_groebner_basis(gb.elements, order)
    assert Binomial((0, 2, 0), (0, 1, 1)) in gb.elements
    red = reduce_gb(gb)
    # ascending leads: x2^2 precedes x1 because x1 carries weight 2
    assert red.elements == (
        Binomial((0, 2, 0), (0, 1, 1)),
        Binomial((1, 0, 0), (0, 1, 0)),
    )
    assert red.minimal and red.reduced


def test_is_groebner_rejects_misoriented_input():
    order = build_order_i((2, 1, 1), 3)
    wrong = Binomial((0, 1, 0), (1, 0, 0))  # lead sits on the minus side
    with pytest.raises(ValueError):
        is_groebner_basis((wrong,), order)


def test_reduced_basis_ignores_generator_shuffles():
    params = InstanceParams(1, 2, 5)
    order = build_order_i(generators(params), 2)
    gens = list(minors_closed_chain(params).binomials)
    reference = groebner_reduced(gens, order).elements
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(gens)
        assert groebner_reduced(gens, order).elements == reference


def test_structured_family_flags():
    params = InstanceParams(3, 3, 4)
    closed = structured_closed_family(params, 2)
    order = build_order_i(generators(params), 2)
    assert is_groebner_basis(closed, order)
    assert is_minimal_basis(closed)
    assert not is_reduced_basis(closed)
    opened = structured_open_family(params, 2)
    assert is_groebner_basis(opened, order)
    assert is_reduced_basis(opened)


def test_membership_and_ideal_equality():
    params = InstanceParams(1, 2, 4)
    order = build_order_i(generators(params), 1)
    minors = minors_closed_chain(params).binomials
    gb = groebner_reduced(toric_ideal(scalar_grading(params)), order)
    for g in minors:
        assert ideal_member(g, gb)
    assert not ideal_member(Binomial((1, 0, 0, 0), (0, 1, 0, 0)), gb)
    assert ideal_equal(minors, tuple(reversed(minors)), order)

    noncoprime = InstanceParams(3, 2, 4)
    order2 = build_order_i(generators(noncoprime), 1)
    assert not ideal_equal(
        toric_ideal(scalar_grading(noncoprime)),
        minors_closed_chain(noncoprime).binomials,
        order2,
    )


def test_groebner_preserves_homogeneity():
    for a, b, n in [(2, 3, 4), (1, 2, 5)]:
        params = InstanceParams(a, b, n)
        w = scalar_grading(params)
        proj = projective_grading(params)
        for i in (1, n):
            order = build_order_i(generators(params), i)
            gb = buchberger(minors_open_chain(params).binomials, order)
            for g in gb:
                assert is_homogeneous(w, g)
                assert is_homogeneous(proj, g)


def test_saturate_variable_strips_cofactor():
    grading = Grading.scalar((1, 1, 1))
    gens = [Binomial((1, 1, 0), (1, 0, 1))]  # x1*(x2 - x3)
    sat = saturate_variable(gens, 1, grading)
    assert sat == [Binomial((0, 1, 0), (0, 0, 1))]
    with pytest.raises(ValueError):
        saturate_variable(gens, 4, grading)


def test_saturate_torus_fixes_saturated_ideal():
    params = InstanceParams(1, 2, 5)
    grading = projective_grading(params)
    minors = minors_open_chain(params).binomials
    sat = saturate_torus(minors, grading)
    order = build_order_i(grading.positive_row(), 1)
    assert ideal_equal(sat, minors, order)


def test_trace_reports_pair_handling():
    lines: list[str] = []
    order = build_order_i((2, 1, 1), 3)
    f1 = oriented(Binomial((1, 0, 0), (0, 1, 0)), order)
    f2 = oriented(Binomial((1, 0, 1), (0, 2, 0)), order)
    buchberger([f1, f2], order, trace=lines.append)
    assert lines
    assert all(isinstance(s, str) for s in lines)
    assert any("pair" in s for s in lines)


def test_cross_check_against_sympy():
    sympy = pytest.importorskip("sympy")
    params = InstanceParams(3, 3, 4)
    xs = sympy.symbols("x1 x2 x3 x4")

    def to_expr(g):
        e = sympy.Integer(1)
        f = sympy.Integer(1)
        for x, p in zip(xs, g.plus):
            e *= x**p
        for x, p in zip(xs, g.minus):
            f *= x**p
        return e - f

    minors = minors_closed_chain(params).binomials
    other = sympy.groebner([to_expr(g) for g in minors], *xs, order="grevlex")

    order = build_order_i(generators(params), 2)
    mine = groebner_reduced(minors, order)

    # same ideal seen from two independent implementations
    for g in mine:
        assert other.reduce(to_expr(g))[1] == 0
    for expr in other.exprs:
        terms = sympy.Poly(expr, *xs).terms()
        assert len(terms) == 2 and {c for _, c in terms} == {1, -1}
        plus = next(e for e, c in terms if c == 1)
        minus = next(e for e, c in terms if c == -1)
        f = Binomial(tuple(map(int, plus)), tuple(map(int, minus)))
        assert ideal_member(f, mine)
