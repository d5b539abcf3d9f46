import random

import pytest
from hypothesis import given, strategies as st

import sparsepoly as sp
from conftest import poly_pairs, polys, random_poly


def test_evaluate_worked_example():
    # x*y^3 + 2*x^2*y^2 + 3*x^3*y at (1, 2)
    s4 = sp.new_spray([(1, 3), (2, 2), (3, 1)], [1, 2, 3])
    assert sp.evaluate(s4, (1, 2)) == 22


def test_evaluate_unit_and_knight():
    assert sp.evaluate(sp.unit(3), (9.5, -2.0, 0.0)) == 1.0
    assert sp.evaluate(sp.knight(2), (1, 1)) == 8.0


def test_evaluate_length_mismatch():
    with pytest.raises(sp.ArityError):
        sp.evaluate(sp.unit(3), (1, 2))


def test_evaluate_singularity():
    inv = sp.new_spray([(-1,)], [1.0], arity=1)
    with pytest.raises(sp.SingularityError):
        sp.evaluate(inv, (0.0,))
    # zero coordinate with nonnegative exponents is fine
    assert sp.evaluate(sp.lone(1, 2), (0.0, 5.0)) == 0.0


def test_evaluate_laurent():
    p = sp.new_spray([(-2, 1)], [3.0])
    assert sp.evaluate(p, (2.0, 4.0)) == 3.0 / 4.0 * 4.0


def test_substitute_homog_example():
    result = sp.substitute(sp.homog(3, 3), 2, 5)
    assert result.arity == 2
    assert result.num_terms == 10
    assert result[0, 0] == 125  # y^3 -> 125
    assert result[2, 0] == 5  # x^2*y -> 5*x^2
    assert result[0, 2] == 5  # y*z^2 -> 5*z^2, relabelled
    assert result[3, 0] == 1 and result[0, 3] == 1
    assert result == sp.parse(
        "125 +5*x^2 +x^3 +y^3 +x^2*y +25*x +5*x*y +25*y +x*y^2 +5*y^2", 2
    )


def test_substitute_value_one_deletes_dimension():
    p = sp.lone(1, 2) * sp.lone(2, 2)
    assert sp.substitute(p, 2, 1) == sp.lone(1, 1)


def test_substitute_errors():
    with pytest.raises(sp.DomainError):
        sp.substitute(sp.unit(2), 3, 1.0)
    with pytest.raises(sp.DomainError):
        sp.substitute(sp.unit(2), 0, 1.0)
    with pytest.raises(sp.DomainError):
        sp.substitute(sp.lone(1, 1), 1, 1.0)
    laurent = sp.new_spray([(1, -2)], [1.0])
    with pytest.raises(sp.SingularityError):
        sp.substitute(laurent, 2, 0.0)


def test_substitute_zero_value_drops_positive_powers():
    p = sp.new_spray([(1, 2), (3, 0)], [5.0, 7.0])
    assert sp.substitute(p, 2, 0.0) == sp.new_spray([(3,)], [7.0], arity=1)


def test_substitute_consistent_with_evaluate():
    rng = random.Random(20240817)
    for _ in range(200):
        arity = rng.randint(2, 3)
        p = random_poly(rng, arity)
        dim = rng.randint(1, arity)
        value = rng.uniform(0.5, 1.5)
        point = [rng.uniform(0.5, 1.5) for _ in range(arity - 1)]
        full_point = point[: dim - 1] + [value] + point[dim - 1 :]
        direct = sp.evaluate(p, full_point)
        via_subs = sp.evaluate(sp.substitute(p, dim, value), point)
        assert via_subs == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_deriv_constant_is_zero():
    assert sp.deriv(sp.unit(3), 2) == sp.zero(3)
    assert sp.deriv(sp.scalar_mul(sp.unit(1), 7.0), 1) == sp.zero(1)


def test_deriv_laurent_power_rule():
    p = sp.new_spray([(-1,)], [1.0], arity=1)
    assert sp.deriv(p, 1) == sp.new_spray([(-2,)], [-1.0], arity=1)


def test_deriv_order_zero_is_identity():
    s = sp.homog(2, 3)
    assert sp.deriv(s, 1, 0) == s


def test_deriv_errors():
    with pytest.raises(sp.DomainError):
        sp.deriv(sp.unit(2), 3)
    with pytest.raises(sp.DomainError):
        sp.deriv(sp.unit(2), 1, -1)


def test_deriv_matches_finite_differences():
    rng = random.Random(991)
    checked = 0
    while checked < 150:
        arity = rng.randint(1, 3)
        p = random_poly(rng, arity)
        dim = rng.randint(1, arity)
        point = [rng.uniform(0.7, 1.4) for _ in range(arity)]
        exact = sp.evaluate(sp.deriv(p, dim), point)
        if abs(exact) < 1e-2:
            continue
        h = 1e-5
        up = list(point)
        dn = list(point)
        up[dim - 1] += h
        dn[dim - 1] -= h
        approx = (sp.evaluate(p, up) - sp.evaluate(p, dn)) / (2 * h)
        assert approx == pytest.approx(exact, rel=1e-6)
        checked += 1


def test_aderiv_worked_example():
    p = (sp.xyz(3) + sp.linear([1, 2, 3])) ** 3
    result = sp.aderiv(p, (1, 2, 3))
    assert result == sp.new_spray([(1, 0, 0), (2, 1, 0)], [216, 108])
    assert result == sp.parse("+216*x +108*x^2*y", 3)


def test_aderiv_all_zero_orders():
    s = sp.homog(3, 2)
    assert sp.aderiv(s, (0, 0, 0)) == s


def test_aderiv_length_mismatch():
    with pytest.raises(sp.ArityError):
        sp.aderiv(sp.unit(3), (1, 2))


@given(polys(arity=2))
def test_mixed_partials_commute(p):
    assert sp.aderiv(p, (1, 1)) == sp.deriv(sp.deriv(p, 1), 2)
    assert sp.aderiv(p, (1, 1)) == sp.deriv(sp.deriv(p, 2), 1)


@given(poly_pairs(), st.tuples(st.floats(0.5, 2.0), st.floats(0.5, 2.0), st.floats(0.5, 2.0)))
def test_evaluate_is_linear(pq, point):
    p, q = pq
    at = point[: p.arity]
    lhs = sp.evaluate(p + q, at)
    rhs = sp.evaluate(p, at) + sp.evaluate(q, at)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


@given(poly_pairs(max_terms=4), st.tuples(st.floats(0.5, 2.0), st.floats(0.5, 2.0), st.floats(0.5, 2.0)))
def test_evaluate_is_multiplicative(pq, point):
    p, q = pq
    at = point[: p.arity]
    lhs = sp.evaluate(p * q, at)
    rhs = sp.evaluate(p, at) * sp.evaluate(q, at)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)
