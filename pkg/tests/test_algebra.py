from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from walled_brauer.algebra import (
    Element,
    expand_in_basis,
    linear_combination,
    multiply,
    multiply_all,
    murphy_element,
    permutation_element,
    specialize,
    star,
    y_element,
)
from walled_brauer.coeffs import Poly
from walled_brauer.combinatorics import enumerate_partitions, standard_tableaux
from walled_brauer.diagrams import arrows, e_diagram, enumerate_walled
from walled_brauer import linalg

X = Poly((0, 1))


def test_e_relation():
    e = Element.from_diagram(e_diagram(2, 1))
    assert multiply(e, e) == e.scale(X)


def test_y_quasi_idempotent():
    y2 = y_element((2,))
    assert multiply(y2, y2) == y2.scale(2)
    for lam in [(2, 1), (3,), (2, 2), (3, 1)]:
        y = y_element(lam)
        assert multiply(y, y) == y.scale(prod(factorial(p) for p in lam))


def test_y_transposition_sign():
    y = y_element((3,))
    s1 = permutation_element([2, 1, 3], "ddd")
    assert multiply(s1, y) == -y
    assert multiply(y, s1) == -y


def test_y_size_mismatch():
    with pytest.raises(ValueError):
        y_element((2, 1), 4)


@pytest.mark.parametrize("m", [3, 4])
def test_murphy_basis_is_a_basis(m):
    basis = [
        murphy_element(lam, s, t)
        for lam in enumerate_partitions(m)
        for s in standard_tableaux(lam)
        for t in standard_tableaux(lam)
    ]
    assert len(basis) == factorial(m)
    ds = enumerate_walled(m, 0)
    M = [[b.coefficient(d) for d in ds] for b in basis]
    assert linalg.rank(M) == factorial(m)


def test_murphy_star():
    lam = (2, 1)
    for s in standard_tableaux(lam):
        for t in standard_tableaux(lam):
            assert star(murphy_element(lam, s, t)) == murphy_element(lam, t, s)


def test_murphy_canonical_is_y():
    lam = (2, 2)
    (t,) = [t for t in standard_tableaux(lam) if t.rows == ((1, 2), (3, 4))]
    assert murphy_element(lam, t, t) == y_element(lam)


elements = st.lists(
    st.tuples(st.integers(0, 5), st.integers(-3, 3), st.integers(0, 2)), min_size=1, max_size=4
).map(
    lambda terms: linear_combination(
        [(Poly((0,) * k + (c,)) if k else c, Element.from_diagram(enumerate_walled(2, 1)[i])) for i, c, k in terms],
        arrows(2, 1),
        arrows(2, 1),
    )
)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_multiplication_associative_and_star_reverses(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert star(multiply(a, b)) == multiply(star(b), star(a))
    assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)


@settings(max_examples=40, deadline=None)
@given(elements, st.integers(-3, 4))
def test_specialization_is_a_homomorphism(a, n):
    e = Element.from_diagram(e_diagram(2, 1))
    lhs = specialize(multiply_all(a, e, a), n)
    rhs = multiply_all(specialize(a, n), specialize(e, n), specialize(a, n))
    assert specialize(lhs, n) == specialize(rhs, n)


def test_expand_roundtrip():
    basis = [Element.from_diagram(d) for d in enumerate_walled(1, 1)]
    a = linear_combination([(X, basis[1]), (Fraction(1, 2), basis[0])], "du", "du")
    assert expand_in_basis(a, basis) == [Fraction(1, 2), X]


def test_expand_rejects_outside_span():
    basis = [Element.from_diagram(enumerate_walled(1, 1)[0])]
    with pytest.raises(ValueError):
        expand_in_basis(Element.from_diagram(enumerate_walled(1, 1)[1]), basis)


def test_json_roundtrip():
    a = linear_combination(
        [(Poly((Fraction(1, 3), 2)), Element.from_diagram(d)) for d in enumerate_walled(2, 1)], "ddu", "ddu"
    )
    assert Element.from_json(a.to_json()) == a


def test_mixed_type_rejected():
    with pytest.raises(ValueError):
        Element.identity("du") + Element.identity("dd")
