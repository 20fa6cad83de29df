import json
from itertools import combinations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cohomlab.algebra import (
    AlgebraElement,
    Parity,
    admissible_basis,
    format_element,
    graded_dimension,
    is_admissible,
    multiply,
    normal_form,
    parse_element,
    poincare_coefficients,
    rewrite_normal_form,
)
from cohomlab.errors import DomainError

PARITIES = list(Parity)


def elementary_symmetric(n):
    """Coefficients of prod_{j=1}^{n-1} (1 + j t), expanded by hand."""
    coeffs = [1]
    for j in range(1, n):
        coeffs = [a + j * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def brute_admissible(n, k):
    """Choose k distinct tops j, then any i < j for each."""
    out = []
    for tops in combinations(range(2, n + 1), k):
        for bottoms in product(*(range(1, j) for j in tops)):
            out.append(tuple(zip(bottoms, tops)))
    return sorted(out)


@pytest.mark.parametrize("n", range(1, 9))
def test_dimension_oracle(n):
    dims = [len(admissible_basis(n, k)) for k in range(n)]
    assert dims == elementary_symmetric(n) == list(poincare_coefficients(n))
    assert sum(dims) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_matches_brute_force(n):
    for k in range(n):
        assert list(admissible_basis(n, k)) == brute_admissible(n, k)
    assert admissible_basis(n, n) == ()
    assert graded_dimension(n, -1) == 0


def test_admissibility():
    assert is_admissible(((1, 2), (1, 3)), 3)
    assert not is_admissible(((1, 3), (2, 3)), 3)
    assert not is_admissible(((1, 3), (1, 2)), 3)
    assert not is_admissible(((2, 1),), 3)


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_fast_and_literal_rewriting_agree(n, parity):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for length in range(4):
        for word in product(pairs, repeat=length):
            assert normal_form(word, n, parity) == rewrite_normal_form(word, n, parity), word


@pytest.mark.parametrize("parity", PARITIES)
def test_presentation_relations(parity):
    n = 4
    sign = 1 if parity is Parity.EVEN else -1
    for i, j in product(range(1, n + 1), repeat=2):
        if i != j:
            assert normal_form([(i, j)], n, parity) == sign * normal_form([(j, i)], n, parity)
        assert not normal_form([(i, i)], n, parity)
        for h, k in product(range(1, n + 1), repeat=2):
            swap = -1 if parity is Parity.EVEN else 1
            assert normal_form([(i, j), (h, k)], n, parity) == swap * normal_form([(h, k), (i, j)], n, parity)
        for k in range(j, n + 1):
            lhs = normal_form([(i, j), (i, k)], n, parity)
            rhs = normal_form([(k, j), (i, k)], n, parity) - normal_form([(k, j), (i, j)], n, parity)
            assert lhs == rhs


@pytest.mark.parametrize("parity", PARITIES)
def test_arnold_relation(parity):
    for i, j, k in combinations(range(1, 6), 3):
        x = (normal_form([(i, j), (j, k)], 5, parity) + normal_form([(j, k), (k, i)], 5, parity)
             + normal_form([(k, i), (i, j)], 5, parity))
        assert not x


def test_squares_vanish():
    odd = normal_form([(1, 2), (1, 2)], 3, "odd")
    even = normal_form([(1, 2), (1, 2)], 3, "even")
    assert not odd and not even


def elements(n, parity, max_degree=None):
    top = n - 1 if max_degree is None else max_degree
    basis = [m for k in range(top + 1) for m in admissible_basis(n, k)]
    return st.dictionaries(st.sampled_from(basis), st.integers(-3, 3), max_size=5).map(
        lambda terms: AlgebraElement(n, parity, terms)
    )


def homogeneous(n, parity, k):
    return st.dictionaries(st.sampled_from(admissible_basis(n, k)), st.integers(-3, 3), max_size=4).map(
        lambda terms: AlgebraElement(n, parity, terms)
    )


@given(st.sampled_from(PARITIES).flatmap(lambda p: st.tuples(elements(4, p), elements(4, p), elements(4, p))))
def test_associative_and_distributive(triple):
    x, y, z = triple
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    one = AlgebraElement.one(4, x.parity)
    assert one * x == x == x * one


@given(st.sampled_from(PARITIES), st.integers(0, 3), st.integers(0, 3), st.data())
def test_graded_commutativity(parity, p, q, data):
    x = data.draw(homogeneous(4, parity, p))
    y = data.draw(homogeneous(4, parity, q))
    sign = 1 if parity is Parity.ODD else (-1) ** (p * q)
    assert x * y == sign * (y * x)


@given(st.sampled_from(PARITIES).flatmap(lambda p: elements(5, p)))
def test_text_and_json_roundtrip(x):
    assert parse_element(format_element(x), x.n, x.parity) == x
    assert AlgebraElement.from_json(json.loads(json.dumps(x.to_json()))) == x


def test_format():
    x = normal_form([(3, 4), (1, 2)], 4, "odd") * 8 - normal_form([(1, 3), (2, 4)], 4, "odd") * 8
    assert format_element(x) == "8*A[1,2]A[3,4] - 8*A[1,3]A[2,4]"
    assert format_element(AlgebraElement(3, Parity.ODD)) == "0"
    assert format_element(AlgebraElement.one(3, Parity.ODD)) == "1"


def test_multiply_checks_compatibility():
    with pytest.raises(DomainError):
        multiply(AlgebraElement.one(3, Parity.ODD), AlgebraElement.one(4, Parity.ODD))
    with pytest.raises(DomainError):
        AlgebraElement.one(3, Parity.ODD) + AlgebraElement.one(3, Parity.EVEN)


def test_rejects_bad_input():
    with pytest.raises(DomainError):
        AlgebraElement(3, Parity.ODD, {((1, 3), (2, 3)): 1})
    with pytest.raises(DomainError):
        normal_form([(1, 5)], 3, "odd")
    with pytest.raises(DomainError):
        Parity.parse("sideways")
    with pytest.raises(DomainError):
        parse_element("A[1,2] ? A[1,3]", 3, "odd")


def test_parity_from_dimension():
    assert Parity.from_d(2) is Parity.EVEN and Parity.from_d(3) is Parity.ODD
    with pytest.raises(DomainError):
        Parity.from_d(1)
