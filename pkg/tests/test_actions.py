from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohomlab.actions import (
    act_permutation,
    act_s0,
    action_matrix,
    antisymmetrizer,
    canonical_graded_character,
    extended_graded_character_matrix,
    generator_matrix,
    permutation_trace,
    probe_even_extension,
    two_partition_expansion,
    verify_extended_relations,
)
from cohomlab.algebra import AlgebraElement, Parity, admissible_basis, format_element, normal_form
from cohomlab.characters import decompose, exterior_square, standard_character
from cohomlab.errors import DomainError, ResourceLimitError, UnsupportedOperationError
from cohomlab.partitions import Permutation, class_representative, cycle_type, partitions_of


def perms(n, start=1):
    return st.permutations(list(range(start, start + n))).map(lambda im: Permutation(tuple(im), start))


def odd_elements(n):
    basis = [m for k in range(n) for m in admissible_basis(n, k)]
    return st.dictionaries(st.sampled_from(basis), st.integers(-3, 3), max_size=4).map(
        lambda terms: AlgebraElement(n, Parity.ODD, terms)
    )


@given(st.sampled_from(list(Parity)), perms(4), perms(4), st.data())
def test_canonical_action_is_multiplicative_homomorphism(parity, g, h, data):
    basis = [m for k in range(4) for m in admissible_basis(4, k)]
    terms = st.dictionaries(st.sampled_from(basis), st.integers(-3, 3), max_size=4)
    x = AlgebraElement(4, parity, data.draw(terms))
    y = AlgebraElement(4, parity, data.draw(terms))
    assert act_permutation(g * h, x) == act_permutation(g, act_permutation(h, x))
    assert act_permutation(g, x * y) == act_permutation(g, x) * act_permutation(g, y)


@given(perms(4, start=0), perms(4, start=0))
def test_extended_matrices_form_representation(g, h):
    for k in range(3):
        assert (action_matrix(g, 3, k, "odd") @ action_matrix(h, 3, k, "odd")) == action_matrix(g * h, 3, k, "odd")


@given(odd_elements(4), odd_elements(4))
def test_s0_is_algebra_involution(x, y):
    assert act_s0(act_s0(x)) == x
    assert act_s0(x * y) == act_s0(x) * act_s0(y)


def test_s0_formulas():
    n = 3
    a = lambda i, j: normal_form([(i, j)], n, "odd")
    assert act_s0(a(2, 3)) == a(2, 3) - a(1, 3) + a(1, 2)
    assert act_s0(a(1, 3)) == -a(1, 3)


def test_small_traces():
    # degree one, n = 3: H^1 is V_(2,1) + V_(1,1,1) for S_3; ext is V_(2,1,1) for S_4
    t12 = Permutation.transposition(1, 2, 3)
    assert permutation_trace(t12, 3, 1, "odd") == -1
    assert action_matrix(t12, 3, 1, "odd").trace() == -1
    assert generator_matrix(0, 3, 1, "odd").trace() == -1
    assert permutation_trace(t12, 3, 1, "even") == 1


@pytest.mark.parametrize("parity", list(Parity))
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sparse_traces_match_dense_matrices(n, parity):
    for k in range(n):
        for mu in partitions_of(n):
            g = class_representative(mu)
            assert permutation_trace(g, n, k, parity) == action_matrix(g, n, k, parity).trace()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_traces_are_class_functions(n):
    # every element of a class has the same trace as the representative
    chi = canonical_graded_character(n, "odd")
    for images in permutations(range(1, n + 1)):
        g = Permutation(images)
        for k in range(n):
            assert permutation_trace(g, n, k, "odd") == chi[k][cycle_type(g)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_extended_action_relations(n):
    checks = verify_extended_relations(n)
    assert all(c.passed for c in checks), [c.line() for c in checks if not c.passed]


def test_even_probe_shows_formulas_fail():
    assert all(c.passed for c in probe_even_extension(2))
    assert not all(c.passed for c in probe_even_extension(3))
    with pytest.raises(UnsupportedOperationError):
        verify_extended_relations(3, "even")
    with pytest.raises(UnsupportedOperationError):
        act_s0(AlgebraElement.one(3, Parity.EVEN))
    with pytest.raises(UnsupportedOperationError):
        action_matrix(Permutation.transposition(0, 1, 4, start=0), 3, 1, "even")


@pytest.mark.parametrize("n", range(2, 6))
def test_extended_restricts_and_is_genuine(n):
    ext = extended_graded_character_matrix(n)
    assert ext.restricted().degrees == canonical_graded_character(n, "odd").degrees
    for k in range(n):
        decompose(ext[k])


@pytest.mark.parametrize("n", range(2, 7))
def test_degree_one_is_exterior_square(n):
    ext = extended_graded_character_matrix(n, max_degree=1)
    assert ext[1] == exterior_square(standard_character(n + 1))


@pytest.mark.parametrize("n", range(2, 8))
def test_antisymmetrizer_matches_pairing_oracle(n):
    x = antisymmetrizer(n)
    assert x == two_partition_expansion(n)
    assert x.degrees() == {n // 2}
    for j in range(1, n):
        assert act_permutation(Permutation.transposition(j, j + 1, n), x) == -x


def test_antisymmetrizer_small():
    assert format_element(antisymmetrizer(2)) == "2*A[1,2]"
    assert format_element(antisymmetrizer(4)) == "8*A[1,2]A[3,4] - 8*A[1,3]A[2,4] + 8*A[2,3]A[1,4]"
    five = antisymmetrizer(5)
    assert len(five.terms) == 15 and {abs(c) for c in five.terms.values()} == {8}
    with pytest.raises(UnsupportedOperationError):
        antisymmetrizer(4, "even")


def test_matrix_is_exact_and_readonly():
    m = action_matrix(Permutation.transposition(0, 1, 5, start=0), 4, 2, "odd")
    arr = m.to_array()
    assert arr.dtype == np.int64
    assert np.array_equal(arr @ arr, np.eye(m.dimension, dtype=np.int64))


def test_limits():
    with pytest.raises(ResourceLimitError):
        canonical_graded_character(9, "odd")
    with pytest.raises(DomainError):
        act_permutation(Permutation.identity(3), AlgebraElement.one(4, Parity.ODD))
