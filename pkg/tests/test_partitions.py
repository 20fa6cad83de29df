import random
from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cohomlab.errors import DomainError
from cohomlab.partitions import (
    Permutation,
    as_partition,
    class_representative,
    class_size,
    conjugate,
    coxeter_word,
    cycle_type,
    from_coxeter_word,
    irreducible_dimension,
    partitions_of,
    random_permutation,
    square_class,
)

# partition numbers p(1..10)
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def perms(n, start=1):
    return st.permutations(list(range(start, start + n))).map(lambda im: Permutation(tuple(im), start))


def test_partition_counts():
    assert [len(partitions_of(m)) for m in range(1, 11)] == PARTITION_COUNTS


def test_partitions_are_reverse_lex():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


@pytest.mark.parametrize("bad", [(), (0,), (1, 2), (2, -1)])
def test_as_partition_rejects(bad):
    with pytest.raises(DomainError):
        as_partition(bad)


def test_partitions_of_rejects_zero():
    with pytest.raises(DomainError):
        partitions_of(0)


@pytest.mark.parametrize("m", range(1, 7))
def test_class_sizes_match_enumeration(m):
    counts = Counter(cycle_type(Permutation(im)) for im in permutations(range(1, m + 1)))
    assert counts == {mu: class_size(mu) for mu in partitions_of(m)}
    assert sum(counts.values()) == factorial(m)


@pytest.mark.parametrize("m", range(1, 9))
def test_hook_lengths_square_sum(m):
    assert sum(irreducible_dimension(lam) ** 2 for lam in partitions_of(m)) == factorial(m)


def test_conjugate_is_involution():
    for m in range(1, 9):
        for lam in partitions_of(m):
            assert conjugate(conjugate(lam)) == lam
            assert irreducible_dimension(conjugate(lam)) == irreducible_dimension(lam)


@given(perms(6), perms(6), perms(6))
def test_composition_is_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p * q)(3) == p(q(3))


@given(perms(6))
def test_inverse_and_sign(p):
    assert (p * p.inverse()).is_identity()
    assert p.sign() == p.inverse().sign()
    assert cycle_type(p * p) == square_class(cycle_type(p))


@given(st.tuples(st.integers(1, 7), st.sampled_from([0, 1])).flatmap(lambda t: perms(*t)))
def test_coxeter_word_roundtrip(p):
    word = coxeter_word(p)
    assert from_coxeter_word(word, p.size, p.start) == p
    assert (-1) ** len(word) == p.sign()


@pytest.mark.parametrize("start", [0, 1])
def test_class_representative_has_requested_type(start):
    for m in range(1, 8):
        for mu in partitions_of(m):
            rep = class_representative(mu, start)
            assert rep.start == start and cycle_type(rep) == mu


def test_random_permutation_seeded():
    a = random_permutation(7, rng=random.Random(3))
    b = random_permutation(7, rng=random.Random(3))
    assert a == b and a.size == 7
