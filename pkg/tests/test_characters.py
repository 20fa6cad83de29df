"""Character engine against oracles that never call Murnaghan-Nakayama."""

import json
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cohomlab.characters import (
    MAX_DEGREE,
    ClassFunction,
    branching_boxes,
    character_table,
    decompose,
    exterior_square,
    from_decomposition,
    induce,
    induce_trivial_from_transposition,
    inner_product,
    irreducible,
    is_character,
    load_table_cache,
    named_character,
    restrict,
    save_table_cache,
    tensor,
)
from cohomlab.errors import NotACharacterError, ResourceLimitError
from cohomlab.partitions import (
    Permutation,
    class_representative,
    class_size,
    irreducible_dimension,
    partitions_of,
)


def fixed_tabloids(alpha, mu):
    """Permutation character of the Young subgroup S_alpha at cycle type mu, by brute force."""
    if any(a < 0 for a in alpha):
        return 0
    alpha = [a for a in alpha if a]
    count = 0
    for blocks in product(range(len(alpha)), repeat=len(mu)):
        sums = [0] * len(alpha)
        for cycle, b in zip(mu, blocks):
            sums[b] += cycle
        count += sums == alpha
    return count


def jacobi_trudi(lam, mu):
    """chi^lam(mu) = sum_w sgn(w) pi^(lam_i - i + w(i))."""
    ell = len(lam)
    total = 0
    for w in permutations(range(ell)):
        sign = Permutation(tuple(x + 1 for x in w)).sign()
        alpha = [lam[i] - i + w[i] for i in range(ell)]
        total += sign * fixed_tabloids(alpha, mu)
    return total


@pytest.mark.parametrize("m", range(1, 7))
def test_table_matches_jacobi_trudi_oracle(m):
    table = character_table(m)
    for lam in partitions_of(m):
        for mu in partitions_of(m):
            assert table[lam][mu] == jacobi_trudi(lam, mu), (lam, mu)


@pytest.mark.parametrize("m", range(1, 9))
def test_orthogonality(m):
    classes = partitions_of(m)
    for a in classes:
        assert irreducible(a)[(1,) * m] == irreducible_dimension(a)
        for b in classes:
            assert inner_product(irreducible(a), irreducible(b)) == (a == b)
    table = character_table(m)
    for mu in classes:
        for nu in classes:
            col = sum(table[lam][mu] * table[lam][nu] for lam in classes)
            assert col == (factorial(m) // class_size(mu) if mu == nu else 0)


def test_size_ceiling():
    with pytest.raises(ResourceLimitError):
        character_table(MAX_DEGREE + 1)


def test_named_characters():
    for m in range(2, 8):
        fixed = ClassFunction(m, {mu: mu.count(1) for mu in partitions_of(m)})
        assert named_character(m, "standard") == fixed - named_character(m, "trivial")
        assert named_character(m, "sign") == irreducible((1,) * m)
        assert named_character(m, "regular") == sum(
            (irreducible_dimension(lam) * irreducible(lam) for lam in partitions_of(m)), ClassFunction.zero(m)
        )


def brute_exterior_square_of_permutation(m):
    out = {}
    for mu in partitions_of(m):
        g = class_representative(mu)
        trace = 0
        for a in range(1, m + 1):
            for b in range(a + 1, m + 1):
                if g(a) == a and g(b) == b:
                    trace += 1
                elif g(a) == b and g(b) == a:
                    trace -= 1
        out[mu] = trace
    return ClassFunction(m, out)


@pytest.mark.parametrize("m", range(2, 8))
def test_exterior_square_against_explicit_module(m):
    fixed = ClassFunction(m, {mu: mu.count(1) for mu in partitions_of(m)})
    assert exterior_square(fixed) == brute_exterior_square_of_permutation(m)


@pytest.mark.parametrize("m", range(2, 6))
def test_induction_from_transposition_counts_cosets(m):
    # fixed cosets of <(1 2)>: #{x : x^-1 g x in <(1 2)>} / 2
    tau = Permutation.transposition(1, 2, m)
    subgroup = {Permutation.identity(m), tau}
    group = [Permutation(im) for im in permutations(range(1, m + 1))]
    expected = {}
    for mu in partitions_of(m):
        g = class_representative(mu)
        expected[mu] = sum(x.inverse() * g * x in subgroup for x in group) // 2
    assert induce_trivial_from_transposition(m) == ClassFunction(m, expected)


def test_induction_from_transposition_values():
    for m in range(2, 8):
        f = induce_trivial_from_transposition(m)
        for mu in partitions_of(m):
            if mu == (1,) * m:
                assert f[mu] == factorial(m) // 2
            elif mu == (2,) + (1,) * (m - 2):
                assert f[mu] == factorial(m - 2)
            else:
                assert f[mu] == 0


def random_character(m):
    return st.lists(st.integers(0, 3), min_size=len(partitions_of(m)), max_size=len(partitions_of(m))).map(
        lambda mults: from_decomposition(m, zip(partitions_of(m), mults))
    )


@given(st.integers(2, 7).flatmap(lambda m: st.tuples(random_character(m - 1), random_character(m))))
def test_frobenius_reciprocity(pair):
    f, g = pair
    assert inner_product(induce(f), g) == inner_product(f, restrict(g))


@given(st.integers(1, 7).flatmap(random_character))
def test_decompose_roundtrip(f):
    parts = decompose(f)
    assert from_decomposition(f.m, parts) == f
    assert all(mult > 0 for _, mult in parts)
    assert ClassFunction.from_json(json.loads(json.dumps(f.to_json()))) == f


@given(st.integers(2, 6).flatmap(lambda m: st.tuples(random_character(m), random_character(m))))
def test_tensor_of_characters_is_character(pair):
    f, g = pair
    assert is_character(tensor(f, g))
    assert tensor(f, g)[(1,) * f.m] == f[(1,) * f.m] * g[(1,) * f.m]


@pytest.mark.parametrize("m", range(2, 9))
def test_branching(m):
    for lam in partitions_of(m):
        down = dict(decompose(restrict(irreducible(lam))))
        assert down == {mu: 1 for mu in branching_boxes(lam, "remove")}
        up = dict(decompose(induce(irreducible(lam))))
        assert up == {mu: 1 for mu in branching_boxes(lam, "add")}


def test_not_a_character():
    f = irreducible((2, 1)) - irreducible((3,))
    assert not is_character(f)
    with pytest.raises(NotACharacterError) as info:
        decompose(f)
    assert info.value.partition == (3,)
    half = ClassFunction(3, {mu: Fraction(1, 2) for mu in partitions_of(3)})
    with pytest.raises(NotACharacterError):
        decompose(half)


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "tables.json"
    character_table(5)
    save_table_cache(path)
    data = json.loads(path.read_text())
    assert data["version"] == 1 and "5" in data["tables"]
    assert load_table_cache(path) == 0  # already in memory
    stale = tmp_path / "stale.json"
    stale.write_text(json.dumps({"version": 0, "tables": data["tables"]}))
    assert load_table_cache(stale) == 0
    assert load_table_cache(tmp_path / "missing.json") == 0
