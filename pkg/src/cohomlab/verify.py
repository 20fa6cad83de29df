"""Verification suites run by ``cohomlab verify``."""

from __future__ import annotations

import json
import random
from functools import cache
from importlib import resources
from itertools import product
from math import factorial

from .actions import (
    antisymmetrizer,
    act_permutation,
    canonical_graded_character,
    extended_graded_character_matrix,
    two_partition_expansion,
    verify_extended_relations,
)
from .algebra import (
    Parity,
    admissible_basis,
    graded_dimension,
    is_admissible,
    normal_form,
    rewrite_normal_form,
)
from .characters import (
    branching_boxes,
    character_table,
    decompose,
    from_decomposition,
    induce,
    inner_product,
    irreducible,
    named_character,
    restrict,
)
from .partitions import Permutation, class_size, partitions_of
from .recursion import (
    check_recursion,
    deconed_graded_character,
    deconed_extended_character,
    extended_character_by_inversion,
    invariant_dimensions,
    locate_multiplicities,
    standard_sign_profile,
    verify_global_identities,
    verify_lowdegree_theorems,
)
from .report import Check

SUITES = ("characters", "rewriting", "tables", "global", "extended", "location", "lowdegree")
MATRIX_CEILING = 6


@cache
def golden_tables() -> dict:
    text = resources.files("cohomlab").joinpath("data/golden_tables.json").read_text()
    return json.loads(text)["tables"]


def _multiset(parts) -> dict[tuple[int, ...], int]:
    return {tuple(lam): int(mult) for lam, mult in parts}


def suite_tables(max_n: int) -> list[Check]:
    checks = []
    for family, rows in golden_tables().items():
        for n_key, views in rows.items():
            n = int(n_key)
            if n > max_n:
                continue
            for view, degrees in views.items():
                if family == "deconed":
                    gc = deconed_graded_character(n) if view == "canonical" else deconed_extended_character(n)
                else:
                    gc = (canonical_graded_character(n, family) if view == "canonical"
                          else extended_character_by_inversion(n, family))
                computed = gc.decompositions()
                expected = {k: _multiset(parts) for k, parts in enumerate(degrees)}
                actual = {k: _multiset(parts) for k, parts in computed.items() if parts}
                ok = actual == expected
                checks.append(Check(f"table {family} n={n} {view}", ok, "" if ok else f"computed {actual}"))
    return checks


def suite_characters(max_m: int) -> list[Check]:
    checks = []
    rng = random.Random(20240601)
    for m in range(1, max_m + 1):
        classes = partitions_of(m)
        table = character_table(m)
        chars = {lam: irreducible(lam) for lam in classes}
        ortho = all(
            inner_product(chars[a], chars[b]) == (1 if a == b else 0) for a in classes for b in classes
        )
        checks.append(Check(f"S_{m} row orthonormality", ortho))
        columns = all(
            sum(table[lam][mu] * table[lam][nu] for lam in classes)
            == (factorial(m) // class_size(mu) if mu == nu else 0)
            for mu in classes
            for nu in classes
        )
        checks.append(Check(f"S_{m} column orthogonality", columns))
        checks.append(Check(f"S_{m} sum of squared dimensions = m!",
                            sum(table[lam][(1,) * m] ** 2 for lam in classes) == factorial(m)))
        if m >= 2:
            branching = all(
                _multiset(decompose(restrict(chars[lam]))) == {mu: 1 for mu in branching_boxes(lam, "remove")}
                and _multiset(decompose(induce(chars[lam]))) == {mu: 1 for mu in branching_boxes(lam, "add")}
                for lam in classes
            )
            checks.append(Check(f"S_{m} branching rule", branching))
            small = partitions_of(m - 1)
            reciprocity = True
            for _ in range(3):
                f = from_decomposition(m - 1, [(lam, rng.randint(0, 3)) for lam in small])
                reciprocity &= all(
                    inner_product(induce(f), chars[lam]) == inner_product(f, restrict(chars[lam])) for lam in classes
                )
            checks.append(Check(f"S_{m} Frobenius reciprocity", reciprocity))
            checks.append(Check(
                f"S_{m} standard = Ind 1 - 1",
                named_character(m, "standard") == induce(named_character(m - 1, "trivial")) - named_character(m, "trivial"),
            ))
    return checks


def suite_rewriting(max_n: int) -> list[Check]:
    checks = []
    for parity in Parity:
        for n in range(2, min(max_n, 5) + 1):
            pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
            bad = 0
            for length in range(4):
                for word in product(pairs, repeat=length):
                    x = normal_form(word, n, parity)
                    if x != rewrite_normal_form(word, n, parity) or not all(is_admissible(m, n) for m in x.terms):
                        bad += 1
            checks.append(Check(f"n={n} {parity.value} words of length <= 3 reach the admissible span", bad == 0,
                                f"{bad} disagreements"))
        for n in range(2, min(max_n, 6) + 1):
            bad = 0
            total = 0
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    for k in range(j, n + 1):
                        total += 1
                        lhs = normal_form([(i, j), (i, k)], n, parity)
                        rhs = normal_form([(k, j), (i, k)], n, parity) - normal_form([(k, j), (i, j)], n, parity)
                        bad += lhs != rhs
            checks.append(Check(f"n={n} {parity.value} relation instances vanish", bad == 0, f"{total - bad}/{total}"))
    for n in range(1, max_n + 1):
        counts = [len(admissible_basis(n, k)) for k in range(n)]
        checks.append(Check(f"n={n} basis counts = elementary symmetric polynomials",
                            counts == [graded_dimension(n, k) for k in range(n)], str(counts)))
        checks.append(Check(f"n={n} total dimension = n!", sum(counts) == factorial(n)))
    return checks


def suite_global(max_n: int) -> list[Check]:
    checks = []
    for n in range(2, max_n + 1):
        for parity in Parity:
            if n == 2 and not parity.odd:
                continue
            checks.extend(verify_global_identities(n, parity))
    return checks


def suite_extended(max_n: int) -> list[Check]:
    checks = []
    for n in range(3, min(max_n, MATRIX_CEILING) + 1):
        checks.extend(verify_extended_relations(n))
    for n in range(2, min(max_n, MATRIX_CEILING) + 1):
        matrix = extended_graded_character_matrix(n)
        inverted = extended_character_by_inversion(n, Parity.ODD)
        checks.append(Check(f"n={n} odd extended: matrices = inversion", matrix.degrees == inverted.degrees))
        restricted = matrix.restricted().degrees == canonical_graded_character(n, Parity.ODD).degrees
        checks.append(Check(f"n={n} odd extended restricts to canonical", restricted))
        try:
            matrix.decompositions()
            genuine = True
        except ValueError:
            genuine = False
        checks.append(Check(f"n={n} odd extended traces form a genuine character", genuine))
    for n in range(3, max_n + 1):
        for parity in Parity:
            checks.extend(c for c in check_recursion(n, parity) if not c.passed or "recursion" in c.name)
        if n - 1 <= MATRIX_CEILING:
            checks.extend(check_recursion(n, Parity.ODD, source="matrix"))
    return checks


def suite_location(max_n: int) -> list[Check]:
    checks = []
    for n in range(3, max_n + 1):
        dec = deconed_graded_character(n)
        found = locate_multiplicities((n - 1, 1), dec)
        expected = {k: (1 if 0 < k < n - 1 else 0) for k in dec.degrees}
        checks.append(Check(f"n={n} deconed: one standard per positive degree", found == expected, str(found)))
        ss = locate_multiplicities((2,) + (1,) * (n - 2), dec)
        top = {k: (1 if k == n - 2 else 0) for k in dec.degrees}
        checks.append(Check(f"n={n} deconed: standard x sign only in top degree", ss == top, str(ss)))
        total = dec.total()
        counts = (
            inner_product(total, named_character(n, "trivial")),
            inner_product(total, irreducible((n - 1, 1))),
            inner_product(total, named_character(n, "sign")),
            inner_product(total, irreducible((2,) + (1,) * (n - 2))),
        )
        checks.append(Check(f"n={n} deconed totals: trivial, standard, sign, standard x sign",
                            counts == (1, n - 2, 0, 1), str(counts)))

        odd = canonical_graded_character(n, Parity.ODD)
        found = locate_multiplicities((n - 1, 1), odd)
        expected = {k: (1 if k >= 1 else 0) for k in odd.degrees}
        checks.append(Check(f"n={n} odd: one standard in each degree k >= 1", found == expected, str(found)))
    for n in range(2, max_n + 1):
        odd = canonical_graded_character(n, Parity.ODD)
        sign = locate_multiplicities((1,) * n, odd)
        expected = {k: (1 if k == n // 2 else 0) for k in odd.degrees}
        checks.append(Check(f"n={n} odd: sign exactly in degree {n // 2}", sign == expected, str(sign)))
        even_sign = locate_multiplicities((1,) * n, canonical_graded_character(n, Parity.EVEN))
        checks.append(Check(f"n={n} even: no sign anywhere", not any(even_sign.values()), str(even_sign)))
        x = antisymmetrizer(n)
        k = n // 2
        weight = factorial(k) * 2**k
        shape = bool(x) and x.degrees() == {k} and all(abs(c) == weight for c in x.terms.values())
        checks.append(Check(f"n={n} antisymmetrizer nonzero with coefficients +-{weight}", shape,
                            f"{len(x.terms)} monomials"))
        checks.append(Check(f"n={n} antisymmetrizer = pairing expansion", x == two_partition_expansion(n)))
        equivariant = all(
            act_permutation(Permutation.transposition(j, j + 1, n), x) == -x for j in range(1, n)
        )
        checks.append(Check(f"n={n} antisymmetrizer spans a sign representation", equivariant))
    for n in range(4, max_n + 1):
        odd = canonical_graded_character(n, Parity.ODD)
        found = locate_multiplicities((2,) + (1,) * (n - 2), odd)
        expected = standard_sign_profile(n)
        checks.append(Check(f"n={n} odd: standard x sign profile", found == expected, str(found)))
    for n in range(3, max_n + 1):
        even = invariant_dimensions(n, Parity.EVEN)
        checks.append(Check(f"n={n} even quotient dimensions 1,2,...,2,1",
                            list(even.values()) == [1] + [2] * (n - 2) + [1], str(list(even.values()))))
        odd = invariant_dimensions(n, Parity.ODD)
        checks.append(Check(f"n={n} odd quotient dimensions all 1", set(odd.values()) == {1}, str(list(odd.values()))))
    return checks


def suite_lowdegree(max_n: int) -> list[Check]:
    checks = []
    for n in range(2, max_n + 1):
        checks.extend(verify_lowdegree_theorems(n))
    if max_n >= 6:
        s6 = deconed_graded_character(6)[2]
        checks.append(Check(
            "n=6 deconed H^2 as S_6-module",
            s6 == from_decomposition(6, [((4, 1, 1), 2), ((3, 2, 1), 2), ((3, 3), 1), ((5, 1), 1), ((4, 2), 1)]),
        ))
    return checks


def run_suite(name: str, max_n: int) -> list[Check]:
    if name == "characters":
        return suite_characters(max(max_n + 1, 2))
    return {
        "rewriting": suite_rewriting,
        "tables": suite_tables,
        "global": suite_global,
        "extended": suite_extended,
        "location": suite_location,
        "lowdegree": suite_lowdegree,
    }[name](max_n)


def run_suites(names, max_n: int) -> dict[str, list[Check]]:
    if "all" in names:
        names = SUITES
    return {name: run_suite(name, max_n) for name in names}
