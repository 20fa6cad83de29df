"""Symmetric group actions on the graded pieces of H*(C_n(d)).

The canonical S_n action relabels generator indices.  For odd parity the
transposition s_0 = (0 1) extends it to an action of S_{n+1} on the ground
set {0, ..., n}:

* ``(0 1) A[i,j] = A[i,j] - A[1,j] + A[1,i]`` for ``1 < i < j``
* ``(0 1) A[1,j] = -A[1,j]``

Elements of S_{n+1} are evaluated through a Coxeter word in s_0, ..., s_{n-1}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cache
from itertools import permutations
from math import factorial
from typing import Sequence

import numpy as np

from .algebra import (
    AlgebraElement,
    Generator,
    Monomial,
    Parity,
    _times_word,
    admissible_basis,
    basis_index,
    canonical_generator,
    graded_dimension,
)
from .characters import ClassFunction
from .errors import DomainError, ResourceLimitError, UnsupportedOperationError
from .graded import GradedCharacter
from .report import Check
from .partitions import Permutation, class_representative, coxeter_word, partitions_of

MAX_POINTS = 8


def _require_points(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > MAX_POINTS:
        raise ResourceLimitError(f"n = {n} exceeds the configured maximum {MAX_POINTS}")


def _relabel_monomial(sigma: Permutation, mono: Monomial, n: int, parity: Parity) -> dict[Monomial, int]:
    word = []
    for i, j in mono:
        word.append(canonical_generator(sigma(i), sigma(j), n, parity))
    return _times_word({(): 1}, word, parity.odd)


def act_permutation(sigma: Permutation, x: AlgebraElement) -> AlgebraElement:
    """sigma . A[i,j] = A[sigma(i), sigma(j)], extended multiplicatively."""
    if sigma.start != 1 or sigma.size != x.n:
        raise DomainError(f"permutation must act on {{1..{x.n}}}")
    out: dict[Monomial, int] = defaultdict(int)
    for mono, coef in x.terms.items():
        for res, v in _relabel_monomial(sigma, mono, x.n, x.parity).items():
            out[res] += coef * v
    return AlgebraElement(x.n, x.parity, out)


def s0_image(g: Generator) -> dict[Generator, int]:
    """Image of a canonical generator A[i,j] (i < j) under the transposition (0 1)."""
    i, j = g
    if i == 1:
        return {(1, j): -1}
    return {(i, j): 1, (1, j): -1, (1, i): 1}


def _s0_word_image(word: Sequence[tuple[Generator, int]], n: int, odd: bool = True) -> dict[Monomial, int]:
    current: dict[Monomial, int] = {(): 1}
    for g, sign in word:
        nxt: dict[Monomial, int] = defaultdict(int)
        for h, c in s0_image(g).items():
            for mono, v in _times_word(current, [(h, sign * c)], odd).items():
                nxt[mono] += v
        current = {m: v for m, v in nxt.items() if v}
        if not current:
            break
    return current


def act_s0_word(word: Sequence[Sequence[int]], n: int, parity: Parity | str = Parity.ODD) -> AlgebraElement:
    """Apply (0 1) factor by factor to a word in the free algebra, then normal-form.

    Even parity is accepted only for the experimental probe of the formulas.
    """
    parity = Parity.parse(parity)
    canon = []
    for i, j in word:
        c = canonical_generator(i, j, n, parity)
        if c is None:
            return AlgebraElement(n, parity)
        canon.append(c)
    return AlgebraElement(n, parity, _s0_word_image(canon, n, parity.odd))


def act_s0(x: AlgebraElement, parity: Parity | str | None = None) -> AlgebraElement:
    parity = Parity.parse(parity) if parity is not None else x.parity
    if not parity.odd or not x.parity.odd:
        raise UnsupportedOperationError("the explicit (0 1) action is only defined for odd parity")
    out: dict[Monomial, int] = defaultdict(int)
    for mono, coef in x.terms.items():
        for res, v in _s0_word_image([(g, 1) for g in mono], x.n).items():
            out[res] += coef * v
    return AlgebraElement(x.n, x.parity, out)


# --- matrices ----------------------------------------------------------------------


@dataclass(frozen=True)
class ActionMatrix:
    """Matrix of a group element on ``admissible_basis(n, k)``; column t is the image of basis element t."""

    n: int
    k: int
    parity: Parity
    view: str
    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def trace(self) -> int:
        return sum(self.entries[t][t] for t in range(len(self.entries)))

    def to_array(self) -> np.ndarray:
        """int64 when every entry fits comfortably, Python integers otherwise."""
        return _as_int_array(self.entries)

    def __matmul__(self, other: ActionMatrix) -> ActionMatrix:
        product = _exact_matmul(_as_int_array(self.entries), _as_int_array(other.entries))
        return ActionMatrix(self.n, self.k, self.parity, self.view, _to_tuples(product))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _as_int_array(rows) -> np.ndarray:
    size = len(rows)
    arr = np.array(rows, dtype=object).reshape(size, size)
    if size and max(abs(int(v)) for v in arr.flat) < 2**31:
        return arr.astype(np.int64)
    return arr


def _to_tuples(arr: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in arr)


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product that falls back to Python integers when int64 could overflow."""
    if a.size == 0:
        return a.copy()
    if a.dtype == np.int64 and b.dtype == np.int64:
        bound = int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[1]
        if bound < 2**62:
            return a @ b
    return np.array(a, dtype=object) @ np.array(b, dtype=object)


def _columns_to_array(columns: Sequence[dict[Monomial, int]], n: int, k: int) -> np.ndarray:
    index = basis_index(n, k)
    dim = len(index)
    arr = np.zeros((dim, dim), dtype=np.int64)
    for col, image in enumerate(columns):
        for mono, v in image.items():
            arr[index[mono], col] = v
    return arr


@cache
def _generator_array(j: int, n: int, k: int, parity: Parity) -> np.ndarray:
    """Matrix of s_j = (j, j+1) on degree k; j = 0 is the extra transposition (0 1)."""
    basis = admissible_basis(n, k)
    if j == 0:
        if not parity.odd:
            raise UnsupportedOperationError("the extended action is only realised for odd parity")
        columns = [_s0_word_image([(g, 1) for g in b], n) for b in basis]
    else:
        sigma = Permutation.transposition(j, j + 1, n)
        columns = [_relabel_monomial(sigma, b, n, parity) for b in basis]
    arr = _columns_to_array(columns, n, k)
    arr.setflags(write=False)
    return arr


def _element_array(g: Permutation, n: int, k: int, parity: Parity) -> np.ndarray:
    if g.start == 1:
        if g.size != n:
            raise DomainError(f"permutation must act on {{1..{n}}}")
        columns = [_relabel_monomial(g, b, n, parity) for b in admissible_basis(n, k)]
        return _columns_to_array(columns, n, k)
    if g.start == 0:
        if g.size != n + 1:
            raise DomainError(f"permutation must act on {{0..{n}}}")
        if not parity.odd:
            raise UnsupportedOperationError("the extended action is only realised for odd parity")
        dim = graded_dimension(n, k)
        result = np.eye(dim, dtype=np.int64)
        for j in coxeter_word(g):
            result = _exact_matmul(result, _generator_array(j, n, k, parity))
        return result
    raise DomainError("ground set must be {1..n} or {0..n}")


def action_matrix(g: Permutation, n: int, k: int, parity: Parity | str) -> ActionMatrix:
    parity = Parity.parse(parity)
    _require_points(n)
    view = "extended" if g.start == 0 else "canonical"
    return ActionMatrix(n, k, parity, view, _to_tuples(_element_array(g, n, k, parity)))


def generator_matrix(j: int, n: int, k: int, parity: Parity | str) -> ActionMatrix:
    parity = Parity.parse(parity)
    view = "extended" if j == 0 else "canonical"
    return ActionMatrix(n, k, parity, view, _to_tuples(_generator_array(j, n, k, parity)))


def permutation_trace(g: Permutation, n: int, k: int, parity: Parity | str) -> int:
    """Trace of g on degree k, without materialising the matrix for canonical elements."""
    parity = Parity.parse(parity)
    if g.start == 1:
        if g.size != n:
            raise DomainError(f"permutation must act on {{1..{n}}}")
        return sum(_relabel_monomial(g, b, n, parity).get(b, 0) for b in admissible_basis(n, k))
    return int(np.trace(_element_array(g, n, k, parity)))


# --- graded characters from traces ----------------------------------------------------


def _degree_range(n: int, max_degree: int | None) -> range:
    top = n - 1 if max_degree is None else min(max_degree, n - 1)
    return range(0, top + 1)


def canonical_traces(n: int, parity: Parity | str, max_degree: int | None = None) -> dict[int, ClassFunction]:
    """Character of S_n on each degree, from traces at canonical class representatives."""
    parity = Parity.parse(parity)
    _require_points(n)
    return {k: _canonical_trace_degree(n, k, parity) for k in _degree_range(n, max_degree)}


@cache
def _canonical_trace_degree(n: int, k: int, parity: Parity) -> ClassFunction:
    return ClassFunction(
        n, {mu: permutation_trace(class_representative(mu, 1), n, k, parity) for mu in partitions_of(n)}
    )


def extended_traces(n: int, parity: Parity | str = Parity.ODD, max_degree: int | None = None) -> dict[int, ClassFunction]:
    """Character of S_{n+1} (ground set {0..n}) on each degree, from action matrices."""
    parity = Parity.parse(parity)
    if not parity.odd:
        raise UnsupportedOperationError("extended action matrices exist only for odd parity")
    _require_points(n)
    return {k: _extended_trace_degree(n, k) for k in _degree_range(n, max_degree)}


@cache
def _extended_trace_degree(n: int, k: int) -> ClassFunction:
    return ClassFunction(
        n + 1,
        {mu: permutation_trace(class_representative(mu, 0), n, k, Parity.ODD) for mu in partitions_of(n + 1)},
    )


# --- the sign representation --------------------------------------------------------------


def antisymmetrizer(n: int, parity: Parity | str = Parity.ODD) -> AlgebraElement:
    """sum over sigma in S_n of sign(sigma) A[s1,s2] A[s3,s4] ... over floor(n/2) disjoint pairs."""
    parity = Parity.parse(parity)
    if not parity.odd:
        raise UnsupportedOperationError("no copy of the sign representation exists for even parity")
    if n < 2:
        raise DomainError("the antisymmetrizer needs n >= 2")
    _require_points(n)
    k = n // 2
    out: dict[Monomial, int] = defaultdict(int)
    for images in permutations(range(1, n + 1)):
        sign = Permutation(images).sign()
        word = [canonical_generator(images[2 * s], images[2 * s + 1], n, parity) for s in range(k)]
        for mono, v in _times_word({(): 1}, word, True).items():
            out[mono] += sign * v
    return AlgebraElement(n, parity, out)


def two_partition_expansion(n: int) -> AlgebraElement:
    """m * sum over pairings Lambda of sign(sigma_Lambda) sigma_Lambda(A[1,2] A[3,4] ...), m = k! 2^k.

    For odd n the pairings cover n - 1 of the points; the unpaired point is
    sent last by sigma_Lambda.
    """
    k = n // 2
    weight = factorial(k) * 2**k
    out: dict[Monomial, int] = {}
    for leftover in ([None] if n % 2 == 0 else range(1, n + 1)):
        points = [p for p in range(1, n + 1) if p != leftover]
        for pairing in _pairings(points):
            blocks = sorted((min(b), max(b)) for b in pairing)
            blocks.sort(key=lambda b: b[1])
            images = [x for b in blocks for x in b]
            if leftover is not None:
                images.append(leftover)
            sign = Permutation(tuple(images)).sign()
            mono = tuple(blocks)
            out[mono] = out.get(mono, 0) + weight * sign
    return AlgebraElement(n, Parity.ODD, out)


def _pairings(points: list[int]):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for t, partner in enumerate(rest):
        remaining = rest[:t] + rest[t + 1:]
        for tail in _pairings(remaining):
            yield [(first, partner)] + tail


def canonical_graded_character(n: int, parity: Parity | str, max_degree: int | None = None) -> GradedCharacter:
    parity = Parity.parse(parity)
    return GradedCharacter(n, parity, "canonical", canonical_traces(n, parity, max_degree))


def extended_graded_character_matrix(
    n: int, parity: Parity | str = Parity.ODD, max_degree: int | None = None
) -> GradedCharacter:
    parity = Parity.parse(parity)
    return GradedCharacter(n, parity, "extended", extended_traces(n, parity, max_degree))


# --- structural verification of the extended action -------------------------------------


def rel3_instances(n: int):
    """Index triples (i, j, k) with j <= k of the relation A[i,j] A[i,k] = A[k,j] (A[i,k] - A[i,j])."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(j, n + 1):
                yield i, j, k


def _rel3_case(i: int, j: int, k: int) -> str:
    if i == 1:
        return "i=1"
    if j == 1 or k == 1:
        return "j=1"
    return "i,j,k!=1"


def _ideal_invariance(n: int, parity: Parity) -> dict[str, tuple[int, int]]:
    """Per index case: (instances checked, instances where (0 1) preserves the relation)."""
    tally: dict[str, list[int]] = {"i=1": [0, 0], "j=1": [0, 0], "i,j,k!=1": [0, 0]}
    for i, j, k in rel3_instances(n):
        lhs = act_s0_word([(i, j), (i, k)], n, parity)
        rhs = act_s0_word([(k, j), (i, k)], n, parity) - act_s0_word([(k, j), (i, j)], n, parity)
        entry = tally[_rel3_case(i, j, k)]
        entry[0] += 1
        entry[1] += lhs == rhs
    return {case: (total, good) for case, (total, good) in tally.items()}


def verify_extended_relations(n: int, parity: Parity | str = Parity.ODD) -> list[Check]:
    """Check that (0 1) together with the canonical action defines an S_{n+1} action."""
    parity = Parity.parse(parity)
    if not parity.odd:
        raise UnsupportedOperationError("use probe_even_extension for even parity")
    _require_points(n)
    checks = []
    bad = [
        b for b in admissible_basis(n, 1)
        if act_s0(act_s0(AlgebraElement(n, parity, {b: 1}))) != AlgebraElement(n, parity, {b: 1})
    ]
    checks.append(Check(f"n={n} (0 1)^2 = 1 on degree-one generators", not bad, f"{len(admissible_basis(n, 1))} generators"))
    for k in range(n):
        dim = graded_dimension(n, k)
        eye = np.eye(dim, dtype=np.int64)
        s0 = _generator_array(0, n, k, parity)
        checks.append(Check(f"n={n} k={k} s0 s0 = 1", np.array_equal(_exact_matmul(s0, s0), eye), f"dim {dim}"))
        if n >= 2:
            s1 = _generator_array(1, n, k, parity)
            lhs = _exact_matmul(_exact_matmul(s0, s1), s0)
            rhs = _exact_matmul(_exact_matmul(s1, s0), s1)
            checks.append(Check(f"n={n} k={k} s0 s1 s0 = s1 s0 s1", np.array_equal(lhs, rhs), f"dim {dim}"))
        commuting = [
            j for j in range(2, n)
            if np.array_equal(
                _exact_matmul(s0, _generator_array(j, n, k, parity)),
                _exact_matmul(_generator_array(j, n, k, parity), s0),
            )
        ]
        checks.append(Check(
            f"n={n} k={k} s0 sj = sj s0 for 2 <= j <= {n - 1}",
            len(commuting) == max(n - 2, 0),
            f"{len(commuting)} of {max(n - 2, 0)} commute",
        ))
    for case, (total, good) in _ideal_invariance(n, parity).items():
        checks.append(Check(f"n={n} ideal invariance, case {case}", good == total, f"{good}/{total} relations preserved"))
    return checks


def probe_even_extension(n: int) -> list[Check]:
    """Apply the (0 1) formulas with even-parity relations and report which relations survive.

    Purely exploratory: no claim is made that these formulas define an action for even parity.
    """
    _require_points(n)
    return [
        Check(f"n={n} even probe, case {case}", good == total, f"{good}/{total} relations preserved")
        for case, (total, good) in _ideal_invariance(n, Parity.EVEN).items()
    ]
