"""Partitions, permutations and conjugacy-class combinatorics of symmetric groups.

Partitions are plain tuples of positive integers in weakly decreasing order.
They label both irreducible representations and conjugacy classes (cycle
types, fixed points included as parts equal to 1).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import DomainError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple."""
    p = tuple(int(x) for x in parts)
    if not p:
        raise DomainError("a partition needs at least one part")
    if any(x < 1 for x in p):
        raise DomainError(f"partition parts must be positive: {list(p)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"partition parts must be weakly decreasing: {list(p)}")
    return p


def is_partition(parts: Sequence[int]) -> bool:
    try:
        as_partition(parts)
    except DomainError:
        return False
    return True


@cache
def partitions_of(m: int) -> tuple[Partition, ...]:
    """All partitions of ``m`` in reverse lexicographic order, e.g. (4), (3,1), (2,2), ..."""
    if m < 1:
        raise DomainError(f"partitions_of needs m >= 1, got {m}")

    def gen(rest: int, largest: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(m, m))


def z_lambda(mu: Partition) -> int:
    """Order of the centralizer of an element of cycle type ``mu``."""
    return prod(i**c * factorial(c) for i, c in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_lambda(mu)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def irreducible_dimension(lam: Partition) -> int:
    """Hook length formula."""
    lam = as_partition(lam)
    cols = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c) + (cols[c] - r) - 1
    return factorial(sum(lam)) // hooks


def square_class(mu: Partition) -> Partition:
    """Cycle type of g**2 for g of cycle type ``mu``."""
    parts: list[int] = []
    for ell in mu:
        if ell % 2:
            parts.append(ell)
        else:
            parts += [ell // 2, ell // 2]
    return tuple(sorted(parts, reverse=True))


def add_fixed_point(mu: Partition) -> Partition:
    return mu + (1,)


def remove_fixed_point(mu: Partition) -> Partition | None:
    """Drop one part equal to 1, or None if ``mu`` has no fixed point."""
    if mu[-1] != 1:
        return None
    return mu[:-1]


@dataclass(frozen=True)
class Permutation:
    """A bijection of the integer interval ``{start, ..., start + len(images) - 1}``.

    ``images[t]`` is the image of the point ``start + t``.  Composition
    ``p * q`` applies ``q`` first.
    """

    images: tuple[int, ...]
    start: int = 1

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        ground = range(self.start, self.start + len(self.images))
        if sorted(self.images) != list(ground):
            raise DomainError(f"not a bijection of {{{ground.start}..{ground.stop - 1}}}: {self.images}")

    @classmethod
    def identity(cls, size: int, start: int = 1) -> Permutation:
        return cls(tuple(range(start, start + size)), start)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int, start: int = 1) -> Permutation:
        images = list(range(start, start + size))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - start] = b
        return cls(tuple(images), start)

    @classmethod
    def transposition(cls, a: int, b: int, size: int, start: int = 1) -> Permutation:
        return cls.from_cycles([(a, b)], size, start)

    @property
    def size(self) -> int:
        return len(self.images)

    @property
    def points(self) -> range:
        return range(self.start, self.start + len(self.images))

    def __call__(self, x: int) -> int:
        return self.images[x - self.start]

    def __mul__(self, other: Permutation) -> Permutation:
        if (self.start, self.size) != (other.start, other.size):
            raise DomainError("permutations act on different ground sets")
        return Permutation(tuple(self(other(x)) for x in other.points), self.start)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x in self.points:
            inv[self(x) - self.start] = x
        return Permutation(tuple(inv), self.start)

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in self.points:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_identity(self) -> bool:
        return all(self(x) == x for x in self.points)


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def coxeter_word(p: Permutation) -> list[int]:
    """Word ``w`` with ``s_{w[0]} * s_{w[1]} * ... == p``, where ``s_j`` swaps ``j`` and ``j+1``.

    Found by bubble-sorting the one-line notation; right-multiplying by
    ``s_j`` swaps the entries at positions ``j`` and ``j+1``.
    """
    line = list(p.images)
    swaps = []
    for end in range(len(line) - 1, 0, -1):
        for t in range(end):
            if line[t] > line[t + 1]:
                line[t], line[t + 1] = line[t + 1], line[t]
                swaps.append(p.start + t)
    return swaps[::-1]


def from_coxeter_word(word: Sequence[int], size: int, start: int = 1) -> Permutation:
    result = Permutation.identity(size, start)
    for j in word:
        result = result * Permutation.transposition(j, j + 1, size, start)
    return result


def class_representative(mu: Partition, start: int = 1) -> Permutation:
    """Cycles on consecutive points, largest cycle first: (3,2) -> (1 2 3)(4 5)."""
    cycles = []
    point = start
    for ell in mu:
        cycles.append(tuple(range(point, point + ell)))
        point += ell
    return Permutation.from_cycles(cycles, sum(mu), start)


def random_permutation(size: int, start: int = 1, rng: random.Random | None = None) -> Permutation:
    rng = rng or random.Random()
    images = list(range(start, start + size))
    rng.shuffle(images)
    return Permutation(tuple(images), start)


def random_conjugate(p: Permutation, rng: random.Random | None = None) -> Permutation:
    q = random_permutation(p.size, p.start, rng)
    return q * p * q.inverse()
