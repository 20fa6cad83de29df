"""Exact character theory of the symmetric groups S_m.

Class functions are indexed by cycle types.  Irreducible characters come
from the Murnaghan-Nakayama rule, computed on beta-sets (abacus positions)
with memoisation.
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction
from functools import cache
from math import factorial
from numbers import Rational
from pathlib import Path
from typing import Iterable, Mapping

from .errors import DomainError, NotACharacterError, ResourceLimitError
from .partitions import (
    Partition,
    add_fixed_point,
    as_partition,
    class_size,
    partitions_of,
    remove_fixed_point,
    square_class,
)

MAX_DEGREE = 9
CACHE_FORMAT_VERSION = 1


def _normalize(value) -> int | Fraction:
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"class function values must be exact rationals, got {value!r}")


class ClassFunction:
    """An exact rational-valued function on the conjugacy classes of S_m."""

    __slots__ = ("m", "values")

    def __init__(self, m: int, values: Mapping[Partition, Rational]):
        classes = partitions_of(m)
        missing = set(classes) - set(values)
        extra = set(values) - set(classes)
        if missing or extra:
            raise DomainError(f"class function on S_{m} must be defined on exactly the partitions of {m}")
        self.m = m
        self.values = {mu: _normalize(values[mu]) for mu in classes}

    @classmethod
    def zero(cls, m: int) -> ClassFunction:
        return cls(m, {mu: 0 for mu in partitions_of(m)})

    @classmethod
    def from_vector(cls, m: int, vector: Iterable[Rational]) -> ClassFunction:
        return cls(m, dict(zip(partitions_of(m), vector, strict=True)))

    def __getitem__(self, mu: Partition) -> int | Fraction:
        return self.values[tuple(mu)]

    def vector(self) -> list:
        return [self.values[mu] for mu in partitions_of(self.m)]

    def degree(self):
        """Value at the identity class."""
        return self.values[(1,) * self.m]

    def _check(self, other: ClassFunction) -> None:
        if not isinstance(other, ClassFunction):
            raise TypeError(f"expected ClassFunction, got {type(other).__name__}")
        if other.m != self.m:
            raise DomainError(f"class functions on S_{self.m} and S_{other.m} do not combine")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.m, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.m, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __neg__(self) -> ClassFunction:
        return ClassFunction(self.m, {mu: -v for mu, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return tensor(self, other)
        return ClassFunction(self.m, {mu: v * other for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.m == other.m and self.values == other.values

    def __hash__(self):
        return hash((self.m, tuple(self.vector())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{list(mu)}: {v}" for mu, v in self.values.items())
        return f"ClassFunction(m={self.m}, {{{inner}}})"

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "values": {json.dumps(list(mu), separators=(",", ":")): _json_number(v) for mu, v in self.values.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> ClassFunction:
        values = {as_partition(json.loads(key)): Fraction(str(v)) for key, v in data["values"].items()}
        return cls(int(data["m"]), values)


def _json_number(v):
    return v if isinstance(v, int) else str(v)


# --- Murnaghan-Nakayama -------------------------------------------------------


def _beta_set(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(part + length - 1 - i for i, part in enumerate(lam))


def _from_beta(beta: Iterable[int]) -> Partition:
    beads = sorted(beta, reverse=True)
    length = len(beads)
    parts = [b - (length - 1 - i) for i, b in enumerate(beads)]
    return tuple(p for p in parts if p > 0)


@cache
def _mn_value(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # the leg length of the removed rim hook is the number of beads jumped over
        height = sum(1 for c in beta if target < c < b)
        smaller = _from_beta([target if c == b else c for c in beta])
        term = _mn_value(smaller, rest)
        total += -term if height % 2 else term
    return total


_table_cache: dict[int, dict[Partition, dict[Partition, int]]] = {}
_table_lock = threading.Lock()


def character_table(m: int) -> dict[Partition, dict[Partition, int]]:
    """``character_table(m)[lam][mu]`` is the irreducible character chi^lam at cycle type mu."""
    if m < 1:
        raise DomainError(f"character_table needs m >= 1, got {m}")
    if m > MAX_DEGREE:
        raise ResourceLimitError(f"S_{m} exceeds the configured maximum S_{MAX_DEGREE}")
    table = _table_cache.get(m)
    if table is not None:
        return table
    with _table_lock:
        if m not in _table_cache:
            classes = partitions_of(m)
            _table_cache[m] = {lam: {mu: _mn_value(lam, mu) for mu in classes} for lam in classes}
        return _table_cache[m]


def load_table_cache(path: str | Path) -> int:
    """Seed the in-memory table cache from a JSON cache file; returns the number of tables loaded.

    Files with a different format version are ignored.
    """
    path = Path(path)
    if not path.exists():
        return 0
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError:
        return 0
    if data.get("version") != CACHE_FORMAT_VERSION:
        return 0
    loaded = 0
    with _table_lock:
        for key, entry in data.get("tables", {}).items():
            m = int(key)
            if m in _table_cache or m > MAX_DEGREE:
                continue
            classes = partitions_of(m)
            if [tuple(p) for p in entry["partitions"]] != list(classes):
                continue
            rows = entry["values"]
            _table_cache[m] = {lam: dict(zip(classes, row)) for lam, row in zip(classes, rows)}
            loaded += 1
    return loaded


def save_table_cache(path: str | Path) -> None:
    tables = {}
    for m in sorted(_table_cache):
        classes = partitions_of(m)
        table = _table_cache[m]
        tables[str(m)] = {
            "partitions": [list(p) for p in classes],
            "values": [[table[lam][mu] for mu in classes] for lam in classes],
        }
    Path(path).write_text(json.dumps({"version": CACHE_FORMAT_VERSION, "tables": tables}))


def irreducible(lam: Iterable[int]) -> ClassFunction:
    lam = as_partition(lam)
    return ClassFunction(sum(lam), character_table(sum(lam))[lam])


# --- operations on class functions ---------------------------------------------


def inner_product(f: ClassFunction, g: ClassFunction) -> int | Fraction:
    f._check(g)
    total = sum(class_size(mu) * f.values[mu] * g.values[mu] for mu in partitions_of(f.m))
    return _normalize(Fraction(total, factorial(f.m)))


def multiplicities(f: ClassFunction) -> dict[Partition, int | Fraction]:
    """<f, chi^lam> for every lam, zeros included."""
    table = character_table(f.m)
    sizes = {mu: class_size(mu) for mu in partitions_of(f.m)}
    weighted = {mu: sizes[mu] * v for mu, v in f.values.items() if v}
    order = factorial(f.m)
    return {
        lam: _normalize(Fraction(sum(w * row[mu] for mu, w in weighted.items()), order))
        for lam, row in table.items()
    }


def decompose(f: ClassFunction) -> list[tuple[Partition, int]]:
    """Irreducible constituents with their multiplicities, in partition order.

    Raises NotACharacterError on the first non-integral or negative multiplicity.
    """
    out = []
    for lam, mult in multiplicities(f).items():
        if not isinstance(mult, int) or mult < 0:
            raise NotACharacterError(lam, mult)
        if mult:
            out.append((lam, mult))
    return out


def is_character(f: ClassFunction) -> bool:
    try:
        decompose(f)
    except NotACharacterError:
        return False
    return True


def from_decomposition(m: int, parts: Iterable[tuple[Iterable[int], int]]) -> ClassFunction:
    total = ClassFunction.zero(m)
    for lam, mult in parts:
        lam = as_partition(lam)
        if sum(lam) != m:
            raise DomainError(f"{list(lam)} is not a partition of {m}")
        total = total + mult * irreducible(lam)
    return total


def restrict(f: ClassFunction) -> ClassFunction:
    """Restriction from S_m to the stabilizer S_{m-1} of one point."""
    if f.m < 2:
        raise DomainError("cannot restrict a class function of S_1")
    return ClassFunction(f.m - 1, {mu: f.values[add_fixed_point(mu)] for mu in partitions_of(f.m - 1)})


def induce(f: ClassFunction) -> ClassFunction:
    """Induction from the point stabilizer S_m to S_{m+1}.

    An element of S_{m+1} is conjugate into the stabilizer of a point once for
    each of its fixed points, so the induced value is (#fixed points) * f(mu minus a 1).
    """
    values = {}
    for mu in partitions_of(f.m + 1):
        smaller = remove_fixed_point(mu)
        values[mu] = 0 if smaller is None else mu.count(1) * f.values[smaller]
    return ClassFunction(f.m + 1, values)


def induce_trivial_from_transposition(m: int) -> ClassFunction:
    """Ind_{S_2}^{S_m} 1 for S_2 generated by a single transposition."""
    if m < 2:
        raise DomainError(f"S_2 does not embed in S_{m}")
    identity = (1,) * m
    transposition = (2,) + (1,) * (m - 2)
    values = {mu: 0 for mu in partitions_of(m)}
    values[identity] = factorial(m) // 2
    # |C(t)| * |class(t) cap S_2| / |S_2| with |C(t)| = 2 (m-2)!
    values[transposition] += factorial(m - 2)
    return ClassFunction(m, values)


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    f._check(g)
    return ClassFunction(f.m, {mu: v * g.values[mu] for mu, v in f.values.items()})


def exterior_square(f: ClassFunction) -> ClassFunction:
    return ClassFunction(
        f.m, {mu: Fraction(v * v - f.values[square_class(mu)], 2) for mu, v in f.values.items()}
    )


def branching_boxes(lam: Iterable[int], direction: str) -> list[Partition]:
    """Partitions obtained by adding or removing one box of ``lam``."""
    lam = as_partition(lam)
    out = []
    if direction == "add":
        padded = lam + (0,)
        for i in range(len(padded)):
            if i == 0 or padded[i - 1] > padded[i]:
                new = list(padded)
                new[i] += 1
                out.append(tuple(x for x in new if x))
    elif direction == "remove":
        for i in range(len(lam)):
            below = lam[i + 1] if i + 1 < len(lam) else 0
            if lam[i] > below:
                new = list(lam)
                new[i] -= 1
                out.append(tuple(x for x in new if x))
    else:
        raise DomainError(f"direction must be 'add' or 'remove', got {direction!r}")
    order = {p: t for t, p in enumerate(partitions_of(sum(out[0])))} if out and out[0] else {}
    return sorted(out, key=lambda p: order.get(p, 0))


def named_character(m: int, name: str) -> ClassFunction:
    if m < 1:
        raise DomainError(f"S_{m} is not a symmetric group")
    classes = partitions_of(m)
    if name == "trivial":
        return ClassFunction(m, {mu: 1 for mu in classes})
    if name == "sign":
        return ClassFunction(m, {mu: (-1) ** (m - len(mu)) for mu in classes})
    if name == "standard":
        if m < 2:
            raise DomainError("the standard representation needs m >= 2")
        return ClassFunction(m, {mu: mu.count(1) - 1 for mu in classes})
    if name == "regular":
        return ClassFunction(m, {mu: factorial(m) if mu == (1,) * m else 0 for mu in classes})
    raise DomainError(f"unknown character name {name!r}")


def standard_character(m: int) -> ClassFunction:
    """The character p_m of the standard representation V_(m-1,1)."""
    return named_character(m, "standard")

