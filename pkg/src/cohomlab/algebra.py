"""The graded algebra H*(C_n(d)) presented by generators A[i,j] and relations.

Only the parity of ``d`` matters.  Degrees are counted by the number ``k`` of
generators in a monomial; the cohomological degree is ``k * (d - 1)``.

Relations, with ``A[i,i] = 0``:

* ``A[i,j] = (-1)^d A[j,i]``
* ``A[i,j] A[h,k] = (-1)^(d-1) A[h,k] A[i,j]``
* ``A[i,j] A[i,k] = A[k,j] (A[i,k] - A[i,j])``

Every element has a unique expansion in admissible monomials
``A[i1,j1] ... A[ik,jk]`` with ``i_h < j_h`` and ``j1 < ... < jk``.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from functools import cache
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .errors import DomainError

Generator = tuple[int, int]
Monomial = tuple[Generator, ...]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def from_d(cls, d: int) -> Parity:
        if d < 2:
            raise DomainError(f"d must be at least 2, got {d}")
        return cls.EVEN if d % 2 == 0 else cls.ODD

    @classmethod
    def parse(cls, value: str | Parity) -> Parity:
        if isinstance(value, Parity):
            return value
        try:
            return cls(value)
        except ValueError:
            raise DomainError(f"parity must be 'even' or 'odd', got {value!r}") from None

    @property
    def odd(self) -> bool:
        return self is Parity.ODD

    @property
    def swap_sign(self) -> int:
        """Sign picked up when two degree-one generators are exchanged."""
        return 1 if self.odd else -1

    @property
    def flip_sign(self) -> int:
        """Sign relating A[j,i] to A[i,j]."""
        return -1 if self.odd else 1


def canonical_generator(i: int, j: int, n: int, parity: Parity) -> tuple[Generator, int] | None:
    """Rewrite A[i,j] as ``sign * A[min, max]``; None stands for the zero element A[i,i]."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"A[{i},{j}] has an index outside 1..{n}")
    if i == j:
        return None
    if i < j:
        return (i, j), 1
    return (j, i), parity.flip_sign


def is_admissible(mono: Monomial, n: int) -> bool:
    tops = [j for _, j in mono]
    return (
        all(1 <= i < j <= n for i, j in mono)
        and all(tops[t] < tops[t + 1] for t in range(len(tops) - 1))
    )


@cache
def admissible_basis(n: int, k: int) -> tuple[Monomial, ...]:
    """Admissible monomials of length ``k`` in lexicographic order."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k < 0 or k > n - 1:
        return ()
    out = []
    for tops in combinations(range(2, n + 1), k):
        for bottoms in product(*(range(1, j) for j in tops)):
            out.append(tuple(zip(bottoms, tops)))
    return tuple(sorted(out))


@cache
def basis_index(n: int, k: int) -> dict[Monomial, int]:
    return {mono: t for t, mono in enumerate(admissible_basis(n, k))}


@cache
def poincare_coefficients(n: int) -> tuple[int, ...]:
    """Coefficients of prod_{i=1}^{n-1} (1 + i t)."""
    coeffs = [1]
    for i in range(1, n):
        coeffs = [a + i * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return tuple(coeffs)


def graded_dimension(n: int, k: int) -> int:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    coeffs = poincare_coefficients(n)
    return coeffs[k] if 0 <= k < len(coeffs) else 0


# --- fast multiplication by a single generator ------------------------------------


@cache
def _times_generator(mono: Monomial, a: int, c: int, odd: bool) -> tuple[tuple[Monomial, int], ...]:
    """Expand ``mono * A[a,c]`` (mono admissible, a < c) in admissible monomials."""
    p = 0
    while p < len(mono) and mono[p][1] < c:
        p += 1
    prefix = mono[:p]
    if p < len(mono) and mono[p][1] == c:
        b = mono[p][0]
        suffix = mono[p + 1:]
    else:
        b = None
        suffix = mono[p:]
    # A[a,c] travels left past every factor of the suffix
    sign = 1 if odd or len(suffix) % 2 == 0 else -1
    if b is None:
        return ((prefix + ((a, c),) + suffix, sign),)
    if b == a:
        return ()
    # A[b,c] A[a,c] = delta * (A[x,y] A[y,c] - A[x,y] A[x,c])
    if b < a:
        x, y = b, a
    else:
        x, y = a, b
        if not odd:
            sign = -sign
    out: dict[Monomial, int] = defaultdict(int)
    for head, coef in _times_generator(prefix, x, y, odd):
        out[head + ((y, c),) + suffix] += sign * coef
        out[head + ((x, c),) + suffix] -= sign * coef
    return tuple((m, v) for m, v in out.items() if v)


def _times_word(terms: Mapping[Monomial, int], word: Iterable[tuple[Generator, int]], odd: bool) -> dict[Monomial, int]:
    current = dict(terms)
    for (a, c), sign in word:
        nxt: dict[Monomial, int] = defaultdict(int)
        for mono, coef in current.items():
            for res, v in _times_generator(mono, a, c, odd):
                nxt[res] += sign * coef * v
        current = {m: v for m, v in nxt.items() if v}
        if not current:
            break
    return current


class AlgebraElement:
    """A finite integer combination of admissible monomials of H*(C_n(d))."""

    __slots__ = ("n", "parity", "terms")

    def __init__(self, n: int, parity: Parity, terms: Mapping[Monomial, int] | None = None):
        self.n = n
        self.parity = Parity.parse(parity)
        clean = {}
        for mono, coef in (terms or {}).items():
            mono = tuple(tuple(g) for g in mono)
            if not is_admissible(mono, n):
                raise DomainError(f"{format_monomial(mono)} is not an admissible monomial for n={n}")
            if coef:
                clean[mono] = int(coef)
        self.terms = clean

    @classmethod
    def one(cls, n: int, parity: Parity) -> AlgebraElement:
        return cls(n, parity, {(): 1})

    @classmethod
    def generator(cls, i: int, j: int, n: int, parity: Parity) -> AlgebraElement:
        return normal_form([(i, j)], n, parity)

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if (self.n, self.parity) != (other.n, other.parity):
            raise DomainError("elements live in different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return AlgebraElement(self.n, self.parity, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, self.parity, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement(self.n, self.parity, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, scalar: int) -> AlgebraElement:
        return AlgebraElement(self.n, self.parity, {m: c * scalar for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and (self.n, self.parity) == (other.n, other.parity)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.parity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self.parity.value}, {format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def coordinates(self, k: int) -> list[int]:
        """Coordinate vector in ``admissible_basis(n, k)``; the element must be homogeneous of degree k."""
        if self.terms and self.degrees() != {k}:
            raise DomainError(f"element is not homogeneous of degree {k}")
        return [self.terms.get(b, 0) for b in admissible_basis(self.n, k)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parity": self.parity.value,
            "terms": [
                {"factors": [list(g) for g in mono], "coefficient": coef}
                for mono, coef in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> AlgebraElement:
        terms = {tuple(tuple(g) for g in t["factors"]): int(t["coefficient"]) for t in data["terms"]}
        return cls(int(data["n"]), Parity.parse(data["parity"]), terms)


def _canonical_word(word: Sequence[Sequence[int]], n: int, parity: Parity) -> tuple[list[tuple[Generator, int]], bool]:
    out = []
    for pair in word:
        i, j = pair
        canon = canonical_generator(i, j, n, parity)
        if canon is None:
            return out, False
        out.append(canon)
    return out, True


def normal_form(word: Sequence[Sequence[int]], n: int, parity: Parity | str) -> AlgebraElement:
    """Expand the product of the generators ``A[i,j]`` listed in ``word`` in the admissible basis."""
    parity = Parity.parse(parity)
    canon, nonzero = _canonical_word(word, n, parity)
    if not nonzero:
        return AlgebraElement(n, parity)
    return AlgebraElement(n, parity, _times_word({(): 1}, canon, parity.odd))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    out: dict[Monomial, int] = defaultdict(int)
    for mono_b, coef_b in b.terms.items():
        word = [(g, 1) for g in mono_b]
        for mono, coef in _times_word(a.terms, word, a.parity.odd).items():
            out[mono] += coef * coef_b
    return AlgebraElement(a.n, a.parity, out)


# --- literal rewriting ----------------------------------------------------------


def _sort_with_sign(word: Sequence[Generator], odd: bool) -> tuple[Monomial, int]:
    """Sort canonical factors by (top, bottom); the sign counts inversions when generators anticommute."""
    ordered = sorted(word, key=lambda g: (g[1], g[0]))
    if odd:
        return tuple(ordered), 1
    inversions = sum(
        1
        for s in range(len(word))
        for t in range(s + 1, len(word))
        if (word[s][1], word[s][0]) > (word[t][1], word[t][0])
    )
    return tuple(ordered), -1 if inversions % 2 else 1


@cache
def _rewrite_sorted(word: Monomial, odd: bool) -> tuple[tuple[Monomial, int], ...]:
    for t in range(len(word) - 1):
        if word[t] == word[t + 1]:
            return ()
    for t in range(len(word) - 1):
        (a, c), (b, c2) = word[t], word[t + 1]
        if c == c2:
            # A[a,c] A[b,c] -> A[a,b] A[b,c] - A[a,b] A[a,c]
            out: dict[Monomial, int] = defaultdict(int)
            for replacement, coef in ((((a, b), (b, c)), 1), (((a, b), (a, c)), -1)):
                new_word, sign = _sort_with_sign(word[:t] + replacement + word[t + 2:], odd)
                for mono, v in _rewrite_sorted(new_word, odd):
                    out[mono] += coef * sign * v
            return tuple((m, v) for m, v in out.items() if v)
    return ((word, 1),)


def rewrite_normal_form(word: Sequence[Sequence[int]], n: int, parity: Parity | str) -> AlgebraElement:
    """Normal form by sort-then-rewrite with the leftmost equal-top pair rule.

    Independent of :func:`normal_form`, which multiplies generators in one at a
    time; the two must agree on every word.
    """
    parity = Parity.parse(parity)
    canon, nonzero = _canonical_word(word, n, parity)
    if not nonzero:
        return AlgebraElement(n, parity)
    sign = 1
    for _, s in canon:
        sign *= s
    ordered, sort_sign = _sort_with_sign([g for g, _ in canon], parity.odd)
    terms = {mono: sign * sort_sign * v for mono, v in _rewrite_sorted(ordered, parity.odd)}
    return AlgebraElement(n, parity, terms)


# --- text format -------------------------------------------------------------------


def format_monomial(mono: Monomial) -> str:
    return "".join(f"A[{i},{j}]" for i, j in mono) or "1"


def format_element(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    pieces = []
    for mono, coef in sorted(x.terms.items()):
        body = format_monomial(mono)
        magnitude = abs(coef)
        text = body if magnitude == 1 else f"{magnitude}*{body}" if mono else str(magnitude)
        if not pieces:
            pieces.append(text if coef > 0 else f"-{text}")
        else:
            pieces.append(f"{'+' if coef > 0 else '-'} {text}")
    return " ".join(pieces)


_TERM = re.compile(r"([+-])?\s*(?:(\d+)\*?)?((?:A\[\d+,\d+\])*)")
_FACTOR = re.compile(r"A\[(\d+),(\d+)\]")


def parse_element(text: str, n: int, parity: Parity | str) -> AlgebraElement:
    """Parse the output of :func:`format_element` (any word, normal-formed on the way in)."""
    parity = Parity.parse(parity)
    total = AlgebraElement(n, parity)
    stripped = text.strip()
    if stripped == "0":
        return total
    pos = 0
    while pos < len(stripped):
        match = _TERM.match(stripped, pos)
        if not match or match.end() == pos:
            raise DomainError(f"cannot parse element near {stripped[pos:]!r}")
        sign_s, coef_s, body = match.groups()
        coef = int(coef_s) if coef_s else 1
        if sign_s == "-":
            coef = -coef
        word = [(int(i), int(j)) for i, j in _FACTOR.findall(body)]
        if not word and not coef_s:
            raise DomainError(f"empty term in {text!r}")
        total = total + coef * normal_form(word, n, parity)
        pos = match.end()
        while pos < len(stripped) and stripped[pos] == " ":
            pos += 1
    return total
