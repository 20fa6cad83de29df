"""Character-level recursions, deconing, identities and irreducible location.

The recursion linking the canonical S_n character to the extended S_n character
of one point fewer is

    chi(n, k) = ext(n-1, k) + p_n * ext(n-1, k-1)

with ``p_n`` the standard character and ``ext(n-1, k) = 0`` outside
``0 <= k <= n-2``.  Read backwards it determines the extended characters,
which is the only route available for even parity.
"""

from __future__ import annotations

from functools import cache

from .actions import canonical_graded_character, extended_graded_character_matrix
from .algebra import Parity
from .characters import (
    ClassFunction,
    decompose,
    exterior_square,
    from_decomposition,
    induce,
    induce_trivial_from_transposition,
    inner_product,
    irreducible,
    multiplicities,
    named_character,
    restrict,
    standard_character,
    tensor,
)
from .errors import DomainError, RecursionMismatchError
from .graded import GradedCharacter
from .partitions import as_partition, is_partition
from .report import Check


def _invert(target: dict[int, ClassFunction], standard: ClassFunction, top: int, full: bool, what: str) -> dict[int, ClassFunction]:
    """Solve target[k] = ext[k] + standard * ext[k-1] for ext[0..top]."""
    ext: dict[int, ClassFunction] = {}
    for k in range(top + 1):
        value = target[k] if k == 0 else target[k] - standard * ext[k - 1]
        decompose(value)
        ext[k] = value
    if full:
        residual = target.get(top + 1, ClassFunction.zero(standard.m)) - standard * ext[top]
        if not residual.is_zero():
            raise RecursionMismatchError(
                f"{what}: degree {top + 1} is not standard * (degree {top}); residual {residual}"
            )
    return ext


def _truncation(top: int, max_degree: int | None) -> tuple[int, bool]:
    if max_degree is None or max_degree >= top:
        return top, True
    return max_degree, False


@cache
def extended_character_by_inversion(n: int, parity: Parity | str, max_degree: int | None = None) -> GradedCharacter:
    """Extended S_{n+1} character of H*(C_n(d)) recovered from the canonical character of n+1 points."""
    parity = Parity.parse(parity)
    if n < 1:
        raise DomainError("n must be positive")
    top, full = _truncation(n - 1, max_degree)
    upper = canonical_graded_character(n + 1, parity, None if full else top).degrees
    ext = _invert(dict(upper), standard_character(n + 1), top, full, f"inversion n={n}, {parity.value}")
    return GradedCharacter(n, parity, "extended", ext)


def extended_character(n: int, parity: Parity | str, max_degree: int | None = None, source: str = "inversion") -> GradedCharacter:
    parity = Parity.parse(parity)
    if source == "matrix":
        return extended_graded_character_matrix(n, parity, max_degree)
    if source == "inversion":
        return extended_character_by_inversion(n, parity, max_degree)
    raise DomainError(f"unknown source {source!r}")


def recursion_step(ext: GradedCharacter, max_degree: int | None = None) -> GradedCharacter:
    """Canonical character of n+1 points from the extended character of n points."""
    n = ext.n + 1
    p = standard_character(n)
    top = n - 1 if max_degree is None else min(max_degree, n - 1)
    degrees = {}
    for k in range(top + 1):
        value = ext[k] if k <= ext.top_degree else ClassFunction.zero(n)
        if 1 <= k <= ext.top_degree + 1:
            value = value + p * ext[k - 1]
        degrees[k] = value
    view = "deconed" if ext.view == "deconed-extended" else "canonical"
    if view == "deconed":
        degrees = {k: f for k, f in degrees.items() if k <= n - 2}
    return GradedCharacter(n, ext.parity, view, degrees)


def canonical_character_by_recursion(n: int, parity: Parity | str, source: str = "inversion") -> GradedCharacter:
    if n < 2:
        raise DomainError("the recursion needs n >= 2")
    return recursion_step(extended_character(n - 1, parity, source=source))


@cache
def deconed_graded_character(n: int, max_degree: int | None = None) -> GradedCharacter:
    """S_n character of the deconed braid arrangement: chi_even(n, k) = dec(n, k) + dec(n, k-1)."""
    if n < 2:
        raise DomainError("deconing needs n >= 2")
    top, full = _truncation(n - 2, max_degree)
    even = canonical_graded_character(n, Parity.EVEN, None if full else top).degrees
    dec = _invert(dict(even), named_character(n, "trivial"), top, full, f"deconing n={n}")
    return GradedCharacter(n, Parity.EVEN, "deconed", dec)


@cache
def deconed_extended_character(n: int, max_degree: int | None = None) -> GradedCharacter:
    if n < 2:
        raise DomainError("deconing needs n >= 2")
    top, full = _truncation(n - 2, max_degree)
    upper = deconed_graded_character(n + 1, None if full else top).degrees
    ext = _invert(dict(upper), standard_character(n + 1), top, full, f"deconed inversion n={n}")
    return GradedCharacter(n, Parity.EVEN, "deconed-extended", ext)


def graded_character(n: int, parity: Parity | str, view: str, space: str = "conf", max_degree: int | None = None) -> GradedCharacter:
    """Dispatch on (space, view): conf/deconed x canonical/extended."""
    parity = Parity.parse(parity)
    if space == "deconed":
        if view == "canonical":
            return deconed_graded_character(n, max_degree)
        if view == "extended":
            return deconed_extended_character(n, max_degree)
    elif space == "conf":
        if view == "canonical":
            return canonical_graded_character(n, parity, max_degree)
        if view == "extended":
            return extended_character_by_inversion(n, parity, max_degree)
    raise DomainError(f"unknown space/view combination {space}/{view}")


def locate_multiplicities(lam, gc: GradedCharacter) -> dict[int, int]:
    lam = as_partition(lam)
    if sum(lam) != gc.group_size:
        raise DomainError(f"{list(lam)} does not label an irreducible of S_{gc.group_size}")
    chi = irreducible(lam)
    return {k: inner_product(gc.degrees[k], chi) for k in sorted(gc.degrees)}


def invariant_dimensions(n: int, parity: Parity | str) -> dict[int, int]:
    """Dimension of the S_{n-1}-invariants in each degree (multiplicity of the trivial in the restriction)."""
    if n < 2:
        raise DomainError("quotients need n >= 2")
    gc = canonical_graded_character(n, parity)
    trivial = named_character(n - 1, "trivial")
    return {k: inner_product(restrict(f), trivial) for k, f in sorted(gc.degrees.items())}


# --- closed forms ---------------------------------------------------------------------


def standard_sign_profile(n: int) -> dict[int, int]:
    """Expected multiplicity of V_(2,1,...,1) per degree for odd parity, n >= 4."""
    k = n // 2
    profile = {j: 0 for j in range(n)}
    if n % 2 == 0:
        profile[k - 1] += 1
        profile[k] += 1
    else:
        profile[k] += 1
    profile[n - 1] += 1
    for j in range(k + 1, n - 1):
        profile[j] += 2
    return profile


def _as_char(m: int, parts) -> ClassFunction | None:
    """Sum of irreducibles, or None if a label is not a partition of m."""
    items = []
    for lam, mult in parts:
        if not is_partition(lam) or sum(lam) != m:
            return None
        items.append((tuple(lam), mult))
    return from_decomposition(m, items)


def _fmt(parts) -> str:
    return " + ".join(f"{mult if mult > 1 else ''}{tuple(lam)}" for lam, mult in parts) or "0"


def _compare(name: str, actual: ClassFunction, expected: ClassFunction) -> Check:
    if actual == expected:
        return Check(name, True, _fmt(decompose(actual)))
    return Check(name, False, f"got {_fmt(_safe_parts(actual))}, expected {_fmt(_safe_parts(expected))}")


def _safe_parts(f: ClassFunction):
    return [(lam, mult) for lam, mult in multiplicities(f).items() if mult]


def lowdegree_closed_forms(n: int) -> list[tuple[str, str, dict[int, list]]]:
    """(label, kind, {k: parts}) for each closed-form decomposition that applies at this n."""
    forms = []
    if n >= 3:
        forms.append(("deconed extended H^1", "deconed-extended", {1: [((n - 1, 2), 1)]}))
    if n >= 4:
        forms.append(("deconed H^1 as S_n-module", "deconed", {1: [((n - 1, 1), 1), ((n - 2, 2), 1)]}))
    if n >= 6:
        forms.append((
            "deconed extended H^2",
            "deconed-extended",
            {2: [((n - 1, 1, 1), 1), ((n - 3, 3, 1), 1), ((n - 2, 2, 1), 1)]},
        ))
    if n >= 7:
        forms.append((
            "deconed H^2 as S_n-module",
            "deconed",
            {2: [((n - 1, 1), 1), ((n - 2, 1, 1), 2), ((n - 3, 3), 1), ((n - 3, 2, 1), 2), ((n - 4, 3, 1), 1), ((n - 2, 2), 1)]},
        ))
    if n >= 2:
        forms.append(("odd extended H^(d-1)", "extended", {1: [((n - 1, 1, 1), 1)]}))
    if n >= 3:
        forms.append(("odd H^(d-1) as S_n-module", "canonical", {1: [((n - 1, 1), 1), ((n - 2, 1, 1), 1)]}))
    if n >= 5:
        forms.append((
            "odd extended H^(2(d-1))",
            "extended",
            {2: [((n - 3, 1, 1, 1, 1), 1), ((n - 2, 2, 1), 1), ((n - 3, 2, 2), 1), ((n - 1, 2), 1)]},
        ))
    if n >= 6:
        forms.append((
            "odd H^(2(d-1)) as S_n-module",
            "canonical",
            {2: [((n - 4, 1, 1, 1, 1), 1), ((n - 3, 1, 1, 1), 1), ((n - 3, 2, 1), 2), ((n - 2, 1, 1), 1),
                 ((n - 2, 2), 2), ((n - 4, 2, 2), 1), ((n - 1, 1), 1)]},
        ))
    return forms


def verify_lowdegree_theorems(n: int) -> list[Check]:
    checks = []
    for label, kind, expected in lowdegree_closed_forms(n):
        if kind == "deconed":
            gc = deconed_graded_character(n, max_degree=2)
        elif kind == "deconed-extended":
            gc = deconed_extended_character(n, max_degree=2)
        elif kind == "extended":
            gc = extended_character_by_inversion(n, Parity.ODD, max_degree=2)
        else:
            gc = canonical_graded_character(n, Parity.ODD, max_degree=2)
        for k, parts in expected.items():
            checks.append(_compare(f"n={n} {label}", gc[k], _as_char(gc.group_size, parts)))
    if n >= 2:
        # degree one of the odd algebra is the exterior square of the standard S_{n+1}-module
        ext = extended_character_by_inversion(n, Parity.ODD, max_degree=1)
        checks.append(_compare(f"n={n} odd extended H^(d-1) = exterior square of V_(n,1)", ext[1],
                               exterior_square(standard_character(n + 1))))
    p = standard_character(n) if n >= 2 else None
    tensor_forms = [
        ("V_(n-2,2) x V_(n-1,1)", [((n - 2, 2), 1)],
         [((n - 3, 2, 1), 1), ((n - 3, 3), 1), ((n - 2, 1, 1), 1), ((n - 2, 2), 1), ((n - 1, 1), 1)]),
        ("V_(n-2,1,1) x V_(n-1,1)", [((n - 2, 1, 1), 1)],
         [((n - 2, 1, 1), 1), ((n - 3, 2, 1), 1), ((n - 3, 1, 1, 1), 1), ((n - 1, 1), 1), ((n - 2, 2), 1)]),
    ]
    for label, left, right in tensor_forms:
        lhs, rhs = _as_char(n, left), _as_char(n, right)
        if lhs is None or rhs is None:
            continue
        checks.append(_compare(f"n={n} {label}", tensor(lhs, p), rhs))
    return checks


def verify_global_identities(n: int, parity: Parity | str) -> list[Check]:
    parity = Parity.parse(parity)
    if n < 2:
        raise DomainError("global identities need n >= 2")
    checks = []
    total = canonical_graded_character(n, parity).total()
    if parity.odd:
        checks.append(_compare(f"n={n} odd: total = regular", total, named_character(n, "regular")))
    else:
        checks.append(_compare(f"n={n} even: total = 2 Ind_S2 1", total, 2 * induce_trivial_from_transposition(n)))
    if n >= 3:
        previous = canonical_graded_character(n - 1, parity).total()
        checks.append(_compare(f"n={n} {parity.value}: total = Ind of n-1 total", total, induce(previous)))
        if not parity.odd:
            checks.append(_compare(f"n={n} deconed: total = Ind_S2 1", deconed_graded_character(n).total(),
                                   induce_trivial_from_transposition(n)))
    return checks


def check_recursion(n: int, parity: Parity | str, source: str = "inversion") -> list[Check]:
    """Trace-computed chi(n, .) against the recursion applied to ext(n-1, .)."""
    parity = Parity.parse(parity)
    actual = canonical_graded_character(n, parity)
    ext = extended_character(n - 1, parity, source=source)
    rebuilt = recursion_step(ext)
    checks = [
        _compare(f"n={n} {parity.value} recursion ({source}) degree {k}", rebuilt[k], actual[k])
        for k in sorted(actual.degrees)
    ]
    below = canonical_graded_character(n - 1, parity)
    for k in sorted(ext.degrees):
        checks.append(_compare(f"n={n - 1} {parity.value} ext restricts to canonical, degree {k}",
                               restrict(ext[k]), below[k]))
    return checks

