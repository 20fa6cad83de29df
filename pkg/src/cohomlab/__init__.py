"""Exact symmetric-group representation theory on the cohomology of configuration spaces."""

from .actions import (
    act_permutation,
    act_s0,
    action_matrix,
    antisymmetrizer,
    canonical_graded_character,
    extended_graded_character_matrix,
    verify_extended_relations,
)
from .algebra import AlgebraElement, Parity, admissible_basis, graded_dimension, normal_form
from .characters import ClassFunction, character_table, decompose, induce, irreducible, restrict
from .errors import (
    DomainError,
    NotACharacterError,
    RecursionMismatchError,
    ResourceLimitError,
    UnsupportedOperationError,
)
from .graded import GradedCharacter
from .partitions import Permutation, partitions_of
from .recursion import (
    deconed_extended_character,
    deconed_graded_character,
    extended_character,
    graded_character,
    invariant_dimensions,
    locate_multiplicities,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "ClassFunction",
    "DomainError",
    "GradedCharacter",
    "NotACharacterError",
    "Parity",
    "Permutation",
    "RecursionMismatchError",
    "ResourceLimitError",
    "UnsupportedOperationError",
    "act_permutation",
    "act_s0",
    "action_matrix",
    "admissible_basis",
    "antisymmetrizer",
    "canonical_graded_character",
    "character_table",
    "deconed_extended_character",
    "deconed_graded_character",
    "decompose",
    "extended_character",
    "extended_graded_character_matrix",
    "graded_character",
    "graded_dimension",
    "induce",
    "invariant_dimensions",
    "irreducible",
    "locate_multiplicities",
    "normal_form",
    "partitions_of",
    "restrict",
    "verify_extended_relations",
]
