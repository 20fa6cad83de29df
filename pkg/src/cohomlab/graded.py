"""Graded characters: one class function per degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import Parity
from .characters import ClassFunction, decompose, from_decomposition, restrict
from .errors import DomainError
from .partitions import Partition, as_partition

VIEWS = ("canonical", "extended", "deconed", "deconed-extended")


@dataclass(frozen=True)
class GradedCharacter:
    n: int
    parity: Parity
    view: str
    degrees: Mapping[int, ClassFunction] = field(default_factory=dict)

    def __post_init__(self):
        if self.view not in VIEWS:
            raise DomainError(f"unknown view {self.view!r}")
        for k, f in self.degrees.items():
            if f.m != self.group_size:
                raise DomainError(f"degree {k} is a class function on S_{f.m}, expected S_{self.group_size}")

    @property
    def group_size(self) -> int:
        return self.n + 1 if self.view.endswith("extended") else self.n

    @property
    def top_degree(self) -> int:
        return self.n - 2 if self.view.startswith("deconed") else self.n - 1

    def __getitem__(self, k: int) -> ClassFunction:
        if k in self.degrees:
            return self.degrees[k]
        if 0 <= k <= self.top_degree:
            raise KeyError(f"degree {k} was not computed")
        return ClassFunction.zero(self.group_size)

    def decompositions(self) -> dict[int, list[tuple[Partition, int]]]:
        return {k: decompose(f) for k, f in sorted(self.degrees.items())}

    def total(self) -> ClassFunction:
        out = ClassFunction.zero(self.group_size)
        for f in self.degrees.values():
            out = out + f
        return out

    def restricted(self) -> GradedCharacter:
        """Restriction of an extended view to the stabilizer of the point 0."""
        if not self.view.endswith("extended"):
            raise DomainError("only extended views restrict")
        view = "canonical" if self.view == "extended" else "deconed"
        return GradedCharacter(self.n, self.parity, view, {k: restrict(f) for k, f in self.degrees.items()})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parity": self.parity.value,
            "view": self.view,
            "degrees": [
                {
                    "k": k,
                    "irreducibles": [{"partition": list(lam), "multiplicity": mult} for lam, mult in parts],
                }
                for k, parts in self.decompositions().items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> GradedCharacter:
        n = int(data["n"])
        view = data["view"]
        m = n + 1 if view.endswith("extended") else n
        degrees = {
            int(entry["k"]): from_decomposition(
                m, [(as_partition(item["partition"]), int(item["multiplicity"])) for item in entry["irreducibles"]]
            )
            for entry in data["degrees"]
        }
        return cls(n, Parity.parse(data["parity"]), view, degrees)
