"""
Set partitions of a finite carrier in canonical first-occurrence form.
See: docs/core/CONGRUENCE.md
"""

import re
from collections.abc import Hashable, Iterable, Iterator, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

from synalg.core.exceptions import ElementRangeError, PartitionError


def canonicalize(labels: Sequence[Hashable]) -> tuple[int, ...]:
    """Renumber arbitrary class labels by first occurrence (element 0 lands in class 0)."""
    seen: dict[Hashable, int] = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


class Partition(BaseModel):
    """A partition of {0, ..., n-1} stored as a canonical class-id vector."""

    model_config = ConfigDict(frozen=True)

    class_id: tuple[int, ...]

    @field_validator("class_id", mode="before")
    @classmethod
    def make_canonical(cls, v: Sequence[Hashable]) -> tuple[int, ...]:
        return canonicalize(v)

    @classmethod
    def of(cls, labels: Sequence[Hashable]) -> "Partition":
        return cls(class_id=tuple(labels))

    @classmethod
    def equality(cls, n: int) -> "Partition":
        return cls(class_id=tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls(class_id=(0,) * n)

    @classmethod
    def from_subset(cls, n: int, subset: Iterable[int]) -> "Partition":
        """The relation alpha_L with classes L and its complement."""
        members = set(subset)
        return cls(class_id=tuple(a in members for a in range(n)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels: list[int | None] = [None] * n
        for index, block in enumerate(blocks):
            members = list(block)
            if not members:
                raise PartitionError(f"block {index} is empty", details={"block": index})
            for a in members:
                if not 0 <= a < n:
                    raise ElementRangeError(f"block element {a} outside carrier of size {n}", details={"element": a})
                if labels[a] is not None:
                    raise PartitionError(f"element {a} lies in two blocks", details={"element": a, "kind": "overlap"})
                labels[a] = index
        gaps = [a for a, label in enumerate(labels) if label is None]
        if gaps:
            raise PartitionError(f"elements {gaps} lie in no block", details={"elements": gaps, "kind": "gap"})
        return cls(class_id=tuple(labels))

    @classmethod
    def parse(cls, n: int, text: str) -> "Partition":
        """Read the ``{0,2}/{1,3}`` notation."""
        blocks = re.findall(r"\{([^{}]*)\}", text)
        if not blocks or re.sub(r"\{[^{}]*\}|/|\s", "", text):
            raise PartitionError(f"cannot read partition '{text}'", details={"text": text})
        try:
            parsed = [[int(x) for x in block.replace(",", " ").split()] for block in blocks]
        except ValueError:
            raise PartitionError(f"cannot read partition '{text}'", details={"text": text}) from None
        return cls.from_blocks(n, parsed)

    @property
    def size(self) -> int:
        return len(self.class_id)

    @property
    def index(self) -> int:
        """Number of classes."""
        return max(self.class_id) + 1 if self.class_id else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.index)]
        for a, c in enumerate(self.class_id):
            out[c].append(a)
        return tuple(tuple(b) for b in out)

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def refines(self, other: "Partition") -> bool:
        """True when every class of ``self`` lies inside a class of ``other``."""
        return self.meet(other) == self

    def meet(self, other: "Partition") -> "Partition":
        if self.size != other.size:
            raise PartitionError(f"partitions of sizes {self.size} and {other.size}")
        return Partition.of(list(zip(self.class_id, other.class_id)))

    def saturates(self, subset: Iterable[int]) -> bool:
        members = set(subset)
        verdict: dict[int, bool] = {}
        for a, c in enumerate(self.class_id):
            if verdict.setdefault(c, a in members) != (a in members):
                return False
        return True

    def first_difference(self, other: "Partition") -> tuple[int, int] | None:
        """Smallest pair (a, b), a < b, related in exactly one of the two partitions."""
        for b in range(self.size):
            for a in range(b):
                if self.related(a, b) != other.related(a, b):
                    return a, b
        return None

    def format(self) -> str:
        return "/".join("{" + ",".join(str(a) for a in block) + "}" for block in self.blocks())

    def __str__(self) -> str:
        return self.format()


def saturates(p: Partition, subset: Iterable[int]) -> bool:
    """True iff every class of ``p`` is inside ``subset`` or disjoint from it."""
    return p.saturates(subset)


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of an n-set, as restricted growth strings in lexicographic order."""
    if n == 0:
        yield Partition(class_id=())
        return

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for c in range(top + 2):
            yield from grow([*prefix, c], max(top, c))

    for labels in grow([0], 0):
        yield Partition(class_id=tuple(labels))
