"""
Elementary translations, the translation monoid M(A) and polynomial maps of linear terms.
See: docs/core/TRANSLATIONS.md
"""

import itertools
from collections import deque
from collections.abc import Iterable, Sequence
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import ElementRangeError, MonoidSizeExceededError, NotLinearError, UnassignedVariableError
from synalg.core.terms import Assignment, Term, check_term, eval_term, format_term, is_linear_in, term_variables
from synalg.utils.logger import get_logger

logger = get_logger("synalg.translations")


class Provenance(BaseModel):
    """How a transformation was obtained."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["identity", "elementary", "composite", "term"]
    symbol: str | None = None
    coordinate: int | None = None
    fixed: tuple[int, ...] | None = None
    sequence: tuple[int, ...] | None = None
    term: Term | None = None
    assignment: dict[str, int] | None = None

    def describe(self) -> str:
        if self.kind == "elementary":
            args = [str(b) for b in self.fixed or ()]
            args.insert(self.coordinate or 0, "x")
            return f"{self.symbol}({', '.join(args)})"
        if self.kind == "composite":
            return "gens " + ".".join(str(i) for i in self.sequence or ())
        if self.kind == "term" and self.term is not None:
            bound = ", ".join(f"{k}={v}" for k, v in sorted((self.assignment or {}).items()))
            return f"{format_term(self.term)} [{bound}]"
        return "identity"


class Transformation(BaseModel):
    """A self-map of the carrier given by its image array.

    Equality and hashing look at the image only; provenance is the first witness kept.
    """

    model_config = ConfigDict(frozen=True)

    image: tuple[int, ...]
    provenance: Provenance | None = None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Transformation):
            return self.image == other.image
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.image)

    def __call__(self, a: int) -> int:
        return self.image[a]

    def __lt__(self, other: "Transformation") -> bool:
        return self.image < other.image

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def is_identity(self) -> bool:
        return self.image == tuple(range(len(self.image)))

    @property
    def is_constant(self) -> bool:
        return len(set(self.image)) <= 1

    def compose(self, other: "Transformation") -> "Transformation":
        """``self ∘ other``: apply ``other`` first."""
        return Transformation(image=tuple(self.image[b] for b in other.image))

    def preimage(self, subset: Iterable[int]) -> frozenset[int]:
        members = set(subset)
        return frozenset(a for a, b in enumerate(self.image) if b in members)

    def format(self) -> str:
        return "[" + " ".join(str(b) for b in self.image) + "]"

    def __str__(self) -> str:
        return self.format()


def identity_map(n: int) -> Transformation:
    return Transformation(image=tuple(range(n)), provenance=Provenance(kind="identity"))


def elementary_translations(algebra: FiniteAlgebra) -> list[Transformation]:
    """All maps x -> w(b_1, ..., x, ..., b_k) for rank >= 1 symbols, deduplicated by image."""
    seen: dict[tuple[int, ...], Transformation] = {}
    n = algebra.size
    for symbol, rank in algebra.signature.operations():
        table = algebra.tables[symbol]
        for coordinate in range(rank):
            for fixed in itertools.product(range(n), repeat=rank - 1):
                image = []
                for x in range(n):
                    args = (*fixed[:coordinate], x, *fixed[coordinate:])
                    index = 0
                    for a in args:
                        index = index * n + a
                    image.append(table[index])
                key = tuple(image)
                if key not in seen:
                    seen[key] = Transformation(
                        image=key,
                        provenance=Provenance(kind="elementary", symbol=symbol, coordinate=coordinate, fixed=fixed),
                    )
    return list(seen.values())


class TransformationMonoid(BaseModel):
    """A composition-closed set of self-maps with the generators it was closed from.

    Each element carries a ``composite`` provenance: the generator indices applied in order.
    """

    model_config = ConfigDict(frozen=True)

    size: int
    elements: tuple[Transformation, ...]
    generators: tuple[Transformation, ...] = Field(default=())

    _index: dict[tuple[int, ...], int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: object) -> None:
        self._index = {t.image: i for i, t in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Transformation):
            return item.image in self._index
        if isinstance(item, tuple):
            return item in self._index
        return False

    def index_of(self, item: Transformation | tuple[int, ...]) -> int:
        key = item.image if isinstance(item, Transformation) else item
        return self._index[key]

    def is_closed(self) -> bool:
        return all(f.compose(g).image in self._index for f in self.elements for g in self.elements)

    def replay(self, element: Transformation) -> Transformation:
        """Rebuild ``element`` from its recorded generator sequence."""
        current = tuple(range(self.size))
        sequence = element.provenance.sequence if element.provenance else None
        for j in sequence or ():
            g = self.generators[j].image
            current = tuple(g[b] for b in current)
        return Transformation(image=current)

    def sorted_elements(self) -> list[Transformation]:
        return sorted(self.elements)


def close_under_composition(
    generators: Sequence[Transformation], n: int, cap: int | None = None
) -> TransformationMonoid:
    """Breadth-first closure of {identity} ∪ generators.

    Generators are sorted by image first. A new element ``g ∘ e`` records the sequence
    of ``e`` followed by the index of ``g``.
    """
    limit = cap if cap is not None else n**n
    gens = sorted(set(generators))
    for g in gens:
        if len(g.image) != n or any(not 0 <= b < n for b in g.image):
            raise ElementRangeError(f"generator {g.format()} is not a self-map of a {n}-element carrier")
    start = tuple(range(n))
    found: dict[tuple[int, ...], tuple[int, ...]] = {start: ()}
    queue: deque[tuple[int, ...]] = deque([start])
    while queue:
        e = queue.popleft()
        for j, g in enumerate(gens):
            h = tuple(g.image[b] for b in e)
            if h not in found:
                found[h] = (*found[e], j)
                if len(found) > limit:
                    raise MonoidSizeExceededError(
                        f"closure exceeded the cap of {limit} elements",
                        component="translations",
                        details={"cap": limit},
                    )
                queue.append(h)
    elements = tuple(
        Transformation(
            image=image,
            provenance=Provenance(kind="composite", sequence=seq) if seq else Provenance(kind="identity", sequence=()),
        )
        for image, seq in found.items()
    )
    logger.debug("closure of %d generators on %d points: %d elements", len(gens), n, len(elements))
    return TransformationMonoid(size=n, elements=elements, generators=tuple(gens))


def translation_monoid(algebra: FiniteAlgebra, cap: int | None = None) -> TransformationMonoid:
    """M(A), generated by the elementary translations."""
    return close_under_composition(elementary_translations(algebra), algebra.size, cap)


def transformation_of_linear_term(
    algebra: FiniteAlgebra, t: Term, x: str, assignment: Assignment
) -> Transformation:
    """The polynomial map a -> t(a, v) of a term linear in ``x``."""
    if not is_linear_in(t, x):
        raise NotLinearError(f"{format_term(t)} is not linear in '{x}'", details={"variable": x})
    check_term(t, algebra.signature)
    missing = [v for v in term_variables(t) if v != x and v not in assignment]
    if missing:
        raise UnassignedVariableError(f"variables {missing} are not assigned", details={"variables": missing})
    env = {k: v for k, v in assignment.items() if k != x}
    image = tuple(eval_term(algebra, t, {**env, x: a}) for a in algebra.elements)
    return Transformation(image=image, provenance=Provenance(kind="term", term=t, assignment=env))
