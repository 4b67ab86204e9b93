import itertools
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import AlgebraMismatchError, ElementRangeError, NotAHomomorphismError


def compatibility_failure(
    source: FiniteAlgebra, target: FiniteAlgebra, image: Sequence[int]
) -> tuple[str, tuple[int, ...]] | None:
    """First (symbol, argument tuple) at which ``image`` fails to commute with the operations, if any."""
    for symbol, rank in source.signature.symbols:
        if symbol not in target.signature or target.signature.arity(symbol) != rank:
            return symbol, ()
        for args in itertools.product(source.elements, repeat=rank):
            lhs = image[source.op(symbol, *args)]
            rhs = target.op(symbol, *(image[a] for a in args))
            if lhs != rhs:
                return symbol, args
    return None


class Homomorphism(BaseModel):
    """A map between two algebras over the same signature, verified on construction."""

    model_config = ConfigDict(frozen=True)

    source: FiniteAlgebra
    target: FiniteAlgebra
    image: tuple[int, ...]

    @model_validator(mode="after")
    def must_commute(self) -> "Homomorphism":
        if len(self.image) != self.source.size:
            raise AlgebraMismatchError(
                f"image has length {len(self.image)} but source carrier has size {self.source.size}",
                details={"length": len(self.image)},
            )
        for a, b in enumerate(self.image):
            if not 0 <= b < self.target.size:
                raise ElementRangeError(
                    f"image of {a} is {b}, outside target carrier of size {self.target.size}",
                    details={"element": a, "image": b},
                )
        failure = compatibility_failure(self.source, self.target, self.image)
        if failure is not None:
            symbol, args = failure
            raise NotAHomomorphismError(
                f"map {self.source.name} -> {self.target.name} does not commute with '{symbol}' at {args}",
                details={"symbol": symbol, "args": list(args)},
            )
        return self

    @property
    def surjective(self) -> bool:
        return len(set(self.image)) == self.target.size

    def __call__(self, a: int) -> int:
        return self.image[a]

    def preimage(self, subset: Sequence[int] | frozenset[int]) -> frozenset[int]:
        members = set(subset)
        return frozenset(a for a in self.source.elements if self.image[a] in members)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """The composite ``other ∘ self``."""
        if other.source != self.target:
            raise AlgebraMismatchError(
                f"cannot compose {self.source.name}->{self.target.name} with {other.source.name}->{other.target.name}"
            )
        return Homomorphism(source=self.source, target=other.target, image=tuple(other.image[b] for b in self.image))

    @classmethod
    def identity(cls, algebra: FiniteAlgebra) -> "Homomorphism":
        return cls(source=algebra, target=algebra, image=tuple(algebra.elements))
