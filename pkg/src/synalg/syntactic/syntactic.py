"""
Syntactic congruences computed two independent ways and cross-checked.
See: docs/core/SYNTACTIC.md
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from synalg.congruence.congruence import Congruence, certify, largest_congruence_saturating, quotient
from synalg.congruence.partition import Partition, canonicalize
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import AlgorithmDisagreementError, ElementRangeError
from synalg.core.homomorphism import Homomorphism
from synalg.translations.monoid import TransformationMonoid, translation_monoid
from synalg.utils.logger import get_logger

logger = get_logger("synalg.syntactic")


class SubsetL(BaseModel):
    """A subset of a carrier, optionally named."""

    model_config = ConfigDict(frozen=True)

    size: int
    members: frozenset[int]
    name: str | None = None

    @model_validator(mode="after")
    def members_in_range(self) -> "SubsetL":
        bad = sorted(a for a in self.members if not 0 <= a < self.size)
        if bad:
            raise ElementRangeError(
                f"subset elements {bad} outside carrier of size {self.size}", details={"elements": bad}
            )
        return self

    @property
    def bits(self) -> tuple[bool, ...]:
        return tuple(a in self.members for a in range(self.size))

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in sorted(self.members)) + "}"


def as_subset(algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]", name: str | None = None) -> SubsetL:
    if isinstance(subset, SubsetL):
        if subset.size != algebra.size:
            raise ElementRangeError(f"subset is over a carrier of size {subset.size}, not {algebra.size}")
        return subset
    return SubsetL(size=algebra.size, members=frozenset(subset), name=name)


class SyntacticResult(BaseModel):
    """sigma_L with its syntactic morphism and quotient."""

    model_config = ConfigDict(frozen=True)

    subset: SubsetL
    congruence: Congruence
    eta: Homomorphism
    quotient: FiniteAlgebra
    monoid_size: int

    @property
    def index(self) -> int:
        return self.congruence.index


def congruence_by_translations(
    algebra: FiniteAlgebra, subset: SubsetL, monoid: TransformationMonoid | None = None
) -> Partition:
    """a ~ a' iff f(a) ∈ L ⟺ f(a') ∈ L for every f in M(A)."""
    m = monoid if monoid is not None else translation_monoid(algebra)
    profiles = [tuple(f.image[a] in subset.members for f in m.elements) for a in algebra.elements]
    return Partition(class_id=canonicalize(profiles))


def syntactic_congruence(algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]") -> SyntacticResult:
    """sigma_L, computed by the translation-monoid description and by refinement, which must agree."""
    L = as_subset(algebra, subset)
    monoid = translation_monoid(algebra)
    by_monoid = congruence_by_translations(algebra, L, monoid)
    by_refinement = largest_congruence_saturating(algebra, L.members)
    if by_monoid != by_refinement.partition:
        witness = by_monoid.first_difference(by_refinement.partition)
        raise AlgorithmDisagreementError(
            f"sigma_L on {algebra.name} for L={L}: translation monoid gives {by_monoid}, "
            f"refinement gives {by_refinement}; witness pair {witness}",
            component="syntactic",
            details={"witness": list(witness or ()), "subset": L.sorted()},
        )
    sigma = by_refinement
    q, eta = quotient(algebra, sigma)
    logger.debug("sigma_L on %s for L=%s: %s (|M(A)|=%d)", algebra.name, L, sigma, len(monoid))
    return SyntacticResult(subset=L, congruence=sigma, eta=eta, quotient=q, monoid_size=len(monoid))


def syntactic_partition(algebra: FiniteAlgebra, subset: Iterable[int]) -> Partition:
    """sigma_L by refinement alone, for sweeps that do not need the quotient."""
    return largest_congruence_saturating(algebra, subset).partition


def equality_congruence(algebra: FiniteAlgebra) -> Congruence:
    return certify(algebra, Partition.equality(algebra.size))
