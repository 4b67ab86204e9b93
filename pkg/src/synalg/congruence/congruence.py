"""
Congruences: verification, the largest congruence saturating a subset, quotients and meets.
See: docs/core/CONGRUENCE.md
"""

import itertools
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, PrivateAttr

from synalg.congruence.partition import Partition, all_partitions
from synalg.congruence.refinement import refine
from synalg.core.algebra import FiniteAlgebra, table_index
from synalg.core.exceptions import (
    AlgebraMismatchError,
    CarrierTooLargeError,
    NotACongruenceError,
    PartitionError,
    WellDefinednessError,
)
from synalg.core.homomorphism import Homomorphism
from synalg.translations.monoid import elementary_translations
from synalg.utils.logger import get_logger

logger = get_logger("synalg.congruence")

ORACLE_MAX_CARRIER = 5


class Congruence(BaseModel):
    """A partition of an algebra's carrier, certified compatible by :func:`certify`."""

    model_config = ConfigDict(frozen=True)

    algebra: FiniteAlgebra
    partition: Partition

    _certified: bool = PrivateAttr(default=False)

    @property
    def certified(self) -> bool:
        return self._certified

    @property
    def index(self) -> int:
        return self.partition.index

    def related(self, a: int, b: int) -> bool:
        return self.partition.related(a, b)

    def contains(self, other: "Congruence | Partition") -> bool:
        """True when ``other`` (as a relation) is a subset of this congruence."""
        p = other.partition if isinstance(other, Congruence) else other
        return p.refines(self.partition)

    # the certification flag is not part of the relation
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.partition == other.partition and self.algebra == other.algebra

    def __hash__(self) -> int:
        return hash(self.partition)

    def __str__(self) -> str:
        return self.partition.format()


def _check_length(algebra: FiniteAlgebra, p: Partition) -> None:
    if p.size != algebra.size:
        raise PartitionError(
            f"partition has length {p.size} but carrier of {algebra.name} has size {algebra.size}",
            details={"length": p.size, "size": algebra.size},
        )


def is_congruence(algebra: FiniteAlgebra, p: Partition) -> bool:
    """Compatibility, checked one coordinate at a time through the elementary translations."""
    _check_length(algebra, p)
    blocks = p.blocks()
    for f in elementary_translations(algebra):
        for block in blocks:
            if len({p.class_id[f.image[a]] for a in block}) > 1:
                return False
    return True


def certify(algebra: FiniteAlgebra, p: Partition) -> Congruence:
    """Wrap ``p`` as a Congruence, raising NotACongruenceError if it is not one."""
    if not is_congruence(algebra, p):
        raise NotACongruenceError(
            f"{p.format()} is not a congruence on {algebra.name}",
            component="congruence",
            details={"partition": p.format()},
        )
    congruence = Congruence(algebra=algebra, partition=p)
    congruence._certified = True
    return congruence


def largest_congruence_saturating(algebra: FiniteAlgebra, subset: Iterable[int]) -> Congruence:
    """The largest congruence contained in alpha_L, by refinement of alpha_L."""
    members = set(subset)
    maps = [f.image for f in elementary_translations(algebra)]
    labels = refine([a in members for a in algebra.elements], maps)
    return certify(algebra, Partition(class_id=labels))


def quotient(algebra: FiniteAlgebra, theta: Congruence) -> tuple[FiniteAlgebra, Homomorphism]:
    """A/theta with classes numbered canonically, plus the canonical projection."""
    if not theta.certified:
        raise NotACongruenceError("quotient needs a certified congruence", component="congruence")
    if theta.algebra != algebra:
        raise AlgebraMismatchError(f"congruence lives on {theta.algebra.name}, not {algebra.name}")
    class_id = theta.partition.class_id
    k = theta.partition.index
    n = algebra.size
    tables: dict[str, tuple[int, ...]] = {}
    for symbol, rank in algebra.signature.symbols:
        table: list[int | None] = [None] * (k**rank)
        source = algebra.tables[symbol]
        for args in itertools.product(range(n), repeat=rank):
            target = class_id[source[table_index(args, n)]]
            slot = table_index([class_id[a] for a in args], k)
            if table[slot] is None:
                table[slot] = target
            elif table[slot] != target:
                raise WellDefinednessError(
                    f"'{symbol}' on {algebra.name}/{theta} depends on representatives at {args}",
                    component="congruence",
                    details={"symbol": symbol, "args": list(args)},
                )
        tables[symbol] = tuple(v if v is not None else 0 for v in table)
    subsets = {name: tuple(sorted({class_id[a] for a in members})) for name, members in algebra.subsets.items()}
    q = FiniteAlgebra(
        name=f"{algebra.name}/{theta.partition.format()}",
        signature=algebra.signature,
        size=k,
        tables=tables,
        subsets=subsets,
    )
    return q, Homomorphism(source=algebra, target=q, image=class_id)


def meet(first: Congruence, second: Congruence) -> Congruence:
    if first.algebra != second.algebra:
        raise AlgebraMismatchError(
            f"cannot meet congruences on {first.algebra.name} and {second.algebra.name}", component="congruence"
        )
    return certify(first.algebra, first.partition.meet(second.partition))


def kernel(phi: Homomorphism) -> Partition:
    """The equivalence relation identifying elements with the same image."""
    return Partition(class_id=phi.image)


def enumerate_congruences_oracle(algebra: FiniteAlgebra, max_carrier: int = ORACLE_MAX_CARRIER) -> list[Congruence]:
    """Brute force: every partition of the carrier that is compatible."""
    limit = min(max_carrier, ORACLE_MAX_CARRIER)
    if algebra.size > limit:
        raise CarrierTooLargeError(
            f"oracle refuses carrier of size {algebra.size} (limit {limit})",
            component="congruence",
            details={"size": algebra.size, "limit": limit},
        )
    out = [certify(algebra, p) for p in all_partitions(algebra.size) if is_congruence(algebra, p)]
    logger.debug("oracle on %s: %d congruences", algebra.name, len(out))
    return out
