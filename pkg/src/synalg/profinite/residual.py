"""
Residual finiteness: separating homomorphisms, congruences saturating a partition into
clopen blocks, and the finite check that every cylinder is recognized.
See: docs/core/PROFINITE.md
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field

from synalg.congruence.congruence import Congruence, certify, meet
from synalg.congruence.partition import Partition
from synalg.core.algebra import FiniteAlgebra, check_element
from synalg.core.exceptions import ElementRangeError, SaturationError
from synalg.core.homomorphism import Homomorphism
from synalg.profinite.system import InverseSystem, level_subsets, require_valid
from synalg.syntactic.syntactic import syntactic_congruence
from synalg.utils.logger import get_logger

logger = get_logger("synalg.profinite")

EXHAUSTIVE_CARRIER_LIMIT = 10


def partition_meet_congruence(algebra: FiniteAlgebra, blocks: Iterable[Iterable[int]]) -> Congruence:
    """The meet of sigma_{L_i} over the blocks L_i of a partition of the carrier."""
    partition = Partition.from_blocks(algebra.size, blocks)
    theta = certify(algebra, Partition.universal(algebra.size))
    for block in partition.blocks():
        theta = meet(theta, syntactic_congruence(algebra, block).congruence)
    for block in partition.blocks():
        if not theta.partition.saturates(block):
            raise SaturationError(
                f"{theta} does not saturate the block {set(block)}",
                component="profinite",
                details={"block": list(block)},
            )
    return theta


def separating_homomorphism(algebra: FiniteAlgebra, a: int, b: int) -> Homomorphism:
    """A homomorphism onto a finite algebra with phi(a) != phi(b): the syntactic morphism of {a}."""
    check_element(algebra, a)
    check_element(algebra, b)
    if a == b:
        raise ElementRangeError(f"cannot separate {a} from itself", component="profinite", details={"element": a})
    eta = syntactic_congruence(algebra, {a}).eta
    if eta(a) == eta(b):
        raise SaturationError(f"sigma of {{{a}}} identifies {a} and {b}", component="profinite")
    return eta


class ResidualReport(BaseModel):
    """Cylinders at the top level are recognized by finite quotients and points are separated."""

    model_config = ConfigDict(frozen=True)

    system: str
    level: int
    exhaustive: bool
    cylinders_checked: int
    max_index: int
    pairs_separated: int
    failures: list[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def theorem41_report(system: InverseSystem) -> ResidualReport:
    """Check both directions at the deepest level of ``system``.

    Every subset of the top level (only singletons above ``EXHAUSTIVE_CARRIER_LIMIT``
    elements) has a syntactic congruence that saturates it, and every pair of distinct
    top-level elements is split by some finite quotient.
    """
    require_valid(system)
    level = system.depth
    top = system.level(level)
    exhaustive = top.size <= EXHAUSTIVE_CARRIER_LIMIT
    subsets: Iterable[frozenset[int]] = (
        level_subsets(system, level) if exhaustive else (frozenset({a}) for a in top.elements)
    )
    failures: list[str] = []
    checked = 0
    max_index = 1
    for members in subsets:
        sigma = syntactic_congruence(top, members).congruence
        checked += 1
        max_index = max(max_index, sigma.index)
        if not sigma.partition.saturates(members) or sigma.index > top.size:
            failures.append(f"cylinder {level}:{sorted(members)} is not recognized by sigma")
    separated = 0
    for b in top.elements:
        for a in range(b):
            phi = separating_homomorphism(top, a, b)
            if phi(a) != phi(b):
                separated += 1
            else:
                failures.append(f"{a} and {b} are not separated")
    logger.debug("residual check on %s: %d cylinders, %d pairs", system.name, checked, separated)
    return ResidualReport(
        system=system.name,
        level=level,
        exhaustive=exhaustive,
        cylinders_checked=checked,
        max_index=max_index,
        pairs_separated=separated,
        failures=failures,
    )
