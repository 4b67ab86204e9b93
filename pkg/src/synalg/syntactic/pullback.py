"""
Syntactic congruences pulled back along surjective homomorphisms.
See: docs/core/SYNTACTIC.md
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict

from synalg.congruence.partition import Partition
from synalg.core.exceptions import NotAHomomorphismError, NotSurjectiveError, PullbackIdentityError
from synalg.core.homomorphism import Homomorphism
from synalg.syntactic.syntactic import SubsetL, as_subset, syntactic_congruence
from synalg.utils.logger import get_logger

logger = get_logger("synalg.syntactic")


class PullbackReport(BaseModel):
    """Both sides of the pullback identity and the induced isomorphism of quotients."""

    model_config = ConfigDict(frozen=True)

    subset: SubsetL
    preimage: tuple[int, ...]
    sigma_target: Partition
    sigma_source: Partition
    pulled_back: Partition
    isomorphism: Homomorphism
    holds: bool = True


def pull_back(phi: Homomorphism, p: Partition) -> Partition:
    """(phi x phi)^-1 of a partition of the target."""
    return Partition(class_id=tuple(p.class_id[b] for b in phi.image))


def pullback_syntactic_check(phi: Homomorphism, subset: "SubsetL | Iterable[int]") -> PullbackReport:
    """Check that sigma of phi^-1(L) is the pullback of sigma_L and that the quotients are isomorphic.

    Raises:
        NotSurjectiveError: ``phi`` misses part of its target.
        PullbackIdentityError: either identity fails; this never happens for a correct engine.
    """
    if not phi.surjective:
        missing = sorted(set(phi.target.elements) - set(phi.image))
        raise NotSurjectiveError(
            f"{phi.source.name} -> {phi.target.name} misses {missing}",
            component="syntactic",
            details={"missing": missing},
        )
    L = as_subset(phi.target, subset)
    preimage = phi.preimage(L.members)
    target = syntactic_congruence(phi.target, L)
    source = syntactic_congruence(phi.source, preimage)
    pulled = pull_back(phi, target.congruence.partition)
    if pulled != source.congruence.partition:
        witness = pulled.first_difference(source.congruence.partition)
        raise PullbackIdentityError(
            f"pullback of {target.congruence} is {pulled}, but sigma of the preimage is {source.congruence}",
            component="syntactic",
            details={"witness": list(witness or ())},
        )

    # class of a in A/sigma  ->  class of phi(a) in B/sigma
    induced = [0] * source.quotient.size
    for a in phi.source.elements:
        induced[source.eta.image[a]] = target.eta.image[phi.image[a]]
    try:
        iso = Homomorphism(source=source.quotient, target=target.quotient, image=tuple(induced))
    except NotAHomomorphismError as e:
        raise PullbackIdentityError(
            "induced map of quotients is not a homomorphism", component="syntactic", original_error=e
        ) from e
    if sorted(induced) != list(target.quotient.elements):
        raise PullbackIdentityError(
            f"induced map {induced} of quotients is not a bijection",
            component="syntactic",
            details={"image": induced},
        )
    logger.debug("pullback along %s -> %s holds for L=%s", phi.source.name, phi.target.name, L)
    return PullbackReport(
        subset=L,
        preimage=tuple(sorted(preimage)),
        sigma_target=target.congruence.partition,
        sigma_source=source.congruence.partition,
        pulled_back=pulled,
        isomorphism=iso,
    )
