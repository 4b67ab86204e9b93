# Partitions, congruences, quotients and meets
from synalg.congruence.congruence import (
    Congruence,
    certify,
    enumerate_congruences_oracle,
    is_congruence,
    kernel,
    largest_congruence_saturating,
    meet,
    quotient,
)
from synalg.congruence.partition import Partition, all_partitions, canonicalize, saturates

__all__ = [
    "Congruence",
    "Partition",
    "all_partitions",
    "canonicalize",
    "certify",
    "enumerate_congruences_oracle",
    "is_congruence",
    "kernel",
    "largest_congruence_saturating",
    "meet",
    "quotient",
    "saturates",
]
