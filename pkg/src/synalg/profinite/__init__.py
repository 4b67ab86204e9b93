# Inverse systems, omega powers and residual finiteness
from synalg.profinite.omega import (
    OMEGA,
    CyclicProfile,
    Exponent,
    cyclic_profile,
    omega_enriched_algebra,
    omega_power,
)
from synalg.profinite.report import theorem61_report
from synalg.profinite.residual import (
    ResidualReport,
    partition_meet_congruence,
    separating_homomorphism,
    theorem41_report,
)
from synalg.profinite.system import (
    CylinderSet,
    InverseSystem,
    Recognition,
    SystemDiagnostics,
    Thread,
    cylinder_syntactic,
    parse_system,
    quotient_system,
    recognize_clopen,
    separate_points,
    serialize_system,
    thread_from_top,
    validate_system,
)

__all__ = [
    "OMEGA",
    "CyclicProfile",
    "CylinderSet",
    "Exponent",
    "InverseSystem",
    "Recognition",
    "ResidualReport",
    "SystemDiagnostics",
    "Thread",
    "cyclic_profile",
    "cylinder_syntactic",
    "omega_enriched_algebra",
    "omega_power",
    "parse_system",
    "partition_meet_congruence",
    "quotient_system",
    "recognize_clopen",
    "separate_points",
    "separating_homomorphism",
    "serialize_system",
    "theorem41_report",
    "theorem61_report",
    "thread_from_top",
    "validate_system",
]
