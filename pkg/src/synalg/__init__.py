"""
synalg: syntactic congruences of finite algebras.
Determining sets, quotients, inverse systems and syntactic monoids, all computed exactly.
"""

from typing import Any

from synalg.checks import BaseSuite
from synalg.congruence import Congruence, Partition, largest_congruence_saturating, quotient
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import InvariantViolation, SynalgError
from synalg.core.formats import parse_algebra, serialize_algebra
from synalg.core.homomorphism import Homomorphism
from synalg.core.models import EquivalenceReport, SuiteResult
from synalg.core.registry import SuiteRegistry
from synalg.core.signature import Signature
from synalg.core.terms import Term, eval_term, linearize, parse_term
from synalg.languages import Dfa, syntactic_monoid
from synalg.profinite import InverseSystem, omega_power, theorem61_report
from synalg.syntactic import (
    determining_set_from_quotient,
    is_S_determined,
    pullback_syntactic_check,
    syntactic_congruence,
    theorem516_report,
)
from synalg.translations import translation_monoid
from synalg.utils.config import load_config

__version__ = "0.1.0"


def run_suite(name: str, **config: Any) -> SuiteResult:
    """Run a registered check suite; keyword arguments override the loaded configuration."""
    suite_cls = SuiteRegistry().get(name)
    return suite_cls(load_config(**config)).run()


__all__ = [
    "BaseSuite",
    "Congruence",
    "Dfa",
    "EquivalenceReport",
    "FiniteAlgebra",
    "Homomorphism",
    "InverseSystem",
    "InvariantViolation",
    "Partition",
    "Signature",
    "SuiteRegistry",
    "SuiteResult",
    "SynalgError",
    "Term",
    "determining_set_from_quotient",
    "eval_term",
    "is_S_determined",
    "largest_congruence_saturating",
    "linearize",
    "omega_power",
    "parse_algebra",
    "parse_term",
    "pullback_syntactic_check",
    "quotient",
    "run_suite",
    "serialize_algebra",
    "syntactic_congruence",
    "syntactic_monoid",
    "theorem516_report",
    "theorem61_report",
    "translation_monoid",
    "__version__",
]
