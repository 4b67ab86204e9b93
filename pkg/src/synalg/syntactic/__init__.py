# Syntactic congruences, determination and pullbacks
from synalg.syntactic.determination import (
    BoundReport,
    DeterminationVerdict,
    DeterminingSet,
    classical_semigroup_terms,
    determining_set_from_quotient,
    determining_set_from_terms,
    index_bound_check,
    intersection_partition,
    is_S_determined,
    is_term_determined,
    linearized_term_set,
    minimal_determining_subset,
)
from synalg.syntactic.pullback import PullbackReport, pull_back, pullback_syntactic_check
from synalg.syntactic.report import provenance_terms, theorem516_report
from synalg.syntactic.syntactic import (
    SubsetL,
    SyntacticResult,
    as_subset,
    congruence_by_translations,
    equality_congruence,
    syntactic_congruence,
    syntactic_partition,
)

__all__ = [
    "BoundReport",
    "DeterminationVerdict",
    "DeterminingSet",
    "PullbackReport",
    "SubsetL",
    "SyntacticResult",
    "as_subset",
    "classical_semigroup_terms",
    "congruence_by_translations",
    "determining_set_from_quotient",
    "determining_set_from_terms",
    "equality_congruence",
    "index_bound_check",
    "intersection_partition",
    "is_S_determined",
    "is_term_determined",
    "linearized_term_set",
    "minimal_determining_subset",
    "provenance_terms",
    "pull_back",
    "pullback_syntactic_check",
    "syntactic_congruence",
    "syntactic_partition",
    "theorem516_report",
]
