"""
Consistency report for the equivalent descriptions of sigma_L on a finite algebra.
"""

from collections.abc import Iterable

from synalg.congruence.congruence import is_congruence
from synalg.core.algebra import FiniteAlgebra
from synalg.core.models import ConditionReport, ConditionStatus, EquivalenceReport
from synalg.core.terms import Term, format_term, var
from synalg.syntactic.determination import (
    DeterminingSet,
    determining_set_from_quotient,
    intersection_partition,
    is_S_determined,
    is_term_determined,
)
from synalg.syntactic.syntactic import SubsetL, as_subset, syntactic_congruence


def provenance_terms(F: DeterminingSet) -> list[Term]:
    """The distinct linear terms recorded on the maps of ``F``, identity as ``x1``."""
    terms: list[Term] = []
    for f in F.functions:
        t = f.provenance.term if f.provenance and f.provenance.term is not None else var("x1")
        if t not in terms:
            terms.append(t)
    return terms


def _status(ok: bool) -> ConditionStatus:
    return ConditionStatus.HOLDS if ok else ConditionStatus.FAILS


def theorem516_report(algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]") -> EquivalenceReport:
    """Assemble witnesses for: clopen, compactly determined, finitely determined, term-determined, finite quotient."""
    L = as_subset(algebra, subset)
    result = syntactic_congruence(algebra, L)
    sigma = result.congruence.partition
    F = determining_set_from_quotient(algebra, L)
    by_maps = is_S_determined(algebra, L, F, sigma=sigma)
    terms = provenance_terms(F)
    by_terms = is_term_determined(algebra, L, terms)

    # L is a union of classes of a congruence whose classes are the fibres of eta
    fibres = len(set(result.eta.image))
    clopen = is_congruence(algebra, sigma) and sigma.saturates(L.members) and fibres == result.index

    # the maps of F cut the carrier into at most 2^|F| pieces, one per element of the quotient
    pieces = intersection_partition(algebra.size, L, F.functions).index
    bound = 2 ** len(F)
    finite = set(result.eta.image) == set(result.quotient.elements) and result.quotient.size == pieces <= bound

    conditions = [
        ConditionReport(
            number=1,
            statement="sigma_L is clopen (finite index)",
            status=_status(clopen),
            witness={"index": result.index, "classes": [list(b) for b in sigma.blocks()]},
        ),
        ConditionReport(
            number=2,
            statement="sigma_L is determined by a compact set of maps",
            status=ConditionStatus.IMPLIED,
            note="implied by condition 3: finite sets are compact",
        ),
        ConditionReport(
            number=3,
            statement="sigma_L is determined by a finite set of maps",
            status=_status(by_maps.determined),
            witness={"size": len(F), "maps": [list(f.image) for f in F.functions]},
        ),
        ConditionReport(
            number=4,
            statement="sigma_L is determined by a finite set of terms",
            status=_status(by_terms.determined),
            witness={"terms": [format_term(t) for t in terms]},
        ),
        ConditionReport(
            number=5,
            statement="the quotient A/sigma_L is finite",
            status=_status(finite),
            witness={"quotient_size": result.quotient.size, "pieces": pieces, "bound": bound},
        ),
    ]
    return EquivalenceReport(algebra=algebra.name, subset=L.sorted(), conditions=conditions)
