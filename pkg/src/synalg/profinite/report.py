"""
Witness report for the equivalent characterizations of profiniteness, read on one
finite algebra and one subset.
"""

from collections.abc import Iterable

from synalg.core.algebra import FiniteAlgebra, is_associative
from synalg.core.models import ConditionReport, ConditionStatus, EquivalenceReport
from synalg.core.terms import Term, format_term
from synalg.syntactic.determination import (
    classical_semigroup_terms,
    determining_set_from_quotient,
    is_S_determined,
    is_term_determined,
)
from synalg.syntactic.report import provenance_terms
from synalg.syntactic.syntactic import SubsetL, as_subset, syntactic_congruence

_TOPOLOGICAL_NOTE = "a statement about the topology of C(A); vacuous for a finite discrete algebra"


def semigroup_symbol(algebra: FiniteAlgebra) -> str | None:
    """The multiplication when the signature is one associative binary symbol plus constants."""
    ranks = algebra.signature.ranks
    binaries = ranks.get(2, ())
    if len(binaries) != 1 or any(r not in (0, 2) for r in ranks):
        return None
    return binaries[0] if is_associative(algebra, binaries[0]) else None


def _status(ok: bool) -> ConditionStatus:
    return ConditionStatus.HOLDS if ok else ConditionStatus.FAILS


def theorem61_report(algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]") -> EquivalenceReport:
    L = as_subset(algebra, subset)
    result = syntactic_congruence(algebra, L)
    eta = result.eta
    image = sorted({eta.image[a] for a in L.members})
    recognized = eta.preimage(image) == L.members

    F = determining_set_from_quotient(algebra, L)
    by_maps = is_S_determined(algebra, L, F, sigma=result.congruence.partition)

    mul = semigroup_symbol(algebra)
    terms: list[Term] = classical_semigroup_terms(mul) if mul is not None else provenance_terms(F)
    by_terms = is_term_determined(algebra, L, terms)

    conditions = [
        ConditionReport(
            number=1,
            statement="A is profinite",
            status=ConditionStatus.TRIVIAL,
            note="every finite discrete algebra is profinite",
        ),
        ConditionReport(
            number=2,
            statement="sigma_L is a clopen congruence",
            status=_status(result.quotient.size == result.index),
            witness={"index": result.index, "classes": [list(b) for b in result.congruence.partition.blocks()]},
        ),
        *(
            ConditionReport(number=n, statement=s, status=ConditionStatus.OUT_OF_SCOPE, note=_TOPOLOGICAL_NOTE)
            for n, s in (
                (3, "M(A) is equicontinuous"),
                (4, "M(A) is relatively compact in C(A)"),
                (5, "the closure of M(A) in C(A) is a profinite monoid"),
            )
        ),
        ConditionReport(
            number=6,
            statement="some homomorphism phi onto a finite B has L = phi^-1(phi(L))",
            status=_status(recognized),
            witness={"target_size": result.quotient.size, "phi": list(eta.image), "image": image},
        ),
        ConditionReport(
            number=7,
            statement="sigma_L is determined by a finite set of terms",
            status=_status(by_terms.determined),
            witness={
                "terms": [format_term(t) for t in terms],
                "source": "semigroup contexts" if mul is not None else "lifted quotient translations",
            },
        ),
        ConditionReport(
            number=8,
            statement="sigma_L is F-determined by a finite F inside M(A)",
            status=_status(by_maps.determined),
            witness={"size": len(F), "maps": [list(f.image) for f in F.functions]},
        ),
        ConditionReport(
            number=9,
            statement="sigma_L is F-determined by a finite F inside C(A)",
            status=ConditionStatus.IMPLIED if by_maps.determined else ConditionStatus.FAILS,
            note="implied by condition 8 since M(A) is inside C(A)",
        ),
        ConditionReport(
            number=10,
            statement="sigma_L is determined by a compact subset of C(A)",
            status=ConditionStatus.IMPLIED if by_maps.determined else ConditionStatus.FAILS,
            note="implied by condition 8: finite sets are compact",
        ),
    ]
    return EquivalenceReport(algebra=algebra.name, subset=L.sorted(), conditions=conditions)
