"""
Determination of syntactic congruences by sets of maps and by sets of terms.
See: docs/core/SYNTACTIC.md
"""

import itertools
from collections.abc import Iterable, Sequence
from typing import Literal

from pydantic import BaseModel, ConfigDict

from synalg.congruence.partition import Partition, canonicalize
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import LiftError, MalformedTermError, NotDeterminingError
from synalg.core.terms import (
    Term,
    check_term,
    count_occurrences,
    eval_term,
    fresh_names,
    linearize,
    op,
    rename_variable,
    term_variables,
    var,
)
from synalg.syntactic.syntactic import SubsetL, as_subset, syntactic_congruence, syntactic_partition
from synalg.translations.monoid import (
    Provenance,
    Transformation,
    identity_map,
    translation_monoid,
)
from synalg.utils.logger import get_logger

logger = get_logger("synalg.syntactic")


class DeterminingSet(BaseModel):
    """A finite set of self-maps, optionally produced from a term list."""

    model_config = ConfigDict(frozen=True)

    functions: tuple[Transformation, ...]
    kind: Literal["self-maps", "linear-terms"] = "self-maps"
    terms: tuple[Term, ...] = ()

    def __len__(self) -> int:
        return len(self.functions)

    def images(self) -> list[tuple[int, ...]]:
        return [f.image for f in self.functions]


class DeterminationVerdict(BaseModel):
    """Outcome of a determination check; falsy when the set does not determine sigma_L."""

    model_config = ConfigDict(frozen=True)

    determined: bool
    witness: tuple[int, int] | None = None
    # "extra" : the pair is identified by the maps but split by sigma_L
    # "missing": the pair is in sigma_L but some map separates it
    direction: Literal["extra", "missing"] | None = None
    sigma_index: int
    intersection_index: int

    def __bool__(self) -> bool:
        return self.determined


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    index: int
    set_size: int
    bound: int


def intersection_partition(n: int, subset: SubsetL, functions: Iterable[Transformation]) -> Partition:
    """The meet of alpha_{f^-1(L)} over ``functions``; the universal relation for an empty family."""
    maps = list(functions)
    return Partition(class_id=canonicalize([tuple(f.image[a] in subset.members for f in maps) for a in range(n)]))


def _as_functions(S: "DeterminingSet | Iterable[Transformation]") -> tuple[Transformation, ...]:
    return S.functions if isinstance(S, DeterminingSet) else tuple(S)


def is_S_determined(  # noqa: N802
    algebra: FiniteAlgebra,
    subset: "SubsetL | Iterable[int]",
    S: "DeterminingSet | Iterable[Transformation]",
    *,
    sigma: Partition | None = None,
) -> DeterminationVerdict:
    """Whether sigma_L equals the meet of alpha_{f^-1(L)} over f in S; both inclusions are checked."""
    L = as_subset(algebra, subset)
    sigma = sigma if sigma is not None else syntactic_partition(algebra, L.members)
    meet = intersection_partition(algebra.size, L, _as_functions(S))
    witness = meet.first_difference(sigma)
    direction: Literal["extra", "missing"] | None = None
    if witness is not None:
        direction = "extra" if meet.related(*witness) else "missing"
    return DeterminationVerdict(
        determined=witness is None,
        witness=witness,
        direction=direction,
        sigma_index=sigma.index,
        intersection_index=meet.index,
    )


def _check_distinguished(algebra: FiniteAlgebra, terms: Sequence[Term], x1: str) -> None:
    if x1 in algebra.signature:
        raise MalformedTermError(
            f"distinguished variable '{x1}' clashes with a signature symbol", details={"variable": x1}
        )
    for t in terms:
        check_term(t, algebra.signature)


def determining_set_from_terms(algebra: FiniteAlgebra, terms: Sequence[Term], x1: str = "x1") -> DeterminingSet:
    """F_T: every map a -> t(a, b_2, ..., b_m) for t in ``terms`` and all parameter tuples."""
    _check_distinguished(algebra, terms, x1)
    seen: dict[tuple[int, ...], Transformation] = {}
    for t in terms:
        params = [v for v in term_variables(t) if v != x1]
        for values in itertools.product(algebra.elements, repeat=len(params)):
            env = dict(zip(params, values))
            image = tuple(eval_term(algebra, t, {**env, x1: a}) for a in algebra.elements)
            if image not in seen:
                seen[image] = Transformation(image=image, provenance=Provenance(kind="term", term=t, assignment=env))
    return DeterminingSet(functions=tuple(seen.values()), kind="linear-terms", terms=tuple(terms))


def is_term_determined(
    algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]", terms: Sequence[Term], x1: str = "x1"
) -> DeterminationVerdict:
    """Whether the term set determines sigma_L, quantifying over all parameter tuples.

    Terms need not be linear in ``x1``; they are evaluated directly.
    """
    return is_S_determined(algebra, subset, determining_set_from_terms(algebra, terms, x1))


def linearized_term_set(terms: Sequence[Term], x1: str = "x1") -> list[Term]:
    """Replace every term by its linearization in ``x1``, renaming the fresh variable back to ``x1``.

    Terms without ``x1`` only give constant maps and are dropped.
    """
    out: list[Term] = []
    for t in terms:
        if count_occurrences(t, x1) == 0:
            logger.debug("dropping %s: no occurrence of %s", t, x1)
            continue
        x, _, _ = fresh_names(t, x1)
        out.extend(rename_variable(s, x, x1) for s in linearize(t, x1))
    return out


def classical_semigroup_terms(symbol: str = "*") -> list[Term]:
    """x1, x2·x1, x1·x2 and (x2·x1)·x3: the two-sided context terms of a semigroup."""
    x1, x2, x3 = var("x1"), var("x2"), var("x3")
    return [x1, op(symbol, x2, x1), op(symbol, x1, x2), op(symbol, op(symbol, x2, x1), x3)]


def determining_set_from_quotient(algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]") -> DeterminingSet:
    """A finite F ⊆ M(A) determining sigma_L, by lifting M(A/sigma_L) through the syntactic morphism.

    Each f in M(A/sigma_L) is replayed from its elementary-translation sequence; every
    fixed class argument is replaced by its smallest preimage. The lift is recorded as a
    term linear in ``x1`` with parameters ``p1, p2, ...`` and their values.
    """
    L = as_subset(algebra, subset)
    result = syntactic_congruence(algebra, L)
    q, eta = result.quotient, result.eta
    representative: dict[int, int] = {}
    for a in algebra.elements:
        representative.setdefault(eta.image[a], a)

    quotient_monoid = translation_monoid(q)
    lifts: dict[tuple[int, ...], Transformation] = {}
    for f in quotient_monoid.elements:
        term = var("x1")
        env: dict[str, int] = {}
        image = tuple(algebra.elements)
        for j in (f.provenance.sequence if f.provenance else None) or ():
            g = quotient_monoid.generators[j].provenance
            if g is None or g.kind != "elementary" or g.symbol is None:
                raise LiftError("quotient generator without elementary provenance", component="syntactic")
            fixed = tuple(representative[c] for c in g.fixed or ())
            coordinate = g.coordinate or 0
            children: list[Term] = []
            for b in fixed:
                name = f"p{len(env) + 1}"
                env[name] = b
                children.append(var(name))
            children.insert(coordinate, term)
            term = op(g.symbol, *children)
            step = []
            for x in algebra.elements:
                args = (*fixed[:coordinate], x, *fixed[coordinate:])
                step.append(algebra.op(g.symbol, *args))
            image = tuple(step[b] for b in image)
        for a in algebra.elements:
            if eta.image[image[a]] != f.image[eta.image[a]]:
                raise LiftError(
                    f"lift of {f.format()} does not commute with eta at {a}",
                    component="syntactic",
                    details={"element": a, "quotient_map": list(f.image)},
                )
        if image not in lifts:
            provenance = Provenance(kind="term", term=term, assignment=env) if env or term != var("x1") else None
            lifts[image] = (
                Transformation(image=image, provenance=provenance) if provenance else identity_map(algebra.size)
            )

    F = DeterminingSet(functions=tuple(lifts.values()), kind="self-maps")
    verdict = is_S_determined(algebra, L, F, sigma=result.congruence.partition)
    if not verdict:
        raise LiftError(
            f"lifted set does not determine sigma_L (witness {verdict.witness})",
            component="syntactic",
            details={"witness": list(verdict.witness or ())},
        )
    logger.debug("lifted set for L=%s on %s: %d maps from %d", L, algebra.name, len(F), len(quotient_monoid))
    return F


def _require_determining(algebra: FiniteAlgebra, L: SubsetL, F: "DeterminingSet | Iterable[Transformation]") -> None:
    verdict = is_S_determined(algebra, L, F)
    if not verdict:
        raise NotDeterminingError(
            f"the given set does not determine sigma_L for L={L} (witness {verdict.witness})",
            component="syntactic",
            details={"witness": list(verdict.witness or ()), "direction": verdict.direction},
        )


def minimal_determining_subset(
    algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]", F: "DeterminingSet | Iterable[Transformation]"
) -> DeterminingSet:
    """Greedy removal until no single map can be dropped.

    Candidates are tried from the last to the first in sorted image order, so maps that
    sort early (the identity first of all) are the ones kept.
    """
    L = as_subset(algebra, subset)
    functions = _as_functions(F)
    _require_determining(algebra, L, functions)
    sigma = syntactic_partition(algebra, L.members)
    current = sorted(set(functions))
    changed = True
    while changed:
        changed = False
        for f in reversed(list(current)):
            trial = [g for g in current if g != f]
            if is_S_determined(algebra, L, trial, sigma=sigma):
                current = trial
                changed = True
    kind = F.kind if isinstance(F, DeterminingSet) else "self-maps"
    return DeterminingSet(functions=tuple(current), kind=kind)


def index_bound_check(
    algebra: FiniteAlgebra, subset: "SubsetL | Iterable[int]", F: "DeterminingSet | Iterable[Transformation]"
) -> BoundReport:
    """The counting bound: a determining F leaves at most 2^|F| classes."""
    L = as_subset(algebra, subset)
    functions = _as_functions(F)
    _require_determining(algebra, L, functions)
    index = syntactic_partition(algebra, L.members).index
    size = len(set(functions))
    return BoundReport(holds=index <= 2**size, index=index, set_size=size, bound=2**size)
