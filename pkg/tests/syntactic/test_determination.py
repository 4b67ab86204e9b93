import itertools
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from synalg.congruence.partition import Partition
from synalg.core.algebra import FiniteAlgebra, is_associative
from synalg.core.exceptions import MalformedTermError, NotDeterminingError
from synalg.core.signature import Signature
from synalg.core.terms import format_term, op, parse_term, var
from synalg.languages.dfa import syntactic_monoid
from synalg.syntactic.determination import (
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
from synalg.syntactic.syntactic import as_subset, syntactic_partition
from synalg.translations.monoid import Transformation, identity_map, translation_monoid
from synalg.utils.random_algebras import random_algebra, random_subset

ROTATIONS = [Transformation(image=tuple((a + k) % 4 for a in range(4))) for k in range(4)]


# --------------------------------------------------------------------------- #
# Determination by maps                                                        #
# --------------------------------------------------------------------------- #


class TestIsSDetermined:
    def test_empty_family_gives_universal(self, z4):
        assert intersection_partition(4, as_subset(z4, {0}), []) == Partition.universal(4)

    def test_identity_determines_evens(self, z4):
        verdict = is_S_determined(z4, {0, 2}, [identity_map(4)])
        assert verdict
        assert verdict.witness is None
        assert verdict.sigma_index == verdict.intersection_index == 2

    def test_identity_alone_merges_too_much(self, z4):
        verdict = is_S_determined(z4, {0}, [identity_map(4)])
        assert not verdict
        assert verdict.witness == (1, 2)
        assert verdict.direction == "extra"
        assert (verdict.sigma_index, verdict.intersection_index) == (4, 2)

    def test_foreign_map_splits_a_class(self, z4):
        squash = Transformation(image=(0, 0, 1, 1))
        verdict = is_S_determined(z4, {0, 2}, [identity_map(4), squash])
        assert verdict.witness == (0, 2)
        assert verdict.direction == "missing"

    def test_all_rotations(self, z4):
        assert is_S_determined(z4, {0}, ROTATIONS)

    def test_accepts_a_determining_set(self, z4):
        F = DeterminingSet(functions=tuple(ROTATIONS))
        assert len(F) == 4
        assert F.images()[1] == (1, 2, 3, 0)
        assert is_S_determined(z4, {0}, F)


# --------------------------------------------------------------------------- #
# Determination by terms                                                       #
# --------------------------------------------------------------------------- #


class TestTerms:
    def test_parameters_range_over_the_carrier(self, z4):
        t = parse_term("+(x1, v)", z4.signature)
        F = determining_set_from_terms(z4, [t])
        assert sorted(F.images()) == sorted(f.image for f in ROTATIONS)
        assert F.kind == "linear-terms"
        assert is_term_determined(z4, {0}, [t])

    def test_x1_alone(self, z4):
        verdict = is_term_determined(z4, {0}, [var("x1")])
        assert not verdict

    def test_nonlinear_terms_evaluate_directly(self, z4):
        t = parse_term("+(x1, x1)", z4.signature)
        assert determining_set_from_terms(z4, [t]).images() == [(0, 2, 0, 2)]

    def test_distinguished_variable_clash(self, z4):
        with pytest.raises(MalformedTermError, match="clashes"):
            determining_set_from_terms(z4, [var("x1")], x1="+")

    def test_linearized_term_set(self):
        terms = [op("+", var("x1"), var("x1")), op("+", var("v"), var("v"))]
        assert [format_term(t) for t in linearized_term_set(terms)] == ["+(x1, z)", "+(y, x1)"]

    def test_classical_semigroup_terms(self):
        assert [format_term(t) for t in classical_semigroup_terms("*")] == [
            "x1",
            "*(x2, x1)",
            "*(x1, x2)",
            "*(*(x2, x1), x3)",
        ]

    def test_classical_terms_determine_z4(self, z4):
        for L in [{0}, {0, 2}, {1, 2}]:
            assert is_term_determined(z4, L, classical_semigroup_terms("+"))


# --------------------------------------------------------------------------- #
# Lifted determining sets, minimal subsets and the counting bound              #
# --------------------------------------------------------------------------- #


class TestDeterminingSetFromQuotient:
    def test_evens_in_z4(self, z4):
        F = determining_set_from_quotient(z4, {0, 2})
        assert F.images() == [(0, 1, 2, 3), (1, 2, 3, 0)]
        lift = F.functions[1].provenance
        assert format_term(lift.term) == "+(x1, p1)"
        assert lift.assignment == {"p1": 1}

    def test_constant_operation(self, c3):
        F = determining_set_from_quotient(c3, {1})
        assert sorted(F.images()) == [(0, 0, 0), (0, 1, 2)]

    def test_lifts_lie_in_the_translation_monoid(self, z4):
        monoid = translation_monoid(z4)
        assert all(f in monoid for f in determining_set_from_quotient(z4, {0}).functions)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_lifted_set_determines(self, seed):
        rng = random.Random(seed)
        algebra = random_algebra(rng, rng.randint(1, 4))
        L = random_subset(rng, algebra.size)
        F = determining_set_from_quotient(algebra, L)
        assert is_S_determined(algebra, L, F)
        assert index_bound_check(algebra, L, F).holds


class TestMinimalDeterminingSubset:
    def test_evens_keep_identity(self, z4):
        F = determining_set_from_quotient(z4, {0, 2})
        assert minimal_determining_subset(z4, {0, 2}, F).images() == [(0, 1, 2, 3)]

    def test_singleton_needs_three_rotations(self, z4):
        minimal = minimal_determining_subset(z4, {0}, ROTATIONS)
        assert minimal.images() == [(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1)]
        assert is_S_determined(z4, {0}, minimal)

    def test_rejects_non_determining_input(self, z4):
        with pytest.raises(NotDeterminingError):
            minimal_determining_subset(z4, {0}, [identity_map(4)])

    def test_no_single_map_can_be_dropped(self, z4):
        minimal = minimal_determining_subset(z4, {0}, ROTATIONS)
        for f in minimal.functions:
            rest = [g for g in minimal.functions if g != f]
            assert not is_S_determined(z4, {0}, rest)


class TestIndexBound:
    def test_rotations(self, z4):
        report = index_bound_check(z4, {0}, ROTATIONS)
        assert (report.holds, report.index, report.set_size, report.bound) == (True, 4, 4, 16)

    def test_requires_determining_set(self, z4):
        with pytest.raises(NotDeterminingError):
            index_bound_check(z4, {0}, [identity_map(4)])

    def test_index_matches_sigma(self, z4):
        assert index_bound_check(z4, {0, 2}, [identity_map(4)]).index == syntactic_partition(z4, {0, 2}).index


# --------------------------------------------------------------------------- #
# Rejection below the counting bound                                           #
# --------------------------------------------------------------------------- #


class TestTooFewMaps:
    def test_no_single_map_splits_z4_four_ways(self, z4):
        for image in itertools.product(range(4), repeat=4):
            assert not is_S_determined(z4, {0}, [Transformation(image=image)])

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_families_below_the_bound_are_rejected(self, seed):
        rng = random.Random(seed)
        algebra = random_algebra(rng, rng.randint(2, 4))
        L = random_subset(rng, algebra.size)
        index = syntactic_partition(algebra, L).index
        assume(index >= 2)
        k = (index - 1).bit_length() - 1  # largest k with 2^k < index
        n = algebra.size
        F = [Transformation(image=tuple(rng.randrange(n) for _ in range(n))) for _ in range(k)]
        verdict = is_S_determined(algebra, L, F)
        assert not verdict
        assert verdict.intersection_index <= 2**k < verdict.sigma_index


# --------------------------------------------------------------------------- #
# The classical contexts on semigroups                                         #
# --------------------------------------------------------------------------- #


def semigroups(n):
    signature = Signature(symbols=(("*", 2),))
    for table in itertools.product(range(n), repeat=n * n):
        algebra = FiniteAlgebra(name=f"S{n}", signature=signature, size=n, tables={"*": table})
        if is_associative(algebra, "*"):
            yield algebra


@pytest.mark.sweep
class TestClassicalTerms:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_every_small_semigroup(self, n):
        terms = classical_semigroup_terms("*")
        checked = 0
        for algebra in semigroups(n):
            for mask in range(2**n):
                L = {a for a in range(n) if mask >> a & 1}
                assert is_term_determined(algebra, L, terms), (algebra.tables["*"], sorted(L))
                checked += 1
        assert checked > 0

    def test_syntactic_monoid_of_ab_star(self, ab_star):
        synmon = syntactic_monoid(ab_star)
        K = set(synmon.accepting)
        assert syntactic_partition(synmon.algebra, K) == Partition.equality(6)
        assert is_term_determined(synmon.algebra, K, classical_semigroup_terms("*"))
