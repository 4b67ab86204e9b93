import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synalg.core.catalog import trivial
from synalg.core.exceptions import ElementRangeError, MonoidSizeExceededError, NotLinearError, UnassignedVariableError
from synalg.core.signature import Signature
from synalg.core.terms import count_occurrences, format_term, parse_term, term_variables
from synalg.translations.monoid import (
    Provenance,
    Transformation,
    close_under_composition,
    elementary_translations,
    identity_map,
    transformation_of_linear_term,
    translation_monoid,
)
from synalg.utils.random_algebras import random_algebra, random_term

ROTATE = Transformation(image=(1, 2, 0))
SWAP = Transformation(image=(1, 0, 2))

# --------------------------------------------------------------------------- #
# Transformation                                                               #
# --------------------------------------------------------------------------- #


class TestTransformation:
    def test_compose_applies_argument_first(self):
        g = Transformation(image=(0, 0, 1))
        assert ROTATE.compose(g).image == (1, 1, 2)
        assert g.compose(ROTATE).image == (0, 1, 0)

    def test_equality_ignores_provenance(self):
        assert identity_map(3) == Transformation(image=(0, 1, 2))
        assert hash(identity_map(3)) == hash((0, 1, 2))

    def test_predicates_and_format(self):
        assert identity_map(2).is_identity
        assert Transformation(image=(1, 1)).is_constant
        assert ROTATE.format() == "[1 2 0]"
        assert ROTATE.preimage({0}) == frozenset({2})
        assert ROTATE(1) == 2

    def test_sorting_by_image(self):
        assert sorted([ROTATE, SWAP, identity_map(3)]) == [identity_map(3), SWAP, ROTATE]


class TestProvenance:
    @pytest.mark.parametrize(
        ("provenance", "text"),
        [
            (Provenance(kind="elementary", symbol="+", coordinate=0, fixed=(1,)), "+(x, 1)"),
            (Provenance(kind="elementary", symbol="f", coordinate=1, fixed=(2, 3)), "f(2, x, 3)"),
            (Provenance(kind="composite", sequence=(0, 1)), "gens 0.1"),
            (Provenance(kind="identity"), "identity"),
        ],
    )
    def test_describe(self, provenance, text):
        assert provenance.describe() == text


# --------------------------------------------------------------------------- #
# Elementary translations and M(A)                                             #
# --------------------------------------------------------------------------- #


class TestElementaryTranslations:
    def test_z4_rotations_deduplicated(self, z4):
        maps = elementary_translations(z4)
        assert [f.image for f in maps] == [(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2)]
        first = maps[0].provenance
        assert first.kind == "elementary"
        assert (first.symbol, first.coordinate, first.fixed) == ("+", 0, (0,))

    def test_constant_operation(self, c3):
        assert [f.image for f in elementary_translations(c3)] == [(0, 0, 0)]

    def test_constants_contribute_nothing(self):
        assert elementary_translations(trivial((("e", 0),))) == []


class TestTranslationMonoid:
    def test_z4(self, z4):
        m = translation_monoid(z4)
        assert len(m) == 4
        assert m.is_closed()

    def test_constant_operation(self, c3):
        m = translation_monoid(c3)
        assert [f.image for f in m.sorted_elements()] == [(0, 0, 0), (0, 1, 2)]

    def test_left_zero(self, lz3):
        assert len(translation_monoid(lz3)) == 4

    def test_semilattice(self, sl2):
        assert {f.image for f in translation_monoid(sl2).elements} == {(0, 0), (0, 1)}

    def test_symmetric_group(self):
        m = close_under_composition([ROTATE, SWAP], 3)
        assert len(m) == 6
        assert (2, 1, 0) in m
        assert m.index_of((0, 1, 2)) == 0

    def test_cap(self):
        with pytest.raises(MonoidSizeExceededError) as exc:
            close_under_composition([ROTATE, SWAP], 3, cap=3)
        assert exc.value.details["cap"] == 3

    def test_generator_outside_carrier(self):
        with pytest.raises(ElementRangeError):
            close_under_composition([Transformation(image=(0, 3))], 2)

    def test_identity_has_empty_sequence(self):
        m = close_under_composition([ROTATE], 3)
        assert m.elements[0].is_identity
        assert m.elements[0].provenance.sequence == ()

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_replay_rebuilds_every_element(self, seed):
        rng = random.Random(seed)
        algebra = random_algebra(rng, rng.randint(1, 4))
        m = translation_monoid(algebra)
        assert m.is_closed()
        assert all(m.replay(e) == e for e in m.elements)
        assert all(f in m for f in elementary_translations(algebra))


class TestLinearTermMaps:
    def test_translation_by_parameter(self, z4):
        t = parse_term("+(x, y)", z4.signature)
        f = transformation_of_linear_term(z4, t, "x", {"y": 1})
        assert f.image == (1, 2, 3, 0)
        assert f.provenance.describe() == "+(x, y) [y=1]"

    def test_not_linear(self, z4):
        with pytest.raises(NotLinearError):
            transformation_of_linear_term(z4, parse_term("+(x, x)", z4.signature), "x", {})

    def test_missing_parameter(self, z4):
        with pytest.raises(UnassignedVariableError):
            transformation_of_linear_term(z4, parse_term("+(x, y)", z4.signature), "x", {})


@pytest.mark.sweep
class TestGenerationSoundness:
    signature = Signature(symbols=(("*", 2), ("g", 1)))

    def _linear_term(self, rng):
        while True:
            t = random_term(rng, self.signature, ["x", "v1", "v2"], depth=4)
            if count_occurrences(t, "x") == 1:
                return t

    def test_linear_term_maps_lie_in_the_monoid(self):
        rng = random.Random(0)
        checked = 0
        for _ in range(125):
            algebra = random_algebra(rng, rng.randint(1, 4), self.signature.symbols)
            monoid = translation_monoid(algebra)
            for _ in range(4):
                t = self._linear_term(rng)
                v = {name: rng.randrange(algebra.size) for name in term_variables(t) if name != "x"}
                f = transformation_of_linear_term(algebra, t, "x", v)
                assert f in monoid, (list(algebra.tables["*"]), list(algebra.tables["g"]), format_term(t), v)
                checked += 1
        assert checked == 500
