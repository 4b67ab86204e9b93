import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synalg.core.exceptions import DfaError, FormatError
from synalg.languages.dfa import (
    Dfa,
    accepts,
    minimal_dfa,
    monoid_accepts,
    parse_dfa,
    serialize_dfa,
    split_word,
    syntactic_monoid,
    transition_monoid,
)
from synalg.utils.random_algebras import random_dfa, random_word


@pytest.fixture
def odd_a():
    """Odd number of a's, with a redundant state and an unreachable one."""
    return Dfa(name="odd", alphabet=("a",), states=4, transitions=((1,), (2,), (1,), (0,)), accepting=frozenset({1}))


# --------------------------------------------------------------------------- #
# Automata                                                                     #
# --------------------------------------------------------------------------- #


class TestDfa:
    def test_sample(self, ab_star):
        assert ab_star.alphabet == ("a", "b")
        assert ab_star.letter_map("a") == (1, 2, 2)
        assert ab_star.letter_map(1) == (2, 0, 2)

    @pytest.mark.parametrize(
        ("word", "accepted"), [("", True), ("ab", True), ("abab", True), ("aba", False), ("ba", False)]
    )
    def test_accepts(self, ab_star, word, accepted):
        assert accepts(ab_star, word) is accepted

    def test_unknown_letter(self, ab_star):
        with pytest.raises(DfaError):
            accepts(ab_star, "abc")

    def test_split_word(self):
        assert split_word("ab") == ["a", "b"]
        assert split_word("ab ba") == ["ab", "ba"]
        assert split_word(["x", "y"]) == ["x", "y"]

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"states": 0, "transitions": ()},
            {"states": 1, "transitions": ((0,),), "initial": 1},
            {"states": 1, "transitions": ((0,),), "accepting": frozenset({2})},
            {"states": 1, "transitions": ((1,),)},
            {"states": 2, "transitions": ((0,),)},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(DfaError):
            Dfa(alphabet=("a",), **kwargs)

    def test_repeated_letter(self):
        with pytest.raises(DfaError):
            Dfa(alphabet=("a", "a"), states=1, transitions=((0, 0),))


class TestMinimalDfa:
    def test_already_minimal(self, ab_star):
        assert minimal_dfa(ab_star) == ab_star

    def test_merges_and_drops(self, odd_a):
        minimal = minimal_dfa(odd_a)
        assert minimal.states == 2
        assert minimal.transitions == ((1,), (0,))
        assert minimal.accepting == frozenset({1})

    def test_empty_alphabet(self):
        with pytest.raises(DfaError):
            minimal_dfa(Dfa(alphabet=(), states=1, transitions=((),)))

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_same_language(self, seed):
        rng = random.Random(seed)
        dfa = random_dfa(rng, rng.randint(1, 6))
        minimal = minimal_dfa(dfa)
        assert minimal.states <= dfa.states
        for _ in range(20):
            word = random_word(rng, dfa.alphabet)
            assert accepts(minimal, word) == accepts(dfa, word)


# --------------------------------------------------------------------------- #
# Syntactic monoid                                                             #
# --------------------------------------------------------------------------- #


class TestSyntacticMonoid:
    def test_transition_monoid(self, ab_star):
        monoid, letters = transition_monoid(ab_star)
        assert len(monoid) == 6
        assert letters["b"].image == (2, 0, 2)

    def test_ab_star(self, ab_star):
        synmon = syntactic_monoid(ab_star)
        assert synmon.size == 6
        assert synmon.words == ("1", "a", "b", "aa", "ab", "ba")
        assert synmon.accepting == (0, 4)
        assert synmon.letters == {"a": 1, "b": 2}
        assert synmon.algebra.name == "M(ab_star)"
        assert synmon.algebra.subsets == {"K": (0, 4)}

    def test_element_of(self, ab_star):
        synmon = syntactic_monoid(ab_star)
        assert synmon.element_of("") == 0
        assert synmon.element_of("abab") == 4
        assert synmon.element_of("bb") == synmon.element_of("aab") == 3

    def test_monoid_identity_and_zero(self, ab_star):
        algebra = syntactic_monoid(ab_star).algebra
        assert algebra.tables["e"] == (0,)
        assert all(algebra.op("*", 3, m) == 3 == algebra.op("*", m, 3) for m in algebra.elements)

    def test_odd_a_is_z2(self, odd_a):
        synmon = syntactic_monoid(odd_a)
        assert synmon.size == 2
        assert synmon.algebra.tables["*"] == (0, 1, 1, 0)
        assert monoid_accepts(synmon, "aaa")
        assert not monoid_accepts(synmon, "aa")

    def test_unknown_letter(self, ab_star):
        with pytest.raises(DfaError):
            syntactic_monoid(ab_star).element_of("c")

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_recognizes_the_language(self, seed):
        rng = random.Random(seed)
        dfa = random_dfa(rng, rng.randint(1, 4))
        synmon = syntactic_monoid(dfa)
        for _ in range(20):
            word = random_word(rng, dfa.alphabet)
            assert monoid_accepts(synmon, word) == accepts(dfa, word)

    @pytest.mark.sweep
    def test_recognition_on_a_thousand_words(self, ab_star, odd_a):
        rng = random.Random(0)
        automata = [ab_star, odd_a, *(random_dfa(rng, rng.randint(1, 5)) for _ in range(10))]
        for dfa in automata:
            synmon = syntactic_monoid(dfa)
            for _ in range(1000):
                word = random_word(rng, dfa.alphabet, max_length=20)
                assert monoid_accepts(synmon, word) == accepts(dfa, word), (dfa.name, word)


# --------------------------------------------------------------------------- #
# Text format                                                                  #
# --------------------------------------------------------------------------- #


class TestDfaFormat:
    def test_serialize(self, ab_star):
        assert serialize_dfa(ab_star) == "dfa ab_star\nalphabet a b\nstates 3\ninitial 0\naccepting 0\n1 2\n2 0\n2 2\n"

    def test_reparses(self, ab_star):
        assert parse_dfa(serialize_dfa(ab_star)) == ab_star

    def test_no_accepting_states(self):
        dfa = parse_dfa("dfa d\nalphabet a\nstates 1\ninitial 0\naccepting\n0\n")
        assert dfa.accepting == frozenset()

    def test_bad_accepting_entry(self):
        with pytest.raises(FormatError, match="expected a state"):
            parse_dfa("dfa d\nalphabet a\nstates 1\ninitial 0\naccepting x\n0\n")

    def test_successor_outside(self):
        with pytest.raises(FormatError, match="moves to 1"):
            parse_dfa("dfa d\nalphabet a\nstates 1\ninitial 0\naccepting 0\n1\n", "d.dfa")

    def test_short_table(self):
        with pytest.raises(FormatError, match="unexpected end of input"):
            parse_dfa("dfa d\nalphabet a b\nstates 2\ninitial 0\naccepting 0\n0 1\n1\n")
