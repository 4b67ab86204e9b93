import pytest

from synalg.core.exceptions import FormatError
from synalg.core.formats import parse_algebra, serialize_algebra, tokenize


class TestTokenize:
    def test_comments_and_line_numbers(self):
        assert tokenize("a b # c\n\n  d") == [("a", 1), ("b", 1), ("d", 3)]


class TestParseAlgebra:
    def test_sample(self, z4):
        assert z4.name == "Z4"
        assert z4.size == 4
        assert z4.signature.symbols == (("+", 2),)
        assert z4.tables["+"][:4] == (0, 1, 2, 3)
        assert z4.subsets == {"evens": (0, 2)}

    def test_table_may_span_any_layout(self):
        algebra = parse_algebra("algebra A carrier 2 op * 2 0 1 1 0")
        assert algebra.tables["*"] == (0, 1, 1, 0)

    def test_signature_line(self):
        text = "algebra M\ncarrier 1\nsignature *:2 e:0\nop * 2\n0\nop e 0\n0\n"
        algebra = parse_algebra(text)
        assert algebra.signature.symbols == (("*", 2), ("e", 0))

    def test_subsets_are_sorted_and_deduplicated(self):
        algebra = parse_algebra("algebra A carrier 3 op * 2 0 0 0 0 0 0 0 0 0 subset L 2 0 2")
        assert algebra.subsets == {"L": (0, 2)}

    def test_short_table_reports_its_line(self):
        text = "algebra A\ncarrier 2\nop * 2\n0 1 1\n"
        with pytest.raises(FormatError) as exc:
            parse_algebra(text, "bad.alg")
        assert str(exc.value) == "bad.alg:3: table for '*' has 3 entries, expected 4"
        assert exc.value.line == 3

    def test_entry_outside_carrier(self):
        text = "algebra A\ncarrier 2\nop * 2\n0 1\n1 5\n"
        with pytest.raises(FormatError, match=r"^<text>:5: entry 5 of '\*'"):
            parse_algebra(text)

    def test_wrong_keyword(self):
        with pytest.raises(FormatError, match=r"<text>:2: expected 'carrier', found 'size'"):
            parse_algebra("algebra A\nsize 2\n")

    def test_declared_symbol_without_table(self):
        text = "algebra M\ncarrier 1\nsignature *:2 e:0\nop * 2\n0\n"
        with pytest.raises(FormatError, match="missing table for declared symbol 'e'"):
            parse_algebra(text)

    def test_symbol_defined_twice(self):
        with pytest.raises(FormatError, match="defined twice"):
            parse_algebra("algebra A carrier 1 op * 2 0 op * 2 0")

    def test_subset_outside_carrier(self):
        with pytest.raises(FormatError, match="subset 'L' contains 3"):
            parse_algebra("algebra A carrier 2 op * 2 0 0 0 0 subset L 3")

    def test_non_positive_carrier(self):
        with pytest.raises(FormatError, match="carrier size must be positive"):
            parse_algebra("algebra A carrier 0")

    def test_unexpected_end(self):
        with pytest.raises(FormatError, match="unexpected end of input"):
            parse_algebra("algebra A carrier")


class TestSerializeAlgebra:
    def test_canonical_text(self, z4):
        assert serialize_algebra(z4) == (
            "algebra Z4\ncarrier 4\nop + 2\n0 1 2 3 1 2 3 0 2 3\n0 1 3 0 1 2\nsubset evens 0 2\n"
        )

    def test_reparses_to_the_same_algebra(self, z4):
        assert parse_algebra(serialize_algebra(z4)) == z4
