import pytest

from synalg.core.algebra import FiniteAlgebra, eval_symbol, is_associative, table_index
from synalg.core.catalog import chain_semilattice, constant_binary, cyclic_group, left_zero, trivial
from synalg.core.exceptions import (
    AlgebraMismatchError,
    ArityError,
    ElementRangeError,
    FormatError,
    NotAHomomorphismError,
    SignatureError,
    UnknownSymbolError,
)
from synalg.core.homomorphism import Homomorphism
from synalg.core.signature import Signature

BINARY = Signature(symbols=(("*", 2),))

# --------------------------------------------------------------------------- #
# Signature                                                                    #
# --------------------------------------------------------------------------- #


class TestSignature:
    def test_from_ranks_orders_by_rank(self):
        sig = Signature.from_ranks({2: ["*"], 0: ["e"], 1: ["g", "h"]})
        assert sig.symbols == (("e", 0), ("g", 1), ("h", 1), ("*", 2))

    def test_ranks_and_operations(self):
        sig = Signature(symbols=(("*", 2), ("e", 0), ("g", 1)))
        assert sig.ranks == {0: ("e",), 1: ("g",), 2: ("*",)}
        assert sig.operations() == (("*", 2), ("g", 1))
        assert sig.binary_symbols() == ("*",)
        assert sig.names == ("*", "e", "g")

    def test_arity_and_membership(self):
        assert BINARY.arity("*") == 2
        assert "*" in BINARY
        assert "+" not in BINARY

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbolError):
            BINARY.arity("+")

    def test_duplicate_name_rejected(self):
        with pytest.raises(SignatureError, match="declared twice"):
            Signature(symbols=(("*", 2), ("*", 1)))

    def test_negative_rank_rejected(self):
        with pytest.raises(SignatureError, match="negative rank"):
            Signature(symbols=(("g", -1),))

    @pytest.mark.parametrize("name", ["", "a b", "f(", "x,y", "#"])
    def test_bad_names_rejected(self, name):
        with pytest.raises(SignatureError):
            Signature(symbols=((name, 1),))


# --------------------------------------------------------------------------- #
# FiniteAlgebra                                                                #
# --------------------------------------------------------------------------- #


class TestTableIndex:
    def test_first_argument_varies_slowest(self):
        assert table_index([1, 2], 4) == 6
        assert table_index([2, 1, 0], 3) == 21

    def test_constant_slot(self):
        assert table_index([], 5) == 0


class TestFiniteAlgebra:
    def test_from_operations_tabulates(self):
        z3 = cyclic_group(3)
        assert z3.tables["+"] == (0, 1, 2, 1, 2, 0, 2, 0, 1)
        assert z3.op("+", 2, 2) == 1
        assert list(z3.elements) == [0, 1, 2]

    def test_short_table_rejected(self):
        with pytest.raises(FormatError, match="expected 4"):
            FiniteAlgebra(signature=BINARY, size=2, tables={"*": (0, 1, 1)})

    def test_entry_outside_carrier_rejected(self):
        with pytest.raises(ElementRangeError, match="position 3"):
            FiniteAlgebra(signature=BINARY, size=2, tables={"*": (0, 1, 1, 2)})

    def test_missing_table_rejected(self):
        with pytest.raises(FormatError, match="missing table"):
            FiniteAlgebra(signature=BINARY, size=2, tables={})

    def test_undeclared_table_rejected(self):
        with pytest.raises(UnknownSymbolError):
            FiniteAlgebra(signature=BINARY, size=1, tables={"*": (0,), "+": (0,)})

    def test_subset_outside_carrier_rejected(self):
        with pytest.raises(ElementRangeError):
            FiniteAlgebra(signature=BINARY, size=1, tables={"*": (0,)}, subsets={"L": (0, 1)})

    def test_with_name_keeps_tables(self, z4):
        renamed = z4.with_name("Other")
        assert renamed.name == "Other"
        assert renamed.tables == z4.tables


class TestEvalSymbol:
    def test_applies_operation(self, z4):
        assert eval_symbol(z4, "+", [3, 3]) == 2

    def test_wrong_arity(self, z4):
        with pytest.raises(ArityError):
            eval_symbol(z4, "+", [1])

    def test_argument_outside_carrier(self, z4):
        with pytest.raises(ElementRangeError):
            eval_symbol(z4, "+", [1, 4])

    def test_unknown_symbol(self, z4):
        with pytest.raises(UnknownSymbolError):
            eval_symbol(z4, "*", [1, 1])


class TestAssociativity:
    def test_catalog_semigroups_are_associative(self, z4, c3, lz3, sl2):
        assert is_associative(z4, "+")
        assert is_associative(c3, "c")
        assert is_associative(lz3, "*")
        assert is_associative(sl2, "^")

    def test_successor_of_left_argument_is_not(self):
        algebra = FiniteAlgebra.from_operations("N2", 2, {"*": (2, lambda x, y: (x + 1) % 2)})
        assert not is_associative(algebra, "*")

    def test_unary_symbol_rejected(self):
        algebra = FiniteAlgebra.from_operations("G", 2, {"g": (1, lambda x: x)})
        with pytest.raises(ArityError):
            is_associative(algebra, "g")


# --------------------------------------------------------------------------- #
# Catalog                                                                      #
# --------------------------------------------------------------------------- #


class TestCatalog:
    def test_cyclic_group_with_identity(self):
        z3 = cyclic_group(3, identity="e")
        assert z3.signature.symbols == (("+", 2), ("e", 0))
        assert z3.tables["e"] == (0,)

    def test_constant_binary(self):
        c = constant_binary(3, 2)
        assert c.name == "C3"
        assert set(c.tables["c"]) == {2}

    def test_left_zero_and_semilattice(self):
        assert left_zero(3).op("*", 2, 0) == 2
        assert chain_semilattice(4).op("^", 3, 1) == 1

    def test_trivial(self):
        one = trivial((("*", 2), ("e", 0)))
        assert one.size == 1
        assert one.tables == {"*": (0,), "e": (0,)}


# --------------------------------------------------------------------------- #
# Homomorphism                                                                 #
# --------------------------------------------------------------------------- #


class TestHomomorphism:
    def test_reduction_mod_two(self, z4, z2):
        phi = Homomorphism(source=z4, target=z2, image=(0, 1, 0, 1))
        assert phi.surjective
        assert phi(3) == 1
        assert phi.preimage({0}) == frozenset({0, 2})

    def test_non_commuting_map_rejected(self, z4, z2):
        with pytest.raises(NotAHomomorphismError) as exc:
            Homomorphism(source=z4, target=z2, image=(0, 1, 1, 0))
        assert exc.value.details["symbol"] == "+"

    def test_length_mismatch(self, z4, z2):
        with pytest.raises(AlgebraMismatchError):
            Homomorphism(source=z4, target=z2, image=(0, 1))

    def test_image_outside_target(self, z4, z2):
        with pytest.raises(ElementRangeError):
            Homomorphism(source=z4, target=z2, image=(0, 1, 0, 2))

    def test_zero_map_is_not_surjective(self, z4, z2):
        phi = Homomorphism(source=z4, target=z2, image=(0, 0, 0, 0))
        assert not phi.surjective

    def test_composition(self, z4, z2):
        phi = Homomorphism(source=z4, target=z2, image=(0, 1, 0, 1))
        assert Homomorphism.identity(z4).then(phi).image == phi.image
        with pytest.raises(AlgebraMismatchError):
            phi.then(phi)
