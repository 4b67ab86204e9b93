import pytest
from hypothesis import given
from hypothesis import strategies as st

from synalg.congruence.partition import Partition, all_partitions, canonicalize, saturates
from synalg.core.exceptions import ElementRangeError, PartitionError

labels = st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=6)


class TestConstruction:
    def test_labels_are_canonical(self):
        assert Partition.of([5, 5, 7, 5]).class_id == (0, 0, 1, 0)
        assert canonicalize(["b", "a", "b"]) == (0, 1, 0)

    def test_from_subset(self):
        p = Partition.from_subset(4, {0, 2})
        assert p.blocks() == ((0, 2), (1, 3))
        assert p.format() == "{0,2}/{1,3}"
        assert str(p) == "{0,2}/{1,3}"

    def test_equality_and_universal(self):
        assert Partition.equality(3).index == 3
        assert Partition.universal(3).index == 1
        assert Partition(class_id=()).index == 0

    def test_parse(self):
        assert Partition.parse(4, "{0,2}/{1,3}") == Partition.from_subset(4, {0, 2})
        assert Partition.parse(3, "{0} / {1, 2}").blocks() == ((0,), (1, 2))

    def test_overlapping_blocks(self):
        with pytest.raises(PartitionError) as exc:
            Partition.from_blocks(3, [[0, 1], [1, 2]])
        assert exc.value.details["kind"] == "overlap"

    def test_gap(self):
        with pytest.raises(PartitionError) as exc:
            Partition.from_blocks(3, [[0, 1]])
        assert exc.value.details["elements"] == [2]

    def test_empty_block(self):
        with pytest.raises(PartitionError, match="empty"):
            Partition.from_blocks(2, [[0, 1], []])

    def test_block_outside_carrier(self):
        with pytest.raises(ElementRangeError):
            Partition.from_blocks(2, [[0, 1, 2]])

    @pytest.mark.parametrize("text", ["", "{0,1}x", "{0,a}/{1}", "0,1"])
    def test_unreadable(self, text):
        with pytest.raises(PartitionError):
            Partition.parse(2, text)


class TestLattice:
    def test_meet_with_universal(self):
        p = Partition.from_subset(4, {0, 2})
        assert p.meet(Partition.universal(4)) == p
        assert p.meet(Partition.equality(4)) == Partition.equality(4)

    def test_refines(self):
        p = Partition.from_subset(4, {0, 2})
        assert Partition.equality(4).refines(p)
        assert p.refines(Partition.universal(4))
        assert not Partition.universal(4).refines(p)

    def test_meet_size_mismatch(self):
        with pytest.raises(PartitionError):
            Partition.equality(2).meet(Partition.equality(3))

    def test_saturates(self):
        p = Partition.from_subset(4, {0, 2})
        assert p.saturates({0, 2})
        assert saturates(p, {1, 3})
        assert saturates(p, set())
        assert not p.saturates({0})

    def test_first_difference(self):
        assert Partition.equality(3).first_difference(Partition.universal(3)) == (0, 1)
        assert Partition.equality(3).first_difference(Partition.equality(3)) is None

    @given(labels, labels)
    def test_meet_is_greatest_lower_bound(self, first, second):
        n = min(len(first), len(second))
        p, q = Partition.of(first[:n]), Partition.of(second[:n])
        m = p.meet(q)
        assert m.refines(p) and m.refines(q)
        assert m == q.meet(p)
        for a in range(n):
            for b in range(n):
                assert m.related(a, b) == (p.related(a, b) and q.related(a, b))


class TestAllPartitions:
    @pytest.mark.parametrize(("n", "bell"), [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_bell_numbers(self, n, bell):
        found = list(all_partitions(n))
        assert len(found) == bell
        assert len(set(found)) == bell

    def test_order_starts_with_universal(self):
        first, *_, last = all_partitions(3)
        assert first == Partition.universal(3)
        assert last == Partition.equality(3)
