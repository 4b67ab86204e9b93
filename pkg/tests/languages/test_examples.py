import pytest

from synalg.core.exceptions import ConfigurationError
from synalg.languages.examples import (
    INFINITY,
    OVERFLOW,
    TruncatedModel,
    example_512_separation,
    example_517_witness,
    example_517_witnesses,
    is_power_of_two,
    is_prime,
)


class TestSparseSets:
    def test_powers_of_two(self):
        assert [x for x in range(20) if is_power_of_two(x)] == [1, 2, 4, 8, 16]

    def test_primes(self):
        assert [x for x in range(20) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestTruncatedModel:
    def test_plus_overflows_instead_of_wrapping(self):
        model = TruncatedModel(bound=10, kind="nat-plus")
        assert model.plus(5, 5) == 10
        assert model.plus(6, 5) is OVERFLOW

    def test_multiply(self):
        model = TruncatedModel(bound=10, kind="nat-max-times-onepoint")
        assert model.multiply((1, 2), (3, 4)) == (3, 6)
        assert model.multiply((7, 1), (2, INFINITY)) == (7, INFINITY)
        assert model.multiply((0, 6), (0, 5)) is OVERFLOW

    def test_diagonal(self):
        model = TruncatedModel(bound=10, kind="nat-max-times-onepoint")
        assert model.in_diagonal((3, 3))
        assert not model.in_diagonal((3, INFINITY))
        assert not model.in_diagonal(OVERFLOW)


class TestSparseSetSeparation:
    def test_default_window(self):
        report = example_512_separation(64, 4096)
        assert report.pairs == 2080
        assert report.all_separated
        assert report.first_failure is None
        assert report.min_determining_size == 7

    def test_first_witnesses(self):
        report = example_512_separation(2, 2)
        assert report.pairs == 3
        assert report.witnesses == [(0, 1, 2), (0, 2, 1), (1, 2, 1)]
        assert report.min_determining_size == 2

    def test_primes_need_a_wider_search(self):
        report = example_512_separation(4, 4, kind="primes")
        assert not report.all_separated
        assert report.first_failure == (2, 4)
        assert report.separated == 9
        assert example_512_separation(4, 16, kind="primes").all_separated

    @pytest.mark.parametrize(
        ("bound", "xmax", "kind"), [(1, 4, "powers-of-two"), (8, 4, "powers-of-two"), (4, 4, "odd")]
    )
    def test_bad_parameters(self, bound, xmax, kind):
        with pytest.raises(ConfigurationError):
            example_512_separation(bound, xmax, kind=kind)


class TestOnePointCompactification:
    def test_formula_witness(self):
        w = example_517_witness(1, 2, 5, bound=10)
        assert w.by_formula
        assert w.multiplier == (3, 1)
        assert w.finite_product == (3, 3)
        assert w.infinite_product == (5, "inf")

    @pytest.mark.parametrize(("i", "j", "multiplier"), [(8, 5, (0, 3)), (3, 9, (9, 0))])
    def test_fallback_inside_the_window(self, i, j, multiplier):
        w = example_517_witness(i, j, 0, bound=10)
        assert not w.by_formula
        assert w.multiplier == multiplier

    def test_small_window(self):
        report = example_517_witnesses(3)
        assert report.holds
        assert report.mixed_pairs == 64
        assert report.separated_by_formula == 40
        assert report.separated_by_search == 24
        assert report.infinity_elements == 4
        assert report.infinity_multipliers == 20
        assert report.infinity_hits == 0
        assert report.overflow_skipped == 0

    def test_bound_too_small(self):
        with pytest.raises(ConfigurationError):
            example_517_witnesses(2)
