# Test fixtures and shared setup
from pathlib import Path

import pytest

from synalg.core.catalog import chain_semilattice, constant_binary, cyclic_group, left_zero, trivial
from synalg.core.formats import parse_algebra
from synalg.languages.dfa import parse_dfa
from synalg.profinite.system import parse_system

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def samples_dir():
    return SAMPLES


@pytest.fixture
def z4():
    """Z4 under + with the named subset evens = {0, 2}."""
    return parse_algebra((SAMPLES / "z4.alg").read_text(), "z4.alg")


@pytest.fixture
def c3():
    return constant_binary(3, 0)


@pytest.fixture
def sl2():
    return chain_semilattice(2)


@pytest.fixture
def lz3():
    return left_zero(3)


@pytest.fixture
def one():
    return trivial()


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def tower():
    """Z2 <- Z4 <- Z8 under +, each map reduction modulo the smaller order."""
    return parse_system((SAMPLES / "tower.sys").read_text(), "tower.sys")


@pytest.fixture
def ab_star():
    """Three-state DFA for (ab)*; state 2 is a sink."""
    return parse_dfa((SAMPLES / "ab_star.dfa").read_text(), "ab_star.dfa")
