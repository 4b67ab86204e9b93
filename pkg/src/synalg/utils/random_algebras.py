"""
Seeded generators for the randomized sweeps.

Every generator takes a ``random.Random`` so a sweep reproduces exactly from its seed.
See: docs/TESTING.md
"""

import itertools
import random
from collections.abc import Sequence

from synalg.congruence.congruence import enumerate_congruences_oracle, quotient
from synalg.core.algebra import FiniteAlgebra, is_associative, table_index
from synalg.core.homomorphism import Homomorphism
from synalg.core.signature import Signature
from synalg.core.terms import Term, const, op, var
from synalg.languages.dfa import Dfa
from synalg.translations.monoid import Transformation, close_under_composition

BINARY = (("*", 2),)


def random_algebra(
    rng: random.Random, size: int, symbols: tuple[tuple[str, int], ...] = BINARY, name: str | None = None
) -> FiniteAlgebra:
    """Uniformly random tables over the given symbols."""
    tables = {symbol: tuple(rng.randrange(size) for _ in range(size**rank)) for symbol, rank in symbols}
    return FiniteAlgebra(
        name=name or f"R{size}", signature=Signature(symbols=symbols), size=size, tables=tables
    )


def random_subset(rng: random.Random, size: int) -> frozenset[int]:
    return frozenset(a for a in range(size) if rng.random() < 0.5)


def random_term(
    rng: random.Random, signature: Signature, variables: Sequence[str], depth: int
) -> Term:
    """A random term of height at most ``depth``; leaves are variables or constants."""
    constants = signature.ranks.get(0, ())
    operations = signature.operations()
    if depth <= 0 or not operations or rng.random() < 0.25:
        if constants and rng.random() < 0.2:
            return const(rng.choice(constants))
        return var(rng.choice(list(variables)))
    symbol, rank = rng.choice(operations)
    return op(symbol, *(random_term(rng, signature, variables, depth - 1) for _ in range(rank)))


def relabel(algebra: FiniteAlgebra, perm: Sequence[int], name: str | None = None) -> FiniteAlgebra:
    """The isomorphic copy of ``algebra`` in which element a is renamed perm[a]."""
    n = algebra.size
    tables: dict[str, tuple[int, ...]] = {}
    for symbol, rank in algebra.signature.symbols:
        table = [0] * (n**rank)
        for args in itertools.product(range(n), repeat=rank):
            table[table_index([perm[a] for a in args], n)] = perm[algebra.op(symbol, *args)]
        tables[symbol] = tuple(table)
    return FiniteAlgebra(name=name or algebra.name, signature=algebra.signature, size=n, tables=tables)


def random_surjective_hom(rng: random.Random, max_size: int = 4) -> Homomorphism:
    """A random algebra mapped onto a relabeled quotient by a random congruence."""
    source = random_algebra(rng, rng.randint(1, max_size), name="A")
    theta = rng.choice(enumerate_congruences_oracle(source))
    q, eta = quotient(source, theta)
    perm = list(q.elements)
    rng.shuffle(perm)
    target = relabel(q, perm, name="B")
    return Homomorphism(source=source, target=target, image=tuple(perm[b] for b in eta.image))


def semigroup_of_maps(maps: Sequence[Transformation], name: str = "T") -> FiniteAlgebra:
    """The maps as a semigroup under 'i then j'; ``maps`` must be closed under composition."""
    elements = sorted(set(maps))
    index = {t.image: i for i, t in enumerate(elements)}
    table = tuple(index[second.compose(first).image] for first in elements for second in elements)
    return FiniteAlgebra(name=name, signature=Signature(symbols=BINARY), size=len(elements), tables={"*": table})


def random_semigroup(rng: random.Random, max_size: int = 5, attempts: int = 2000) -> FiniteAlgebra:
    """A random associative table with at most ``max_size`` elements.

    Small carriers are found by filtering random tables; larger ones come from closing a
    few random self-maps of a 2- or 3-point set.
    """
    if rng.random() < 0.5:
        for _ in range(attempts):
            candidate = random_algebra(rng, rng.randint(1, min(3, max_size)), name="S")
            if is_associative(candidate, "*"):
                return candidate
    while True:
        points = rng.randint(2, 3)
        gens = [
            Transformation(image=tuple(rng.randrange(points) for _ in range(points)))
            for _ in range(rng.randint(1, 2))
        ]
        closure = close_under_composition(gens, points)
        if len(closure) <= max_size:
            return semigroup_of_maps(closure.elements, name="S")


def random_dfa(rng: random.Random, states: int, alphabet: Sequence[str] = ("a", "b")) -> Dfa:
    return Dfa(
        name=f"D{states}",
        alphabet=tuple(alphabet),
        states=states,
        transitions=tuple(tuple(rng.randrange(states) for _ in alphabet) for _ in range(states)),
        initial=0,
        accepting=random_subset(rng, states),
    )


def random_word(rng: random.Random, alphabet: Sequence[str], max_length: int = 12) -> list[str]:
    return [rng.choice(list(alphabet)) for _ in range(rng.randint(0, max_length))]
