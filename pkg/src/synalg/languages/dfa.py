"""
Deterministic automata, their minimization and the syntactic monoid of the recognized
language as a finite algebra.
See: docs/core/LANGUAGES.md
"""

from collections import deque
from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from synalg.congruence.refinement import refine
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import DfaError, FaithfulnessError, FormatError
from synalg.core.formats import TokenCursor, tokenize
from synalg.core.signature import Signature
from synalg.syntactic.syntactic import syntactic_partition
from synalg.translations.monoid import Transformation, TransformationMonoid, close_under_composition
from synalg.utils.logger import get_logger

logger = get_logger("synalg.languages")

MONOID_SIGNATURE = Signature(symbols=(("*", 2), ("e", 0)))


class Dfa(BaseModel):
    """A complete DFA; ``transitions[q][i]`` is the successor of state q on ``alphabet[i]``."""

    model_config = ConfigDict(frozen=True)

    name: str = "D"
    alphabet: tuple[str, ...]
    states: int
    transitions: tuple[tuple[int, ...], ...]
    initial: int = 0
    accepting: frozenset[int] = frozenset()

    @model_validator(mode="after")
    def transition_function_is_total(self) -> "Dfa":
        if self.states < 1:
            raise DfaError(f"a DFA needs at least one state, got {self.states}", component="languages")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DfaError(f"alphabet {list(self.alphabet)} repeats a letter", component="languages")
        if not 0 <= self.initial < self.states:
            raise DfaError(f"initial state {self.initial} outside 0..{self.states - 1}", component="languages")
        bad = sorted(q for q in self.accepting if not 0 <= q < self.states)
        if bad:
            raise DfaError(f"accepting states {bad} outside 0..{self.states - 1}", component="languages")
        if len(self.transitions) != self.states:
            raise DfaError(f"{len(self.transitions)} transition rows for {self.states} states", component="languages")
        for q, row in enumerate(self.transitions):
            if len(row) != len(self.alphabet):
                raise DfaError(
                    f"state {q} has {len(row)} transitions, alphabet has {len(self.alphabet)} letters",
                    component="languages",
                )
            for target in row:
                if not 0 <= target < self.states:
                    raise DfaError(f"state {q} moves to {target}, outside 0..{self.states - 1}", component="languages")
        return self

    def letter_index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise DfaError(f"letter '{letter}' is not in the alphabet", details={"letter": letter}) from None

    def letter_map(self, letter: str | int) -> tuple[int, ...]:
        i = letter if isinstance(letter, int) else self.letter_index(letter)
        return tuple(row[i] for row in self.transitions)


def split_word(word: str | Sequence[str]) -> list[str]:
    """Single-character letters may be written run together; longer ones are space separated."""
    if isinstance(word, str):
        return word.split() if " " in word else list(word)
    return list(word)


def accepts(dfa: Dfa, word: str | Sequence[str]) -> bool:
    state = dfa.initial
    for letter in split_word(word):
        state = dfa.transitions[state][dfa.letter_index(letter)]
    return state in dfa.accepting


def _bfs_order(start: int, transitions: Sequence[Sequence[int]]) -> list[int]:
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for target in transitions[q]:
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def minimal_dfa(dfa: Dfa) -> Dfa:
    """Drop unreachable states and merge equivalent ones, numbering states in BFS order from the start."""
    if not dfa.alphabet:
        raise DfaError("cannot minimize a DFA over the empty alphabet", component="languages")
    reachable = _bfs_order(dfa.initial, dfa.transitions)
    renumber = {q: i for i, q in enumerate(reachable)}
    rows = [tuple(renumber[t] for t in dfa.transitions[q]) for q in reachable]
    accepting = [q in dfa.accepting for q in reachable]

    maps = [tuple(row[i] for row in rows) for i in range(len(dfa.alphabet))]
    classes = refine([int(a) for a in accepting], maps)

    k = max(classes) + 1
    merged: list[tuple[int, ...]] = [()] * k
    for q, row in enumerate(rows):
        merged[classes[q]] = tuple(classes[t] for t in row)
    order = _bfs_order(classes[0], merged)
    final = {c: i for i, c in enumerate(order)}
    out = Dfa(
        name=dfa.name,
        alphabet=dfa.alphabet,
        states=k,
        transitions=tuple(tuple(final[t] for t in merged[c]) for c in order),
        initial=0,
        accepting=frozenset(final[classes[q]] for q, acc in enumerate(accepting) if acc),
    )
    logger.debug("minimized %s: %d states -> %d", dfa.name, dfa.states, out.states)
    return out


def transition_monoid(dfa: Dfa) -> tuple[TransformationMonoid, dict[str, Transformation]]:
    """Closure of the letter maps; a word u then v acts as map(v) o map(u)."""
    letters = {a: Transformation(image=dfa.letter_map(i)) for i, a in enumerate(dfa.alphabet)}
    monoid = close_under_composition(list(letters.values()), dfa.states)
    return monoid, letters


class SyntacticMonoid(BaseModel):
    """The transition monoid of a minimal DFA as an algebra over ``*`` and the identity ``e``."""

    model_config = ConfigDict(frozen=True)

    dfa: Dfa
    algebra: FiniteAlgebra
    accepting: tuple[int, ...]
    maps: tuple[Transformation, ...]
    letters: dict[str, int]
    words: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.algebra.size

    def element_of(self, word: str | Sequence[str]) -> int:
        m = self.algebra.tables["e"][0]
        for letter in split_word(word):
            if letter not in self.letters:
                raise DfaError(f"letter '{letter}' is not in the alphabet", details={"letter": letter})
            m = self.algebra.op("*", m, self.letters[letter])
        return m


def monoid_accepts(synmon: SyntacticMonoid, word: str | Sequence[str]) -> bool:
    return synmon.element_of(word) in synmon.accepting


def _word(dfa: Dfa, monoid: TransformationMonoid, element: Transformation) -> str:
    letters: list[str] = []
    for j in (element.provenance.sequence if element.provenance else None) or ():
        image = monoid.generators[j].image
        letters.append(next(a for i, a in enumerate(dfa.alphabet) if dfa.letter_map(i) == image))
    sep = "" if all(len(a) == 1 for a in dfa.alphabet) else " "
    return sep.join(letters) or "1"


def syntactic_monoid(dfa: Dfa) -> SyntacticMonoid:
    """M = transition monoid of the minimal DFA, K = elements sending the start state into acceptance.

    Raises:
        FaithfulnessError: sigma_K on M is not the equality relation.
    """
    minimal = minimal_dfa(dfa)
    monoid, letters = transition_monoid(minimal)
    maps = monoid.elements
    n = len(maps)
    table: list[int] = []
    for first in maps:
        for second in maps:
            table.append(monoid.index_of(second.compose(first)))
    identity = monoid.index_of(tuple(range(minimal.states)))
    algebra = FiniteAlgebra(
        name=f"M({dfa.name})",
        signature=MONOID_SIGNATURE,
        size=n,
        tables={"*": tuple(table), "e": (identity,)},
    )
    accepting = tuple(i for i, m in enumerate(maps) if m.image[minimal.initial] in minimal.accepting)

    sigma = syntactic_partition(algebra, accepting)
    if sigma.index != n:
        witness = next((a, b) for b in range(n) for a in range(b) if sigma.related(a, b))
        raise FaithfulnessError(
            f"syntactic congruence of K on {algebra.name} identifies elements {witness}",
            component="languages",
            details={"witness": list(witness)},
        )
    words = tuple(_word(minimal, monoid, m) for m in maps)
    return SyntacticMonoid(
        dfa=minimal,
        algebra=algebra.model_copy(update={"subsets": {"K": accepting}}),
        accepting=accepting,
        maps=tuple(maps),
        letters={a: monoid.index_of(t) for a, t in letters.items()},
        words=words,
    )


def _same_line(cursor: TokenCursor, line: int | None) -> Iterable[str]:
    while cursor.pos < len(cursor.tokens) and cursor.tokens[cursor.pos][1] == line:
        yield cursor.next("a token")


def parse_dfa(text: str, path: str | None = None) -> Dfa:
    """Parse a ``.dfa`` document; the accepting list runs to the end of its line."""
    cursor = TokenCursor(tokenize(text), path)
    cursor.keyword("dfa")
    name = cursor.next("a DFA name")
    head = cursor.line
    cursor.keyword("alphabet")
    alphabet = tuple(_same_line(cursor, head))
    cursor.keyword("states")
    states = cursor.integer("the state count")
    cursor.keyword("initial")
    initial = cursor.integer("the initial state")
    head = cursor.line
    cursor.keyword("accepting")
    accepting: list[int] = []
    for tok in _same_line(cursor, head):
        try:
            accepting.append(int(tok))
        except ValueError:
            raise FormatError(f"expected a state, found '{tok}'", head, path) from None
    rows: list[tuple[int, ...]] = []
    for _ in range(states):
        rows.append(tuple(cursor.integer("a successor state") for _ in alphabet))
    if cursor.peek() is not None:
        raise FormatError(f"unexpected '{cursor.peek()}'", cursor.line, path)
    try:
        return Dfa(
            name=name,
            alphabet=alphabet,
            states=states,
            transitions=tuple(rows),
            initial=initial,
            accepting=frozenset(accepting),
        )
    except DfaError as e:
        raise FormatError(str(e), None, path, details=e.details) from e


def serialize_dfa(dfa: Dfa) -> str:
    lines = [
        f"dfa {dfa.name}",
        " ".join(["alphabet", *dfa.alphabet]),
        f"states {dfa.states}",
        f"initial {dfa.initial}",
        " ".join(["accepting", *(str(q) for q in sorted(dfa.accepting))]),
    ]
    lines.extend(" ".join(str(t) for t in row) for row in dfa.transitions)
    return "\n".join(lines) + "\n"
