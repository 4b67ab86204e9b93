"""
Terms over a signature: construction, parsing, evaluation, linearity and linearization.
See: docs/core/TERMS.md
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping

from pydantic import BaseModel, ConfigDict

from synalg.core.algebra import FiniteAlgebra, table_index
from synalg.core.exceptions import (
    ElementRangeError,
    MalformedTermError,
    NotLinearError,
    UnassignedVariableError,
)
from synalg.core.signature import Signature

Assignment = Mapping[str, int]


class Term(BaseModel):
    """A finite labeled tree.

    Leaves are variables (``is_variable``) or rank-0 symbols; internal nodes carry a
    symbol and its ordered children. Terms are immutable and compare structurally.
    """

    model_config = ConfigDict(frozen=True)

    label: str
    is_variable: bool = False
    children: tuple[Term, ...] = ()

    def __str__(self) -> str:
        return format_term(self)

    def leaves(self) -> Iterator[Term]:
        """Leaves in left-to-right order."""
        stack: list[Term] = [self]
        while stack:
            node = stack.pop()
            if node.children:
                stack.extend(reversed(node.children))
            else:
                yield node


Term.model_rebuild()


def var(name: str) -> Term:
    return Term(label=name, is_variable=True)


def const(symbol: str) -> Term:
    return Term(label=symbol)


def op(symbol: str, *children: Term) -> Term:
    return Term(label=symbol, children=tuple(children))


def format_term(t: Term) -> str:
    if not t.children:
        return t.label
    return f"{t.label}({', '.join(format_term(c) for c in t.children)})"


def term_variables(t: Term) -> tuple[str, ...]:
    """Variables of ``t`` in order of first occurrence."""
    seen: dict[str, None] = {}
    for leaf in t.leaves():
        if leaf.is_variable:
            seen.setdefault(leaf.label)
    return tuple(seen)


def check_term(t: Term, signature: Signature) -> None:
    """Raise MalformedTermError unless every node fits ``signature``."""
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_variable:
            if node.children:
                raise MalformedTermError(f"variable '{node.label}' has children", details={"label": node.label})
            if node.label in signature:
                raise MalformedTermError(
                    f"variable '{node.label}' clashes with a signature symbol", details={"label": node.label}
                )
            continue
        if node.label not in signature:
            raise MalformedTermError(f"unknown symbol '{node.label}' in term", details={"symbol": node.label})
        rank = signature.arity(node.label)
        if rank != len(node.children):
            raise MalformedTermError(
                f"symbol '{node.label}' has rank {rank} but {len(node.children)} children",
                details={"symbol": node.label, "rank": rank, "children": len(node.children)},
            )
        stack.extend(node.children)


def eval_term(algebra: FiniteAlgebra, t: Term, assignment: Assignment) -> int:
    """Evaluate ``t`` under the homomorphic extension of ``assignment``.

    Iterative post-order traversal, so deep terms do not hit the recursion limit.
    """
    check_term(t, algebra.signature)
    for name, value in assignment.items():
        if not isinstance(value, int) or not 0 <= value < algebra.size:
            raise ElementRangeError(
                f"variable '{name}' is assigned {value!r}, outside carrier of size {algebra.size}",
                details={"variable": name, "value": value},
            )
    n = algebra.size
    values: list[int] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node.is_variable:
            if node.label not in assignment:
                raise UnassignedVariableError(
                    f"variable '{node.label}' is not assigned", details={"variable": node.label}
                )
            values.append(assignment[node.label])
        elif not node.children:
            values.append(algebra.tables[node.label][0])
        elif expanded:
            k = len(node.children)
            args = values[-k:]
            del values[-k:]
            values.append(algebra.tables[node.label][table_index(args, n)])
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return values[0]


def count_occurrences(t: Term, x: str) -> int:
    return sum(1 for leaf in t.leaves() if leaf.is_variable and leaf.label == x)


def is_linear_in(t: Term, x: str) -> bool:
    return count_occurrences(t, x) == 1


def rename_variable(t: Term, old: str, new: str) -> Term:
    if t.is_variable:
        return var(new) if t.label == old else t
    if not t.children:
        return t
    return op(t.label, *(rename_variable(c, old, new) for c in t.children))


def fresh_names(t: Term, x1: str, base: tuple[str, str, str] = ("x", "y", "z")) -> tuple[str, str, str]:
    """Names for the distinguished, left and right variables of a linearization of ``t``.

    A base name already used by ``t`` gets a ``__k`` suffix.
    """
    taken = set(term_variables(t)) | {x1}
    chosen: list[str] = []
    for name in base:
        candidate, k = name, 0
        while candidate in taken:
            k += 1
            candidate = f"{name}__{k}"
        taken.add(candidate)
        chosen.append(candidate)
    return chosen[0], chosen[1], chosen[2]


def linearize(t: Term, x1: str) -> list[Term]:
    """Split ``t`` into terms s_1..s_r that are each linear in a fresh variable.

    With r occurrences of ``x1`` (left to right), s_i puts the fresh ``y`` at occurrences
    before i, the fresh ``x`` at occurrence i and the fresh ``z`` after it.
    """
    r = count_occurrences(t, x1)
    if r == 0:
        raise NotLinearError(f"variable '{x1}' does not occur in {format_term(t)}", details={"variable": x1})
    x, y, z = fresh_names(t, x1)

    def substitute(node: Term, i: int, counter: list[int]) -> Term:
        if node.is_variable:
            if node.label != x1:
                return node
            counter[0] += 1
            j = counter[0]
            return var(y if j < i else x if j == i else z)
        if not node.children:
            return node
        return op(node.label, *(substitute(c, i, counter) for c in node.children))

    return [substitute(t, i, [0]) for i in range(1, r + 1)]


_TOKEN = re.compile(r"\s*(?:([(),])|([^\s(),]+))")


def parse_term(text: str, signature: Signature) -> Term:
    """Parse prefix notation ``f(t1, ..., tk)``.

    Identifiers naming rank-0 symbols are constants; identifiers outside the signature
    are variables.
    """
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise MalformedTermError(f"unexpected character at column {pos + 1}", details={"column": pos + 1})
        tokens.append((m.group(1) or m.group(2), m.start(m.lastindex or 0) + 1))
        pos = m.end()

    index = 0

    def peek() -> str | None:
        return tokens[index][0] if index < len(tokens) else None

    def expect(tok: str) -> None:
        nonlocal index
        if peek() != tok:
            column = tokens[index][1] if index < len(tokens) else len(text) + 1
            raise MalformedTermError(f"expected '{tok}' at column {column}", details={"column": column})
        index += 1

    def parse() -> Term:
        nonlocal index
        if index >= len(tokens):
            raise MalformedTermError("unexpected end of term", details={"column": len(text) + 1})
        tok, column = tokens[index]
        if tok in "(),":
            raise MalformedTermError(f"unexpected '{tok}' at column {column}", details={"column": column})
        index += 1
        if peek() == "(":
            index += 1
            children = [parse()]
            while peek() == ",":
                index += 1
                children.append(parse())
            expect(")")
            if tok not in signature:
                raise MalformedTermError(f"unknown symbol '{tok}' at column {column}", details={"symbol": tok})
            return op(tok, *children)
        if tok in signature:
            return const(tok)
        return var(tok)

    term = parse()
    if index != len(tokens):
        raise MalformedTermError(
            f"trailing input at column {tokens[index][1]}", details={"column": tokens[index][1]}
        )
    check_term(term, signature)
    return term
