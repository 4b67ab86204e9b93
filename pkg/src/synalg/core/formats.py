"""
The line-oriented ``.alg`` text format.
See: docs/FORMATS.md
"""

from collections.abc import Iterator

from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import ElementRangeError, FormatError, SignatureError
from synalg.core.signature import Signature

ENTRIES_PER_LINE = 10


def tokenize(text: str, first_line: int = 1) -> list[tuple[str, int]]:
    """Whitespace tokens with their line numbers; ``#`` starts a comment."""
    tokens: list[tuple[str, int]] = []
    for offset, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0]
        tokens.extend((tok, first_line + offset) for tok in line.split())
    return tokens


class TokenCursor:
    """Token stream with line tracking, shared by the .alg, .sys and .dfa readers."""

    def __init__(self, tokens: list[tuple[str, int]], path: str | None) -> None:
        self.tokens = tokens
        self.pos = 0
        self.path = path

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    @property
    def line(self) -> int | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.tokens[-1][1] if self.tokens else None

    def next(self, what: str) -> str:
        if self.pos >= len(self.tokens):
            raise FormatError(f"unexpected end of input, expected {what}", self.line, self.path)
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def keyword(self, word: str) -> None:
        line = self.line
        tok = self.next(f"'{word}'")
        if tok != word:
            raise FormatError(f"expected '{word}', found '{tok}'", line, self.path)

    def integer(self, what: str) -> int:
        line = self.line
        tok = self.next(what)
        try:
            return int(tok)
        except ValueError:
            raise FormatError(f"expected {what}, found '{tok}'", line, self.path) from None

    def integers_until_keyword(self, keywords: frozenset[str]) -> Iterator[tuple[int, int]]:
        while self.pos < len(self.tokens) and self.tokens[self.pos][0] not in keywords:
            line = self.line or 0
            yield self.integer("an integer"), line


ALG_KEYWORDS = frozenset({"op", "subset", "signature", "algebra", "map"})


def parse_algebra_tokens(cursor: TokenCursor) -> FiniteAlgebra:
    """Consume one ``algebra`` block from ``cursor`` (shared with the ``.sys`` reader)."""
    path = cursor.path
    cursor.keyword("algebra")
    name = cursor.next("an algebra name")
    cursor.keyword("carrier")
    line = cursor.line
    size = cursor.integer("the carrier size")
    if size < 1:
        raise FormatError(f"carrier size must be positive, got {size}", line, path)

    declared: dict[str, int] | None = None
    if cursor.peek() == "signature":
        cursor.next("'signature'")
        declared = {}
        for tok, tok_line in list(cursor.tokens[cursor.pos :]):
            if tok in ALG_KEYWORDS:
                break
            cursor.pos += 1
            symbol, _, rank = tok.rpartition(":")
            if not symbol or not rank.isdigit():
                raise FormatError(f"bad signature entry '{tok}', expected name:rank", tok_line, path)
            declared[symbol] = int(rank)

    symbols: list[tuple[str, int]] = []
    tables: dict[str, tuple[int, ...]] = {}
    subsets: dict[str, tuple[int, ...]] = {}
    while cursor.peek() in ("op", "subset"):
        head_line = cursor.line
        kind = cursor.next("a block")
        if kind == "op":
            symbol = cursor.next("a symbol name")
            arity = cursor.integer("an arity")
            if arity < 0:
                raise FormatError(f"negative arity for '{symbol}'", head_line, path)
            if symbol in tables:
                raise FormatError(f"symbol '{symbol}' defined twice", head_line, path)
            entries: list[int] = []
            for value, value_line in cursor.integers_until_keyword(ALG_KEYWORDS):
                if not 0 <= value < size:
                    raise FormatError(
                        f"entry {value} of '{symbol}' is outside carrier of size {size}",
                        value_line,
                        path,
                        details={"symbol": symbol, "entry": value},
                    )
                entries.append(value)
            expected = size**arity
            if not entries:
                raise FormatError(f"missing table for symbol '{symbol}'", head_line, path, details={"symbol": symbol})
            if len(entries) != expected:
                raise FormatError(
                    f"table for '{symbol}' has {len(entries)} entries, expected {expected}",
                    head_line,
                    path,
                    details={"symbol": symbol, "expected": expected, "found": len(entries)},
                )
            symbols.append((symbol, arity))
            tables[symbol] = tuple(entries)
        else:
            subset_name = cursor.next("a subset name")
            members: list[int] = []
            for value, value_line in cursor.integers_until_keyword(ALG_KEYWORDS):
                if not 0 <= value < size:
                    raise FormatError(
                        f"subset '{subset_name}' contains {value}, outside carrier of size {size}", value_line, path
                    )
                members.append(value)
            subsets[subset_name] = tuple(sorted(set(members)))

    if declared is not None:
        for symbol, rank in declared.items():
            if symbol not in tables:
                raise FormatError(f"missing table for declared symbol '{symbol}'", cursor.line, path)
            if dict(symbols)[symbol] != rank:
                raise FormatError(f"symbol '{symbol}' declared with rank {rank}, table has another", cursor.line, path)
        undeclared = [s for s, _ in symbols if s not in declared]
        if undeclared:
            raise FormatError(f"symbols {undeclared} not in the signature line", cursor.line, path)

    try:
        return FiniteAlgebra(
            name=name, signature=Signature(symbols=tuple(symbols)), size=size, tables=tables, subsets=subsets
        )
    except (SignatureError, ElementRangeError) as e:
        raise FormatError(str(e), cursor.line, path, details=e.details) from e


def parse_algebra(text: str, path: str | None = None) -> FiniteAlgebra:
    """Parse a complete ``.alg`` document."""
    cursor = TokenCursor(tokenize(text), path)
    algebra = parse_algebra_tokens(cursor)
    if cursor.peek() is not None:
        raise FormatError(f"unexpected '{cursor.peek()}'", cursor.line, path)
    return algebra


def serialize_algebra(algebra: FiniteAlgebra) -> str:
    """Canonical text: symbols in declaration order, ten table entries per line."""
    lines = [f"algebra {algebra.name}", f"carrier {algebra.size}"]
    for symbol, rank in algebra.signature.symbols:
        lines.append(f"op {symbol} {rank}")
        table = algebra.tables[symbol]
        for start in range(0, len(table), ENTRIES_PER_LINE):
            lines.append(" ".join(str(v) for v in table[start : start + ENTRIES_PER_LINE]))
    for subset_name, members in algebra.subsets.items():
        lines.append(" ".join(["subset", subset_name, *(str(m) for m in members)]))
    return "\n".join(lines) + "\n"
