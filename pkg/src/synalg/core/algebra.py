"""
Finite algebras over the carrier {0, ..., n-1} with dense row-major operation tables.
See: docs/core/ALGEBRA.md
"""

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from synalg.core.exceptions import ArityError, ElementRangeError, FormatError, UnknownSymbolError
from synalg.core.signature import Signature


def table_index(args: Sequence[int], size: int) -> int:
    """Row-major position of an argument tuple; the first argument varies slowest."""
    index = 0
    for a in args:
        index = index * size + a
    return index


class FiniteAlgebra(BaseModel):
    """A finite Omega-algebra: a signature plus one total table per symbol."""

    model_config = ConfigDict(frozen=True)

    name: str = "A"
    signature: Signature
    size: int = Field(ge=1)
    tables: dict[str, tuple[int, ...]]
    subsets: dict[str, tuple[int, ...]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def tables_match_signature(self) -> "FiniteAlgebra":
        for symbol, rank in self.signature.symbols:
            if symbol not in self.tables:
                raise FormatError(f"missing table for symbol '{symbol}'", details={"symbol": symbol})
            table = self.tables[symbol]
            expected = self.size**rank
            if len(table) != expected:
                raise FormatError(
                    f"table for '{symbol}' has {len(table)} entries, expected {expected}",
                    details={"symbol": symbol, "expected": expected, "found": len(table)},
                )
            for position, entry in enumerate(table):
                if not 0 <= entry < self.size:
                    raise ElementRangeError(
                        f"table for '{symbol}' has entry {entry} at position {position} "
                        f"outside carrier of size {self.size}",
                        details={"symbol": symbol, "position": position, "entry": entry},
                    )
        extra = set(self.tables) - set(self.signature.names)
        if extra:
            raise UnknownSymbolError(
                f"Tables given for undeclared symbols {sorted(extra)}", details={"symbols": sorted(extra)}
            )
        for subset_name, members in self.subsets.items():
            for m in members:
                if not 0 <= m < self.size:
                    raise ElementRangeError(
                        f"subset '{subset_name}' contains {m} outside carrier of size {self.size}",
                        details={"subset": subset_name, "element": m},
                    )
        return self

    @classmethod
    def from_operations(
        cls,
        name: str,
        size: int,
        operations: Mapping[str, tuple[int, Callable[..., int]]],
        subsets: Mapping[str, Iterable[int]] | None = None,
    ) -> "FiniteAlgebra":
        """Tabulate Python callables; ``operations`` maps symbol -> (rank, function)."""
        signature = Signature(symbols=tuple((symbol, rank) for symbol, (rank, _) in operations.items()))
        tables = {
            symbol: tuple(fn(*args) for args in itertools.product(range(size), repeat=rank))
            for symbol, (rank, fn) in operations.items()
        }
        return cls(
            name=name,
            signature=signature,
            size=size,
            tables=tables,
            subsets={k: tuple(sorted(set(v))) for k, v in (subsets or {}).items()},
        )

    @property
    def elements(self) -> range:
        return range(self.size)

    def op(self, symbol: str, *args: int) -> int:
        """Unchecked table lookup for inner loops."""
        return self.tables[symbol][table_index(args, self.size)]

    def with_name(self, name: str) -> "FiniteAlgebra":
        return self.model_copy(update={"name": name})


def check_element(algebra: FiniteAlgebra, value: int, what: str = "element") -> int:
    if not isinstance(value, int) or not 0 <= value < algebra.size:
        raise ElementRangeError(
            f"{what} {value!r} is outside carrier of size {algebra.size}",
            details={"value": value, "size": algebra.size},
        )
    return value


def eval_symbol(algebra: FiniteAlgebra, symbol: str, args: Sequence[int]) -> int:
    """Apply the operation named ``symbol`` to ``args``."""
    rank = algebra.signature.arity(symbol)
    if rank != len(args):
        raise ArityError(
            f"Symbol '{symbol}' has rank {rank} but got {len(args)} arguments",
            details={"symbol": symbol, "rank": rank, "given": len(args)},
        )
    for i, a in enumerate(args):
        check_element(algebra, a, f"argument {i} of '{symbol}'")
    return algebra.tables[symbol][table_index(args, algebra.size)]


def is_associative(algebra: FiniteAlgebra, symbol: str) -> bool:
    if algebra.signature.arity(symbol) != 2:
        raise ArityError(f"Symbol '{symbol}' is not binary", details={"symbol": symbol})
    mul = algebra.tables[symbol]
    n = algebra.size
    return all(
        mul[mul[a * n + b] * n + c] == mul[a * n + mul[b * n + c]]
        for a, b, c in itertools.product(range(n), repeat=3)
    )
