from collections.abc import Mapping, Sequence

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator

from synalg.core.exceptions import SignatureError, UnknownSymbolError


class Signature(BaseModel):
    """A finite ranked signature.

    Symbols are kept in declaration order as ``(name, rank)`` pairs; rank 0 symbols are
    constants. Names are unique across all ranks.
    """

    model_config = ConfigDict(frozen=True)

    symbols: tuple[tuple[str, int], ...]

    _arity: dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("symbols")
    @classmethod
    def names_unique_and_ranks_valid(cls, v: tuple[tuple[str, int], ...]) -> tuple[tuple[str, int], ...]:
        seen: set[str] = set()
        for name, rank in v:
            if not name or any(ch.isspace() for ch in name) or any(ch in "(),#" for ch in name):
                raise SignatureError(f"Invalid symbol name {name!r}", details={"symbol": name})
            if rank < 0:
                raise SignatureError(f"Symbol '{name}' has negative rank {rank}", details={"symbol": name})
            if name in seen:
                raise SignatureError(f"Symbol '{name}' declared twice", details={"symbol": name})
            seen.add(name)
        return v

    def model_post_init(self, __context: object) -> None:
        self._arity = dict(self.symbols)

    @classmethod
    def from_ranks(cls, ranks: Mapping[int, Sequence[str]]) -> "Signature":
        """Build a signature from a rank -> names mapping (ranks in increasing order)."""
        return cls(symbols=tuple((name, rank) for rank in sorted(ranks) for name in ranks[rank]))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    @property
    def ranks(self) -> dict[int, tuple[str, ...]]:
        """Per-rank symbol lists, each in declaration order."""
        out: dict[int, list[str]] = {}
        for name, rank in self.symbols:
            out.setdefault(rank, []).append(name)
        return {rank: tuple(names) for rank, names in sorted(out.items())}

    def arity(self, symbol: str) -> int:
        try:
            return self._arity[symbol]
        except KeyError:
            raise UnknownSymbolError(f"Unknown symbol '{symbol}'", details={"symbol": symbol}) from None

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._arity

    def operations(self) -> tuple[tuple[str, int], ...]:
        """Symbols of rank at least one, in declaration order."""
        return tuple((name, rank) for name, rank in self.symbols if rank >= 1)

    def binary_symbols(self) -> tuple[str, ...]:
        return tuple(name for name, rank in self.symbols if rank == 2)
