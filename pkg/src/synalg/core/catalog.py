"""Small standard algebras used by the check suites, the CLI samples and the tests."""

from collections.abc import Callable

from synalg.core.algebra import FiniteAlgebra


def cyclic_group(n: int, name: str | None = None, *, symbol: str = "+", identity: str | None = None) -> FiniteAlgebra:
    """Z_n under addition mod n, optionally with the constant 0 named ``identity``."""
    ops: dict[str, tuple[int, Callable[..., int]]] = {symbol: (2, lambda x, y: (x + y) % n)}
    if identity is not None:
        ops[identity] = (0, lambda: 0)
    return FiniteAlgebra.from_operations(name or f"Z{n}", n, ops)


def constant_binary(n: int, value: int = 0, name: str | None = None) -> FiniteAlgebra:
    """Carrier of size n with the constant binary operation c(x, y) = value."""
    return FiniteAlgebra.from_operations(name or f"C{n}", n, {"c": (2, lambda x, y: value)})


def left_zero(n: int, name: str | None = None) -> FiniteAlgebra:
    """The left-zero semigroup x * y = x."""
    return FiniteAlgebra.from_operations(name or f"LZ{n}", n, {"*": (2, lambda x, y: x)})


def chain_semilattice(n: int, name: str | None = None) -> FiniteAlgebra:
    """The chain 0 < 1 < ... < n-1 under meet (minimum)."""
    return FiniteAlgebra.from_operations(name or f"SL{n}", n, {"^": (2, min)})


def trivial(symbols: tuple[tuple[str, int], ...] = (("*", 2),), name: str = "One") -> FiniteAlgebra:
    """The one-element algebra over the given symbols."""
    return FiniteAlgebra.from_operations(name, 1, {s: (rank, lambda *args: 0) for s, rank in symbols})
