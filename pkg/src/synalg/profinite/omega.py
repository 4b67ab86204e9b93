"""
Powers a^{n!} and the idempotent power a^omega in a finite semigroup, and the
enrichment of a semigroup by these unary operations.
See: docs/core/PROFINITE.md
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from synalg.core.algebra import FiniteAlgebra, check_element, is_associative
from synalg.core.exceptions import ElementRangeError, InvariantViolation, NonAssociativeError, UnknownSymbolError
from synalg.core.signature import Signature


class Exponent(str, Enum):
    OMEGA = "omega"


OMEGA = Exponent.OMEGA


class CyclicProfile(BaseModel):
    """The powers a, a^2, ... up to the first repetition: a^{index + period} = a^{index}."""

    model_config = ConfigDict(frozen=True)

    element: int
    index: int
    period: int
    powers: tuple[int, ...]

    def power(self, m: int) -> int:
        """a^m for m >= 1."""
        if m < self.index + self.period:
            return self.powers[m - 1]
        return self.powers[self.index + (m - self.index) % self.period - 1]

    @property
    def idempotent_exponent(self) -> int:
        """Smallest multiple of the period that is at least the index."""
        return -(-self.index // self.period) * self.period

    @property
    def idempotent(self) -> int:
        return self.power(self.idempotent_exponent)


def binary_symbol(algebra: FiniteAlgebra, symbol: str | None = None) -> str:
    """The multiplication symbol: ``symbol`` if given, else the single binary symbol."""
    if symbol is not None:
        if symbol not in algebra.signature or algebra.signature.arity(symbol) != 2:
            raise UnknownSymbolError(f"'{symbol}' is not a binary symbol of {algebra.name}", component="profinite")
        return symbol
    binaries = algebra.signature.binary_symbols()
    if len(binaries) != 1:
        raise UnknownSymbolError(
            f"{algebra.name} has binary symbols {list(binaries)}; name the multiplication",
            component="profinite",
            details={"symbols": list(binaries)},
        )
    return binaries[0]


def require_semigroup(algebra: FiniteAlgebra, symbol: str | None = None) -> str:
    mul = binary_symbol(algebra, symbol)
    if not is_associative(algebra, mul):
        raise NonAssociativeError(
            f"'{mul}' is not associative on {algebra.name}", component="profinite", details={"symbol": mul}
        )
    return mul


def cyclic_profile(algebra: FiniteAlgebra, a: int, symbol: str) -> CyclicProfile:
    check_element(algebra, a)
    powers = [a]
    seen = {a: 1}
    while True:
        nxt = algebra.op(symbol, powers[-1], a)
        if nxt in seen:
            index = seen[nxt]
            return CyclicProfile(element=a, index=index, period=len(powers) + 1 - index, powers=tuple(powers))
        powers.append(nxt)
        seen[nxt] = len(powers)


def factorial_exponent(profile: CyclicProfile, n: int) -> int:
    """An exponent m >= 1 with a^m = a^{n!}, found without computing n! once it passes the index."""
    if n < 0:
        raise ElementRangeError(f"exponent n must be a natural number, got {n}", component="profinite")
    exact: int | None = 1
    residue = 1 % profile.period
    for k in range(2, n + 1):
        residue = residue * k % profile.period
        if exact is not None:
            exact *= k
            if exact >= profile.index:
                exact = None
    if exact is not None:
        return exact
    return profile.index + (residue - profile.index) % profile.period


def omega_power(algebra: FiniteAlgebra, a: int, n: "int | Exponent", symbol: str | None = None) -> int:
    """a^{n!} for a natural number n, or a^omega for ``OMEGA``."""
    mul = require_semigroup(algebra, symbol)
    profile = cyclic_profile(algebra, a, mul)
    if isinstance(n, Exponent):
        e = profile.idempotent
        if algebra.op(mul, e, e) != e:
            raise InvariantViolation(
                f"a^omega = {e} of {a} is not idempotent", component="profinite", details={"element": a}
            )
        return e
    return profile.power(factorial_exponent(profile, n))


def omega_enriched_algebra(algebra: FiniteAlgebra, n_max: int, symbol: str | None = None) -> FiniteAlgebra:
    """The semigroup with unary ``pow<n>`` (x -> x^{n!}) for 1 <= n <= n_max and ``omega``."""
    mul = require_semigroup(algebra, symbol)
    profiles = [cyclic_profile(algebra, a, mul) for a in algebra.elements]
    tables = dict(algebra.tables)
    symbols = list(algebra.signature.symbols)
    for n in range(1, n_max + 1):
        name = f"pow{n}"
        symbols.append((name, 1))
        tables[name] = tuple(p.power(factorial_exponent(p, n)) for p in profiles)
    symbols.append(("omega", 1))
    tables["omega"] = tuple(p.idempotent for p in profiles)
    return FiniteAlgebra(
        name=f"{algebra.name}^omega",
        signature=Signature(symbols=tuple(symbols)),
        size=algebra.size,
        tables=tables,
        subsets=dict(algebra.subsets),
    )
