"""
Windowed models of two infinite monoids and the separation checks run on them.

``nat-plus`` is (N, +) with L a sparse infinite set; every pair of naturals is split by
some translation, so sigma_L is the equality relation. ``nat-max-times-onepoint`` is
(N, max) x (N u {inf}, +) with L the diagonal, where A x {inf} forms one sigma_L class.
Values that leave the window are reported as overflow, never wrapped.
"""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from synalg.core.exceptions import ConfigurationError
from synalg.utils.logger import get_logger

logger = get_logger("synalg.languages")


class Marker(str, Enum):
    INFINITY = "inf"
    OVERFLOW = "overflow"


INFINITY = Marker.INFINITY
OVERFLOW = Marker.OVERFLOW

Coordinate = int | Literal[Marker.INFINITY]
Pair = tuple[int, Coordinate]


class TruncatedModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    bound: int = Field(ge=0)
    kind: Literal["nat-plus", "nat-max-times-onepoint"]

    def plus(self, m: int, n: int) -> int | Literal[Marker.OVERFLOW]:
        total = m + n
        return total if total <= self.bound else OVERFLOW

    def multiply(self, left: Pair, right: Pair) -> Pair | Literal[Marker.OVERFLOW]:
        """(a, b)(c, d) = (max(a, c), b + d), with inf absorbing in the second factor."""
        a, b = left
        c, d = right
        first = max(a, c)
        if b is INFINITY or d is INFINITY:
            return first, INFINITY
        second = self.plus(b, d)
        if second is OVERFLOW:
            return OVERFLOW
        return first, second

    def in_diagonal(self, x: "Pair | Literal[Marker.OVERFLOW]") -> bool:
        return x is not OVERFLOW and x[1] is not INFINITY and x[0] == x[1]


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True


SPARSE_SETS = {"powers-of-two": is_power_of_two, "primes": is_prime}


class Separation512Report(BaseModel):
    """Witnesses x with exactly one of m + x, n + x in L, for all pairs m < n <= bound."""

    bound: int
    xmax: int
    kind: str
    pairs: int
    separated: int
    witnesses: list[tuple[int, int, int]] = Field(default_factory=list)
    first_failure: tuple[int, int] | None = None
    # any finite determining set F needs 2^|F| >= bound + 1 classes
    min_determining_size: int

    @property
    def all_separated(self) -> bool:
        return self.separated == self.pairs


def example_512_separation(
    bound: int, xmax: int, kind: Literal["powers-of-two", "primes"] = "powers-of-two"
) -> Separation512Report:
    """Search translations x in 1..xmax separating every pair of the window [0, bound]."""
    if bound < 2 or xmax < bound:
        raise ConfigurationError(
            f"need bound >= 2 and xmax >= bound, got bound={bound}, xmax={xmax}",
            component="languages",
            details={"bound": bound, "xmax": xmax},
        )
    if kind not in SPARSE_SETS:
        raise ConfigurationError(f"unknown set '{kind}'", component="languages", details={"kind": kind})
    model = TruncatedModel(bound=bound + xmax, kind="nat-plus")
    member = SPARSE_SETS[kind]
    in_l = [member(v) for v in range(model.bound + 1)]

    witnesses: list[tuple[int, int, int]] = []
    first_failure: tuple[int, int] | None = None
    pairs = 0
    for n in range(bound + 1):
        for m in range(n):
            pairs += 1
            for x in range(1, xmax + 1):
                if in_l[m + x] != in_l[n + x]:
                    witnesses.append((m, n, x))
                    break
            else:
                if first_failure is None:
                    first_failure = (m, n)
    witnesses.sort()
    logger.debug("%s window %d: %d of %d pairs separated", kind, bound, len(witnesses), pairs)
    return Separation512Report(
        bound=bound,
        xmax=xmax,
        kind=kind,
        pairs=pairs,
        separated=len(witnesses),
        witnesses=witnesses,
        first_failure=first_failure,
        min_determining_size=bound.bit_length(),
    )


class Witness517(BaseModel):
    finite: tuple[int, int]
    infinite_first: int
    multiplier: tuple[int, int]
    finite_product: tuple[int, int]
    infinite_product: tuple[int, str]
    by_formula: bool


class Witness517Report(BaseModel):
    bound: int
    mixed_pairs: int
    separated_by_formula: int
    separated_by_search: int
    unseparated: list[tuple[int, int, int]] = Field(default_factory=list)
    infinity_elements: int
    infinity_multipliers: int
    infinity_hits: int
    overflow_skipped: int

    @property
    def holds(self) -> bool:
        return not self.unseparated and self.infinity_hits == 0


def example_517_witness(i: int, j: int, k: int, bound: int) -> Witness517 | None:
    """A multiplier putting (i, j) into L while (k, inf) stays out, inside the window."""
    model = TruncatedModel(bound=bound, kind="nat-max-times-onepoint")
    if i + j <= bound:
        candidates = [((i + j, i), True)]
    else:
        # max(u, i) = v + j with u, v in the window
        candidates = [((0, i - j), False) if i >= j else ((j, 0), False)]
    for multiplier, by_formula in candidates:
        finite = model.multiply(multiplier, (i, j))
        infinite = model.multiply(multiplier, (k, INFINITY))
        if finite is OVERFLOW or infinite is OVERFLOW:
            continue
        if model.in_diagonal(finite) and not model.in_diagonal(infinite):
            return Witness517(
                finite=(i, j),
                infinite_first=k,
                multiplier=multiplier,
                finite_product=(finite[0], int(finite[1])),
                infinite_product=(infinite[0], INFINITY.value),
                by_formula=by_formula,
            )
    return None


def example_517_witnesses(bound: int) -> Witness517Report:
    """Separate every (i, j) from every (k, inf), and confirm nothing in the window splits A x {inf}."""
    if bound < 3:
        raise ConfigurationError(f"need bound >= 3, got {bound}", component="languages", details={"bound": bound})
    model = TruncatedModel(bound=bound, kind="nat-max-times-onepoint")
    window = range(bound + 1)
    mixed = by_formula = by_search = 0
    unseparated: list[tuple[int, int, int]] = []
    for i in window:
        for j in window:
            for k in window:
                mixed += 1
                w = example_517_witness(i, j, k, bound)
                if w is None:
                    unseparated.append((i, j, k))
                elif w.by_formula:
                    by_formula += 1
                else:
                    by_search += 1

    multipliers: list[Pair] = [(u, v) for u in window for v in window]
    multipliers.extend((u, INFINITY) for u in window)
    hits = overflow = 0
    for k in window:
        for multiplier in multipliers:
            product = model.multiply(multiplier, (k, INFINITY))
            if product is OVERFLOW:
                overflow += 1
            elif model.in_diagonal(product):
                hits += 1
    logger.debug("window %d: %d mixed pairs, %d hits inside A x {inf}", bound, mixed, hits)
    return Witness517Report(
        bound=bound,
        mixed_pairs=mixed,
        separated_by_formula=by_formula,
        separated_by_search=by_search,
        unseparated=unseparated,
        infinity_elements=bound + 1,
        infinity_multipliers=len(multipliers),
        infinity_hits=hits,
        overflow_skipped=overflow,
    )
