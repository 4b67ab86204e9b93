"""
Inverse systems of finite algebras: a profinite algebra presented to a finite depth.

Levels are numbered 1..depth from the coarsest algebra to the finest; the connecting
map ``k+1 -> k`` is stored as an image array and checked by :func:`validate_system`.
See: docs/core/PROFINITE.md
"""

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from synalg.congruence.congruence import Congruence, certify, quotient
from synalg.congruence.partition import Partition
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import (
    CompatibilityError,
    ElementRangeError,
    FormatError,
    IncoherentThreadError,
    LevelOutOfRangeError,
    NotAHomomorphismError,
    NotSurjectiveError,
    PullbackIdentityError,
    WellDefinednessError,
)
from synalg.core.formats import (
    ALG_KEYWORDS,
    ENTRIES_PER_LINE,
    TokenCursor,
    parse_algebra_tokens,
    serialize_algebra,
    tokenize,
)
from synalg.core.homomorphism import Homomorphism, compatibility_failure
from synalg.syntactic.pullback import pull_back
from synalg.syntactic.syntactic import syntactic_congruence
from synalg.utils.logger import get_logger

logger = get_logger("synalg.profinite")


class InverseSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = "S"
    levels: tuple[FiniteAlgebra, ...]
    # connecting[k - 1] maps level k+1 onto level k
    connecting: tuple[tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def shapes_match(self) -> "InverseSystem":
        if not self.levels:
            raise LevelOutOfRangeError("an inverse system needs at least one level", component="profinite")
        if len(self.connecting) != len(self.levels) - 1:
            raise LevelOutOfRangeError(
                f"{len(self.levels)} levels need {len(self.levels) - 1} connecting maps, got {len(self.connecting)}",
                component="profinite",
            )
        for k, image in enumerate(self.connecting, start=1):
            upper, lower = self.levels[k], self.levels[k - 1]
            if len(image) != upper.size:
                raise ElementRangeError(
                    f"map {k + 1}->{k} has {len(image)} entries, level {k + 1} has {upper.size} elements",
                    component="profinite",
                )
            bad = [b for b in image if not 0 <= b < lower.size]
            if bad:
                raise ElementRangeError(
                    f"map {k + 1}->{k} sends into {bad}, outside level {k} of size {lower.size}",
                    component="profinite",
                )
        return self

    @property
    def depth(self) -> int:
        return len(self.levels)

    def check_level(self, k: int) -> int:
        if not 1 <= k <= self.depth:
            raise LevelOutOfRangeError(
                f"level {k} outside 1..{self.depth}", component="profinite", details={"level": k, "depth": self.depth}
            )
        return k

    def level(self, k: int) -> FiniteAlgebra:
        return self.levels[self.check_level(k) - 1]

    def composite_image(self, m: int, k: int) -> tuple[int, ...]:
        """Image array of pi_{m->k}, composing connecting maps downward."""
        self.check_level(m)
        self.check_level(k)
        if m < k:
            raise LevelOutOfRangeError(f"no map from level {m} up to level {k}", component="profinite")
        image = tuple(self.level(m).elements)
        for j in range(m, k, -1):
            step = self.connecting[j - 2]
            image = tuple(step[b] for b in image)
        return image

    def projection(self, m: int, k: int) -> Homomorphism:
        return Homomorphism(source=self.level(m), target=self.level(k), image=self.composite_image(m, k))


class LevelDiagnostic(BaseModel):
    source_level: int
    target_level: int
    homomorphism: bool
    surjective: bool
    message: str | None = None


class SystemDiagnostics(BaseModel):
    valid: bool
    levels: list[LevelDiagnostic] = Field(default_factory=list)
    first_failure: str | None = None


def validate_system(system: InverseSystem) -> SystemDiagnostics:
    """Check that every connecting map is a surjective homomorphism, reporting the first failure."""
    levels: list[LevelDiagnostic] = []
    first: str | None = None
    for k in range(1, system.depth):
        upper, lower = system.level(k + 1), system.level(k)
        image = system.connecting[k - 1]
        failure = compatibility_failure(upper, lower, image)
        missing = sorted(set(lower.elements) - set(image))
        message = None
        if failure is not None:
            symbol, args = failure
            message = f"map {k + 1}->{k} does not commute with '{symbol}' at {args}"
        elif missing:
            message = f"map {k + 1}->{k} is not surjective: misses {missing}"
        levels.append(
            LevelDiagnostic(
                source_level=k + 1,
                target_level=k,
                homomorphism=failure is None,
                surjective=not missing,
                message=message,
            )
        )
        if message and first is None:
            first = message
    return SystemDiagnostics(valid=first is None, levels=levels, first_failure=first)


def require_valid(system: InverseSystem) -> None:
    diagnostics = validate_system(system)
    for d in diagnostics.levels:
        if not d.homomorphism:
            raise NotAHomomorphismError(d.message or "", component="profinite", details={"level": d.source_level})
        if not d.surjective:
            raise NotSurjectiveError(d.message or "", component="profinite", details={"level": d.source_level})


class Thread(BaseModel):
    """One element per level, listed from level 1 upward."""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "Thread":
        try:
            return cls(values=tuple(int(v) for v in text.split(",") if v.strip()))
        except ValueError:
            raise IncoherentThreadError(f"bad thread '{text}', expected comma-separated integers") from None

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def check_thread(system: InverseSystem, thread: Thread) -> Thread:
    if len(thread.values) != system.depth:
        raise IncoherentThreadError(
            f"thread {thread} has {len(thread.values)} entries, system depth is {system.depth}",
            component="profinite",
        )
    for k, x in enumerate(thread.values, start=1):
        if not 0 <= x < system.level(k).size:
            raise IncoherentThreadError(f"thread entry {x} outside level {k}", component="profinite")
    for k in range(1, system.depth):
        below = system.connecting[k - 1][thread.values[k]]
        if below != thread.values[k - 1]:
            raise IncoherentThreadError(
                f"thread {thread} is not coherent at level {k}: {thread.values[k]} maps to {below}",
                component="profinite",
                details={"level": k},
            )
    return thread


def thread_from_top(system: InverseSystem, x: int) -> Thread:
    """The coherent thread through element ``x`` of the deepest level."""
    top = system.level(system.depth)
    if not 0 <= x < top.size:
        raise ElementRangeError(f"element {x} outside top level of size {top.size}", component="profinite")
    values = [x]
    for k in range(system.depth - 1, 0, -1):
        values.append(system.connecting[k - 1][values[-1]])
    return Thread(values=tuple(reversed(values)))


def separate_points(system: InverseSystem, first: Thread, second: Thread) -> int | None:
    """Smallest level where the threads differ; None when they agree up to the represented depth."""
    check_thread(system, first)
    check_thread(system, second)
    for k, (a, b) in enumerate(zip(first.values, second.values), start=1):
        if a != b:
            return k
    return None


class CylinderSet(BaseModel):
    """The clopen set of threads whose level-``level`` entry lies in ``members``."""

    model_config = ConfigDict(frozen=True)

    level: int
    members: frozenset[int]

    @classmethod
    def parse(cls, text: str) -> "CylinderSet":
        """``<level>:<i,j,...>``; an empty member list is allowed."""
        head, sep, tail = text.partition(":")
        try:
            if not sep:
                raise ValueError(text)
            return cls(level=int(head), members=frozenset(int(v) for v in tail.split(",") if v.strip()))
        except ValueError:
            raise FormatError(f"bad cylinder '{text}', expected <level>:<i,j,...>") from None

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __str__(self) -> str:
        return f"{self.level}:" + ",".join(str(a) for a in sorted(self.members))


def _check_cylinder(system: InverseSystem, cylinder: CylinderSet) -> FiniteAlgebra:
    algebra = system.level(cylinder.level)
    bad = sorted(a for a in cylinder.members if not 0 <= a < algebra.size)
    if bad:
        raise ElementRangeError(f"cylinder elements {bad} outside level {cylinder.level}", component="profinite")
    return algebra


class Recognition(BaseModel):
    """A finite quotient B recognizing a cylinder, with phi_m : A_m -> B for every level m >= k."""

    model_config = ConfigDict(frozen=True)

    cylinder: CylinderSet
    target: FiniteAlgebra
    image_subset: tuple[int, ...]
    maps: dict[int, Homomorphism]


def recognize_clopen(system: InverseSystem, cylinder: CylinderSet) -> Recognition:
    """phi = eta o pi_k, with eta the syntactic morphism of the cylinder's base set.

    At every level m >= k the identity phi_m^-1(phi_m(L_m)) = L_m is asserted, where L_m is
    the cylinder read at level m.
    """
    algebra = _check_cylinder(system, cylinder)
    require_valid(system)
    result = syntactic_congruence(algebra, cylinder.members)
    image_subset = tuple(sorted({result.eta.image[a] for a in cylinder.members}))
    maps: dict[int, Homomorphism] = {}
    for m in range(cylinder.level, system.depth + 1):
        phi = system.projection(m, cylinder.level).then(result.eta)
        at_level = cylinder_preimage(system, cylinder, m)
        if phi.preimage(image_subset) != at_level:
            raise PullbackIdentityError(
                f"cylinder {cylinder} is not recognized at level {m}", component="profinite", details={"level": m}
            )
        maps[m] = phi
    logger.debug("cylinder %s recognized by a %d-element quotient", cylinder, result.quotient.size)
    return Recognition(cylinder=cylinder, target=result.quotient, image_subset=image_subset, maps=maps)


def cylinder_syntactic(system: InverseSystem, cylinder: CylinderSet, m: int) -> Congruence:
    """sigma of the cylinder read at level ``m``, checked against the pullback of sigma_S through pi_{m->k}."""
    algebra = _check_cylinder(system, cylinder)
    system.check_level(m)
    if m < cylinder.level:
        raise LevelOutOfRangeError(
            f"level {m} is below the cylinder level {cylinder.level}", component="profinite", details={"level": m}
        )
    require_valid(system)
    pi = system.projection(m, cylinder.level)
    base = syntactic_congruence(algebra, cylinder.members).congruence
    upper = syntactic_congruence(system.level(m), pi.preimage(cylinder.members)).congruence
    expected = pull_back(pi, base.partition)
    if upper.partition != expected:
        raise PullbackIdentityError(
            f"sigma at level {m} is {upper}, pullback of {base} is {expected}",
            component="profinite",
            details={"witness": list(upper.partition.first_difference(expected) or ())},
        )
    return upper


def quotient_system(system: InverseSystem, thetas: Sequence[Congruence | Partition]) -> InverseSystem:
    """The levelwise quotient A_k/theta_k with the induced connecting maps."""
    require_valid(system)
    if len(thetas) != system.depth:
        raise LevelOutOfRangeError(
            f"need one congruence per level ({system.depth}), got {len(thetas)}", component="profinite"
        )
    certified: list[Congruence] = []
    for k, theta in enumerate(thetas, start=1):
        p = theta.partition if isinstance(theta, Congruence) else theta
        certified.append(certify(system.level(k), p))

    for k in range(1, system.depth):
        upper, lower = certified[k].partition, certified[k - 1].partition
        step = system.connecting[k - 1]
        for block in upper.blocks():
            targets = {lower.class_id[step[a]] for a in block}
            if len(targets) > 1:
                raise CompatibilityError(
                    f"map {k + 1}->{k} splits the class {set(block)} across classes of level {k}",
                    component="profinite",
                    details={"level": k + 1, "class": list(block)},
                )

    levels: list[FiniteAlgebra] = []
    projections: list[Homomorphism] = []
    for k, theta in enumerate(certified, start=1):
        q, eta = quotient(system.level(k), theta)
        levels.append(q)
        projections.append(eta)
    connecting: list[tuple[int, ...]] = []
    for k in range(1, system.depth):
        upper, lower = certified[k].partition, certified[k - 1].partition
        step = system.connecting[k - 1]
        induced = [0] * upper.index
        for a in system.level(k + 1).elements:
            induced[upper.class_id[a]] = lower.class_id[step[a]]
        connecting.append(tuple(induced))

    out = InverseSystem(name=f"{system.name}/theta", levels=tuple(levels), connecting=tuple(connecting))
    diagnostics = validate_system(out)
    if not diagnostics.valid:
        raise WellDefinednessError(
            f"quotient system fails validation: {diagnostics.first_failure}", component="profinite"
        )
    # the squares eta_k o pi = pi' o eta_{k+1} commute
    for k in range(1, system.depth):
        for a in system.level(k + 1).elements:
            if projections[k - 1].image[system.connecting[k - 1][a]] != connecting[k - 1][projections[k].image[a]]:
                raise WellDefinednessError(f"projection square at level {k} does not commute", component="profinite")
    return out


def parse_system(text: str, path: str | None = None) -> InverseSystem:
    """Parse a ``.sys`` document: ``system``, ``depth``, the algebras, then ``map k+1 k`` blocks."""
    cursor = TokenCursor(tokenize(text), path)
    cursor.keyword("system")
    name = cursor.next("a system name")
    cursor.keyword("depth")
    line = cursor.line
    depth = cursor.integer("the depth")
    if depth < 1:
        raise FormatError(f"depth must be positive, got {depth}", line, path)
    levels = [parse_algebra_tokens(cursor) for _ in range(depth)]
    maps: dict[int, tuple[int, ...]] = {}
    while cursor.peek() == "map":
        head = cursor.line
        cursor.keyword("map")
        upper = cursor.integer("the source level")
        lower = cursor.integer("the target level")
        if upper != lower + 1 or not 1 <= lower < depth:
            raise FormatError(f"map {upper} {lower} must connect adjacent levels k+1 -> k", head, path)
        if lower in maps:
            raise FormatError(f"map {upper} {lower} given twice", head, path)
        maps[lower] = tuple(v for v, _ in cursor.integers_until_keyword(ALG_KEYWORDS))
    if cursor.peek() is not None:
        raise FormatError(f"unexpected '{cursor.peek()}'", cursor.line, path)
    missing = [k for k in range(1, depth) if k not in maps]
    if missing:
        raise FormatError(f"missing map {missing[0] + 1} {missing[0]}", cursor.line, path)
    try:
        return InverseSystem(name=name, levels=tuple(levels), connecting=tuple(maps[k] for k in range(1, depth)))
    except (ElementRangeError, LevelOutOfRangeError) as e:
        raise FormatError(str(e), cursor.line, path, details=e.details) from e


def serialize_system(system: InverseSystem) -> str:
    lines = [f"system {system.name}", f"depth {system.depth}"]
    for algebra in system.levels:
        lines.append(serialize_algebra(algebra).rstrip("\n"))
    for k, image in enumerate(system.connecting, start=1):
        lines.append(f"map {k + 1} {k}")
        for start in range(0, len(image), ENTRIES_PER_LINE):
            lines.append(" ".join(str(v) for v in image[start : start + ENTRIES_PER_LINE]))
    return "\n".join(lines) + "\n"


def cylinder_preimage(system: InverseSystem, cylinder: CylinderSet, m: int) -> frozenset[int]:
    """The cylinder read at level ``m >= k``."""
    _check_cylinder(system, cylinder)
    return system.projection(m, cylinder.level).preimage(cylinder.members)


def level_subsets(system: InverseSystem, k: int) -> Iterable[frozenset[int]]:
    """Every subset of level ``k``, in bitmask order."""
    n = system.level(k).size
    for mask in range(2**n):
        yield frozenset(a for a in range(n) if mask >> a & 1)
