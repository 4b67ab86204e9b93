"""
Named check suites behind ``synalg check --suite``.

Randomized suites draw from one ``random.Random(config.seed)`` so a run reproduces from its seed.
See: docs/TESTING.md
"""

import itertools
import random

from synalg.checks.base import BaseSuite
from synalg.congruence.congruence import enumerate_congruences_oracle
from synalg.congruence.partition import Partition
from synalg.core.catalog import constant_binary
from synalg.core.exceptions import InvariantViolation, SearchExhaustedError
from synalg.core.models import SuiteResult
from synalg.core.registry import register_suite
from synalg.core.signature import Signature
from synalg.core.terms import count_occurrences, eval_term, fresh_names, is_linear_in, linearize, term_variables
from synalg.languages.examples import example_512_separation, example_517_witnesses
from synalg.profinite.omega import OMEGA, cyclic_profile, omega_power
from synalg.syntactic.determination import determining_set_from_quotient, index_bound_check, is_S_determined
from synalg.syntactic.pullback import pullback_syntactic_check
from synalg.syntactic.syntactic import syntactic_congruence
from synalg.utils.random_algebras import random_algebra, random_semigroup, random_surjective_hom, random_term

SWEEP_MAX_CARRIER = 4


def all_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]


@register_suite("ex52")
class ConstantOperationSuite(BaseSuite):
    """sigma_L = alpha_L on constant-binary-op algebras with carriers 2..6, for every L."""

    def run(self) -> SuiteResult:
        failures: list[str] = []
        checked = 0
        for n in range(2, 7):
            for value in range(n):
                algebra = constant_binary(n, value)
                for L in all_subsets(n):
                    checked += 1
                    sigma = syntactic_congruence(algebra, L).congruence.partition
                    if sigma != Partition.from_subset(n, L):
                        failures.append(f"{algebra.name} L={sorted(L)}: sigma_L = {sigma}")
        return self.result(checked, failures)


@register_suite("ex512")
class SparseSetSeparationSuite(BaseSuite):
    def run(self) -> SuiteResult:
        report = example_512_separation(self.config.ex512_bound, self.config.ex512_xmax, kind=self.config.ex512_kind)
        if not report.all_separated:
            raise SearchExhaustedError(
                f"no x <= {report.xmax} separates {report.first_failure}; raise --xmax",
                component="checks",
                details={"pair": list(report.first_failure or ()), "xmax": report.xmax},
            )
        return self.result(
            report.pairs,
            [],
            kind=self.config.ex512_kind,
            bound=report.bound,
            xmax=report.xmax,
            separated=report.separated,
            min_determining_size=report.min_determining_size,
        )


@register_suite("ex517")
class OnePointCompactificationSuite(BaseSuite):
    def run(self) -> SuiteResult:
        report = example_517_witnesses(self.config.ex517_bound)
        failures = [f"({i},{j}) not separated from ({k},inf)" for i, j, k in report.unseparated]
        if report.infinity_hits:
            failures.append(f"{report.infinity_hits} products from A x {{inf}} land in L")
        return self.result(
            report.mixed_pairs,
            failures,
            bound=report.bound,
            separated_by_formula=report.separated_by_formula,
            separated_by_search=report.separated_by_search,
            infinity_hits=report.infinity_hits,
            overflow_skipped=report.overflow_skipped,
        )


@register_suite("oracle")
class OracleSuite(BaseSuite):
    """Both sigma_L algorithms agree with the brute-force maximum over saturating congruences."""

    def run(self) -> SuiteResult:
        rng = random.Random(self.config.seed)
        failures: list[str] = []
        checked = 0
        for _ in range(self.config.sweep_samples):
            algebra = random_algebra(rng, rng.randint(1, SWEEP_MAX_CARRIER))
            table = list(algebra.tables["*"])
            oracle = enumerate_congruences_oracle(algebra, self.config.oracle_max_carrier)
            for L in all_subsets(algebra.size):
                checked += 1
                try:
                    sigma = syntactic_congruence(algebra, L).congruence
                except InvariantViolation as e:
                    failures.append(f"table {table} L={sorted(L)}: {e}")
                    continue
                saturating = [theta for theta in oracle if theta.partition.saturates(L)]
                if sigma.partition not in [theta.partition for theta in saturating]:
                    failures.append(f"table {table} L={sorted(L)}: {sigma} is not among the oracle congruences")
                elif not all(sigma.contains(theta) for theta in saturating):
                    failures.append(f"table {table} L={sorted(L)}: {sigma} misses a saturating congruence")
        return self.result(checked, failures, seed=self.config.seed, samples=self.config.sweep_samples)


@register_suite("prop34")
class PullbackSuite(BaseSuite):
    """Syntactic congruences pull back along random surjective homomorphisms."""

    def run(self) -> SuiteResult:
        rng = random.Random(self.config.seed)
        failures: list[str] = []
        checked = 0
        for _ in range(self.config.sweep_samples):
            phi = random_surjective_hom(rng, SWEEP_MAX_CARRIER)
            for L in all_subsets(phi.target.size):
                checked += 1
                try:
                    pullback_syntactic_check(phi, L)
                except InvariantViolation as e:
                    failures.append(f"phi={list(phi.image)} L={sorted(L)}: {e}")
        return self.result(checked, failures, seed=self.config.seed, samples=self.config.sweep_samples)


@register_suite("prop51")
class LiftedDeterminingSetSuite(BaseSuite):
    """Maps lifted from M(A/sigma_L) determine sigma_L, and index(sigma_L) <= 2^|F|."""

    def run(self) -> SuiteResult:
        rng = random.Random(self.config.seed)
        failures: list[str] = []
        checked = 0
        largest = 0
        for _ in range(self.config.sweep_samples):
            algebra = random_algebra(rng, rng.randint(1, SWEEP_MAX_CARRIER))
            for L in all_subsets(algebra.size):
                checked += 1
                label = f"table {list(algebra.tables['*'])} L={sorted(L)}"
                try:
                    F = determining_set_from_quotient(algebra, L)
                except InvariantViolation as e:
                    failures.append(f"{label}: {e}")
                    continue
                largest = max(largest, len(F))
                if not is_S_determined(algebra, L, F):
                    failures.append(f"{label}: lifted set does not determine sigma_L")
                bound = index_bound_check(algebra, L, F)
                if not bound.holds:
                    failures.append(f"{label}: index {bound.index} exceeds 2^{bound.set_size}")
        return self.result(checked, failures, seed=self.config.seed, largest_set=largest)


@register_suite("lemma513")
class LinearizationSuite(BaseSuite):
    """The chain identities linking t to its linearizations s_1..s_r."""

    signature = Signature(symbols=(("*", 2), ("g", 1)))
    samples_per_sweep = 500

    def _sample(self, rng: random.Random) -> tuple[int, ...] | None:
        while True:
            t = random_term(rng, self.signature, ["x1", "v1", "v2"], depth=3)
            if 1 <= count_occurrences(t, "x1") <= 3:
                break
        algebra = random_algebra(rng, rng.randint(1, SWEEP_MAX_CARRIER), self.signature.symbols)
        n = algebra.size
        a, a2 = rng.randrange(n), rng.randrange(n)
        v = {name: rng.randrange(n) for name in term_variables(t) if name != "x1"}
        x, y, z = fresh_names(t, "x1")
        parts = linearize(t, "x1")

        def s(i: int, b: int) -> int:
            return eval_term(algebra, parts[i], {**v, y: a, z: a2, x: b})

        def whole(b: int) -> int:
            return eval_term(algebra, t, {**v, "x1": b})

        r = len(parts)
        ok = all(is_linear_in(part, x) for part in parts)
        ok = ok and s(0, a2) == whole(a2) and s(r - 1, a) == whole(a)
        ok = ok and all(s(i, a) == s(i + 1, a2) for i in range(r - 1))
        return None if ok else (n, a, a2, r)

    def run(self) -> SuiteResult:
        rng = random.Random(self.config.seed)
        samples = max(self.samples_per_sweep, self.config.sweep_samples)
        outcomes = (self._sample(rng) for _ in range(samples))
        failures = [f"identity broken at (n, a, a', r) = {bad}" for bad in outcomes if bad]
        return self.result(samples, failures, seed=self.config.seed)


@register_suite("omega")
class OmegaPowerSuite(BaseSuite):
    """a^omega is the unique idempotent power of a, reached by a^(n!) once n >= |S|."""

    def run(self) -> SuiteResult:
        rng = random.Random(self.config.seed)
        failures: list[str] = []
        checked = 0
        for _ in range(max(50, self.config.sweep_samples // 4)):
            semigroup = random_semigroup(rng)
            table = list(semigroup.tables["*"])
            for a in semigroup.elements:
                checked += 1
                e = omega_power(semigroup, a, OMEGA)
                profile = cyclic_profile(semigroup, a, "*")
                powers = {profile.power(k) for k in range(1, 2 * semigroup.size + 1)}
                idempotents = [p for p in powers if semigroup.op("*", p, p) == p]
                if idempotents != [e]:
                    failures.append(f"table {table} a={a}: idempotent powers {sorted(idempotents)}, omega {e}")
                for n in range(semigroup.size, semigroup.size + 3):
                    if omega_power(semigroup, a, n) != e:
                        failures.append(f"table {table} a={a}: a^({n}!) differs from a^omega")
        return self.result(checked, failures, seed=self.config.seed)
