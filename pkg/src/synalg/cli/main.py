"""
The ``synalg`` command line: one verb per construction, text or ``--json`` reports.

Exit status: 0 on success, 1 on domain errors (bad input, unsatisfied preconditions),
2 on internal invariant violations.
See: docs/CLI.md
"""

import json
from enum import IntEnum
from pathlib import Path
from typing import Any

import click

import synalg.checks  # noqa: F401  (registers the suites)
from synalg import __version__
from synalg.congruence.congruence import certify, enumerate_congruences_oracle, is_congruence, quotient
from synalg.congruence.partition import Partition
from synalg.core.algebra import FiniteAlgebra
from synalg.core.exceptions import ElementRangeError, FormatError, InvariantViolation, SynalgError
from synalg.core.formats import parse_algebra, serialize_algebra
from synalg.core.homomorphism import Homomorphism
from synalg.core.models import Envelope, EquivalenceReport
from synalg.core.registry import SuiteRegistry
from synalg.core.terms import Term, eval_term, format_term, linearize, parse_term
from synalg.languages.dfa import (
    Dfa,
    accepts,
    minimal_dfa,
    monoid_accepts,
    parse_dfa,
    serialize_dfa,
    syntactic_monoid,
    transition_monoid,
)
from synalg.profinite.omega import OMEGA, Exponent, omega_enriched_algebra, omega_power
from synalg.profinite.report import theorem61_report
from synalg.profinite.residual import partition_meet_congruence, separating_homomorphism, theorem41_report
from synalg.profinite.system import (
    CylinderSet,
    InverseSystem,
    Thread,
    cylinder_preimage,
    cylinder_syntactic,
    parse_system,
    quotient_system,
    recognize_clopen,
    separate_points,
    serialize_system,
    thread_from_top,
    validate_system,
)
from synalg.syntactic.determination import (
    DeterminingSet,
    determining_set_from_quotient,
    determining_set_from_terms,
    index_bound_check,
    is_S_determined,
    is_term_determined,
    linearized_term_set,
    minimal_determining_subset,
)
from synalg.syntactic.pullback import pullback_syntactic_check
from synalg.syntactic.report import theorem516_report
from synalg.syntactic.syntactic import SubsetL, as_subset, syntactic_congruence
from synalg.translations.monoid import transformation_of_linear_term, translation_monoid
from synalg.utils.config import EngineConfig, load_config
from synalg.utils.logger import get_logger, set_log_level

logger = get_logger("synalg.cli")


class ExitCode(IntEnum):
    OK = 0
    DOMAIN = 1
    INVARIANT = 2


# library operation -> the verb that reaches it
OPERATIONS: dict[str, str] = {
    "eval_symbol": "eval",
    "eval_term": "eval",
    "parse_term": "eval",
    "count_occurrences": "linearize",
    "linearize": "linearize",
    "parse_algebra": "fmt",
    "serialize_algebra": "fmt",
    "is_congruence": "partition",
    "saturates": "partition",
    "largest_congruence_saturating": "syn",
    "syntactic_congruence": "syn",
    "quotient": "quotient",
    "meet": "partition-meet",
    "partition_meet_congruence": "partition-meet",
    "enumerate_congruences_oracle": "congruences",
    "elementary_translations": "tm",
    "translation_monoid": "tm",
    "transformation_of_linear_term": "polymap",
    "is_S_determined": "detset",
    "determining_set_from_quotient": "detset",
    "determining_set_from_terms": "termdet",
    "is_term_determined": "termdet",
    "linearized_term_set": "termdet",
    "minimal_determining_subset": "mindetset",
    "index_bound_check": "detset",
    "pullback_syntactic_check": "pullback",
    "theorem516_report": "thm516",
    "validate_system": "sys-validate",
    "parse_system": "sys-validate",
    "separate_points": "sys-separate",
    "thread_from_top": "sys-thread",
    "recognize_clopen": "sys-recognize",
    "cylinder_syntactic": "sys-syntactic",
    "quotient_system": "sys-quotient",
    "serialize_system": "sys-quotient",
    "theorem41_report": "thm41",
    "separating_homomorphism": "separate",
    "omega_power": "omega",
    "omega_enriched_algebra": "omega-enrich",
    "theorem61_report": "thm61",
    "minimal_dfa": "dfa-min",
    "serialize_dfa": "dfa-min",
    "parse_dfa": "dfa-synmon",
    "transition_monoid": "dfa-synmon",
    "syntactic_monoid": "dfa-synmon",
    "accepts": "dfa-synmon",
    "monoid_accepts": "dfa-synmon",
    "example_512_separation": "check",
    "example_517_witnesses": "check",
}


class SynalgGroup(click.Group):
    """Maps library errors onto exit codes and keeps stdout a clean report stream."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = ExitCode.DOMAIN
            raise
        except InvariantViolation as e:
            logger.error("invariant violated in %s: %s", e.component, e)
            click.echo(f"internal error: {e}", err=True)
            ctx.exit(ExitCode.INVARIANT)
        except SynalgError as e:
            logger.error("%s error: %s", e.component, e)
            click.echo(f"error: {e}", err=True)
            ctx.exit(ExitCode.DOMAIN)


# ---- loading and selectors ---- #


def read_artifact(path: str) -> str:
    """The text of an input file; undecodable bytes are a FormatError at their line."""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise FormatError(
            f"not valid UTF-8 (byte 0x{data[e.start]:02x} at offset {e.start})",
            line=line,
            path=path,
            component="cli",
            details={"offset": e.start},
        ) from e


def load_algebra(path: str) -> FiniteAlgebra:
    return parse_algebra(read_artifact(path), path)


def load_system(path: str) -> InverseSystem:
    return parse_system(read_artifact(path), path)


def load_dfa(path: str) -> Dfa:
    return parse_dfa(read_artifact(path), path)


def resolve_subset(algebra: FiniteAlgebra, text: str) -> SubsetL:
    """A named subset of the algebra, or a comma-separated element list (possibly empty)."""
    if text in algebra.subsets:
        return as_subset(algebra, algebra.subsets[text], name=text)
    try:
        members = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ElementRangeError(
            f"'{text}' is neither a subset of {algebra.name} nor a list of elements",
            component="cli",
            details={"subset": text},
        ) from None
    return as_subset(algebra, members)


def parse_assignment(pairs: tuple[str, ...]) -> dict[str, int]:
    out: dict[str, int] = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name.strip() or not value.strip().lstrip("-").isdigit():
            raise click.BadParameter(f"expected name=element, got '{pair}'", param_hint="--assign")
        out[name.strip()] = int(value)
    return out


def parse_image(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated elements, got '{text}'", param_hint="--map") from None


def emit(command: str, result: dict[str, Any], text: list[str], as_json: bool) -> None:
    """Print one report: a single JSON document, or the text lines."""
    if as_json:
        envelope = Envelope(command=command, result=result)
        click.echo(json.dumps(envelope.model_dump(mode="json", by_alias=True), sort_keys=True))
    else:
        for line in text:
            click.echo(line)
    logger.info("%s done", command)


def blocks_of(p: Partition) -> list[list[int]]:
    return [list(b) for b in p.blocks()]


def determining_payload(F: DeterminingSet) -> list[dict[str, Any]]:
    return [
        {"image": list(f.image), "provenance": f.provenance.describe() if f.provenance else "identity"}
        for f in F.functions
    ]


def determining_record(F: DeterminingSet, minimal: bool) -> dict[str, Any]:
    """The determining-set record shared by detset and mindetset."""
    return {"kind": F.kind, "size": len(F), "elements": determining_payload(F), "minimal": minimal}


def tables_payload(algebra: FiniteAlgebra) -> dict[str, Any]:
    return {
        "size": algebra.size,
        "operations": {
            symbol: {"rank": rank, "table": list(algebra.tables[symbol])} for symbol, rank in algebra.signature.symbols
        },
    }



def report_lines(report: EquivalenceReport) -> list[str]:
    lines = [f"{report.algebra}, L = {report.subset}"]
    for c in report.conditions:
        lines.append(f"  ({c.number}) {c.status.value:<12} {c.statement}")
        if c.note:
            lines.append(f"      {c.note}")
    lines.append("consistent" if report.consistent else "INCONSISTENT")
    return lines


algebra_option = click.option(
    "-a", "--algebra", "algebra_path", required=True, type=click.Path(exists=True, dir_okay=False), help=".alg file"
)
subset_option = click.option("-L", "--subset", "subset_text", required=True, help="subset name or list, e.g. 0,2")
system_option = click.option(
    "-s", "--system", "system_path", required=True, type=click.Path(exists=True, dir_okay=False), help=".sys file"
)
dfa_option = click.option(
    "-d", "--dfa", "dfa_path", required=True, type=click.Path(exists=True, dir_okay=False), help=".dfa file"
)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit a single JSON document.")


@click.group(cls=SynalgGroup)
@click.version_option(__version__, prog_name="synalg")
@click.option("--log-level", default=None, help="Override SYNALG_LOG_LEVEL.")
@click.option("--env-file", default=".env", show_default=True, help="dotenv file read for SYNALG_* settings.")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None, env_file: str) -> None:
    """Syntactic congruences, determining sets and profinite approximations of finite algebras."""
    config = load_config(dotenv_path=env_file, log_level=log_level)
    set_log_level(config.log_level)
    ctx.obj = {"config": config, "env_file": env_file}
    logger.info("dispatching %s", ctx.invoked_subcommand)


def config_of(ctx: click.Context) -> EngineConfig:
    config: EngineConfig = ctx.obj["config"]
    return config


# ---- algebra-core ---- #


@cli.command("fmt")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def fmt_command(path: str) -> None:
    """Re-emit an .alg, .sys or .dfa file in canonical form."""
    suffix = Path(path).suffix
    if suffix == ".alg":
        click.echo(serialize_algebra(load_algebra(path)), nl=False)
    elif suffix == ".sys":
        click.echo(serialize_system(load_system(path)), nl=False)
    elif suffix == ".dfa":
        click.echo(serialize_dfa(load_dfa(path)), nl=False)
    else:
        raise FormatError(f"unknown file type '{suffix}', expected .alg, .sys or .dfa", path=path)


@cli.command("eval")
@algebra_option
@click.option("-t", "--term", "term_text", required=True)
@click.option("--assign", multiple=True, help="name=element, repeatable")
@json_option
def eval_command(algebra_path: str, term_text: str, assign: tuple[str, ...], as_json: bool) -> None:
    """Evaluate a term under an assignment."""
    algebra = load_algebra(algebra_path)
    t = parse_term(term_text, algebra.signature)
    value = eval_term(algebra, t, parse_assignment(assign))
    emit("eval", {"term": format_term(t), "value": value}, [str(value)], as_json)


@cli.command("linearize")
@algebra_option
@click.option("-t", "--term", "term_text", required=True)
@click.option("-x", "--variable", default="x1", show_default=True)
@json_option
def linearize_command(algebra_path: str, term_text: str, variable: str, as_json: bool) -> None:
    """Split a term into terms linear in a fresh variable, one per occurrence."""
    algebra = load_algebra(algebra_path)
    parts = [format_term(s) for s in linearize(parse_term(term_text, algebra.signature), variable)]
    emit("linearize", {"terms": parts, "occurrences": len(parts)}, parts, as_json)


# ---- congruence ---- #


@cli.command("partition")
@algebra_option
@click.option("-p", "--partition", "partition_text", required=True, help="e.g. {0,2}/{1,3}")
@click.option("-L", "--subset", "subset_text", default=None)
@json_option
def partition_command(algebra_path: str, partition_text: str, subset_text: str | None, as_json: bool) -> None:
    """Is a partition a congruence, and does it saturate L?"""
    algebra = load_algebra(algebra_path)
    p = Partition.parse(algebra.size, partition_text)
    result: dict[str, Any] = {"partition": blocks_of(p), "congruence": is_congruence(algebra, p)}
    lines = [f"{p}: {'a congruence' if result['congruence'] else 'not a congruence'}"]
    if subset_text is not None:
        L = resolve_subset(algebra, subset_text)
        result["saturates"] = p.saturates(L.members)
        lines.append(f"saturates {L}: {result['saturates']}")
    emit("partition", result, lines, as_json)


@cli.command("congruences")
@algebra_option
@json_option
@click.pass_context
def congruences_command(ctx: click.Context, algebra_path: str, as_json: bool) -> None:
    """Every congruence of a small algebra, by brute force."""
    algebra = load_algebra(algebra_path)
    found = enumerate_congruences_oracle(algebra, config_of(ctx).oracle_max_carrier)
    emit(
        "congruences",
        {"algebra": algebra.name, "congruences": [blocks_of(theta.partition) for theta in found]},
        [str(theta) for theta in found],
        as_json,
    )


@cli.command("partition-meet")
@algebra_option
@click.option("--blocks", "blocks_text", required=True, help="a partition of the carrier, e.g. {0}/{1,2,3}")
@json_option
def partition_meet_command(algebra_path: str, blocks_text: str, as_json: bool) -> None:
    """The meet of the syntactic congruences of the blocks."""
    algebra = load_algebra(algebra_path)
    theta = partition_meet_congruence(algebra, Partition.parse(algebra.size, blocks_text).blocks())
    emit(
        "partition-meet",
        {"congruence": blocks_of(theta.partition), "index": theta.index},
        [f"{theta} (index {theta.index})"],
        as_json,
    )


@cli.command("quotient")
@algebra_option
@click.option("-L", "--subset", "subset_text", default=None, help="quotient by sigma_L")
@click.option("-p", "--partition", "partition_text", default=None, help="quotient by a given congruence")
@click.option("--dot", is_flag=True, help="Emit the projection as a Graphviz digraph.")
@json_option
def quotient_command(
    algebra_path: str,
    subset_text: str | None,
    partition_text: str | None,
    dot: bool,
    as_json: bool,
) -> None:
    """The quotient algebra and its canonical projection."""
    if (subset_text is None) == (partition_text is None):
        raise click.UsageError("give exactly one of -L/--subset and -p/--partition")
    algebra = load_algebra(algebra_path)
    if partition_text is not None:
        theta = certify(algebra, Partition.parse(algebra.size, partition_text))
    else:
        theta = syntactic_congruence(algebra, resolve_subset(algebra, subset_text or "")).congruence
    q, eta = quotient(algebra, theta)
    if dot:
        click.echo(projection_dot(eta), nl=False)
        return
    emit(
        "quotient",
        {"congruence": blocks_of(theta.partition), "projection": list(eta.image), "quotient": serialize_algebra(q)},
        [f"congruence {theta}", f"projection {list(eta.image)}", serialize_algebra(q).rstrip("\n")],
        as_json,
    )


def projection_dot(eta: Homomorphism) -> str:
    lines = [f'digraph "{eta.source.name} -> {eta.target.name}" {{', "  rankdir=LR;"]
    for a in eta.source.elements:
        lines.append(f'  "a{a}" [label="{a}"];')
    for c in eta.target.elements:
        lines.append(f'  "q{c}" [label="[{c}]", shape=box];')
    for a, c in enumerate(eta.image):
        lines.append(f'  "a{a}" -> "q{c}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---- translations ---- #


@cli.command("tm")
@algebra_option
@click.option("--cap", type=int, default=None, help="Stop once the closure exceeds this many maps.")
@json_option
@click.pass_context
def tm_command(ctx: click.Context, algebra_path: str, cap: int | None, as_json: bool) -> None:
    """The translation monoid M(A)."""
    algebra = load_algebra(algebra_path)
    monoid = translation_monoid(algebra, cap if cap is not None else config_of(ctx).monoid_size_cap)
    elements = monoid.sorted_elements()
    emit(
        "tm",
        {"size": len(monoid), "elements": [list(f.image) for f in elements], "generators": len(monoid.generators)},
        [f"|M({algebra.name})| = {len(monoid)}", *(f.format() for f in elements)],
        as_json,
    )


@cli.command("polymap")
@algebra_option
@click.option("-t", "--term", "term_text", required=True)
@click.option("-x", "--variable", default="x1", show_default=True)
@click.option("--assign", multiple=True, help="name=element for the other variables")
@json_option
def polymap_command(algebra_path: str, term_text: str, variable: str, assign: tuple[str, ...], as_json: bool) -> None:
    """The self-map of a term linear in one variable, the others fixed."""
    algebra = load_algebra(algebra_path)
    t = parse_term(term_text, algebra.signature)
    f = transformation_of_linear_term(algebra, t, variable, parse_assignment(assign))
    emit("polymap", {"image": list(f.image)}, [f.format()], as_json)


# ---- syntactic ---- #


@cli.command("syn")
@algebra_option
@subset_option
@json_option
def syn_command(algebra_path: str, subset_text: str, as_json: bool) -> None:
    """The syntactic congruence sigma_L and its quotient."""
    algebra = load_algebra(algebra_path)
    result = syntactic_congruence(algebra, resolve_subset(algebra, subset_text))
    p = result.congruence.partition
    emit(
        "syn",
        {
            "algebra": algebra.name,
            "subset": result.subset.sorted(),
            "classes": blocks_of(p),
            "index": result.index,
            "eta": list(result.eta.image),
            "quotient": tables_payload(result.quotient),
            "quotient_size": result.quotient.size,
            "monoid_size": result.monoid_size,
        },
        [f"sigma_L = {p}", f"index {result.index}", f"|M(A)| = {result.monoid_size}"],
        as_json,
    )


def parse_terms(algebra: FiniteAlgebra, texts: tuple[str, ...]) -> list[Term]:
    return [parse_term(text, algebra.signature) for text in texts]


@cli.command("detset")
@algebra_option
@subset_option
@json_option
def detset_command(algebra_path: str, subset_text: str, as_json: bool) -> None:
    """A finite set of translations determining sigma_L, lifted from the quotient."""
    algebra = load_algebra(algebra_path)
    L = resolve_subset(algebra, subset_text)
    F = determining_set_from_quotient(algebra, L)
    verdict = is_S_determined(algebra, L, F)
    bound = index_bound_check(algebra, L, F)
    minimal = len(minimal_determining_subset(algebra, L, F)) == len(F)
    maps = determining_payload(F)
    emit(
        "detset",
        {
            **determining_record(F, minimal),
            "determined": verdict.determined,
            "index": bound.index,
            "bound": bound.bound,
            "bound_holds": bound.holds,
        },
        [
            f"|F| = {len(F)}, determined: {verdict.determined}",
            f"index {bound.index} <= 2^{bound.set_size} = {bound.bound}",
            *(f"{m['image']}  {m['provenance']}" for m in maps),
        ],
        as_json,
    )


@cli.command("mindetset")
@algebra_option
@subset_option
@json_option
def mindetset_command(algebra_path: str, subset_text: str, as_json: bool) -> None:
    """Shrink the lifted determining set until no map can be dropped."""
    algebra = load_algebra(algebra_path)
    L = resolve_subset(algebra, subset_text)
    F = determining_set_from_quotient(algebra, L)
    minimal = minimal_determining_subset(algebra, L, F)
    emit(
        "mindetset",
        {**determining_record(minimal, True), "from": len(F)},
        [f"{len(F)} -> {len(minimal)} maps", *(f.format() for f in minimal.functions)],
        as_json,
    )


@cli.command("termdet")
@algebra_option
@subset_option
@click.option("-t", "--term", "term_texts", multiple=True, required=True, help="repeatable")
@click.option("--x1", "x1", default="x1", show_default=True, help="the distinguished variable")
@click.option("--linearized", is_flag=True, help="Linearize the terms first.")
@json_option
def termdet_command(
    algebra_path: str,
    subset_text: str,
    term_texts: tuple[str, ...],
    x1: str,
    linearized: bool,
    as_json: bool,
) -> None:
    """Does a finite list of terms determine sigma_L?"""
    algebra = load_algebra(algebra_path)
    L = resolve_subset(algebra, subset_text)
    terms = parse_terms(algebra, term_texts)
    if linearized:
        terms = linearized_term_set(terms, x1)
    verdict = is_term_determined(algebra, L, terms, x1)
    F = determining_set_from_terms(algebra, terms, x1)
    lines = [f"determined: {verdict.determined} ({len(F)} maps from {len(terms)} terms)"]
    if verdict.witness is not None:
        lines.append(f"witness {verdict.witness} ({verdict.direction})")
    emit(
        "termdet",
        {
            "terms": [format_term(t) for t in terms],
            "determined": verdict.determined,
            "witness": list(verdict.witness) if verdict.witness else None,
            "direction": verdict.direction,
            "maps": len(F),
        },
        lines,
        as_json,
    )


@cli.command("pullback")
@algebra_option
@click.option("-b", "--target", "target_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--map", "map_text", required=True, help="images of 0..n-1, e.g. 0,1,0,1")
@subset_option
@json_option
def pullback_command(algebra_path: str, target_path: str, map_text: str, subset_text: str, as_json: bool) -> None:
    """sigma of phi^-1(L) against the pullback of sigma_L along phi."""
    source, target = load_algebra(algebra_path), load_algebra(target_path)
    phi = Homomorphism(source=source, target=target, image=parse_image(map_text))
    report = pullback_syntactic_check(phi, resolve_subset(target, subset_text))
    emit(
        "pullback",
        {
            "preimage": list(report.preimage),
            "sigma_target": blocks_of(report.sigma_target),
            "sigma_source": blocks_of(report.sigma_source),
            "isomorphism": list(report.isomorphism.image),
            "holds": report.holds,
        },
        [
            f"phi^-1(L) = {list(report.preimage)}",
            f"sigma_L on {target.name}: {report.sigma_target}",
            f"sigma on {source.name}: {report.sigma_source} = pullback",
            f"quotients isomorphic via {list(report.isomorphism.image)}",
        ],
        as_json,
    )


@cli.command("thm516")
@algebra_option
@subset_option
@json_option
@click.pass_context
def thm516_command(ctx: click.Context, algebra_path: str, subset_text: str, as_json: bool) -> None:
    """Consistency report for the determination equivalences."""
    algebra = load_algebra(algebra_path)
    report = theorem516_report(algebra, resolve_subset(algebra, subset_text))
    emit("thm516", report.model_dump(mode="json"), report_lines(report), as_json)
    if not report.consistent:
        ctx.exit(ExitCode.INVARIANT)


# ---- profinite ---- #


@cli.command("sys-validate")
@system_option
@json_option
@click.pass_context
def sys_validate_command(ctx: click.Context, system_path: str, as_json: bool) -> None:
    """Check that every connecting map is a surjective homomorphism."""
    diagnostics = validate_system(load_system(system_path))
    lines = [
        f"map {d.source_level}->{d.target_level}: "
        f"{'ok' if d.homomorphism and d.surjective else d.message}"
        for d in diagnostics.levels
    ]
    lines.append("valid" if diagnostics.valid else f"invalid: {diagnostics.first_failure}")
    emit("sys-validate", diagnostics.model_dump(mode="json"), lines, as_json)
    if not diagnostics.valid:
        ctx.exit(ExitCode.DOMAIN)


@cli.command("sys-thread")
@system_option
@click.option("-x", "--top", "top", type=int, required=True, help="an element of the top level")
@json_option
def sys_thread_command(system_path: str, top: int, as_json: bool) -> None:
    """The coherent thread through a top-level element."""
    thread = thread_from_top(load_system(system_path), top)
    emit("sys-thread", {"thread": list(thread.values)}, [str(thread)], as_json)


@cli.command("sys-separate")
@system_option
@click.option("--first", "first_text", required=True, help="thread, e.g. 0,2,2")
@click.option("--second", "second_text", required=True)
@json_option
def sys_separate_command(system_path: str, first_text: str, second_text: str, as_json: bool) -> None:
    """The least level at which two threads differ."""
    level = separate_points(load_system(system_path), Thread.parse(first_text), Thread.parse(second_text))
    emit(
        "sys-separate",
        {"level": level},
        [f"separated at level {level}" if level is not None else "equal threads"],
        as_json,
    )


@cli.command("sys-recognize")
@system_option
@click.option("-c", "--cylinder", "cylinder_text", required=True, help="<level>:<i,j,...>")
@json_option
def sys_recognize_command(system_path: str, cylinder_text: str, as_json: bool) -> None:
    """A finite quotient recognizing a cylinder at every level above it."""
    system = load_system(system_path)
    cylinder = CylinderSet.parse(cylinder_text)
    recognition = recognize_clopen(system, cylinder)
    levels = {
        str(m): {"map": list(phi.image), "preimage": sorted(cylinder_preimage(system, cylinder, m))}
        for m, phi in sorted(recognition.maps.items())
    }
    emit(
        "sys-recognize",
        {
            "cylinder": str(cylinder),
            "target_size": recognition.target.size,
            "image_subset": list(recognition.image_subset),
            "levels": levels,
        },
        [
            f"{cylinder} recognized by a {recognition.target.size}-element quotient, "
            f"image {list(recognition.image_subset)}",
            *(f"  level {m}: phi = {v['map']}, L_{m} = {v['preimage']}" for m, v in levels.items()),
        ],
        as_json,
    )


@cli.command("sys-syntactic")
@system_option
@click.option("-c", "--cylinder", "cylinder_text", required=True, help="<level>:<i,j,...>")
@click.option("-m", "--level", "level", type=int, required=True)
@json_option
def sys_syntactic_command(system_path: str, cylinder_text: str, level: int, as_json: bool) -> None:
    """The syntactic congruence of a cylinder read at level m."""
    theta = cylinder_syntactic(load_system(system_path), CylinderSet.parse(cylinder_text), level)
    emit(
        "sys-syntactic",
        {"level": level, "congruence": blocks_of(theta.partition), "index": theta.index},
        [f"level {level}: {theta} (index {theta.index})"],
        as_json,
    )


@cli.command("sys-quotient")
@system_option
@click.option("-p", "--partition", "partition_texts", multiple=True, required=True, help="one per level, bottom up")
def sys_quotient_command(system_path: str, partition_texts: tuple[str, ...]) -> None:
    """The levelwise quotient system, as a .sys document."""
    system = load_system(system_path)
    if len(partition_texts) != system.depth:
        raise click.UsageError(f"need {system.depth} partitions, got {len(partition_texts)}")
    thetas = [Partition.parse(a.size, text) for a, text in zip(system.levels, partition_texts)]
    click.echo(serialize_system(quotient_system(system, thetas)), nl=False)


@cli.command("thm41")
@system_option
@json_option
@click.pass_context
def thm41_command(ctx: click.Context, system_path: str, as_json: bool) -> None:
    """Top-level cylinders are recognized by finite quotients and points are separated."""
    report = theorem41_report(load_system(system_path))
    lines = [
        f"{report.cylinders_checked} cylinders at level {report.level} recognized "
        f"({'all subsets' if report.exhaustive else 'singletons'}), max index {report.max_index}",
        f"{report.pairs_separated} pairs separated",
        *report.failures,
    ]
    emit("thm41", {**report.model_dump(mode="json"), "holds": report.holds}, lines, as_json)
    if not report.holds:
        ctx.exit(ExitCode.INVARIANT)


@cli.command("separate")
@algebra_option
@click.argument("first", type=int)
@click.argument("second", type=int)
@json_option
def separate_command(algebra_path: str, first: int, second: int, as_json: bool) -> None:
    """A homomorphism onto a finite algebra that keeps two elements apart."""
    phi = separating_homomorphism(load_algebra(algebra_path), first, second)
    emit(
        "separate",
        {"map": list(phi.image), "target_size": phi.target.size},
        [f"phi = {list(phi.image)} onto {phi.target.size} elements: {phi(first)} != {phi(second)}"],
        as_json,
    )


def parse_exponent(text: str) -> int | Exponent:
    if text.lower() in ("omega", "inf", "w"):
        return OMEGA
    if not text.isdigit():
        raise click.BadParameter(f"expected a natural number or 'omega', got '{text}'", param_hint="-n")
    return int(text)


@cli.command("omega")
@algebra_option
@click.option("-e", "--element", type=int, required=True)
@click.option("-n", "exponent_text", default="omega", show_default=True, help="n (for a^(n!)) or omega")
@click.option("--symbol", default=None, help="the multiplication, when there are several binary symbols")
@json_option
def omega_command(algebra_path: str, element: int, exponent_text: str, symbol: str | None, as_json: bool) -> None:
    """a^(n!) or the idempotent power a^omega."""
    exponent = parse_exponent(exponent_text)
    value = omega_power(load_algebra(algebra_path), element, exponent, symbol)
    shown = "omega" if isinstance(exponent, Exponent) else f"{exponent}!"
    result = {"element": element, "exponent": exponent_text, "value": value}
    emit("omega", result, [f"{element}^({shown}) = {value}"], as_json)


@cli.command("omega-enrich")
@algebra_option
@click.option("--n-max", type=int, default=3, show_default=True)
@click.option("--symbol", default=None)
def omega_enrich_command(algebra_path: str, n_max: int, symbol: str | None) -> None:
    """The semigroup with unary pow<n> and omega operations, as an .alg document."""
    click.echo(serialize_algebra(omega_enriched_algebra(load_algebra(algebra_path), n_max, symbol)), nl=False)


@cli.command("thm61")
@algebra_option
@subset_option
@json_option
@click.pass_context
def thm61_command(ctx: click.Context, algebra_path: str, subset_text: str, as_json: bool) -> None:
    """Witness report for the clopen-recognition equivalences."""
    algebra = load_algebra(algebra_path)
    report = theorem61_report(algebra, resolve_subset(algebra, subset_text))
    emit("thm61", report.model_dump(mode="json"), report_lines(report), as_json)
    if not report.consistent:
        ctx.exit(ExitCode.INVARIANT)


# ---- languages ---- #


@cli.command("dfa-min")
@dfa_option
def dfa_min_command(dfa_path: str) -> None:
    """The minimal DFA, as a .dfa document."""
    click.echo(serialize_dfa(minimal_dfa(load_dfa(dfa_path))), nl=False)


@cli.command("dfa-synmon")
@dfa_option
@click.option("-w", "--word", "words", multiple=True, help="classify a word; repeatable")
@json_option
def dfa_synmon_command(dfa_path: str, words: tuple[str, ...], as_json: bool) -> None:
    """The syntactic monoid of the recognized language."""
    dfa = load_dfa(dfa_path)
    synmon = syntactic_monoid(dfa)
    raw, _ = transition_monoid(dfa)
    classified = []
    for w in words:
        in_monoid = monoid_accepts(synmon, w)
        if in_monoid != accepts(dfa, w):
            raise InvariantViolation(f"monoid and automaton disagree on '{w}'", component="languages")
        classified.append({"word": w, "element": synmon.element_of(w), "accepted": in_monoid})
    lines = [
        f"|M| = {synmon.size} (minimal DFA has {synmon.dfa.states} states, input DFA monoid {len(raw)})",
        f"K = {list(synmon.accepting)}",
        *(f"  {i}: {word}" for i, word in enumerate(synmon.words)),
        *(f"{c['word'] or '1'} -> {c['element']} {'accepted' if c['accepted'] else 'rejected'}" for c in classified),
    ]
    emit(
        "dfa-synmon",
        {
            "size": synmon.size,
            "accepting": list(synmon.accepting),
            "words": list(synmon.words),
            "table": list(synmon.algebra.tables["*"]),
            "identity": synmon.algebra.tables["e"][0],
            "minimal_states": synmon.dfa.states,
            "input_monoid_size": len(raw),
            "classified": classified,
        },
        lines,
        as_json,
    )


# ---- check suites ---- #


@cli.command("check")
@click.option("--suite", "suite_name", required=True, help="one of the registered suites")
@click.option("--seed", type=int, default=None, help="Override SYNALG_SEED.")
@click.option("--samples", type=int, default=None, help="Override SYNALG_SWEEP_SAMPLES.")
@click.option("--N", "--bound", "bound", type=int, default=None, help="Window bound for ex512/ex517.")
@click.option("--xmax", type=int, default=None, help="Search bound for ex512.")
@click.option(
    "--kind",
    type=click.Choice(["powers-of-two", "primes"]),
    default=None,
    help="Sparse set for ex512 (default: SYNALG_EX512_KIND).",
)
@json_option
@click.pass_context
def check_command(
    ctx: click.Context,
    suite_name: str,
    seed: int | None,
    samples: int | None,
    bound: int | None,
    xmax: int | None,
    kind: str | None,
    as_json: bool,
) -> None:
    """Run a named check suite."""
    suite_cls = SuiteRegistry().get(suite_name)
    overrides: dict[str, Any] = {"seed": seed, "sweep_samples": samples, "ex512_xmax": xmax}
    if suite_name == "ex512":
        overrides["ex512_bound"] = bound
        overrides["ex512_kind"] = kind
    elif suite_name == "ex517":
        overrides["ex517_bound"] = bound
    base = config_of(ctx)
    config = load_config(dotenv_path=ctx.obj["env_file"], log_level=base.log_level, **overrides)
    result = suite_cls(config).run()
    lines = [f"{result.suite}: {'passed' if result.passed else 'FAILED'} ({result.checked} checked)"]
    lines.extend(f"  {k}: {v}" for k, v in sorted(result.details.items()))
    lines.extend(f"  failure: {f}" for f in result.failures)
    emit("check", result.model_dump(mode="json"), lines, as_json)
    if not result.passed:
        ctx.exit(ExitCode.INVARIANT)


def main() -> None:
    cli(prog_name="synalg")


if __name__ == "__main__":
    main()
