# DESCRIZIONE: interfaccia a riga di comando del validatore TestTDO.
    # Sottocomandi: validate, schema, axioms, generate, fmt.
    # Exit code: 0 = ok/pass, 1 = risultati alla soglia --fail-on, 2 = errore di uso, parsing o I/O.

import sys
import json
import logging
from functools import wraps

import click
from colorama import Fore, Style, just_fix_windows_console
from tabulate import tabulate

from errors import TdoError
from Axioms.axioms import axiom, builtin_axioms
from Generator.generator import SEED_LIMIT, GenConfig, generate_conforming, generator_settings
from Logic.formula import pretty
from Parser.tkb_parser import parse_with_diagnostics, serialize
from Schema.schema import builtin_schema, format_bound
from Validator.report import EXIT_OK, EXIT_USAGE, exit_code, render_json, render_text
from Validator.validator import validate
from Validator.validator_config import FORMATS, MODES, SEVERITIES, ValidatorConfig

logger = logging.getLogger("main")

_LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class _ColorFormatter(logging.Formatter):
    # colora solo il livello, e solo se stderr e' un terminale
    def format(self, record):
        text = super().format(record)
        if sys.stderr.isatty():
            level = record.levelname
            text = text.replace(level, _LEVEL_COLORS.get(record.levelno, "") + level + Style.RESET_ALL, 1)
        return text


def _setup_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(_ColorFormatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _fail(message):
    click.echo(message, err=True)
    sys.exit(EXIT_USAGE)


def _handle_errors(command):
    """Converte le eccezioni della libreria e gli errori di I/O in exit code 2."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except TdoError as e:
            _fail(f"error: {e}")
        except OSError as e:
            _fail(f"error: {e.strerror or e}: {e.filename or ''}".rstrip(": "))
    return wrapper


def _read(path):
    try:
        with open(path, 'r', encoding='utf-8') as file:
            return file.read()
    except UnicodeDecodeError as e:
        _fail(f"error: {path}: invalid UTF-8 at byte {e.start}")


def _parse_file(path, text=None):
    kb, diagnostics = parse_with_diagnostics(_read(path) if text is None else text)
    if diagnostics:
        for d in diagnostics:
            click.echo(f"{path}:{d}", err=True)
        sys.exit(EXIT_USAGE)
    return kb


def _dump(data):
    return json.dumps(data, indent=ValidatorConfig().JSON_INDENT, ensure_ascii=False)


@click.group()
@click.option("--verbose", is_flag=True, help="Log di debug su stderr.")
def cli(verbose):
    """Validatore di modelli TestTDO v1.3 (.tkb)."""
    just_fix_windows_console()
    _setup_logging(verbose)


# ------------------------------------------------------------------ validate
@cli.command("validate")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--mode", type=click.Choice(MODES), default=None, help="draft | complete (default complete).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="text | json (default text).")
@click.option("--fail-on", type=click.Choice(SEVERITIES), default=None, help="warning | error (default error).")
@_handle_errors
def cmd_validate(file, mode, fmt, fail_on):
    config = ValidatorConfig()
    kb = _parse_file(file)
    report = validate(kb, builtin_schema(), mode or config.DEFAULT_MODE, config)
    if (fmt or config.DEFAULT_FORMAT) == "json":
        click.echo(render_json(report, config.JSON_INDENT), nl=False)
    else:
        click.echo(render_text(report, color=sys.stdout.isatty()), nl=False)
    sys.exit(exit_code(report, fail_on or config.FAIL_ON))


# ------------------------------------------------------------------ schema
@cli.group("schema")
def cmd_schema():
    """Consultazione dello schema builtin."""


def _term_option(command):
    return click.option("--term", default=None, help="Nome, display name o sinonimo del termine.")(command)


def _format_option(command):
    return click.option("--format", "fmt", type=click.Choice(FORMATS), default="text")(command)


@cmd_schema.command("terms")
@_term_option
@_format_option
@_handle_errors
def schema_terms(term, fmt):
    schema = builtin_schema()
    terms = [schema.term(term)] if term else sorted(schema.terms, key=lambda t: t.canonical_name)
    if fmt == "json":
        click.echo(_dump([
            {"canonical_name": t.canonical_name, "display_name": t.display_name, "synonyms": list(t.synonyms),
             "definition": t.definition, "provenance": t.provenance, "kind": t.kind}
            for t in terms
        ]))
        return
    rows = [(t.canonical_name, t.display_name, ", ".join(t.synonyms), t.provenance, t.kind) for t in terms]
    click.echo(tabulate(rows, headers=["term", "display name", "synonyms", "provenance", "kind"]))


@cmd_schema.command("attrs")
@_term_option
@click.option("--inherited", is_flag=True, help="Include gli attributi ereditati dagli antenati.")
@_format_option
@_handle_errors
def schema_attrs(term, inherited, fmt):
    schema = builtin_schema()
    if term:
        attrs = schema.attributes_of(schema.term(term).canonical_name, inherited=inherited)
    else:
        attrs = list(schema.attributes)
    if fmt == "json":
        click.echo(_dump([{"owner": a.owner, "attr_name": a.attr_name, "definition": a.definition} for a in attrs]))
        return
    click.echo(tabulate([(a.owner, a.attr_name, a.definition) for a in attrs],
                        headers=["owner", "attribute", "definition"]))


@cmd_schema.command("rels")
@_term_option
@_format_option
@_handle_errors
def schema_rels(term, fmt):
    schema = builtin_schema()
    rows = schema.relationship_defs()
    if term:
        name = schema.term(term).canonical_name
        rows = [r for r in rows if name in (r.source, r.target)]
    if fmt == "json":
        click.echo(_dump([
            {"rel_name": r.rel_name, "source": r.source, "target": r.target,
             "source_min": r.source_min, "source_max": r.source_max,
             "target_min": r.target_min, "target_max": r.target_max, "definition": r.definition}
            for r in rows
        ]))
        return
    click.echo(tabulate(
        [(r.rel_name, r.source, r.target,
          f"{format_bound(r.target_min)}..{format_bound(r.target_max)}",
          f"{format_bound(r.source_min)}..{format_bound(r.source_max)}") for r in rows],
        headers=["relationship", "source", "target", "targets", "sources"]))


@cmd_schema.command("counts")
@_format_option
@_handle_errors
def schema_counts(fmt):
    counts = dict(builtin_schema().counts())
    counts["axioms"] = len(builtin_axioms())
    if fmt == "json":
        click.echo(_dump(counts))
        return
    keys = ("own", "reused", "attributes", "relationships", "axioms")
    click.echo(" ".join(f"{k}={counts[k]}" for k in keys))


# ------------------------------------------------------------------ axioms
@cli.group("axioms")
def cmd_axioms():
    """Catalogo degli assiomi A1-A17."""


@cmd_axioms.command("list")
@_format_option
def axioms_list(fmt):
    axioms = builtin_axioms()
    if fmt == "json":
        click.echo(_dump([{"id": a.id, "description": a.description} for a in axioms]))
        return
    for a in axioms:
        click.echo(f"{a.id}: {a.description}")


@cmd_axioms.command("show")
@click.argument("axiom_id")
@_format_option
@_handle_errors
def axioms_show(axiom_id, fmt):
    a = axiom(axiom_id)
    if fmt == "json":
        click.echo(_dump({"id": a.id, "description": a.description,
                          "deviations": list(a.deviations), "formula": pretty(a.formula)}))
        return
    click.echo(f"{a.id}: {a.description}")
    click.echo("deviations:")
    for d in a.deviations or ("none",):
        click.echo(f"  - {d}")
    click.echo(f"formula: {pretty(a.formula)}")


# ------------------------------------------------------------------ generate / fmt
@cli.command("generate")
@click.option("--seed", type=click.IntRange(0, SEED_LIMIT - 1), default=0, show_default=True)
@click.option("--size", type=click.IntRange(0, generator_settings()["MAX_SIZE"]), default=0, show_default=True)
@click.option("-o", "output", type=click.Path(dir_okay=False), default=None, help="File .tkb di uscita (default stdout).")
@_handle_errors
def cmd_generate(seed, size, output):
    text = serialize(generate_conforming(GenConfig(seed=seed, size=size)))
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, 'w', encoding='utf-8', newline='\n') as file:
        file.write(text)
    logger.info("written %s", output)


@cli.command("fmt")
@click.argument("file", type=click.Path(dir_okay=False))
@_handle_errors
def cmd_fmt(file):
    original = _read(file)
    text = serialize(_parse_file(file, original))
    if text != original:
        with open(file, 'w', encoding='utf-8', newline='\n') as out:
            out.write(text)
        logger.info("reformatted %s", file)
    sys.exit(EXIT_OK)


# Inizio programma
if __name__ == '__main__':
    cli()
