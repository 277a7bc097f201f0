# DESCRIZIONE: validazione di una knowledge base contro lo schema TestTDO.
    # Tre famiglie di controlli: strutturali (E001, E002, E010, E011), cardinalita' (E020/W020, E021)
    # e assiomi (AX-A1 .. AX-A17), piu' la nota di esclusivita' W-A1X.
    # Il report e' ordinato per codice e soggetti: non dipende dall'ordine di completamento dei thread.

import re
import logging
from dataclasses import dataclass, field

from joblib import Parallel, delayed

from Axioms.axioms import builtin_axioms
from Logic.evaluator import Evaluator, evaluate_with_witness
from Schema.schema import CLASSIFICATION_ATTR, CLASSIFICATION_TAGS, format_bound
from Validator.validator_config import MODES, ValidatorConfig

logger = logging.getLogger(__name__)

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: str
    message: str
    subjects: tuple = ()
    axiom_id: str | None = None
    witness: dict | None = field(default=None, compare=False)

    def sort_key(self):
        return (natural_key(self.code), self.subjects, self.message)


@dataclass(frozen=True)
class ValidationReport:
    diagnostics: tuple
    mode: str

    @property
    def counts(self):
        errors = sum(1 for d in self.diagnostics if d.severity == ERROR)
        return {"errors": errors, "warnings": len(self.diagnostics) - errors}

    @property
    def verdict(self):
        return "fail" if self.counts["errors"] else "pass"

    def codes(self):
        return [d.code for d in self.diagnostics]


def natural_key(code):
    # AX-A2 prima di AX-A10
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", code))


def _known_type(schema, individual):
    return schema.has_term(individual.type_name)


def _conforms(schema, type_name, term):
    return schema.has_term(type_name) and schema.is_subtype(type_name, term)


# ------------------------------------------------------------------ controlli strutturali
def check_structure(kb, schema):
    diagnostics = []
    for id in kb.ids():
        individual = kb.individual(id)
        if not _known_type(schema, individual):
            diagnostics.append(Diagnostic("E001", ERROR, f"unknown type '{individual.type_name}'", (id,)))
            continue
        allowed = {a.attr_name for a in schema.attributes_of(individual.type_name, inherited=True)}
        for attr_name in sorted(individual.attrs):
            if attr_name == CLASSIFICATION_ATTR:
                diagnostics.extend(_check_classification(schema, individual))
            elif attr_name not in allowed:
                diagnostics.append(Diagnostic(
                    "E002", ERROR, f"unknown attribute '{attr_name}' for type {individual.type_name}", (id,)))

    for link in kb.sorted_links():
        if schema.is_builtin_relation(link.rel_name):
            continue
        subjects = (link.source, link.target)
        if not schema.knows_relation(link.rel_name):
            diagnostics.append(Diagnostic("E010", ERROR, f"unknown relationship '{link.rel_name}'", subjects))
            continue
        source_type = kb.individual(link.source).type_name
        target_type = kb.individual(link.target).type_name
        if not (schema.has_term(source_type) and schema.has_term(target_type)):
            continue  # gia' segnalato come E001
        accepted = any(
            schema.is_subtype(source_type, s) and schema.is_subtype(target_type, t)
            for s, t in schema.accepted_signatures(link.rel_name)
        )
        if not accepted:
            diagnostics.append(Diagnostic(
                "E011", ERROR,
                f"'{link.rel_name}' does not accept {source_type} -> {target_type}", subjects))
    return diagnostics


def _check_classification(schema, individual):
    if not schema.is_subtype(individual.type_name, "TestableEntity"):
        return [Diagnostic(
            "E002", ERROR,
            f"attribute '{CLASSIFICATION_ATTR}' is only allowed on TestableEntity, not {individual.type_name}",
            (individual.id,))]
    values = [v.strip() for v in individual.attrs[CLASSIFICATION_ATTR].split(",")]
    unknown = [v for v in values if v not in CLASSIFICATION_TAGS]
    if unknown:
        return [Diagnostic(
            "E002", ERROR,
            f"unknown classification value(s) {', '.join(repr(v) for v in unknown)}; "
            f"expected {' / '.join(CLASSIFICATION_TAGS)}",
            (individual.id,))]
    return []


# ------------------------------------------------------------------ cardinalita'
def check_cardinalities(kb, schema, mode="complete"):
    if mode not in MODES:
        raise ValueError(f"unknown mode '{mode}'")
    lower_code, lower_severity = ("E020", ERROR) if mode == "complete" else ("W020", WARNING)

    types = {id: kb.individual(id).type_name for id in kb.ids()}
    outgoing, incoming = {}, {}
    for link in kb.sorted_links():
        outgoing.setdefault((link.rel_name, link.source), []).append(link.target)
        incoming.setdefault((link.rel_name, link.target), []).append(link.source)

    diagnostics = []
    for row in schema.relationship_defs():
        bounds = f"{format_bound(row.target_min)}..{format_bound(row.target_max)}"
        for id in kb.ids():
            if not _conforms(schema, types[id], row.source):
                continue
            count = sum(1 for t in outgoing.get((row.rel_name, id), ()) if _conforms(schema, types[t], row.target))
            if count < row.target_min:
                diagnostics.append(Diagnostic(
                    lower_code, lower_severity,
                    f"{row.source} '{row.rel_name}' {row.target}: {count} link(s), expected {bounds}", (id,)))
            if row.target_max is not None and count > row.target_max:
                diagnostics.append(Diagnostic(
                    "E021", ERROR,
                    f"{row.source} '{row.rel_name}' {row.target}: {count} link(s), expected {bounds}", (id,)))

        if not row.checks_inverse:
            continue
        inverse = f"{format_bound(row.source_min)}..{format_bound(row.source_max)}"
        for id in kb.ids():
            if not _conforms(schema, types[id], row.target):
                continue
            count = sum(1 for s in incoming.get((row.rel_name, id), ()) if _conforms(schema, types[s], row.source))
            if count < row.source_min:
                diagnostics.append(Diagnostic(
                    lower_code, lower_severity,
                    f"{row.target} is the target of '{row.rel_name}' from {count} {row.source}(s), "
                    f"expected {inverse}", (id,)))
            if row.source_max is not None and count > row.source_max:
                diagnostics.append(Diagnostic(
                    "E021", ERROR,
                    f"{row.target} is the target of '{row.rel_name}' from {count} {row.source}(s), "
                    f"expected {inverse}", (id,)))
    return diagnostics


# ------------------------------------------------------------------ assiomi
def _axiom_diagnostic(axiom, result):
    subjects = tuple(dict.fromkeys(result.witness.values())) if result.witness else ()
    return Diagnostic(
        f"AX-{axiom.id}", ERROR,
        f"axiom {axiom.id} violated: {axiom.description}",
        subjects, axiom_id=axiom.id, witness=dict(result.witness or {}),
    )


def check_axioms(kb, schema, n_jobs=1, parallel_threshold=0):
    axioms = builtin_axioms()
    evaluator = Evaluator(kb, schema)
    if n_jobs > 1 and len(kb) >= parallel_threshold:
        logger.debug("evaluating %d axioms on %d threads", len(axioms), n_jobs)
        results = Parallel(n_jobs=n_jobs, prefer="threads")(
            delayed(evaluate_with_witness)(kb, schema, a.formula, evaluator=evaluator) for a in axioms
        )
    else:
        results = [evaluate_with_witness(kb, schema, a.formula, evaluator=evaluator) for a in axioms]
    return [_axiom_diagnostic(a, r) for a, r in zip(axioms, results) if not r.value]


def check_exclusivity(kb, schema):
    """W-A1X: un individuo tipizzato sia come ActualResult sia come Incident."""
    diagnostics = []
    for id in kb.ids():
        type_name = kb.individual(id).type_name
        if _conforms(schema, type_name, "ActualResult") and _conforms(schema, type_name, "Incident"):
            diagnostics.append(Diagnostic(
                "W-A1X", WARNING,
                f"{type_name} is both an Actual Result and an Incident (A1 asks for one, not both)", (id,)))
    return diagnostics


def validate(kb, schema, mode=None, config=None):
    config = config or ValidatorConfig()
    mode = mode or config.DEFAULT_MODE
    if mode not in MODES:
        raise ValueError(f"unknown mode '{mode}'")
    diagnostics = [
        *check_structure(kb, schema),
        *check_cardinalities(kb, schema, mode),
        *check_axioms(kb, schema, config.N_JOBS, config.PARALLEL_THRESHOLD),
        *check_exclusivity(kb, schema),
    ]
    diagnostics.sort(key=Diagnostic.sort_key)
    report = ValidationReport(tuple(diagnostics), mode)
    logger.info("validation %s: %d error(s), %d warning(s)", report.verdict, report.counts["errors"], report.counts["warnings"])
    return report
