# Iniezione mirata di violazioni in una knowledge base valida.
# Per ogni tipo di perturbazione si costruisce la lista delle modifiche minime candidate
# (rimozione di un link, retype, cambio di attributo, aggiunta di un link o di un individuo),
# la si mescola con il seed e si tiene la prima che il validatore conferma.

import logging

from errors import NotApplicableError
from Axioms.axioms import axiom
from Generator.generator import make_rng
from Schema.schema import CLASSIFICATION_ATTR, builtin_schema
from Validator.validator import validate

logger = logging.getLogger(__name__)

CARDINALITY_LOWER = "cardinality_lower"
CARDINALITY_UPPER = "cardinality_upper"


# ------------------------------------------------------------------ modifiche elementari
def _remove_link(link):
    return (f"remove {link.rel_name}({link.source}, {link.target})",
            lambda kb: kb.remove_link(link.rel_name, link.source, link.target))


def _add_link(rel_name, source, target):
    return (f"add {rel_name}({source}, {target})",
            lambda kb: kb.add_link(rel_name, source, target))


def _retype(id, type_name):
    return (f"retype {id} to {type_name}", lambda kb: kb.retype(id, type_name))


def _set_attr(id, attr_name, value):
    return (f"set {id}.{attr_name} = {value!r}", lambda kb: kb.set_attr(id, attr_name, value))


def _add_with_link(new_id, type_name, rel_name, source, target):
    def edit(kb):
        kb.add_individual(new_id, type_name)
        kb.add_link(rel_name, source, target)
    return (f"add {new_id}: {type_name} with {rel_name}({source}, {target})", edit)


def _fresh_id(kb, prefix):
    n = 1
    while kb.has_individual(f"{prefix}_x{n}"):
        n += 1
    return f"{prefix}_x{n}"


class _View:
    """Accesso tipizzato in sola lettura alla kb da perturbare."""

    def __init__(self, kb, schema):
        self.kb = kb
        self.schema = schema

    def of(self, type_name):
        return sorted(self.kb.instances_of(self.schema, type_name))

    def is_a(self, id, type_name):
        t = self.kb.individual(id).type_name
        return self.schema.has_term(t) and self.schema.is_subtype(t, type_name)

    def links(self, rel_name, source_type=None, target_type=None):
        return [
            l for l in self.kb.sorted_links()
            if l.rel_name == rel_name
            and (source_type is None or self.is_a(l.source, source_type))
            and (target_type is None or self.is_a(l.target, target_type))
        ]


# ------------------------------------------------------------------ candidati per famiglia
def _lower_candidates(view):
    return [_remove_link(l) for l in view.kb.sorted_links()
            if not view.schema.is_builtin_relation(l.rel_name)]


def _upper_candidates(view):
    candidates = []
    kb, schema = view.kb, view.schema
    for row in schema.relationship_defs():
        if row.target_max is None:
            continue
        for source in view.of(row.source):
            present = {l.target for l in kb.links_from(source, row.rel_name)}
            others = [t for t in view.of(row.target) if t not in present]
            if others:
                candidates.extend(_add_link(row.rel_name, source, t) for t in others)
            else:
                new_id = _fresh_id(kb, row.target.lower())
                candidates.append(_add_with_link(new_id, row.target, row.rel_name, source, new_id))
    return candidates


def _toggle_tag(view, tag):
    candidates = []
    for te in view.of("TestableEntity"):
        raw = view.kb.individual(te).attrs.get(CLASSIFICATION_ATTR, "")
        tags = {t.strip() for t in raw.split(",") if t.strip()}
        tags ^= {tag}
        candidates.append(_set_attr(te, CLASSIFICATION_ATTR, ",".join(sorted(tags)) or None))
    return candidates


def _axiom_candidates(view, axiom_id):
    kb = view.kb

    def rm(rel_name, source_type=None, target_type=None):
        return [_remove_link(l) for l in view.links(rel_name, source_type, target_type)]

    if axiom_id == "A1":
        return [_retype(l.target, "TestResult") for l in view.links("produces", "PerformTesting", "TestResult")]
    if axiom_id == "A2":
        activities = sorted({l.source for l in view.links("part_of", "TestingActivity", "Testing")})
        return rm("part_of", "TestingActivity", "Testing") + [
            _retype(a, t) for a in activities
            for t in ("TestingActivity", "DesignTesting", "PerformTesting", "AnalyzeTestResults")
            if kb.individual(a).type_name != t
        ]
    if axiom_id in ("A3", "A4"):
        target = "PerformFunctionalDynamicTesting" if axiom_id == "A3" else "PerformNonFunctionalDynamicTesting"
        requirement = "FunctionalRequirement" if axiom_id == "A3" else "NonFunctionalRequirement"
        performers = sorted({l.source for l in view.links("consumes", "PerformTesting", "TestSpecification")})
        return [_retype(p, target) for p in performers if kb.individual(p).type_name != target] + \
            rm("is_linked_to", "TestBasis", requirement)
    if axiom_id == "A5":
        return _toggle_tag(view, "EvaluableEntity")
    if axiom_id == "A6":
        return _toggle_tag(view, "DevelopableEntity")
    if axiom_id == "A7":
        return rm("consumes", "PerformTesting", "TestSpecification")
    if axiom_id == "A8":
        return rm("helps_to_achieve", "TestingStrategy", "TestGoal")
    if axiom_id == "A9":
        return rm("operationalizes", "TestProject", "TestGoal")
    if axiom_id in ("A10", "A12"):
        method = "SpecificationBasedMethod" if axiom_id == "A10" else "StructureBasedMethod"
        designers = sorted({l.source for l in view.links("produces", "DesignTesting", "TestSpecification")})
        new_id = _fresh_id(kb, method.lower())
        added = [_add_with_link(new_id, method, "is_assigned_to", new_id, dt) for dt in designers]
        if axiom_id == "A10":
            return added + rm("consumes", "DesignTesting", "TestBasis")
        return added + rm("requires_as_input", "DesignTesting", "TestableEntity")
    if axiom_id == "A11":
        candidates = []
        for l in view.links("produces", "PerformTesting", "ActualResult"):
            current = kb.individual(l.target).attrs.get("value", "")
            candidates.append(_set_attr(l.target, "value", current + " (unexpected)"))
        return candidates
    if axiom_id == "A13":
        return rm("requires_as_input", "TestingActivity", "TestableEntity")
    if axiom_id == "A14":
        return rm("requires_as_input", "TestingActivity", "TestContextEntity")
    if axiom_id == "A15":
        return rm("consumes", "TestingActivity", "TestRequirementSpecification")
    if axiom_id == "A16":
        return rm("consumes", "TestingActivity", "TestParticularSituationSpecification")
    if axiom_id == "A17":
        return rm("involves", "TestingActivity", "TestingRole")
    return []


def _succeeds(report, kind):
    codes = set(report.codes())
    if kind == CARDINALITY_LOWER:
        return "E020" in codes
    if kind == CARDINALITY_UPPER:
        return "E021" in codes
    return {c for c in codes if c.startswith("AX-")} == {f"AX-{kind}"}


def perturb(kb, seed, kind, schema=None):
    """Copia di kb con una violazione della famiglia `kind` (cardinality_lower, cardinality_upper o A1..A17)."""
    schema = schema or builtin_schema()
    if kind not in (CARDINALITY_LOWER, CARDINALITY_UPPER):
        axiom(kind)  # UnknownAxiomError per id non validi
    if len(kb) == 0:
        raise NotApplicableError(f"'{kind}' cannot be injected into an empty knowledge base")

    view = _View(kb, schema)
    if kind == CARDINALITY_LOWER:
        candidates = _lower_candidates(view)
    elif kind == CARDINALITY_UPPER:
        candidates = _upper_candidates(view)
    else:
        candidates = _axiom_candidates(view, kind)

    rng = make_rng(seed)
    for index in rng.permutation(len(candidates)):
        description, edit = candidates[int(index)]
        edited = kb.copy()
        edit(edited)
        edited.finalize()
        if _succeeds(validate(edited, schema, "complete"), kind):
            logger.debug("perturbation %s: %s", kind, description)
            return edited
    raise NotApplicableError(f"'{kind}' cannot be injected into this knowledge base")
