# DESCRIZIONE: metamodello TestTDO v1.3 (la "TBox").
    # Carica termini, tassonomia, attributi e relazioni da testtdo.yaml,
    # esegue un self-check all'avvio e offre le interrogazioni sullo schema.

import os
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import yaml

from errors import SchemaIntegrityError, UnknownTermError

logger = logging.getLogger(__name__)

FILE_PATH = os.path.join(os.path.dirname(__file__), 'testtdo.yaml')

PROVENANCES = ("TestTDO", "TFO", "SCO", "ProcCO", "ProjCO", "GCO", "NFRsTDO", "FRsTDO")
KINDS = ("own_or_extended", "reused", "imported_stub")
WILDCARD = "*"

# Tag di classificazione dinamica dei Testable Entity (assiomi A5/A6)
CLASSIFICATION_TAGS = ("DevelopableEntity", "EvaluableEntity")
CLASSIFICATION_ATTR = "classification"

# Valori attesi dai footer delle tabelle
EXPECTED_COUNTS = {"own": 44, "reused": 4, "attributes": 51, "relationships": 43}


@dataclass(frozen=True)
class TermDef:
    canonical_name: str
    display_name: str
    synonyms: tuple = ()
    definition: str = ""
    provenance: str = "TestTDO"
    kind: str = "own_or_extended"


@dataclass(frozen=True)
class TaxonomyEdge:
    child: str
    parent: str


@dataclass(frozen=True)
class AttributeDef:
    owner: str
    attr_name: str
    definition: str = ""


@dataclass(frozen=True)
class RelationshipDef:
    rel_name: str
    source: str
    target: str
    source_min: int = 0
    source_max: int | None = None   # None = illimitato
    target_min: int = 0
    target_max: int | None = None
    definition: str = ""
    note: str = ""

    @property
    def checks_inverse(self):
        return self.source_min > 0 or self.source_max is not None


@dataclass(frozen=True)
class RelationSignature:
    rel_name: str
    source: str
    target: str


def format_bound(value):
    return "*" if value is None else str(value)


class Schema:
    """Schema immutabile: registro dei termini, DAG tassonomico, attributi e relazioni."""

    def __init__(self, terms, taxonomy, attributes, relationships,
                 axiom_signatures=(), builtin_relations=("part_of", "specifies")):
        self._terms = {}
        for t in terms:
            if t.canonical_name in self._terms:
                raise SchemaIntegrityError(f"duplicate term '{t.canonical_name}'")
            self._terms[t.canonical_name] = t
        self.taxonomy = frozenset(taxonomy)
        self.attributes = tuple(attributes)
        self.relationships = tuple(relationships)
        self.axiom_signatures = tuple(axiom_signatures)
        self.builtin_relations = frozenset(builtin_relations)

        # indice per nome, sinonimo e display name (case-insensitive)
        self._aliases = {}
        for t in self._terms.values():
            for alias in (t.canonical_name, t.display_name, *t.synonyms):
                self._aliases.setdefault(alias.lower(), t.canonical_name)

        self._parents = {name: [] for name in self._terms}
        self._children = {name: [] for name in self._terms}
        self._own_attrs = {name: [] for name in self._terms}
        self._self_check()
        self._ancestors = {name: self._compute_ancestors(name) for name in self._terms}

    # ---------------------------------------------------------------- self-check
    def _self_check(self):
        for edge in sorted(self.taxonomy, key=lambda e: (e.child, e.parent)):
            for end in (edge.child, edge.parent):
                if end not in self._terms:
                    raise SchemaIntegrityError(f"taxonomy edge {edge.child} -> {edge.parent}: unknown term '{end}'")
            self._parents[edge.child].append(edge.parent)
            self._children[edge.parent].append(edge.child)

        seen = set()
        for a in self.attributes:
            if a.owner not in self._terms:
                raise SchemaIntegrityError(f"attribute '{a.attr_name}' owned by unknown term '{a.owner}'")
            if (a.owner, a.attr_name) in seen:
                raise SchemaIntegrityError(f"duplicate attribute {a.owner}.{a.attr_name}")
            seen.add((a.owner, a.attr_name))
            self._own_attrs[a.owner].append(a)

        rows = set()
        for r in (*self.relationships, *self.axiom_signatures):
            for end in (r.source, r.target):
                if end not in self._terms:
                    raise SchemaIntegrityError(f"relationship '{r.rel_name}' references unknown term '{end}'")
        for r in self.relationships:
            key = (r.rel_name, r.source, r.target)
            if key in rows:
                raise SchemaIntegrityError(f"duplicate relationship row {key}")
            rows.add(key)

        for t in self._terms.values():
            if t.provenance not in PROVENANCES or t.kind not in KINDS:
                raise SchemaIntegrityError(f"term '{t.canonical_name}' has invalid provenance/kind")
            if t.kind != "own_or_extended" and t.provenance == "TestTDO":
                raise SchemaIntegrityError(f"term '{t.canonical_name}' is {t.kind} but carries TestTDO provenance")

        # aciclicita' (DFS a tre colori)
        state = {}

        def visit(name, path):
            state[name] = "open"
            for parent in self._parents[name]:
                if state.get(parent) == "open":
                    raise SchemaIntegrityError(f"taxonomy cycle through {' -> '.join(path + [parent])}")
                if parent not in state:
                    visit(parent, path + [parent])
            state[name] = "done"

        for name in sorted(self._terms):
            if name not in state:
                visit(name, [name])

    def _compute_ancestors(self, name):
        result = {name}
        stack = [name]
        while stack:
            for parent in self._parents[stack.pop()]:
                if parent not in result:
                    result.add(parent)
                    stack.append(parent)
        return frozenset(result)

    # ---------------------------------------------------------------- termini
    @property
    def terms(self):
        return tuple(self._terms.values())

    def term(self, name):
        canonical = self._terms.get(name) or self._terms.get(self._aliases.get(str(name).lower(), ""))
        if canonical is None:
            raise UnknownTermError(name)
        return canonical

    def has_term(self, name):
        return name in self._terms

    def _require(self, name):
        if name not in self._terms:
            raise UnknownTermError(name)

    def is_subtype(self, child, ancestor):
        self._require(child)
        self._require(ancestor)
        return ancestor in self._ancestors[child]

    def ancestors(self, name):
        """Antenati riflessivi-transitivi del termine."""
        self._require(name)
        return self._ancestors[name]

    def descendants(self, name):
        self._require(name)
        return frozenset(t for t, anc in self._ancestors.items() if name in anc)

    def parents(self, name):
        self._require(name)
        return tuple(sorted(self._parents[name]))

    # ---------------------------------------------------------------- attributi
    def attributes_of(self, term, inherited=False):
        self._require(term)
        if not inherited:
            return list(self._own_attrs[term])
        # visita in ampiezza: il termine piu' derivato vince sui duplicati
        result, names = [], set()
        queue, visited = deque([term]), {term}
        while queue:
            current = queue.popleft()
            for a in self._own_attrs[current]:
                if a.attr_name not in names:
                    names.add(a.attr_name)
                    result.append(a)
            for parent in sorted(self._parents[current]):
                if parent not in visited:
                    visited.add(parent)
                    queue.append(parent)
        return result

    def attribute_names(self):
        return frozenset(a.attr_name for a in self.attributes)

    # ---------------------------------------------------------------- relazioni
    def relationship_defs(self, rel_name=WILDCARD):
        if rel_name == WILDCARD:
            return list(self.relationships)
        return [r for r in self.relationships if r.rel_name == rel_name]

    def relationship_names(self):
        return frozenset(r.rel_name for r in self.relationships)

    def is_builtin_relation(self, rel_name):
        return rel_name in self.builtin_relations

    def knows_relation(self, rel_name):
        return rel_name in self.builtin_relations or any(r.rel_name == rel_name for r in self.relationships)

    def accepted_signatures(self, rel_name):
        """Righe della tabella piu' le tipizzazioni usate dagli assiomi per quel nome."""
        rows = [(r.source, r.target) for r in self.relationships if r.rel_name == rel_name]
        rows += [(s.source, s.target) for s in self.axiom_signatures if s.rel_name == rel_name]
        return rows

    def counts(self):
        kinds = {k: 0 for k in KINDS}
        for t in self._terms.values():
            kinds[t.kind] += 1
        owned = {t.canonical_name for t in self._terms.values() if t.provenance == "TestTDO"}
        return {
            "own": kinds["own_or_extended"],
            "reused": kinds["reused"],
            "imported_stub": kinds["imported_stub"],
            "attributes": sum(1 for a in self.attributes if a.owner in owned),
            "relationships": len(self.relationships),
        }


def is_subtype(schema, child, ancestor):
    return schema.is_subtype(child, ancestor)


def attributes_of(schema, term, inherited=False):
    return schema.attributes_of(term, inherited)


def relationship_defs(schema, rel_name=WILDCARD):
    return schema.relationship_defs(rel_name)


def load_schema(path=FILE_PATH):
    # lettura del file yaml con le tabelle
    try:
        with open(path, 'r', encoding='utf-8') as file:
            data = yaml.safe_load(file)
    except (OSError, yaml.YAMLError) as e:
        raise SchemaIntegrityError(f"cannot load schema data from {path}: {e}") from e

    try:
        terms = [
            TermDef(
                canonical_name=t["name"],
                display_name=t["display"],
                synonyms=tuple(t.get("synonyms", [])),
                definition=t.get("definition", ""),
                provenance=t["provenance"],
                kind=t["kind"],
            )
            for t in data["TERMS"]
        ]
        taxonomy = [TaxonomyEdge(child, parent) for child, parents in data["TAXONOMY"].items() for parent in parents]
        attributes = [
            AttributeDef(owner, attr_name, definition)
            for owner, rows in data["ATTRIBUTES"].items()
            for attr_name, definition in rows
        ]
        relationships = [
            RelationshipDef(
                rel_name=r["name"],
                source=r["source"],
                target=r["target"],
                source_min=r.get("source_min", 0),
                source_max=r.get("source_max"),
                target_min=r["target_min"],
                target_max=r["target_max"],
                definition=r["sentence"],
                note=r.get("note", ""),
            )
            for r in data["RELATIONSHIPS"]
        ]
        signatures = [RelationSignature(s["name"], s["source"], s["target"]) for s in data.get("AXIOM_SIGNATURES", [])]
        builtin = data.get("BUILTIN_RELATIONS", ["part_of"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaIntegrityError(f"malformed schema data in {path}: {e}") from e

    return Schema(terms, taxonomy, attributes, relationships, signatures, builtin)


@lru_cache(maxsize=1)
def builtin_schema():
    schema = load_schema()
    counts = schema.counts()
    for key, expected in EXPECTED_COUNTS.items():
        if counts[key] != expected:
            raise SchemaIntegrityError(f"builtin schema has {key}={counts[key]}, expected {expected}")
    logger.debug("builtin schema loaded: %s", counts)
    return schema
