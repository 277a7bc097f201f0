# Modello delle istanze (la "ABox"): individui tipizzati con attributi + link binari diretti.
# Fase di costruzione a singolo scrittore; dopo finalize() la knowledge base e' immutabile.

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from errors import DanglingReferenceError, DuplicateIndividualError, KnowledgeBaseFrozenError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Individual:
    id: str
    type_name: str
    attrs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        # attributi in sola lettura
        object.__setattr__(self, "attrs", MappingProxyType(dict(self.attrs)))

    def __hash__(self):
        return hash((self.id, self.type_name, tuple(sorted(self.attrs.items()))))


@dataclass(frozen=True, order=True)
class Link:
    rel_name: str
    source: str
    target: str


class KnowledgeBase:

    def __init__(self):
        self._individuals = {}
        self._links = set()
        self._finalized = False

    # costruzione ---------------------------------------------------------------
    def _check_writable(self):
        if self._finalized:
            raise KnowledgeBaseFrozenError("knowledge base is finalized and can no longer be modified")

    def add_individual(self, id, type_name, attrs=None):
        self._check_writable()
        if not id:
            raise ValueError("individual id must be non-empty")
        if id in self._individuals:
            raise DuplicateIndividualError(id)
        self._individuals[id] = Individual(id, type_name, dict(attrs or {}))
        return self

    def add_link(self, rel_name, source_id, target_id):
        self._check_writable()
        self._links.add(Link(rel_name, source_id, target_id))  # semantica di insieme
        return self

    def remove_link(self, rel_name, source_id, target_id):
        self._check_writable()
        self._links.discard(Link(rel_name, source_id, target_id))
        return self

    def remove_individual(self, id):
        """Rimuove l'individuo e tutti i link che lo toccano."""
        self._check_writable()
        self._individuals.pop(id, None)
        self._links = {l for l in self._links if id not in (l.source, l.target)}
        return self

    def retype(self, id, type_name):
        self._check_writable()
        old = self._individuals[id]
        self._individuals[id] = Individual(id, type_name, dict(old.attrs))
        return self

    def set_attr(self, id, attr_name, value):
        self._check_writable()
        old = self._individuals[id]
        attrs = dict(old.attrs)
        if value is None:
            attrs.pop(attr_name, None)
        else:
            attrs[attr_name] = value
        self._individuals[id] = Individual(id, old.type_name, attrs)
        return self

    def finalize(self):
        missing = {
            end
            for link in self._links
            for end in (link.source, link.target)
            if end not in self._individuals
        }
        if missing:
            raise DanglingReferenceError(missing)
        self._finalized = True
        logger.debug("knowledge base finalized: %d individuals, %d links", len(self._individuals), len(self._links))
        return self

    def copy(self):
        """Copia modificabile (non finalizzata) della knowledge base."""
        other = KnowledgeBase()
        other._individuals = dict(self._individuals)
        other._links = set(self._links)
        return other

    # accesso -------------------------------------------------------------------
    @property
    def finalized(self):
        return self._finalized

    @property
    def individuals(self):
        return dict(self._individuals)

    @property
    def links(self):
        return frozenset(self._links)

    def ids(self):
        return sorted(self._individuals)

    def individual(self, id):
        return self._individuals[id]

    def has_individual(self, id):
        return id in self._individuals

    def has_link(self, rel_name, source_id, target_id):
        return Link(rel_name, source_id, target_id) in self._links

    def sorted_links(self):
        return sorted(self._links)

    def links_from(self, source_id, rel_name=None):
        return sorted(l for l in self._links if l.source == source_id and (rel_name is None or l.rel_name == rel_name))

    def instances_of(self, schema, type_name, transitive=True):
        schema.ancestors(type_name)  # UnknownTermError per tipi non registrati
        if not transitive:
            return {i.id for i in self._individuals.values() if i.type_name == type_name}
        return {
            i.id
            for i in self._individuals.values()
            if schema.has_term(i.type_name) and schema.is_subtype(i.type_name, type_name)
        }

    def __len__(self):
        return len(self._individuals)

    def __eq__(self, other):
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self._individuals == other._individuals and self._links == other._links

    def __repr__(self):
        return f"KnowledgeBase(individuals={len(self._individuals)}, links={len(self._links)})"


def add_individual(kb, id, type_name, attrs=None):
    return kb.add_individual(id, type_name, attrs)


def add_link(kb, rel_name, source_id, target_id):
    return kb.add_link(rel_name, source_id, target_id)


def instances_of(kb, schema, type_name, transitive=True):
    return kb.instances_of(schema, type_name, transitive)


def finalize(kb):
    return kb.finalize()
