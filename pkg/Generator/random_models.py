# Knowledge base e formule casuali, piccole, per il confronto motore/oracolo.
# I pool di tipi e relazioni sono quelli che compaiono negli assiomi, cosi' gli antecedenti
# scattano spesso anche su universi di pochi individui.

from Generator.generator import generator_settings, make_rng, pick
from KnowledgeBase.kb import KnowledgeBase
from Logic.formula import (
    And, AttrEq, AttrNeq, Exists, Forall, Iff, Implies, Is, LinkAtom, Not, Or, Tag, VarNeq,
)
from Schema.schema import CLASSIFICATION_ATTR, CLASSIFICATION_TAGS

TYPES = (
    "Testing", "DesignTesting", "PerformTesting", "PerformFunctionalDynamicTesting",
    "PerformNonFunctionalDynamicTesting", "AnalyzeTestResults", "TestingActivity",
    "TestResult", "ActualResult", "Incident", "TestSpecification", "TestCase",
    "TestBasis", "TestingDesignMethod", "SpecificationBasedMethod", "StructureBasedMethod",
    "FunctionalRequirement", "NonFunctionalRequirement", "TestableEntity", "TestItem",
    "TestRequirement", "TestGoal", "TestProject", "TestingStrategy", "TestContextEntity",
    "TestRequirementSpecification", "TestParticularSituationSpecification", "TestingRole",
)

RELATIONS = (
    "produces", "consumes", "part_of", "is_linked_to", "is_assigned_to", "refers_to", "is_based_on",
    "operationalizes", "associates", "helps_to_achieve", "is_derived_in", "requires_as_input",
    "relies_on", "involves",
)

ATTRS = ("expected_result", "value")
ATTR_VALUES = ("a", "b")


def random_kb(seed, max_individuals=None, max_links=None):
    """KB finalizzata con al piu' max_individuals individui e max_links link, tipi e link casuali."""
    settings = generator_settings()
    max_individuals = settings["MAX_INDIVIDUALS"] if max_individuals is None else max_individuals
    max_links = settings["MAX_LINKS"] if max_links is None else max_links
    rng = make_rng(seed)
    kb = KnowledgeBase()
    count = int(rng.integers(0, max_individuals + 1))
    ids = [f"i{n}" for n in range(count)]
    for id in ids:
        type_name = pick(rng, TYPES)
        attrs = {}
        for attr in ATTRS:
            if rng.random() < 0.4:
                attrs[attr] = pick(rng, ATTR_VALUES)
        if type_name in ("TestableEntity", "TestItem") and rng.random() < 0.5:
            attrs[CLASSIFICATION_ATTR] = pick(rng, CLASSIFICATION_TAGS)
        kb.add_individual(id, type_name, attrs)
    if ids:
        for _ in range(int(rng.integers(0, max_links + 1))):
            kb.add_link(pick(rng, RELATIONS), pick(rng, ids), pick(rng, ids))
    return kb.finalize()


class _FormulaMaker:

    def __init__(self, rng):
        self.rng = rng

    def atom(self, scope):
        rng = self.rng
        kind = int(rng.integers(6))
        if kind == 0:
            return Is(pick(rng, TYPES), pick(rng, scope))
        if kind == 1:
            return LinkAtom(pick(rng, RELATIONS), pick(rng, scope), pick(rng, scope))
        if kind == 2:
            return AttrEq(pick(rng, scope), pick(rng, ATTRS), pick(rng, scope), pick(rng, ATTRS))
        if kind == 3:
            return AttrNeq(pick(rng, scope), pick(rng, ATTRS), pick(rng, scope), pick(rng, ATTRS))
        if kind == 4:
            return VarNeq(pick(rng, scope), pick(rng, scope))
        return Tag(pick(rng, CLASSIFICATION_TAGS), pick(rng, scope))

    def quantified(self, depth, scope):
        fresh = tuple(f"v{len(scope) + n}" for n in range(1 + int(self.rng.integers(2))))
        node = Forall if self.rng.random() < 0.5 else Exists
        return node(fresh, self.formula(depth - 1, scope + fresh))

    def formula(self, depth, scope):
        rng = self.rng
        if depth <= 1 or rng.random() < 0.25:
            return self.atom(scope)
        kind = int(rng.integers(6))
        if kind == 0:
            return self.quantified(depth, scope)
        if kind == 1:
            return Not(self.formula(depth - 1, scope))
        if kind == 2:
            return And(tuple(self.formula(depth - 1, scope) for _ in range(2 + int(rng.integers(2)))))
        if kind == 3:
            return Or(tuple(self.formula(depth - 1, scope) for _ in range(2 + int(rng.integers(2)))))
        if kind == 4:
            return Implies(self.formula(depth - 1, scope), self.formula(depth - 1, scope))
        return Iff(self.formula(depth - 1, scope), self.formula(depth - 1, scope))


def random_formula(seed, max_depth=None):
    """Formula chiusa e ben formata, di profondita' al massimo max_depth, con un quantificatore in testa."""
    max_depth = generator_settings()["MAX_DEPTH"] if max_depth is None else max_depth
    if max_depth < 2:
        raise ValueError("a closed formula needs depth at least 2")
    return _FormulaMaker(make_rng(seed)).quantified(max_depth, ())
