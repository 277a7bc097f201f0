# DESCRIZIONE: catalogo dei 17 assiomi di TestTDO v1.3 come formule del primo ordine.
    # Ogni assioma e' un universale con guardia: forall(x: antecedente -> exists(y: conseguente)).
    # Le descrizioni sono riportate testualmente; le scelte di codifica che si allontanano dalla
    # formula letterale sono elencate in `deviations`.

import logging
from dataclasses import dataclass
from functools import lru_cache

from errors import UnknownAxiomError
from Logic.evaluator import evaluate_with_witness
from Logic.formula import (
    AttrNeq, Iff, Implies, Is, LinkAtom, Not, Tag, VarNeq, check_well_formed, conj, disj, exists, forall,
)
from Schema.schema import builtin_schema

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomDef:
    id: str
    description: str
    formula: object
    deviations: tuple = ()

    @property
    def number(self):
        return int(self.id[1:])


_PERFORM = {
    "FunctionalRequirement": "PerformFunctionalDynamicTesting",
    "NonFunctionalRequirement": "PerformNonFunctionalDynamicTesting",
}


def _rule(vars, lhs, rhs):
    return forall(vars, Implies(conj(*lhs) if len(lhs) > 1 else lhs[0], rhs))


def _based_on_requirement(act, requirement_type, requirement_var):
    # A3/A4: la specifica consumata e' prodotta da un Design Testing che consuma una Test Basis collegata al requisito
    return _rule(
        f"{act} ts",
        [Is(_PERFORM[requirement_type], act),
         Is("TestSpecification", "ts"),
         LinkAtom("consumes", act, "ts")],
        exists(f"tb tdm {requirement_var} dt", conj(
            Is("TestBasis", "tb"),
            Is("TestingDesignMethod", "tdm"),
            Is(requirement_type, requirement_var),
            Is("DesignTesting", "dt"),
            LinkAtom("is_linked_to", "tb", requirement_var),
            LinkAtom("consumes", "dt", "tb"),
            LinkAtom("is_assigned_to", "tdm", "dt"),
            LinkAtom("produces", "dt", "ts"),
        )),
    )


def _classified_by_requirement(tag, requirement_type, requirement_var):
    # A5/A6
    return forall("te", Implies(
        Is("TestableEntity", "te"),
        Iff(
            Tag(tag, "te"),
            exists(f"tr tb {requirement_var}", conj(
                Is("TestRequirement", "tr"),
                Is("TestBasis", "tb"),
                Is(requirement_type, requirement_var),
                LinkAtom("refers_to", "tr", "te"),
                LinkAtom("is_based_on", "tr", "tb"),
                LinkAtom("is_linked_to", "tb", requirement_var),
            )),
        ),
    ))


def _propagated_to_activity(var, var_type, rel_name):
    # A13-A17: quello che il processo richiede/consuma/coinvolge lo richiede anche una sua attivita'
    return _rule(
        f"p {var}",
        [Is("Testing", "p"), Is(var_type, var), LinkAtom(rel_name, "p", var)],
        exists("ta", conj(
            Is("TestingActivity", "ta"),
            LinkAtom("part_of", "ta", "p"),
            LinkAtom(rel_name, "ta", var),
        )),
    )


A11_MAPPING = ("ExpectedResult(er)/Value(val) with partOf are encoded as attribute atoms: "
               "neq(tc.expected_result, ar.value); a missing attribute makes the comparison false.")

A5_A6_SCOPING = ("Quantifier scoping: the existentials are moved inside the right-hand side of the "
                 "biconditional, guarded by TestableEntity(te).")


def _catalog():
    return [
        AxiomDef(
            "A1",
            "For any Perform Testing activity that produces a Test Result, this result is therefore an "
            "Actual Result or an Incident, but not both at the same time.",
            _rule("prt tr",
                  [Is("PerformTesting", "prt"), Is("TestResult", "tr"), LinkAtom("produces", "prt", "tr")],
                  disj(Is("ActualResult", "tr"), Is("Incident", "tr"))),
        ),
        AxiomDef(
            "A2",
            "Any Testing process has at least three different activities, namely: Design Testing, "
            "Perform Testing and Analyze Test Results.",
            forall("p", Implies(Is("Testing", "p"), exists("a1 a2 a3", conj(
                VarNeq("a1", "a2"), VarNeq("a1", "a3"), VarNeq("a2", "a3"),
                Is("DesignTesting", "a1"), Is("PerformTesting", "a2"), Is("AnalyzeTestResults", "a3"),
                LinkAtom("part_of", "a1", "p"), LinkAtom("part_of", "a2", "p"), LinkAtom("part_of", "a3", "p"),
            )))),
        ),
        AxiomDef(
            "A3",
            "For any Perform Functional Dynamic Testing activity that consumes a Test Specification, "
            "this specification is therefore based on a Functional Requirement.",
            _based_on_requirement("pfdt", "FunctionalRequirement", "fr"),
            ("Encoded literally; the existentials require a Design Testing activity that produced the consumed "
             "specification, consumed a Test Basis linked to a Functional Requirement and has a Testing Design "
             "Method assigned.",),
        ),
        AxiomDef(
            "A4",
            "For any Perform Non-Functional Dynamic Testing activity that consumes a Test Specification, "
            "this specification is therefore based on a Non-Functional Requirement.",
            _based_on_requirement("pnfdt", "NonFunctionalRequirement", "nfr"),
            ("Encoded literally; the existentials require a Design Testing activity that produced the consumed "
             "specification, consumed a Test Basis linked to a Non-Functional Requirement and has a Testing "
             "Design Method assigned.",),
        ),
        AxiomDef(
            "A5",
            "Any Testable Entity is an Evaluable Entity iff the Test Requirement that refers to this Thing "
            "is linked to a Non-Functional Requirement.",
            _classified_by_requirement("EvaluableEntity", "NonFunctionalRequirement", "nfr"),
            (A5_A6_SCOPING,
             "EvaluableEntity(te) is a classification tag: the `classification` attribute of the Testable "
             "Entity lists it, since an individual has a single declared type."),
        ),
        AxiomDef(
            "A6",
            "Any Testable Entity is a Developable Entity iff the Test Requirement that refers to this Thing "
            "is linked to a Functional Requirement.",
            _classified_by_requirement("DevelopableEntity", "FunctionalRequirement", "fr"),
            (A5_A6_SCOPING,
             "DevelopableEntity(te) is a classification tag: the `classification` attribute of the Testable "
             "Entity lists it, since an individual has a single declared type."),
        ),
        AxiomDef(
            "A7",
            "Any Test Result produced by a Perform Testing activity has at least one related Test "
            "Specification which is consumed by the same Perform Testing activity.",
            _rule("tr prt",
                  [Is("TestResult", "tr"), Is("PerformTesting", "prt"), LinkAtom("produces", "prt", "tr")],
                  exists("ts", conj(Is("TestSpecification", "ts"), LinkAtom("consumes", "prt", "ts")))),
        ),
        AxiomDef(
            "A8",
            "All Test Project operationalizes a Test Goal and associates a Testing Strategy iff this Testing "
            "Strategy helps to achieve the operationalized Test Goal.",
            _rule("tp tg ts",
                  [Is("TestProject", "tp"), Is("TestGoal", "tg"), Is("TestingStrategy", "ts"),
                   LinkAtom("operationalizes", "tp", "tg"), LinkAtom("associates", "tp", "ts")],
                  LinkAtom("helps_to_achieve", "ts", "tg")),
            ("Direction: only the forward implication is checked. The literal biconditional would force every "
             "project to associate every strategy that helps to achieve one of its goals.",),
        ),
        AxiomDef(
            "A9",
            "For all Test Requirements derived from a Test Goal, there is at least one Test Project that "
            "operationalizes this Test Goal.",
            _rule("tr tg",
                  [Is("TestRequirement", "tr"), Is("TestGoal", "tg"), LinkAtom("is_derived_in", "tg", "tr")],
                  exists("tp", conj(Is("TestProject", "tp"), LinkAtom("operationalizes", "tp", "tg")))),
        ),
        AxiomDef(
            "A10",
            "If a Specification-based Method is assigned to a Design Testing activity that produces a Test "
            "Specification, then always consumes a Test Basis which is used by the Specification-based Method "
            "without using the internal structure of the Testable Entity.",
            _rule("dt spbm ts",
                  [Is("DesignTesting", "dt"), Is("SpecificationBasedMethod", "spbm"), Is("TestSpecification", "ts"),
                   LinkAtom("is_assigned_to", "spbm", "dt"), LinkAtom("produces", "dt", "ts")],
                  exists("tb", conj(
                      Is("TestBasis", "tb"),
                      LinkAtom("consumes", "dt", "tb"),
                      forall("te", Implies(Is("TestableEntity", "te"), Not(LinkAtom("requires_as_input", "dt", "te")))),
                  ))),
            ("Negation scope: the negated requiresAsInput is universal over Testable Entities "
             "(the Design Testing activity requires none as input), not an existential over some te.",),
        ),
        AxiomDef(
            "A11",
            "If a Perform Testing activity consumes a Test Case in order to produce an Actual Result, and the "
            "value of the Actual Result doesn't match with the Test Case's expected result, then the Perform "
            "Testing activity produces an Incident that relies on this Actual Result.",
            _rule("prt tc ar",
                  [Is("PerformTesting", "prt"), Is("TestCase", "tc"), Is("ActualResult", "ar"),
                   LinkAtom("consumes", "prt", "tc"), LinkAtom("produces", "prt", "ar"),
                   AttrNeq("tc", "expected_result", "ar", "value")],
                  exists("i", conj(Is("Incident", "i"), LinkAtom("produces", "prt", "i"),
                                   LinkAtom("relies_on", "i", "ar")))),
            (A11_MAPPING,),
        ),
        AxiomDef(
            "A12",
            "If a Structure-based Method is assigned to a Design Testing activity that produces a Test "
            "Specification, then always requires as input the internal structure of the Testable Entity that "
            "is used by the Structure-based Method.",
            _rule("dt stbm ts",
                  [Is("DesignTesting", "dt"), Is("StructureBasedMethod", "stbm"), Is("TestSpecification", "ts"),
                   LinkAtom("is_assigned_to", "stbm", "dt"), LinkAtom("produces", "dt", "ts")],
                  exists("te", conj(Is("TestableEntity", "te"), LinkAtom("requires_as_input", "dt", "te")))),
        ),
        AxiomDef(
            "A13",
            "If a Testing process requires as input a Testable Entity, then some of its Testing Activities "
            "require and use it as input as well.",
            _propagated_to_activity("te", "TestableEntity", "requires_as_input"),
        ),
        AxiomDef(
            "A14",
            "If a Testing process requires as input a Test Context Entity, then some of its Testing Activities "
            "require and use it as input as well.",
            _propagated_to_activity("tce", "TestContextEntity", "requires_as_input"),
        ),
        AxiomDef(
            "A15",
            "If a Testing process consumes a Test Requirement's specification, then some of its Testing "
            "Activities consume it as well.",
            _propagated_to_activity("trs", "TestRequirementSpecification", "consumes"),
            ("Consequent variable: consumes(ta, trs) instead of consumes(p, trs), as the description says "
             "the activity consumes it.",
             "Artifact sort: SpecificationOfTestRequirement is the imported stub TestRequirementSpecification "
             "(the 'Test Requirement's specifications as Artifacts' consumed by Testing)."),
        ),
        AxiomDef(
            "A16",
            "If a Testing process consumes a Test Particular Situation's specification, then some of its "
            "Testing Activities consume it as well.",
            _propagated_to_activity("tps", "TestParticularSituationSpecification", "consumes"),
            ("Consequent variable: consumes(ta, tps) instead of consumes(p, tps), as the description says "
             "the activity consumes it.",
             "Artifact sort: SpecificationOfTestParticularSituation is the imported stub "
             "TestParticularSituationSpecification (the 'Test Particular Situation's model specifications as "
             "Artifacts' consumed by Testing)."),
        ),
        AxiomDef(
            "A17",
            "If a Testing process involves a Testing Role, then some of its Testing Activities involve it as well.",
            _propagated_to_activity("tr", "TestingRole", "involves"),
            ("Consequent variable: involves(ta, tr) instead of involves(p, tr), as the description says "
             "the activity involves it.",),
        ),
    ]


@lru_cache(maxsize=1)
def _builtin():
    schema = builtin_schema()
    catalog = tuple(_catalog())
    for a in catalog:
        check_well_formed(a.formula, schema)
    logger.debug("axiom catalog loaded: %d axioms", len(catalog))
    return catalog


def builtin_axioms():
    return list(_builtin())


def axiom(id):
    for a in _builtin():
        if a.id == id:
            return a
    raise UnknownAxiomError(id)


def check_axiom(kb, schema, id, evaluator=None):
    return evaluate_with_witness(kb, schema, axiom(id).formula, evaluator=evaluator)
