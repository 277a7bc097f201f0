import pytest

from errors import UnknownAxiomError
from Axioms.axioms import A11_MAPPING, axiom, builtin_axioms, check_axiom
from KnowledgeBase.kb import KnowledgeBase
from Validator.validator import validate
from helpers import AXIOM_NUMBERS, axiom_codes, load_fixture, make_kb


def test_catalog_has_seventeen_axioms_in_order():
    axioms = builtin_axioms()
    assert len(axioms) == 17
    assert [a.id for a in axioms] == [f"A{n}" for n in AXIOM_NUMBERS]
    assert [a.number for a in axioms] == list(AXIOM_NUMBERS)


def test_descriptions_are_verbatim():
    assert axiom("A1").description.endswith("but not both at the same time.")
    assert axiom("A17").description == (
        "If a Testing process involves a Testing Role, then some of its Testing Activities involve it as well."
    )


@pytest.mark.parametrize("id", ["A0", "A18", "a1", ""])
def test_unknown_axiom(id):
    with pytest.raises(UnknownAxiomError):
        axiom(id)


def test_literal_encodings_carry_no_deviation():
    for id in ("A1", "A2", "A7", "A9", "A12", "A13", "A14"):
        assert axiom(id).deviations == ()
    assert axiom("A11").deviations == (A11_MAPPING,)


def test_only_reinterpreted_axioms_carry_a_deviation():
    with_notes = {a.id for a in builtin_axioms() if a.deviations}
    assert with_notes == {"A3", "A4", "A5", "A6", "A8", "A10", "A11", "A15", "A16", "A17"}


def test_deviation_ledger():
    assert "Negation scope" in axiom("A10").deviations[0]
    assert "forward implication" in axiom("A8").deviations[0]
    assert all("Quantifier scoping" in axiom(id).deviations[0] for id in ("A5", "A6"))
    for id in ("A15", "A16", "A17"):
        assert axiom(id).deviations[0].startswith("Consequent variable")


def test_check_axiom_on_a2_motif(schema):
    kb = make_kb(
        [("t", "Testing"), ("a1", "DesignTesting"), ("a2", "PerformTesting"), ("a3", "AnalyzeTestResults")],
        [("part_of", "a1", "t"), ("part_of", "a2", "t"), ("part_of", "a3", "t")],
    )
    assert check_axiom(kb, schema, "A2").value is True


def test_check_axiom_a7_witness(schema):
    kb = make_kb([("prt", "PerformTesting"), ("tr", "ActualResult")], [("produces", "prt", "tr")])
    result = check_axiom(kb, schema, "A7")
    assert result.value is False
    assert result.witness == {"tr": "tr", "prt": "prt"}


def test_empty_kb_satisfies_every_axiom(schema):
    kb = KnowledgeBase().finalize()
    for a in builtin_axioms():
        assert check_axiom(kb, schema, a.id).value is True


def test_a10_requires_no_testable_entity_at_all(schema):
    kb = load_fixture("A10_violation.tkb")
    assert check_axiom(kb, schema, "A10").witness == {"dt": "dt", "spbm": "spbm", "ts": "tc"}


def test_a11_witness(schema):
    result = check_axiom(load_fixture("A11_violation.tkb"), schema, "A11")
    assert result.witness == {"prt": "prt", "tc": "tc", "ar": "ar"}


def test_a5_is_a_biconditional(schema):
    # classificata come Evaluable Entity senza alcun requisito non funzionale
    kb = make_kb([("te", "TestItem", {"classification": "EvaluableEntity"})])
    assert check_axiom(kb, schema, "A5").witness == {"te": "te"}
    assert check_axiom(kb, schema, "A6").value is True


# ---------------------------------------------------------------- fixture per assioma
@pytest.mark.parametrize("n", AXIOM_NUMBERS)
def test_satisfying_fixture(schema, n):
    report = validate(load_fixture(f"A{n}_ok.tkb"), schema, "complete")
    assert axiom_codes(report) == []


@pytest.mark.parametrize("n", AXIOM_NUMBERS)
def test_violating_fixture(schema, n):
    report = validate(load_fixture(f"A{n}_violation.tkb"), schema, "complete")
    assert axiom_codes(report) == [f"AX-A{n}"]
    assert check_axiom(load_fixture(f"A{n}_violation.tkb"), schema, f"A{n}").value is False
