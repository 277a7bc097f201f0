import os

import pytest

from errors import ConfigError
from Axioms.axioms import builtin_axioms
from KnowledgeBase.kb import KnowledgeBase
from Logic.naive import naive_evaluate
from Validator.report import EXIT_FINDINGS, EXIT_OK, exit_code, render_json, render_text, report_to_dict
from Validator.validator import (
    Diagnostic, check_cardinalities, check_exclusivity, check_structure, validate,
)
from Validator.validator_config import ValidatorConfig
from Schema.schema import RelationshipDef, Schema, TaxonomyEdge, TermDef
from helpers import AXIOM_NUMBERS, load_fixture, make_kb

FIXTURES = [f"A{n}_{kind}.tkb" for n in AXIOM_NUMBERS for kind in ("ok", "violation")]


def codes_for(diagnostics, subject=None):
    return [d.code for d in diagnostics if subject is None or subject in d.subjects]


def test_empty_kb_passes(schema):
    report = validate(KnowledgeBase().finalize(), schema, "complete")
    assert report.verdict == "pass"
    assert report.diagnostics == ()


def test_lonely_project_complete_mode(schema):
    report = validate(make_kb([("tp", "TestProject")]), schema, "complete")
    messages = [d.message for d in report.diagnostics if d.code == "E020"]
    for rel_name, target in [("operationalizes", "TestGoal"), ("associates", "TestingStrategy"),
                             ("defines", "TestParticularSituation"), ("is_managed_by", "TestingManagement")]:
        assert any(f"TestProject '{rel_name}' {target}: 0 link(s)" in m for m in messages)
    assert "TestProject 'is_managed_by' TestingManagement: 0 link(s), expected 1..1" in messages
    assert report.verdict == "fail"


def test_lonely_project_draft_mode(schema):
    report = validate(make_kb([("tp", "TestProject")]), schema, "draft")
    assert set(report.codes()) == {"W020"}
    assert len(report.diagnostics) == 4
    assert report.verdict == "pass"


def test_a1_violation_with_witness(schema):
    kb = make_kb([("prt", "PerformTesting"), ("tr", "TestResult")], [("produces", "prt", "tr")])
    report = validate(kb, schema, "complete")
    a1 = [d for d in report.diagnostics if d.code == "AX-A1"]
    assert len(a1) == 1
    assert a1[0].witness == {"prt": "prt", "tr": "tr"}
    assert a1[0].subjects == ("prt", "tr")
    assert a1[0].axiom_id == "A1"
    assert a1[0].message.startswith("axiom A1 violated: For any Perform Testing activity")


# ---------------------------------------------------------------- strutturali
def test_unknown_type_and_attribute(schema):
    kb = make_kb([("x", "Foo"), ("tc", "TestCase", {"colour": "red", "input": "i", "name": "n"})])
    diagnostics = check_structure(kb, schema)
    assert codes_for(diagnostics, "x") == ["E001"]
    assert [d.message for d in diagnostics if "tc" in d.subjects] == ["unknown attribute 'colour' for type TestCase"]


def test_classification_attribute(schema):
    kb = make_kb([
        ("te", "TestItem", {"classification": "EvaluableEntity,DevelopableEntity"}),
        ("bad", "TestItem", {"classification": "Shiny"}),
        ("tc", "TestCase", {"classification": "EvaluableEntity"}),
    ])
    diagnostics = check_structure(kb, schema)
    assert codes_for(diagnostics, "te") == []
    assert codes_for(diagnostics, "bad") == ["E002"]
    assert codes_for(diagnostics, "tc") == ["E002"]


def test_unknown_relationship_and_signature(schema):
    kb = make_kb(
        [("tc", "TestCase"), ("te", "TestItem"), ("x", "Foo"), ("t", "Testing")],
        [("teleports", "tc", "te"), ("produces", "te", "tc"), ("verifies_validates", "x", "te"),
         ("part_of", "te", "tc"), ("verifies_validates", "tc", "te")],
    )
    diagnostics = check_structure(kb, schema)
    assert [(d.code, d.subjects) for d in diagnostics if d.code in ("E010", "E011")] == [
        ("E011", ("te", "tc")),
        ("E010", ("tc", "te")),
    ]


def test_axiom_signatures_are_conformant(schema):
    kb = load_fixture("A17_ok.tkb")
    assert check_structure(kb, schema) == []


# ---------------------------------------------------------------- cardinalita'
def test_two_plays_links_are_within_bounds(schema):
    kb = make_kb([("ag", "TestingHumanAgent"), ("r1", "TestingRole"), ("r2", "TestingRole")],
                 [("plays", "ag", "r1"), ("plays", "ag", "r2")])
    assert [d for d in check_cardinalities(kb, schema) if "plays" in d.message] == []


def test_second_adopts_link_exceeds_upper_bound(schema):
    kb = make_kb([("tm", "TestingManagement"), ("l1", "TestingLifeCycle"), ("l2", "TestingLifeCycle")],
                 [("adopts", "tm", "l1"), ("adopts", "tm", "l2")])
    e021 = [d for d in check_cardinalities(kb, schema) if d.code == "E021"]
    assert [d.message for d in e021] == ["TestingManagement 'adopts' TestingLifeCycle: 2 link(s), expected 1..1"]
    assert e021[0].subjects == ("tm",)


def test_role_without_agents_violates_inverse_bound(schema):
    kb = make_kb([("r", "TestingRole")])
    messages = [d.message for d in check_cardinalities(kb, schema, "complete") if d.code == "E020"]
    assert "TestingRole is the target of 'plays' from 0 TestingAgent(s), expected 1..*" in messages


def test_links_to_subtypes_count(schema):
    # produces(PerformTesting, TestResult) 1..*: un Incident conta come Test Result
    kb = make_kb([("pt", "PerformStaticTesting"), ("i", "Incident")], [("produces", "pt", "i")])
    assert not any("'produces' TestResult" in d.message for d in check_cardinalities(kb, schema))


def test_unknown_mode(schema):
    with pytest.raises(ValueError):
        validate(KnowledgeBase().finalize(), schema, "strict")


# ---------------------------------------------------------------- W-A1X
def test_exclusivity_warning_on_a_custom_schema():
    terms = [TermDef(n, n) for n in ("TestResult", "ActualResult", "Incident", "Both")]
    taxonomy = [TaxonomyEdge("ActualResult", "TestResult"), TaxonomyEdge("Incident", "TestResult"),
                TaxonomyEdge("Both", "ActualResult"), TaxonomyEdge("Both", "Incident")]
    schema = Schema(terms, taxonomy, [], [RelationshipDef("produces", "TestResult", "TestResult")])
    diagnostics = check_exclusivity(make_kb([("x", "Both"), ("y", "Incident")]), schema)
    assert [(d.code, d.severity, d.subjects) for d in diagnostics] == [("W-A1X", "warning", ("x",))]


def test_builtin_taxonomy_never_triggers_exclusivity(schema, motif):
    assert check_exclusivity(motif, schema) == []


# ---------------------------------------------------------------- proprieta'
def test_motif_passes(schema, motif):
    report = validate(motif, schema, "complete")
    assert report.diagnostics == ()


@pytest.mark.parametrize("name", FIXTURES)
def test_mode_monotonicity(schema, name):
    kb = load_fixture(name)
    draft = validate(kb, schema, "draft")
    complete = validate(kb, schema, "complete")
    promoted = sorted(
        (Diagnostic("E020", "error", d.message, d.subjects, d.axiom_id, d.witness) if d.code == "W020" else d
         for d in draft.diagnostics),
        key=Diagnostic.sort_key,
    )
    assert list(complete.diagnostics) == promoted


@pytest.mark.parametrize("name", FIXTURES)
def test_axiom_diagnostics_agree_with_oracle(schema, name):
    kb = load_fixture(name)
    report = validate(kb, schema, "complete")
    expected = [f"AX-{a.id}" for a in builtin_axioms() if not naive_evaluate(kb, schema, a.formula)]
    assert sorted(c for c in report.codes() if c.startswith("AX-")) == sorted(expected)


def test_report_is_deterministic(schema):
    kb = load_fixture("A11_violation.tkb")
    first = validate(kb, schema, "complete")
    second = validate(load_fixture("A11_violation.tkb"), schema, "complete")
    assert render_text(first) == render_text(second)
    assert render_json(first) == render_json(second)


def test_parallel_and_sequential_reports_match(schema, tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text(
        "VALIDATION:\n  DEFAULT_MODE: complete\n  N_JOBS: 4\n  PARALLEL_THRESHOLD: 0\n"
        "REPORT:\n  DEFAULT_FORMAT: text\n  FAIL_ON: error\n  JSON_INDENT: 4\n",
        encoding="utf-8",
    )
    kb = load_fixture("A2_violation.tkb")
    parallel = validate(kb, schema, config=ValidatorConfig(str(config_file)))
    sequential = validate(kb, schema, "complete")
    assert render_json(parallel) == render_json(sequential)


def test_malformed_config(tmp_path):
    bad = tmp_path / "config.yaml"
    bad.write_text("VALIDATION: {}\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        ValidatorConfig(str(bad))
    with pytest.raises(ConfigError):
        ValidatorConfig(os.path.join(str(tmp_path), "missing.yaml"))


# ---------------------------------------------------------------- report
def test_render_text(schema):
    report = validate(load_fixture("A7_violation.tkb"), schema, "complete")
    lines = render_text(report).splitlines()
    assert lines[-1] == (
        f"verdict: fail ({report.counts['errors']} error(s), {report.counts['warnings']} warning(s), mode complete)"
    )
    assert any(line.startswith("AX-A7 error ar,prt: axiom A7 violated:") for line in lines)


def test_render_json_layout(schema):
    report = validate(load_fixture("A7_violation.tkb"), schema, "draft")
    data = report_to_dict(report)
    assert list(data) == ["verdict", "mode", "counts", "diagnostics"]
    a7 = next(d for d in data["diagnostics"] if d["code"] == "AX-A7")
    assert a7["witness"] == {"tr": "ar", "prt": "prt"}
    assert "witness" not in next(d for d in data["diagnostics"] if d["code"] == "W020")
    assert render_json(report).endswith("}\n")


def test_exit_code_thresholds(schema):
    draft = validate(make_kb([("tp", "TestProject")]), schema, "draft")
    assert exit_code(draft, "error") == EXIT_OK
    assert exit_code(draft, "warning") == EXIT_FINDINGS
    assert exit_code(validate(KnowledgeBase().finalize(), schema), "warning") == EXIT_OK
