import numpy as np
import pytest

from errors import TkbParseError
from Generator.generator import GenConfig, generate_conforming
from KnowledgeBase.kb import KnowledgeBase
from Parser.tkb_parser import parse, parse_with_diagnostics, serialize

A2_MOTIF = """
# un processo con le sue tre attivita'
individual t : Testing
individual a1 : DesignTesting
individual a2 : PerformTesting
individual a3 : AnalyzeTestResults
link part_of(a1, t)
link part_of(a2, t)
link part_of(a3, t)
"""


def messages(text):
    kb, diagnostics = parse_with_diagnostics(text)
    assert kb is None
    return [(d.line, d.column, d.message) for d in diagnostics]


def test_parse_empty():
    kb = parse("")
    assert len(kb) == 0 and kb.links == frozenset()


def test_parse_a2_motif():
    kb = parse(A2_MOTIF)
    assert len(kb) == 4
    assert len(kb.links) == 3
    assert kb.has_link("part_of", "a3", "t")


def test_attributes_and_escapes():
    kb = parse('individual tc1 : TestCase { expected_result = "say \\"hi\\"\\n" input = "a\\\\b" }')
    assert kb.individual("tc1").attrs == {"expected_result": 'say "hi"\n', "input": "a\\b"}


def test_carriage_return_in_values_survives_serialization():
    kb = KnowledgeBase().add_individual("ar", "ActualResult", {"value": "line1\r\nline2\rend"}).finalize()
    text = serialize(kb)
    assert "\r" not in text
    assert '"line1\\r\\nline2\\rend"' in text
    assert parse(text) == kb


def test_links_may_precede_declarations():
    kb = parse("link produces(prt1, tr1)\nindividual prt1 : PerformTesting\nindividual tr1 : TestResult\n")
    assert kb.has_link("produces", "prt1", "tr1")


def test_crlf_is_normalized():
    assert parse(A2_MOTIF.replace("\n", "\r\n")) == parse(A2_MOTIF)


def test_unknown_types_and_relations_parse():
    kb = parse("individual x : Foo\nlink teleports(x, x)")
    assert kb.individual("x").type_name == "Foo"


def test_unresolved_identifier():
    text = 'individual tc1 : TestCase { expected_result = "200 OK" }\nlink produces(prt1, tc1)'
    assert messages(text) == [(2, 15, "unresolved identifier 'prt1'")]


def test_missing_colon():
    assert messages("individual tc TestCase") == [(1, 15, "expected ':' but found 'TestCase'")]


def test_invalid_type_name():
    assert messages("individual a : testCase") == [(1, 16, "invalid CamelCase type name 'testCase'")]


def test_unknown_keyword():
    assert messages("individal a : TestCase") == [(1, 1, "unknown statement keyword 'individal'")]


def test_duplicate_individual():
    assert messages("individual a : TestCase\nindividual a : TestSuite") == [(2, 12, "duplicate individual id 'a'")]


def test_duplicate_attribute():
    text = 'individual a : TestCase {\n    input = "x"\n    input = "y"\n}'
    assert messages(text) == [(3, 5, "duplicate attribute 'input' for 'a'")]


def test_unterminated_string():
    diagnostics = messages('individual a : TestCase { input = "abc\n}')
    assert (1, 35, "unterminated string literal") in diagnostics


def test_errors_are_collected_across_statements():
    text = "individual a TestCase\nindividual b : TestCase\nlink produces(b c)\nindividual c : TestCase\n"
    assert messages(text) == [
        (1, 14, "expected ':' but found 'TestCase'"),
        (3, 17, "expected ',' but found 'c'"),
    ]


def test_unexpected_end_of_input():
    assert messages("link produces(a,") == [(1, 17, "expected individual id but found end of input")]


def test_parse_raises_with_all_diagnostics():
    with pytest.raises(TkbParseError) as info:
        parse("individal a : TestCase\nlink x(y, z)")
    assert len(info.value.diagnostics) == 3
    assert "1:1: unknown statement keyword" in str(info.value)


# ---------------------------------------------------------------- serializzazione
def test_serialize_empty():
    assert serialize(KnowledgeBase().finalize()) == ""


def test_serialize_canonical_form():
    kb = parse('link part_of(a, t)\nindividual t : Testing\nindividual a : DesignTesting { name = "D \\"1\\"" }')
    assert serialize(kb) == (
        "individual a : DesignTesting {\n"
        '    name = "D \\"1\\""\n'
        "}\n"
        "individual t : Testing\n"
        "\n"
        "link part_of(a, t)\n"
    )


def _shuffled_copy(kb, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    ids = kb.ids()
    links = kb.sorted_links()
    other = KnowledgeBase()
    for index in rng.permutation(len(ids)):
        individual = kb.individual(ids[int(index)])
        other.add_individual(individual.id, individual.type_name, individual.attrs)
    for index in rng.permutation(len(links)):
        link = links[int(index)]
        other.add_link(link.rel_name, link.source, link.target)
    return other.finalize()


@pytest.mark.parametrize("seed", range(500))
def test_round_trip_over_generated_models(seed):
    kb = generate_conforming(GenConfig(seed=seed, size=(seed % 3) * 30))
    text = serialize(kb)
    again = parse(text)
    assert again == kb
    assert serialize(again) == text
    assert serialize(_shuffled_copy(kb, seed)) == text
