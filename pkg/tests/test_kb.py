import pytest

from errors import DanglingReferenceError, DuplicateIndividualError, KnowledgeBaseFrozenError, UnknownTermError
from KnowledgeBase.kb import KnowledgeBase, add_individual, add_link, finalize, instances_of


def test_add_individual():
    kb = add_individual(KnowledgeBase(), "tc1", "TestCase", {"input": "click submit"})
    assert kb.individual("tc1").type_name == "TestCase"
    assert kb.individual("tc1").attrs == {"input": "click submit"}


def test_duplicate_id():
    kb = KnowledgeBase().add_individual("tc1", "TestCase")
    with pytest.raises(DuplicateIndividualError):
        kb.add_individual("tc1", "TestSuite")


def test_unknown_type_is_accepted_at_build_time():
    kb = KnowledgeBase().add_individual("x", "Foo").finalize()
    assert kb.individual("x").type_name == "Foo"


def test_links_have_set_semantics():
    kb = KnowledgeBase().add_individual("prt1", "PerformTesting").add_individual("tr1", "TestResult")
    add_link(kb, "produces", "prt1", "tr1")
    add_link(kb, "produces", "prt1", "tr1")
    finalize(kb)
    assert kb.has_link("produces", "prt1", "tr1")
    assert len(kb.links) == 1


def test_dangling_reference_names_every_missing_id():
    kb = KnowledgeBase().add_individual("a", "TestCase")
    kb.add_link("produces", "ghost", "a").add_link("produces", "a", "phantom")
    with pytest.raises(DanglingReferenceError) as info:
        kb.finalize()
    assert info.value.missing_ids == ["ghost", "phantom"]
    assert "'ghost'" in str(info.value)


def test_finalized_kb_is_frozen():
    kb = KnowledgeBase().add_individual("a", "TestCase").finalize()
    with pytest.raises(KnowledgeBaseFrozenError):
        kb.add_individual("b", "TestCase")
    with pytest.raises(KnowledgeBaseFrozenError):
        kb.add_link("produces", "a", "a")


def test_instances_of(schema):
    kb = KnowledgeBase().add_individual("tc1", "TestCase").finalize()
    assert instances_of(kb, schema, "TestSpecification") == {"tc1"}
    assert instances_of(kb, schema, "TestSpecification", transitive=False) == set()
    assert instances_of(KnowledgeBase().finalize(), schema, "TestCase") == set()


def test_instances_of_is_monotone_along_the_taxonomy(schema, motif):
    for term in schema.terms:
        for parent in schema.parents(term.canonical_name):
            assert motif.instances_of(schema, term.canonical_name) <= motif.instances_of(schema, parent)


def test_instances_of_ignores_unknown_types(schema):
    kb = KnowledgeBase().add_individual("x", "Foo").add_individual("t", "Testing").finalize()
    assert kb.instances_of(schema, "WorkProcess") == {"t"}
    with pytest.raises(UnknownTermError):
        kb.instances_of(schema, "Foo")


def test_copy_is_writable_and_independent(motif):
    other = motif.copy()
    assert other == motif and not other.finalized
    other.add_individual("extra", "TestCase")
    assert len(other) == len(motif) + 1
    assert not motif.has_individual("extra")


def test_remove_individual_drops_its_links():
    kb = KnowledgeBase().add_individual("a", "TestCase").add_individual("b", "TestItem")
    kb.add_link("verifies_validates", "a", "b")
    kb.remove_individual("b")
    assert kb.links == frozenset()
    kb.finalize()


def test_individual_attributes_are_read_only():
    attrs = {"input": "x"}
    kb = KnowledgeBase().add_individual("tc", "TestCase", attrs).finalize()
    with pytest.raises(TypeError):
        kb.individual("tc").attrs["input"] = "y"
    attrs["input"] = "z"
    assert kb.individual("tc").attrs == {"input": "x"}


def test_retype_and_set_attr_keep_the_rest():
    kb = KnowledgeBase().add_individual("a", "TestCase", {"input": "x"})
    kb.retype("a", "TestSuite").set_attr("a", "name", "suite")
    assert kb.individual("a").type_name == "TestSuite"
    assert kb.individual("a").attrs == {"input": "x", "name": "suite"}
    kb.set_attr("a", "input", None)
    assert kb.individual("a").attrs == {"name": "suite"}
