import os

from KnowledgeBase.kb import KnowledgeBase
from Parser.tkb_parser import parse

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures", "axioms")
AXIOM_NUMBERS = range(1, 18)


def fixture_path(name):
    return os.path.join(FIXTURES_DIR, name)


def load_fixture(name):
    with open(fixture_path(name), "r", encoding="utf-8") as file:
        return parse(file.read())


def make_kb(individuals, links=()):
    """individuals: [(id, type)] oppure [(id, type, attrs)]; links: [(rel, source, target)]."""
    kb = KnowledgeBase()
    for row in individuals:
        kb.add_individual(*row)
    for rel_name, source, target in links:
        kb.add_link(rel_name, source, target)
    return kb.finalize()


def axiom_codes(report):
    return [c for c in report.codes() if c.startswith("AX-")]
