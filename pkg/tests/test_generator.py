import pytest

from errors import GeneratorError
from Generator.generator import MOTIF_SIZE, SEED_LIMIT, GenConfig, generate_conforming, generator_settings
from Generator.random_models import random_formula, random_kb
from Logic.formula import depth, free_vars
from Parser.tkb_parser import serialize
from Validator.validator import validate

SIZES = (0, 10, 50, 200)


@pytest.mark.parametrize("size", SIZES)
def test_generated_models_pass_complete_validation(schema, size):
    tolerance = generator_settings()["SIZE_TOLERANCE"]
    for seed in range(100):
        kb = generate_conforming(GenConfig(seed=seed, size=size))
        report = validate(kb, schema, "complete")
        assert report.diagnostics == (), (seed, report.codes())
        if size <= MOTIF_SIZE:
            assert len(kb) == MOTIF_SIZE
        else:
            assert size <= len(kb) <= int(size * (1 + tolerance))


def test_generation_is_deterministic():
    first = generate_conforming(GenConfig(seed=42, size=20))
    second = generate_conforming(GenConfig(seed=42, size=20))
    assert serialize(first) == serialize(second)


def test_seeds_change_the_model():
    assert serialize(generate_conforming(GenConfig(seed=1, size=50))) != \
        serialize(generate_conforming(GenConfig(seed=2, size=50)))


def test_motif(schema, motif):
    assert len(motif) == MOTIF_SIZE
    for type_name in ("TestProject", "TestGoal", "TestingStrategy", "TestingManagement", "TestingLifeCycle",
                      "Testing", "DesignTesting", "PerformTesting", "AnalyzeTestResults"):
        assert motif.instances_of(schema, type_name), type_name
    assert motif.has_link("part_of", "at", "p")


def test_generated_ids_are_numbered_from_one():
    numbers = {}
    for id in generate_conforming(GenConfig(seed=4, size=80)).ids():
        if "_" in id:
            prefix, n = id.rsplit("_", 1)
            numbers.setdefault(prefix, []).append(int(n))
    assert numbers
    for prefix, found in numbers.items():
        assert sorted(found) == list(range(1, len(found) + 1)), prefix


def test_largest_seed_is_accepted():
    assert len(generate_conforming(GenConfig(seed=SEED_LIMIT - 1, size=0))) == MOTIF_SIZE


@pytest.mark.parametrize("config", [
    GenConfig(seed=-1),
    GenConfig(seed=SEED_LIMIT),
    GenConfig(size=-5),
    GenConfig(size=10001),
    GenConfig(mode="violating"),
])
def test_invalid_config(config):
    with pytest.raises(GeneratorError):
        generate_conforming(config)


# ---------------------------------------------------------------- modelli casuali
def test_random_kb_bounds():
    for seed in range(200):
        kb = random_kb(seed)
        assert len(kb) <= 6
        assert len(kb.links) <= 10
        assert kb.finalized


def test_random_kb_is_deterministic():
    assert random_kb(5) == random_kb(5)


def test_random_formulas_are_closed():
    for seed in range(200):
        formula = random_formula(seed)
        assert free_vars(formula) == frozenset()
        assert 2 <= depth(formula) <= 4


def test_random_formula_needs_room_for_a_quantifier():
    with pytest.raises(ValueError):
        random_formula(0, max_depth=1)
