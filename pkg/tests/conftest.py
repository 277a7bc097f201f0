import pytest

from Generator.generator import GenConfig, generate_conforming
from Schema.schema import builtin_schema


@pytest.fixture(scope="session")
def schema():
    return builtin_schema()


@pytest.fixture(scope="session")
def motif():
    return generate_conforming(GenConfig(seed=0, size=0))
