from importlib import resources as importlib_resources
from pathlib import Path

import pytest

from distractorgen import Config, load_articles, load_kb, load_lexical_graph, load_qaps, load_vectors
from distractorgen.assembly import Resources

FIXTURES = Path(str(importlib_resources.files("distractorgen").joinpath("data/fixtures")))
KB_PATH = Path(str(importlib_resources.files("distractorgen").joinpath("data/kb.json")))


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def kb_path() -> Path:
    return KB_PATH


@pytest.fixture(scope="session")
def articles():
    return load_articles(FIXTURES / "articles.jsonl")


@pytest.fixture(scope="session")
def qaps():
    return load_qaps(FIXTURES / "qaps.jsonl")


@pytest.fixture(scope="session")
def vectors():
    return load_vectors(FIXTURES / "vectors.txt")


@pytest.fixture(scope="session")
def lexgraph():
    return load_lexical_graph(FIXTURES / "lexgraph.json")


@pytest.fixture(scope="session")
def kb():
    return load_kb(KB_PATH)


@pytest.fixture(scope="session")
def resources(vectors, lexgraph, kb):
    return Resources(vectors=vectors, graph=lexgraph, kb=kb)


@pytest.fixture()
def cfg():
    return Config()
