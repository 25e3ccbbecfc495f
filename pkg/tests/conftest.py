import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(Path(__file__).resolve().parent))

from ontoforge.corpus import load_fixture_corpus
from ontoforge.textmine import PipelineConfig


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO


@pytest.fixture(scope="session")
def fixture_corpus_path() -> Path:
    return REPO / "fixtures" / "corpus.jsonl"


@pytest.fixture(scope="session")
def fixture_corpus(fixture_corpus_path):
    return load_fixture_corpus(fixture_corpus_path)


@pytest.fixture(scope="session")
def default_config() -> PipelineConfig:
    return PipelineConfig()
