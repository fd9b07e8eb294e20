from __future__ import annotations

import pytest

from culturesim import corpus, dme, expert


@pytest.fixture(scope="session")
def small_corpus():
    """Fast synthetic corpus (32 per section) for engine/service/cli tests."""
    return dme.default_corpus(count_per_section=32, seed=42)


@pytest.fixture(scope="session")
def small_by_section(small_corpus):
    by_section: dict[str, list] = {}
    for example in small_corpus:
        by_section.setdefault(example.section_id, []).append(example)
    return by_section


@pytest.fixture(scope="session")
def rf_bundles(small_by_section):
    """Random-forest bundles for every bundled section."""
    return {
        section: expert.train_section(examples, section, "random_forest", seed=42)
        for section, examples in small_by_section.items()
    }


@pytest.fixture(scope="session")
def bundled_scenario():
    return dme.build_scenario()


@pytest.fixture(scope="session")
def models_dir(rf_bundles, tmp_path_factory):
    directory = tmp_path_factory.mktemp("models")
    for section, bundle in rf_bundles.items():
        expert.save_bundle(bundle, directory / f"{section}.json")
    return directory


@pytest.fixture(scope="session")
def corpus_file(small_corpus, tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus") / "corpus.jsonl"
    corpus.save_corpus(path, small_corpus)
    return path
