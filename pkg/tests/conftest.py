from __future__ import annotations

import pytest

import gujhin
from gujhin import Pipeline, TagLexicon, build_default_table

# Independent oracle for the parallel-block construction: plain arithmetic,
# no table involved. Used to freeze expected values across the suite.
OFFSET = 0x0180


def offset_map(s: str) -> str:
    return "".join(
        chr(ord(c) - OFFSET) if 0x0A81 <= ord(c) <= 0x0AEF else c for c in s
    )


@pytest.fixture(scope="session")
def table():
    return build_default_table()


@pytest.fixture(scope="session")
def seed_stem_rules():
    return gujhin.seed_stem_rules()


@pytest.fixture(scope="session")
def seed_tag_rules():
    return gujhin.seed_tag_rules()


@pytest.fixture(scope="session")
def sample_lexicon():
    lexicon = TagLexicon()
    text = gujhin._data_text("sample_corpus/tagged_sentences.txt")
    diagnostics = lexicon.ingest_text(text, source="tagged_sentences.txt")
    assert not diagnostics
    return lexicon


@pytest.fixture(scope="session")
def sample_pipeline(table, sample_lexicon, seed_stem_rules, seed_tag_rules):
    return Pipeline(
        table=table,
        lexicon=sample_lexicon,
        stem_rules=seed_stem_rules,
        tag_rules=seed_tag_rules,
    )
