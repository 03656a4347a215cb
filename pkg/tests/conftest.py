import pytest

from cnlwiki.fixtures import VOCABULARY, build_geography_wiki
from cnlwiki.lexicon import Lexicon


@pytest.fixture()
def lexicon():
    """The small test vocabulary: 3 proper names, 3 nouns, 2 verbs."""
    lex = Lexicon()
    for entry in VOCABULARY:
        lex.add_word(entry)
    return lex


@pytest.fixture()
def geography():
    return build_geography_wiki()
