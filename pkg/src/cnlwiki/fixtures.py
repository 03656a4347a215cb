"""The bundled geography demo wiki.

Small on purpose: three proper names, three nouns, two verbs.  The statement
sequence leaves one statement in each red state (a modal sentence and a
gated-out contradiction), which makes the fixture a workout for rendering,
export and reassertion as well as for reasoning.
"""

from .lexicon import WordEntry
from .wiki import WikiState

VOCABULARY = [
    WordEntry("switzerland", "proper-name", {"name": "switzerland"}),
    WordEntry("austria", "proper-name", {"name": "austria"}),
    WordEntry("baltic-sea", "proper-name", {"name": "baltic-sea"}),
    WordEntry("country", "noun",
              {"singular": "country", "plural": "countries"}),
    WordEntry("sea", "noun", {"singular": "sea", "plural": "seas"}),
    WordEntry("landlocked-country", "noun",
              {"singular": "landlocked-country",
               "plural": "landlocked-countries"}),
    WordEntry("borders", "transitive-verb",
              {"third-singular": "borders", "plural": "border",
               "past-participle": "bordered"}),
    WordEntry("surrounds", "transitive-verb",
              {"third-singular": "surrounds", "plural": "surround",
               "past-participle": "surrounded"}),
]

SENTENCES = [
    ("country", "every landlocked-country is a country ."),
    ("country", "no country is a sea ."),
    ("landlocked-country", "every landlocked-country borders no sea ."),
    ("baltic-sea", "baltic-sea is a sea ."),
    ("switzerland", "switzerland is a landlocked-country ."),
    ("austria", "austria is a country ."),
    ("switzerland", "switzerland borders austria ."),
    ("austria", "austria borders switzerland ."),
    # gated out: switzerland is landlocked, so this contradicts the ontology
    ("switzerland", "switzerland borders baltic-sea ."),
    # outside the reasoner fragment, kept as a red sentence
    ("country", "a country can border a sea ."),
]

COMMENTS = [
    ("country", "countries are the political units of this wiki."),
]


def build_geography_wiki(data_dir=None) -> WikiState:
    wiki = WikiState(data_dir=data_dir)
    for entry in VOCABULARY:
        wiki.add_word(entry)
    for article, sentence in SENTENCES:
        wiki.add_statement(article, sentence)
    for article, text in COMMENTS:
        wiki.add_comment(article, text)
    return wiki
