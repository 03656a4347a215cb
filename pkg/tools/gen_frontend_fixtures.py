#!/usr/bin/env python3
"""Regenerate the frontend test fixtures from the engine.

The editor tests replay recorded gateway responses: the exact next-token
prediction for every prefix of every sentence up to 8 tokens over the demo
vocabulary, the full set of accepted sentences at that length, the vocabulary
grouped by editor category, and the demo wiki's article payloads.

Run from the repository root:  python3 tools/gen_frontend_fixtures.py
"""

import json
import os

from cnlwiki import grammar
from cnlwiki.fixtures import VOCABULARY, build_geography_wiki
from cnlwiki.lexicon import ALL_CATEGORIES, Lexicon

MAX_LEN = 7
NUMBERS = (1, 2, 3)

OUT_DIR = os.path.join(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))), "frontend", "test", "fixtures")


def statement_view(statement):
    view = {
        "id": statement.id,
        "article": statement.article,
        "kind": statement.kind,
        "text": statement.text,
        "tokens": list(statement.tokens),
        "status": statement.file_status().split(":")[0],
    }
    if statement.reason:
        view["reason"] = statement.reason
    return view


def main():
    lexicon = Lexicon()
    for entry in VOCABULARY:
        lexicon.add_word(entry)

    sentences = grammar.enumerate_sentences(lexicon, MAX_LEN, numbers=NUMBERS)
    prefixes = {()}
    for sentence in sentences:
        for i in range(1, len(sentence) + 1):
            prefixes.add(sentence[:i])
    predictions = {}
    for prefix in sorted(prefixes):
        tokens = lexicon.resolve(prefix)
        predictions[" ".join(prefix)] = grammar.predict_next(tokens).as_dict()

    categories = {c: lexicon.surfaces(c)
                  for c in sorted(ALL_CATEGORIES) if c != "number"}

    wiki = build_geography_wiki()
    articles = {
        word: {"word": word,
               "statements": [statement_view(wiki.statements[sid])
                              for sid in ids]}
        for word, ids in wiki.articles.items()
    }

    os.makedirs(OUT_DIR, exist_ok=True)
    fixtures = {
        "predictions.json": predictions,
        "sentences.json": [" ".join(s) for s in sentences],
        "vocabulary.json": {"categories": categories,
                            "numbers": list(NUMBERS)},
        "articles.json": articles,
    }
    for name, payload in fixtures.items():
        path = os.path.join(OUT_DIR, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
