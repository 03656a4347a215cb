import pytest

from cnlwiki.errors import (
    DuplicateLemmaError,
    FormCollisionError,
    MalformedFormsError,
    UnknownWordError,
)
from cnlwiki.lexicon import (
    FUNCTION_WORDS,
    Lexicon,
    WordEntry,
    detokenize,
    dump_tsv,
    parse_tsv,
)


def noun(lemma, sg, pl):
    return WordEntry(lemma, "noun", {"singular": sg, "plural": pl})


class TestAddWord:
    def test_lookup_by_every_form(self):
        lex = Lexicon()
        lex.add_word(noun("country", "country", "countries"))
        token = lex.lookup("countries")
        assert token.lemma == "country"
        assert token.form_key == "plural"
        assert token.category == "noun-plural"
        assert lex.lookup("country").form_key == "singular"

    def test_duplicate_lemma(self):
        lex = Lexicon()
        lex.add_word(noun("country", "country", "countries"))
        with pytest.raises(DuplicateLemmaError):
            lex.add_word(noun("country", "land", "lands"))

    def test_empty_form_rejected(self):
        lex = Lexicon()
        with pytest.raises(MalformedFormsError):
            lex.add_word(noun("country", "country", ""))

    def test_missing_form_key_rejected(self):
        lex = Lexicon()
        with pytest.raises(MalformedFormsError):
            lex.add_word(WordEntry("country", "noun", {"singular": "country"}))

    def test_uppercase_form_rejected(self):
        lex = Lexicon()
        with pytest.raises(MalformedFormsError):
            lex.add_word(WordEntry("zurich", "proper-name", {"name": "Zurich"}))

    def test_reserved_word_collision(self):
        lex = Lexicon()
        with pytest.raises(FormCollisionError):
            lex.add_word(noun("every", "every", "everies"))

    def test_cross_entry_collision(self):
        lex = Lexicon()
        lex.add_word(noun("country", "country", "countries"))
        with pytest.raises(FormCollisionError):
            lex.add_word(WordEntry("country-x", "proper-name",
                                   {"name": "country"}))

    def test_within_entry_collision(self):
        # one surface form may not resolve to two different form keys
        lex = Lexicon()
        with pytest.raises(FormCollisionError):
            lex.add_word(noun("sheep", "sheep", "sheep"))

    def test_remove_is_inverse(self):
        lex = Lexicon()
        lex.add_word(noun("country", "country", "countries"))
        lex.remove_word("country")
        assert "country" not in lex
        assert lex.lookup("countries") is None


class TestLookup:
    def test_function_word(self, lexicon):
        assert lexicon.lookup("at").kind == "function-word"
        for word in FUNCTION_WORDS:
            assert lexicon.lookup(word).kind == "function-word"

    def test_proper_name(self, lexicon):
        token = lexicon.lookup("switzerland")
        assert (token.word_class, token.lemma) == ("proper-name", "switzerland")

    def test_numbers(self, lexicon):
        assert lexicon.lookup("7").value == 7
        assert lexicon.lookup("0").value == 0
        assert lexicon.lookup("100").value == 100
        assert lexicon.lookup("101") is None
        assert lexicon.lookup("007") is None

    def test_unknown(self, lexicon):
        assert lexicon.lookup("blorf") is None


class TestTokenize:
    def test_sentence(self, lexicon):
        tokens = lexicon.tokenize("every country borders no sea .")
        assert [t.surface for t in tokens] == \
            ["every", "country", "borders", "no", "sea", "."]
        kinds = [t.kind for t in tokens]
        assert kinds == ["function-word", "lexical", "lexical",
                         "function-word", "lexical", "function-word"]

    def test_empty(self, lexicon):
        assert lexicon.tokenize("") == []

    def test_unknown_word_position(self, lexicon):
        with pytest.raises(UnknownWordError) as err:
            lexicon.tokenize("every blorf .")
        assert err.value.unit == "blorf"
        assert err.value.position == 1

    def test_glued_final_punctuation(self, lexicon):
        spaced = lexicon.tokenize("every country borders no sea .")
        glued = lexicon.tokenize("every country borders no sea.")
        assert [t.surface for t in spaced] == [t.surface for t in glued]
        question = lexicon.tokenize("is switzerland a country?")
        assert question[-1].surface == "?"

    def test_detokenize_round_trip(self, lexicon):
        text = "every landlocked-country borders at most 3 seas ."
        tokens = lexicon.tokenize(text)
        assert detokenize(tokens) == text
        assert [t.surface for t in lexicon.tokenize(detokenize(tokens))] == \
            [t.surface for t in tokens]

    def test_detokenize_round_trip_over_grammar_output(self, lexicon):
        from cnlwiki import grammar
        for sentence in grammar.enumerate_sentences(lexicon, 6):
            tokens = lexicon.resolve(sentence)
            again = lexicon.tokenize(detokenize(tokens))
            assert tuple(t.surface for t in again) == sentence


class TestForms:
    def test_every_form_resolves_back(self, lexicon):
        from cnlwiki.lexicon import FORM_KEYS
        for entry in lexicon.entries():
            for key in FORM_KEYS[entry.word_class]:
                token = lexicon.lookup(entry.forms[key])
                assert token.lemma == entry.lemma
                assert token.form_key == key


class TestVocabularyTsv:
    def test_round_trip(self, lexicon):
        text = dump_tsv(lexicon)
        again = parse_tsv(text)
        assert dump_tsv(again) == text
        assert len(again) == len(lexicon)
        assert text.endswith("\n")
        assert "\r" not in text

    def test_line_shape(self, lexicon):
        lines = dump_tsv(lexicon).splitlines()
        by_class = {line.split("\t")[0] for line in lines}
        assert by_class == {"proper-name", "noun", "transitive-verb"}
        for line in lines:
            cells = line.split("\t")
            expected = {"proper-name": 3, "noun": 4, "transitive-verb": 5}
            assert len(cells) == expected[cells[0]]

    def test_bad_line_rejected(self):
        with pytest.raises(MalformedFormsError):
            parse_tsv("noun\tcountry\tcountry\n")
