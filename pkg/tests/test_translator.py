import itertools

import pytest

from cnlwiki import grammar, translator
from cnlwiki.axioms import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    ClassAssertion,
    HasValue,
    Not,
    RoleAssertion,
    Some,
    SubClassOf,
)
from cnlwiki.errors import NotAtomicError
from cnlwiki.translator import (
    Blue,
    EntailmentQuery,
    Red,
    RetrievalQuery,
    blue_fragment_violations,
    translate,
    translate_question,
    verbalize_atomic,
)


def translated(lexicon, text, sid=1):
    return translate(grammar.parse(lexicon.tokenize(text)), sid)


class TestTranslate:
    def test_universal_negated_object(self, lexicon):
        result = translated(lexicon, "every landlocked-country borders no sea .")
        assert result == Blue((SubClassOf(
            Atomic("landlocked-country"),
            Not(Some("borders", Atomic("sea")))),))

    def test_at_most(self, lexicon):
        result = translated(lexicon, "every country borders at most 3 countries .")
        assert result == Blue((SubClassOf(
            Atomic("country"), AtMost(3, "borders", Atomic("country"))),))

    def test_exactly_gives_both_bounds(self, lexicon):
        result = translated(lexicon, "every country borders exactly 5 seas .")
        assert result == Blue((SubClassOf(
            Atomic("country"),
            And(AtLeast(5, "borders", Atomic("sea")),
                AtMost(5, "borders", Atomic("sea")))),))

    def test_more_and_less_than_normalize(self, lexicon):
        more = translated(lexicon, "every country borders more than 2 seas .")
        assert more.axioms[0].sup == AtLeast(3, "borders", Atomic("sea"))
        less = translated(lexicon, "every country borders less than 1 sea .")
        assert less.axioms[0].sup == AtMost(0, "borders", Atomic("sea"))

    def test_role_assertion(self, lexicon):
        result = translated(lexicon, "switzerland borders austria .")
        assert result == Blue((RoleAssertion("borders", "switzerland", "austria"),))

    def test_negated_role_assertion_is_class_assertion(self, lexicon):
        result = translated(lexicon, "switzerland does not border austria .")
        assert result == Blue((ClassAssertion(
            Not(HasValue("borders", "austria")), "switzerland"),))

    def test_passive_swaps_edge_direction(self, lexicon):
        result = translated(lexicon, "switzerland is bordered by austria .")
        assert result == Blue((RoleAssertion("borders", "austria", "switzerland"),))

    def test_existential_uses_statement_id(self, lexicon):
        result = translated(lexicon, "a country borders a sea .", sid=42)
        assert result == Blue((ClassAssertion(
            And(Atomic("country"), Some("borders", Atomic("sea"))), "_a42"),))
        assert translator.is_anonymous("_a42")

    def test_no_subject(self, lexicon):
        result = translated(lexicon, "no country is a sea .")
        assert result == Blue((SubClassOf(Atomic("country"),
                                          Not(Atomic("sea"))),))

    def test_relative_clause_becomes_intersection(self, lexicon):
        result = translated(
            lexicon, "every country that borders a sea is a country .")
        assert result.axioms[0].sub == And(
            Atomic("country"), Some("borders", Atomic("sea")))

    def test_modality_is_red(self, lexicon):
        result = translated(lexicon, "a country can border a sea .")
        assert result == Red("modality")
        result = translated(lexicon, "switzerland must border a sea .")
        assert result == Red("modality")

    def test_modality_inside_relative_is_red(self, lexicon):
        result = translated(
            lexicon, "every country that can border a sea is a country .")
        assert result == Red("modality")

    def test_passive_with_class_subject_is_red(self, lexicon):
        result = translated(lexicon, "every country is bordered by austria .")
        assert result == Red("passive-class-agent-unsupported")

    def test_questions_rejected(self, lexicon):
        ast = grammar.parse(lexicon.tokenize("is switzerland a country ?"))
        with pytest.raises(ValueError):
            translate(ast, 1)

    def test_determinism(self, lexicon):
        text = "every country that borders a sea borders at least 2 countries ."
        first = translated(lexicon, text, sid=7)
        second = translated(lexicon, text, sid=7)
        assert first == second


class TestTranslateQuestion:
    def test_wh(self, lexicon):
        ast = grammar.parse(lexicon.tokenize("which countries border switzerland ?"))
        assert translate_question(ast) == RetrievalQuery(
            And(Atomic("country"), HasValue("borders", "switzerland")))

    def test_yn(self, lexicon):
        ast = grammar.parse(lexicon.tokenize("is switzerland a country ?"))
        assert translate_question(ast) == EntailmentQuery(
            Atomic("country"), "switzerland")

    def test_modal_question_red(self, lexicon):
        ast = grammar.parse(lexicon.tokenize("which countries can border a sea ?"))
        assert translate_question(ast) == Red("modality")

    def test_passive_question_red(self, lexicon):
        ast = grammar.parse(
            lexicon.tokenize("which countries are bordered by switzerland ?"))
        assert translate_question(ast) == Red("passive-class-agent-unsupported")


class TestVerbalize:
    def test_subclass(self, lexicon):
        tokens = verbalize_atomic(
            SubClassOf(Atomic("landlocked-country"), Atomic("country")), lexicon)
        assert tokens == ("every", "landlocked-country", "is", "a", "country", ".")

    def test_class_assertion(self, lexicon):
        tokens = verbalize_atomic(
            ClassAssertion(Atomic("country"), "switzerland"), lexicon)
        assert tokens == ("switzerland", "is", "a", "country", ".")

    def test_vowel_article(self, lexicon):
        from cnlwiki.lexicon import WordEntry
        lexicon.add_word(WordEntry("island", "noun",
                                   {"singular": "island", "plural": "islands"}))
        tokens = verbalize_atomic(
            ClassAssertion(Atomic("island"), "switzerland"), lexicon)
        assert tokens[2:4] == ("an", "island")

    def test_role_assertion(self, lexicon):
        tokens = verbalize_atomic(
            RoleAssertion("borders", "switzerland", "austria"), lexicon)
        assert tokens == ("switzerland", "borders", "austria", ".")

    def test_not_atomic(self, lexicon):
        with pytest.raises(NotAtomicError):
            verbalize_atomic(SubClassOf(
                Atomic("country"), Some("borders", Atomic("sea"))), lexicon)
        with pytest.raises(NotAtomicError):
            verbalize_atomic(ClassAssertion(Atomic("country"), "_a3"), lexicon)

    def test_round_trip_every_atomic_axiom(self, lexicon):
        nouns = ["country", "sea", "landlocked-country"]
        names = ["switzerland", "austria", "baltic-sea"]
        verbs = ["borders", "surrounds"]
        axioms = []
        axioms += [SubClassOf(Atomic(a), Atomic(b))
                   for a, b in itertools.product(nouns, nouns)]
        axioms += [ClassAssertion(Atomic(c), i)
                   for c, i in itertools.product(nouns, names)]
        axioms += [RoleAssertion(r, a, b)
                   for r, a, b in itertools.product(verbs, names, names)]
        for axiom in axioms:
            tokens = verbalize_atomic(axiom, lexicon)
            back = translate(grammar.parse(lexicon.resolve(tokens)), 99)
            assert back == Blue((axiom,)), axiom


class TestFragment:
    def test_blue_results_stay_inside_fragment(self, lexicon):
        sentences = grammar.enumerate_sentences(lexicon, 8)
        reasons = set()
        for sentence in sentences:
            ast = grammar.parse(lexicon.resolve(sentence))
            from cnlwiki.sentences import is_question
            if is_question(ast):
                continue
            result = translate(ast, 5)
            if isinstance(result, Red):
                reasons.add(result.reason)
                continue
            assert result.axioms
            for axiom in result.axioms:
                assert blue_fragment_violations(axiom) == []
        assert reasons <= {"modality", "passive-class-agent-unsupported"}
        assert "modality" in reasons
