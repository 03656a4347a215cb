"""cnlwiki: a collaborative ontology wiki in controlled English.

All formal content is written, shown and queried as English sentences from a
fixed grammar; sentences translate to description-logic axioms, and an
embedded reasoner gates every assertion so the committed ontology always
stays consistent.
"""

from .grammar import Prediction, enumerate_sentences, parse, predict_next
from .lexicon import Lexicon, Token, WordEntry, detokenize
from .reasoner import (
    ClassHierarchy,
    ConsistencyVerdict,
    Ontology,
    classify,
    entails_subsumption,
    is_consistent,
    memberships,
    retrieve,
)
from .oracle import Interpretation, check_model, oracle_find_model
from .translator import translate, translate_question, verbalize_atomic
from .wiki import AskAnswer, Statement, Views, WikiState

__version__ = "0.1.0"

__all__ = [
    "AskAnswer",
    "ClassHierarchy",
    "ConsistencyVerdict",
    "Interpretation",
    "Lexicon",
    "Ontology",
    "Prediction",
    "Statement",
    "Token",
    "Views",
    "WikiState",
    "WordEntry",
    "check_model",
    "classify",
    "detokenize",
    "entails_subsumption",
    "enumerate_sentences",
    "is_consistent",
    "memberships",
    "oracle_find_model",
    "parse",
    "predict_next",
    "retrieve",
    "translate",
    "translate_question",
    "verbalize_atomic",
    "__version__",
]
