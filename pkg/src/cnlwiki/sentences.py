"""Parse trees for the controlled-English sentence grammar.

Sentences come in three shapes: declaratives ("every country borders a sea ."),
wh-questions ("which countries border switzerland ?") and yes/no questions
("is switzerland a country ?").  A ClassTerm is a noun with an optional
relative phrase; relative phrases always attach to the noun directly before
them, so the trees are unique.
"""

from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class ClassTerm:
    noun: str                      # noun lemma
    relative: Optional["VpAst"] = None


@dataclass(frozen=True)
class Isa:
    positive: bool
    term: ClassTerm


@dataclass(frozen=True)
class VerbPhrase:
    positive: bool
    verb: str                      # transitive-verb lemma
    object: "ObjectAst"


@dataclass(frozen=True)
class Passive:
    verb: str
    agent: str                     # proper-name lemma ("is bordered by X")


@dataclass(frozen=True)
class ModalVp:
    modality: str                  # "can" | "must"
    verb: str
    object: "ObjectAst"


VpAst = Union[Isa, VerbPhrase, Passive, ModalVp]


@dataclass(frozen=True)
class ExistsObject:
    term: ClassTerm                # "a/an C"


@dataclass(frozen=True)
class NoneOfObject:
    term: ClassTerm                # "no C"


@dataclass(frozen=True)
class IndividualObject:
    individual: str                # proper-name lemma


@dataclass(frozen=True)
class NumObject:
    kind: str                      # at-most | at-least | exactly | more-than | less-than
    n: int
    term: ClassTerm


ObjectAst = Union[ExistsObject, NoneOfObject, IndividualObject, NumObject]


@dataclass(frozen=True)
class QuantSubject:
    quant: str                     # "every" | "no" | "a"
    term: ClassTerm


@dataclass(frozen=True)
class IndividualSubject:
    individual: str


Subject = Union[QuantSubject, IndividualSubject]


@dataclass(frozen=True)
class Declarative:
    subject: Subject
    vp: VpAst


@dataclass(frozen=True)
class WhQuestion:
    term: ClassTerm
    vp: VpAst


@dataclass(frozen=True)
class YnQuestion:
    individual: str
    term: ClassTerm


SentenceAst = Union[Declarative, WhQuestion, YnQuestion]


def is_question(ast) -> bool:
    return isinstance(ast, (WhQuestion, YnQuestion))
