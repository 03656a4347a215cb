"""From parse trees to description-logic axioms, and back for atomic facts.

Each declarative either lands inside the reasoner's fragment ("blue") and
yields one or more axioms, or is classified "red" with a machine-readable
reason.  Red covers exactly two things here: modal verbs ("can"/"must") and
passives whose subject is a class term rather than a proper name (those would
need inverse roles).

Existential sentences ("a country borders a sea .") are recorded as a class
assertion on a fresh anonymous individual named after the statement, so
removing the statement removes the individual with it.
"""

from dataclasses import dataclass

from . import sentences as ast_
from .axioms import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Axiom,
    ClassAssertion,
    ClassExpr,
    HasValue,
    Not,
    RoleAssertion,
    Some,
    SubClassOf,
)
from .errors import NotAtomicError
from .lexicon import Lexicon

RED_MODALITY = "modality"
RED_PASSIVE = "passive-class-agent-unsupported"


@dataclass(frozen=True)
class Blue:
    axioms: tuple

    @property
    def is_blue(self):
        return True


@dataclass(frozen=True)
class Red:
    reason: str

    @property
    def is_blue(self):
        return False


@dataclass(frozen=True)
class RetrievalQuery:
    """Which named individuals certainly belong to ``expr``?"""

    expr: ClassExpr


@dataclass(frozen=True)
class EntailmentQuery:
    """Is ``ClassAssertion(expr, individual)`` entailed?"""

    expr: ClassExpr
    individual: str


def anonymous_individual(statement_id: int) -> str:
    return f"_a{statement_id}"


def is_anonymous(individual: str) -> bool:
    return individual.startswith("_a")


class _RedSentence(Exception):
    def __init__(self, reason):
        self.reason = reason


def _class_term(term: ast_.ClassTerm) -> ClassExpr:
    expr = Atomic(term.noun)
    if term.relative is None:
        return expr
    return And(expr, _vp(term.relative))


def _object_expr(verb: str, obj) -> ClassExpr:
    if isinstance(obj, ast_.ExistsObject):
        return Some(verb, _class_term(obj.term))
    if isinstance(obj, ast_.NoneOfObject):
        return Not(Some(verb, _class_term(obj.term)))
    if isinstance(obj, ast_.IndividualObject):
        return HasValue(verb, obj.individual)
    kind, n, inner = obj.kind, obj.n, _class_term(obj.term)
    if kind == "at-most":
        return AtMost(n, verb, inner)
    if kind == "at-least":
        return AtLeast(n, verb, inner)
    if kind == "exactly":
        return And(AtLeast(n, verb, inner), AtMost(n, verb, inner))
    if kind == "more-than":
        return AtLeast(n + 1, verb, inner)
    # "less than n" with n >= 1, guaranteed by the grammar
    return AtMost(n - 1, verb, inner)


def _vp(vp) -> ClassExpr:
    """Class expression for a verb phrase with a class-term subject."""
    if isinstance(vp, ast_.ModalVp):
        raise _RedSentence(RED_MODALITY)
    if isinstance(vp, ast_.Passive):
        raise _RedSentence(RED_PASSIVE)
    if isinstance(vp, ast_.Isa):
        expr = _class_term(vp.term)
        return expr if vp.positive else Not(expr)
    expr = _object_expr(vp.verb, vp.object)
    return expr if vp.positive else Not(expr)


def translate(ast, statement_id: int):
    """Axioms (Blue) or a red classification for one declarative sentence."""
    if not isinstance(ast, ast_.Declarative):
        raise ValueError("only declarative sentences translate to axioms")
    subject, vp = ast.subject, ast.vp
    try:
        if isinstance(subject, ast_.IndividualSubject):
            name = subject.individual
            if isinstance(vp, ast_.ModalVp):
                raise _RedSentence(RED_MODALITY)
            if isinstance(vp, ast_.Passive):
                # "p is bordered by q ." asserts the edge q -> p
                return Blue((RoleAssertion(vp.verb, vp.agent, name),))
            if (isinstance(vp, ast_.VerbPhrase) and vp.positive
                    and isinstance(vp.object, ast_.IndividualObject)):
                return Blue((RoleAssertion(vp.verb, name,
                                           vp.object.individual),))
            return Blue((ClassAssertion(_vp(vp), name),))
        quant = subject.quant
        subject_expr = _class_term(subject.term)
        if quant == "every":
            return Blue((SubClassOf(subject_expr, _vp(vp)),))
        if quant == "no":
            return Blue((SubClassOf(subject_expr, Not(_vp(vp))),))
        return Blue((ClassAssertion(And(subject_expr, _vp(vp)),
                                    anonymous_individual(statement_id)),))
    except _RedSentence as red:
        return Red(red.reason)


def translate_question(ast):
    """A retrieval or entailment query, or a red classification."""
    try:
        if isinstance(ast, ast_.WhQuestion):
            return RetrievalQuery(And(_class_term(ast.term), _vp(ast.vp)))
        if isinstance(ast, ast_.YnQuestion):
            return EntailmentQuery(_class_term(ast.term), ast.individual)
    except _RedSentence as red:
        return Red(red.reason)
    raise ValueError("not a question")


# -- verbalization -----------------------------------------------------------

def _article(form: str) -> str:
    return "an" if form[0] in "aeiou" else "a"


def verbalize_atomic(axiom: Axiom, lexicon: Lexicon):
    """Surface tokens for an atomic axiom; parsing them back gives the axiom.

    Only three shapes verbalize: named subclass-of, named class membership of
    a proper name, and a role edge between proper names.
    """
    if isinstance(axiom, SubClassOf):
        if not (isinstance(axiom.sub, Atomic) and isinstance(axiom.sup, Atomic)):
            raise NotAtomicError("subclass axiom with a complex side")
        sub = lexicon.entry(axiom.sub.name).form("singular")
        sup = lexicon.entry(axiom.sup.name).form("singular")
        return ("every", sub, "is", _article(sup), sup, ".")
    if isinstance(axiom, ClassAssertion):
        if not isinstance(axiom.expr, Atomic) or is_anonymous(axiom.individual):
            raise NotAtomicError("class assertion with a complex class "
                                 "or anonymous individual")
        name = lexicon.entry(axiom.individual).form("name")
        noun = lexicon.entry(axiom.expr.name).form("singular")
        return (name, "is", _article(noun), noun, ".")
    if isinstance(axiom, RoleAssertion):
        if is_anonymous(axiom.subject) or is_anonymous(axiom.object):
            raise NotAtomicError("role assertion with anonymous individuals")
        subject = lexicon.entry(axiom.subject).form("name")
        verb = lexicon.entry(axiom.role).form("third-singular")
        obj = lexicon.entry(axiom.object).form("name")
        return (subject, verb, obj, ".")
    raise NotAtomicError(f"cannot verbalize {axiom!r}")


# Constructors a blue translation may contain; used by the fragment check.
BLUE_CLASS_CONSTRUCTORS = (Atomic, Not, And, Some, AtLeast, AtMost, HasValue)


def blue_fragment_violations(axiom: Axiom):
    """Sub-expressions outside the translator's output fragment, if any."""
    bad = []

    def walk(expr):
        if not isinstance(expr, BLUE_CLASS_CONSTRUCTORS):
            bad.append(expr)
            return
        if isinstance(expr, Not):
            walk(expr.expr)
        elif isinstance(expr, And):
            walk(expr.left)
            walk(expr.right)
        elif isinstance(expr, (Some, AtLeast, AtMost)):
            walk(expr.expr)

    if isinstance(axiom, SubClassOf):
        walk(axiom.sub)
        walk(axiom.sup)
    elif isinstance(axiom, ClassAssertion):
        walk(axiom.expr)
    elif not isinstance(axiom, RoleAssertion):
        bad.append(axiom)
    return bad
