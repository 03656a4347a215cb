"""Description-logic class expressions and axioms.

The sentence translator only ever emits the constructors ``Atomic``, ``Not``,
``And``, ``Some``, ``Only``, ``AtLeast``, ``AtMost`` and ``HasValue`` (plus
the three axiom kinds).  ``Top``, ``Bottom``, ``Or`` and ``NoValue`` exist so
that every expression has a negation normal form; they show up inside the
reasoner and in query probes, never in committed wiki content.

``functional()`` renders axioms in OWL functional-style text with
space-separated arguments, e.g.::

    SubClassOf(landlocked-country ObjectComplementOf(ObjectSomeValuesFrom(borders sea)))
"""

from dataclasses import dataclass

from .errors import UnsupportedConstructError


class ClassExpr:
    """Marker base for class expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Atomic(ClassExpr):
    name: str


@dataclass(frozen=True)
class Top(ClassExpr):
    pass


@dataclass(frozen=True)
class Bottom(ClassExpr):
    pass


@dataclass(frozen=True)
class Not(ClassExpr):
    expr: "ClassExpr"


@dataclass(frozen=True)
class And(ClassExpr):
    left: "ClassExpr"
    right: "ClassExpr"


@dataclass(frozen=True)
class Or(ClassExpr):
    left: "ClassExpr"
    right: "ClassExpr"


@dataclass(frozen=True)
class Some(ClassExpr):
    role: str
    expr: "ClassExpr"


@dataclass(frozen=True)
class Only(ClassExpr):
    role: str
    expr: "ClassExpr"


@dataclass(frozen=True)
class AtLeast(ClassExpr):
    n: int
    role: str
    expr: "ClassExpr"


@dataclass(frozen=True)
class AtMost(ClassExpr):
    n: int
    role: str
    expr: "ClassExpr"


@dataclass(frozen=True)
class HasValue(ClassExpr):
    role: str
    individual: str


@dataclass(frozen=True)
class NoValue(ClassExpr):
    """No role edge to one specific named individual (NNF of Not(HasValue))."""

    role: str
    individual: str


TOP = Top()
BOTTOM = Bottom()


class Axiom:
    """Marker base for axioms."""

    __slots__ = ()


@dataclass(frozen=True)
class SubClassOf(Axiom):
    sub: ClassExpr
    sup: ClassExpr


@dataclass(frozen=True)
class ClassAssertion(Axiom):
    expr: ClassExpr
    individual: str


@dataclass(frozen=True)
class RoleAssertion(Axiom):
    role: str
    subject: str
    object: str


def validate(expr: ClassExpr) -> None:
    """Reject malformed cardinalities (n >= 1 for AtLeast, n >= 0 for AtMost)."""
    if isinstance(expr, (Atomic, Top, Bottom, HasValue, NoValue)):
        return
    if isinstance(expr, Not):
        validate(expr.expr)
    elif isinstance(expr, (And, Or)):
        validate(expr.left)
        validate(expr.right)
    elif isinstance(expr, (Some, Only)):
        validate(expr.expr)
    elif isinstance(expr, AtLeast):
        if expr.n < 1:
            raise UnsupportedConstructError(f"AtLeast needs n >= 1, got {expr.n}")
        validate(expr.expr)
    elif isinstance(expr, AtMost):
        if expr.n < 0:
            raise UnsupportedConstructError(f"AtMost needs n >= 0, got {expr.n}")
        validate(expr.expr)
    else:
        raise UnsupportedConstructError(f"not a class expression: {expr!r}")


def validate_axiom(axiom: Axiom) -> None:
    if isinstance(axiom, SubClassOf):
        validate(axiom.sub)
        validate(axiom.sup)
    elif isinstance(axiom, ClassAssertion):
        validate(axiom.expr)
    elif isinstance(axiom, RoleAssertion):
        pass
    else:
        raise UnsupportedConstructError(f"not an axiom: {axiom!r}")


def neg(expr: ClassExpr) -> ClassExpr:
    """Negation normal form of Not(expr)."""
    if isinstance(expr, Atomic):
        return Not(expr)
    if isinstance(expr, Top):
        return BOTTOM
    if isinstance(expr, Bottom):
        return TOP
    if isinstance(expr, Not):
        return nnf(expr.expr)
    if isinstance(expr, And):
        return Or(neg(expr.left), neg(expr.right))
    if isinstance(expr, Or):
        return And(neg(expr.left), neg(expr.right))
    if isinstance(expr, Some):
        return Only(expr.role, neg(expr.expr))
    if isinstance(expr, Only):
        return Some(expr.role, neg(expr.expr))
    if isinstance(expr, AtLeast):
        # n >= 1 by the expression invariant, so n - 1 >= 0
        return AtMost(expr.n - 1, expr.role, nnf(expr.expr))
    if isinstance(expr, AtMost):
        return AtLeast(expr.n + 1, expr.role, nnf(expr.expr))
    if isinstance(expr, HasValue):
        return NoValue(expr.role, expr.individual)
    if isinstance(expr, NoValue):
        return HasValue(expr.role, expr.individual)
    raise UnsupportedConstructError(f"not a class expression: {expr!r}")


def nnf(expr: ClassExpr) -> ClassExpr:
    """Push negations down to atoms."""
    if isinstance(expr, (Atomic, Top, Bottom, HasValue, NoValue)):
        return expr
    if isinstance(expr, Not):
        return neg(expr.expr)
    if isinstance(expr, And):
        return And(nnf(expr.left), nnf(expr.right))
    if isinstance(expr, Or):
        return Or(nnf(expr.left), nnf(expr.right))
    if isinstance(expr, Some):
        return Some(expr.role, nnf(expr.expr))
    if isinstance(expr, Only):
        return Only(expr.role, nnf(expr.expr))
    if isinstance(expr, AtLeast):
        return AtLeast(expr.n, expr.role, nnf(expr.expr))
    if isinstance(expr, AtMost):
        return AtMost(expr.n, expr.role, nnf(expr.expr))
    raise UnsupportedConstructError(f"not a class expression: {expr!r}")


def functional(node) -> str:
    """OWL functional-style text for an axiom or class expression."""
    if isinstance(node, Atomic):
        return node.name
    if isinstance(node, Top):
        return "Thing"
    if isinstance(node, Bottom):
        return "Nothing"
    if isinstance(node, Not):
        return f"ObjectComplementOf({functional(node.expr)})"
    if isinstance(node, And):
        return f"ObjectIntersectionOf({functional(node.left)} {functional(node.right)})"
    if isinstance(node, Or):
        return f"ObjectUnionOf({functional(node.left)} {functional(node.right)})"
    if isinstance(node, Some):
        return f"ObjectSomeValuesFrom({node.role} {functional(node.expr)})"
    if isinstance(node, Only):
        return f"ObjectAllValuesFrom({node.role} {functional(node.expr)})"
    if isinstance(node, AtLeast):
        return f"ObjectMinCardinality({node.n} {node.role} {functional(node.expr)})"
    if isinstance(node, AtMost):
        return f"ObjectMaxCardinality({node.n} {node.role} {functional(node.expr)})"
    if isinstance(node, HasValue):
        return f"ObjectHasValue({node.role} {node.individual})"
    if isinstance(node, NoValue):
        return f"ObjectComplementOf(ObjectHasValue({node.role} {node.individual}))"
    if isinstance(node, SubClassOf):
        return f"SubClassOf({functional(node.sub)} {functional(node.sup)})"
    if isinstance(node, ClassAssertion):
        return f"ClassAssertion({functional(node.expr)} {node.individual})"
    if isinstance(node, RoleAssertion):
        return f"ObjectPropertyAssertion({node.role} {node.subject} {node.object})"
    raise UnsupportedConstructError(f"cannot serialize {node!r}")


def _collect(expr: ClassExpr, classes: set, roles: set, individuals: set) -> None:
    if isinstance(expr, Atomic):
        classes.add(expr.name)
    elif isinstance(expr, Not):
        _collect(expr.expr, classes, roles, individuals)
    elif isinstance(expr, (And, Or)):
        _collect(expr.left, classes, roles, individuals)
        _collect(expr.right, classes, roles, individuals)
    elif isinstance(expr, (Some, Only, AtLeast, AtMost)):
        roles.add(expr.role)
        _collect(expr.expr, classes, roles, individuals)
    elif isinstance(expr, (HasValue, NoValue)):
        roles.add(expr.role)
        individuals.add(expr.individual)


def signature(axioms) -> tuple:
    """(classes, roles, individuals) mentioned by an axiom collection, sorted."""
    classes: set = set()
    roles: set = set()
    individuals: set = set()
    for ax in axioms:
        if isinstance(ax, SubClassOf):
            _collect(ax.sub, classes, roles, individuals)
            _collect(ax.sup, classes, roles, individuals)
        elif isinstance(ax, ClassAssertion):
            _collect(ax.expr, classes, roles, individuals)
            individuals.add(ax.individual)
        elif isinstance(ax, RoleAssertion):
            roles.add(ax.role)
            individuals.add(ax.subject)
            individuals.add(ax.object)
    return tuple(sorted(classes)), tuple(sorted(roles)), tuple(sorted(individuals))
