"""Random ontologies shaped like real wiki output.

Axioms mirror what sentences translate to: subclass axioms with an atomic
subject class, class assertions (plain or skolem-style conjunctions), and
role assertions.  Verb-phrase expressions cover atomic classes, negation,
some/none, has-value, and qualified cardinality bounds up to 2, with
quantified inner classes kept atomic-or-conjunctive so the bounded model
search can decide every instance within its budget.
"""

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

CLASSES = ["alpha", "beta", "gamma"]
ROLES = ["r", "s"]
INDIVIDUALS = ["a", "b", "c"]


def inner_term(rng):
    if rng.random() < 0.75:
        return Atomic(rng.choice(CLASSES))
    return And(Atomic(rng.choice(CLASSES)), Atomic(rng.choice(CLASSES)))


def vp_expr(rng):
    kind = rng.randrange(7)
    role = rng.choice(ROLES)
    if kind == 0:
        expr = Atomic(rng.choice(CLASSES))
    elif kind == 1:
        expr = Not(Atomic(rng.choice(CLASSES)))
    elif kind == 2:
        expr = Some(role, inner_term(rng))
    elif kind == 3:
        expr = Not(Some(role, inner_term(rng)))
    elif kind == 4:
        expr = HasValue(role, rng.choice(INDIVIDUALS))
    elif kind == 5:
        if rng.random() < 0.5:
            expr = AtMost(rng.randint(0, 2), role, inner_term(rng))
        else:
            expr = AtLeast(rng.randint(1, 2), role, inner_term(rng))
    else:
        n = rng.randint(1, 2)
        term = inner_term(rng)
        expr = And(AtLeast(n, role, term), AtMost(n, role, term))
    if rng.random() < 0.25:
        return Not(expr)
    return expr


def random_axiom(rng):
    pick = rng.random()
    subject = Atomic(rng.choice(CLASSES))
    if pick < 0.3:
        return SubClassOf(subject, vp_expr(rng))
    if pick < 0.4:
        return SubClassOf(subject, Not(vp_expr(rng)))
    if pick < 0.6:
        return ClassAssertion(And(subject, vp_expr(rng)),
                              rng.choice(INDIVIDUALS))
    if pick < 0.85:
        return ClassAssertion(vp_expr(rng), rng.choice(INDIVIDUALS))
    return RoleAssertion(rng.choice(ROLES), rng.choice(INDIVIDUALS),
                         rng.choice(INDIVIDUALS))


def random_axioms(rng, max_axioms=6):
    return [random_axiom(rng) for _ in range(rng.randint(1, max_axioms))]
