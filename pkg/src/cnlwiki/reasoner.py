"""Tableau reasoning over the wiki's axiom fragment.

The fragment is ALCQ plus has-value edges, with the unique name assumption:
distinct individual names always denote distinct things (that includes the
"_a<n>" individuals minted for existential sentences).  Satisfiability is
decided by a standard tableau: negation normal form everywhere, TBox
internalization, anonymous successors for some/at-least, propagation for
only, a choose rule plus merging for at-most, and equality blocking (a node
whose label set already occurred on an ancestor stops generating) for
termination.  Branch exploration is deterministic -- nodes and expressions
are visited in sorted order and or-branches left first -- so identical inputs
always take identical paths.

Subsumption, instance retrieval and membership queries all reduce to
consistency probes; ``classify`` builds the transitively reduced hierarchy
with equivalent classes grouped.

Every reasoning call rechecks from scratch.  Desk-scale ontologies make that
affordable, and it keeps verdicts trivially independent of history.
"""

import itertools
from dataclasses import dataclass

from .axioms import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Bottom,
    ClassAssertion,
    HasValue,
    NoValue,
    Not,
    Only,
    Or,
    RoleAssertion,
    Some,
    SubClassOf,
    Top,
    functional,
    neg,
    nnf,
    signature,
    validate_axiom,
)
from .errors import InconsistentOntologyError
from .oracle import Interpretation

_TOP = Top()

_NODE_BUDGET = 4000


class Ontology:
    """An immutable axiom set with its derived signature."""

    __slots__ = ("axioms", "classes", "roles", "individuals")

    def __init__(self, axioms=()):
        axs = frozenset(axioms)
        for ax in axs:
            validate_axiom(ax)
        self.axioms = axs
        self.classes, self.roles, self.individuals = signature(axs)

    def with_axioms(self, extra) -> "Ontology":
        return Ontology(self.axioms | frozenset(extra))

    def __eq__(self, other):
        return isinstance(other, Ontology) and self.axioms == other.axioms

    def __hash__(self):
        return hash(self.axioms)

    def __repr__(self):
        return f"Ontology({len(self.axioms)} axioms)"


@dataclass(frozen=True)
class ConsistencyVerdict:
    consistent: bool
    witness: Interpretation = None   # a verified finite model, when one
                                     # could be read off the tableau


_KEY_CACHE = {}
_NEG_CACHE = {}


def _expr_key(expr):
    key = _KEY_CACHE.get(expr)
    if key is None:
        key = _KEY_CACHE[expr] = functional(expr)
    return key


def _neg(expr):
    negated = _NEG_CACHE.get(expr)
    if negated is None:
        negated = _NEG_CACHE[expr] = neg(expr)
    return negated


def _node_key(node: str):
    # named individuals sort before anonymous "?...." nodes, so contradictions
    # rooted in the ABox are branched on near the top of the search tree
    return (node.startswith("?"), node)


class _Tableau:
    __slots__ = ("labels", "edges", "named", "parent", "distinct",
                 "applied", "fresh", "created")

    def __init__(self):
        self.labels = {}     # node -> set of NNF class expressions
        self.edges = {}      # src -> {role -> set(dst)}
        self.named = set()
        self.parent = {}     # anonymous node -> creator
        self.distinct = set()  # frozenset pairs that may never merge
        self.applied = set()   # (node, expr) for generating rules
        self.fresh = 0
        self.created = 0

    def clone(self):
        dup = _Tableau()
        dup.labels = {k: set(v) for k, v in self.labels.items()}
        dup.edges = {s: {r: set(d) for r, d in rs.items()}
                     for s, rs in self.edges.items()}
        dup.named = set(self.named)
        dup.parent = dict(self.parent)
        dup.distinct = set(self.distinct)
        dup.applied = set(self.applied)
        dup.fresh = self.fresh
        dup.created = self.created
        return dup

    # -- structure helpers --

    def successors(self, x, role):
        return self.edges.get(x, {}).get(role, ())

    def add_edge(self, src, role, dst):
        self.edges.setdefault(src, {}).setdefault(role, set()).add(dst)

    def new_node(self, creator, label, tbox):
        self.fresh += 1
        self.created += 1
        if self.created > _NODE_BUDGET:
            raise RuntimeError("tableau node budget exhausted")
        node = f"?{self.fresh:04d}"
        self.labels[node] = set(tbox)
        self.labels[node].update(label)
        if creator is not None:
            self.parent[node] = creator
        return node

    def has_concept(self, y, expr):
        return isinstance(expr, Top) or expr in self.labels[y]

    def blocked(self, x):
        """Equality blocking: some strict ancestor with an identical label."""
        if x in self.named:
            return False
        label = self.labels[x]
        node = self.parent.get(x)
        while node is not None:
            if self.labels[node] == label:
                return True
            node = self.parent.get(node)
        return False

    def merge(self, src, dst):
        """Fold node src into dst (src must be anonymous)."""
        self.labels[dst].update(self.labels.pop(src))
        src_edges = self.edges.pop(src, {})
        for role, dsts in src_edges.items():
            for y in dsts:
                self.add_edge(dst, role, y if y != src else dst)
        for rs in self.edges.values():
            for dsts in rs.values():
                if src in dsts:
                    dsts.discard(src)
                    dsts.add(dst)
        self.distinct = {
            frozenset(dst if n == src else n for n in pair)
            for pair in self.distinct}
        self.applied = {(dst if n == src else n, e) for n, e in self.applied}
        self.parent.pop(src, None)
        for node, par in list(self.parent.items()):
            if par == src:
                self.parent[node] = dst

    def mergeable(self, a, b):
        if a in self.named and b in self.named:
            return False
        return frozenset((a, b)) not in self.distinct


def _clash(t: _Tableau) -> bool:
    for x, label in t.labels.items():
        for expr in label:
            if isinstance(expr, Bottom):
                return True
            if isinstance(expr, Not) and expr.expr in label:
                return True
            if (isinstance(expr, NoValue)
                    and expr.individual in t.successors(x, expr.role)):
                return True
    return False


def _apply_deterministic(t: _Tableau, unfold) -> bool:
    """Forced label growth, run to fixpoint.

    Covers and-decomposition, has-value edges, only-propagation, lazy
    unfolding of absorbed subclass axioms, and or-elimination when one
    disjunct is already contradicted (that branch would clash immediately,
    so taking the other one loses nothing).
    """
    changed = False
    busy = True
    while busy:
        busy = False
        for x in list(t.labels):
            label = t.labels[x]
            for expr in list(label):
                if isinstance(expr, And):
                    if expr.left not in label or expr.right not in label:
                        label.add(expr.left)
                        label.add(expr.right)
                        busy = changed = True
                elif isinstance(expr, HasValue):
                    if expr.individual not in t.successors(x, expr.role):
                        t.add_edge(x, expr.role, expr.individual)
                        busy = changed = True
                elif isinstance(expr, Only):
                    for y in list(t.successors(x, expr.role)):
                        if not isinstance(expr.expr, Top) \
                                and expr.expr not in t.labels[y]:
                            t.labels[y].add(expr.expr)
                            busy = changed = True
                elif isinstance(expr, Or):
                    if expr.left in label or expr.right in label:
                        continue
                    if _neg(expr.left) in label:
                        label.add(expr.right)
                        busy = changed = True
                    elif _neg(expr.right) in label:
                        label.add(expr.left)
                        busy = changed = True
                elif isinstance(expr, Atomic):
                    for residual in unfold.get(expr.name, ()):
                        if residual not in label:
                            label.add(residual)
                            busy = changed = True
    return changed


def _find_generator(t: _Tableau):
    """First applicable some/at-least application, in deterministic order."""
    for x in sorted(t.labels, key=_node_key):
        if t.blocked(x):
            continue
        for expr in sorted(t.labels[x], key=_expr_key):
            if (x, expr) in t.applied:
                continue
            if isinstance(expr, Some):
                satisfied = any(t.has_concept(y, expr.expr)
                                for y in t.successors(x, expr.role))
                return ("some", x, expr) if not satisfied else ("skip", x, expr)
            if isinstance(expr, AtLeast):
                members = sorted(y for y in t.successors(x, expr.role)
                                 if t.has_concept(y, expr.expr))
                if len(members) >= expr.n and _has_distinct_clique(
                        t, members, expr.n):
                    return ("skip", x, expr)
                return ("at-least", x, expr)
    return None


def _has_distinct_clique(t: _Tableau, members, n) -> bool:
    if n <= 1:
        return len(members) >= n
    for combo in itertools.islice(itertools.combinations(members, n), 200):
        if all(frozenset(p) in t.distinct or
               (p[0] in t.named and p[1] in t.named)
               for p in itertools.combinations(combo, 2)):
            return True
    return False


def _find_choose(t: _Tableau):
    for x in sorted(t.labels, key=_node_key):
        for expr in sorted(t.labels[x], key=_expr_key):
            if not isinstance(expr, AtMost) or isinstance(expr.expr, Top):
                continue
            negated = neg(expr.expr)
            for y in sorted(t.successors(x, expr.role)):
                if expr.expr not in t.labels[y] and negated not in t.labels[y]:
                    return (x, expr, y, negated)
    return None


def _find_overfull(t: _Tableau):
    for x in sorted(t.labels, key=_node_key):
        for expr in sorted(t.labels[x], key=_expr_key):
            if not isinstance(expr, AtMost):
                continue
            members = sorted(y for y in t.successors(x, expr.role)
                             if t.has_concept(y, expr.expr))
            if len(members) > expr.n:
                return (x, expr, members)
    return None


def _find_or(t: _Tableau):
    for x in sorted(t.labels, key=_node_key):
        for expr in sorted(t.labels[x], key=_expr_key):
            if isinstance(expr, Or):
                label = t.labels[x]
                if expr.left not in label and expr.right not in label:
                    return (x, expr)
    return None


def _step(t: _Tableau, rules):
    """One saturation move.

    Returns None when t is fully saturated, or a list of follow-up states:
    a single-element list for deterministic progress (usually t itself,
    mutated), several states for a branch, an empty list for a dead end.

    Generating rules (some/at-least) fire only when nothing else applies
    anywhere, so labels are stable whenever blocking is evaluated.  Expanding
    before the disjunctions are resolved would briefly un-block descendants
    after every or-resolution and let the tree creep deeper forever.
    """
    unfold, tbox = rules
    if _clash(t):
        return []
    if _apply_deterministic(t, unfold):
        return [t] if not _clash(t) else []

    choose = _find_choose(t)
    if choose is not None:
        x, expr, y, negated = choose
        branches = []
        for option in (expr.expr, negated):
            branch = t.clone()
            branch.labels[y].add(option)
            branches.append(branch)
        return branches

    overfull = _find_overfull(t)
    if overfull is not None:
        x, expr, members = overfull
        branches = []
        for a, b in itertools.combinations(members, 2):
            if not t.mergeable(a, b):
                continue
            branch = t.clone()
            if b in branch.named:
                branch.merge(a, b)
            else:
                branch.merge(b, a)
            branches.append(branch)
        return branches   # empty <=> the at-most bound is violated for good

    disjunction = _find_or(t)
    if disjunction is not None:
        x, expr = disjunction
        branches = []
        for option in (expr.left, expr.right):
            branch = t.clone()
            branch.labels[x].add(option)
            branches.append(branch)
        return branches

    move = _find_generator(t)
    if move is not None:
        kind, x, expr = move
        t.applied.add((x, expr))
        if kind == "some":
            y = t.new_node(x, (expr.expr,) if not isinstance(
                expr.expr, Top) else (), tbox)
            t.add_edge(x, expr.role, y)
        elif kind == "at-least":
            fresh = []
            seed = () if isinstance(expr.expr, Top) else (expr.expr,)
            for _ in range(expr.n):
                y = t.new_node(x, seed, tbox)
                t.add_edge(x, expr.role, y)
                fresh.append(y)
            for a, b in itertools.combinations(fresh, 2):
                t.distinct.add(frozenset((a, b)))
        return [t]

    return None


def _saturate(t: _Tableau, rules):
    """Depth-first search for a clash-free saturated tableau."""
    stack = [t]
    while stack:
        state = stack.pop()
        follow = _step(state, rules)
        if follow is None:
            return state
        stack.extend(reversed(follow))   # leftmost alternative on top
    return None


def _seed(ontology: Ontology, tbox) -> _Tableau:
    t = _Tableau()
    for name in ontology.individuals:
        t.labels[name] = set(tbox)
        t.named.add(name)
    if not t.labels:
        # interpretation domains are non-empty even without individuals
        t.new_node(None, (), tbox)
    for ax in ontology.axioms:
        if isinstance(ax, ClassAssertion):
            t.labels[ax.individual].add(nnf(ax.expr))
        elif isinstance(ax, RoleAssertion):
            t.add_edge(ax.subject, ax.role, ax.object)
    return t


def _flatten_and(expr):
    if isinstance(expr, And):
        return _flatten_and(expr.left) + _flatten_and(expr.right)
    return [expr]


def _internalize(ontology: Ontology):
    """Split the TBox into lazy-unfolding rules and global disjunctions.

    A subclass axiom whose left side contains an atomic conjunct A is
    "absorbed": it fires only on nodes labelled A (atomic extensions in the
    extracted model are exactly the labels, so nothing is lost).  Everything
    else is internalized as a disjunction carried by every node.
    """
    unfold = {}
    tbox = []
    for ax in sorted((a for a in ontology.axioms if isinstance(a, SubClassOf)),
                     key=functional):
        conjuncts = _flatten_and(nnf(ax.sub))
        head_index = min(
            (i for i, c in enumerate(conjuncts) if isinstance(c, Atomic)),
            key=lambda i: conjuncts[i].name, default=None)
        if head_index is None:
            tbox.append(Or(neg(ax.sub), nnf(ax.sup)))
            continue
        head = conjuncts.pop(head_index)
        residual = nnf(ax.sup)
        for c in sorted(conjuncts, key=_expr_key, reverse=True):
            residual = Or(_neg(c), residual)
        unfold.setdefault(head.name, []).append(residual)
    return unfold, tuple(tbox)


def _extract_witness(t: _Tableau, ontology: Ontology):
    """A finite model read off the saturated tableau, or None.

    Blocked nodes are folded onto their blockers: the subtree under a
    blocked node is dropped and edges into it are redirected to the
    equal-labelled ancestor.  Without inverse roles the redirect preserves
    every constraint except one corner (a has-value edge colliding with the
    redirect target), so the candidate is verified by direct evaluation
    before it is returned.
    """
    from .oracle import check_model

    blocked = {x for x in t.labels if t.blocked(x)}

    def live(x):
        node = t.parent.get(x)
        while node is not None:
            if node in blocked:
                return False
            node = t.parent.get(node)
        return x not in blocked

    def fold(x):
        while x in blocked:
            node = t.parent.get(x)
            while t.labels[node] != t.labels[x]:
                node = t.parent[node]
            x = node
        return x

    domain = tuple(sorted(x for x in t.labels if live(x)))
    kept = set(domain)
    classes = {c: frozenset(x for x in domain if Atomic(c) in t.labels[x])
               for c in ontology.classes}
    roles = {}
    for role in ontology.roles:
        edges = set()
        for x in domain:
            for y in t.successors(x, role):
                if y in kept:
                    edges.add((x, y))
                elif y in blocked:
                    edges.add((x, fold(y)))
        roles[role] = frozenset(edges)
    individuals = {name: name for name in ontology.individuals}
    witness = Interpretation(domain=domain, classes=classes, roles=roles,
                             individuals=individuals)
    if blocked and not check_model(witness, ontology):
        return None
    return witness


def is_consistent(ontology: Ontology) -> ConsistencyVerdict:
    """Tableau satisfiability; ships a checkable model when possible."""
    unfold, tbox = _internalize(ontology)
    t = _seed(ontology, tbox)
    result = _saturate(t, (unfold, tbox))
    if result is None:
        return ConsistencyVerdict(False)
    return ConsistencyVerdict(True, _extract_witness(result, ontology))


def _probe_name(ontology: Ontology) -> str:
    name = "_probe"
    while name in ontology.individuals:
        name += "0"
    return name


def entails_subsumption(ontology: Ontology, sub: str, sup: str) -> bool:
    if sub == sup:
        return True
    probe = ClassAssertion(And(Atomic(sub), Not(Atomic(sup))),
                           _probe_name(ontology))
    return not is_consistent(ontology.with_axioms([probe])).consistent


def entails_membership(ontology: Ontology, expr, individual: str) -> bool:
    probe = ClassAssertion(nnf(Not(expr)), individual)
    return not is_consistent(ontology.with_axioms([probe])).consistent


@dataclass(frozen=True)
class ClassHierarchy:
    """Equivalence groups of named classes plus direct subsumption edges.

    Edges connect group representatives (the lexicographically first member)
    and skip anything implied by transitivity.
    """

    groups: tuple
    edges: tuple

    def group_of(self, name):
        for group in self.groups:
            if name in group:
                return group
        return None


def _require_consistent(ontology: Ontology):
    if not is_consistent(ontology).consistent:
        raise InconsistentOntologyError(
            "the ontology is inconsistent; fix it before querying")


def classify(ontology: Ontology) -> ClassHierarchy:
    """Direct-subsumption order over the named classes."""
    _require_consistent(ontology)
    names = list(ontology.classes)
    subsumes = {(a, b): entails_subsumption(ontology, a, b)
                for a in names for b in names}
    rep = {}
    for a in names:
        group = sorted(b for b in names
                       if subsumes[(a, b)] and subsumes[(b, a)])
        rep[a] = group[0]
    groups = sorted({tuple(sorted(b for b in names if rep[b] == r))
                     for r in rep.values()})
    reps = sorted({rep[a] for a in names})
    edges = []
    for a in reps:
        for b in reps:
            if a == b or not subsumes[(a, b)]:
                continue
            direct = not any(
                c not in (a, b) and subsumes[(a, c)] and subsumes[(c, b)]
                for c in reps)
            if direct:
                edges.append((a, b))
    return ClassHierarchy(groups=tuple(groups), edges=tuple(sorted(edges)))


def retrieve(ontology: Ontology, expr) -> tuple:
    """Certain answers: individuals that belong to ``expr`` in every model."""
    _require_consistent(ontology)
    return tuple(i for i in ontology.individuals
                 if entails_membership(ontology, expr, i))


def memberships(ontology: Ontology, individual: str) -> tuple:
    """Named classes the individual certainly belongs to."""
    _require_consistent(ontology)
    return tuple(c for c in ontology.classes
                 if entails_membership(ontology, Atomic(c), individual))
