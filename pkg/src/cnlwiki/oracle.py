"""Bounded brute-force model search, independent of the tableau.

``oracle_find_model`` enumerates every interpretation over domains of size 1
up to ``max_domain`` (backtracking bit by bit over class memberships and role
edges, with three-valued evaluation to prune branches that already falsify an
axiom) and returns the first one that satisfies all axioms.  It exists purely
to cross-check the tableau: a found model certifies consistency, exhaustion
certifies that no model of bounded size exists.

``check_model`` evaluates axioms directly against a finite interpretation and
is used to validate the model witnesses the tableau emits.

The unique name assumption is baked in: the named individuals are pinned to
the first domain elements, so a domain smaller than the individual count is
never attempted.
"""

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
    signature,
)
from .errors import SearchSpaceExceededError, SignatureMismatchError

MAX_ORACLE_DOMAIN = 4
_DEFAULT_STEP_LIMIT = 3_000_000


@dataclass(frozen=True)
class Interpretation:
    """A finite model candidate.

    ``domain`` holds opaque element ids; ``classes`` and ``roles`` map names
    to extensions; ``individuals`` maps each named individual to its element.
    """

    domain: tuple
    classes: dict
    roles: dict
    individuals: dict

    def size(self) -> int:
        return len(self.domain)


# -- two-valued evaluation (check_model) --------------------------------------

def _holds(interp: Interpretation, expr, element) -> bool:
    if isinstance(expr, Atomic):
        return element in interp.classes[expr.name]
    if isinstance(expr, Top):
        return True
    if isinstance(expr, Bottom):
        return False
    if isinstance(expr, Not):
        return not _holds(interp, expr.expr, element)
    if isinstance(expr, And):
        return (_holds(interp, expr.left, element)
                and _holds(interp, expr.right, element))
    if isinstance(expr, Or):
        return (_holds(interp, expr.left, element)
                or _holds(interp, expr.right, element))
    successors = [b for (a, b) in interp.roles[expr.role] if a == element]
    if isinstance(expr, Some):
        return any(_holds(interp, expr.expr, y) for y in successors)
    if isinstance(expr, Only):
        return all(_holds(interp, expr.expr, y) for y in successors)
    if isinstance(expr, AtLeast):
        return sum(_holds(interp, expr.expr, y) for y in successors) >= expr.n
    if isinstance(expr, AtMost):
        return sum(_holds(interp, expr.expr, y) for y in successors) <= expr.n
    if isinstance(expr, HasValue):
        return interp.individuals[expr.individual] in successors
    if isinstance(expr, NoValue):
        return interp.individuals[expr.individual] not in successors
    raise SignatureMismatchError(f"cannot evaluate {expr!r}")


def _check_signature(interp: Interpretation, ontology) -> None:
    classes, roles, individuals = signature(ontology.axioms)
    missing = [c for c in classes if c not in interp.classes]
    missing += [r for r in roles if r not in interp.roles]
    missing += [i for i in individuals if i not in interp.individuals]
    if missing:
        raise SignatureMismatchError(
            f"interpretation lacks {', '.join(sorted(missing))}")


def check_model(interp: Interpretation, ontology) -> bool:
    """Does the interpretation satisfy every axiom? (Direct evaluation.)"""
    _check_signature(interp, ontology)
    for ax in ontology.axioms:
        if isinstance(ax, SubClassOf):
            for element in interp.domain:
                if _holds(interp, ax.sub, element) and \
                        not _holds(interp, ax.sup, element):
                    return False
        elif isinstance(ax, ClassAssertion):
            if not _holds(interp, ax.expr, interp.individuals[ax.individual]):
                return False
        elif isinstance(ax, RoleAssertion):
            pair = (interp.individuals[ax.subject],
                    interp.individuals[ax.object])
            if pair not in interp.roles[ax.role]:
                return False
    return True


# -- three-valued evaluation over partial assignments --------------------------

_T, _F, _U = True, False, None


def _and3(a, b):
    if a is _F or b is _F:
        return _F
    if a is _T and b is _T:
        return _T
    return _U


def _or3(a, b):
    if a is _T or b is _T:
        return _T
    if a is _F and b is _F:
        return _F
    return _U


def _not3(a):
    return _U if a is _U else (not a)


def _quantifier_depth(expr) -> int:
    if isinstance(expr, (Atomic, Top, Bottom)):
        return 0
    if isinstance(expr, Not):
        return _quantifier_depth(expr.expr)
    if isinstance(expr, (And, Or)):
        return max(_quantifier_depth(expr.left), _quantifier_depth(expr.right))
    if isinstance(expr, (HasValue, NoValue)):
        return 1
    return 1 + _quantifier_depth(expr.expr)


def _axiom_depth(ax) -> int:
    if isinstance(ax, SubClassOf):
        return max(_quantifier_depth(ax.sub), _quantifier_depth(ax.sup))
    if isinstance(ax, ClassAssertion):
        return _quantifier_depth(ax.expr)
    return 0


class _Search:
    """Backtracking search over class bits and role bits for one domain size.

    Class memberships are assigned first.  When no axiom nests one role
    quantifier inside another, an element's truth depends only on the class
    matrix and its own outgoing edges, so each element's row can then be
    searched independently; deeper nesting falls back to a joint search over
    all row bits with three-valued pruning.
    """

    def __init__(self, axioms, classes, roles, ind_elem, size, counter, limit):
        self.axioms = axioms
        self.classes = classes
        self.roles = roles
        self.ind_elem = ind_elem
        self.size = size
        self.counter = counter
        self.limit = limit
        self.cls = {(c, e): _U for c in classes for e in range(size)}
        self.rol = {(r, a, b): _U for r in roles
                    for a in range(size) for b in range(size)}
        self.rows_decouple = all(_axiom_depth(ax) <= 1 for ax in axioms)

    def eval_expr(self, expr, e):
        if isinstance(expr, Atomic):
            return self.cls[(expr.name, e)]
        if isinstance(expr, Top):
            return _T
        if isinstance(expr, Bottom):
            return _F
        if isinstance(expr, Not):
            return _not3(self.eval_expr(expr.expr, e))
        if isinstance(expr, And):
            return _and3(self.eval_expr(expr.left, e),
                         self.eval_expr(expr.right, e))
        if isinstance(expr, Or):
            return _or3(self.eval_expr(expr.left, e),
                        self.eval_expr(expr.right, e))
        if isinstance(expr, HasValue):
            return self.rol[(expr.role, e, self.ind_elem[expr.individual])]
        if isinstance(expr, NoValue):
            return _not3(
                self.rol[(expr.role, e, self.ind_elem[expr.individual])])
        # quantified: count certain and possible (role, member) pairs
        sure = 0
        possible = 0
        for f in range(self.size):
            edge = self.rol[(expr.role, e, f)]
            if edge is _F:
                continue
            member = self.eval_expr(expr.expr, f)
            if member is _F:
                continue
            if edge is _T and member is _T:
                sure += 1
            possible += 1
        if isinstance(expr, Some):
            return _T if sure >= 1 else (_F if possible == 0 else _U)
        if isinstance(expr, AtLeast):
            return _T if sure >= expr.n else (
                _F if possible < expr.n else _U)
        if isinstance(expr, AtMost):
            return _F if sure > expr.n else (
                _T if possible <= expr.n else _U)
        if isinstance(expr, Only):
            # false as soon as one certain edge leads to a certain non-member
            verdict = _T
            for f in range(self.size):
                edge = self.rol[(expr.role, e, f)]
                if edge is _F:
                    continue
                member = self.eval_expr(expr.expr, f)
                if edge is _T and member is _F:
                    return _F
                if member is not _T:
                    verdict = _U
            return verdict
        raise SignatureMismatchError(f"cannot evaluate {expr!r}")

    def eval_axiom(self, ax):
        if isinstance(ax, SubClassOf):
            verdict = _T
            for e in range(self.size):
                value = _or3(_not3(self.eval_expr(ax.sub, e)),
                             self.eval_expr(ax.sup, e))
                if value is _F:
                    return _F
                if value is _U:
                    verdict = _U
            return verdict
        if isinstance(ax, ClassAssertion):
            return self.eval_expr(ax.expr, self.ind_elem[ax.individual])
        # role assertions are pinned before the search starts
        return self.rol[(ax.role, self.ind_elem[ax.subject],
                         self.ind_elem[ax.object])]

    def status(self):
        """(all_true, any_false) over the axioms."""
        all_true = True
        for ax in self.axioms:
            value = self.eval_axiom(ax)
            if value is _F:
                return False, True
            if value is not _T:
                all_true = False
        return all_true, False

    def _pin_assertions(self) -> bool:
        """Fix bits that assertions force directly; False on contradiction."""
        for ax in self.axioms:
            if isinstance(ax, RoleAssertion):
                key = (ax.role, self.ind_elem[ax.subject],
                       self.ind_elem[ax.object])
                self.rol[key] = _T
            elif isinstance(ax, ClassAssertion):
                stack = [ax.expr]
                while stack:
                    expr = stack.pop()
                    if isinstance(expr, And):
                        stack.append(expr.left)
                        stack.append(expr.right)
                    elif isinstance(expr, Atomic):
                        key = (expr.name, self.ind_elem[ax.individual])
                        if self.cls[key] is _F:
                            return False
                        self.cls[key] = _T
                    elif isinstance(expr, Not) and isinstance(expr.expr, Atomic):
                        key = (expr.expr.name, self.ind_elem[ax.individual])
                        if self.cls[key] is _T:
                            return False
                        self.cls[key] = _F
        return True

    def run(self):
        if not self._pin_assertions():
            return False
        class_vars = [(c, e) for e in range(self.size) for c in self.classes
                      if self.cls[(c, e)] is _U]
        return self._assign_classes(class_vars, 0)

    def _tick(self):
        self.counter[0] += 1
        if self.counter[0] > self.limit:
            raise SearchSpaceExceededError(
                "bounded model search exceeded its step limit")

    def _assign_classes(self, variables, index):
        self._tick()
        all_true, any_false = self.status()
        if any_false:
            return False
        if index == len(variables):
            return self._assign_rows()
        key = variables[index]
        for value in (_F, _T):
            self.cls[key] = value
            if self._assign_classes(variables, index + 1):
                return True
        self.cls[key] = _U
        return False

    def _free_row_bits(self, e):
        return [(r, e, f) for r in self.roles for f in range(self.size)
                if self.rol[(r, e, f)] is _U]

    def _element_ok(self, e):
        for ax in self.axioms:
            if isinstance(ax, SubClassOf):
                value = _or3(_not3(self.eval_expr(ax.sub, e)),
                             self.eval_expr(ax.sup, e))
            elif isinstance(ax, ClassAssertion):
                if self.ind_elem[ax.individual] != e:
                    continue
                value = self.eval_expr(ax.expr, e)
            else:
                continue
            if value is not _T:
                return False
        return True

    def _assign_rows(self):
        if not self.rows_decouple:
            row_vars = [key for key in
                        ((r, a, b) for a in range(self.size)
                         for r in self.roles for b in range(self.size))
                        if self.rol[key] is _U]
            return self._assign_rows_joint(row_vars, 0)
        assigned = []
        for e in range(self.size):
            free = self._free_row_bits(e)
            found = False
            for mask in range(1 << len(free)):
                self._tick()
                for i, key in enumerate(free):
                    self.rol[key] = bool((mask >> i) & 1)
                if self._element_ok(e):
                    found = True
                    break
            if not found:
                for key in free:
                    self.rol[key] = _U
                for keys in assigned:
                    for key in keys:
                        self.rol[key] = _U
                return False
            assigned.append(free)
        return True

    def _assign_rows_joint(self, variables, index):
        self._tick()
        all_true, any_false = self.status()
        if any_false:
            return False
        if all_true:
            for key, value in self.rol.items():
                if value is _U:
                    self.rol[key] = _F
            return True
        if index == len(variables):
            return False
        key = variables[index]
        for value in (_F, _T):
            self.rol[key] = value
            if self._assign_rows_joint(variables, index + 1):
                return True
        self.rol[key] = _U
        return False

    def interpretation(self, classes, roles, individuals):
        domain = tuple(range(self.size))
        return Interpretation(
            domain=domain,
            classes={c: frozenset(e for e in domain
                                  if self.cls[(c, e)] is _T)
                     for c in classes},
            roles={r: frozenset((a, b) for a in domain for b in domain
                                if self.rol[(r, a, b)] is _T)
                   for r in roles},
            individuals=dict(individuals),
        )


def oracle_find_model(ontology, max_domain: int = MAX_ORACLE_DOMAIN,
                      step_limit: int = _DEFAULT_STEP_LIMIT):
    """First model over domains 1..max_domain, or None if there is none.

    Exhaustive up to the bound and the step limit; raises
    SearchSpaceExceededError instead of silently giving up.
    """
    if not 1 <= max_domain <= MAX_ORACLE_DOMAIN:
        raise SearchSpaceExceededError(
            f"max_domain must be between 1 and {MAX_ORACLE_DOMAIN}")
    classes, roles, individuals = signature(ontology.axioms)
    ind_elem = {name: i for i, name in enumerate(individuals)}
    counter = [0]
    for size in range(max(1, len(individuals)), max_domain + 1):
        search = _Search(ontology.axioms, classes, roles, ind_elem,
                         size, counter, step_limit)
        if search.run():
            return search.interpretation(classes, roles, ind_elem)
    return None
