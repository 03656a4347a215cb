"""The controlled-English grammar: parsing and exact next-token prediction.

The grammar is fixed (see ``_RULES``); the vocabulary plugs into it through
six lexical categories plus numbers.  Declarative sentences end in ".",
questions in "?".  Relative phrases ("country that borders a sea") attach to
the noun directly before them and objects never take "every", which keeps
every accepted sentence uniquely parseable.

Parsing is chart-based (Earley item sets, one per token position).  Because
every nonterminal both is reachable and derives at least one terminal string
(checked at import time), an item set's scannable terminals are exactly the
tokens that can continue the prefix into a full sentence -- that is what
makes ``predict_next`` exact rather than approximate, and it is why the
predictive editor can never paint the user into a corner.

Numbers: tokens 0-100 exist, but the grammar only accepts 1-100 after a
quantity phrase ("at most", "exactly", ...).  That keeps "less than 0" and
"at least 0" unwritable, so every accepted sentence translates to cardinality
bounds that are well-formed ("less than 1" is fine and means at most 0).
"""

from dataclasses import dataclass

from .errors import LimitExceededError, SentenceSyntaxError
from .lexicon import MAX_NUMBER, Lexicon, Token
from .sentences import (
    ClassTerm,
    Declarative,
    ExistsObject,
    IndividualObject,
    IndividualSubject,
    Isa,
    ModalVp,
    NoneOfObject,
    NumObject,
    Passive,
    QuantSubject,
    VerbPhrase,
    WhQuestion,
    YnQuestion,
)

START = "sentence"

MAX_ENUMERATE_LEN = 14
DEFAULT_ENUMERATE_CAP = 500_000


# -- terminal symbols --------------------------------------------------------

@dataclass(frozen=True)
class Word:
    """One specific function word."""

    word: str


@dataclass(frozen=True)
class Cat:
    """Any vocabulary token of one lexical category."""

    category: str


@dataclass(frozen=True)
class Num:
    """A number token; "one" matches exactly 1, "many" matches 2..100."""

    which: str


_NUM_ONE = Num("one")
_NUM_MANY = Num("many")


def token_symbol(token: Token):
    """The unique terminal symbol a token can match, or None."""
    if token.kind == "function-word":
        return Word(token.surface)
    if token.kind == "lexical":
        return Cat(token.category)
    if token.value == 1:
        return _NUM_ONE
    if 2 <= token.value <= MAX_NUMBER:
        return _NUM_MANY
    return None


def _is_terminal(symbol) -> bool:
    return isinstance(symbol, (Word, Cat, Num))


# -- productions ---------------------------------------------------------------

def _w(word):
    return Word(word)


def _c(category):
    return Cat(category)


_PN = _c("proper-name")
_NOUN_SG = _c("noun-singular")
_NOUN_PL = _c("noun-plural")
_TV_SG = _c("tv-third-singular")
_TV_PL = _c("tv-plural")
_TV_PP = _c("tv-past-participle")

_RULES = [
    ("sentence", (("declarative",),), lambda c: c[0]),
    ("sentence", (("question",),), lambda c: c[0]),
    ("declarative", (("subject",), ("vp_sg",), _w(".")),
     lambda c: Declarative(c[0], c[1])),
    ("question", (_w("which"), ("cn_pl",), ("vp_pl",), _w("?")),
     lambda c: WhQuestion(c[1], c[2])),
    ("question", (_w("is"), _PN, ("art",), ("cn_sg",), _w("?")),
     lambda c: YnQuestion(c[1].lemma, c[3])),
    ("subject", (_w("every"), ("cn_sg",)),
     lambda c: QuantSubject("every", c[1])),
    ("subject", (_w("no"), ("cn_sg",)),
     lambda c: QuantSubject("no", c[1])),
    ("subject", (("art",), ("cn_sg",)),
     lambda c: QuantSubject("a", c[1])),
    ("subject", (_PN,),
     lambda c: IndividualSubject(c[0].lemma)),
    ("art", (_w("a"),), lambda c: "a"),
    ("art", (_w("an"),), lambda c: "an"),
    ("cn_sg", (_NOUN_SG,), lambda c: ClassTerm(c[0].lemma)),
    ("cn_sg", (_NOUN_SG, _w("that"), ("vp_sg",)),
     lambda c: ClassTerm(c[0].lemma, c[2])),
    ("cn_pl", (_NOUN_PL,), lambda c: ClassTerm(c[0].lemma)),
    ("cn_pl", (_NOUN_PL, _w("that"), ("vp_pl",)),
     lambda c: ClassTerm(c[0].lemma, c[2])),
    ("vp_sg", (_w("is"), ("art",), ("cn_sg",)),
     lambda c: Isa(True, c[2])),
    ("vp_sg", (_w("is"), _w("not"), ("art",), ("cn_sg",)),
     lambda c: Isa(False, c[3])),
    ("vp_sg", (_TV_SG, ("obj",)),
     lambda c: VerbPhrase(True, c[0].lemma, c[1])),
    ("vp_sg", (_w("does"), _w("not"), _TV_PL, ("obj",)),
     lambda c: VerbPhrase(False, c[2].lemma, c[3])),
    ("vp_sg", (_w("is"), _TV_PP, _w("by"), _PN),
     lambda c: Passive(c[1].lemma, c[3].lemma)),
    ("vp_sg", (("modal",), _TV_PL, ("obj",)),
     lambda c: ModalVp(c[0], c[1].lemma, c[2])),
    ("vp_pl", (_w("are"), ("cn_pl",)),
     lambda c: Isa(True, c[1])),
    ("vp_pl", (_w("are"), _w("not"), ("cn_pl",)),
     lambda c: Isa(False, c[2])),
    ("vp_pl", (_TV_PL, ("obj",)),
     lambda c: VerbPhrase(True, c[0].lemma, c[1])),
    ("vp_pl", (_w("do"), _w("not"), _TV_PL, ("obj",)),
     lambda c: VerbPhrase(False, c[2].lemma, c[3])),
    ("vp_pl", (_w("are"), _TV_PP, _w("by"), _PN),
     lambda c: Passive(c[1].lemma, c[3].lemma)),
    ("vp_pl", (("modal",), _TV_PL, ("obj",)),
     lambda c: ModalVp(c[0], c[1].lemma, c[2])),
    ("modal", (_w("can"),), lambda c: "can"),
    ("modal", (_w("must"),), lambda c: "must"),
    ("obj", (("art",), ("cn_sg",)),
     lambda c: ExistsObject(c[1])),
    ("obj", (_w("no"), ("cn_sg",)),
     lambda c: NoneOfObject(c[1])),
    ("obj", (_PN,),
     lambda c: IndividualObject(c[0].lemma)),
    ("obj", (("numq",), _NUM_ONE, ("cn_sg",)),
     lambda c: NumObject(c[0], 1, c[2])),
    ("obj", (("numq",), _NUM_MANY, ("cn_pl",)),
     lambda c: NumObject(c[0], c[1].value, c[2])),
    ("numq", (_w("at"), _w("most")), lambda c: "at-most"),
    ("numq", (_w("at"), _w("least")), lambda c: "at-least"),
    ("numq", (_w("exactly"),), lambda c: "exactly"),
    ("numq", (_w("more"), _w("than")), lambda c: "more-than"),
    ("numq", (_w("less"), _w("than")), lambda c: "less-than"),
]

# Nonterminals are written ("name",) in rule bodies; normalize to plain
# strings internally and precompute lookup tables.
HEADS = []
BODIES = []
ACTIONS = []
_BY_HEAD = {}
for _head, _body, _action in _RULES:
    _rid = len(HEADS)
    HEADS.append(_head)
    BODIES.append(tuple(s[0] if isinstance(s, tuple) and isinstance(s[0], str)
                        else s for s in _body))
    ACTIONS.append(_action)
    _BY_HEAD.setdefault(_head, []).append(_rid)

NONTERMINALS = frozenset(_BY_HEAD)


def _check_reduced():
    """Every nonterminal must be reachable and derive a terminal string.

    Prediction exactness rests on this: any live chart item can then be
    finished into a complete sentence, so "scannable" equals "continuable".
    """
    productive = set()
    changed = True
    while changed:
        changed = False
        for rid, head in enumerate(HEADS):
            if head in productive:
                continue
            if all(_is_terminal(s) or s in productive for s in BODIES[rid]):
                productive.add(head)
                changed = True
    reachable = {START}
    queue = [START]
    while queue:
        nt = queue.pop()
        for rid in _BY_HEAD[nt]:
            for s in BODIES[rid]:
                if not _is_terminal(s) and s not in reachable:
                    reachable.add(s)
                    queue.append(s)
    assert productive == NONTERMINALS, f"unproductive: {NONTERMINALS - productive}"
    assert reachable == NONTERMINALS, f"unreachable: {NONTERMINALS - reachable}"
    for body in BODIES:
        assert body, "empty productions are not supported"


_check_reduced()


# -- prediction ----------------------------------------------------------------

@dataclass(frozen=True)
class Prediction:
    """What may come next: concrete function words plus open categories.

    The "number" category stands for the integers 1..100 (0 is never
    grammatical).  Categories expand against the live vocabulary at display
    time.
    """

    function_words: frozenset
    categories: frozenset

    def is_empty(self) -> bool:
        return not self.function_words and not self.categories

    def as_dict(self) -> dict:
        return {"function_words": sorted(self.function_words),
                "categories": sorted(self.categories)}


EMPTY_PREDICTION = Prediction(frozenset(), frozenset())


def _prediction_from_symbols(symbols) -> Prediction:
    words = set()
    categories = set()
    for s in symbols:
        if isinstance(s, Word):
            words.add(s.word)
        elif isinstance(s, Cat):
            categories.add(s.category)
        else:
            categories.add("number")
    return Prediction(frozenset(words), frozenset(categories))


# -- the chart -----------------------------------------------------------------

class _ItemSet:
    __slots__ = ("items", "wait", "scan")

    def __init__(self):
        self.items = set()    # (rule_id, dot, origin)
        self.wait = {}        # nonterminal -> [items with the dot before it]
        self.scan = {}        # terminal -> [items with the dot before it]


class ChartWalker:
    """Incremental Earley chart over a token sequence.

    ``advance`` feeds one token (returns False and leaves the chart unchanged
    when the token cannot be scanned); ``retract`` pops the last token, which
    makes depth-first walks over many related prefixes cheap.
    """

    def __init__(self):
        seed = [(rid, 0, 0) for rid in _BY_HEAD[START]]
        self.sets = [self._close(seed, 0)]

    @property
    def position(self) -> int:
        return len(self.sets) - 1

    def _close(self, seed, position) -> _ItemSet:
        chart = _ItemSet()
        agenda = list(seed)
        items = chart.items
        while agenda:
            item = agenda.pop()
            if item in items:
                continue
            items.add(item)
            rid, dot, origin = item
            body = BODIES[rid]
            if dot == len(body):
                # complete: bodies are never empty, so origin < position and
                # the waiting set is already fully built.
                head = HEADS[rid]
                for parent in self.sets[origin].wait.get(head, ()):
                    agenda.append((parent[0], parent[1] + 1, parent[2]))
                continue
            symbol = body[dot]
            if _is_terminal(symbol):
                chart.scan.setdefault(symbol, []).append(item)
            else:
                chart.wait.setdefault(symbol, []).append(item)
                for rid2 in _BY_HEAD[symbol]:
                    agenda.append((rid2, 0, position))
        return chart

    def advance(self, token: Token) -> bool:
        symbol = token_symbol(token)
        if symbol is None:
            return False
        hits = self.sets[-1].scan.get(symbol)
        if not hits:
            return False
        position = len(self.sets)
        seed = [(rid, dot + 1, origin) for rid, dot, origin in hits]
        new_set = self._close(seed, position)
        self.sets.append(new_set)
        return True

    def retract(self) -> None:
        self.sets.pop()

    def prediction(self) -> Prediction:
        return _prediction_from_symbols(self.sets[-1].scan)

    def accepted(self) -> bool:
        """Is the fed sequence a complete sentence?"""
        last = self.sets[-1].items
        for rid in _BY_HEAD[START]:
            if (rid, len(BODIES[rid]), 0) in last:
                return True
        return False

    def _completed_index(self):
        completed = {}
        for j, chart in enumerate(self.sets):
            for rid, dot, origin in chart.items:
                if dot == len(BODIES[rid]):
                    completed.setdefault((HEADS[rid], origin, j), []).append(rid)
        return completed

    def derivations(self, tokens, limit=2):
        """Up to ``limit`` parse values for the full token span.

        More than one value means the grammar is ambiguous for this input,
        which the sentence tests rule out.
        """
        completed = self._completed_index()
        n = len(tokens)
        memo = {}

        def values(head, i, j):
            key = (head, i, j)
            if key in memo:
                return memo[key]
            out = []
            for rid in completed.get(key, ()):
                for children in _splits(BODIES[rid], 0, i, j):
                    out.append(ACTIONS[rid](children))
                    if len(out) >= limit:
                        break
                if len(out) >= limit:
                    break
            memo[key] = out
            return out

        def _splits(body, k, pos, j):
            if k == len(body):
                if pos == j:
                    yield []
                return
            symbol = body[k]
            if _is_terminal(symbol):
                if pos < j and token_symbol(tokens[pos]) == symbol:
                    value = (tokens[pos].surface
                             if isinstance(symbol, Word) else tokens[pos])
                    for rest in _splits(body, k + 1, pos + 1, j):
                        yield [value] + rest
                return
            for mid in range(pos + 1, j + 1):
                if (symbol, pos, mid) not in completed:
                    continue
                for value in values(symbol, pos, mid):
                    for rest in _splits(body, k + 1, mid, j):
                        yield [value] + rest

        return values(START, 0, n)

    def count_parses(self, tokens) -> int:
        """Number of distinct derivations of the full token span."""
        completed = self._completed_index()
        memo = {}

        def count(head, i, j):
            key = (head, i, j)
            if key in memo:
                return memo[key]
            memo[key] = total = sum(
                count_seq(BODIES[rid], 0, i, j)
                for rid in completed.get(key, ()))
            return total

        def count_seq(body, k, pos, j):
            if k == len(body):
                return 1 if pos == j else 0
            symbol = body[k]
            if _is_terminal(symbol):
                if pos < j and token_symbol(tokens[pos]) == symbol:
                    return count_seq(body, k + 1, pos + 1, j)
                return 0
            total = 0
            for mid in range(pos + 1, j + 1):
                if (symbol, pos, mid) in completed:
                    sub = count(symbol, pos, mid)
                    if sub:
                        total += sub * count_seq(body, k + 1, mid, j)
            return total

        return count(START, 0, len(tokens))

    def walk_tokens(self, tokens):
        """Feed many tokens; returns index of the first failure or None."""
        for i, token in enumerate(tokens):
            if not self.advance(token):
                return i
        return None


def parse(tokens):
    """The unique parse tree of a complete sentence.

    Raises SentenceSyntaxError carrying the earliest failing position and the
    prediction there, so editors can show what would have been legal.
    """
    walker = ChartWalker()
    for i, token in enumerate(tokens):
        if not walker.advance(token):
            raise SentenceSyntaxError(i, walker.prediction())
    if not walker.accepted():
        raise SentenceSyntaxError(len(tokens), walker.prediction())
    trees = walker.derivations(tokens, limit=2)
    if len(trees) != 1:
        raise AssertionError(
            f"grammar ambiguity: {len(trees)} parses for {tokens!r}")
    return trees[0]


def predict_next(tokens) -> Prediction:
    """Exact continuation set for a token prefix (empty iff dead or done)."""
    walker = ChartWalker()
    for token in tokens:
        if not walker.advance(token):
            return EMPTY_PREDICTION
    return walker.prediction()


# -- exhaustive sentence enumeration -------------------------------------------

def _terminal_expansions(symbol, lexicon: Lexicon, numbers):
    if isinstance(symbol, Word):
        return [(symbol.word,)]
    if isinstance(symbol, Cat):
        return [(form,) for form in lexicon.surfaces(symbol.category)]
    if symbol.which == "one":
        return [("1",)] if 1 in numbers else []
    return [(str(n),) for n in sorted(numbers) if 2 <= n <= MAX_NUMBER]


def enumerate_sentences(lexicon: Lexicon, max_len: int, numbers=(1, 2, 3),
                        max_count: int = DEFAULT_ENUMERATE_CAP):
    """Every accepted sentence of up to ``max_len`` tokens, as surface tuples.

    Enumeration expands the production table top-down (it shares no machinery
    with the chart parser, which is exactly what makes it useful as a
    cross-check).  Categories are instantiated from ``lexicon`` and number
    slots from ``numbers``.
    """
    if not (0 <= max_len <= MAX_ENUMERATE_LEN):
        raise LimitExceededError(
            f"max_len must be between 0 and {MAX_ENUMERATE_LEN}")

    by_symbol = {}   # symbol -> (budget, {length: [tuple, ...]})

    def sequences(symbol, budget):
        """{length: [surface tuples]} for one symbol, lengths 1..budget."""
        if _is_terminal(symbol):
            if budget < 1:
                return {}
            out = _terminal_expansions(symbol, lexicon, numbers)
            return {1: out} if out else {}
        cached = by_symbol.get(symbol)
        if cached is not None and cached[0] >= budget:
            return {n: seqs for n, seqs in cached[1].items() if n <= budget}
        result = {}
        for rid in _BY_HEAD[symbol]:
            for seq_len, seqs in _body_sequences(BODIES[rid], budget).items():
                result.setdefault(seq_len, []).extend(seqs)
        by_symbol[symbol] = (budget, result)
        return result

    def _body_sequences(body, budget):
        parts = {0: [()]}
        remaining = len(body)
        for symbol in body:
            remaining -= 1
            grown = {}
            for done_len, prefixes in parts.items():
                # leave at least one token for every later body symbol
                room = budget - done_len - remaining
                for piece_len, pieces in sequences(symbol, room).items():
                    bucket = grown.setdefault(done_len + piece_len, [])
                    for prefix in prefixes:
                        for piece in pieces:
                            bucket.append(prefix + piece)
            parts = grown
            if not parts:
                return {}
        return parts

    out = set()
    for _, seqs in sequences(START, max_len).items():
        for seq in seqs:
            out.add(seq)
            if len(out) > max_count:
                raise LimitExceededError(
                    f"more than {max_count} sentences at max_len={max_len}")
    return sorted(out)
