"""Independent check machinery for the grammar tests.

``viable_next`` decides which terminal symbols can extend a prefix by plain
top-down derivation over the production table: keep the set of all leftmost
derivation stacks that consume the prefix, expand nonterminal stack tops, and
read off the terminal tops.  No chart, no item sets -- nothing shared with
the parser implementation except the production table itself, which is the
grammar's definition.

Tokens are abstracted to their match classes (one symbol per function word,
per lexical category, and the two number classes), because that is all any
terminal can distinguish.
"""

from cnlwiki.grammar import BODIES, START, _BY_HEAD, _is_terminal, token_symbol


def _expand(stacks):
    """Expand nonterminal tops until every stack starts with a terminal."""
    out = set()
    todo = list(stacks)
    while todo:
        stack = todo.pop()
        if not stack:
            out.add(stack)
            continue
        top = stack[0]
        if _is_terminal(top):
            out.add(stack)
            continue
        for rid in _BY_HEAD[top]:
            todo.append(BODIES[rid] + stack[1:])
    return out


def derivation_states(symbols):
    """All expanded derivation stacks after consuming the symbol sequence."""
    states = _expand({(START,)})
    for symbol in symbols:
        states = _expand({s[1:] for s in states if s and s[0] == symbol})
        if not states:
            return states
    return states


def viable_next(symbols):
    """Exactly the terminal symbols that can follow the given prefix."""
    return {s[0] for s in derivation_states(symbols) if s}


def accepts(symbols) -> bool:
    """Is the sequence a complete sentence, by top-down derivation?"""
    return any(not s for s in derivation_states(symbols))


def symbols_of(tokens):
    return [token_symbol(t) for t in tokens]
