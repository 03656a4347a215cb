"""The user-extensible vocabulary and the tokenizer.

Three word classes are supported, each with explicitly entered surface
forms (no morphology engine):

* proper name   -- one form, ``name``
* noun          -- ``singular`` and ``plural``
* transitive verb -- ``third-singular``, ``plural`` and ``past-participle``

Multi-word concepts are written as single hyphenated lemmas
(``landlocked-country``); proper names are stored lowercase and only
capitalized by user interfaces.  Every surface form maps back to exactly one
(lemma, form) pair, which keeps tokenization a plain dictionary lookup.
"""

import re
from dataclasses import dataclass, field

from .errors import (
    DuplicateLemmaError,
    FormCollisionError,
    MalformedFormsError,
    UnknownWordError,
)

# Reserved words of the sentence grammar; no vocabulary form may shadow one.
FUNCTION_WORDS = frozenset({
    "every", "no", "a", "an", "is", "are", "not", "does", "do", "that",
    "by", "at", "most", "least", "exactly", "more", "less", "than",
    "which", "can", "must", ".", "?",
})

PROPER_NAME = "proper-name"
NOUN = "noun"
TRANSITIVE_VERB = "transitive-verb"

FORM_KEYS = {
    PROPER_NAME: ("name",),
    NOUN: ("singular", "plural"),
    TRANSITIVE_VERB: ("third-singular", "plural", "past-participle"),
}

# Token categories as the predictive editor names them.
CATEGORY = {
    (PROPER_NAME, "name"): "proper-name",
    (NOUN, "singular"): "noun-singular",
    (NOUN, "plural"): "noun-plural",
    (TRANSITIVE_VERB, "third-singular"): "tv-third-singular",
    (TRANSITIVE_VERB, "plural"): "tv-plural",
    (TRANSITIVE_VERB, "past-participle"): "tv-past-participle",
}

ALL_CATEGORIES = frozenset(CATEGORY.values()) | {"number"}

MAX_NUMBER = 100

_IDENT_RE = re.compile(r"^[a-z][a-z0-9-]*$")
_NUMBER_RE = re.compile(r"^(0|[1-9][0-9]*)$")


@dataclass(frozen=True)
class WordEntry:
    lemma: str
    word_class: str
    forms: dict = field(compare=True)

    def form(self, key: str) -> str:
        return self.forms[key]


@dataclass(frozen=True)
class Token:
    """One unit of a sentence.

    ``kind`` is ``function-word``, ``number`` or ``lexical``; lexical tokens
    carry their resolved (word_class, lemma, form_key), numbers their value.
    """

    surface: str
    kind: str
    word_class: str = None
    lemma: str = None
    form_key: str = None
    value: int = None

    @property
    def category(self):
        """Editor category name, or None for function words."""
        if self.kind == "number":
            return "number"
        if self.kind == "lexical":
            return CATEGORY[(self.word_class, self.form_key)]
        return None


def _function_token(surface: str) -> Token:
    return Token(surface=surface, kind="function-word")


def _number_token(surface: str, value: int) -> Token:
    return Token(surface=surface, kind="number", value=value)


def _validate_entry(entry: WordEntry) -> None:
    if entry.word_class not in FORM_KEYS:
        raise MalformedFormsError(f"unknown word class {entry.word_class!r}")
    if not _IDENT_RE.match(entry.lemma):
        raise MalformedFormsError(
            f"lemma {entry.lemma!r} must be lowercase letters/digits/hyphens")
    required = FORM_KEYS[entry.word_class]
    if set(entry.forms) != set(required):
        wanted = ", ".join(required)
        raise MalformedFormsError(
            f"{entry.word_class} needs exactly the forms: {wanted}")
    for key in required:
        form = entry.forms[key]
        if not form or not _IDENT_RE.match(form):
            raise MalformedFormsError(
                f"form {key}={form!r} must be lowercase letters/digits/hyphens")


class Lexicon:
    """Mutable word store with an exact surface-form index.

    Reads are pure; the wiki serializes all mutations through one writer, and
    ``copy()`` provides immutable-enough snapshots for concurrent readers.
    """

    def __init__(self):
        self._entries = {}
        self._surfaces = {}  # surface -> (lemma, form_key)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, lemma: str) -> WordEntry:
        return self._entries[lemma]

    def entries(self):
        return [self._entries[lemma] for lemma in sorted(self._entries)]

    def copy(self) -> "Lexicon":
        dup = Lexicon()
        dup._entries = dict(self._entries)
        dup._surfaces = dict(self._surfaces)
        return dup

    def surfaces(self, category: str):
        """All surface forms belonging to one editor category, sorted."""
        out = []
        for entry in self._entries.values():
            for key in FORM_KEYS[entry.word_class]:
                if CATEGORY[(entry.word_class, key)] == category:
                    out.append(entry.forms[key])
        return sorted(out)

    def add_word(self, entry: WordEntry) -> WordEntry:
        _validate_entry(entry)
        if entry.lemma in self._entries:
            raise DuplicateLemmaError(f"word {entry.lemma!r} already exists")
        seen = {}
        for key in FORM_KEYS[entry.word_class]:
            form = entry.forms[key]
            if form in FUNCTION_WORDS:
                raise FormCollisionError(f"{form!r} is a reserved word")
            if form in self._surfaces:
                other = self._surfaces[form][0]
                raise FormCollisionError(
                    f"form {form!r} already belongs to {other!r}")
            if form in seen:
                raise FormCollisionError(
                    f"form {form!r} used for both {seen[form]} and {key}")
            seen[form] = key
        self._entries[entry.lemma] = entry
        for key in FORM_KEYS[entry.word_class]:
            self._surfaces[entry.forms[key]] = (entry.lemma, key)
        return entry

    def remove_word(self, lemma: str) -> WordEntry:
        entry = self._entries.pop(lemma)
        for key in FORM_KEYS[entry.word_class]:
            del self._surfaces[entry.forms[key]]
        return entry

    def lookup(self, surface: str):
        """Resolve one unit to a Token, or None.

        Function words and numbers take precedence over vocabulary forms;
        add_word guarantees such collisions cannot exist anyway.
        """
        if surface in FUNCTION_WORDS:
            return _function_token(surface)
        if _NUMBER_RE.match(surface):
            value = int(surface)
            if 0 <= value <= MAX_NUMBER:
                return _number_token(surface, value)
            return None
        hit = self._surfaces.get(surface)
        if hit is None:
            return None
        lemma, form_key = hit
        return Token(surface=surface, kind="lexical",
                     word_class=self._entries[lemma].word_class,
                     lemma=lemma, form_key=form_key)

    def tokenize(self, text: str):
        """Split on whitespace and resolve every unit.

        A sentence-final "." or "?" glued to the last word is split off, so
        both "... no sea ." and "... no sea." tokenize identically.
        """
        units = text.split()
        if units and len(units[-1]) > 1 and units[-1][-1] in ".?":
            last = units.pop()
            units.extend([last[:-1], last[-1]])
        tokens = []
        for position, unit in enumerate(units):
            token = self.lookup(unit)
            if token is None:
                raise UnknownWordError(unit, position)
            tokens.append(token)
        return tokens

    def resolve(self, surfaces):
        """Tokens for an already-split surface sequence."""
        tokens = []
        for position, unit in enumerate(surfaces):
            token = self.lookup(unit)
            if token is None:
                raise UnknownWordError(unit, position)
            tokens.append(token)
        return tokens


def detokenize(tokens) -> str:
    """Inverse of tokenize for grammar-producible sequences."""
    return " ".join(t.surface if isinstance(t, Token) else t for t in tokens)


# -- vocabulary.tsv ----------------------------------------------------------

def dump_tsv(lexicon: Lexicon) -> str:
    """One entry per line, tab-separated, sorted by lemma, LF endings."""
    lines = []
    for entry in lexicon.entries():
        cells = [entry.word_class, entry.lemma]
        cells.extend(entry.forms[k] for k in FORM_KEYS[entry.word_class])
        lines.append("\t".join(cells))
    return "".join(line + "\n" for line in lines)


def parse_tsv(text: str) -> Lexicon:
    lexicon = Lexicon()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cells = line.split("\t")
        word_class = cells[0]
        if word_class not in FORM_KEYS:
            raise MalformedFormsError(
                f"vocabulary line {lineno}: unknown word class {word_class!r}")
        keys = FORM_KEYS[word_class]
        if len(cells) != 2 + len(keys):
            raise MalformedFormsError(
                f"vocabulary line {lineno}: expected {2 + len(keys)} cells")
        entry = WordEntry(lemma=cells[1], word_class=word_class,
                          forms=dict(zip(keys, cells[2:])))
        lexicon.add_word(entry)
    return lexicon
