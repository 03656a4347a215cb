"""Error hierarchy shared across the package.

Every error carries a machine-stable ``code`` (used by the HTTP API and the
CLI's exit diagnostics) plus a human-readable message.
"""


class CnlWikiError(Exception):
    """Base class; ``code`` is stable across releases, the message is not."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


# -- lexicon ---------------------------------------------------------------

class DuplicateLemmaError(CnlWikiError):
    code = "duplicate-lemma"


class FormCollisionError(CnlWikiError):
    code = "form-collision"


class MalformedFormsError(CnlWikiError):
    code = "malformed-forms"


class UnknownWordError(CnlWikiError):
    code = "unknown-word"

    def __init__(self, unit: str, position: int):
        super().__init__(f"unknown word {unit!r} at position {position}",
                         unit=unit, position=position)
        self.unit = unit
        self.position = position


# -- grammar ---------------------------------------------------------------

class SentenceSyntaxError(CnlWikiError):
    """Raised when a token sequence is rejected.

    ``position`` is the index of the earliest token that cannot continue the
    sentence (== len(tokens) when the sequence ends too early), and
    ``prediction`` lists what could appear there instead.
    """

    code = "syntax-error"

    def __init__(self, position: int, prediction):
        super().__init__(f"unexpected input at token {position}",
                         position=position)
        self.position = position
        self.prediction = prediction


class LimitExceededError(CnlWikiError):
    code = "limit-exceeded"


# -- translator ------------------------------------------------------------

class NotAtomicError(CnlWikiError):
    code = "not-atomic"


# -- reasoner / oracle -----------------------------------------------------

class UnsupportedConstructError(CnlWikiError):
    code = "unsupported-construct"


class InconsistentOntologyError(CnlWikiError):
    code = "inconsistent-ontology"


class SearchSpaceExceededError(CnlWikiError):
    code = "search-space-exceeded"


class SignatureMismatchError(CnlWikiError):
    code = "signature-mismatch"


# -- wiki ------------------------------------------------------------------

class UnknownArticleError(CnlWikiError):
    code = "unknown-article"


class UnknownStatementError(CnlWikiError):
    code = "unknown-statement"


class NotReassertableError(CnlWikiError):
    code = "not-reassertable"


class NotDeclarativeError(CnlWikiError):
    code = "not-declarative"


class NotQuestionError(CnlWikiError):
    code = "not-a-question"


class WordInUseError(CnlWikiError):
    code = "word-in-use"


class LoadError(CnlWikiError):
    code = "load-failure"
