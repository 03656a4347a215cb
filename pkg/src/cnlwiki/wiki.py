"""Articles, statements, and the consistency gate.

Every vocabulary word owns one article; articles hold statements in author
order.  A sentence statement is gated the moment it is added: it either
translates outside the reasoner fragment (kept, shown red, no axioms), or its
axioms are checked against the committed ontology -- consistent means the
statement turns blue and its axioms join the ontology, inconsistent means the
statement is kept red and the ontology is untouched.  Red-conflict statements
can be reasserted later; nothing reasserts them automatically.

The committed ontology therefore always equals the union of the blue
statements' axioms and is consistent after every operation.

Storage is a plain directory: ``vocabulary.tsv``, one ``articles/<word>.article``
file per word (``id<TAB>status<TAB>payload`` lines), and ``meta`` holding the
next statement id so ids are never reused across sessions.
"""

import os
from dataclasses import dataclass, replace

from . import grammar, translator
from .axioms import Atomic, ClassAssertion, SubClassOf, functional
from .errors import (
    LoadError,
    NotDeclarativeError,
    NotQuestionError,
    UnknownArticleError,
    UnknownStatementError,
    NotReassertableError,
    WordInUseError,
)
from .lexicon import Lexicon, WordEntry, dump_tsv, parse_tsv
from .reasoner import (
    Ontology,
    classify,
    entails_membership,
    is_consistent,
    memberships,
    retrieve,
)
from .sentences import is_question

COMMITTED = "committed-blue"
RED_NONLOGIC = "red-nonlogic"
RED_CONFLICT = "red-conflict"
COMMENT = "comment"

_STATUS_TO_FILE = {COMMITTED: "ok", RED_CONFLICT: "conflict", COMMENT: "comment"}

UNA_NOTICE = ("# unique name assumption: distinct individual names"
              " denote distinct things")


@dataclass(frozen=True)
class Statement:
    id: int
    article: str
    kind: str                    # "sentence" | "comment"
    text: str                    # space-joined tokens, or raw comment text
    status: str
    tokens: tuple = ()
    ast: object = None
    reason: str = None           # red-nonlogic only
    axioms: tuple = ()           # translation result (committed or conflict)

    def file_status(self) -> str:
        if self.status == RED_NONLOGIC:
            return f"nonowl:{self.reason}"
        return _STATUS_TO_FILE[self.status]


@dataclass(frozen=True)
class AskAnswer:
    kind: str                    # "wh" | "yn" | "red"
    individuals: tuple = ()
    sentences: tuple = ()
    verdict: str = None          # yes | no | unknown
    reason: str = None


@dataclass(frozen=True)
class Views:
    hierarchy: tuple             # verbalized direct subsumptions
    memberships: dict            # individual -> verbalized memberships


class WikiState:
    """The whole wiki: vocabulary, articles, statements, committed ontology.

    Mutations are meant to run one at a time (the HTTP gateway serializes
    them); reads only walk immutable snapshots of the parts they touch.
    When ``data_dir`` is set every mutation is persisted before returning.
    """

    def __init__(self, data_dir=None):
        self.lexicon = Lexicon()
        self.articles = {}       # word lemma -> [statement id, ...]
        self.statements = {}     # id -> Statement
        self.next_id = 1
        self.data_dir = data_dir

    # -- derived state --

    def committed_ontology(self) -> Ontology:
        axioms = []
        for sid in sorted(self.statements):
            statement = self.statements[sid]
            if statement.status == COMMITTED:
                axioms.extend(statement.axioms)
        return Ontology(axioms)

    def article_statements(self, word: str):
        if word not in self.articles:
            raise UnknownArticleError(f"no article for {word!r}")
        return [self.statements[sid] for sid in self.articles[word]]

    def _uses_word(self, lemma: str) -> bool:
        for statement in self.statements.values():
            if statement.kind != "sentence":
                continue
            for token in self.lexicon.resolve(statement.tokens):
                if token.kind == "lexical" and token.lemma == lemma:
                    return True
        return False

    # -- vocabulary --

    def add_word(self, entry: WordEntry) -> WordEntry:
        self.lexicon.add_word(entry)
        self.articles[entry.lemma] = []
        self._persist()
        return entry

    def remove_word(self, lemma: str) -> None:
        if lemma not in self.articles:
            raise UnknownArticleError(f"no word {lemma!r}")
        if self.articles[lemma]:
            raise WordInUseError(f"the article for {lemma!r} is not empty")
        if self._uses_word(lemma):
            raise WordInUseError(f"{lemma!r} occurs in statements")
        self.lexicon.remove_word(lemma)
        del self.articles[lemma]
        if self.data_dir:
            path = self._article_path(lemma)
            if os.path.exists(path):
                os.remove(path)
        self._persist()

    # -- the gate --

    def add_statement(self, article: str, tokens) -> Statement:
        """Parse, translate and gate one declarative sentence."""
        if article not in self.articles:
            raise UnknownArticleError(f"no article for {article!r}")
        if isinstance(tokens, str):
            resolved = self.lexicon.tokenize(tokens)
        else:
            resolved = self.lexicon.resolve(tokens)
        ast = grammar.parse(resolved)
        if is_question(ast):
            raise NotDeclarativeError(
                "questions are asked, not added; use the question box")
        surfaces = tuple(t.surface for t in resolved)
        sid = self.next_id
        result = translator.translate(ast, sid)
        if not result.is_blue:
            statement = Statement(
                id=sid, article=article, kind="sentence",
                text=" ".join(surfaces), status=RED_NONLOGIC,
                tokens=surfaces, ast=ast, reason=result.reason)
        else:
            verdict = is_consistent(
                self.committed_ontology().with_axioms(result.axioms))
            status = COMMITTED if verdict.consistent else RED_CONFLICT
            statement = Statement(
                id=sid, article=article, kind="sentence",
                text=" ".join(surfaces), status=status,
                tokens=surfaces, ast=ast, axioms=result.axioms)
        self.next_id += 1
        self.statements[sid] = statement
        self.articles[article].append(sid)
        self._persist()
        return statement

    def add_comment(self, article: str, text: str) -> Statement:
        if article not in self.articles:
            raise UnknownArticleError(f"no article for {article!r}")
        sid = self.next_id
        self.next_id += 1
        statement = Statement(id=sid, article=article, kind="comment",
                              text=" ".join(text.split()), status=COMMENT)
        self.statements[sid] = statement
        self.articles[article].append(sid)
        self._persist()
        return statement

    def remove_statement(self, sid: int) -> None:
        if sid not in self.statements:
            raise UnknownStatementError(f"no statement {sid}")
        statement = self.statements.pop(sid)
        self.articles[statement.article].remove(sid)
        self._persist()

    def reassert_statement(self, sid: int) -> Statement:
        """Run the gate again for a statement that conflicted earlier."""
        if sid not in self.statements:
            raise UnknownStatementError(f"no statement {sid}")
        statement = self.statements[sid]
        if statement.status != RED_CONFLICT:
            raise NotReassertableError(
                f"statement {sid} is {statement.status}, not {RED_CONFLICT}")
        verdict = is_consistent(
            self.committed_ontology().with_axioms(statement.axioms))
        if verdict.consistent:
            statement = replace(statement, status=COMMITTED)
            self.statements[sid] = statement
            self._persist()
        return statement

    # -- queries and views --

    def ask(self, tokens) -> AskAnswer:
        if isinstance(tokens, str):
            resolved = self.lexicon.tokenize(tokens)
        else:
            resolved = self.lexicon.resolve(tokens)
        ast = grammar.parse(resolved)
        if not is_question(ast):
            raise NotQuestionError("that is a statement; add it to an article")
        query = translator.translate_question(ast)
        if isinstance(query, translator.Red):
            return AskAnswer(kind="red", reason=query.reason)
        ontology = self.committed_ontology()
        if isinstance(query, translator.RetrievalQuery):
            names = [i for i in retrieve(ontology, query.expr)
                     if not translator.is_anonymous(i)]
            head = ast.term.noun
            sentences = tuple(
                " ".join(translator.verbalize_atomic(
                    ClassAssertion(Atomic(head), name), self.lexicon))
                for name in names)
            return AskAnswer(kind="wh", individuals=tuple(names),
                             sentences=sentences)
        entailed = entails_membership(ontology, query.expr, query.individual)
        if entailed:
            return AskAnswer(kind="yn", verdict="yes")
        asserted = ontology.with_axioms(
            [ClassAssertion(query.expr, query.individual)])
        if not is_consistent(asserted).consistent:
            return AskAnswer(kind="yn", verdict="no")
        return AskAnswer(kind="yn", verdict="unknown")

    def snapshot_views(self) -> Views:
        ontology = self.committed_ontology()
        hierarchy = []
        result = classify(ontology)
        for group in result.groups:
            if len(group) < 2:
                continue
            for a in group:
                for b in group:
                    if a != b:
                        hierarchy.append(self._verbalize_sub(a, b))
        for a, b in result.edges:
            hierarchy.append(self._verbalize_sub(a, b))
        members = {}
        for name in ontology.individuals:
            if translator.is_anonymous(name) or name not in self.lexicon:
                continue
            sentences = tuple(
                " ".join(translator.verbalize_atomic(
                    ClassAssertion(Atomic(cls), name), self.lexicon))
                for cls in memberships(ontology, name))
            members[name] = sentences
        return Views(hierarchy=tuple(hierarchy), memberships=members)

    def _verbalize_sub(self, sub: str, sup: str) -> str:
        return " ".join(translator.verbalize_atomic(
            SubClassOf(Atomic(sub), Atomic(sup)), self.lexicon))

    # -- export --

    def export_ontology(self) -> str:
        lines = [UNA_NOTICE]
        seen = set()
        for sid in sorted(self.statements):
            statement = self.statements[sid]
            if statement.status != COMMITTED:
                continue
            for axiom in statement.axioms:
                if axiom not in seen:
                    seen.add(axiom)
                    lines.append(functional(axiom))
        for sid in sorted(self.statements):
            statement = self.statements[sid]
            if statement.status == RED_NONLOGIC:
                lines.append(f"# red({statement.reason}): {statement.text}")
            elif statement.status == RED_CONFLICT:
                lines.append(f"# red(conflict): {statement.text}")
        return "".join(line + "\n" for line in lines)

    # -- persistence --

    def _article_path(self, word: str) -> str:
        return os.path.join(self.data_dir, "articles", f"{word}.article")

    def _persist(self) -> None:
        if self.data_dir:
            self.save(self.data_dir)

    def save(self, data_dir: str) -> None:
        os.makedirs(os.path.join(data_dir, "articles"), exist_ok=True)
        with open(os.path.join(data_dir, "vocabulary.tsv"), "w",
                  encoding="utf-8", newline="\n") as fh:
            fh.write(dump_tsv(self.lexicon))
        with open(os.path.join(data_dir, "meta"), "w",
                  encoding="utf-8", newline="\n") as fh:
            fh.write(f"{self.next_id}\n")
        live = set()
        for word in self.articles:
            live.add(f"{word}.article")
            lines = []
            for sid in self.articles[word]:
                statement = self.statements[sid]
                lines.append(
                    f"{statement.id}\t{statement.file_status()}\t{statement.text}")
            with open(os.path.join(data_dir, "articles", f"{word}.article"),
                      "w", encoding="utf-8", newline="\n") as fh:
                fh.write("".join(line + "\n" for line in lines))
        for name in os.listdir(os.path.join(data_dir, "articles")):
            if name.endswith(".article") and name not in live:
                os.remove(os.path.join(data_dir, "articles", name))

    @classmethod
    def load(cls, data_dir: str) -> "WikiState":
        if not os.path.isdir(data_dir):
            raise LoadError(f"{data_dir} is not a directory")
        wiki = cls()
        vocab_path = os.path.join(data_dir, "vocabulary.tsv")
        if os.path.exists(vocab_path):
            with open(vocab_path, encoding="utf-8") as fh:
                try:
                    wiki.lexicon = parse_tsv(fh.read())
                except Exception as exc:
                    raise LoadError(f"vocabulary.tsv: {exc}") from exc
        wiki.articles = {entry.lemma: [] for entry in wiki.lexicon.entries()}
        articles_dir = os.path.join(data_dir, "articles")
        if os.path.isdir(articles_dir):
            for name in sorted(os.listdir(articles_dir)):
                if not name.endswith(".article"):
                    continue
                word = name[:-len(".article")]
                if word not in wiki.articles:
                    raise LoadError(f"article file for unknown word {word!r}")
                path = os.path.join(articles_dir, name)
                with open(path, encoding="utf-8") as fh:
                    for lineno, line in enumerate(fh.read().splitlines(), 1):
                        if not line.strip():
                            continue
                        wiki._load_statement(word, line, f"{name}:{lineno}")
        wiki._load_next_id(data_dir)
        committed = wiki.committed_ontology()
        if not is_consistent(committed).consistent:
            raise LoadError("committed statements are inconsistent; "
                            "the data directory violates the gate invariant")
        wiki.data_dir = data_dir
        return wiki

    def _load_statement(self, word: str, line: str, where: str) -> None:
        cells = line.split("\t", 2)
        if len(cells) != 3:
            raise LoadError(f"{where}: expected id<TAB>status<TAB>payload")
        try:
            sid = int(cells[0])
        except ValueError:
            raise LoadError(f"{where}: bad statement id {cells[0]!r}")
        if sid in self.statements:
            raise LoadError(f"{where}: duplicate statement id {sid}")
        status, payload = cells[1], cells[2]
        if status == "comment":
            statement = Statement(id=sid, article=word, kind="comment",
                                  text=payload, status=COMMENT)
            self.statements[sid] = statement
            self.articles[word].append(sid)
            return
        try:
            tokens = self.lexicon.tokenize(payload)
            ast = grammar.parse(tokens)
        except Exception as exc:
            raise LoadError(f"{where}: {exc}") from exc
        if is_question(ast):
            raise LoadError(f"{where}: articles cannot contain questions")
        surfaces = tuple(t.surface for t in tokens)
        result = translator.translate(ast, sid)
        if status.startswith("nonowl:"):
            reason = status[len("nonowl:"):]
            if result.is_blue or result.reason != reason:
                raise LoadError(f"{where}: status says nonowl:{reason}, "
                                "but the sentence translates differently")
            statement = Statement(id=sid, article=word, kind="sentence",
                                  text=payload, status=RED_NONLOGIC,
                                  tokens=surfaces, ast=ast, reason=reason)
        elif status in ("ok", "conflict"):
            if not result.is_blue:
                raise LoadError(f"{where}: status {status!r} needs a sentence "
                                "inside the reasoner fragment")
            mapped = COMMITTED if status == "ok" else RED_CONFLICT
            statement = Statement(id=sid, article=word, kind="sentence",
                                  text=payload, status=mapped,
                                  tokens=surfaces, ast=ast,
                                  axioms=result.axioms)
        else:
            raise LoadError(f"{where}: unknown status {status!r}")
        self.statements[sid] = statement
        self.articles[word].append(sid)

    def _load_next_id(self, data_dir: str) -> None:
        path = os.path.join(data_dir, "meta")
        top = max(self.statements, default=0)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                raw = fh.read().strip()
            try:
                self.next_id = int(raw)
            except ValueError:
                raise LoadError(f"meta: bad next statement id {raw!r}")
            if self.next_id <= top:
                raise LoadError(
                    f"meta: next id {self.next_id} collides with statement {top}")
        else:
            self.next_id = top + 1
