"""HTTP+JSON gateway over a wiki.

Every endpoint is a thin rendering of one wiki operation; no verdict logic
lives here.  Gating outcomes (a conflicting or out-of-fragment sentence) are
domain results and travel as 200 responses with a status field; HTTP error
codes are reserved for malformed requests and unknown resources.

Mutations are serialized through one lock; reads run concurrently.
"""

import os
import re
import threading

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from . import grammar
from .errors import (
    CnlWikiError,
    DuplicateLemmaError,
    FormCollisionError,
    NotReassertableError,
    SentenceSyntaxError,
    UnknownArticleError,
    UnknownStatementError,
    WordInUseError,
)
from .lexicon import ALL_CATEGORIES, WordEntry
from .wiki import WikiState

_STATUS_CODES = {
    UnknownArticleError: 404,
    UnknownStatementError: 404,
    DuplicateLemmaError: 409,
    FormCollisionError: 409,
    WordInUseError: 409,
    NotReassertableError: 409,
}


def _error_payload(exc: CnlWikiError) -> dict:
    payload = {"code": exc.code, "message": str(exc)}
    if isinstance(exc, SentenceSyntaxError):
        payload["position"] = exc.position
        payload["prediction"] = exc.prediction.as_dict()
    elif "position" in exc.details:
        payload["position"] = exc.details["position"]
    return payload


def _statement_view(statement) -> dict:
    view = {
        "id": statement.id,
        "article": statement.article,
        "kind": statement.kind,
        "text": statement.text,
        "tokens": list(statement.tokens),
        "status": statement.file_status().split(":")[0],
    }
    if statement.reason:
        view["reason"] = statement.reason
    return view


def _word_view(entry: WordEntry) -> dict:
    return {"lemma": entry.lemma, "word_class": entry.word_class,
            "forms": dict(entry.forms)}


def _split_prefix(prefix: str):
    return [unit for unit in re.split(r"[+ ]+", prefix) if unit]


def create_app(wiki: WikiState, static_dir: str = None) -> FastAPI:
    app = FastAPI(title="cnlwiki", docs_url=None, redoc_url=None)
    write_lock = threading.Lock()

    @app.exception_handler(CnlWikiError)
    async def _domain_error(request: Request, exc: CnlWikiError):
        status = _STATUS_CODES.get(type(exc), 400)
        return JSONResponse(status_code=status, content=_error_payload(exc))

    @app.get("/api/words")
    def list_words():
        categories = {c: wiki.lexicon.surfaces(c)
                      for c in sorted(ALL_CATEGORIES) if c != "number"}
        return {"words": [_word_view(e) for e in wiki.lexicon.entries()],
                "categories": categories}

    @app.post("/api/words")
    def add_word(body: dict):
        word_class = body.get("word_class", "")
        forms = body.get("forms") or {}
        entry = WordEntry(lemma=str(body.get("lemma", "")),
                          word_class=str(word_class),
                          forms={str(k): str(v) for k, v in forms.items()})
        with write_lock:
            wiki.add_word(entry)
        return {"word": _word_view(entry)}

    @app.get("/api/articles/{lemma}")
    def article(lemma: str):
        statements = wiki.article_statements(lemma)
        return {"word": lemma,
                "statements": [_statement_view(s) for s in statements]}

    @app.post("/api/articles/{lemma}/statements")
    def add_statement(lemma: str, body: dict):
        with write_lock:
            if "comment" in body:
                statement = wiki.add_comment(lemma, str(body["comment"]))
            elif "tokens" in body:
                statement = wiki.add_statement(
                    lemma, [str(t) for t in body["tokens"]])
            else:
                statement = wiki.add_statement(lemma, str(body.get("text", "")))
        return _statement_view(statement)

    @app.delete("/api/articles/{lemma}/statements/{sid}")
    def remove_statement(lemma: str, sid: int):
        with write_lock:
            statement = wiki.statements.get(sid)
            if statement is None or statement.article != lemma:
                raise UnknownStatementError(
                    f"no statement {sid} in article {lemma!r}")
            wiki.remove_statement(sid)
        return {"removed": sid}

    @app.post("/api/articles/{lemma}/statements/{sid}/reassert")
    def reassert(lemma: str, sid: int):
        with write_lock:
            statement = wiki.statements.get(sid)
            if statement is None or statement.article != lemma:
                raise UnknownStatementError(
                    f"no statement {sid} in article {lemma!r}")
            statement = wiki.reassert_statement(sid)
        return _statement_view(statement)

    @app.get("/api/predict")
    def predict(prefix: str = ""):
        tokens = wiki.lexicon.resolve(_split_prefix(prefix))
        return grammar.predict_next(tokens).as_dict()

    @app.get("/api/hierarchy")
    def hierarchy():
        views = wiki.snapshot_views()
        return {"sentences": list(views.hierarchy)}

    @app.get("/api/individuals/{lemma}/classes")
    def individual_classes(lemma: str):
        views = wiki.snapshot_views()
        return {"individual": lemma,
                "sentences": list(views.memberships.get(lemma, ()))}

    @app.post("/api/ask")
    def ask(body: dict):
        if "tokens" in body:
            answer = wiki.ask([str(t) for t in body["tokens"]])
        else:
            answer = wiki.ask(str(body.get("text", "")))
        view = {"kind": answer.kind}
        if answer.kind == "wh":
            view["individuals"] = list(answer.individuals)
            view["sentences"] = list(answer.sentences)
        elif answer.kind == "yn":
            view["verdict"] = answer.verdict
        else:
            view["reason"] = answer.reason
        return view

    @app.get("/api/export")
    def export():
        return PlainTextResponse(wiki.export_ontology())

    static_dir = static_dir or os.environ.get("CNLWIKI_FRONTEND")
    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True))
    return app
