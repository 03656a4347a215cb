"""Command-line entry points: serve, check, export, ask, predict, import.

The data directory defaults to $CNLWIKI_DATA.  Domain outcomes (conflicting
sentences, out-of-fragment questions) print as normal output with exit code
0; failures print the machine-readable error code on stderr and exit 1.
"""

import json
import os
import sys

import click

from .errors import CnlWikiError
from . import grammar
from .wiki import WikiState


def _fail(exc: CnlWikiError):
    click.echo(f"{exc.code}: {exc}", err=True)
    sys.exit(1)


def _load(data_dir: str) -> WikiState:
    try:
        return WikiState.load(data_dir)
    except CnlWikiError as exc:
        _fail(exc)


_data_dir_option = click.option(
    "--data", "data_dir", envvar="CNLWIKI_DATA", required=True,
    type=click.Path(), help="wiki data directory (or $CNLWIKI_DATA)")


@click.group()
def main():
    """A collaborative ontology wiki written in controlled English."""


@main.command()
@_data_dir_option
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--frontend", "frontend_dir", default=None,
              type=click.Path(), help="directory of built UI files to serve")
def serve(data_dir, port, host, frontend_dir):
    """Serve the HTTP API (and the editor UI when built)."""
    import uvicorn

    from .server import create_app

    if os.path.isdir(data_dir):
        wiki = _load(data_dir)
    else:
        wiki = WikiState(data_dir=data_dir)
        wiki.save(data_dir)
        click.echo(f"initialized empty wiki in {data_dir}")
    app = create_app(wiki, static_dir=frontend_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except SystemExit:
        raise
    except OSError as exc:
        click.echo(f"port-in-use: {exc}", err=True)
        sys.exit(1)


@main.command()
@click.argument("data_dir", type=click.Path())
def check(data_dir):
    """Verify that a data directory loads and the ontology is consistent."""
    wiki = _load(data_dir)
    statements = len(wiki.statements)
    committed = sum(1 for s in wiki.statements.values()
                    if s.status == "committed-blue")
    click.echo(f"ok: {len(wiki.lexicon)} words, {statements} statements, "
               f"{committed} committed, ontology consistent")


@main.command()
@click.argument("data_dir", type=click.Path())
@click.option("-o", "output", type=click.Path(), default=None,
              help="write to a file instead of stdout")
def export(data_dir, output):
    """Export the committed ontology as functional-style axiom text."""
    wiki = _load(data_dir)
    text = wiki.export_ontology()
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("data_dir", type=click.Path())
@click.argument("question")
def ask(data_dir, question):
    """Evaluate a question against the committed ontology."""
    wiki = _load(data_dir)
    try:
        answer = wiki.ask(question)
    except CnlWikiError as exc:
        _fail(exc)
    if answer.kind == "wh":
        for name in answer.individuals:
            click.echo(name)
    elif answer.kind == "yn":
        click.echo(answer.verdict)
    else:
        click.echo(f"red({answer.reason}): the reasoner cannot evaluate this")


@main.command()
@click.argument("data_dir", type=click.Path())
@click.argument("prefix")
def predict(data_dir, prefix):
    """Show which tokens can extend a sentence prefix."""
    wiki = _load(data_dir)
    try:
        units = [u for u in prefix.replace("+", " ").split() if u]
        tokens = wiki.lexicon.resolve(units)
    except CnlWikiError as exc:
        _fail(exc)
    click.echo(json.dumps(grammar.predict_next(tokens).as_dict()))


@main.command(name="import")
@click.argument("data_dir", type=click.Path())
@click.argument("sentences_file", type=click.Path(exists=True))
def import_(data_dir, sentences_file):
    """Batch-add sentences from a file of `article<TAB>sentence` lines."""
    wiki = _load(data_dir)
    failures = 0
    with open(sentences_file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh.read().splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                click.echo(f"{lineno}\terror:malformed-line")
                failures += 1
                continue
            article, sentence = line.split("\t", 1)
            try:
                statement = wiki.add_statement(article, sentence)
            except CnlWikiError as exc:
                click.echo(f"{lineno}\terror:{exc.code}")
                failures += 1
                continue
            click.echo(f"{lineno}\t{statement.file_status()}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
