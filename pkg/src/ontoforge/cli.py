"""Command-line entry points covering the full pipeline.

Exit codes: 0 success, 1 usage error, 2 input not found, 3 validation
failed, 4 network failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import curation, owlio
from .corpus import (
    AcquisitionConfig,
    CorpusFormatError,
    NetworkFetchError,
    PageNotFoundError,
    SeedFetchError,
    build_corpus,
    load_fixture_corpus,
    save_corpus,
)
from .owlio import InvalidOntologyError, OwlSyntaxError
from .seed import seed_wind_ontology
from .textmine import PipelineConfig, load_stopwords, rank_candidates, save_candidates
from .textmine import mine_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_FOUND = 2
EXIT_INVALID = 3
EXIT_NETWORK = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _data_dir(value: str | None) -> Path:
    return Path(value or os.environ.get("ONTOFORGE_DATA_DIR") or "data")


def build_parser() -> _Parser:
    parser = _Parser(prog="ontoforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    fetch = sub.add_parser("fetch", help="build a corpus from a seed article and its links")
    fetch.add_argument("seed", help="seed article slug, e.g. wind_power")
    fetch.add_argument("--out", required=True, help="corpus file to write")
    source = fetch.add_mutually_exclusive_group(required=True)
    source.add_argument("--fixture-dir", help="directory of .wiki files to read instead of the network")
    source.add_argument("--live", action="store_true", help="fetch from the wiki API")
    fetch.add_argument("--api-url", help="wiki API endpoint (or ONTOFORGE_WIKI_API)")
    fetch.add_argument("--max-links", type=int, default=500)
    fetch.set_defaults(func=_cmd_fetch)

    mine = sub.add_parser("mine", help="rank candidate terms from a corpus file")
    mine.add_argument("corpus", help="corpus file produced by fetch")
    mine.add_argument("--out", required=True, help="candidates file to write")
    mine.add_argument("--min-freq", type=int, default=2)
    mine.add_argument("--nmax", type=int, default=3, choices=(1, 2, 3))
    mine.add_argument("--stopwords", help="stopword list file (one token per line)")
    mine.add_argument(
        "--drop-interior-stopwords",
        action="store_true",
        help="also drop stopwords inside phrases (default keeps them so "
        "phrases like 'meteorology and climatology' survive)",
    )
    mine.add_argument("--top", type=int, default=10, help="how many top phrases to print")
    mine.set_defaults(func=_cmd_mine)

    serve = sub.add_parser("serve", help="start the HTTP API and review UI")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=None, help="default ONTOFORGE_PORT or 8000")
    serve.add_argument("--data-dir", help="session storage (default ONTOFORGE_DATA_DIR or ./data)")
    serve.add_argument("--corpus", help="corpus file backing new sessions")
    serve.add_argument("--ui-dir", default="frontend/dist", help="built UI assets to serve at /")
    serve.set_defaults(func=_cmd_serve)

    seed = sub.add_parser("seed", help="write the wind energy seed ontology as OWL")
    seed.add_argument("--out", help="output file (default stdout)")
    seed.add_argument("--syntax", choices=("turtle", "xml"), default="turtle")
    seed.set_defaults(func=_cmd_seed)

    export = sub.add_parser("export", help="export a curation session's draft as OWL")
    export.add_argument("--session", required=True, help="session id")
    export.add_argument("--data-dir", help="session storage (default ONTOFORGE_DATA_DIR or ./data)")
    export.add_argument("--out", help="output file (default stdout)")
    export.add_argument("--syntax", choices=("turtle", "xml"), default="turtle")
    export.set_defaults(func=_cmd_export)

    validate = sub.add_parser("validate", help="parse an OWL file and run the validator")
    validate.add_argument("file", help=".ttl or .owl file")
    validate.set_defaults(func=_cmd_validate)
    return parser


def _cmd_fetch(args) -> int:
    if args.fixture_dir:
        fixture_dir = Path(args.fixture_dir)
        if not fixture_dir.is_dir():
            print(f"fixture directory not found: {fixture_dir}", file=sys.stderr)
            return EXIT_NOT_FOUND
        config = AcquisitionConfig(
            source="fixture", fixture_dir=fixture_dir, max_links=args.max_links
        )
    else:
        config = AcquisitionConfig(source="live", api_url=args.api_url, max_links=args.max_links)
    try:
        corpus = build_corpus(args.seed, config)
    except SeedFetchError as exc:
        print(f"seed fetch failed: {exc}", file=sys.stderr)
        if isinstance(exc.__cause__, PageNotFoundError) or args.fixture_dir:
            return EXIT_NOT_FOUND
        return EXIT_NETWORK
    except NetworkFetchError as exc:
        print(f"network failure: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    save_corpus(corpus, args.out)
    print(
        f"wrote {args.out}: {len(corpus.articles)} articles"
        + (f", {len(corpus.failures)} failed" if corpus.failures else "")
    )
    for warning in corpus.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return EXIT_OK


def _cmd_mine(args) -> int:
    path = Path(args.corpus)
    if not path.exists():
        print(f"corpus file not found: {path}", file=sys.stderr)
        return EXIT_NOT_FOUND
    try:
        corpus = load_fixture_corpus(path)
    except CorpusFormatError as exc:
        print(f"bad corpus file: {exc}", file=sys.stderr)
        return EXIT_INVALID
    stopwords = None
    if args.stopwords:
        stop_path = Path(args.stopwords)
        if not stop_path.exists():
            print(f"stopword file not found: {stop_path}", file=sys.stderr)
            return EXIT_NOT_FOUND
        stopwords = load_stopwords(stop_path)
    config = PipelineConfig(
        stopword_list=stopwords if stopwords is not None else load_stopwords(),
        nmax=args.nmax,
        min_frequency=args.min_freq,
        keep_interior_stopwords=not args.drop_interior_stopwords,
    )
    candidates = rank_candidates(mine_corpus(corpus, config), config)
    header = {
        "config_digest": config.digest(),
        "min_frequency": config.min_frequency,
        "nmax": config.nmax,
        "keep_interior_stopwords": config.keep_interior_stopwords,
        "corpus": str(path),
    }
    save_candidates(candidates, args.out, header=header)
    print(f"wrote {args.out}: {len(candidates)} candidates")
    for candidate in candidates[: args.top]:
        print(f"  {candidate.total_frequency:6d}  {candidate.phrase}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    corpus_path = None
    if args.corpus:
        corpus_path = Path(args.corpus)
        if not corpus_path.exists():
            print(f"corpus file not found: {corpus_path}", file=sys.stderr)
            return EXIT_NOT_FOUND
    try:
        app = create_app(
            data_dir=_data_dir(args.data_dir), corpus_path=corpus_path, ui_dir=args.ui_dir
        )
    except CorpusFormatError as exc:
        print(f"bad corpus file: {exc}", file=sys.stderr)
        return EXIT_INVALID
    port = args.port if args.port is not None else int(os.environ.get("ONTOFORGE_PORT", "8000"))
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return EXIT_OK


def _write_owl(onto, out: str | None, syntax: str) -> None:
    doc = owlio.to_owl(onto, syntax=syntax)
    if out:
        owlio.save_owl(doc, out)
        print(f"wrote {out}")
    else:
        sys.stdout.write(doc.text)


def _cmd_seed(args) -> int:
    _write_owl(seed_wind_ontology(), args.out, args.syntax)
    return EXIT_OK


def _cmd_export(args) -> int:
    store = curation.SessionStore(_data_dir(args.data_dir))
    try:
        session = store.load(args.session)
    except FileNotFoundError:
        print(f"no session {args.session!r} under {store.root}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except curation.CurationError as exc:
        print(f"session {args.session!r} failed to replay: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _write_owl(session.draft, args.out, args.syntax)
    return EXIT_OK


def _cmd_validate(args) -> int:
    path = Path(args.file)
    if not path.exists():
        print(f"file not found: {path}", file=sys.stderr)
        return EXIT_NOT_FOUND
    ignored: list = []
    try:
        onto = owlio.load_owl(path, ignored=ignored)
    except (OwlSyntaxError, InvalidOntologyError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = onto.validate()
    print(
        f"{path}: {len(onto.concepts)} concepts, {len(onto.relations)} relations, "
        f"{len(report.errors)} errors, {len(report.warnings)} warnings, "
        f"{len(ignored)} ignored triples"
    )
    for line in report.errors:
        print(f"error: {line}")
    for line in report.warnings:
        print(f"warning: {line}")
    return EXIT_INVALID if report.errors else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
