"""Command line front door: mine, search, eval, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .corpus import CorpusError, load_repository
from .evaluation import load_cases, run_eval
from .lingproc import Lexicon, default_lexicon, dump_tags
from .retrieval import search
from .service import ServiceState, run_server
from .termgen import StopWordList, default_stop_words, term_profile
from .weighting import EmptyCorpus, Index, mine

EXIT_OK = 0
EXIT_DATA = 2
EXIT_IO = 3

LEXICON_ENV_VAR = "LEXMINER_LEXICON"


def _resolve_lexicon(path: str | None) -> Lexicon:
    path = path or os.environ.get(LEXICON_ENV_VAR)
    return Lexicon.load(path) if path else default_lexicon()


def _resolve_stops(path: str | None) -> StopWordList:
    return StopWordList.load(path) if path else default_stop_words()


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_mine(args: argparse.Namespace) -> int:
    try:
        lex = _resolve_lexicon(args.lexicon)
        stops = _resolve_stops(args.stopwords)
        repo = load_repository(args.corpus)
    except CorpusError as exc:
        return _fail(str(exc), EXIT_DATA)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)

    index = mine(repo, lex, stops)
    try:
        Path(args.index).parent.mkdir(parents=True, exist_ok=True)
        index.save(args.index)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)

    for report in repo:
        profile = term_profile(report, lex, stops)
        total = sum(profile.values())
        print(f"{report.id}: {total} terms ({len(profile)} distinct)")
    print(f"mined {len(repo)} reports into {args.index}")
    return EXIT_OK


def _read_query(args: argparse.Namespace) -> str:
    if args.query is not None:
        return args.query
    return Path(args.query_file).read_text(encoding="utf-8")


def cmd_search(args: argparse.Namespace) -> int:
    try:
        lex = _resolve_lexicon(args.lexicon)
        stops = _resolve_stops(args.stopwords)
        index = Index.load(args.index)
        query = _read_query(args)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except ValueError as exc:
        return _fail(str(exc), EXIT_DATA)

    try:
        response = search(query, index, top_k=args.top_k, lex=lex, stops=stops)
    except EmptyCorpus as exc:
        return _fail(str(exc), EXIT_DATA)

    if args.show_tags:
        print("query tags:")
        print(dump_tags(response.query_tokens))
        print()

    if response.empty_query:
        print("no matches (empty query vector)")
        return EXIT_OK
    if not response.results:
        print("no matches")
        return EXIT_OK

    print("rank  id  score  verdict")
    for rank, result in enumerate(response.results, start=1):
        verdict_line = result.verdict.splitlines()[0] if result.verdict else ""
        print(f"{rank:>4}  {result.report_id}  {result.score:.4f}  {verdict_line}".rstrip())
        if args.show_terms:
            for m in result.matched_terms:
                print(
                    f"      {m.term.key}  query={m.query_weight:.4f}"
                    f"  doc={m.doc_weight:.4f}  contribution={m.contribution:.4f}"
                )
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        lex = _resolve_lexicon(args.lexicon)
        stops = _resolve_stops(args.stopwords)
        index = Index.load(args.index)
        cases = load_cases(args.cases)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except (ValueError, KeyError) as exc:
        return _fail(f"bad cases file: {exc}", EXIT_DATA)

    try:
        report = run_eval(index, cases, lex=lex, stops=stops)
    except EmptyCorpus as exc:
        return _fail(str(exc), EXIT_DATA)

    for row in report.rows:
        if row["kind"] == "precision":
            rank = row["rank"] if row["rank"] is not None else ">10"
            status = "hit " if row["hit"] else "miss"
            print(f"precision  {status}  rank={rank:<4}  {row['expected_id']}  {row['query_text']!r}")
        else:
            print(f"recall     jaccard={row['jaccard']:.2f}  {row['query_text']!r} ~ {row['paraphrase_of']!r}")
    if report.precision_at_1 is not None:
        print(f"precision@1 = {report.precision_at_1:.4f}")
    if report.recall_overlap is not None:
        print(f"recall overlap = {report.recall_overlap:.4f}")

    payload = json.dumps(report.to_payload(), ensure_ascii=False, indent=2, sort_keys=True)
    if args.output:
        try:
            Path(args.output).write_text(payload + "\n", encoding="utf-8")
        except OSError as exc:
            return _fail(str(exc), EXIT_IO)
        print(f"report written to {args.output}")
    else:
        print(payload)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        lex = _resolve_lexicon(args.lexicon)
        stops = _resolve_stops(args.stopwords)
        index = Index.load(args.index)
        reports = {}
        if args.corpus:
            reports = {r.id: r for r in load_repository(args.corpus)}
    except CorpusError as exc:
        return _fail(str(exc), EXIT_DATA)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except ValueError as exc:
        return _fail(str(exc), EXIT_DATA)

    state = ServiceState(
        index=index, lexicon=lex, stops=stops, reports=reports,
        allow_origin=args.allow_origin,
    )
    run_server(state, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexminer",
        description="Mine law reports into weighted term vectors and search them.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lexicon", help=f"lexicon file (default: bundled; ${LEXICON_ENV_VAR} overrides)")
        p.add_argument("--stopwords", help="stop-word file (baseline words are always kept)")

    p = sub.add_parser("mine", help="mine a corpus directory into an index file")
    p.add_argument("--corpus", required=True, help="directory of .lawrep files")
    p.add_argument("--index", required=True, help="output index path (JSON)")
    add_common(p)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("search", help="run a research query against an index")
    p.add_argument("--index", required=True, help="index file from 'mine'")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("query", nargs="?", help="query text")
    group.add_argument("--query-file", help="file containing the query text")
    p.add_argument("--top-k", type=int, default=10, help="max results (default 10)")
    p.add_argument("--show-terms", action="store_true", help="show matched-term contributions")
    p.add_argument("--show-tags", action="store_true", help="show the query's surface/POS/CHUNK lines")
    add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("eval", help="score precision/recall cases against an index")
    p.add_argument("--index", required=True)
    p.add_argument("--cases", required=True, help="JSON array of evaluation cases")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="serve the HTTP API over a mined index")
    p.add_argument("--index", required=True)
    p.add_argument("--corpus", help="corpus directory, enables full report details")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--allow-origin", help="value for Access-Control-Allow-Origin")
    add_common(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
