"""Read-only HTTP facade over a mined index.

Endpoints: GET /health, POST /search, GET /reports/{id}. All bodies are
UTF-8 JSON; error bodies carry ``{"error": code, "message": text}``.
The index is immutable, so any number of concurrent requests may be
served; re-mining requires a restart.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import unquote, urlsplit

from .corpus import LawReport
from .lingproc import Lexicon
from .retrieval import SearchResponse, search
from .termgen import StopWordList
from .weighting import EmptyCorpus, Index

log = logging.getLogger(__name__)

MAX_TOP_K = 100
DEFAULT_TOP_K = 10


@dataclass
class ServiceState:
    """Everything a handler needs; shared, never mutated while serving."""

    index: Index | None
    lexicon: Lexicon | None = None
    stops: StopWordList | None = None
    reports: dict[str, LawReport] = field(default_factory=dict)
    allow_origin: str | None = None


class BadRequest(Exception):
    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _search_payload(response: SearchResponse) -> dict:
    return {
        "results": [
            {
                "id": r.report_id,
                "score": r.score,
                "head": r.head,
                "verdict": r.verdict,
                "matched_terms": [
                    {
                        "term": m.term.key,
                        "query_weight": m.query_weight,
                        "doc_weight": m.doc_weight,
                        "contribution": m.contribution,
                    }
                    for m in r.matched_terms
                ],
            }
            for r in response.results
        ],
        "empty_query": response.empty_query,
        "query_tags": [
            {"surface": t.surface, "pos": str(t.pos), "chunk": str(t.chunk)}
            for t in response.query_tokens
        ],
    }


def _parse_search_request(body: bytes) -> tuple[str, int]:
    try:
        payload = json.loads(body.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise BadRequest("InvalidJson", "request body must be a JSON object")
    if not isinstance(payload, dict):
        raise BadRequest("InvalidJson", "request body must be a JSON object")
    text = payload.get("text")
    if not isinstance(text, str) or not text.strip():
        raise BadRequest("EmptyQuery", "text must be a non-empty string")
    top_k = payload.get("top_k", DEFAULT_TOP_K)
    if not isinstance(top_k, int) or isinstance(top_k, bool) or not 1 <= top_k <= MAX_TOP_K:
        raise BadRequest("InvalidTopK", f"top_k must be an integer in [1, {MAX_TOP_K}]")
    return text, top_k


class _Handler(BaseHTTPRequestHandler):
    server: "SearchService"
    protocol_version = "HTTP/1.1"

    @property
    def state(self) -> ServiceState:
        return self.server.state

    def log_message(self, format: str, *args) -> None:
        log.debug("%s %s", self.address_string(), format % args)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        if self.state.allow_origin:
            self.send_header("Access-Control-Allow-Origin", self.state.allow_origin)
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, code: str, message: str) -> None:
        self._send_json(status, {"error": code, "message": message})

    def do_OPTIONS(self) -> None:  # CORS preflight
        self.send_response(204)
        if self.state.allow_origin:
            self.send_header("Access-Control-Allow-Origin", self.state.allow_origin)
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        path = urlsplit(self.path).path
        if path == "/health":
            self._handle_health()
        elif path.startswith("/reports/"):
            self._handle_report(unquote(path[len("/reports/"):]))
        elif path == "/search":
            self._send_error_json(405, "MethodNotAllowed", "use POST /search")
        else:
            self._send_error_json(404, "NotFound", f"no route for {path}")

    def do_POST(self) -> None:
        path = urlsplit(self.path).path
        if path != "/search":
            self._send_error_json(404, "NotFound", f"no route for {path}")
            return
        if self.state.index is None:
            self._send_error_json(503, "IndexNotLoaded", "no index has been loaded")
            return
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(length) if length else b""
        try:
            text, top_k = _parse_search_request(body)
        except BadRequest as exc:
            self._send_error_json(400, exc.code, exc.message)
            return
        try:
            response = search(
                text, self.state.index, top_k=top_k,
                lex=self.state.lexicon, stops=self.state.stops,
            )
        except EmptyCorpus as exc:
            self._send_error_json(503, "EmptyCorpus", str(exc))
            return
        self._send_json(200, _search_payload(response))

    def _handle_health(self) -> None:
        index = self.state.index
        if index is None:
            self._send_error_json(503, "IndexNotLoaded", "no index has been loaded")
            return
        self._send_json(
            200,
            {
                "status": "ok",
                "n_docs": index.stats.n_docs,
                "vocabulary_size": len(index.stats.df),
            },
        )

    def _handle_report(self, report_id: str) -> None:
        index = self.state.index
        if index is None:
            self._send_error_json(503, "IndexNotLoaded", "no index has been loaded")
            return
        meta = index.meta.get(report_id)
        if meta is None:
            self._send_error_json(404, "NotFound", f"no report with id {report_id!r}")
            return
        report = self.state.reports.get(report_id)
        self._send_json(
            200,
            {
                "id": report_id,
                "head": meta.head,
                "detail": report.detail if report else "",
                "verdict": meta.verdict,
            },
        )


class SearchService(ThreadingHTTPServer):
    """Threaded HTTP server sharing one immutable ServiceState."""

    daemon_threads = True

    def __init__(self, address: tuple[str, int], state: ServiceState) -> None:
        super().__init__(address, _Handler)
        self.state = state


def create_server(state: ServiceState, host: str = "127.0.0.1", port: int = 8080) -> SearchService:
    return SearchService((host, port), state)


def run_server(state: ServiceState, host: str, port: int) -> None:
    """Serve until interrupted."""
    server = create_server(state, host, port)
    host_shown, port_shown = server.server_address[:2]
    print(f"serving on http://{host_shown}:{port_shown} (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
