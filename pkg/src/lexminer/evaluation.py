"""Evaluation harness: rank-1 precision and paraphrase overlap.

Cases come from a JSON array. A precision case names the report its
query should rank first; a recall case carries a paraphrase of another
query, and the two result sets are compared by Jaccard overlap over the
top five ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .lingproc import Lexicon
from .retrieval import search
from .termgen import StopWordList
from .weighting import Index

RECALL_TOP_K = 5
PRECISION_TOP_K = 10


@dataclass(frozen=True)
class EvalCase:
    """One evaluation query: exactly one of expected_id / paraphrase_of."""

    query_text: str
    expected_id: str | None = None
    paraphrase_of: str | None = None

    def __post_init__(self) -> None:
        if (self.expected_id is None) == (self.paraphrase_of is None):
            raise ValueError("exactly one of expected_id and paraphrase_of is required")
        if not self.query_text.strip():
            raise ValueError("query_text must be non-empty")


@dataclass(frozen=True)
class EvalReport:
    """Aggregated metrics with one row per case; metrics are None when a
    category has no cases."""

    precision_at_1: float | None
    recall_overlap: float | None
    rows: tuple[dict, ...]

    def to_payload(self) -> dict:
        return {
            "precision_at_1": self.precision_at_1,
            "recall_overlap": self.recall_overlap,
            "rows": list(self.rows),
        }


def load_cases(path: str | Path) -> list[EvalCase]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, list):
        raise ValueError("cases file must contain a JSON array")
    return [
        EvalCase(
            query_text=entry["query_text"],
            expected_id=entry.get("expected_id"),
            paraphrase_of=entry.get("paraphrase_of"),
        )
        for entry in payload
    ]


def jaccard(a: Iterable[str], b: Iterable[str]) -> float:
    """Set overlap in [0, 1]; two empty sets count as identical."""
    sa, sb = set(a), set(b)
    if not sa and not sb:
        return 1.0
    return len(sa & sb) / len(sa | sb)


def run_eval(
    index: Index,
    cases: Iterable[EvalCase],
    lex: Lexicon | None = None,
    stops: StopWordList | None = None,
) -> EvalReport:
    """Score every case against the index; deterministic across runs."""

    def top_ids(query: str, k: int) -> list[str]:
        return [r.report_id for r in search(query, index, top_k=k, lex=lex, stops=stops).results]

    rows: list[dict] = []
    precision_hits: list[int] = []
    overlaps: list[float] = []
    for case in cases:
        if case.expected_id is not None:
            ids = top_ids(case.query_text, PRECISION_TOP_K)
            rank = ids.index(case.expected_id) + 1 if case.expected_id in ids else None
            hit = rank == 1
            precision_hits.append(int(hit))
            rows.append(
                {
                    "kind": "precision",
                    "query_text": case.query_text,
                    "expected_id": case.expected_id,
                    "rank": rank,
                    "hit": hit,
                    "top": ids[:RECALL_TOP_K],
                }
            )
        else:
            ids_a = top_ids(case.query_text, RECALL_TOP_K)
            ids_b = top_ids(case.paraphrase_of, RECALL_TOP_K)
            overlap = jaccard(ids_a, ids_b)
            overlaps.append(overlap)
            rows.append(
                {
                    "kind": "recall",
                    "query_text": case.query_text,
                    "paraphrase_of": case.paraphrase_of,
                    "jaccard": overlap,
                    "top": ids_a,
                    "top_paraphrase": ids_b,
                }
            )

    precision = sum(precision_hits) / len(precision_hits) if precision_hits else None
    recall = sum(overlaps) / len(overlaps) if overlaps else None
    return EvalReport(precision_at_1=precision, recall_overlap=recall, rows=tuple(rows))
