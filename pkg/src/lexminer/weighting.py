"""Corpus statistics, TF-IDF weighting and the persisted index.

Weights are raw term frequency times ln(N / df). Terms occurring in
every document carry no information and are dropped from the sparse
vectors rather than smoothed.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Mapping

from .corpus import Repository
from .lingproc import Lexicon
from .termgen import StopWordList, Term, term_profile

INDEX_VERSION = 1


class EmptyCorpus(Exception):
    """Raised when an operation needs at least one mined document."""


@dataclass(frozen=True)
class CorpusStats:
    """Document count and per-term document frequencies."""

    n_docs: int
    df: dict[Term, int] = field(default_factory=dict)

    @property
    def vocabulary(self):
        return self.df.keys()


@dataclass(frozen=True)
class TermVector:
    """Sparse nonnegative term weights owned by one report or query."""

    owner: str
    weights: dict[Term, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "weights", {t: w for t, w in self.weights.items() if w != 0.0}
        )

    def __len__(self) -> int:
        return len(self.weights)

    def __bool__(self) -> bool:
        return bool(self.weights)

    def get(self, term: Term) -> float:
        return self.weights.get(term, 0.0)

    def norm(self) -> float:
        return math.sqrt(sum(w * w for w in self.weights.values()))

    def dot(self, other: "TermVector") -> float:
        a, b = self.weights, other.weights
        if len(b) < len(a):
            a, b = b, a
        return sum(w * b[t] for t, w in a.items() if t in b)


def build_stats(profiles: Mapping[str, Counter[Term]]) -> CorpusStats:
    """Count documents and per-term document frequencies over profiles."""
    df: dict[Term, int] = {}
    for profile in profiles.values():
        for term in profile:
            df[term] = df.get(term, 0) + 1
    return CorpusStats(n_docs=len(profiles), df=df)


def tfidf_vector(profile: Counter[Term], stats: CorpusStats, owner: str) -> TermVector:
    """Weight a term profile against corpus statistics.

    Terms absent from the corpus vocabulary are dropped (they can only
    appear in query profiles); terms present in every document get
    weight zero and are dropped too.
    """
    if stats.n_docs == 0:
        raise EmptyCorpus("cannot weight terms against an empty corpus")
    weights: dict[Term, float] = {}
    for term, tf in profile.items():
        df = stats.df.get(term)
        if df is None or df == stats.n_docs:
            continue
        weights[term] = tf * math.log(stats.n_docs / df)
    return TermVector(owner=owner, weights=weights)


@dataclass(frozen=True)
class ReportMeta:
    """Display fields kept alongside each report vector."""

    head: str
    verdict: str


@dataclass(frozen=True)
class Index:
    """Immutable mining output: stats, one vector per report, display meta."""

    stats: CorpusStats
    vectors: dict[str, TermVector] = field(default_factory=dict)
    meta: dict[str, ReportMeta] = field(default_factory=dict)

    @cached_property
    def postings(self) -> dict[Term, tuple[str, ...]]:
        """Term to sorted report ids, for skipping zero-overlap reports."""
        table: dict[Term, list[str]] = {}
        for report_id in sorted(self.vectors):
            for term in self.vectors[report_id].weights:
                table.setdefault(term, []).append(report_id)
        return {t: tuple(ids) for t, ids in table.items()}

    def to_payload(self) -> dict:
        return {
            "version": INDEX_VERSION,
            "n_docs": self.stats.n_docs,
            "df": {t.key: n for t, n in self.stats.df.items()},
            "vectors": {
                rid: {t.key: w for t, w in vec.weights.items()}
                for rid, vec in self.vectors.items()
            },
            "meta": {
                rid: {"head": m.head, "verdict": m.verdict}
                for rid, m in self.meta.items()
            },
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "Index":
        version = payload.get("version")
        if version != INDEX_VERSION:
            raise ValueError(f"unsupported index version {version!r}")
        stats = CorpusStats(
            n_docs=payload["n_docs"],
            df={Term.from_key(k): n for k, n in payload["df"].items()},
        )
        vectors = {
            rid: TermVector(
                owner=rid, weights={Term.from_key(k): w for k, w in entry.items()}
            )
            for rid, entry in payload["vectors"].items()
        }
        meta = {
            rid: ReportMeta(head=entry["head"], verdict=entry["verdict"])
            for rid, entry in payload["meta"].items()
        }
        return cls(stats=stats, vectors=vectors, meta=meta)

    def dumps(self) -> str:
        """Serialize deterministically: sorted keys at every level, floats
        as their shortest round-trip decimals."""
        return json.dumps(self.to_payload(), ensure_ascii=False, sort_keys=True, indent=2) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Index":
        return cls.from_payload(json.loads(Path(path).read_text(encoding="utf-8")))


def mine(
    repo: Repository,
    lex: Lexicon | None = None,
    stops: StopWordList | None = None,
) -> Index:
    """Run the full mining pipeline over every report in the repository.

    Re-running on an unchanged repository yields a byte-identical
    serialized index. An empty repository mines to a valid empty index.
    """
    profiles = {report.id: term_profile(report, lex, stops) for report in repo}
    stats = build_stats(profiles)
    vectors = {}
    if stats.n_docs:
        vectors = {rid: tfidf_vector(profile, stats, rid) for rid, profile in profiles.items()}
    meta = {r.id: ReportMeta(head=r.head, verdict=r.verdict) for r in repo}
    return Index(stats=stats, vectors=vectors, meta=meta)
