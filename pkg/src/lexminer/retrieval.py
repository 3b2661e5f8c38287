"""Cosine-ranked retrieval with matched-term explanations.

The query text runs through the same pipeline as a mined report and is
weighted against the corpus statistics; reports are ranked by cosine
similarity, descending, ties broken by ascending id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lingproc import Lexicon, TaggedToken, preprocess
from .termgen import StopWordList, Term, default_stop_words, filter_stop_terms, generate_terms
from .weighting import EmptyCorpus, Index, TermVector, tfidf_vector


@dataclass(frozen=True)
class MatchedTerm:
    """One shared term with both weights and its dot-product contribution."""

    term: Term
    query_weight: float
    doc_weight: float
    contribution: float


@dataclass(frozen=True)
class SearchResult:
    report_id: str
    score: float
    matched_terms: tuple[MatchedTerm, ...]
    head: str
    verdict: str


@dataclass(frozen=True)
class SearchResponse:
    """Ranked results plus the analyzed query.

    ``empty_query`` is set when the query text yields no weighted terms
    (nothing survived term generation, stop filtering and vocabulary
    pruning); results are then necessarily empty.
    """

    results: tuple[SearchResult, ...]
    empty_query: bool
    query_tokens: tuple[TaggedToken, ...]
    query_vector: TermVector


def cosine(v1: TermVector, v2: TermVector) -> float:
    """Cosine similarity: dot product over the product of Euclidean norms.

    Zero when either vector is empty or all-zero; always within [0, 1]
    because weights are nonnegative.
    """
    dot = v1.dot(v2)
    if dot == 0.0:
        return 0.0
    value = dot / (v1.norm() * v2.norm())
    return min(1.0, max(0.0, value))


def explain(query_vector: TermVector, doc_vector: TermVector) -> list[MatchedTerm]:
    """Matched terms of the two vectors, largest contribution first."""
    matches = [
        MatchedTerm(
            term=term,
            query_weight=qw,
            doc_weight=doc_vector.weights[term],
            contribution=qw * doc_vector.weights[term],
        )
        for term, qw in query_vector.weights.items()
        if term in doc_vector.weights
    ]
    matches.sort(key=lambda m: (-m.contribution, m.term.key))
    return matches


def query_vector_for(
    query_text: str,
    index: Index,
    lex: Lexicon | None = None,
    stops: StopWordList | None = None,
) -> tuple[TermVector, list[TaggedToken]]:
    """Analyze query text into a corpus-weighted vector plus its tokens."""
    stops = stops if stops is not None else default_stop_words()
    tokens = preprocess(query_text, lex)
    profile = filter_stop_terms(generate_terms(tokens), stops)
    return tfidf_vector(profile, index.stats, owner="query"), tokens


def search(
    query_text: str,
    index: Index,
    top_k: int = 10,
    lex: Lexicon | None = None,
    stops: StopWordList | None = None,
    use_postings: bool = True,
) -> SearchResponse:
    """Rank all reports with a positive cosine score against the query.

    ``use_postings`` routes scoring through the term-to-reports map to
    skip zero-overlap reports; both paths produce identical output.
    """
    if top_k < 1:
        raise ValueError("top_k must be positive")
    if index.stats.n_docs == 0:
        raise EmptyCorpus("index contains no reports")
    qvec, tokens = query_vector_for(query_text, index, lex, stops)
    if not qvec:
        return SearchResponse(
            results=(), empty_query=True, query_tokens=tuple(tokens), query_vector=qvec
        )

    if use_postings:
        candidates = set()
        for term in qvec.weights:
            candidates.update(index.postings.get(term, ()))
    else:
        candidates = set(index.vectors)

    scored = []
    for report_id in candidates:
        score = cosine(qvec, index.vectors[report_id])
        if score > 0.0:
            scored.append((score, report_id))
    scored.sort(key=lambda pair: (-pair[0], pair[1]))

    results = []
    for score, report_id in scored[:top_k]:
        meta = index.meta[report_id]
        results.append(
            SearchResult(
                report_id=report_id,
                score=score,
                matched_terms=tuple(explain(qvec, index.vectors[report_id])),
                head=meta.head,
                verdict=meta.verdict,
            )
        )
    return SearchResponse(
        results=tuple(results),
        empty_query=False,
        query_tokens=tuple(tokens),
        query_vector=qvec,
    )
