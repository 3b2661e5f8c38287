"""lexminer: term-level text mining and vector-space retrieval for law reports."""

from .corpus import (
    CorpusError,
    DuplicateId,
    DuplicateSection,
    LawReport,
    MissingHead,
    MissingHeader,
    Repository,
    load_repository,
    parse_report,
    serialize_report,
)
from .lingproc import (
    ChunkTag,
    Lexicon,
    PosTag,
    TaggedToken,
    chunk,
    default_lexicon,
    dump_tags,
    pos_tag,
    preprocess,
    tokenize,
)
from .retrieval import (
    MatchedTerm,
    SearchResponse,
    SearchResult,
    cosine,
    explain,
    search,
)
from .termgen import (
    StopWordList,
    Term,
    default_stop_words,
    filter_stop_terms,
    generate_terms,
    term_profile,
)
from .weighting import (
    CorpusStats,
    EmptyCorpus,
    Index,
    ReportMeta,
    TermVector,
    build_stats,
    mine,
    tfidf_vector,
)

__version__ = "0.1.0"

__all__ = [
    "ChunkTag",
    "CorpusError",
    "CorpusStats",
    "DuplicateId",
    "DuplicateSection",
    "EmptyCorpus",
    "Index",
    "LawReport",
    "Lexicon",
    "MatchedTerm",
    "MissingHead",
    "MissingHeader",
    "PosTag",
    "ReportMeta",
    "Repository",
    "SearchResponse",
    "SearchResult",
    "StopWordList",
    "TaggedToken",
    "Term",
    "TermVector",
    "build_stats",
    "chunk",
    "cosine",
    "default_lexicon",
    "default_stop_words",
    "dump_tags",
    "explain",
    "filter_stop_terms",
    "generate_terms",
    "load_repository",
    "mine",
    "parse_report",
    "pos_tag",
    "preprocess",
    "search",
    "serialize_report",
    "term_profile",
    "tfidf_vector",
    "tokenize",
]
