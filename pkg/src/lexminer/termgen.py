"""Two-word term generation and stop-word filtering.

A term is an adjacent (adjective or noun, noun) token pair from a
preprocessed head, normalized and joined with an underscore. Terms
containing a domain stop word are dropped outright.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from .corpus import LawReport
from .lingproc import Lexicon, PosTag, TaggedToken, preprocess

# Left position admits adjectives and nouns; right position nouns only.
LEFT_TAGS = frozenset(
    {PosTag.JJ, PosTag.JJR, PosTag.JJS, PosTag.NN, PosTag.NNS, PosTag.NNP, PosTag.NNPS}
)
RIGHT_TAGS = frozenset({PosTag.NN, PosTag.NNS, PosTag.NNP, PosTag.NNPS})

# The mandatory stop-word baseline; always enforced.
BASELINE_STOP_WORDS = frozenset(
    {"petitioner", "complainant", "plaintiff", "plaintiff-respondent", "court"}
)


@dataclass(frozen=True, order=True)
class Term:
    """A normalized two-word unit, the atom of the vector space."""

    w1: str
    w2: str

    @property
    def key(self) -> str:
        return f"{self.w1}_{self.w2}"

    @classmethod
    def from_key(cls, key: str) -> "Term":
        parts = key.split("_")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"bad term key {key!r}")
        return cls(parts[0], parts[1])

    def __str__(self) -> str:
        return self.key


@dataclass(frozen=True)
class StopWordList:
    """Lowercased stop words; always includes the baseline entries."""

    words: frozenset[str] = BASELINE_STOP_WORDS

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "words", frozenset(w.lower() for w in self.words) | BASELINE_STOP_WORDS
        )

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    @classmethod
    def load(cls, path: str | Path) -> "StopWordList":
        """Read one word per line (``#`` comments) and add the baseline."""
        words = set()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip().lower()
            if line and not line.startswith("#"):
                words.add(line)
        return cls(words=frozenset(words))


@lru_cache(maxsize=1)
def default_stop_words() -> StopWordList:
    text = resources.files("lexminer.data").joinpath("stopwords.txt").read_text("utf-8")
    words = {
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    }
    return StopWordList(words=frozenset(words))


def generate_terms(tokens: Sequence[TaggedToken]) -> Counter[Term]:
    """Collect adjacent (Adj|Noun, Noun) pairs as a term multiset.

    Words containing an underscore are skipped: the underscore is the
    term-key separator, so such a word could not round-trip through a
    persisted index.
    """
    terms: Counter[Term] = Counter()
    for left, right in zip(tokens, tokens[1:]):
        if left.pos in LEFT_TAGS and right.pos in RIGHT_TAGS:
            if left.normal and right.normal and "_" not in left.normal + right.normal:
                terms[Term(left.normal, right.normal)] += 1
    return terms


def filter_stop_terms(terms: Counter[Term], stops: StopWordList) -> Counter[Term]:
    """Drop every term having a stop word in either position."""
    return Counter(
        {t: n for t, n in terms.items() if t.w1 not in stops and t.w2 not in stops}
    )


def term_profile(
    report: LawReport,
    lex: Lexicon | None = None,
    stops: StopWordList | None = None,
) -> Counter[Term]:
    """Full per-report pipeline: preprocess, generate terms, filter stops."""
    stops = stops if stops is not None else default_stop_words()
    return filter_stop_terms(generate_terms(preprocess(report.head, lex)), stops)
