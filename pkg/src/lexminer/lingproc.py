"""Linguistic preprocessing: tokenization, POS tagging and BIO chunking.

The tagger is rule-based and self-contained: a lexicon of word forms
with ordered tag lists, a suffix table for unknown words, and a short
list of contextual repair rules applied after initial tagging. The
chunker assigns BIO phrase tags over the POS sequence with a greedy
longest-match grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, unique
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence


@unique
class PosTag(Enum):
    """Word-level tag set: the Penn-style tags plus PUNCT for punctuation."""

    CC = "CC"
    CD = "CD"
    DT = "DT"
    EX = "EX"
    FW = "FW"
    IN = "IN"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    LS = "LS"
    MD = "MD"
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    NNPS = "NNPS"
    PDT = "PDT"
    POS = "POS"
    PRP = "PRP"
    PRPS = "PRP$"
    RB = "RB"
    RBR = "RBR"
    RBS = "RBS"
    RP = "RP"
    SYM = "SYM"
    TO = "TO"
    UH = "UH"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    WDT = "WDT"
    WP = "WP"
    WPS = "WP$"
    WRB = "WRB"
    PUNCT = "PUNCT"

    def __str__(self) -> str:
        return self.value


CHUNK_TYPES = ("NP", "VP", "PP", "ADJP", "ADVP", "O")
CHUNK_PREFIXES = ("B", "I", "O")


@dataclass(frozen=True)
class ChunkTag:
    """BIO chunk tag: B/I prefix with a phrase type, or O outside any chunk."""

    prefix: str
    chunk_type: str

    def __post_init__(self) -> None:
        if self.prefix not in CHUNK_PREFIXES:
            raise ValueError(f"bad chunk prefix {self.prefix!r}")
        if self.chunk_type not in CHUNK_TYPES:
            raise ValueError(f"bad chunk type {self.chunk_type!r}")
        if (self.prefix == "O") != (self.chunk_type == "O"):
            raise ValueError("prefix O and chunk type O must occur together")

    def __str__(self) -> str:
        if self.prefix == "O":
            return "O"
        return f"{self.prefix}-{self.chunk_type}"


OUTSIDE = ChunkTag("O", "O")


@dataclass(frozen=True)
class TaggedToken:
    """One token with its normalized form, POS tag and chunk tag."""

    surface: str
    normal: str
    pos: PosTag
    chunk: ChunkTag

    def to_line(self) -> str:
        """Render as ``surface/POS/CHUNK``, the debug dump notation."""
        return f"{self.surface}/{self.pos}/{self.chunk}"


# Punctuation stripped from token edges; internal hyphens and
# apostrophes stay attached.
PUNCT_CHARS = ".,;:-(){}[]'\"/"
_PUNCT_SET = frozenset(PUNCT_CHARS)
_SENTENCE_END = frozenset({".", "!", "?"})
_NUMBER_RE = re.compile(r"\d[\d,.]*")

# Suffix fallbacks for words not in the lexicon, tried in order.
DEFAULT_SUFFIX_RULES: tuple[tuple[str, PosTag], ...] = (
    ("tion", PosTag.NN),
    ("sion", PosTag.NN),
    ("ment", PosTag.NN),
    ("ness", PosTag.NN),
    ("ship", PosTag.NN),
    ("ance", PosTag.NN),
    ("ence", PosTag.NN),
    ("ity", PosTag.NN),
    ("ism", PosTag.NN),
    ("ible", PosTag.JJ),
    ("able", PosTag.JJ),
    ("less", PosTag.JJ),
    ("ous", PosTag.JJ),
    ("ive", PosTag.JJ),
    ("ful", PosTag.JJ),
    ("ing", PosTag.VBG),
    ("ed", PosTag.VBN),
    ("ly", PosTag.RB),
    ("ic", PosTag.JJ),
    ("al", PosTag.JJ),
)

_REPAIR_CONDITIONS = ("PREVTAG", "NEXTTAG", "PREVWORD", "NEXTWORD")


@dataclass(frozen=True)
class RepairRule:
    """Contextual rule: change from_tag to to_tag when the condition holds."""

    from_tag: PosTag
    to_tag: PosTag
    condition: str
    value: str

    @classmethod
    def parse(cls, line: str) -> "RepairRule":
        parts = line.split()
        if len(parts) != 5 or parts[2] != "WHEN":
            raise ValueError(f"bad repair rule {line!r}")
        from_tag, to_tag, _, condition, value = parts
        if condition not in _REPAIR_CONDITIONS:
            raise ValueError(f"bad repair condition {condition!r}")
        if condition in ("PREVTAG", "NEXTTAG"):
            PosTag(value)  # validate early
        return cls(PosTag(from_tag), PosTag(to_tag), condition, value)


@dataclass(frozen=True)
class Lexicon:
    """Immutable tagging resources: word entries, suffix table, repair rules.

    Entries map lowercased word forms to ordered tag tuples, most likely
    tag first. Every entry is non-empty and duplicate-free.
    """

    entries: dict[str, tuple[PosTag, ...]]
    suffix_rules: tuple[tuple[str, PosTag], ...] = DEFAULT_SUFFIX_RULES
    repair_rules: tuple[RepairRule, ...] = ()

    def lookup(self, word: str) -> tuple[PosTag, ...] | None:
        return self.entries.get(word.lower())

    @staticmethod
    def parse_entries(text: str) -> dict[str, tuple[PosTag, ...]]:
        entries: dict[str, tuple[PosTag, ...]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word, tagspec = line.split("\t")
                tags = tuple(PosTag(t) for t in tagspec.split(","))
            except ValueError as exc:
                raise ValueError(f"lexicon line {lineno}: {exc}") from None
            if not tags or len(set(tags)) != len(tags):
                raise ValueError(f"lexicon line {lineno}: bad tag list")
            entries[word.lower()] = tags
        return entries

    @staticmethod
    def parse_repair_rules(text: str) -> tuple[RepairRule, ...]:
        rules = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rules.append(RepairRule.parse(line))
        return tuple(rules)

    @classmethod
    def load(cls, path: str | Path, repair_path: str | Path | None = None) -> "Lexicon":
        """Load word entries from ``path``; repair rules come from
        ``repair_path`` when given, otherwise the bundled defaults."""
        entries = cls.parse_entries(Path(path).read_text(encoding="utf-8"))
        if repair_path is not None:
            rules = cls.parse_repair_rules(Path(repair_path).read_text(encoding="utf-8"))
        else:
            rules = _default_repair_rules()
        return cls(entries=entries, repair_rules=rules)


def _data_text(name: str) -> str:
    return resources.files("lexminer.data").joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def _default_repair_rules() -> tuple[RepairRule, ...]:
    return Lexicon.parse_repair_rules(_data_text("repair_rules.txt"))


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    """The bundled lexicon, loaded once per process."""
    return Lexicon(
        entries=Lexicon.parse_entries(_data_text("lexicon.txt")),
        repair_rules=_default_repair_rules(),
    )


def normalize(surface: str) -> str:
    """Lowercase and strip surrounding punctuation; '' for pure punctuation."""
    return surface.strip(PUNCT_CHARS).lower()


def _is_punct(token: str) -> bool:
    return all(ch in _PUNCT_SET for ch in token)


def tokenize(text: str) -> list[str]:
    """Split text into surface tokens.

    Whitespace separates tokens; leading and trailing punctuation
    characters become tokens of their own; internal hyphens and
    apostrophes stay attached; a possessive 's splits off.
    """
    tokens: list[str] = []
    for chunk in text.split():
        if chunk.lower() == "'s":
            tokens.append(chunk)
            continue
        leading: list[str] = []
        trailing: list[str] = []
        core = chunk
        while core and core[0] in _PUNCT_SET:
            leading.append(core[0])
            core = core[1:]
        while core and core[-1] in _PUNCT_SET:
            trailing.append(core[-1])
            core = core[:-1]
        trailing.reverse()
        tokens.extend(leading)
        if core:
            if core.lower().endswith("'s") and len(core) > 2:
                tokens.append(core[:-2])
                tokens.append(core[-2:])
            else:
                tokens.append(core)
        tokens.extend(trailing)
    return tokens


def _initial_tag(surface: str, index: int, tokens: Sequence[str], lex: Lexicon) -> PosTag:
    if _is_punct(surface):
        return PosTag.PUNCT
    hit = lex.lookup(surface)
    if hit:
        return hit[0]
    lower = surface.lower()
    if _NUMBER_RE.fullmatch(lower):
        return PosTag.CD
    for suffix, tag in lex.suffix_rules:
        if lower.endswith(suffix) and len(lower) >= len(suffix) + 2:
            return tag
    sentence_initial = index == 0 or tokens[index - 1] in _SENTENCE_END
    if surface[:1].isupper() and not sentence_initial:
        return PosTag.NNP
    return PosTag.NN


def _apply_repairs(tokens: Sequence[str], tags: list[PosTag], rules: Iterable[RepairRule]) -> None:
    n = len(tags)
    for rule in rules:
        for i in range(n):
            if tags[i] is not rule.from_tag:
                continue
            if rule.condition == "PREVTAG":
                hit = i > 0 and tags[i - 1] is PosTag(rule.value)
            elif rule.condition == "NEXTTAG":
                hit = i + 1 < n and tags[i + 1] is PosTag(rule.value)
            elif rule.condition == "PREVWORD":
                hit = i > 0 and tokens[i - 1].lower() == rule.value.lower()
            else:  # NEXTWORD
                hit = i + 1 < n and tokens[i + 1].lower() == rule.value.lower()
            if hit:
                tags[i] = rule.to_tag


def pos_tag(tokens: Sequence[str], lex: Lexicon) -> list[tuple[str, PosTag]]:
    """Assign one POS tag per token.

    Tag choice per token: lexicon hit (first tag), then suffix rules,
    then NNP for capitalized words not at a sentence start, then NN.
    The contextual repair rules then run in order, one full pass each.
    """
    tags = [_initial_tag(tok, i, tokens, lex) for i, tok in enumerate(tokens)]
    _apply_repairs(tokens, tags, lex.repair_rules)
    return list(zip(tokens, tags))


_NP_HEAD = frozenset({PosTag.NN, PosTag.NNS, PosTag.NNP, PosTag.NNPS, PosTag.PRP, PosTag.WP})
_NP_MOD = frozenset({PosTag.JJ, PosTag.JJR, PosTag.JJS, PosTag.CD, PosTag.POS})
_VERBS = frozenset({PosTag.VB, PosTag.VBD, PosTag.VBG, PosTag.VBN, PosTag.VBP, PosTag.VBZ})
_ADJS = frozenset({PosTag.JJ, PosTag.JJR, PosTag.JJS})


def _match_np(tags: Sequence[PosTag], i: int) -> int:
    n = len(tags)
    j = i
    if j < n and tags[j] is PosTag.DT:
        j += 1
    while j < n and tags[j] in _NP_MOD:
        j += 1
    k = j
    while k < n and tags[k] in _NP_HEAD:
        k += 1
    return k - i if k > j else 0


def _match_vp(tags: Sequence[PosTag], i: int) -> int:
    n = len(tags)
    j = i
    if j < n and tags[j] is PosTag.MD:
        j += 1
    if j < n and tags[j] is PosTag.RB:
        j += 1
    k = j
    while k < n and tags[k] in _VERBS:
        k += 1
    return k - i if k > j else 0


def _match_adjp(tags: Sequence[PosTag], i: int) -> int:
    n = len(tags)
    j = i
    if j < n and tags[j] is PosTag.RB:
        j += 1
    k = j
    while k < n and tags[k] in _ADJS:
        k += 1
    return k - i if k > j else 0


def chunk(tagged: Sequence[tuple[str, PosTag]]) -> list[TaggedToken]:
    """Assign BIO chunk tags over a tagged token sequence.

    Greedy longest match at each position, trying noun phrase, verb
    phrase, prepositional phrase, then adjective phrase; anything left
    is outside every chunk.
    """
    tags = [t for _, t in tagged]
    out: list[TaggedToken] = []
    i = 0
    n = len(tags)
    while i < n:
        for matcher, ctype in (
            (_match_np, "NP"),
            (_match_vp, "VP"),
            (None, "PP"),
            (_match_adjp, "ADJP"),
        ):
            if matcher is None:
                length = 1 if tags[i] in (PosTag.IN, PosTag.TO) else 0
            else:
                length = matcher(tags, i)
            if length:
                break
        if not length:
            surface, pos = tagged[i]
            out.append(TaggedToken(surface, normalize(surface), pos, OUTSIDE))
            i += 1
            continue
        for offset in range(length):
            surface, pos = tagged[i + offset]
            prefix = "B" if offset == 0 else "I"
            out.append(TaggedToken(surface, normalize(surface), pos, ChunkTag(prefix, ctype)))
        i += length
    return out


def preprocess(text: str, lex: Lexicon | None = None) -> list[TaggedToken]:
    """Tokenize, tag and chunk a block of text."""
    lex = lex if lex is not None else default_lexicon()
    return chunk(pos_tag(tokenize(text), lex))


def dump_tags(tokens: Iterable[TaggedToken]) -> str:
    """One token per line in ``surface/POS/CHUNK`` notation."""
    return "\n".join(tok.to_line() for tok in tokens)
