import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexminer import (
    ChunkTag,
    Lexicon,
    PosTag,
    chunk,
    default_lexicon,
    pos_tag,
    preprocess,
    tokenize,
)
from lexminer.lingproc import CHUNK_TYPES, PUNCT_CHARS, RepairRule, normalize

from _checks import assert_bio_wellformed


# --- tokenize ---------------------------------------------------------------


def test_tokenize_plain_words():
    assert tokenize("Transfer of petitioner") == ["Transfer", "of", "petitioner"]


def test_tokenize_empty():
    assert tokenize("") == []
    assert tokenize("   \n\t ") == []


def test_tokenize_possessive_splits():
    assert tokenize("Principal's post") == ["Principal", "'s", "post"]


def test_tokenize_standalone_possessive_kept():
    assert tokenize("Principal 's post") == ["Principal", "'s", "post"]


def test_tokenize_strips_punctuation_to_own_tokens():
    assert tokenize("school.") == ["school", "."]
    assert tokenize("(1)") == ["(", "1", ")"]
    assert tokenize("Principal, Razick") == ["Principal", ",", "Razick"]
    assert tokenize('"quoted"') == ['"', "quoted", '"']


def test_tokenize_keeps_internal_hyphen_and_apostrophe():
    assert tokenize("Plaintiff-respondent appeared") == ["Plaintiff-respondent", "appeared"]
    assert tokenize("don't") == ["don't"]


def test_tokenize_pure_punctuation_chunk():
    assert tokenize("- -- ,") == ["-", "-", "-", ","]


def test_tokenize_trailing_apostrophe():
    assert tokenize("officers' duty") == ["officers", "'", "duty"]


# --- pos_tag ----------------------------------------------------------------


@pytest.fixture(scope="module")
def lex():
    return default_lexicon()


def test_tag_adjective_noun(lex):
    assert pos_tag(["eligible", "candidate"], lex) == [
        ("eligible", PosTag.JJ),
        ("candidate", PosTag.NN),
    ]


def test_tag_preposition(lex):
    assert pos_tag(["of"], lex) == [("of", PosTag.IN)]


def test_tag_past_verb_after_noun(lex):
    tags = dict(pos_tag(["candidate", "challenged"], lex))
    assert tags["challenged"] is PosTag.VBD


def test_tag_passive_stays_participle(lex):
    tags = dict(pos_tag(["candidate", "challenged", "by", "letter"], lex))
    assert tags["challenged"] is PosTag.VBN


def test_sentence_initial_word_not_proper(lex):
    # lexicon lookup is lowercased, so a capitalized known word keeps its tag
    assert pos_tag(["Transfer"], lex)[0][1] is PosTag.NN


def test_unknown_capitalized_mid_sentence_is_proper(lex):
    tags = dict(pos_tag(["against", "Vidyalaya"], lex))
    assert tags["Vidyalaya"] is PosTag.NNP


def test_unknown_capitalized_after_period_is_common(lex):
    tags = pos_tag([".", "Xyzzt"], lex)
    assert tags[1][1] is PosTag.NN


def test_suffix_fallbacks(lex):
    words = ["flemication", "blurgment", "grattly", "zorbing", "vexable", "17"]
    expected = [PosTag.NN, PosTag.NN, PosTag.RB, PosTag.VBG, PosTag.JJ, PosTag.CD]
    assert [t for _, t in pos_tag(words, lex)] == expected


def test_unknown_word_defaults_to_noun(lex):
    assert pos_tag(["zzqx"], lex) == [("zzqx", PosTag.NN)]


def test_punctuation_gets_punct_tag(lex):
    assert pos_tag(["-"], lex) == [("-", PosTag.PUNCT)]


def test_infinitive_repair(lex):
    tags = dict(pos_tag(["to", "transfer"], lex))
    assert tags["transfer"] is PosTag.VB


def test_totality(lex):
    text = "The appointment of the eligible candidate was challenged."
    assert len(pos_tag(tokenize(text), lex)) == len(tokenize(text))


# --- chunk ------------------------------------------------------------------


def test_chunk_noun_prep_noun():
    tagged = [("Transfer", PosTag.NN), ("of", PosTag.IN), ("petitioner", PosTag.NN)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["B-NP", "B-PP", "B-NP"]


def test_chunk_adjective_absorbed_into_np():
    tagged = [("Fundamental", PosTag.JJ), ("Rights", PosTag.NNS)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["B-NP", "I-NP"]


def test_chunk_empty():
    assert chunk([]) == []


def test_chunk_adjective_phrase_when_no_noun_follows():
    tagged = [("not", PosTag.RB), ("eligible", PosTag.JJ), ("for", PosTag.IN)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["B-ADJP", "I-ADJP", "B-PP"]


def test_chunk_verb_phrase_with_modal_and_adverb():
    tagged = [("must", PosTag.MD), ("not", PosTag.RB), ("be", PosTag.VB), ("held", PosTag.VBN)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["B-VP", "I-VP", "I-VP", "I-VP"]


def test_chunk_possessive_inside_np():
    tagged = [("Principal", PosTag.NN), ("'s", PosTag.POS), ("post", PosTag.NN)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["B-NP", "B-NP", "I-NP"]


def test_chunk_determiner_needs_a_head():
    tagged = [("the", PosTag.DT)]
    assert [str(t.chunk) for t in chunk(tagged)] == ["O"]


def test_chunk_tag_validation():
    with pytest.raises(ValueError):
        ChunkTag("O", "NP")
    with pytest.raises(ValueError):
        ChunkTag("B", "O")
    with pytest.raises(ValueError):
        ChunkTag("X", "NP")


# --- preprocess & properties --------------------------------------------------


def test_preprocess_known_sample(lex):
    tokens = preprocess("Transfer of petitioner", lex)
    assert [t.to_line() for t in tokens] == [
        "Transfer/NN/B-NP",
        "of/IN/B-PP",
        "petitioner/NN/B-NP",
    ]


def test_preprocess_empty(lex):
    assert preprocess("", lex) == []


def test_preprocess_deterministic(lex):
    text = "Subsequent appointment of eligible candidate challenged."
    assert preprocess(text, lex) == preprocess(text, lex)


@settings(max_examples=200)
@given(st.text(max_size=80))
def test_preprocess_totality_property(text):
    assert len(preprocess(text)) == len(tokenize(text))


@settings(max_examples=200)
@given(st.text(max_size=80))
def test_normal_empty_only_for_punctuation(text):
    for tok in preprocess(text):
        if not tok.normal:
            assert all(ch in PUNCT_CHARS for ch in tok.surface)
        assert tok.surface


@settings(max_examples=200)
@given(st.lists(st.sampled_from(sorted(PosTag, key=lambda t: t.value)), max_size=25))
def test_bio_wellformed_on_random_tag_sequences(tags):
    tagged = [(f"w{i}", tag) for i, tag in enumerate(tags)]
    tokens = chunk(tagged)
    assert_bio_wellformed(tokens)
    assert len(tokens) == len(tags)


def test_tag_closure_on_desk_corpus(desk_repo, lex):
    valid_tags = {t for t in PosTag}
    for report in desk_repo:
        for tok in preprocess(report.head, lex):
            assert tok.pos in valid_tags
            assert tok.chunk.chunk_type in CHUNK_TYPES


def test_bio_wellformed_on_desk_corpus(desk_repo, lex):
    for report in desk_repo:
        assert_bio_wellformed(preprocess(report.head, lex))


# --- lexicon & rule files -----------------------------------------------------


def test_lexicon_file_round_trip(tmp_path):
    path = tmp_path / "lex.txt"
    path.write_text("# comment\nfoo\tNN,VB\nbar\tJJ\n", encoding="utf-8")
    lex = Lexicon.load(path)
    assert lex.lookup("FOO") == (PosTag.NN, PosTag.VB)
    assert lex.lookup("bar") == (PosTag.JJ,)
    assert lex.lookup("baz") is None


def test_lexicon_rejects_bad_lines(tmp_path):
    path = tmp_path / "lex.txt"
    path.write_text("foo\tNN,NN\n", encoding="utf-8")
    with pytest.raises(ValueError):
        Lexicon.load(path)
    path.write_text("foo\tNOTATAG\n", encoding="utf-8")
    with pytest.raises(ValueError):
        Lexicon.load(path)


def test_repair_rule_parsing():
    rule = RepairRule.parse("NN VB WHEN PREVTAG TO")
    assert rule.from_tag is PosTag.NN and rule.to_tag is PosTag.VB
    assert rule.condition == "PREVTAG" and rule.value == "TO"
    with pytest.raises(ValueError):
        RepairRule.parse("NN VB PREVTAG TO")
    with pytest.raises(ValueError):
        RepairRule.parse("NN VB WHEN SOMEWHERE TO")


def test_custom_repair_rules_from_file(tmp_path):
    lex_path = tmp_path / "lex.txt"
    lex_path.write_text("widget\tNN\n", encoding="utf-8")
    rules_path = tmp_path / "rules.txt"
    rules_path.write_text("NN JJ WHEN NEXTWORD widget\n", encoding="utf-8")
    lex = Lexicon.load(lex_path, rules_path)
    tags = [t for _, t in pos_tag(["widget", "widget"], lex)]
    assert tags == [PosTag.JJ, PosTag.NN]


def test_normalize():
    assert normalize("Principal") == "principal"
    assert normalize("(school)") == "school"
    assert normalize("Plaintiff-Respondent") == "plaintiff-respondent"
    assert normalize("--") == ""
