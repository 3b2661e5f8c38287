import json
import re

import pytest

from lexminer.cli import EXIT_DATA, EXIT_IO, EXIT_OK, main

from _checks import parse_cli_table
from conftest import FIXTURES

DESK = str(FIXTURES / "desk")
TOY = str(FIXTURES / "toy3")
CASES = str(FIXTURES / "eval_cases.json")


@pytest.fixture()
def desk_index_path(tmp_path):
    path = tmp_path / "desk.json"
    assert main(["mine", "--corpus", DESK, "--index", str(path)]) == EXIT_OK
    return str(path)


# --- mine ---------------------------------------------------------------------


def test_mine_writes_index_and_prints_counts(tmp_path, capsys):
    index_path = tmp_path / "toy.json"
    code = main(["mine", "--corpus", TOY, "--index", str(index_path)])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert index_path.exists()
    payload = json.loads(index_path.read_text(encoding="utf-8"))
    assert payload["n_docs"] == 3
    assert len(payload["vectors"]) == 3
    assert "T-001: 3 terms (3 distinct)" in out


def test_mine_duplicate_id_exits_2_naming_both_files(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "x.lawrep").write_text("#ID: DUP\n#HEAD\nfirst head\n", encoding="utf-8")
    (corpus / "y.lawrep").write_text("#ID: DUP\n#HEAD\nsecond head\n", encoding="utf-8")
    code = main(["mine", "--corpus", str(corpus), "--index", str(tmp_path / "i.json")])
    err = capsys.readouterr().err
    assert code == EXIT_DATA
    assert "x.lawrep" in err and "y.lawrep" in err


def test_mine_parse_error_exits_2_with_filename(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "bad.lawrep").write_text("#ID: X\n#DETAIL\nno head\n", encoding="utf-8")
    code = main(["mine", "--corpus", str(corpus), "--index", str(tmp_path / "i.json")])
    assert code == EXIT_DATA
    assert "bad.lawrep" in capsys.readouterr().err


def test_mine_missing_corpus_exits_3(tmp_path, capsys):
    code = main(["mine", "--corpus", str(tmp_path / "nope"), "--index", str(tmp_path / "i.json")])
    assert code == EXIT_IO
    assert capsys.readouterr().err


def test_mine_unwritable_index_exits_3(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("file, not a directory", encoding="utf-8")
    code = main(["mine", "--corpus", TOY, "--index", str(blocker / "idx.json")])
    assert code == EXIT_IO


def test_mine_twice_is_byte_identical(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["mine", "--corpus", DESK, "--index", str(first)]) == EXIT_OK
    assert main(["mine", "--corpus", DESK, "--index", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


# --- search -------------------------------------------------------------------


def test_search_table_format(desk_index_path, capsys):
    code = main(["search", "--index", desk_index_path,
                 "customs officers seized gold jewellery"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.splitlines()[0] == "rank  id  score  verdict"
    rows = parse_cli_table(out)
    assert rows[0][0] == "FR-021"
    assert re.fullmatch(r"0\.\d{4}|1\.0000", rows[0][1])


def test_search_self_retrieval_rank_one(desk_index_path, desk_repo, capsys):
    head = desk_repo.get("FR-007").head
    code = main(["search", "--index", desk_index_path, head])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    rows = parse_cli_table(out)
    assert rows[0] == ("FR-007", "1.0000")


def test_search_show_tags(desk_index_path, capsys):
    code = main(["search", "--index", desk_index_path, "--show-tags", "eligible candidate"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "eligible/JJ/B-NP" in out
    assert "candidate/NN/I-NP" in out


def test_search_show_terms(desk_index_path, capsys):
    code = main(["search", "--index", desk_index_path, "--show-terms",
                 "gold jewellery seized"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "gold_jewellery" in out
    assert "contribution=" in out


def test_search_stop_word_query_reports_empty_vector(desk_index_path, capsys):
    code = main(["search", "--index", desk_index_path, "the petitioner and the court"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "no matches (empty query vector)" in out


def test_search_top_k_limits_rows(desk_index_path, capsys):
    code = main(["search", "--index", desk_index_path, "--top-k", "1",
                 "fundamental rights of workers"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert len(parse_cli_table(out)) == 1


def test_search_query_file(desk_index_path, tmp_path, capsys):
    query_file = tmp_path / "q.txt"
    query_file.write_text("press censorship under emergency rule\n", encoding="utf-8")
    code = main(["search", "--index", desk_index_path, "--query-file", str(query_file)])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert parse_cli_table(out)[0][0] == "FR-003"


def test_search_missing_index_exits_3(tmp_path, capsys):
    code = main(["search", "--index", str(tmp_path / "missing.json"), "query"])
    assert code == EXIT_IO


def test_search_empty_index_exits_2(tmp_path, capsys):
    corpus = tmp_path / "empty"
    corpus.mkdir()
    index_path = tmp_path / "empty.json"
    assert main(["mine", "--corpus", str(corpus), "--index", str(index_path)]) == EXIT_OK
    code = main(["search", "--index", str(index_path), "query"])
    assert code == EXIT_DATA


def test_search_output_deterministic(desk_index_path, capsys):
    argv = ["search", "--index", desk_index_path, "--show-terms",
            "equal protection of the law"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second


def test_lexicon_env_var_override(desk_index_path, tmp_path, capsys, monkeypatch):
    custom = tmp_path / "custom_lex.txt"
    custom.write_text("zzfoo\tJJ\nzzbar\tNN\n", encoding="utf-8")
    monkeypatch.setenv("LEXMINER_LEXICON", str(custom))
    code = main(["search", "--index", desk_index_path, "--show-tags", "zzfoo zzbar"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "zzfoo/JJ/B-NP" in out


# --- eval ---------------------------------------------------------------------


def test_eval_prints_metrics_and_writes_report(desk_index_path, tmp_path, capsys):
    output = tmp_path / "report.json"
    code = main(["eval", "--index", desk_index_path, "--cases", CASES,
                 "--output", str(output)])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert re.search(r"precision@1 = \d\.\d{4}", out)
    assert re.search(r"recall overlap = \d\.\d{4}", out)
    payload = json.loads(output.read_text(encoding="utf-8"))
    assert set(payload) == {"precision_at_1", "recall_overlap", "rows"}
    assert len(payload["rows"]) == 22


def test_eval_without_output_prints_json(desk_index_path, capsys):
    code = main(["eval", "--index", desk_index_path, "--cases", CASES])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    start = out.index("{")
    payload = json.loads(out[start:])
    assert "precision_at_1" in payload


def test_eval_bad_cases_file_exits_2(desk_index_path, tmp_path, capsys):
    cases = tmp_path / "cases.json"
    cases.write_text('{"not": "a list"}', encoding="utf-8")
    assert main(["eval", "--index", desk_index_path, "--cases", str(cases)]) == EXIT_DATA
