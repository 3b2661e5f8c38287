import pytest

from lexminer.evaluation import EvalCase, jaccard, load_cases, run_eval

from conftest import FIXTURES


def test_case_requires_exactly_one_kind():
    EvalCase(query_text="q", expected_id="FR-001")
    EvalCase(query_text="q", paraphrase_of="other q")
    with pytest.raises(ValueError):
        EvalCase(query_text="q")
    with pytest.raises(ValueError):
        EvalCase(query_text="q", expected_id="FR-001", paraphrase_of="other")
    with pytest.raises(ValueError):
        EvalCase(query_text="   ", expected_id="FR-001")


def test_jaccard_edges():
    assert jaccard([], []) == 1.0
    assert jaccard(["a"], []) == 0.0
    assert jaccard(["a", "b"], ["b", "c"]) == pytest.approx(1 / 3)
    assert jaccard(["a", "b"], ["a", "b"]) == 1.0


def test_load_cases_fixture():
    cases = load_cases(FIXTURES / "eval_cases.json")
    assert len(cases) == 22
    assert sum(1 for c in cases if c.expected_id) == 10
    assert sum(1 for c in cases if c.paraphrase_of) == 12


def test_run_eval_on_desk_corpus(desk_index):
    cases = load_cases(FIXTURES / "eval_cases.json")
    report = run_eval(desk_index, cases)
    assert 0.0 <= report.precision_at_1 <= 1.0
    assert 0.0 <= report.recall_overlap <= 1.0
    assert len(report.rows) == len(cases)
    kinds = {row["kind"] for row in report.rows}
    assert kinds == {"precision", "recall"}
    for row in report.rows:
        if row["kind"] == "precision":
            assert row["hit"] == (row["rank"] == 1)


def test_run_eval_reproducible(desk_index):
    cases = load_cases(FIXTURES / "eval_cases.json")
    first = run_eval(desk_index, cases)
    second = run_eval(desk_index, cases)
    assert first.to_payload() == second.to_payload()


def test_empty_categories_give_none(desk_index):
    only_precision = [EvalCase(query_text="press censorship", expected_id="FR-003")]
    report = run_eval(desk_index, only_precision)
    assert report.recall_overlap is None
    assert report.precision_at_1 is not None

    only_recall = [EvalCase(query_text="press censorship", paraphrase_of="the press censorship")]
    report = run_eval(desk_index, only_recall)
    assert report.precision_at_1 is None
    assert report.recall_overlap is not None


def test_missing_expected_id_counts_as_miss(desk_index):
    report = run_eval(
        desk_index,
        [EvalCase(query_text="press censorship", expected_id="FR-999")],
    )
    assert report.precision_at_1 == 0.0
    assert report.rows[0]["rank"] is None


def test_report_payload_shape(desk_index):
    report = run_eval(
        desk_index,
        [EvalCase(query_text="press censorship", expected_id="FR-003")],
    )
    payload = report.to_payload()
    assert set(payload) == {"precision_at_1", "recall_overlap", "rows"}
    assert isinstance(payload["rows"], list)
