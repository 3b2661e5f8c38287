import json
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from urllib.parse import quote

import pytest

from lexminer import LawReport, Repository, mine, search
from lexminer.service import ServiceState

from _checks import http_get, http_post, running_server


@pytest.fixture(scope="module")
def desk_state(desk_index, desk_repo):
    return ServiceState(index=desk_index, reports={r.id: r for r in desk_repo})


@pytest.fixture(scope="module")
def base_url(desk_state):
    with running_server(desk_state) as url:
        yield url


def test_health(base_url, desk_index):
    status, body = http_get(f"{base_url}/health")
    assert status == 200
    assert body == {
        "status": "ok",
        "n_docs": desk_index.stats.n_docs,
        "vocabulary_size": len(desk_index.stats.df),
    }


def test_search_basic(base_url):
    status, body = http_post(
        f"{base_url}/search", {"text": "fundamental rights violation", "top_k": 3}
    )
    assert status == 200
    assert body["empty_query"] is False
    assert 1 <= len(body["results"]) <= 3
    scores = [r["score"] for r in body["results"]]
    assert scores == sorted(scores, reverse=True)
    first = body["results"][0]
    assert set(first) == {"id", "score", "head", "verdict", "matched_terms"}
    assert body["query_tags"][0] == {"surface": "fundamental", "pos": "JJ", "chunk": "B-NP"}


def test_search_matches_library_ranking(base_url, desk_index):
    query = "cruel treatment of remand prisoner in police custody"
    _, body = http_post(f"{base_url}/search", {"text": query, "top_k": 10})
    expected = search(query, desk_index, top_k=10)
    assert [r["id"] for r in body["results"]] == [r.report_id for r in expected.results]
    assert [r["score"] for r in body["results"]] == [r.score for r in expected.results]


def test_search_blank_text_is_400(base_url):
    status, body = http_post(f"{base_url}/search", {"text": "   "})
    assert status == 400
    assert body["error"] == "EmptyQuery"
    assert "message" in body


def test_search_missing_text_is_400(base_url):
    status, body = http_post(f"{base_url}/search", {"top_k": 3})
    assert status == 400
    assert body["error"] == "EmptyQuery"


def test_search_stop_words_only_is_200_empty(base_url):
    status, body = http_post(f"{base_url}/search", {"text": "the petitioner"})
    assert status == 200
    assert body["empty_query"] is True
    assert body["results"] == []


@pytest.mark.parametrize("top_k", [0, -1, 101, "five", 2.5, True])
def test_search_bad_top_k_is_400(base_url, top_k):
    status, body = http_post(f"{base_url}/search", {"text": "press censorship", "top_k": top_k})
    assert status == 400
    assert body["error"] == "InvalidTopK"


def test_search_invalid_json_is_400(base_url):
    status, body = http_post(f"{base_url}/search", None, raw=b"{not json")
    assert status == 400
    assert body["error"] == "InvalidJson"

    status, body = http_post(f"{base_url}/search", None, raw=b'["array"]')
    assert status == 400
    assert body["error"] == "InvalidJson"


def test_search_get_is_405(base_url):
    status, body = http_get(f"{base_url}/search")
    assert status == 405
    assert body["error"] == "MethodNotAllowed"


def test_unknown_route_is_404(base_url):
    status, body = http_get(f"{base_url}/nothing-here")
    assert status == 404
    assert body["error"] == "NotFound"


def test_report_by_id(base_url, desk_repo):
    report = desk_repo.get("FR-005")
    status, body = http_get(f"{base_url}/reports/FR-005")
    assert status == 200
    assert body == {
        "id": "FR-005",
        "head": report.head,
        "detail": report.detail,
        "verdict": report.verdict,
    }


def test_report_unknown_id_is_404(base_url):
    status, body = http_get(f"{base_url}/reports/FR-999")
    assert status == 404
    assert body["error"] == "NotFound"


def test_report_id_url_escaping_round_trips():
    reports = [
        LawReport(id="AB 1", head="gold jewellery seizure"),
        LawReport(id="A/B", head="press censorship order"),
    ]
    repo = Repository(tuple(reports))
    state = ServiceState(index=mine(repo), reports={r.id: r for r in reports})
    with running_server(state) as url:
        for report in reports:
            status, body = http_get(f"{url}/reports/{quote(report.id, safe='')}")
            assert status == 200
            assert body["id"] == report.id


def test_index_not_loaded_is_503():
    state = ServiceState(index=None)
    with running_server(state) as url:
        for probe in (lambda: http_get(f"{url}/health"),
                      lambda: http_post(f"{url}/search", {"text": "x"}),
                      lambda: http_get(f"{url}/reports/X")):
            status, body = probe()
            assert status == 503
            assert body["error"] == "IndexNotLoaded"


def test_empty_index_search_is_503():
    state = ServiceState(index=mine(Repository()))
    with running_server(state) as url:
        status, body = http_post(f"{url}/search", {"text": "anything"})
        assert status == 503
        assert body["error"] == "EmptyCorpus"


def test_cors_headers_when_enabled(desk_index):
    state = ServiceState(index=desk_index, allow_origin="http://localhost:5173")
    with running_server(state) as url:
        with urllib.request.urlopen(f"{url}/health") as resp:
            assert resp.headers["Access-Control-Allow-Origin"] == "http://localhost:5173"
        request = urllib.request.Request(f"{url}/search", method="OPTIONS")
        with urllib.request.urlopen(request) as resp:
            assert resp.status == 204
            assert resp.headers["Access-Control-Allow-Methods"] == "GET, POST, OPTIONS"


def test_no_cors_headers_by_default(base_url):
    with urllib.request.urlopen(f"{base_url}/health") as resp:
        assert resp.headers.get("Access-Control-Allow-Origin") is None


def test_concurrent_requests_consistent(base_url):
    payload = {"text": "equal protection of plantation worker", "top_k": 5}

    def call(_):
        return http_post(f"{base_url}/search", payload)

    with ThreadPoolExecutor(max_workers=8) as pool:
        outcomes = list(pool.map(call, range(40)))
    assert all(status == 200 for status, _ in outcomes)
    bodies = [json.dumps(body, sort_keys=True) for _, body in outcomes]
    assert len(set(bodies)) == 1
