import pytest

from cyclomat import search


def test_small_scan():
    r = search.search("qp2", 7, 100, jobs=1)
    assert r.hits == [13, 31]
    assert r.scanned == 22


def test_parallel_is_deterministic():
    a = search.search("pp2", 7, 20_000, jobs=1)
    b = search.search("pp2", 7, 20_000, jobs=3)
    assert a.hits == b.hits and a.scanned == b.scanned
    assert a.hits == sorted(a.hits)


def test_rejects_bad_ranges():
    with pytest.raises(ValueError):
        search.search("qp2", 5, 100)
    with pytest.raises(ValueError):
        search.search("qp2", 7, 10**7)
    with pytest.raises(KeyError):
        search.search("nope", 7, 100)


def test_default_jobs_env(monkeypatch):
    monkeypatch.setenv("CYCLOMAT_JOBS", "3")
    assert search.default_jobs() == 3
