import json

import pytest

from cyclomat import linalg, verify
from cyclomat.chars import CharSpec
from cyclomat.ff import field_of_order


def test_t1a_examples():
    r = verify.verify_T1a(7)
    assert r.passed and r.lhs["value"] == 1
    assert verify.verify_T1a(9).lhs == {"domain": "F_9", "value": [0, 0]}
    assert verify.verify_T1a(13).lhs["value"] == 0


def test_t1b_examples():
    r = verify.verify_T1b(7)
    assert r.passed and r.lhs["value"] == r.rhs["value"] == 3
    assert verify.verify_T1b(25).passed
    assert verify.verify_T1b(11).passed and verify.verify_T1b(11).lhs["value"] != 0


def test_t2_examples():
    assert verify.verify_T2(7).lhs["value"] == 0
    assert verify.verify_T2(9).lhs["value"] != 0  # f = 2 yet nonsingular
    r = verify.verify_T2(11)
    assert r.passed and r.lhs == r.rhs


def test_t1b_and_t2_fail_at_q9():
    assert verify.verify_T1b(9).verdict == "fail"
    assert verify.verify_T2(9).verdict == "fail"


@pytest.mark.parametrize("p", [11, 13, 17])
def test_c1_examples(p):
    assert verify.verify_C1(p).passed


@pytest.mark.parametrize("q,want", [(5, -2), (7, 0), (13, -2 * 13**4)])
def test_dq_minus_quadratic_exact(q, want):
    F = field_of_order(q)
    M = linalg.to_integer(linalg.build_dq(F, CharSpec(F, F.n), "-"))
    assert linalg.det_exact(M) == want == verify.corollary_dq_minus_phi(q)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_dq_quadratic_closed_form_against_bareiss(q):
    F = field_of_order(q)
    for sign in "-+":
        M = linalg.to_integer(linalg.build_dq(F, CharSpec(F, F.n), sign))
        assert linalg.det_exact(M) == verify.dq_quadratic_exact(q, sign)


def test_lemma_examples():
    assert verify.verify_L51(7, 3).passed
    assert all(verify.verify_L52(9, k).passed for k in range(1, 8))
    r = verify.verify_L41(11)
    assert r.passed and r.lhs["lambda_0"] == {"domain": "Q", "value": "-1"}


def test_background_examples():
    assert verify.verify_CHAPMAN1(7).passed
    r = verify.verify_CHAPMAN0(7)
    assert r.lhs["value"] == "8" and r.rhs["value"] == "-8"
    assert verify.verify_SUN_24(11).passed
    skipped = verify.verify_CHAPMAN0(13)
    assert skipped.verdict == "skipped" and skipped.reason


def test_reports_are_deterministic_and_round_trip():
    for cid, params in [("T1a", {"q": 11}), ("T5", {"q": 9, "k": 3}), ("L41", {"q": 13})]:
        a, b = verify.run_check(cid, params), verify.run_check(cid, params)
        assert a.canonical() == b.canonical()
        text = a.to_json()
        assert verify.CheckReport.from_json(text).to_json() == text
        json.loads(text)


def test_parallel_suite_matches_serial():
    jobs = verify.plan(["T1a", "T2", "L21", "SUN-24"], 3, 40, 20)
    serial = [r.canonical() for r in verify.run_suite(jobs, 1)]
    parallel = [r.canonical() for r in verify.run_suite(jobs, 3)]
    assert serial == parallel
    for rep, (cid, params) in zip(serial, jobs):
        assert rep["check_id"] == cid
        assert params.items() <= rep["params"].items()


def test_plan_ranges():
    jobs = verify.plan(["T5"], 3, 121, 9)
    assert {j[1]["q"] for j in jobs} == {3, 5, 7, 9}
    assert len([j for j in jobs if j[1]["q"] == 9]) == 7
    with pytest.raises(KeyError):
        verify.run_check("nosuch", {})
