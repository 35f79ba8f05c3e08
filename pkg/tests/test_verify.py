"""Check-suite plumbing: bookkeeping, reproducibility, small-weight runs."""

from macdet.verify import (
    CheckResult,
    run_appendix_suite,
    run_cross_suite,
    run_eigen_suite,
    run_oracle_suite,
    summarize,
)


def test_check_result_bookkeeping():
    check = CheckResult("demo", sampled=True)
    assert check.passed
    check.record(True, "first")
    check.record(False, "second")
    check.record(False, "third")
    assert check.instances == 3
    assert check.failures == 2
    assert check.detail == "second"
    assert not check.passed


def test_summarize_shape():
    good = CheckResult("good")
    good.record(True)
    bad = CheckResult("bad", sampled=True)
    bad.record(False, "ctx")
    report = summarize([good, bad])
    assert report["passed"] is False
    assert [c["name"] for c in report["checks"]] == ["good", "bad"]
    assert report["checks"][0] == {
        "name": "good", "instances": 1, "failures": 0,
        "sampled": False, "detail": "",
    }
    assert report["checks"][1]["detail"] == "ctx"
    assert summarize([good])["passed"] is True


def test_eigen_suite_small_weights():
    results = run_eigen_suite(max_weight=3)
    assert [r.name for r in results] == [
        "eigen-first-operator", "eigen-higher-operators"]
    assert all(r.passed for r in results)
    assert all(r.instances > 0 for r in results)


def test_oracle_suite_small_weights():
    results = run_oracle_suite(max_weight=3)
    assert [r.name for r in results] == [
        "modified-determinant-vs-oracle",
        "creation-vs-oracle",
        "schur-determinant-vs-oracle",
        "monomial-determinant-vs-oracle",
    ]
    # one instance per partition of weight <= 3
    assert all(r.instances == 7 for r in results)
    assert all(r.passed for r in results)


def test_cross_suite_small_weights():
    results = run_cross_suite(max_weight=3)
    assert [r.name for r in results] == [
        "schur-routes-agree",
        "creation-matches-determinant",
        "monomial-matches-schur-conversion",
        "symbolic-vs-raw-macdonald",
        "symbolic-vs-raw-creation",
    ]
    assert all(r.passed for r in results)


def test_appendix_suite_reduced_budget():
    results = run_appendix_suite(seed=11, samples=6)
    names = [r.name for r in results]
    assert len(names) == len(set(names))
    assert len(results) == 20
    failing = [r.name for r in results if not r.passed]
    assert failing == []
    for r in results:
        if r.sampled:
            assert r.instances >= 6, r.name


def test_appendix_suite_reproducible():
    first = summarize(run_appendix_suite(seed=4, samples=5))
    second = summarize(run_appendix_suite(seed=4, samples=5))
    assert first == second
