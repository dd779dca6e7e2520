"""Verification suite plumbing: profiles, skips, determinism, output."""

import json

import pytest

from toughgraph import CHECK_IDS, PROFILES, check_one, run_suite


FAST_CHECKS = (
    "toughness-petersen",
    "onetough-cycle",
    "gq-axioms",
    "spectra-closedform",
    "quotient-gadget",
    "xk-threshold",
)


def test_check_ids_are_stable():
    assert len(CHECK_IDS) == 24
    assert len(set(CHECK_IDS)) == 24
    for prefix in ("toughness-", "minimizers-", "tightness-", "bounds-",
                   "spectra-", "xk-"):
        assert any(c.startswith(prefix) for c in CHECK_IDS)


def test_profiles():
    assert set(PROFILES) == {"desk", "quick"}
    assert PROFILES["quick"].max_n < PROFILES["desk"].max_n
    with pytest.raises(ValueError):
        run_suite(profile="nosuch")


def test_fast_checks_pass_on_desk_profile():
    report = run_suite(checks=FAST_CHECKS)
    assert report.failed == 0
    assert report.skipped == 0
    assert report.exit_code == 0
    assert report.ok
    labels = {r.check for r in report.results}
    assert labels == set(FAST_CHECKS)


def test_quick_profile_skips_large_instances_with_bound_notes():
    report = run_suite(profile="quick", checks=("toughness-gq",))
    assert report.failed == 0
    assert report.skipped > 0
    assert report.exit_code == 3
    for r in report.results:
        if r.status == "skip":
            assert r.notes  # every skip carries the cheap substitute checks
            assert any("bound" in note or ">=" in note or "<=" in note
                       for note in r.notes)


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_suite(checks=("nosuch-check",))
    with pytest.raises(ValueError):
        check_one("nosuch-check")


def test_check_one_with_parameters():
    report = check_one("toughness-lattice", v=3)
    assert report.failed == 0 and report.skipped == 0
    assert len(report.results) == 1
    assert report.results[0].instance == "v=3"


def test_check_one_rejects_bad_parameters():
    with pytest.raises(ValueError):
        check_one("toughness-lattice", q=3)


def test_kneser_small_case_delegates_to_petersen():
    report = check_one("toughness-kneser2", v=5)
    assert report.failed == 0
    notes = [n for r in report.results for n in r.notes]
    assert any("Petersen" in n for n in notes)


def test_suite_results_are_deterministic():
    a = run_suite(checks=FAST_CHECKS)
    b = run_suite(checks=FAST_CHECKS, threads=2)

    def strip(report):
        return [(r.check, r.instance, r.status, r.detail, r.notes)
                for r in report.results]

    assert strip(a) == strip(b)


def test_report_serialization():
    report = run_suite(checks=("toughness-petersen", "gq-axioms"))
    text = report.to_text()
    assert "pass" in text
    assert text.count("\n") >= len(report.results)

    blob = json.loads(json.dumps(report.to_json()))  # must be serializable
    assert blob["profile"] == "desk"
    assert blob["summary"]["failed"] == 0
    for row in blob["results"]:
        assert set(row) >= {"check", "instance", "status", "detail"}
        assert "seconds" not in row  # timings would break determinism


def test_exit_code_mapping():
    ok = run_suite(checks=("onetough-cycle",))
    assert ok.exit_code == 0
    skipped = run_suite(profile="quick", checks=("toughness-gq",))
    assert skipped.exit_code == 3


def test_max_n_override():
    report = run_suite(checks=("toughness-lattice",), max_n=10)
    statuses = {r.instance: r.status for r in report.results}
    assert statuses["v=2"] == "pass"   # 4 vertices
    assert statuses["v=3"] == "pass"   # 9 vertices
    assert statuses["v=4"] == "skip"   # 16 vertices
