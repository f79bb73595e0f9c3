import time

import jsonschema
import pytest

from palfac import PSingularSeq, Word
from palfac.families import Fibonacci, ThueMorse, staircase
from palfac.schema import CHECK_REPORT
from palfac.verify import (
    CHECK_NAMES,
    check_cross_m,
    check_family_membership,
    check_lengths,
    check_pc_fib,
    check_pc_mbonacci,
    check_pz_fib,
    check_pz_mbonacci,
    check_singular_identities,
    check_structure,
    check_z_fib,
    engine_index,
    statement_index,
    statement_index_offset,
    run_all,
)


def test_index_conventions():
    assert statement_index("z_fib", 0) == 1
    assert statement_index("pc_fib", 0) == -1
    assert statement_index("pz_mbonacci", 3, m=4) == 3
    assert statement_index("pc_mbonacci", 0, m=3) == -3
    assert statement_index_offset("pc_mbonacci", 5) == -5
    for theorem in ("z_fib", "pz_fib", "pc_fib", "pz_mbonacci", "pc_mbonacci"):
        for m in (2, 3, 5):
            assert engine_index(theorem, statement_index(theorem, 7, m), m) == 7
    with pytest.raises(ValueError):
        statement_index_offset("lz78")


@pytest.mark.parametrize("check", [check_z_fib, check_pz_fib, check_pc_fib])
def test_fibonacci_checks(check):
    r = check(10)
    assert r.passed, r.counterexample


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_mbonacci_checks(m):
    for r in (check_pz_mbonacci(m, 8), check_pc_mbonacci(m, 8), check_singular_identities(m, 10),
              check_cross_m(m), check_lengths(m, 60, construct_max=14), check_structure(m, 8)):
        assert r.passed, (r.name, r.counterexample)


def test_corrupted_word_is_caught():
    seq = PSingularSeq(3)
    assert str(seq.z(4)) == "020101020"
    seq.z(8)
    seq._words[5] = Word.parse("020121020", 3)  # still a palindrome, wrong letters
    r = check_singular_identities(3, 8, seq=seq)
    assert not r.passed
    assert r.counterexample["location"] == "phi-shift n=4"
    assert r.counterexample["actual"] == "020121020"
    assert r.counterexample["expected"] == "020101020"
    jsonschema.validate(r.to_dict(), CHECK_REPORT)


def test_family_membership_outcomes():
    assert check_family_membership(Fibonacci(), 10_000).passed
    assert check_family_membership(staircase(), 10_000).passed
    tm = check_family_membership(ThueMorse(), 10_000, expect_equal=False)
    assert tm.passed and tm.notes["divergence_index"] == 2
    assert tm.notes["z_factor"] == "10" and tm.notes["pz_factor"] == "101"
    wrong = check_family_membership(ThueMorse(), 10_000)
    assert not wrong.passed and wrong.counterexample["location"] == "z versus pz"


def test_small_suite_is_fast_and_reproducible():
    t0 = time.perf_counter()
    first = run_all(m_max=3, depth=6, window=2000)
    assert time.perf_counter() - t0 < 1.0
    assert all(r.passed for r in first), [(r.name, r.counterexample) for r in first if not r.passed]
    second = run_all(m_max=3, depth=6, window=2000, workers=4)
    assert [r.outcome() for r in first] == [r.outcome() for r in second]
    for r in first:
        jsonschema.validate(r.to_dict(), CHECK_REPORT)


def test_depth_one_is_well_formed():
    reports = run_all(m_max=2, depth=1, window=100)
    assert {r.name for r in reports} == set(CHECK_NAMES)
    for r in reports:
        jsonschema.validate(r.to_dict(), CHECK_REPORT)
        assert r.passed, (r.name, r.counterexample)


def test_selection():
    assert {r.name for r in run_all(m_max=2, depth=4, window=500, only=["check_cross_m"])} == {"check_cross_m"}
    with pytest.raises(ValueError):
        run_all(only=["check_everything"])


def test_budget_overrun_is_a_failed_report(monkeypatch):
    monkeypatch.setenv("PALFAC_BUDGET_MB", "0.0001")
    reports = run_all(m_max=2, depth=4, window=10_000, only=["check_global_factorizations"])
    assert len(reports) == 1 and not reports[0].passed
    assert "BudgetExceeded" in reports[0].counterexample["actual"]
