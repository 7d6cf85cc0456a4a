import pytest

import polyq.verify as verify_mod
from polyq.kaehler import CG
from polyq.operad import WElement
from polyq.verify import (
    VerificationReport,
    beta_table,
    verify_operad_axioms,
    verify_recurrence,
    verify_theorem,
)


def test_theorem_small():
    rep = verify_theorem(4, 3)
    assert rep.passed
    assert rep.scope["trees"] == 1 + 1 + 2 + 5
    # sum over trees of 4^(n+1) inputs
    assert rep.checks_run == 4 ** 2 + 4 ** 3 + 2 * 4 ** 4 + 5 * 4 ** 5


def test_theorem_two_leaves_is_cg():
    rep = verify_theorem(2, 3)
    assert rep.passed and rep.scope["trees"] == 2


def test_theorem_rejects_tiny():
    with pytest.raises(ValueError):
        verify_theorem(1, 3)


def test_failures_are_reported_minimal_first(monkeypatch):
    # a deliberately wrong arity-2 element: cg plus one at every odd d
    broken = WElement(2, lambda d, c: CG.eval(d, c) + d % 2, lambda c: c[0] + c[1] + 1)
    real = verify_mod.f_kaehler
    monkeypatch.setattr(verify_mod, "f_kaehler", lambda n: broken if n == 2 else real(n))
    rep = verify_theorem(2, 2)
    assert not rep.passed
    assert rep.failure_count == len(rep.failures)
    assert rep.failures[0]["input"] == [1, 0, 0]
    inputs = [f["input"] for f in rep.failures]
    assert inputs == sorted(inputs)


def test_failure_list_is_capped():
    rep = VerificationReport("x", {})
    for k in range(80):
        rep.record(False, input=[80 - k])
    rep.finish(0.0)
    assert rep.failure_count == 80
    assert len(rep.failures) == 50
    assert rep.failures[0]["input"] == [1]


def test_operad_axioms_default():
    rep = verify_operad_axioms(max_label=2)
    assert rep.passed
    assert rep.scope["associativity_cases"] == ["I", "II", "III"]


def test_recurrence_report():
    rep = verify_recurrence(8)
    assert rep.passed
    with pytest.raises(ValueError):
        verify_recurrence(3)


def test_beta_table():
    table = beta_table(5)
    assert table[0] == [3, 1, 1, 1, 0, 0, 0]
    assert table[1] == [4, 1, 3, 2, 1, 0, 0]
    assert table[2][:3] == [5, 3, 6]


def test_reports_deterministic():
    a = verify_theorem(3, 3).to_json()
    b = verify_theorem(3, 3).to_json()
    assert a == b
    assert "wall_time" not in a
    assert "wall_time" in verify_theorem(3, 2).to_json(timing=True)
