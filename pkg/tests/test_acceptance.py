"""Acceptance criteria, one test each. A PASS/FAIL line per criterion is
printed in the terminal summary (and to stdout when run with ``-s``)."""
import itertools
import json
import subprocess
import sys
import time

import numpy as np
import pytest
from hypothesis import given, settings

from polyq.bending import LengthVector, count_labelings, f_re, iter_labelings, lattice_count
from polyq.bending import beta_direct, beta_recurrence
from polyq.geometry import bending_values, closure_residual, realize, tolerance
from polyq.kaehler import cg, dim_H0, f_kaehler, weight_oracle
from polyq.notation import normalize, parse, serialize
from polyq.operad import inputs
from polyq.trees import caterpillar, enumerate_trivalent, internal_edges
from polyq.verify import verify_operad_axioms, verify_recurrence

from test_notation import tree_texts_with_whitespace
from test_trees import naive_trivalent

# pinned from a standalone weight-space convolution, computed before the library existed
KAMIYAMA = {5: 6, 7: 36, 9: 232}


def report(record_property, detail):
    record_property("detail", detail)
    print(detail)


@pytest.mark.criterion(1, "trivalent counts equal SO(3) multiplicities, 65 trees, labels 0..4")
def test_criterion_01_theorem_sweep(record_property):
    started = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "polyq.cli", "verify", "--max-leaves", "6",
                           "--max-label", "4"], capture_output=True, text=True)
    elapsed = time.perf_counter() - started
    rep = json.loads(proc.stdout)["reports"][0]
    report(record_property, f"trees={rep['scope']['trees']} checks={rep['checks_run']} "
                            f"failures={rep['failure_count']} time={elapsed:.1f}s")
    assert proc.returncode == 0
    assert rep["scope"]["trees"] == 1 + 1 + 2 + 5 + 14 + 42
    assert rep["failure_count"] == 0
    assert rep["checks_run"] == sum(k * 5 ** (n + 1) for n, k in enumerate([1, 1, 2, 5, 14, 42], start=1))
    assert elapsed < 120


@pytest.mark.criterion(2, "odd n = 5, 7, 9 with unit lengths: dim_H0 equals caterpillar lattice count")
def test_criterion_02_kamiyama(record_property):
    got = {}
    for n, want in KAMIYAMA.items():
        r = (1,) * n
        k, b = dim_H0(r), lattice_count(caterpillar(n - 1), r)
        got[n] = (k, b)
        assert k == b == want == weight_oracle(1, r[1:])
    assert count_labelings(caterpillar(4), LengthVector(1, (1,) * 4)) == 6
    report(record_property, ", ".join(f"n={n}: {k}={b}" for n, (k, b) in got.items()))


@pytest.mark.criterion(3, "Clebsch-Gordan table over 0..6 cubed")
def test_criterion_03_clebsch_gordan(record_property):
    cells = list(itertools.product(range(7), repeat=3))
    for d, c1, c2 in cells:
        want = 1 if abs(c1 - c2) <= d <= c1 + c2 else 0
        assert cg(d, c1, c2) == want == weight_oracle(d, (c1, c2))
    report(record_property, f"{len(cells)} cells exact")


@pytest.mark.criterion(4, "fold equals weight oracle for n <= 4, c in 0..3, d <= sum + 1")
def test_criterion_04_oracle(record_property):
    checked = 0
    for n in range(1, 5):
        for c in itertools.product(range(4), repeat=n):
            for d in range(sum(c) + 2):
                assert f_kaehler(n).eval(d, c) == weight_oracle(d, c), (d, c)
                checked += 1
    report(record_property, f"{checked} values exact")


@pytest.mark.criterion(5, "f_re equals brute-force labeling count, trees <= 5 leaves, labels <= 3")
def test_criterion_05_brute_force(record_property):
    checked = 0
    for n in range(1, 6):
        for t in enumerate_trivalent(n):
            for d, c in inputs(n, 3):
                assert f_re(t).eval(d, c) == count_labelings(t, LengthVector(d, c)), (t, d, c)
                checked += 1
    report(record_property, f"{checked} values exact")


@pytest.mark.criterion(6, "associativity (three cases) and unit laws, labels 0..3")
def test_criterion_06_operad_laws(record_property):
    rep = verify_operad_axioms(max_label=3)
    report(record_property, f"cases={','.join(rep.scope['associativity_cases'])} "
                            f"checks={rep.checks_run} failures={rep.failure_count}")
    assert rep.passed
    assert rep.scope["associativity_cases"] == ["I", "II", "III"]


@pytest.mark.criterion(7, "caterpillar recurrence vs direct count, 4 <= n <= 10")
def test_criterion_07_recurrence(record_property):
    rep = verify_recurrence(10)
    assert rep.passed
    assert beta_direct(4, 1) == beta_recurrence(4, 1) == 3
    assert beta_direct(5, 1) == beta_recurrence(5, 1) == 6
    report(record_property, f"checks={rep.checks_run} failures={rep.failure_count}")


@pytest.mark.criterion(8, "enumeration sizes 1,1,2,5,14,42,132 match a naive grafting generator")
def test_criterion_08_enumeration(record_property):
    sizes = []
    for n in range(1, 8):
        ours = [serialize(t) for t in enumerate_trivalent(n)]
        assert set(ours) == naive_trivalent(n) and len(set(ours)) == len(ours)
        sizes.append(len(ours))
    assert sizes == [1, 1, 2, 5, 14, 42, 132]
    report(record_property, f"sizes={sizes}")


@pytest.mark.criterion(9, "realizations close and reproduce labels, trees <= 4 leaves, labels <= 3")
def test_criterion_09_realization(record_property):
    count, worst = 0, 0.0
    for n in range(1, 5):
        for t in enumerate_trivalent(n):
            for d, c in inputs(n, 3):
                lv = LengthVector(d, c)
                tol = tolerance(lv)
                for phi in iter_labelings(t, lv):
                    u = realize(t, lv, phi)
                    vals = bending_values(t, u)
                    errs = [closure_residual(u)] + [abs(vals[p] - phi[p]) for p in internal_edges(t)]
                    errs += list(np.abs(np.linalg.norm(u, axis=1) - lv.as_tuple()))
                    assert max(errs) <= tol, (t, lv, phi)
                    worst = max(worst, max(errs) / tol)
                    count += 1
    report(record_property, f"{count} labelings, worst error {worst:.2e} of tolerance")


@settings(max_examples=1000)
@given(tree_texts_with_whitespace())
def _normalizes(text):
    assert serialize(parse(text)) == normalize(text)


@pytest.mark.criterion(10, "parse/serialize round trip n <= 7, whitespace normalization on 1000 inputs")
def test_criterion_10_parser(record_property):
    trees = [t for n in range(1, 8) for t in enumerate_trivalent(n)]
    for t in trees:
        assert parse(serialize(t)) == t
    _normalizes()
    report(record_property, f"{len(trees)} trees round-trip, 1000 generated texts")
