"""Exhaustive checks of the counting identities at small sizes."""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bending import (
    CORNER,
    beta_direct,
    beta_expansion,
    beta_kernel,
    beta_recurrence,
    f_re,
)
from .kaehler import CG, f_kaehler
from .notation import serialize
from .operad import WElement, inputs, project_leafcount, w_compose, w_unit
from .trees import caterpillar, enumerate_trivalent, graft, iter_trivalent

MAX_RECORDED_FAILURES = 50


@dataclass
class VerificationReport:
    name: str
    scope: dict
    checks_run: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, **detail):
        self.checks_run += 1
        if not ok:
            self.failure_count += 1
            self.failures.append(detail)

    def finish(self, started: float) -> "VerificationReport":
        # smallest failing input first, lexicographically
        self.failures.sort(key=lambda f: (f.get("input", []), json.dumps(f, sort_keys=True)))
        del self.failures[MAX_RECORDED_FAILURES:]
        self.wall_time = time.perf_counter() - started
        return self

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "check": self.name,
            "scope": self.scope,
            "checks_run": self.checks_run,
            "pass": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


def verify_theorem(max_leaves: int = 6, max_label: int = 4) -> VerificationReport:
    """Every trivalent tree's labeling count equals the SO(3) multiplicity of
    its leaf count, on all inputs with entries in ``0..max_label``."""
    if max_leaves < 2:
        raise ValueError("max_leaves must be >= 2")
    started = time.perf_counter()
    trees = list(iter_trivalent(max_leaves))
    report = VerificationReport("theorem", {"max_leaves": max_leaves, "max_label": max_label,
                                            "trees": len(trees)})
    for tree in trees:
        n = project_leafcount(tree)
        kah = f_kaehler(n)
        re = f_re(tree)
        for d, c in inputs(n, max_label):
            got = re.eval(d, c)
            want = kah.eval(d, c)
            if got != want:
                report.record(False, tree=serialize(tree), input=[d, *c], expected=want, got=got)
            else:
                report.checks_run += 1
        if n == max_leaves:
            # nothing larger reuses these values
            re.cache_clear()
    return report.finish(started)


def _all_cases(f, g, h):
    """Yield ``(case, j, i, lhs, rhs)`` for every placement of the three axioms."""
    n, m, l = f.arity, g.arity, h.arity
    for j in range(1, n + 1):
        for i in range(1, n + m):
            lhs = w_compose(w_compose(f, j, g), i, h)
            if i < j:
                yield "I", j, i, lhs, w_compose(w_compose(f, i, h), j + l - 1, g)
            elif i < m + j:
                yield "II", j, i, lhs, w_compose(f, j, w_compose(g, i - j + 1, h))
            else:
                yield "III", j, i, lhs, w_compose(w_compose(f, i - m + 1, h), j, g)


def default_samples() -> list:
    return [w_unit(), CG, f_kaehler(3), f_re(caterpillar(3))]


def verify_operad_axioms(samples: Optional[Sequence[WElement]] = None, max_label: int = 3,
                         max_arity: int = 5, max_tree_leaves: int = 3) -> VerificationReport:
    """Associativity (three placements) and unit laws for partial composition,
    pointwise on all inputs up to ``max_label``; plus the same laws for
    grafting of trivalent trees, compared by canonical form."""
    started = time.perf_counter()
    samples = list(samples) if samples is not None else default_samples()
    report = VerificationReport("operad_axioms", {"samples": [s.name for s in samples],
                                                  "max_label": max_label, "max_arity": max_arity,
                                                  "max_tree_leaves": max_tree_leaves})
    cases_seen = set()
    for f, g, h in itertools.product(samples, repeat=3):
        if f.arity + g.arity + h.arity - 2 > max_arity:
            continue
        for case, j, i, lhs, rhs in _all_cases(f, g, h):
            cases_seen.add(case)
            for d, c in inputs(lhs.arity, max_label):
                a, b = lhs.eval(d, c), rhs.eval(d, c)
                report.record(a == b, law=f"assoc-{case}", elements=[f.name, g.name, h.name],
                              j=j, i=i, input=[d, *c], lhs=a, rhs=b)
    unit = w_unit()
    for f in samples:
        for i in range(1, f.arity + 1):
            right = w_compose(f, i, unit)
            for d, c in inputs(f.arity, max_label):
                a, b = right.eval(d, c), f.eval(d, c)
                report.record(a == b, law="unit-right", element=f.name, i=i, input=[d, *c], lhs=a, rhs=b)
        left = w_compose(unit, 1, f)
        for d, c in inputs(f.arity, max_label):
            a, b = left.eval(d, c), f.eval(d, c)
            report.record(a == b, law="unit-left", element=f.name, input=[d, *c], lhs=a, rhs=b)

    trees = list(iter_trivalent(max_tree_leaves))
    for x, y, z in itertools.product(trees, repeat=3):
        n, m, l = x.n_leaves, y.n_leaves, z.n_leaves
        for j in range(1, n + 1):
            for i in range(1, n + m):
                lhs = graft(graft(x, j, y), i, z)
                if i < j:
                    case, rhs = "I", graft(graft(x, i, z), j + l - 1, y)
                elif i < m + j:
                    case, rhs = "II", graft(x, j, graft(y, i - j + 1, z))
                else:
                    case, rhs = "III", graft(graft(x, i - m + 1, z), j, y)
                a, b = serialize(lhs), serialize(rhs)
                report.record(a == b, law=f"graft-assoc-{case}", trees=[serialize(t) for t in (x, y, z)],
                              j=j, i=i, lhs=a, rhs=b)
    leaf = enumerate_trivalent(1)[0]
    for x in trees:
        for i in range(1, x.n_leaves + 1):
            report.record(graft(x, i, leaf) == x, law="graft-unit-right", tree=serialize(x), i=i)
        report.record(graft(leaf, 1, x) == x, law="graft-unit-left", tree=serialize(x))
    report.scope["associativity_cases"] = sorted(cases_seen)
    return report.finish(started)


def verify_recurrence(max_n: int = 10) -> VerificationReport:
    """Caterpillar numbers three ways: direct count, the three-term recurrence,
    and the one-step expansion over the first internal edge."""
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    started = time.perf_counter()
    report = VerificationReport("recurrence", {"max_n": max_n})
    for i in range(0, 6):
        for k in range(0, 6):
            a, b = beta_kernel(i, k), CORNER.eval(i, (1, k))
            report.record(a == b, law="kernel", input=[i, k], closed_form=a, count=b)
    for n in range(4, max_n + 1):
        for i in range(0, n + 3):
            direct = beta_direct(n, i)
            rec = beta_recurrence(n, i)
            exp = beta_expansion(n, i)
            report.record(direct == rec == exp, law="beta", n=n, i=i,
                          direct=direct, recurrence=rec, expansion=exp)
            if i >= n:
                report.record(direct == 0, law="beta-vanishing", n=n, i=i, direct=direct)
    return report.finish(started)


def beta_table(max_n: int) -> list:
    """Rows ``[n, beta(n, 0), ..., beta(n, max_n)]`` for ``3 <= n <= max_n``."""
    return [[n] + [beta_recurrence(n, i) for i in range(max_n + 1)] for n in range(3, max_n + 1)]
