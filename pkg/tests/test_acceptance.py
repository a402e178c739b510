"""The ten acceptance experiments at their full sizes and time limits.

Each test prints one ``criterion N: PASS|FAIL`` line, collected into the
terminal summary so the lines survive output capture.
"""
import time

import pytest

from vcblock.verify import ACCEPTANCE, SUITES

RESULTS: list[str] = []

# criterion -> (title, time limit in seconds)
CRITERIA = {
    1: ("indset tower sizes 2, 3, 5 and exhaustive maximum", 120),
    2: ("cluster:3 tower sizes 5, 9", 120),
    3: ("component rule shifts OPT by exactly the budget drop, within |X|^beta components", 300),
    4: ("hypergraph cover transformation is answer-preserving; chained instance needs 2 + 3*3", 180),
    5: ("LP <= OPT <= 2 LP, bipartite LP = MM = OPT, persistence identity", 180),
    6: ("LP modulator has exactly 2(OPT - LP) vertices and leaves an LP-tight graph", 120),
    7: ("bounded-distance solver equals brute force on planted forests", 180),
    8: ("kernelization to depth 0 is answer-preserving and meets every level bound", 300),
    9: ("deletion and apex tests agree; minimal sets have deficit 1 and one component", 120),
    10: ("beta <= 5 on graphs within LP distance 1", 180),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, limit = CRITERIA[number]
    start = time.perf_counter()
    res = SUITES[ACCEPTANCE[number]]()
    took = time.perf_counter() - start
    ok = res.passed and took < limit
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({res.cases} checks, {len(res.failures)} failures, {took:.1f}s < {limit}s) {title}"
    RESULTS.append(line)
    print(line)
    assert res.passed, res.failures[:5]
    assert took < limit, f"took {took:.1f}s, limit {limit}s"
