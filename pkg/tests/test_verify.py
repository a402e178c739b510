import pytest

from vcblock.generators import planted_graph, random_instance, rng_from
from vcblock.classes import get_oracle
from vcblock.io import emit_instance
from vcblock.verify import SUITES, UnknownSuiteError, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_small_scale(name):
    (res,) = run_suite(name, seed=3, count=8)
    assert res.passed, res.failures[:3]
    assert res.cases > 0


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope")


def test_all_runs_every_suite():
    assert [r.name for r in run_suite("all", seed=5, count=2)] == list(SUITES)


def test_reports_are_reproducible():
    a = run_suite("lp_modulator", seed=9, count=20)[0]
    b = run_suite("lp_modulator", seed=9, count=20)[0]
    assert a.to_text() == b.to_text() and a.to_record() == b.to_record()


def test_generators_are_seeded():
    for tag in ("forest", "lp", "cluster:3"):
        o = get_oracle(tag)
        a = [emit_instance(random_instance(o, rng_from(1), 2)) for _ in range(3)]
        b = [emit_instance(random_instance(o, rng_from(1), 2)) for _ in range(3)]
        assert a == b
        assert planted_graph(o, rng_from(4), 2, 14) == planted_graph(o, rng_from(4), 2, 14)


def test_failure_report_format():
    from vcblock.verify import SuiteResult

    r = SuiteResult("demo")
    r.check(True, "fine")
    r.check(False, "broken thing")
    assert not r.passed
    assert r.to_text() == "demo: FAIL (2 checks, 1 failures)\n  failed: broken thing\n"
    assert "suite=demo failed='broken thing'" in r.to_record()
