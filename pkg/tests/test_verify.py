import pytest

from klcanon.verify import SUITES, compositions, run_all, run_suite


def test_compositions():
    assert list(compositions(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    assert len(list(compositions(5))) == 16
    assert all(len(c) <= 2 for c in compositions(5, 2))


@pytest.mark.parametrize("name", list(SUITES))
def test_suites_pass_small(name):
    report = run_suite(name, max_n=4)
    assert report.ok, "\n".join(report.lines())
    assert all(c.cases > 0 for c in report.checks)


def test_all_suites_max_n_6():
    reports = run_all(max_n=6)
    assert [r.suite for r in reports] == list(SUITES)
    for r in reports:
        assert r.ok, "\n".join(r.lines())
        data = r.to_json()
        assert data["ok"] and data["max_n"] == 6


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
