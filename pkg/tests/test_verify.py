import pytest

from syzlab.arrangements import FamilyTag, family_degree
from syzlab.verify import SUITES, degree_range, instance_rng, run_suite


def test_instance_rng_is_deterministic():
    a = instance_rng(5, 2, 1).integers(0, 10**9, size=4)
    b = instance_rng(5, 2, 1).integers(0, 10**9, size=4)
    c = instance_rng(5, 2, 2).integers(0, 10**9, size=4)
    assert (a == b).all() and not (a == c).all()


def test_degree_range():
    for tag in FamilyTag:
        if tag is FamilyTag.NONE:
            continue
        ms = degree_range(tag, 5, 10)
        assert ms and all(5 <= family_degree(tag, m) <= 10 for m in ms)


@pytest.mark.parametrize("suite", ["dpw", "thm-product", "min-tau"])
def test_small_runs_pass(suite):
    rep = run_suite(suite, 2, 11)
    assert rep["passed"] and rep["instances"] == 2 * SUITES[suite][1]


def test_serial_equals_parallel():
    assert run_suite("dpw", 4, 3, threads=1) == run_suite("dpw", 4, 3, threads=2)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 0)
    with pytest.raises(ValueError):
        run_suite("dpw", -1, 0)
