from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import jacobian_hilbert, jacobian_syzygy_dim, oracle_tjurina, to_sympy
from strategies import invertible_matrices
from syzlab.algebra import HPoly, linear_change
from syzlab.arrangements import FamilyTag, generate_family
from syzlab.graded import GradedIdeal, NoPlateau, plateau_window
from syzlab.jacobian import (
    Jacobian,
    SyzygyVec,
    analyze,
    dpw_bounds,
    dpw_check,
    hilbert_function,
    lift_syzygy,
    mdr,
    resolution_probe,
    syzygy_space,
    tjurina,
)
from syzlab.parsing import parse_poly as P
from syzlab.verify import random_factored_curve

x, y, z = HPoly.gens()

FREE_QUINTIC = "y^4z + x^5 + x^2y^3"
NEARLY_FREE_QUINTIC = "y^4z + x^5"
NODAL_QUINTIC = "(x^2+y^2+z^2)(x^3+y^3+z^3)"


def _syz(a, b, c):
    return SyzygyVec(P(a), P(b), P(c))


def test_syzygy_space_quintic():
    S = syzygy_space(P(NEARLY_FREE_QUINTIC), 1)
    assert S == [_syz("0", "y", "-4z")]


def test_syzygy_space_families():
    c1 = generate_family(FamilyTag.C1, [1, 2, 3]).product
    assert syzygy_space(c1, 1) == [_syz("0", "x", "-2y")]
    cl2 = generate_family(FamilyTag.CL2, [1, 2]).product
    assert syzygy_space(cl2, 1) == [_syz("4x", "-y", "-6z")]


def test_syzygy_dims_match_oracle():
    for src in (FREE_QUINTIC, NEARLY_FREE_QUINTIC, "xy(x+y)z"):
        f = P(src)
        for t in range(4):
            assert len(syzygy_space(f, t)) == jacobian_syzygy_dim(to_sympy(f), t)


def test_mdr_examples():
    assert mdr(P("xy(x+y)")) == 0
    assert mdr(P(NEARLY_FREE_QUINTIC)) == 1
    assert mdr(P(NODAL_QUINTIC)) == 3


def test_hilbert_function_examples():
    f = P("x^3+y^3+z^3")
    assert [hilbert_function(f, t) for t in range(5)] == [1, 3, 3, 1, 0]
    assert hilbert_function(P(NEARLY_FREE_QUINTIC), 20) == 12
    assert hilbert_function(P(NODAL_QUINTIC), 0) == 1


def test_hilbert_function_matches_oracle():
    f = P(NODAL_QUINTIC)
    for t in (3, 6, 9):
        assert hilbert_function(f, t) == jacobian_hilbert(to_sympy(f), t)


def test_tjurina_examples():
    assert tjurina(P(FREE_QUINTIC)) == 12
    assert tjurina(P(NODAL_QUINTIC)) == 6
    assert tjurina(P("x^3+y^3+z^3")) == 0
    # concurrent lines: tau = (d-1)^2
    assert tjurina(P("xy(x+y)(x-y)")) == 9


def test_tjurina_nonreduced_raises():
    with pytest.raises(NoPlateau):
        tjurina(P("x^2 y"))


def test_dpw_examples():
    assert dpw_check(P(NODAL_QUINTIC)) == (4, 13, 6, True)
    L = generate_family(FamilyTag.L, [(1, 0), (0, 1), (1, 1), (1, 2)]).product
    assert dpw_check(L) == (12, 13, 13, True)
    C2 = generate_family(FamilyTag.C2, [1, 2, 3]).product
    assert dpw_check(C2) == (20, 21, 20, True)
    with pytest.raises(ValueError):
        dpw_check(P("xy(x+y)"))
    assert dpw_bounds(5, 3) == (4, 13)


def test_resolution_probe_examples():
    assert str(resolution_probe(P(FREE_QUINTIC))) == "Free(2,2)"
    assert str(resolution_probe(P(NEARLY_FREE_QUINTIC))) == "NearlyFree(1,4)"
    probe = resolution_probe(P(NODAL_QUINTIC))
    assert probe.kind == "neither"
    assert probe.generator_degrees == (3, 4, 4, 4)


def test_lift_syzygy_examples():
    f1 = P("x^2 + xz + y^2")
    lifted = lift_syzygy(_syz("0", "x", "-2y"), f1, x)
    assert lifted == _syz("0", "x^2", "-2xy")
    assert lifted.is_valid(f1 * x)
    f1 = P(NEARLY_FREE_QUINTIC)
    assert lift_syzygy(_syz("0", "y", "-4z"), f1, x) == _syz("0", "xy", "-4xz")
    with pytest.raises(ValueError):
        lift_syzygy(_syz("0", "y", "-4z"), f1, HPoly.constant(1))
    with pytest.raises(ValueError):
        lift_syzygy(_syz("x", "0", "0"), f1, x)


def test_report_dict():
    rep = analyze(P(NEARLY_FREE_QUINTIC)).to_dict()
    assert (rep["d"], rep["r"], rep["tau"], rep["freeness"]) == (5, 1, 12, "NearlyFree(1,4)")
    assert rep["hilbert_table"][0] == [0, 1]
    assert rep["hilbert_table"][-1][1] == 12


def test_plateau_window():
    assert plateau_window(5) == (9, 5, 30)
    assert plateau_window(2) == (0, 4, 12)


def test_graded_ideal_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        GradedIdeal([x, x * y])


def test_certified_rank_matches_exact_rank():
    f = generate_family(FamilyTag.CL3, [1, -2, 3]).product
    J = Jacobian(f)
    for s in range(J.d, 2 * J.d):
        assert J.ideal.image_rank(s) == J.ideal._exact_rank(s)


# -- properties --------------------------------------------------------------


def _random_curves(n, seed, max_degree=5):
    rng = np.random.default_rng(seed)
    return [random_factored_curve(rng, max_degree).product for _ in range(n)]


@pytest.mark.parametrize("f", _random_curves(12, 11), ids=lambda f: f"d{f.degree}")
def test_invariants_on_random_curves(f):
    if f.degree < 2:
        return
    J = Jacobian(f)
    d, r = J.d, J.mdr()
    for t in range(r + 1):
        for s in J.syzygy_space(t):
            assert s.is_valid()
    fx, fy, fz = f.gradient()
    assert x * fx + y * fy + z * fz == f * d
    if r == 0:
        return
    assert J.dpw_check().holds
    start, end = J.ideal.plateau
    vals = [J.hilbert_function(t) for t in range(start, end + 1)]
    assert len(set(vals)) == 1
    if r == 1 and d >= 3:
        tau = J.tjurina()
        assert tau in (d * d - 3 * d + 2, d * d - 3 * d + 3)
        probe = J.resolution_probe()
        assert probe.is_free == (tau == d * d - 3 * d + 3)
        assert probe.is_nearly_free == (tau == d * d - 3 * d + 2)


def test_mdr_one_families_are_free_or_nearly_free():
    for tag, params in [(FamilyTag.C2, [1, 2, 3]), (FamilyTag.CL6, [1, -1, 2]), (FamilyTag.CL1, [2, 5])]:
        J = Jacobian(generate_family(tag, params).product)
        d = J.d
        assert J.mdr() == 1
        expected_free = tag is not FamilyTag.C2 and tag is not FamilyTag.CL6
        assert J.resolution_probe().is_free == expected_free
        assert J.tjurina() == d * d - 3 * d + (3 if expected_free else 2)


@settings(max_examples=15, deadline=None)
@given(invertible_matrices, st.sampled_from([FREE_QUINTIC, NODAL_QUINTIC, "xyz(x+y)", "(xz+y^2)(xz+2y^2)x"]))
def test_tau_and_mdr_invariant_under_coordinates(M, src):
    f = P(src)
    g = linear_change(f, M)
    assert tjurina(g) == tjurina(f)
    assert mdr(g) == mdr(f)


def test_tjurina_matches_oracle_examples():
    for src in (FREE_QUINTIC, "xyz(x+y)", "(x^2+xz+y^2)(x^2+2xz+2y^2)"):
        assert tjurina(P(src)) == oracle_tjurina(to_sympy(P(src)))


def test_syzygy_vector_helpers():
    s = _syz("0", "2y", "-8z")
    assert s.normalized() == _syz("0", "y", "-4z")
    assert s.scaled(Fraction(1, 2)).to_vector() == _syz("0", "y", "-4z").to_vector()
    assert SyzygyVec.from_vector(s.to_vector(), 1) == s
    with pytest.raises(ValueError):
        SyzygyVec(x, y, x * y)
    with pytest.raises(ValueError):
        s.is_valid()
