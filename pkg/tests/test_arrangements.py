import numpy as np
import pytest

from oracles import is_syzygy, oracle_tjurina, to_sympy
from syzlab.algebra import HPoly
from syzlab.arrangements import (
    CurveInput,
    FamilyTag,
    InvalidArrangement,
    PencilClass,
    detect_pencil,
    family_degree,
    generate_family,
    line_role,
    pair_class,
    perturbed_instance,
    random_coordinate_change,
    random_instance,
    random_params,
    recognize,
    validate,
)
from syzlab.jacobian import SyzygyVec, syzygy_space, tjurina
from syzlab.parsing import parse_poly as P

x, y, z = HPoly.gens()
TAGS = [t for t in FamilyTag if t is not FamilyTag.NONE]


def _comps(*srcs):
    return CurveInput([P(s) for s in srcs])


def test_generate_examples():
    c = generate_family(FamilyTag.L, [(1, 0), (0, 1), (1, 1)])
    assert c.components == [z, x, y, x + y] and c.degree == 4
    c = generate_family(FamilyTag.CL2, [1, 2])
    assert c.components == [x, P("xz+y^2"), P("xz+2y^2")] and c.degree == 5
    c = generate_family(FamilyTag.C2, [1, 2, 3])
    assert c.components == [P("xz+y^2"), P("xz+2y^2"), P("xz+3y^2")] and c.degree == 6


@pytest.mark.parametrize(
    "tag,params",
    [
        (FamilyTag.C2, [1, 1]),
        (FamilyTag.C2, [0, 1]),
        (FamilyTag.C1, [3]),
        (FamilyTag.L, [(1, 0)]),
        (FamilyTag.L, [(1, 0), (2, 0)]),
        (FamilyTag.L, [(0, 0), (1, 1)]),
    ],
)
def test_generate_rejects_bad_params(tag, params):
    with pytest.raises(ValueError):
        generate_family(tag, params)


def test_generate_random_coords_needs_rng():
    with pytest.raises(ValueError):
        generate_family(FamilyTag.C2, [1, 2], normal_form=False)


def test_family_degrees():
    degrees = {t: family_degree(t, 3) for t in TAGS}
    assert degrees == {
        FamilyTag.L: 4, FamilyTag.C1: 6, FamilyTag.C2: 6, FamilyTag.CL1: 7, FamilyTag.CL2: 7,
        FamilyTag.CL3: 8, FamilyTag.CL4: 8, FamilyTag.CL5: 9, FamilyTag.CL6: 7,
    }


def test_validate_examples():
    (d,) = validate(_comps("x", "2x"))
    assert d.kind == "duplicate" and d.indices == (0, 1)
    (d,) = validate(_comps("y^2"))
    assert d.kind == "degenerate_conic" and "rank 1" in d.message
    assert validate(_comps("x", "xz+y^2")) == []
    assert validate(_comps("y^2"), recognition=False) == []


def test_pair_class_examples():
    assert pair_class(P("xz+y^2"), P("xz+2y^2")) == "tacnodal"
    assert pair_class(P("x^2+(xz+y^2)"), P("x^2+2(xz+y^2)")) == "hyperosculating"
    assert pair_class(P("xz+y^2"), P("x^2+y^2-z^2")) == "other"
    with pytest.raises(InvalidArrangement):
        pair_class(P("xz+y^2"), P("2xz+2y^2"))


def test_pair_class_taus_match_oracle():
    # values frozen above come from these independent computations
    assert oracle_tjurina(to_sympy(P("(xz+y^2)(x^2+y^2-z^2)"))) == 4
    assert oracle_tjurina(to_sympy(P("(xz+y^2)(xz+2y^2)"))) == 6
    assert oracle_tjurina(to_sympy(P("(x^2+xz+y^2)(x^2+2xz+2y^2)"))) == 7


def test_detect_pencil_examples():
    p = detect_pencil([P("xz+y^2"), P("xz+2y^2"), P("xz+3y^2")])
    assert p.kind == "bitangent" and len(p.basis) == 2
    assert detect_pencil([P("x^2+(xz+y^2)"), P("x^2+3(xz+y^2)")]).kind == "hyperosculating"
    assert detect_pencil([P("xz+y^2"), P("x^2+y^2-z^2")]).kind == "other"
    # three conics not in one pencil
    assert detect_pencil([P("xz+y^2"), P("xz+2y^2"), P("x^2+y^2-z^2")]).kind == "other"
    with pytest.raises(ValueError):
        detect_pencil([P("xz+y^2")])


def test_line_role_examples():
    pencil = PencilClass("bitangent", (P("xz"), P("y^2")))
    assert line_role(y, pencil) == "base"
    assert line_role(x, pencil) == "tangent"
    assert line_role(P("x+y+z"), pencil) == "generic"
    hyper = PencilClass("hyperosculating", (P("x^2"), P("xz+y^2")))
    assert line_role(x, hyper) == "tangent"
    assert line_role(z, hyper) == "generic"
    with pytest.raises(ValueError):
        line_role(x, PencilClass("other"))


def test_recognize_examples():
    assert recognize(_comps("z", "x", "y", "x+y")) is FamilyTag.L
    assert recognize(_comps("x", "xz+y^2", "xz+2y^2")) is FamilyTag.CL2
    assert recognize(_comps("x+y+z", "xz+y^2", "xz+2y^2")) is FamilyTag.NONE
    # all lines through one point, or a generic line arrangement
    assert recognize(_comps("x", "y", "x+y", "x-y")) is FamilyTag.NONE
    assert recognize(_comps("x", "y", "z", "x+y+z")) is FamilyTag.NONE
    assert recognize(_comps("x", "xz+y^2")) is FamilyTag.NONE
    with pytest.raises(ValueError):
        recognize(_comps("x^3+y^3+z^3", "x"))
    with pytest.raises(InvalidArrangement):
        recognize(_comps("x", "2x", "y"))


@pytest.mark.parametrize("tag", TAGS, ids=str)
@pytest.mark.parametrize("m", [2, 3, 4])
def test_roundtrip_recognition(tag, m):
    rng = np.random.default_rng([m, TAGS.index(tag)])
    params = random_params(tag, m, rng)
    assert recognize(generate_family(tag, params)) is tag
    assert recognize(generate_family(tag, params, normal_form=False, rng=rng)) is tag


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_negative_control(tag):
    params = random_params(tag, 3, np.random.default_rng(5))
    normal = generate_family(tag, params)
    bad = perturbed_instance(tag, params)
    assert validate(bad) == []
    assert recognize(bad) is FamilyTag.NONE
    assert tjurina(bad.product) < tjurina(normal.product)


def test_negative_control_after_coordinate_change():
    rng = np.random.default_rng(3)
    params = random_params(FamilyTag.CL3, 2, rng)
    bad = perturbed_instance(FamilyTag.CL3, params, M=random_coordinate_change(rng))
    assert recognize(bad) is FamilyTag.NONE


NORMAL_FORM_SYZYGIES = {
    FamilyTag.C1: lambda d: ("0", "x", "-2y"),
    FamilyTag.CL1: lambda d: ("0", "x", "-2y"),
    FamilyTag.C2: lambda d: ("x", "0", "-z"),
    FamilyTag.CL3: lambda d: ("x", "0", "-z"),
    FamilyTag.CL5: lambda d: ("x", "0", "-z"),
    FamilyTag.CL6: lambda d: ("x", "0", "-z"),
    FamilyTag.CL2: lambda d: (f"{d - 1}x", "-y", f"-{d + 1}z"),
    # x*f_x - z*f_z = f for x*y*prod(xz + a y^2); the Euler correction gives this
    FamilyTag.CL4: lambda d: (f"{d - 1}x", "-y", f"-{d + 1}z"),
    FamilyTag.L: lambda d: ("x", "y", f"{1 - d}z"),
}


@pytest.mark.parametrize("tag", TAGS, ids=str)
@pytest.mark.parametrize("m", [2, 3])
def test_normal_form_linear_syzygy(tag, m):
    params = random_params(tag, m + (tag is FamilyTag.L), np.random.default_rng(m))
    f = generate_family(tag, params).product
    S = syzygy_space(f, 1)
    expected = SyzygyVec(*(P(e) for e in NORMAL_FORM_SYZYGIES[tag](f.degree))).normalized()
    assert S == [expected]


def test_cl4_is_not_killed_by_the_bitangent_derivation():
    for m in (2, 3):
        f = generate_family(FamilyTag.CL4, list(range(1, m + 1))).product
        fs, d = to_sympy(f), f.degree
        from oracles import X, Y, Z

        assert not is_syzygy(fs, X, 0, -Z)
        assert is_syzygy(fs, (d - 1) * X, -Y, -(d + 1) * Z)


def test_explicit_degree_two_syzygy_of_hyperosculating_pair():
    a1, a2 = 2, 5
    f = generate_family(FamilyTag.C1, [a1, a2]).product
    s = SyzygyVec(
        P(f"-{a1 + a2}x^2 - {2 * a1 * a2}(y^2 + xz)"),
        P(f"{a1 * a2}yz"),
        P(f"4x^2 + {2 * (a1 + a2)}y^2 + {3 * (a1 + a2)}xz + {2 * a1 * a2}z^2"),
    )
    assert s.is_valid(f)
    from syzlab.exactla import span_equal

    basis = [v.to_vector() for v in syzygy_space(f, 2)]
    assert span_equal(basis, basis + [s.to_vector()])


def test_random_instance_is_seeded():
    a, pa = random_instance(FamilyTag.CL5, 2, 42)
    b, pb = random_instance(FamilyTag.CL5, 2, 42)
    assert pa == pb and a.components == b.components
    M = random_coordinate_change(np.random.default_rng(1))
    det = np.linalg.det(np.array(M, dtype=float))
    assert 1 <= round(det) <= 50


def test_family_tag_parse():
    assert FamilyTag.parse("cl2") is FamilyTag.CL2
    assert str(FamilyTag.NONE) == "None"
    with pytest.raises(ValueError):
        FamilyTag.parse("CL9")
