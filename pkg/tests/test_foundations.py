from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcurrents.foundations import (
    AlgebraError,
    HeisenbergGroup,
    LieAlgebra,
    abelian_algebra,
    conjugation_representation,
    cyclic_group,
    heisenberg_algebra,
    heisenberg_matrix,
    heisenberg_realization,
    mat_inv,
    mat_mul,
    scalar,
    sl2_algebra,
    so3_algebra,
    table_representation,
    trivial_representation,
    validate_algebra,
    validate_group,
    validate_representation,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_scalar_is_exact_and_reduced():
    x = scalar("6/4")
    assert x == Fraction(3, 2) and x.denominator == 2
    assert scalar(3) == 3


def test_heisenberg_bracket():
    h = heisenberg_algebra()
    assert h.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_abelian_bracket_vanishes(x, y):
    assert abelian_algebra(3).bracket(x, y) == (0, 0, 0)


@given(st.lists(rationals, min_size=3, max_size=3))
def test_bracket_self_is_zero(x):
    for alg in (heisenberg_algebra(), sl2_algebra(), so3_algebra()):
        assert alg.bracket(x, x) == (0, 0, 0)


def test_bracket_rejects_wrong_length():
    with pytest.raises(AlgebraError):
        heisenberg_algebra().bracket((1, 0), (0, 1, 0))


def test_builtin_algebras_validate():
    for alg in (abelian_algebra(3), heisenberg_algebra(), sl2_algebra(), so3_algebra()):
        assert validate_algebra(alg).ok


def test_antisymmetry_failure_is_located():
    z = [0, 0, 0]
    table = [[z, z, z], [z, z, [0, 0, 1]], [z, [0, 0, 1], z]]
    report = validate_algebra(LieAlgebra.from_table(("e1", "e2", "e3"), table))
    assert not report.ok
    assert report.check == "antisymmetry"
    assert report.failures == ((1, 2),)


def test_jacobi_failure_detected():
    # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e3 is antisymmetric but not Lie
    alg = LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 0, 1)})
    report = validate_algebra(alg)
    assert not report.ok and report.check == "jacobi"


def test_cyclic_group_law():
    z2 = cyclic_group(2)
    assert z2.mul(1, 1) == 0
    assert validate_group(cyclic_group(5)).ok


def test_cayley_table_without_identity_rejected():
    with pytest.raises(AlgebraError):
        from hopfcurrents.foundations import CayleyGroup
        CayleyGroup([[1, 0], [1, 0]])


@given(rationals, rationals, rationals)
def test_heisenberg_inverse_matches_matrix_inverse(a, b, c):
    g = HeisenbergGroup()
    p = g.element(a, b, c)
    assert g.inv(p) == g.element(-a, -b, a * b - c)
    assert g.inv(p) == mat_inv(heisenberg_matrix(a, b, c))
    assert g.mul(p, g.identity()) == p


@given(rationals, rationals, rationals)
def test_heisenberg_adjoint_formula(a, b, c):
    g = HeisenbergGroup([(a, b, c)])
    alg = heisenberg_algebra()
    rep = conjugation_representation(g, alg, heisenberg_realization())
    p = g.element(a, b, c)
    # oracle: explicit conjugation p X p^-1 in the 3x3 realization
    real = heisenberg_realization()
    conj = [mat_mul(mat_mul(p, x), mat_inv(p)) for x in real]
    expected_images = [(1, 0, -b), (0, 1, a), (0, 0, 1)]
    for j, image in enumerate(expected_images):
        assert rep.act(p, alg.unit_vector(j)) == image
        combo = [[sum(image[i] * real[i][r][s] for i in range(3)) for s in range(3)] for r in range(3)]
        assert tuple(map(tuple, combo)) == tuple(map(tuple, conj[j]))
    assert validate_representation(rep, alg, [g.identity(), p]).ok


def test_trivial_representation_validates():
    g = cyclic_group(3)
    for alg in (heisenberg_algebra(), sl2_algebra()):
        assert validate_representation(trivial_representation(g, alg), alg).ok


def test_identity_axiom_failure():
    g = cyclic_group(2)
    alg = abelian_algebra(2)
    swap = ((0, 1), (1, 0))
    rep = table_representation(g, alg, {0: swap, 1: swap})
    report = validate_representation(rep, alg)
    assert not report.ok and report.check == "identity"


def test_non_automorphism_detected():
    g = cyclic_group(2)
    alg = heisenberg_algebra()
    m = ((2, 0, 0), (0, 1, 0), (0, 0, 1))
    rep = table_representation(g, alg, {0: ((1, 0, 0), (0, 1, 0), (0, 0, 1)), 1: m})
    assert not validate_representation(rep, alg).ok


def test_builtin_contexts_validate(contexts):
    for ctx in contexts.values():
        assert all(r.ok for r in ctx.validate()), ctx.name


def test_context_named_elements_parse(c2):
    assert c2.parse_group("p") == c2.group.parse("M(1,2,3)")
    with pytest.raises(AlgebraError):
        c2.parse_group("M(1,2)")
