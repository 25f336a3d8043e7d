from hypothesis import given, strategies as st

from hopfcurrents.exterior import (
    ad_extend_ext,
    coproduct_mono,
    ext_antipode,
    ext_coproduct,
    ext_coproduct_terms,
    ext_counit,
    ext_element,
    ext_generator,
    ext_one,
    tensor_square_mul,
    wedge,
    wedge_terms,
)
from hopfcurrents.foundations import builtin_context, det
from hopfcurrents.linear import add_scaled, add_to

BASIS = ("e1", "e2", "e3")
monomials = st.lists(st.integers(0, 2), max_size=3, unique=True).map(lambda m: tuple(sorted(m)))
elements = st.dictionaries(monomials, st.integers(-2, 2).filter(bool), min_size=1, max_size=4)


def ext(terms):
    return ext_element(BASIS, terms)


def test_wedge_examples():
    e1, e2 = ext_generator(BASIS, 0), ext_generator(BASIS, 1)
    assert wedge(e1, e1) == 0
    assert wedge(e2, e1) == -ext({(0, 1): 1})
    assert wedge(ext({(0, 2): 1}), e2) == -ext({(0, 1, 2): 1})


@given(elements, elements, elements)
def test_wedge_associative(x, y, z):
    X, Y, Z = ext(x), ext(y), ext(z)
    assert wedge(wedge(X, Y), Z) == wedge(X, wedge(Y, Z))


@given(monomials, monomials)
def test_graded_commutative(a, b):
    sign = -1 if (len(a) * len(b)) & 1 else 1
    assert wedge(ext({a: 1}), ext({b: 1})) == wedge(ext({b: 1}), ext({a: 1})).scale(sign)


@given(monomials)
def test_nilpotent_in_odd_degree(a):
    if len(a) & 1:
        assert wedge(ext({a: 1}), ext({a: 1})) == 0


def test_coproduct_examples():
    assert ext_coproduct_terms({(): 1}) == {((), ()): 1}
    assert ext_coproduct_terms({(0,): 1}) == {((0,), ()): 1, ((), (0,)): 1}
    got = {(str(l), str(r)): c for (l, r), c in ext_coproduct(ext({(0, 1): 1}))}
    assert got == {("e1^e2", "1"): 1, ("e1", "e2"): 1, ("e2", "e1"): -1, ("1", "e1^e2"): 1}


@given(elements, elements)
def test_coproduct_is_multiplicative(x, y):
    lhs = ext_coproduct_terms(wedge_terms(x, y))
    rhs = tensor_square_mul(ext_coproduct_terms(x), ext_coproduct_terms(y))
    assert lhs == rhs


@given(elements)
def test_hopf_axioms(x):
    D = ext_coproduct_terms(x)
    left: dict = {}
    right: dict = {}
    for (l, r), c in D.items():
        for l2, r2, s in coproduct_mono(l):
            add_to(left, (l2, r2, r), c * s)
        for l2, r2, s in coproduct_mono(r):
            add_to(right, (l, l2, r2), c * s)
    assert left == right
    counit_l: dict = {}
    anti_l: dict = {}
    anti_r: dict = {}
    for (l, r), c in D.items():
        if not l:
            add_to(counit_l, r, c)
        add_scaled(anti_l, wedge_terms(ext_antipode(ext({l: 1})).terms, {r: 1}), c)
        add_scaled(anti_r, wedge_terms({l: 1}, ext_antipode(ext({r: 1})).terms), c)
    assert counit_l == ext(x).terms
    unit = {(): x[()]} if x.get((), 0) else {}
    assert anti_l == unit == anti_r


def test_counit_and_antipode_examples():
    assert ext_counit(ext_one(BASIS)) == 1
    assert ext_counit(ext_generator(BASIS, 0)) == 0
    assert ext_antipode(ext_generator(BASIS, 0)) == -ext_generator(BASIS, 0)
    # the antipode law forces S = (-1)^k on grade k, so S(e1^e2) = +e1^e2
    assert ext_antipode(ext({(0, 1): 1})) == ext({(0, 1): 1})
    assert ext_antipode(ext({(0, 1, 2): 1})) == -ext({(0, 1, 2): 1})


def test_antipode_law_on_grade_two():
    # m(S (x) id) Delta (e1^e2) = 0 forces the sign of S(e1^e2)
    total: dict = {}
    for (l, r), c in ext_coproduct(ext({(0, 1): 1})):
        add_scaled(total, wedge(ext_antipode(l), r).terms, c)
    assert total == {}


def test_ad_extension_examples():
    ctx = builtin_context("C2")
    p = ctx.group.parse("M(1,2,3)")
    assert ad_extend_ext(ctx.rep, p, ext({(0, 1): 1})) == ext({(0, 1): 1, (0, 2): 1, (1, 2): 2})
    top = ext({(0, 1, 2): 1})
    for name in ("C2", "C3"):
        c = builtin_context(name)
        for q in c.named.values():
            b = c.algebra.basis
            t = ext_element(b, {(0, 1, 2): 1})
            assert ad_extend_ext(c.rep, q, t) == t.scale(det(c.rep.matrix(q)))
    c1 = builtin_context("C1")
    assert ad_extend_ext(c1.rep, c1.named["p"], top) == top


@given(st.sampled_from(["C2", "C3"]), elements, elements)
def test_ad_extension_is_a_homomorphism(name, x, y):
    ctx = builtin_context(name)
    b = ctx.algebra.basis
    X, Y = ext_element(b, x), ext_element(b, y)
    p, q = ctx.named["p"], ctx.named["q"]
    rep = ctx.rep
    assert ad_extend_ext(rep, p, wedge(X, Y)) == wedge(ad_extend_ext(rep, p, X), ad_extend_ext(rep, p, Y))
    assert ad_extend_ext(rep, p, ad_extend_ext(rep, q, X)) == ad_extend_ext(rep, ctx.group.mul(p, q), X)
    assert ad_extend_ext(rep, p, X).grades() == X.grades()
