import pytest
from hypothesis import given, strategies as st

from hopfcurrents.enveloping import (
    abs_S,
    abs_S_inv,
    ad_extend_uea,
    kernel,
    pbw_normalize,
    uea_act_ext,
    uea_act_vector,
    uea_antipode,
    uea_coproduct,
    uea_counit,
    uea_element,
    uea_generator,
    uea_mul,
    uea_one,
)
from hopfcurrents.exterior import ext_element, ext_generator
from hopfcurrents.foundations import (
    AlgebraError,
    abelian_algebra,
    builtin_context,
    heisenberg_algebra,
    sl2_algebra,
    so3_algebra,
)
from hopfcurrents.linear import add_scaled, add_to

ALGEBRAS = (abelian_algebra(3), heisenberg_algebra(), sl2_algebra(), so3_algebra())
algebras = st.sampled_from(ALGEBRAS)
words = st.lists(st.integers(0, 2), max_size=6).map(tuple)
small_words = st.lists(st.integers(0, 2), max_size=3).map(tuple)
elements = st.dictionaries(small_words, st.integers(-2, 2).filter(bool), min_size=1, max_size=3)


def test_heisenberg_reordering():
    h = heisenberg_algebra()
    assert str(pbw_normalize((1, 0), h)) == "e1*e2 - e3"
    assert uea_mul(uea_generator(h, 1), uea_generator(h, 0)) == pbw_normalize((1, 0), h)


def test_abelian_reordering_and_unit():
    a = abelian_algebra(3)
    assert pbw_normalize((1, 0), a) == uea_element(a, {(0, 1): 1})
    assert pbw_normalize((), a) == uea_one(a)


def test_out_of_range_word_rejected():
    with pytest.raises(AlgebraError):
        pbw_normalize((0, 3), heisenberg_algebra())


@given(algebras, words)
def test_rewriting_orders_agree(alg, word):
    left = pbw_normalize(word, alg, "leftmost")
    assert left == pbw_normalize(word, alg, "rightmost")
    assert all(list(m) == sorted(m) for m in left.terms)
    assert left.degree() <= len(word)


@given(algebras, elements, elements, elements)
def test_associative_with_unit(alg, x, y, z):
    X, Y, Z = (uea_element(alg, t) for t in (x, y, z))
    assert (X * Y) * Z == X * (Y * Z)
    assert uea_one(alg) * X == X == X * uea_one(alg)
    assert (X * Y).degree() <= X.degree() + Y.degree()


def test_heisenberg_triple_product():
    h = heisenberg_algebra()
    e1, e2, e3 = (uea_generator(h, i) for i in range(3))
    assert (e1 * e2) * e3 == e1 * (e2 * e3)


def test_coproduct_examples():
    h = heisenberg_algebra()
    e1 = uea_generator(h, 0)
    assert [(str(l), str(r), c) for (l, r), c in uea_coproduct(e1)] == [("1", "e1", 1), ("e1", "1", 1)]
    assert [(str(l), str(r), c) for (l, r), c in uea_coproduct(uea_one(h))] == [("1", "1", 1)]
    got = {(str(l), str(r)): c for (l, r), c in uea_coproduct(uea_element(h, {(0, 1): 1}))}
    assert got == {("e1*e2", "1"): 1, ("e1", "e2"): 1, ("e2", "e1"): 1, ("1", "e1*e2"): 1}


def _square_mul(k, x, y):
    acc: dict = {}
    for (a, b), c1 in x.items():
        for (c, d), c2 in y.items():
            for l, cl in k.mul_mono(a, c).items():
                for r, cr in k.mul_mono(b, d).items():
                    add_to(acc, (l, r), c1 * c2 * cl * cr)
    return acc


@given(algebras, elements, elements)
def test_coproduct_is_multiplicative(alg, x, y):
    k = kernel(alg)
    X, Y = uea_element(alg, x).terms, uea_element(alg, y).terms
    assert k.coproduct(k.mul(X, Y)) == _square_mul(k, k.coproduct(X), k.coproduct(Y))


@given(algebras, elements)
def test_hopf_axioms(alg, x):
    k = kernel(alg)
    X = uea_element(alg, x).terms
    D = k.coproduct(X)
    left: dict = {}
    right: dict = {}
    for (l, r), c in D.items():
        for l2, r2, c2 in k.coproduct_mono(l):
            add_to(left, (l2, r2, r), c * c2)
        for l2, r2, c2 in k.coproduct_mono(r):
            add_to(right, (l, l2, r2), c * c2)
    assert left == right
    counit_left: dict = {}
    counit_right: dict = {}
    anti_left: dict = {}
    anti_right: dict = {}
    for (l, r), c in D.items():
        if not l:
            add_to(counit_left, r, c)
        if not r:
            add_to(counit_right, l, c)
        add_scaled(anti_left, k.mul(k.antipode_mono(l), {r: 1}), c)
        add_scaled(anti_right, k.mul({l: 1}, k.antipode_mono(r)), c)
    assert counit_left == X == counit_right
    unit = {(): X[()]} if X.get((), 0) else {}
    assert anti_left == unit == anti_right


def test_counit_and_antipode_examples():
    h = heisenberg_algebra()
    assert uea_counit(uea_generator(h, 0)) == 0
    assert uea_counit(uea_one(h)) == 1
    e1e2 = uea_element(h, {(0, 1): 1})
    assert uea_antipode(e1e2) == pbw_normalize((1, 0), h)


def test_abs_s_reverses_without_sign():
    h = heisenberg_algebra()
    hn = h.negated()
    e1e2 = uea_element(h, {(0, 1): 1})
    assert abs_S(e1e2, hn) == pbw_normalize((1, 0), hn)
    assert str(abs_S(e1e2, hn)) == "e1*e2 + e3"
    assert abs_S_inv(abs_S(e1e2, hn), h) == e1e2


@given(algebras, elements, elements)
def test_abs_s_is_an_anti_morphism(alg, x, y):
    neg = alg.negated()
    X, Y = uea_element(alg, x), uea_element(alg, y)
    assert abs_S(X * Y, neg) == abs_S(Y, neg) * abs_S(X, neg)
    k, kn = kernel(alg), kernel(neg)
    lhs: dict = {}
    for (l, r), c in k.coproduct(X.terms).items():
        for ll, cl in abs_S(uea_element(alg, {l: 1}), neg).terms.items():
            for rr, cr in abs_S(uea_element(alg, {r: 1}), neg).terms.items():
                add_to(lhs, (ll, rr), c * cl * cr)
    assert lhs == kn.coproduct(abs_S(X, neg).terms)


def test_vector_action():
    h = heisenberg_algebra()
    assert uea_act_vector(uea_generator(h, 0), (0, 1, 0)) == (0, 0, 1)
    assert uea_act_vector(uea_one(h), (1, 2, 3)) == (1, 2, 3)
    a = abelian_algebra(3)
    v = uea_element(a, {(): 3, (0, 1): 5})
    assert uea_act_vector(v, (1, 2, 3)) == (3, 6, 9)


def test_exterior_action_examples():
    h = heisenberg_algebra()
    e1 = uea_generator(h, 0)
    b = h.basis
    beta = ext_element(b, {(1, 2): 1})
    assert uea_act_ext(uea_one(h), beta) == beta
    assert uea_act_ext(e1, beta) == 0
    assert uea_act_ext(e1, ext_generator(b, 1)) == ext_generator(b, 2)


@given(algebras, elements, elements, st.lists(st.integers(0, 2), max_size=3, unique=True))
def test_exterior_action_composes(alg, v, w, beta):
    V, W = uea_element(alg, v), uea_element(alg, w)
    B = ext_element(alg.basis, {tuple(sorted(beta)): 1})
    assert uea_act_ext(V * W, B) == uea_act_ext(V, uea_act_ext(W, B))


@given(algebras, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_generators_act_as_derivations(alg, i, j, k):
    from hopfcurrents.exterior import wedge
    x = uea_generator(alg, i)
    a, b = ext_generator(alg.basis, j), ext_generator(alg.basis, k)
    assert uea_act_ext(x, wedge(a, b)) == wedge(uea_act_ext(x, a), b) + wedge(a, uea_act_ext(x, b))


def test_ad_extension_examples():
    ctx = builtin_context("C2")
    h = ctx.algebra
    p = ctx.group.parse("M(1,2,3)")
    e1e1 = uea_element(h, {(0, 0): 1})
    image = uea_element(h, {(0,): 1, (2,): -2})
    assert ad_extend_uea(ctx.rep, p, e1e1) == image * image
    assert ad_extend_uea(ctx.rep, p, uea_one(h)) == uea_one(h)
    trivial = builtin_context("C1")
    x = uea_element(trivial.algebra, {(0, 1): 2})
    assert ad_extend_uea(trivial.rep, trivial.named["p"], x) == x


@given(st.sampled_from(["C2", "C3"]), elements, elements)
def test_ad_extension_is_a_homomorphism(name, x, y):
    ctx = builtin_context(name)
    alg, rep = ctx.algebra, ctx.rep
    X, Y = uea_element(alg, x), uea_element(alg, y)
    p, q = ctx.named["p"], ctx.named["q"]
    assert ad_extend_uea(rep, p, X * Y) == ad_extend_uea(rep, p, X) * ad_extend_uea(rep, p, Y)
    assert ad_extend_uea(rep, p, ad_extend_uea(rep, q, X)) == ad_extend_uea(rep, ctx.group.mul(p, q), X)
    assert ad_extend_uea(rep, ctx.group.identity(), X) == X
    assert ad_extend_uea(rep, p, uea_antipode(X)) == uea_antipode(ad_extend_uea(rep, p, X))
