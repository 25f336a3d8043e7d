import pytest
from hypothesis import given, strategies as st

from hopfcurrents.currents import antipode, boundary, convolve, coproduct, counit, term
from hopfcurrents.foundations import builtin_context
from hopfcurrents.laws import HOPF_LAWS, law_boundary_square, law_co_leibniz, lift_structure
from hopfcurrents.tensor_lift import (
    TensorLiftElement,
    find_boundary_square_witness,
    lift_antipode,
    lift_boundary,
    lift_convolve,
    lift_coproduct,
    lift_counit,
    lift_element,
    lift_of,
    lift_unit,
    phi,
    phi_tensor,
)

from strategies import term_dicts

CTX = {name: builtin_context(name) for name in ("C1", "C2", "C3", "C4")}


def test_concatenation_is_not_commutative():
    ctx = CTX["C1"]
    p, q = ctx.named["p"], ctx.named["q"]
    pq = ctx.group.mul(p, q)
    x = lift_element(ctx, {(p, (0,), ()): 1})
    y = lift_element(ctx, {(q, (1,), ()): 1})
    assert lift_convolve(x, y) == lift_element(ctx, {(pq, (0, 1), ()): 1})
    assert lift_convolve(x, y) != lift_element(ctx, {(pq, (1, 0), ()): 1})
    # the quotient forgets the order
    assert phi(lift_convolve(x, y)) == phi(lift_element(ctx, {(pq, (1, 0), ()): 1}))


def test_unit():
    ctx = CTX["C2"]
    x = lift_element(ctx, {(ctx.named["p"], (1, 0), (2,)): 3})
    assert lift_convolve(lift_unit(ctx), x) == x == lift_convolve(x, lift_unit(ctx))


def test_phi_examples():
    ctx = CTX["C2"]
    p = ctx.named["p"]
    x = lift_element(ctx, {(p, (1, 0), (0,)): 1})
    assert phi(x) == term(ctx, p, (0, 1), (0,)) - term(ctx, p, (2,), (0,))
    y = lift_element(ctx, {(p, (0, 1, 1), (0, 2)): 2})
    assert phi(y) == term(ctx, p, (0, 1, 1), (0, 2), 2)
    assert phi(lift_of(phi(y))) == phi(y)


def test_word_text():
    ctx = CTX["C2"]
    x = lift_element(ctx, {(ctx.group.identity(), (1, 0), (0, 1)): 1})
    assert str(x) == "(e | e2.e1 | e1^e2)"


@pytest.mark.parametrize("name", sorted(CTX))
@pytest.mark.parametrize("law", sorted(HOPF_LAWS) + ["co-leibniz"])
@given(data=st.data())
def test_lift_laws(name, law, data):
    ctx = CTX[name]
    st_ = lift_structure(ctx)
    fn, arity = HOPF_LAWS.get(law, (law_co_leibniz, 1))
    args = [data.draw(term_dicts(ctx, words=True)) for _ in range(arity)]
    lhs, rhs = fn(st_, *args)
    assert lhs == rhs


@pytest.mark.parametrize("name", sorted(CTX))
@given(data=st.data())
def test_phi_intertwines(name, data):
    ctx = CTX[name]
    x = TensorLiftElement(ctx, data.draw(term_dicts(ctx, words=True, max_degree=3)))
    y = TensorLiftElement(ctx, data.draw(term_dicts(ctx, words=True, max_degree=3)))
    assert phi(lift_convolve(x, y)) == convolve(phi(x), phi(y))
    assert phi(lift_boundary(x)) == boundary(phi(x))
    assert phi(lift_antipode(x)) == antipode(phi(x))
    assert phi_tensor(lift_coproduct(x)) == coproduct(phi(x))
    assert lift_counit(x) == counit(phi(x))


def test_heisenberg_witness():
    ctx = CTX["C2"]
    x, d2, searched = find_boundary_square_witness(ctx)
    assert x is not None and d2 != 0
    assert str(x) == "(e | 1 | e1^e2)"
    assert str(d2) == "(e | e3 | 1) - (e | e1.e2 | 1) + (e | e2.e1 | 1)"
    assert phi(d2) == 0
    lhs, rhs = law_boundary_square(lift_structure(ctx), dict(x.terms))
    assert lhs != rhs


@pytest.mark.parametrize("name", sorted(CTX))
def test_witness_exists_in_every_context(name):
    # even abelian brackets leave e1.e2 - e2.e1 in the free algebra
    x, d2, _ = find_boundary_square_witness(CTX[name])
    assert x is not None and phi(d2) == 0


def test_search_reports_exhaustion():
    ctx = CTX["C2"]
    x, d2, searched = find_boundary_square_witness(ctx, max_word=0, max_grade=1)
    assert x is None and d2 is None and searched == 4 * (1 + 3)
