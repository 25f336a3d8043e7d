import pytest
from hypothesis import given, strategies as st

from hopfcurrents.bimodule import (
    conv_basic,
    conv_mixed,
    derived_convolution,
    embed,
    four_slot,
    left_multiply,
    reduce,
    right_multiply,
    to_right_form,
)
from hopfcurrents.currents import CurrentElement, convolve, current, term, unit
from hopfcurrents.exterior import ext_element
from hopfcurrents.foundations import AlgebraError, builtin_context

from strategies import term_dicts

CTX = {name: builtin_context(name) for name in ("C1", "C2", "C3", "C4")}


def test_reduce_with_trivial_right_slot():
    ctx = CTX["C2"]
    p = ctx.named["p"]
    x = four_slot(ctx, {(p, (0,), (1,), ()): 1})
    assert reduce(x) == term(ctx, p, (0,), (1,))


def test_reduce_abelian_rereads_the_word():
    ctx = CTX["C1"]
    p = ctx.named["p"]
    x = four_slot(ctx, {(p, (), (2,), (1, 0)): 1})
    assert reduce(x) == term(ctx, p, (0, 1), (2,))


def test_reduce_heisenberg_sign():
    ctx = CTX["C2"]
    e = ctx.group.identity()
    x = four_slot(ctx, {(e, (), (1,), (0,)): 1})
    assert reduce(x) == term(ctx, e, (0,), (1,)) + term(ctx, e, (), (2,))


def test_right_form_examples():
    ctx = CTX["C1"]
    p = ctx.named["p"]
    x = four_slot(ctx, {(p, (), (1,), (2,)): 1})
    assert to_right_form(x) == x
    y = four_slot(ctx, {(p, (0,), (1,), ()): 1})
    assert to_right_form(y) == four_slot(ctx, {(p, (), (1,), (0,)): 1})


def test_conv_basic_examples():
    ctx = CTX["C2"]
    g = ctx.group
    p, q = ctx.named["p"], ctx.named["q"]
    one = conv_basic(four_slot(ctx, {(p, (), (), ()): 1}), four_slot(ctx, {(q, (), (), ()): 1}))
    assert one == four_slot(ctx, {(g.mul(p, q), (), (), ()): 1})
    got = conv_basic(four_slot(ctx, {(p, (), (0,), ()): 1}), four_slot(ctx, {(q, (), (1,), ()): 1}))
    a_p = g.params(p)[0]
    assert got == four_slot(ctx, {(g.mul(p, q), (), (0, 1), ()): 1, (g.mul(p, q), (), (0, 2), ()): a_p})


def test_conv_mixed_example_and_preconditions():
    ctx = CTX["C2"]
    g = ctx.group
    p, q = ctx.named["p"], ctx.named["q"]
    x = four_slot(ctx, {(p, (), (), (0,)): 1})
    y = four_slot(ctx, {(q, (1,), (), ()): 1})
    assert conv_mixed(x, y) == four_slot(ctx, {(g.mul(p, q), (1,), (), (0,)): 1})
    with pytest.raises(AlgebraError):
        conv_basic(x, y)
    with pytest.raises(AlgebraError):
        conv_mixed(y, x)


def test_derived_convolution_on_heisenberg_witness():
    ctx = CTX["C2"]
    p, q = ctx.named["p"], ctx.named["q"]
    x, y = term(ctx, p, (0,)), term(ctx, q, (), (1,))
    assert derived_convolution(x, y) == convolve(x, y)
    assert derived_convolution(unit(ctx), x) == x


@pytest.mark.parametrize("name", sorted(CTX))
@given(data=st.data())
def test_derived_equals_convolve(name, data):
    ctx = CTX[name]
    x = CurrentElement(ctx, data.draw(term_dicts(ctx, max_degree=3)))
    y = CurrentElement(ctx, data.draw(term_dicts(ctx, max_degree=3)))
    assert derived_convolution(x, y) == convolve(x, y)


@pytest.mark.parametrize("name", sorted(CTX))
@given(data=st.data())
def test_slot_identities(name, data):
    ctx = CTX[name]
    n = ctx.algebra.dim
    d = data.draw(term_dicts(ctx))
    us = [data.draw(st.lists(st.integers(0, n - 1), max_size=2).map(tuple)) for _ in d]
    x = CurrentElement(ctx, d)
    assert reduce(embed(x)) == x
    four = four_slot(ctx, {(engine_point(ctx, k[0]), k[1], k[2], u): c for (k, c), u in zip(d.items(), us)})
    rf = to_right_form(four)
    assert all(not k[1] for k in rf.terms)
    assert reduce(rf) == reduce(four)
    w = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=2).map(tuple))
    z = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=2).map(tuple))
    lr = reduce(right_multiply(embed(reduce(left_multiply(four, w))), z))
    rl = reduce(left_multiply(embed(reduce(right_multiply(four, z))), w))
    assert lr == rl == reduce(right_multiply(left_multiply(four, w), z))


def engine_point(ctx, g):
    from hopfcurrents.currents import engine
    return engine(ctx).element(g)


def test_four_slot_text():
    ctx = CTX["C2"]
    x = four_slot(ctx, {(ctx.group.identity(), (0,), (1,), (2,)): 2})
    assert str(x) == "2*(e | e1 | e2 | e3)"
