"""Hypothesis strategies for term dictionaries over a built-in context."""

from hypothesis import strategies as st

from hopfcurrents.currents import engine


def term_keys(ctx, words=False, max_degree=2):
    eng = engine(ctx)
    points = [eng.intern(p) for p in ctx.sample_elements[:4]]
    n = ctx.algebra.dim
    v = st.lists(st.integers(0, n - 1), max_size=max_degree).map(tuple if words else lambda w: tuple(sorted(w)))
    a = st.lists(st.integers(0, n - 1), max_size=n, unique=True).map(lambda m: tuple(sorted(m)))
    return st.tuples(st.sampled_from(points), v, a)


def term_dicts(ctx, words=False, max_size=2, max_degree=2):
    return st.dictionaries(term_keys(ctx, words, max_degree), st.integers(-2, 2).filter(bool),
                           min_size=1, max_size=max_size)
