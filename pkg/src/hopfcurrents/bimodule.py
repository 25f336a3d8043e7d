"""Four-slot currents [p, v (x) a (x) u] with u a right-invariant operator in U(h^-).

The conversions between left- and right-invariant slots replay, term by term,
the derivation of the convolution formula; :func:`derived_convolution` is an
oracle for :func:`hopfcurrents.currents.convolve` that never calls it.
"""

from __future__ import annotations

from .currents import CurrentElement, engine, term_text
from .exterior import wedge_mono
from .foundations import AlgebraError, Context
from .linear import Combination, add_scaled, add_to


class FourSlotElement(Combination):
    """Keys are ``(g, v, a, u)``: group index, PBW monomial of U(h), wedge, PBW monomial of U(h^-)."""

    __slots__ = ()

    def _sort_key(self, key):
        eng = engine(self.owner)
        return (eng.name(key[0]),) + key[1:]

    def _term_text(self, key):
        eng = engine(self.owner)
        base = term_text(eng, key[:3])
        u = key[3]
        ut = "*".join(self.owner.algebra.basis[i] for i in u) if u else "1"
        return base[:-1] + f" | {ut})"


def four_slot(ctx: Context, terms) -> FourSlotElement:
    """Build from ``{(p, v_word, wedge, u_word): coeff}``; both words are normalized."""
    from .exterior import sort_sign

    eng = engine(ctx)
    acc: dict = {}
    for (p, v, a, u), c in terms.items():
        g = eng.intern(p)
        s, am = sort_sign(a)
        if not s:
            continue
        eng.U.check_word(tuple(v))
        eng.Uneg.check_word(tuple(u))
        for vm, cv in eng.U.normalize(tuple(v)).items():
            for um, cu in eng.Uneg.normalize(tuple(u)).items():
                add_to(acc, (g, vm, am, um), s * c * cv * cu)
    return FourSlotElement(ctx, acc)


def _check(x, cls=FourSlotElement):
    if not isinstance(x, cls):
        raise AlgebraError(f"expected {cls.__name__}, got {type(x).__name__}")
    return x.owner


def embed(x: CurrentElement) -> FourSlotElement:
    ctx = _check(x, CurrentElement)
    return FourSlotElement(ctx, {(g, v, a, ()): c for (g, v, a), c in x.terms.items()}, _trusted=True)


def _abs_s_inv(eng, u: tuple) -> dict:
    """|S|^{-1}: U(h^-) -> U(h) on a monomial: read the word backwards in U(h)."""
    return eng.U.normalize(tuple(reversed(u)))


def _abs_s(eng, v: tuple) -> dict:
    return eng.Uneg.normalize(tuple(reversed(v)))


def reduce_terms(eng, g, v, a, u) -> dict:
    """[p, v(x)a(x)u] = [p, A_p^{-1}(|S|^{-1}(u_(1))) v (x) [|S|^{-1}(u_(2)), a] (x) 1]."""
    U = eng.U
    g_inv = eng.inv(g)
    acc: dict = {}
    for u1, u2, cu in eng.Uneg.coproduct_mono(u):
        left = U.mul(eng.ad_uea_terms(g_inv, _abs_s_inv(eng, u1)), {v: 1})
        if not left:
            continue
        ext = U.act_ext(_abs_s_inv(eng, u2), {a: 1})
        for lm, cl in left.items():
            for em, ce in ext.items():
                add_to(acc, (g, lm, em), cu * cl * ce)
    return acc


def reduce(x: FourSlotElement) -> CurrentElement:
    ctx = _check(x)
    eng = engine(ctx)
    acc: dict = {}
    for key, c in x.terms.items():
        add_scaled(acc, reduce_terms(eng, *key), c)
    return CurrentElement(ctx, acc, _trusted=True)


def to_right_form(x: FourSlotElement) -> FourSlotElement:
    """[p, v(x)a(x)u] = [p, 1 (x) [A_p(S(v_(1))), a] (x) A_p(|S|(v_(2))) u]."""
    ctx = _check(x)
    eng = engine(ctx)
    U, Uneg = eng.U, eng.Uneg
    acc: dict = {}
    for (g, v, a, u), c in x.terms.items():
        for v1, v2, cv in U.coproduct_mono(v):
            ext = U.act_ext(eng.ad_uea_terms(g, U.antipode_mono(v1)), {a: 1})
            if not ext:
                continue
            moved: dict = {}
            for m, cm in _abs_s(eng, v2).items():
                add_scaled(moved, eng.ad_uneg(g, m), cm)
            right = Uneg.mul(moved, {u: 1})
            for em, ce in ext.items():
                for rm, cr in right.items():
                    add_to(acc, (g, (), em, rm), c * cv * ce * cr)
    return FourSlotElement(ctx, acc, _trusted=True)


def conv_basic(x: FourSlotElement, y: FourSlotElement) -> FourSlotElement:
    """[p,1(x)a(x)1] * [q,1(x)b(x)1] = [pq, 1 (x) a ^ A_p b (x) 1]."""
    ctx = _check(x)
    if _check(y) is not ctx:
        raise AlgebraError("four-slot elements belong to different contexts")
    for (g, v, a, u) in list(x.terms) + list(y.terms):
        if v or u:
            raise AlgebraError("conv_basic needs v = u = 1 in both factors")
    return _conv(ctx, x, y)


def conv_mixed(x: FourSlotElement, y: FourSlotElement) -> FourSlotElement:
    """[p,1(x)a(x)u] * [q,w(x)b(x)1] = [pq, w (x) a ^ A_p b (x) u]."""
    ctx = _check(x)
    if _check(y) is not ctx:
        raise AlgebraError("four-slot elements belong to different contexts")
    if any(v for (_, v, _, _) in x.terms):
        raise AlgebraError("conv_mixed needs a left factor with v = 1")
    if any(u for (_, _, _, u) in y.terms):
        raise AlgebraError("conv_mixed needs a right factor with u = 1")
    return _conv(ctx, x, y)


def _conv(ctx, x, y) -> FourSlotElement:
    eng = engine(ctx)
    acc: dict = {}
    for (p, _, a, u), c1 in x.terms.items():
        for (qq, w, b, _), c2 in y.terms.items():
            pq = eng.mul(p, qq)
            for bm, cb in eng.ad_ext(p, b).items():
                s, ab = wedge_mono(a, bm)
                if s:
                    add_to(acc, (pq, w, ab, u), s * c1 * c2 * cb)
    return FourSlotElement(ctx, acc, _trusted=True)


def derived_convolution(x: CurrentElement, y: CurrentElement) -> CurrentElement:
    """Convolution obtained by moving v to the right slot, multiplying, and moving back."""
    ctx = _check(x, CurrentElement)
    if _check(y, CurrentElement) is not ctx:
        raise AlgebraError("currents belong to different contexts")
    return reduce(conv_mixed(to_right_form(embed(x)), embed(y)))


def left_multiply(x: FourSlotElement, w) -> FourSlotElement:
    """Compose with a left-invariant operator: [p, v(x)a(x)u] -> [p, v w (x) a (x) u].

    ``w`` is a PBW monomial (index tuple) of U(h).
    """
    ctx = _check(x)
    eng = engine(ctx)
    w = tuple(w)
    eng.U.check_word(w)
    wt = eng.U.normalize(w)
    acc: dict = {}
    for (g, v, a, u), c in x.terms.items():
        for m, cm in eng.U.mul({v: 1}, wt).items():
            add_to(acc, (g, m, a, u), c * cm)
    return FourSlotElement(ctx, acc, _trusted=True)


def right_multiply(x: FourSlotElement, z) -> FourSlotElement:
    """Compose with a right-invariant operator: [p, v(x)a(x)u] -> [p, v (x) a (x) u z] in U(h^-)."""
    ctx = _check(x)
    eng = engine(ctx)
    z = tuple(z)
    eng.Uneg.check_word(z)
    zt = eng.Uneg.normalize(z)
    acc: dict = {}
    for (g, v, a, u), c in x.terms.items():
        for m, cm in eng.Uneg.mul({u: 1}, zt).items():
            add_to(acc, (g, v, a, m), c * cm)
    return FourSlotElement(ctx, acc, _trusted=True)


__all__ = [
    "FourSlotElement", "four_slot", "embed", "reduce", "to_right_form", "conv_basic", "conv_mixed",
    "derived_convolution", "left_multiply", "right_multiply",
]
