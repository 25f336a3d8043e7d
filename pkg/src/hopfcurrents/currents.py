"""Finitely supported currents: the Hopf algebra (U(h) (x) Wedge(h^-))[H].

A term ``(p | v | a)`` is stored under the key ``(g, v, a)`` where ``g`` is the
context's interned index of the group element ``p``, ``v`` a PBW monomial and
``a`` a wedge monomial.  Grade = wedge length, filtration = PBW degree.
"""

from __future__ import annotations

from .enveloping import UeaElement, generator_images, kernel
from .exterior import (
    ExtElement,
    antipode_sign,
    coproduct_mono as ext_coproduct_mono,
    matrix_columns,
    sort_sign,
    transform_mono,
    wedge_mono,
)
from .foundations import AlgebraError, Context
from .linear import Combination, add_scaled, add_to, join_terms, q

# Sign of the bracket term of the boundary.  +1 means the bracket of h (not of
# h^-) is used for [a_i, a_j]; this is the only choice for which the boundary
# squares to zero, because the first sum produces the commutator a_i a_j - a_j a_i
# of U(h).
BRACKET_SIGN = 1


class Engine:
    """Per-context interning of group elements and memoized A_p extensions."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.group = ctx.group
        self.U = kernel(ctx.algebra)
        self.Uneg = kernel(ctx.neg_algebra)
        self.n = ctx.algebra.dim
        self._elts: list = []
        self._index: dict = {}
        self._mul: dict = {}
        self._inv: dict = {}
        self._images: dict = {}
        self._cols: dict = {}
        self._ad_uea: dict = {}
        self._ad_ext: dict = {}
        self._ad_uneg: dict = {}
        self._names: dict = {}
        self.e = self.intern(ctx.group.identity())

    # -- group ---------------------------------------------------------------
    def intern(self, p) -> int:
        i = self._index.get(p)
        if i is None:
            self.group.check(p)
            i = len(self._elts)
            self._elts.append(p)
            self._index[p] = i
        return i

    def element(self, i: int):
        return self._elts[i]

    def mul(self, i: int, j: int) -> int:
        r = self._mul.get((i, j))
        if r is None:
            r = self._mul[(i, j)] = self.intern(self.group.mul(self._elts[i], self._elts[j]))
        return r

    def inv(self, i: int) -> int:
        r = self._inv.get(i)
        if r is None:
            r = self._inv[i] = self.intern(self.group.inv(self._elts[i]))
            self._inv[r] = i
        return r

    def name(self, i: int) -> str:
        s = self._names.get(i)
        if s is None:
            s = self._names[i] = self.group.serialize(self._elts[i])
        return s

    # -- representation ---------------------------------------------------
    def images(self, i: int) -> list:
        """A_p(e_k) as degree-one U(h) elements."""
        r = self._images.get(i)
        if r is None:
            r = self._images[i] = generator_images(self.ctx.rep.matrix(self._elts[i]))
        return r

    def columns(self, i: int) -> list:
        r = self._cols.get(i)
        if r is None:
            r = self._cols[i] = matrix_columns(self.ctx.rep.matrix(self._elts[i]))
        return r

    def ad_uea(self, i: int, m: tuple) -> dict:
        key = (i, m)
        r = self._ad_uea.get(key)
        if r is None:
            if not m or i == self.e:
                r = {m: 1}
            else:
                r = self.U.substitute_mono(self.images(i), m)
            self._ad_uea[key] = r
        return r

    def ad_uea_terms(self, i: int, x: dict) -> dict:
        acc: dict = {}
        for m, c in x.items():
            add_scaled(acc, self.ad_uea(i, m), c)
        return acc

    def ad_uneg(self, i: int, m: tuple) -> dict:
        """A_p on U(h^-); same generator images, products taken in U(h^-)."""
        key = (i, m)
        r = self._ad_uneg.get(key)
        if r is None:
            if not m or i == self.e:
                r = {m: 1}
            else:
                r = self.Uneg.substitute_mono(self.images(i), m)
            self._ad_uneg[key] = r
        return r

    def ad_ext(self, i: int, a: tuple) -> dict:
        key = (i, a)
        r = self._ad_ext.get(key)
        if r is None:
            if not a or i == self.e:
                r = {a: 1}
            else:
                r = transform_mono(self.columns(i), a)
            self._ad_ext[key] = r
        return r

    def ad_ext_terms(self, i: int, x: dict) -> dict:
        acc: dict = {}
        for m, c in x.items():
            add_scaled(acc, self.ad_ext(i, m), c)
        return acc


def engine(ctx: Context) -> Engine:
    eng = getattr(ctx, "_engine", None)
    if eng is None:
        eng = Engine(ctx)
        ctx._engine = eng
    return eng


# ---------------------------------------------------------------------------
# element types

def term_text(eng: Engine, key) -> str:
    g, v, a = key
    basis = eng.ctx.algebra.basis
    vt = "*".join(basis[i] for i in v) if v else "1"
    at = "^".join(basis[i] for i in a) if a else "1"
    return f"({eng.name(g)} | {vt} | {at})"


class CurrentElement(Combination):
    """Element of (U(h) (x) Wedge(h^-))[H]; ``owner`` is the Context."""

    __slots__ = ()

    @property
    def ctx(self) -> Context:
        return self.owner

    def _sort_key(self, key):
        eng = engine(self.owner)
        return (eng.name(key[0]), key[1], key[2])

    def _term_text(self, key):
        return term_text(engine(self.owner), key)

    def group_items(self):
        """Terms as ``((p, pbw, wedge), coeff)`` with real group elements."""
        eng = engine(self.owner)
        return [((eng.element(g), v, a), c) for (g, v, a), c in self.sorted_items()]

    def support(self) -> set:
        eng = engine(self.owner)
        return {eng.element(g) for (g, _, _) in self.terms}

    def grades(self) -> set:
        return {len(a) for (_, _, a) in self.terms}

    def component(self, k: int) -> "CurrentElement":
        return self._new({key: c for key, c in self.terms.items() if len(key[2]) == k})

    def homogeneous_components(self) -> list:
        return [(k, self.component(k)) for k in sorted(self.grades())]

    def max_filtration(self) -> int:
        return max((len(v) for (_, v, _) in self.terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, CurrentElement):
            return convolve(self, other)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented


class TensorPower(Combination):
    """Finite-support element of the k-fold graded tensor power of currents.

    Keys are tuples of term keys; the grade of a factor is its wedge length.
    """

    __slots__ = ()

    def _sort_key(self, key):
        eng = engine(self.owner)
        return tuple((eng.name(g), v, a) for (g, v, a) in key)

    def _term_text(self, key):
        eng = engine(self.owner)
        return " @ ".join(term_text(eng, k) for k in key)

    def __str__(self):
        # factors are parenthesized, so join_terms is unambiguous
        return join_terms((c, self._term_text(k)) for k, c in self.sorted_items())


TensorSquareElement = TensorPower


def current(ctx: Context, terms=None) -> CurrentElement:
    """Build from ``{(p, word, wedge): coeff}``; words are PBW-normalized, wedges sorted."""
    eng = engine(ctx)
    acc: dict = {}
    for (p, word, wedge), c in (terms or {}).items():
        g = eng.intern(p)
        word = tuple(word)
        eng.U.check_word(word)
        s, a = sort_sign(wedge)
        if not s:
            continue
        if a and not (0 <= a[0] and a[-1] < eng.n):
            raise AlgebraError(f"wedge index out of range in {wedge}")
        for m, cm in eng.U.normalize(word).items():
            add_to(acc, (g, m, a), s * cm * q(c))
    return CurrentElement(ctx, acc, _trusted=True)


def term(ctx: Context, p, v=(), a=(), coeff=1) -> CurrentElement:
    """A single ``(p | v | a)`` with v, a given as UeaElement/ExtElement or index tuples."""
    eng = engine(ctx)
    g = eng.intern(p)
    vt = v.terms if isinstance(v, UeaElement) else eng.U.normalize(tuple(v))
    if isinstance(a, ExtElement):
        at = a.terms
    else:
        s, m = sort_sign(a)
        at = {m: s} if s else {}
    acc: dict = {}
    for m, cm in vt.items():
        for w, cw in at.items():
            add_to(acc, (g, m, w), q(coeff) * cm * cw)
    return CurrentElement(ctx, acc, _trusted=True)


def unit(ctx: Context) -> CurrentElement:
    eng = engine(ctx)
    return CurrentElement(ctx, {(eng.e, (), ()): 1}, _trusted=True)


def _check(*xs):
    ctx = xs[0].owner
    for x in xs:
        if not isinstance(x, CurrentElement):
            raise AlgebraError(f"expected a current, got {type(x).__name__}")
        if x.owner is not ctx:
            raise AlgebraError("currents belong to different contexts")
    return ctx


# ---------------------------------------------------------------------------
# term kernels

def boundary_terms(eng: Engine, g: int, v: tuple, a: tuple) -> dict:
    acc: dict = {}
    k = len(a)
    if not k:
        return acc
    U = eng.U
    g_inv = eng.inv(g)
    inv_images = eng.images(g_inv)
    for i in range(k):
        rest = a[:i] + a[i + 1:]
        sign = -1 if i & 1 else 1
        # A_p^{-1}(a_i) v : left multiplication in U(h)
        for (gen,), cg in inv_images[a[i]].items():
            for m, cm in U.mul_mono((gen,), v).items():
                add_to(acc, (g, m, rest), sign * cg * cm)
    for i in range(k):
        for j in range(i + 1, k):
            rest = a[:i] + a[i + 1:j] + a[j + 1:]
            sign = BRACKET_SIGN * (-1 if (i + j + 1) & 1 else 1)
            for idx, ck in U.c[a[i]][a[j]]:
                s, m = sort_sign((idx,) + rest)
                if s:
                    add_to(acc, (g, v, m), sign * s * ck)
    return acc


def coproduct_terms(eng: Engine, g: int, v: tuple, a: tuple) -> dict:
    acc: dict = {}
    for v1, v2, cu in eng.U.coproduct_mono(v):
        for a1, a2, s in ext_coproduct_mono(a):
            add_to(acc, ((g, v1, a1), (g, v2, a2)), cu * s)
    return acc


class _ConvCache:
    """Memo tables for the two halves of the convolution formula."""

    def __init__(self):
        self.left: dict = {}
        self.right: dict = {}


def _conv_cache(eng: Engine) -> _ConvCache:
    cache = getattr(eng, "_conv", None)
    if cache is None:
        cache = eng._conv = _ConvCache()
    return cache


def convolve_terms(eng: Engine, t1, t2) -> dict:
    """(p, v (x) a) * (q, w (x) b) = (pq, A_q^{-1}(v_(1)) w (x) a ^ A_p[v_(2), b])."""
    (p, v, a), (qq, w, b) = t1, t2
    pq = eng.mul(p, qq)
    U = eng.U
    cache = _conv_cache(eng)
    q_inv = eng.inv(qq)
    acc: dict = {}
    for v1, v2, cu in U.coproduct_mono(v):
        lkey = (q_inv, v1, w)
        left = cache.left.get(lkey)
        if left is None:
            left = U.mul(eng.ad_uea(q_inv, v1), {w: 1})
            cache.left[lkey] = left
        rkey = (p, v2, b, a)
        right = cache.right.get(rkey)
        if right is None:
            acted = U.act_ext_mono(v2, b)
            moved = eng.ad_ext_terms(p, acted) if p != eng.e else acted
            right = {}
            for m, cm in moved.items():
                s, wm = wedge_mono(a, m)
                if s:
                    add_to(right, wm, s * cm)
            cache.right[rkey] = right
        if not right:
            continue
        for lm, cl in left.items():
            f = cu * cl
            for rm, cr in right.items():
                add_to(acc, (pq, lm, rm), f * cr)
    return acc


def antipode_terms(eng: Engine, g: int, v: tuple, a: tuple) -> dict:
    """S(p, v (x) a) = (p^-1, A_p(S(v_(1))) (x) [S(v_(2)), A_p^{-1} S(a)])."""
    U = eng.U
    g_inv = eng.inv(g)
    sa = {m: antipode_sign(a) * c for m, c in eng.ad_ext(g_inv, a).items()}
    acc: dict = {}
    for v1, v2, cu in U.coproduct_mono(v):
        left = eng.ad_uea_terms(g, U.antipode_mono(v1))
        right = U.act_ext(U.antipode_mono(v2), sa)
        for lm, cl in left.items():
            for rm, cr in right.items():
                add_to(acc, (g_inv, lm, rm), cu * cl * cr)
    return acc


def groupring_terms(eng: Engine, t1, t2) -> dict:
    (p, v, a), (qq, w, b) = t1, t2
    s, ab = wedge_mono(a, b)
    if not s:
        return {}
    pq = eng.mul(p, qq)
    return {(pq, m, ab): s * c for m, c in eng.U.mul_mono(v, w).items()}


# ---------------------------------------------------------------------------
# public operations

def _linear(x: CurrentElement, fn) -> CurrentElement:
    eng = engine(x.owner)
    acc: dict = {}
    for (g, v, a), c in x.terms.items():
        add_scaled(acc, fn(eng, g, v, a), c)
    return CurrentElement(x.owner, acc, _trusted=True)


def boundary(x: CurrentElement) -> CurrentElement:
    _check(x)
    return _linear(x, boundary_terms)


def coproduct(x: CurrentElement) -> TensorPower:
    _check(x)
    eng = engine(x.owner)
    acc: dict = {}
    for (g, v, a), c in x.terms.items():
        add_scaled(acc, coproduct_terms(eng, g, v, a), c)
    return TensorPower(x.owner, acc, _trusted=True)


def counit(x: CurrentElement) -> dict:
    """The counit as a finitely supported function H -> Q (group element -> scalar)."""
    _check(x)
    eng = engine(x.owner)
    out: dict = {}
    for (g, v, a), c in x.terms.items():
        if not v and not a:
            add_to(out, eng.element(g), c)
    return out


def counit_scalar(x: CurrentElement):
    return sum(counit(x).values(), 0)


def convolve(x: CurrentElement, y: CurrentElement) -> CurrentElement:
    ctx = _check(x, y)
    eng = engine(ctx)
    acc: dict = {}
    for t1, c1 in x.terms.items():
        for t2, c2 in y.terms.items():
            add_scaled(acc, convolve_terms(eng, t1, t2), c1 * c2)
    return CurrentElement(ctx, acc, _trusted=True)


def antipode(x: CurrentElement) -> CurrentElement:
    _check(x)
    return _linear(x, antipode_terms)


def groupring_convolve(x: CurrentElement, y: CurrentElement) -> CurrentElement:
    """The naive group-ring product (pq, vw (x) a ^ b)."""
    ctx = _check(x, y)
    eng = engine(ctx)
    acc: dict = {}
    for t1, c1 in x.terms.items():
        for t2, c2 in y.terms.items():
            add_scaled(acc, groupring_terms(eng, t1, t2), c1 * c2)
    return CurrentElement(ctx, acc, _trusted=True)


# ---------------------------------------------------------------------------
# smash product

def smash_action(ctx: Context, h, a):
    """(p, v) . (q, alpha) = (pq, A_p[v, alpha]).

    ``h`` is ``(p, UeaElement)`` and ``a`` is ``(q, ExtElement)``; returns
    ``(pq, ExtElement)``.
    """
    (p, v), (qq, alpha) = h, a
    if v.owner != ctx.algebra:
        raise AlgebraError("U(h) element is over a different algebra")
    if alpha.owner != ctx.algebra.basis:
        raise AlgebraError("exterior element has the wrong dimension")
    eng = engine(ctx)
    gp, gq = eng.intern(p), eng.intern(qq)
    acted = eng.U.act_ext(v.terms, alpha.terms)
    return ctx.group.mul(p, qq), ExtElement(alpha.owner, eng.ad_ext_terms(gp, acted), _trusted=True)


def _hopf_sub_mul(eng: Engine, h, k) -> dict:
    """Product in the Hopf subalgebra U(h)[H]: (p, v)(q, w) = (pq, A_q^{-1}(v) w)."""
    (p, v), (qq, w) = h, k
    pq = eng.mul(p, qq)
    return {(pq, m): c for m, c in eng.U.mul(eng.ad_uea(eng.inv(qq), v), {w: 1}).items()}


def smash_product(x: CurrentElement, y: CurrentElement) -> CurrentElement:
    """The smash product Wedge(h^-) # U(h)[H].

    A term (p | v | a) is read as ``a # (p, v)``; the Hopf subalgebra U(h)[H]
    acts on the exterior algebra through :func:`smash_action`, and
    ``(a # h)(b # k) = sum a ^ (h_(1) . b) # h_(2) k``.
    """
    ctx = _check(x, y)
    eng = engine(ctx)
    acc: dict = {}
    for (p, v, a), c1 in x.terms.items():
        for (qq, w, b), c2 in y.terms.items():
            for h1, h2, cu in eng.U.coproduct_mono(v):
                # h_(1) . b with h_(1) = (p, h1); b sits at the identity
                acted = eng.ad_ext_terms(p, eng.U.act_ext_mono(h1, b))
                if not acted:
                    continue
                prod = _hopf_sub_mul(eng, (p, h2), (qq, w))
                for m, cm in acted.items():
                    s, am = wedge_mono(a, m)
                    if not s:
                        continue
                    for (g, u), cu2 in prod.items():
                        add_to(acc, (g, u, am), c1 * c2 * cu * s * cm * cu2)
    return CurrentElement(ctx, acc, _trusted=True)


# ---------------------------------------------------------------------------
# tensor powers

def grade(key) -> int:
    return len(key[2])


def filtration(key) -> int:
    return len(key[1])


def tensor(*xs: CurrentElement) -> TensorPower:
    ctx = _check(*xs)
    acc = {(): 1}
    for x in xs:
        nxt: dict = {}
        for k, c in acc.items():
            for t, ct in x.terms.items():
                add_to(nxt, k + (t,), c * ct)
        acc = nxt
    return TensorPower(ctx, acc, _trusted=True)


def apply_factor(T: TensorPower, pos: int, fn, degree: int = 0) -> TensorPower:
    """Apply a term-level map to factor ``pos`` with the Koszul sign of its degree.

    ``fn(eng, key)`` returns either a dict of term keys (linear maps) or a dict
    of key tuples (maps into a tensor power, e.g. the coproduct).
    """
    eng = engine(T.owner)
    acc: dict = {}
    for key, c in T.terms.items():
        sign = 1
        if degree & 1:
            passed = sum(grade(k) for k in key[:pos])
            sign = -1 if passed & 1 else 1
        for new, cn in fn(eng, key[pos]).items():
            piece = new if isinstance(new[0], tuple) else (new,)
            add_to(acc, key[:pos] + piece + key[pos + 1:], sign * c * cn)
    return TensorPower(T.owner, acc, _trusted=True)


def coproduct_map(eng, key):
    return coproduct_terms(eng, *key)


def boundary_map(eng, key):
    return boundary_terms(eng, *key)


def antipode_map(eng, key):
    return antipode_terms(eng, *key)


def multiply_factors(T: TensorPower, product=None) -> CurrentElement:
    """m(x (x) y) for a tensor square."""
    eng = engine(T.owner)
    product = product or convolve_terms
    acc: dict = {}
    for (k1, k2), c in T.terms.items():
        add_scaled(acc, product(eng, k1, k2), c)
    return CurrentElement(T.owner, acc, _trusted=True)


def product_of_coproducts(x: CurrentElement, y: CurrentElement, product=None) -> TensorPower:
    """(* (x) *)(id (x) tau (x) id)(Delta x (x) Delta y) with the Koszul sign of tau."""
    ctx = _check(x, y)
    eng = engine(ctx)
    product = product or convolve_terms
    dx = coproduct(x).terms
    dy = coproduct(y).terms
    acc: dict = {}
    for (x1, x2), cx in dx.items():
        for (y1, y2), cy in dy.items():
            sign = -1 if (grade(x2) * grade(y1)) & 1 else 1
            left = product(eng, x1, y1)
            if not left:
                continue
            right = product(eng, x2, y2)
            f = sign * cx * cy
            for l, cl in left.items():
                for r, cr in right.items():
                    add_to(acc, (l, r), f * cl * cr)
    return TensorPower(ctx, acc, _trusted=True)


def counit_apply(T: TensorPower, pos: int) -> CurrentElement:
    """(eps (x) id) or (id (x) eps) on a tensor square, as a current."""
    acc: dict = {}
    other = 1 - pos
    for key, c in T.terms.items():
        g, v, a = key[pos]
        if not v and not a:
            add_to(acc, key[other], c)
    return CurrentElement(T.owner, acc, _trusted=True)


# ---------------------------------------------------------------------------
# grading, filtration and sub-Hopf-algebras

def validate_subgroup(ctx: Context, elements) -> list:
    group = ctx.group
    elts = list(elements)
    for p in elts:
        group.check(p)
    keyset = {group.serialize(p) for p in elts}
    if group.serialize(group.identity()) not in keyset:
        raise AlgebraError("subset does not contain the identity")
    for p in elts:
        if group.serialize(group.inv(p)) not in keyset:
            raise AlgebraError(f"subset is not closed under inverses at {group.serialize(p)}")
        for r in elts:
            if group.serialize(group.mul(p, r)) not in keyset:
                raise AlgebraError(
                    f"subset is not closed under products: {group.serialize(p)}*{group.serialize(r)}")
    return elts


def generated_subgroup(ctx: Context, generators) -> list:
    group = ctx.group
    seen = {group.serialize(group.identity()): group.identity()}
    frontier = list(seen.values())
    gens = list(generators)
    gens += [group.inv(g) for g in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = group.mul(p, g)
                k = group.serialize(r)
                if k not in seen:
                    if len(seen) > 10000:
                        raise AlgebraError("generated subgroup is too large")
                    seen[k] = r
                    nxt.append(r)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


__all__ = [
    "BRACKET_SIGN", "CurrentElement", "TensorPower", "TensorSquareElement", "Engine", "engine",
    "current", "term", "unit", "boundary", "coproduct", "counit", "counit_scalar", "convolve",
    "antipode", "groupring_convolve", "smash_action", "smash_product", "tensor", "apply_factor",
    "multiply_factors", "product_of_coproducts", "counit_apply", "coproduct_map", "boundary_map",
    "antipode_map", "grade", "filtration",
    "validate_subgroup", "generated_subgroup",
]
