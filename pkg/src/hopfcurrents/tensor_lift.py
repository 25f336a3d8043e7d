"""The lift of the current algebra to the free tensor algebra T(h).

Same formulas as :mod:`hopfcurrents.currents` with concatenation of words in
place of PBW multiplication.  The lift is a graded, filtered Hopf algebra, but
its boundary need not square to zero.  :func:`phi` is the quotient map onto
the current algebra.
"""

from __future__ import annotations

from itertools import combinations, product

from .currents import CurrentElement, TensorPower, engine
from .enveloping import kernel
from .exterior import antipode_sign, coproduct_mono as ext_coproduct_mono, sort_sign, wedge_mono
from .foundations import AlgebraError, Context
from .linear import Combination, add_scaled, add_to, q


def word_text(basis, w: tuple) -> str:
    return ".".join(basis[i] for i in w) if w else "1"


class TensorLiftElement(Combination):
    """Keys are ``(g, word, wedge)`` with ``word`` an arbitrary index tuple."""

    __slots__ = ()

    def _sort_key(self, key):
        eng = engine(self.owner)
        return (eng.name(key[0]), len(key[1]), key[1], key[2])

    def _term_text(self, key):
        eng = engine(self.owner)
        g, w, a = key
        basis = self.owner.algebra.basis
        at = "^".join(basis[i] for i in a) if a else "1"
        return f"({eng.name(g)} | {word_text(basis, w)} | {at})"

    def grades(self) -> set:
        return {len(a) for (_, _, a) in self.terms}

    def max_filtration(self) -> int:
        return max((len(w) for (_, w, _) in self.terms), default=-1)


class LiftTensorPower(TensorPower):
    """Tensor powers of lifted elements; factors print with word syntax."""

    __slots__ = ()

    def _sort_key(self, key):
        eng = engine(self.owner)
        return tuple((eng.name(g), len(w), w, a) for (g, w, a) in key)

    def _term_text(self, key):
        one = TensorLiftElement(self.owner, {}, _trusted=True)
        return " @ ".join(one._term_text(k) for k in key)


class _LiftKernels:
    """Word-level kernels for one context; words are never rewritten."""

    def __init__(self, ctx: Context):
        self.eng = engine(ctx)
        self.U = kernel(ctx.algebra)
        self._subst: dict = {}

    def letter_images(self, g: int) -> list:
        return [[(k,) + (c,) for (k,), c in img.items()] for img in self.eng.images(g)]

    def substitute(self, g: int, w: tuple) -> dict:
        """A_p applied letterwise to a word."""
        key = (g, w)
        r = self._subst.get(key)
        if r is None:
            if not w or g == self.eng.e:
                r = {w: 1}
            else:
                imgs = self.letter_images(g)
                r = {}
                for choice in product(*(imgs[i] for i in w)):
                    c = 1
                    for _, ck in choice:
                        c *= ck
                    add_to(r, tuple(k for k, _ in choice), c)
            self._subst[key] = r
        return r

    def substitute_terms(self, g: int, x: dict) -> dict:
        acc: dict = {}
        for w, c in x.items():
            add_scaled(acc, self.substitute(g, w), c)
        return acc

    @staticmethod
    def split(w: tuple) -> dict:
        acc: dict = {}
        k = len(w)
        for s in range(k + 1):
            for pos in combinations(range(k), s):
                chosen = set(pos)
                add_to(acc, (tuple(w[i] for i in pos), tuple(w[i] for i in range(k) if i not in chosen)), 1)
        return acc

    @staticmethod
    def antipode_word(w: tuple) -> dict:
        return {tuple(reversed(w)): -1 if len(w) & 1 else 1}


def _kernels(ctx: Context) -> _LiftKernels:
    k = getattr(ctx, "_lift", None)
    if k is None:
        k = ctx._lift = _LiftKernels(ctx)
    return k


def _check(*xs):
    ctx = xs[0].owner
    for x in xs:
        if not isinstance(x, TensorLiftElement):
            raise AlgebraError(f"expected a lifted element, got {type(x).__name__}")
        if x.owner is not ctx:
            raise AlgebraError("lifted elements belong to different contexts")
    return ctx


def lift_element(ctx: Context, terms=None) -> TensorLiftElement:
    """Build from ``{(p, word, wedge): coeff}``; words are kept verbatim."""
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
        add_to(acc, (g, word, a), s * q(c))
    return TensorLiftElement(ctx, acc, _trusted=True)


def lift_unit(ctx: Context) -> TensorLiftElement:
    return TensorLiftElement(ctx, {(engine(ctx).e, (), ()): 1}, _trusted=True)


# ---------------------------------------------------------------------------
# term kernels

def lift_boundary_terms(K: _LiftKernels, g, w, a) -> dict:
    eng = K.eng
    acc: dict = {}
    k = len(a)
    inv_images = eng.images(eng.inv(g))
    for i in range(k):
        rest = a[:i] + a[i + 1:]
        sign = -1 if i & 1 else 1
        for (gen,), cg in inv_images[a[i]].items():
            add_to(acc, (g, (gen,) + w, rest), sign * cg)
    for i in range(k):
        for j in range(i + 1, k):
            rest = a[:i] + a[i + 1:j] + a[j + 1:]
            sign = -1 if (i + j + 1) & 1 else 1
            for idx, ck in K.U.c[a[i]][a[j]]:
                s, m = sort_sign((idx,) + rest)
                if s:
                    add_to(acc, (g, w, m), sign * s * ck)
    return acc


def lift_coproduct_terms(K: _LiftKernels, g, w, a) -> dict:
    acc: dict = {}
    for (w1, w2), cw in K.split(w).items():
        for a1, a2, s in ext_coproduct_mono(a):
            add_to(acc, ((g, w1, a1), (g, w2, a2)), cw * s)
    return acc


def lift_convolve_terms(K: _LiftKernels, t1, t2) -> dict:
    """(p, v (x) a) * (q, w (x) b) = (pq, A_q^{-1}(v_(1)).w (x) a ^ A_p[v_(2), b])."""
    eng = K.eng
    (p, v, a), (qq, w, b) = t1, t2
    pq = eng.mul(p, qq)
    q_inv = eng.inv(qq)
    acc: dict = {}
    for (v1, v2), cv in K.split(v).items():
        moved = eng.ad_ext_terms(p, K.U.act_ext_mono(v2, b))
        right: dict = {}
        for m, cm in moved.items():
            s, am = wedge_mono(a, m)
            if s:
                add_to(right, am, s * cm)
        if not right:
            continue
        for lw, cl in K.substitute(q_inv, v1).items():
            for rm, cr in right.items():
                add_to(acc, (pq, lw + w, rm), cv * cl * cr)
    return acc


def lift_antipode_terms(K: _LiftKernels, g, w, a) -> dict:
    """S(p, v (x) a) = (p^-1, A_p(S(v_(1))) (x) [S(v_(2)), A_p^{-1} S(a)])."""
    eng = K.eng
    g_inv = eng.inv(g)
    sa = {m: antipode_sign(a) * c for m, c in eng.ad_ext(g_inv, a).items()}
    acc: dict = {}
    for (v1, v2), cv in K.split(w).items():
        left = K.substitute_terms(g, K.antipode_word(v1))
        right = K.U.act_ext(K.antipode_word(v2), sa)
        for lw, cl in left.items():
            for rm, cr in right.items():
                add_to(acc, (g_inv, lw, rm), cv * cl * cr)
    return acc


# ---------------------------------------------------------------------------
# public operations

def _linear(x: TensorLiftElement, fn) -> TensorLiftElement:
    K = _kernels(x.owner)
    acc: dict = {}
    for (g, w, a), c in x.terms.items():
        add_scaled(acc, fn(K, g, w, a), c)
    return TensorLiftElement(x.owner, acc, _trusted=True)


def lift_boundary(x: TensorLiftElement) -> TensorLiftElement:
    _check(x)
    return _linear(x, lift_boundary_terms)


def lift_antipode(x: TensorLiftElement) -> TensorLiftElement:
    _check(x)
    return _linear(x, lift_antipode_terms)


def lift_coproduct(x: TensorLiftElement) -> LiftTensorPower:
    _check(x)
    K = _kernels(x.owner)
    acc: dict = {}
    for (g, w, a), c in x.terms.items():
        add_scaled(acc, lift_coproduct_terms(K, g, w, a), c)
    return LiftTensorPower(x.owner, acc, _trusted=True)


def lift_counit(x: TensorLiftElement) -> dict:
    _check(x)
    eng = engine(x.owner)
    out: dict = {}
    for (g, w, a), c in x.terms.items():
        if not w and not a:
            add_to(out, eng.element(g), c)
    return out


def lift_convolve(x: TensorLiftElement, y: TensorLiftElement) -> TensorLiftElement:
    ctx = _check(x, y)
    K = _kernels(ctx)
    acc: dict = {}
    for t1, c1 in x.terms.items():
        for t2, c2 in y.terms.items():
            add_scaled(acc, lift_convolve_terms(K, t1, t2), c1 * c2)
    return TensorLiftElement(ctx, acc, _trusted=True)


def phi(x: TensorLiftElement) -> CurrentElement:
    """Termwise PBW normalization of the word slot."""
    ctx = _check(x)
    U = engine(ctx).U
    acc: dict = {}
    for (g, w, a), c in x.terms.items():
        for m, cm in U.normalize(w).items():
            add_to(acc, (g, m, a), c * cm)
    return CurrentElement(ctx, acc, _trusted=True)


def phi_tensor(T: TensorPower) -> TensorPower:
    """Phi applied to every factor of a tensor power."""
    U = engine(T.owner).U
    acc: dict = {}
    for key, c in T.terms.items():
        parts = [[((g, m, a), cm) for m, cm in U.normalize(w).items()] for (g, w, a) in key]
        for choice in product(*parts):
            f = c
            for _, cm in choice:
                f *= cm
            add_to(acc, tuple(k for k, _ in choice), f)
    return TensorPower(T.owner, acc, _trusted=True)


def lift_of(x: CurrentElement) -> TensorLiftElement:
    """The section of phi reading each PBW monomial as a word."""
    return TensorLiftElement(x.owner, dict(x.terms), _trusted=True)


# ---------------------------------------------------------------------------
# search for a boundary that does not square to zero

def find_boundary_square_witness(ctx: Context, max_word: int = 2, max_grade: int = 3, group_elements=None):
    """Exhaustive search over basis terms (p | word | wedge) for lift_boundary^2 != 0.

    Words run over all index sequences of length <= ``max_word`` and wedges
    over grade <= ``max_grade``; group points default to the identity and the
    context's named elements.  Returns ``(x, d2x, searched)``, with ``x`` None
    when the search is exhausted.
    """
    eng = engine(ctx)
    n = ctx.algebra.dim
    if group_elements is None:
        group_elements = [ctx.group.identity()] + [p for _, p in sorted(ctx.named.items())]
    seen = []
    for p in group_elements:
        if p not in seen:
            seen.append(p)
    searched = 0
    for p in seen:
        g = eng.intern(p)
        for length in range(max_word + 1):
            for w in product(range(n), repeat=length):
                for k in range(min(max_grade, n) + 1):
                    for a in combinations(range(n), k):
                        searched += 1
                        x = TensorLiftElement(ctx, {(g, w, a): 1}, _trusted=True)
                        d2 = lift_boundary(lift_boundary(x))
                        if d2:
                            return x, d2, searched
    return None, None, searched


__all__ = [
    "TensorLiftElement", "LiftTensorPower", "lift_element", "lift_unit", "lift_boundary", "lift_coproduct",
    "lift_counit", "lift_convolve", "lift_antipode", "phi", "phi_tensor", "lift_of",
    "find_boundary_square_witness", "word_text",
]
