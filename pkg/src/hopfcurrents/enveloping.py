"""The universal enveloping algebra U(h) in PBW normal form.

A PBW monomial is a non-decreasing index tuple; ``()`` is the unit.  Words are
brought to normal form by the rewriting ``x_j x_i -> x_i x_j + [x_j, x_i]``
for ``j > i``.  All kernels work on plain ``{monomial: coeff}`` dicts and are
memoized per algebra; the dicts they return are shared and must not be mutated.
"""

from __future__ import annotations

from itertools import combinations

from .exterior import ExtElement, sort_sign
from .foundations import AlgebraError, LieAlgebra
from .linear import Combination, add_scaled, add_to, q


class Enveloping:
    """Memoized kernels for one Lie algebra."""

    def __init__(self, alg: LieAlgebra):
        self.alg = alg
        self.n = alg.dim
        self.c = [[[(k, q(v)) for k, v in enumerate(alg.consts[i][j]) if v] for j in range(self.n)]
                  for i in range(self.n)]
        self._norm: dict = {}
        self._mul: dict = {}
        self._coprod: dict = {}
        self._anti: dict = {}
        self._act: dict = {}
        self._deriv: dict = {}

    # -- normal form -------------------------------------------------------
    def normalize(self, word: tuple) -> dict:
        r = self._norm.get(word)
        if r is not None:
            return r
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a > b:
                acc = dict(self.normalize(word[:i] + (b, a) + word[i + 2:]))
                for k, ck in self.c[a][b]:
                    add_scaled(acc, self.normalize(word[:i] + (k,) + word[i + 2:]), ck)
                break
        else:
            acc = {word: 1}
        self._norm[word] = acc
        return acc

    def normalize_rightmost(self, word: tuple, _cache=None) -> dict:
        """Independent normalizer rewriting the rightmost descent first (no shared cache)."""
        cache = {} if _cache is None else _cache
        r = cache.get(word)
        if r is not None:
            return r
        for i in range(len(word) - 2, -1, -1):
            a, b = word[i], word[i + 1]
            if a > b:
                acc = dict(self.normalize_rightmost(word[:i] + (b, a) + word[i + 2:], cache))
                for k, ck in self.c[a][b]:
                    add_scaled(acc, self.normalize_rightmost(word[:i] + (k,) + word[i + 2:], cache), ck)
                break
        else:
            acc = {word: 1}
        cache[word] = acc
        return acc

    def check_word(self, word):
        for i in word:
            if not (type(i) is int and 0 <= i < self.n):
                raise AlgebraError(f"generator index {i!r} out of range for dimension {self.n}")

    # -- products ----------------------------------------------------------
    def mul_mono(self, a: tuple, b: tuple) -> dict:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            if not a:
                r = {b: 1}
            elif not b or a[-1] <= b[0]:
                r = {a + b: 1}
            else:
                r = self.normalize(a + b)
            self._mul[key] = r
        return r

    def mul(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_scaled(acc, self.mul_mono(a, b), ca * cb)
        return acc

    # -- Hopf structure ----------------------------------------------------
    def coproduct_mono(self, m: tuple) -> tuple:
        """Delta of a PBW monomial as ``((left, right, coeff), ...)``.

        Generators are primitive, so Delta is a sum over position subsets; a
        subsequence of a sorted tuple is sorted, hence no normalization.
        """
        r = self._coprod.get(m)
        if r is None:
            acc: dict = {}
            k = len(m)
            for s in range(k + 1):
                for pos in combinations(range(k), s):
                    chosen = set(pos)
                    left = tuple(m[i] for i in pos)
                    right = tuple(m[i] for i in range(k) if i not in chosen)
                    add_to(acc, (left, right), 1)
            r = tuple((l, rt, c) for (l, rt), c in acc.items())
            self._coprod[m] = r
        return r

    def coproduct(self, x: dict) -> dict:
        acc: dict = {}
        for m, c in x.items():
            for l, r, cc in self.coproduct_mono(m):
                add_to(acc, (l, r), c * cc)
        return acc

    def antipode_mono(self, m: tuple) -> dict:
        r = self._anti.get(m)
        if r is None:
            sign = -1 if len(m) & 1 else 1
            r = {k: sign * v for k, v in self.normalize(tuple(reversed(m))).items()}
            self._anti[m] = r
        return r

    def antipode(self, x: dict) -> dict:
        acc: dict = {}
        for m, c in x.items():
            add_scaled(acc, self.antipode_mono(m), c)
        return acc

    # -- actions -----------------------------------------------------------
    def derivation(self, i: int, beta: tuple) -> dict:
        """x_i acting on a wedge monomial as the derivation extending ad(x_i)."""
        key = (i, beta)
        r = self._deriv.get(key)
        if r is None:
            acc: dict = {}
            for j, y in enumerate(beta):
                for k, ck in self.c[i][y]:
                    s, m = sort_sign(beta[:j] + (k,) + beta[j + 1:])
                    if s:
                        add_to(acc, m, s * ck)
            r = acc
            self._deriv[key] = r
        return r

    def act_ext_mono(self, m: tuple, beta: tuple) -> dict:
        """[v, beta] for a PBW monomial v: letters act right to left."""
        key = (m, beta)
        r = self._act.get(key)
        if r is None:
            if not m:
                r = {beta: 1}
            elif not beta:
                r = {}
            else:
                inner = self.act_ext_mono(m[1:], beta)
                acc: dict = {}
                for b, c in inner.items():
                    add_scaled(acc, self.derivation(m[0], b), c)
                r = acc
            self._act[key] = r
        return r

    def act_ext(self, v: dict, beta: dict) -> dict:
        acc: dict = {}
        for m, c in v.items():
            for b, cb in beta.items():
                add_scaled(acc, self.act_ext_mono(m, b), c * cb)
        return acc

    def act_vector(self, v: dict, y) -> tuple:
        n = self.n
        total = [0] * n
        for m, c in v.items():
            vec = [q(x) for x in y]
            for i in reversed(m):
                out = [0] * n
                for j, yj in enumerate(vec):
                    if yj:
                        for k, ck in self.c[i][j]:
                            out[k] += yj * ck
                vec = out
            for k in range(n):
                total[k] += c * vec[k]
        return tuple(q(x) for x in total)

    def substitute_mono(self, images: list, m: tuple) -> dict:
        """Image of a monomial under the algebra map sending x_i to ``images[i]`` (a dict)."""
        acc = {(): 1}
        for i in m:
            acc = self.mul(acc, images[i])
            if not acc:
                break
        return acc


_KERNELS: dict = {}


def kernel(alg: LieAlgebra) -> Enveloping:
    k = _KERNELS.get(alg)
    if k is None:
        k = _KERNELS[alg] = Enveloping(alg)
    return k


def generator_images(matrix) -> list:
    """Column i of ``matrix`` as a degree-one U(h) element ``{(k,): coeff}``."""
    n = len(matrix)
    return [{(k,): q(matrix[k][i]) for k in range(n) if matrix[k][i]} for i in range(n)]


class UeaElement(Combination):
    """Element of U(h); ``owner`` is the LieAlgebra."""

    __slots__ = ()

    @property
    def alg(self) -> LieAlgebra:
        return self.owner

    def _term_text(self, key):
        if not key:
            return "1"
        return "*".join(self.owner.basis[i] for i in key)

    def degree(self) -> int:
        """Filtration degree: the longest PBW monomial (-1 for zero)."""
        return max((len(m) for m in self.terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            return uea_mul(self, other)
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented


def uea_element(alg: LieAlgebra, terms) -> UeaElement:
    """Build from ``{word: coeff}``; words are normalized."""
    k = kernel(alg)
    acc: dict = {}
    for word, c in (terms.items() if isinstance(terms, dict) else terms):
        word = tuple(word)
        k.check_word(word)
        add_scaled(acc, k.normalize(word), q(c))
    return UeaElement(alg, acc, _trusted=True)


def uea_one(alg) -> UeaElement:
    return UeaElement(alg, {(): 1}, _trusted=True)


def uea_generator(alg, i: int) -> UeaElement:
    return uea_element(alg, {(i,): 1})


def pbw_normalize(word, alg: LieAlgebra, strategy: str = "leftmost") -> UeaElement:
    k = kernel(alg)
    word = tuple(word)
    k.check_word(word)
    if strategy == "leftmost":
        terms = k.normalize(word)
    elif strategy == "rightmost":
        terms = k.normalize_rightmost(word)
    else:
        raise AlgebraError(f"unknown rewriting strategy {strategy!r}")
    return UeaElement(alg, dict(terms), _trusted=True)


def _same(a: UeaElement, b: UeaElement):
    if a.owner != b.owner:
        raise AlgebraError("U(h) elements over different algebras")


def uea_mul(a: UeaElement, b: UeaElement) -> UeaElement:
    _same(a, b)
    return UeaElement(a.owner, kernel(a.owner).mul(a.terms, b.terms), _trusted=True)


def uea_coproduct(v: UeaElement) -> list:
    """Delta(v) as a Sweedler list ``[((left, right), coeff)]`` of monomial factors."""
    alg = v.owner
    acc = kernel(alg).coproduct(v.terms)
    return [((UeaElement(alg, {l: 1}, _trusted=True), UeaElement(alg, {r: 1}, _trusted=True)), c)
            for (l, r), c in sorted(acc.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]


def uea_counit(v: UeaElement):
    return v.terms.get((), 0)


def uea_antipode(v: UeaElement) -> UeaElement:
    return UeaElement(v.owner, kernel(v.owner).antipode(v.terms), _trusted=True)


def _reverse_into(terms: dict, target: LieAlgebra) -> dict:
    k = kernel(target)
    acc: dict = {}
    for m, c in terms.items():
        add_scaled(acc, k.normalize(tuple(reversed(m))), c)
    return acc


def abs_S(v: UeaElement, neg_alg: LieAlgebra = None) -> UeaElement:
    """The sign-free order-reversing anti-isomorphism U(h) -> U(h^-)."""
    neg_alg = neg_alg or v.owner.negated()
    return UeaElement(neg_alg, _reverse_into(v.terms, neg_alg), _trusted=True)


def abs_S_inv(u: UeaElement, alg: LieAlgebra) -> UeaElement:
    """Inverse of :func:`abs_S`: U(h^-) -> U(h)."""
    return UeaElement(alg, _reverse_into(u.terms, alg), _trusted=True)


def uea_act_vector(v: UeaElement, y) -> tuple:
    if len(y) != v.owner.dim:
        raise AlgebraError("vector has the wrong dimension")
    return kernel(v.owner).act_vector(v.terms, y)


def uea_act_ext(v: UeaElement, beta: ExtElement) -> ExtElement:
    """The action [v, beta]: generators act as derivations extending the bracket of h."""
    if beta.dim != v.owner.dim:
        raise AlgebraError("exterior element has the wrong dimension")
    return ExtElement(beta.owner, kernel(v.owner).act_ext(v.terms, beta.terms), _trusted=True)


def ad_extend_uea(rep, p, v: UeaElement) -> UeaElement:
    """Algebra automorphism of U(h) induced by ``A_p`` on generators."""
    k = kernel(v.owner)
    images = generator_images(rep.matrix(p))
    acc: dict = {}
    for m, c in v.terms.items():
        add_scaled(acc, k.substitute_mono(images, m), c)
    return UeaElement(v.owner, acc, _trusted=True)
