"""The exterior algebra on h^- as a graded Hopf algebra.

Monomials are strictly increasing index tuples.  The coproduct is the signed
shuffle coproduct; the tensor square carries the Koszul rule
``(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .foundations import AlgebraError
from .linear import Combination, add_to, add_scaled, cleaned, q


def sort_sign(seq):
    """Sign of the permutation sorting ``seq`` and the sorted tuple; (0, None) on a repeat."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


@lru_cache(maxsize=None)
def wedge_mono(a: tuple, b: tuple):
    """a ^ b for increasing tuples: (sign, monomial), sign 0 when they overlap."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    sa = set(a)
    if any(x in sa for x in b):
        return 0, None
    # parity of the merge permutation = number of pairs (x in a, y in b) with x > y
    inversions = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return (-1 if inversions & 1 else 1), tuple(sorted(a + b))


@lru_cache(maxsize=None)
def coproduct_mono(m: tuple) -> tuple:
    """Shuffle coproduct of a wedge monomial as ``((left, right, sign), ...)``."""
    k = len(m)
    out = []
    for s in range(k + 1):
        for pos in combinations(range(k), s):
            chosen = set(pos)
            left = tuple(m[i] for i in pos)
            right = tuple(m[i] for i in range(k) if i not in chosen)
            # sign of the shuffle placing `pos` first
            inv = 0
            for i in pos:
                inv += sum(1 for j in range(i) if j not in chosen)
            out.append((left, right, -1 if inv & 1 else 1))
    return tuple(out)


def antipode_sign(m: tuple) -> int:
    return -1 if len(m) & 1 else 1


def wedge_terms(x: dict, y: dict) -> dict:
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            s, m = wedge_mono(a, b)
            if s:
                add_to(acc, m, s * ca * cb)
    return acc


def transform_mono(columns, m: tuple) -> dict:
    """Image of a wedge monomial under the linear map sending e_i to ``columns[i]``.

    ``columns[i]`` is a list of ``(k, coeff)`` pairs.
    """
    acc = {(): 1}
    for i in m:
        nxt: dict = {}
        for mono, c in acc.items():
            for k, ck in columns[i]:
                s, w = wedge_mono(mono, (k,))
                if s:
                    add_to(nxt, w, s * c * ck)
        acc = nxt
        if not acc:
            break
    return acc


def matrix_columns(matrix) -> list:
    n = len(matrix)
    return [[(k, q(matrix[k][i])) for k in range(n) if matrix[k][i]] for i in range(n)]


class ExtElement(Combination):
    """Element of the exterior algebra; ``owner`` is the tuple of basis names."""

    __slots__ = ()

    @property
    def basis(self):
        return self.owner

    @property
    def dim(self):
        return len(self.owner)

    def _term_text(self, key):
        if not key:
            return "1"
        return "^".join(self.owner[i] for i in key)

    def _sort_key(self, key):
        return (len(key), key)

    def grades(self) -> set:
        return {len(k) for k in self.terms}

    def grade(self) -> int:
        g = self.grades()
        if len(g) != 1:
            raise AlgebraError("element is not homogeneous")
        return g.pop()

    def component(self, k: int) -> "ExtElement":
        return self._new({m: c for m, c in self.terms.items() if len(m) == k})

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return wedge(self, other)
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other)


def ext_element(basis, terms) -> ExtElement:
    basis = tuple(basis)
    out: dict = {}
    for key, c in (terms.items() if isinstance(terms, dict) else terms):
        s, m = sort_sign(key)
        if s and (not m or 0 <= m[0] and m[-1] < len(basis)):
            add_to(out, m, s * q(c))
        elif s:
            raise AlgebraError(f"index out of range in {key}")
    return ExtElement(basis, out)


def ext_generator(basis, i: int) -> ExtElement:
    return ExtElement(tuple(basis), {(i,): 1})


def ext_one(basis) -> ExtElement:
    return ExtElement(tuple(basis), {(): 1})


def wedge(a: ExtElement, b: ExtElement) -> ExtElement:
    if a.owner != b.owner:
        raise AlgebraError("wedge of elements of different dimension")
    return ExtElement(a.owner, wedge_terms(a.terms, b.terms), _trusted=True)


def ext_coproduct(a: ExtElement) -> list:
    """Delta(a) as a list of ``((left, right), coeff)`` with ExtElement factors."""
    acc: dict = {}
    for m, c in a.terms.items():
        for left, right, s in coproduct_mono(m):
            add_to(acc, (left, right), s * c)
    return [((ExtElement(a.owner, {l: 1}, _trusted=True), ExtElement(a.owner, {r: 1}, _trusted=True)), c)
            for (l, r), c in sorted(acc.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]


def ext_coproduct_terms(terms: dict) -> dict:
    acc: dict = {}
    for m, c in terms.items():
        for left, right, s in coproduct_mono(m):
            add_to(acc, (left, right), s * c)
    return acc


def ext_counit(a: ExtElement):
    return a.terms.get((), 0)


def ext_antipode(a: ExtElement) -> ExtElement:
    return a._new({m: antipode_sign(m) * c for m, c in a.terms.items()})


def ad_extend_ext(rep, p, a: ExtElement) -> ExtElement:
    """Algebra automorphism of the exterior algebra induced by ``A_p`` on degree one."""
    cols = matrix_columns(rep.matrix(p))
    acc: dict = {}
    for m, c in a.terms.items():
        add_scaled(acc, transform_mono(cols, m), c)
    return a._new(acc)


def tensor_square_mul(x: dict, y: dict) -> dict:
    """Product in the graded tensor square; keys are (left, right) monomial pairs."""
    acc: dict = {}
    for (a, b), c1 in x.items():
        for (c, d), c2 in y.items():
            s1, ac = wedge_mono(a, c)
            if not s1:
                continue
            s2, bd = wedge_mono(b, d)
            if not s2:
                continue
            koszul = -1 if (len(b) * len(c)) & 1 else 1
            add_to(acc, (ac, bd), koszul * s1 * s2 * c1 * c2)
    return acc


__all__ = [
    "ExtElement", "ext_element", "ext_generator", "ext_one", "wedge", "ext_coproduct",
    "ext_counit", "ext_antipode", "ad_extend_ext", "sort_sign", "wedge_mono", "coproduct_mono",
    "tensor_square_mul", "cleaned",
]
