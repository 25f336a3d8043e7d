"""Sparse linear combinations with exact rational coefficients.

Coefficients are kept as ``int`` whenever they are integral and as
:class:`~fractions.Fraction` otherwise; both are exact and mix freely, and the
int path is several times faster in the hot loops.
"""

from __future__ import annotations

from fractions import Fraction

from .foundations import AlgebraError


def q(x):
    """Normalize an exact scalar: integral values become ``int``."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, float):
        raise AlgebraError(f"floating point value {x!r} is not allowed; use a rational")
    if isinstance(x, str):
        return q(Fraction(x))
    return q(Fraction(x))


def add_to(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def add_scaled(acc: dict, terms: dict, c) -> None:
    """acc += c * terms"""
    if not c:
        return
    get = acc.get
    for k, v in terms.items():
        w = get(k, 0) + c * v
        if w:
            acc[k] = w
        else:
            del acc[k]


def cleaned(terms) -> dict:
    items = terms.items() if isinstance(terms, dict) else terms
    out: dict = {}
    for k, v in items:
        if v:
            add_to(out, k, q(v))
    return {k: q(v) for k, v in out.items()}


def format_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def join_terms(pieces) -> str:
    """Render ``[(coeff, text)]`` as ``a - 2*b + 1/2*c``; text "1" means the unit."""
    out = []
    for i, (c, text) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        if text == "1":
            body = format_coeff(mag)
        elif mag == 1:
            body = text
        else:
            body = f"{format_coeff(mag)}*{text}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


class Combination:
    """Immutable finite linear combination ``{key: coeff}`` tied to an owner.

    Subclasses set ``owner`` (an algebra, a dimension or a context) and
    implement ``_sort_key`` and ``_term_text`` for canonical printing.
    """

    __slots__ = ("owner", "terms", "_hash")

    def __init__(self, owner, terms=None, *, _trusted=False):
        self.owner = owner
        if terms is None:
            terms = {}
        self.terms = terms if _trusted else cleaned(terms)
        self._hash = None

    # construction helpers
    def _new(self, terms: dict):
        return type(self)(self.owner, terms, _trusted=True)

    def _check(self, other):
        if not isinstance(other, type(self)):
            raise AlgebraError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.owner is not self.owner and other.owner != self.owner:
            raise AlgebraError(f"{type(self).__name__} operands belong to different contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and not other:
            return self
        self._check(other)
        acc = dict(self.terms)
        add_scaled(acc, other.terms, 1)
        return self._new(acc)

    __radd__ = __add__

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.terms)
        add_scaled(acc, other.terms, -1)
        return self._new(acc)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = q(c)
        if not c:
            return self._new({})
        return self._new({k: q(v * c) for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        if not isinstance(other, type(self)):
            return NotImplemented
        return (other.owner is self.owner or other.owner == self.owner) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_items())

    def items(self):
        return self.terms.items()

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def _sort_key(self, key):
        return key

    def _term_text(self, key) -> str:
        return repr(key)

    def __str__(self):
        return join_terms((c, self._term_text(k)) for k, c in self.sorted_items())

    def __repr__(self):
        return f"{type(self).__name__}({self})"
