"""The algebraic identities, written once over a term-level structure.

A :class:`Structure` bundles the term kernels of a Hopf algebra whose terms are
keys ``(g, v, a)`` (group index, U-slot key, wedge); both the current algebra
and its tensor lift provide one.  Each law returns ``(lhs, rhs)`` as plain dicts
so that the caller decides how to report a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .currents import (
    CurrentElement,
    TensorPower,
    antipode_terms,
    boundary_terms,
    convolve_terms,
    coproduct_terms,
    engine,
    groupring_terms,
)
from .linear import add_scaled, add_to


def grade(key) -> int:
    return len(key[2])


def filtration(key) -> int:
    return len(key[1])


@dataclass
class Structure:
    name: str
    ctx: object
    element: type
    power: type
    mul: Callable
    coprod: Callable
    anti: Callable
    bd: Callable

    @property
    def eng(self):
        return engine(self.ctx)

    # -- linear maps on dicts ---------------------------------------------
    def lin(self, x: dict, fn) -> dict:
        acc: dict = {}
        for k, c in x.items():
            add_scaled(acc, fn(k), c)
        return acc

    def product(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for t1, c1 in x.items():
            for t2, c2 in y.items():
                add_scaled(acc, self.mul(t1, t2), c1 * c2)
        return acc

    def boundary(self, x: dict) -> dict:
        return self.lin(x, self.bd)

    def antipode(self, x: dict) -> dict:
        return self.lin(x, self.anti)

    def coproduct(self, x: dict) -> dict:
        return self.lin(x, self.coprod)

    def unit(self) -> dict:
        return {(self.eng.e, (), ()): 1}

    def counit(self, x: dict) -> dict:
        out: dict = {}
        for (g, v, a), c in x.items():
            if not v and not a:
                add_to(out, g, c)
        return out

    def counit_scalar(self, x: dict):
        return sum(self.counit(x).values(), 0)

    # -- tensor powers ------------------------------------------------------
    def on_factor(self, T: dict, pos: int, fn, odd: bool = False) -> dict:
        """Apply a term map to factor ``pos``; ``odd`` adds the Koszul sign."""
        acc: dict = {}
        for key, c in T.items():
            sign = 1
            if odd and sum(grade(k) for k in key[:pos]) & 1:
                sign = -1
            for new, cn in fn(key[pos]).items():
                piece = new if isinstance(new[0], tuple) else (new,)
                add_to(acc, key[:pos] + piece + key[pos + 1:], sign * c * cn)
        return acc

    def multiply_pair(self, T: dict) -> dict:
        acc: dict = {}
        for (k1, k2), c in T.items():
            add_scaled(acc, self.mul(k1, k2), c)
        return acc

    def counit_factor(self, T: dict, pos: int) -> dict:
        acc: dict = {}
        for key, c in T.items():
            _, v, a = key[pos]
            if not v and not a:
                add_to(acc, key[1 - pos], c)
        return acc

    def wrap(self, x: dict):
        return self.element(self.ctx, x, _trusted=True)

    def wrap_power(self, T: dict):
        return self.power(self.ctx, T, _trusted=True)


def current_structure(ctx) -> Structure:
    eng = engine(ctx)
    return Structure(
        name="currents", ctx=ctx, element=CurrentElement, power=TensorPower,
        mul=lambda t1, t2: convolve_terms(eng, t1, t2),
        coprod=lambda k: coproduct_terms(eng, *k),
        anti=lambda k: antipode_terms(eng, *k),
        bd=lambda k: boundary_terms(eng, *k),
    )


def lift_structure(ctx) -> Structure:
    from . import tensor_lift as tl

    K = tl._kernels(ctx)
    return Structure(
        name="tensor-lift", ctx=ctx, element=tl.TensorLiftElement, power=tl.LiftTensorPower,
        mul=lambda t1, t2: tl.lift_convolve_terms(K, t1, t2),
        coprod=lambda k: tl.lift_coproduct_terms(K, *k),
        anti=lambda k: tl.lift_antipode_terms(K, *k),
        bd=lambda k: tl.lift_boundary_terms(K, *k),
    )


def groupring_structure(ctx) -> Structure:
    st = current_structure(ctx)
    eng = engine(ctx)
    st.mul = lambda t1, t2: groupring_terms(eng, t1, t2)
    return st


# ---------------------------------------------------------------------------
# laws: each returns (lhs, rhs)

def law_associativity(st: Structure, x, y, z):
    return st.product(st.product(x, y), z), st.product(x, st.product(y, z))


def law_left_unit(st: Structure, x):
    return st.product(st.unit(), x), x


def law_right_unit(st: Structure, x):
    return st.product(x, st.unit()), x


def law_coassociativity(st: Structure, x):
    D = st.coproduct(x)
    return st.on_factor(D, 0, st.coprod), st.on_factor(D, 1, st.coprod)


def law_left_counit(st: Structure, x):
    return st.counit_factor(st.coproduct(x), 0), x


def law_right_counit(st: Structure, x):
    return st.counit_factor(st.coproduct(x), 1), x


def law_bialgebra(st: Structure, x, y):
    """Delta(x*y) = (* (x) *)(id (x) tau (x) id)(Delta x (x) Delta y), tau with its Koszul sign."""
    lhs = st.coproduct(st.product(x, y))
    dx, dy = st.coproduct(x), st.coproduct(y)
    rhs: dict = {}
    for (x1, x2), cx in dx.items():
        for (y1, y2), cy in dy.items():
            left = st.mul(x1, y1)
            if not left:
                continue
            right = st.mul(x2, y2)
            f = (-1 if (grade(x2) * grade(y1)) & 1 else 1) * cx * cy
            for l, cl in left.items():
                for r, cr in right.items():
                    add_to(rhs, (l, r), f * cl * cr)
    return lhs, rhs


def law_counit_multiplicative(st: Structure, x, y):
    """eps(x*y) = eps(x) eps(y) as functions on the group (convolution of finite supports)."""
    eng = st.eng
    ex, ey = st.counit(x), st.counit(y)
    rhs: dict = {}
    for g, c in ex.items():
        for h, d in ey.items():
            add_to(rhs, eng.mul(g, h), c * d)
    return st.counit(st.product(x, y)), rhs


def law_left_antipode(st: Structure, x):
    lhs = st.multiply_pair(st.on_factor(st.coproduct(x), 0, st.anti))
    return lhs, _scaled_unit(st, st.counit_scalar(x))


def law_right_antipode(st: Structure, x):
    lhs = st.multiply_pair(st.on_factor(st.coproduct(x), 1, st.anti))
    return lhs, _scaled_unit(st, st.counit_scalar(x))


def _scaled_unit(st, c) -> dict:
    return {(st.eng.e, (), ()): c} if c else {}


def law_boundary_square(st: Structure, x):
    return st.boundary(st.boundary(x)), {}


def homogeneous_parts(x: dict) -> dict:
    parts: dict = {}
    for k, c in x.items():
        parts.setdefault(grade(k), {})[k] = c
    return parts


def law_leibniz(st: Structure, x, y):
    """d(x*y) = dx*y + (-1)^k x*dy, applied to each grade-k component of x."""
    lhs = st.boundary(st.product(x, y))
    rhs: dict = {}
    dy = st.boundary(y)
    for k, xk in homogeneous_parts(x).items():
        add_scaled(rhs, st.product(st.boundary(xk), y), 1)
        add_scaled(rhs, st.product(xk, dy), -1 if k & 1 else 1)
    return lhs, rhs


def law_co_leibniz(st: Structure, x):
    """Delta d = (d (x) id + id (x) d) Delta, the second with the Koszul sign of the first factor."""
    D = st.coproduct(x)
    rhs = st.on_factor(D, 0, st.bd, odd=True)
    add_scaled(rhs, st.on_factor(D, 1, st.bd, odd=True), 1)
    return st.coproduct(st.boundary(x)), rhs


def law_boundary_antipode(st: Structure, x):
    """d S = S d: the antipode is a chain map."""
    return st.boundary(st.antipode(x)), st.antipode(st.boundary(x))


def law_boundary_antipode_graded(st: Structure, x):
    """d S = (-1)^k S d on each grade-k component."""
    lhs = st.boundary(st.antipode(x))
    rhs: dict = {}
    for k, xk in homogeneous_parts(x).items():
        add_scaled(rhs, st.antipode(st.boundary(xk)), -1 if k & 1 else 1)
    return lhs, rhs


HOPF_LAWS = {
    "associativity": (law_associativity, 3),
    "left-unit": (law_left_unit, 1),
    "right-unit": (law_right_unit, 1),
    "coassociativity": (law_coassociativity, 1),
    "left-counit": (law_left_counit, 1),
    "right-counit": (law_right_counit, 1),
    "bialgebra": (law_bialgebra, 2),
    "counit-multiplicative": (law_counit_multiplicative, 2),
    "left-antipode": (law_left_antipode, 1),
    "right-antipode": (law_right_antipode, 1),
}

DIFFERENTIAL_LAWS = {
    "boundary-square": (law_boundary_square, 1),
    "leibniz": (law_leibniz, 2),
    "co-leibniz": (law_co_leibniz, 1),
    "boundary-antipode": (law_boundary_antipode, 1),
}

ALL_LAWS = dict(HOPF_LAWS)
ALL_LAWS.update(DIFFERENTIAL_LAWS)
ALL_LAWS["boundary-antipode-graded"] = (law_boundary_antipode_graded, 1)


# ---------------------------------------------------------------------------
# grade and filtration bookkeeping on every produced term

def bookkeeping_errors(st: Structure, keys: list) -> list:
    """Check the declared grade/filtration behavior of every kernel on the given terms.

    boundary: k -> k-1, r -> <= r+1, same point; product: grades add, filtration
    <= r+s, point pq; antipode: grade kept, filtration <= r, point p^-1;
    coproduct: grades and filtrations split exactly, point p on both sides.
    """
    eng = st.eng
    errs = []
    for key in keys:
        g, k, r = key[0], grade(key), filtration(key)
        for out in st.bd(key):
            if out[0] != g or grade(out) != k - 1 or filtration(out) > r + 1:
                errs.append(("boundary", key, out))
        for out in st.anti(key):
            if out[0] != eng.inv(g) or grade(out) != k or filtration(out) > r:
                errs.append(("antipode", key, out))
        for (o1, o2) in st.coprod(key):
            if (o1[0], o2[0]) != (g, g) or grade(o1) + grade(o2) != k or filtration(o1) + filtration(o2) != r:
                errs.append(("coproduct", key, (o1, o2)))
        for key2 in keys:
            for out in st.mul(key, key2):
                if (out[0] != eng.mul(g, key2[0]) or grade(out) != k + grade(key2)
                        or filtration(out) > r + filtration(key2)):
                    errs.append(("product", (key, key2), out))
    return errs


__all__ = [
    "Structure", "current_structure", "lift_structure", "groupring_structure", "HOPF_LAWS",
    "DIFFERENTIAL_LAWS", "ALL_LAWS", "bookkeeping_errors", "homogeneous_parts", "grade", "filtration",
]
