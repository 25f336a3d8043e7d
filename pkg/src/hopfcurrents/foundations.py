"""Exact scalars, Lie algebras by structure constants, groups and representations.

Everything here is immutable once built.  Scalars are :class:`fractions.Fraction`;
vectors and matrices are tuples of them so they can be hashed and cached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    """Rejected input: dimension mismatch, bad index, mixed contexts, ..."""


def scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise AlgebraError(f"floating point value {x!r} is not allowed; use a rational")
    return Fraction(x)


def format_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# exact linear algebra on small matrices

def mat(rows) -> Matrix:
    return tuple(tuple(scalar(x) for x in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise AlgebraError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv_p = 1 / m[col][col]
        m[col] = [x * inv_p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    d = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            d = -d
        d *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return d


def solve_in_span(basis: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector:
    """Coordinates c with sum(c_i * basis_i) == target; raises if target is outside the span."""
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(len(target))]
    pivots = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv_p = 1 / rows[r][col]
        rows[r] = [x * inv_p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[k] != 0 for row in rows[r:]):
        raise AlgebraError("vector is not in the span of the realization basis")
    if len(pivots) != k:
        raise AlgebraError("realization basis is linearly dependent")
    coords = [ZERO] * k
    for i, col in enumerate(pivots):
        coords[col] = rows[i][k]
    return tuple(coords)


# ---------------------------------------------------------------------------
# Lie algebras

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    check: str
    failures: tuple = ()
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra over Q given by structure constants.

    ``consts[i][j]`` is the coordinate vector of ``[e_i, e_j]``.
    """

    basis: tuple
    consts: tuple
    name: str = "lie"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.basis, self.consts, self.name))
            object.__setattr__(self, "_hash", h)
        return h

    @classmethod
    def from_brackets(cls, basis: Sequence[str], brackets: dict, name: str = "lie") -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` for some i < j; antisymmetry fills the rest."""
        n = len(basis)
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), value in brackets.items():
            value = [scalar(x) for x in value]
            if len(value) != n:
                raise AlgebraError(f"bracket [{i},{j}] has length {len(value)}, expected {n}")
            c[i][j] = value
            c[j][i] = [-x for x in value]
        return cls(tuple(basis), tuple(tuple(tuple(v) for v in row) for row in c), name)

    @classmethod
    def from_table(cls, basis: Sequence[str], table, name: str = "lie") -> "LieAlgebra":
        """Build from a full n x n table of vectors, stored as given (no symmetrization)."""
        consts = tuple(tuple(tuple(scalar(x) for x in v) for v in row) for row in table)
        return cls(tuple(basis), consts, name)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.consts[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise AlgebraError(f"bracket expects vectors of length {n}")
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, ck in enumerate(self.consts[i][j]):
                    if ck:
                        out[k] += f * ck
        return tuple(out)

    def negated(self) -> "LieAlgebra":
        """The same vector space with bracket ``-[x, y]``."""
        consts = tuple(tuple(tuple(-x for x in v) for v in row) for row in self.consts)
        return LieAlgebra(self.basis, consts, self.name + "^-")

    def unit_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise AlgebraError(f"unknown generator {name!r}") from None


def validate_algebra(alg: LieAlgebra) -> ValidationReport:
    n = alg.dim
    for i in range(n):
        for j in range(n):
            if len(alg.consts[i][j]) != n:
                return ValidationReport(False, "shape", ((i, j),), "bracket vector has wrong length")
    for i in range(n):
        for j in range(i, n):
            a = alg.consts[i][j]
            b = alg.consts[j][i]
            if any(x != -y for x, y in zip(a, b)):
                return ValidationReport(False, "antisymmetry", ((i, j),), f"[{alg.basis[i]},{alg.basis[j]}]")
    units = [alg.unit_vector(i) for i in range(n)]
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        x, y, z = units[i], units[j], units[k]
        total = [ZERO] * n
        for term in (
            alg.bracket(x, alg.bracket(y, z)),
            alg.bracket(y, alg.bracket(z, x)),
            alg.bracket(z, alg.bracket(x, y)),
        ):
            total = [a + b for a, b in zip(total, term)]
        if any(total):
            return ValidationReport(False, "jacobi", ((i, j, k),), "Jacobi identity fails")
    return ValidationReport(True, "lie-algebra")


def abelian_algebra(n: int = 3) -> LieAlgebra:
    basis = tuple(f"e{i + 1}" for i in range(n))
    return LieAlgebra.from_brackets(basis, {}, name=f"abelian{n}")


def heisenberg_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): (0, 0, 1)}, name="heisenberg")


def sl2_algebra() -> LieAlgebra:
    # basis h, e, f
    return LieAlgebra.from_brackets(
        ("h", "e", "f"),
        {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)},
        name="sl2",
    )


def so3_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(
        ("e1", "e2", "e3"),
        {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 1, 0)},
        name="so3",
    )


# ---------------------------------------------------------------------------
# groups

class Group:
    """Base class; elements are hashable Python values owned by the group."""

    name = "group"
    finite = False

    def identity(self):
        raise NotImplementedError

    def mul(self, p, q):
        raise NotImplementedError

    def inv(self, p):
        raise NotImplementedError

    def contains(self, p) -> bool:
        raise NotImplementedError

    def serialize(self, p) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def elements(self) -> list:
        raise AlgebraError(f"group {self.name} is not finite")

    def samples(self) -> list:
        return self.elements()

    def check(self, *elts):
        for p in elts:
            if not self.contains(p):
                raise AlgebraError(f"{p!r} is not an element of group {self.name}")

    def is_identity(self, p) -> bool:
        return p == self.identity()


class CayleyGroup(Group):
    """Finite group given by a multiplication table on {0..m-1}; 0 need not be the identity."""

    finite = True

    def __init__(self, table, name="cayley", labels=None):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        self.order = len(self.table)
        m = self.order
        ids = [i for i in range(m) if all(self.table[i][j] == j and self.table[j][i] == j for j in range(m))]
        if not ids:
            raise AlgebraError("Cayley table has no identity element")
        self._id = ids[0]
        self._inv = []
        for i in range(m):
            inv = [j for j in range(m) if self.table[i][j] == self._id]
            if not inv:
                raise AlgebraError(f"element {i} has no inverse")
            self._inv.append(inv[0])
        self.labels = tuple(labels) if labels else None

    def identity(self):
        return self._id

    def mul(self, p, q):
        self.check(p, q)
        return self.table[p][q]

    def inv(self, p):
        self.check(p)
        return self._inv[p]

    def contains(self, p) -> bool:
        return type(p) is int and 0 <= p < self.order

    def elements(self):
        return list(range(self.order))

    def serialize(self, p) -> str:
        if p == self._id:
            return "e"
        return f"g{p}"

    def parse(self, text: str):
        text = text.strip()
        if text == "e":
            return self._id
        if text.startswith("g") and text[1:].isdigit():
            p = int(text[1:])
            if self.contains(p):
                return p
        raise AlgebraError(f"cannot parse {text!r} as an element of {self.name}")


def cyclic_group(m: int) -> CayleyGroup:
    return CayleyGroup([[(i + j) % m for j in range(m)] for i in range(m)], name=f"Z{m}")


def trivial_group() -> CayleyGroup:
    return CayleyGroup([[0]], name="trivial")


class PermutationGroup(Group):
    """The full symmetric group on {0..m-1}; elements are image tuples.

    Product convention: ``(p*q)(i) = p(q(i))``.
    """

    finite = True

    def __init__(self, degree: int):
        self.degree = degree
        self.name = f"S{degree}"

    def identity(self):
        return tuple(range(self.degree))

    def mul(self, p, q):
        self.check(p, q)
        return tuple(p[i] for i in q)

    def inv(self, p):
        self.check(p)
        out = [0] * self.degree
        for i, pi in enumerate(p):
            out[pi] = i
        return tuple(out)

    def contains(self, p) -> bool:
        return type(p) is tuple and len(p) == self.degree and sorted(p) == list(range(self.degree))

    def elements(self):
        return list(itertools.permutations(range(self.degree)))

    def serialize(self, p) -> str:
        if p == self.identity():
            return "e"
        return "P(" + ",".join(str(i) for i in p) + ")"

    def parse(self, text: str):
        text = text.strip()
        if text == "e":
            return self.identity()
        if text.startswith("P(") and text.endswith(")"):
            p = tuple(int(x) for x in text[2:-1].split(","))
            if self.contains(p):
                return p
        raise AlgebraError(f"cannot parse {text!r} as an element of {self.name}")


def symmetric_cayley(degree: int) -> CayleyGroup:
    """Symmetric group as a Cayley table, index 0 = identity (lexicographic order)."""
    perms = PermutationGroup(degree)
    elts = perms.elements()
    index = {p: i for i, p in enumerate(elts)}
    table = [[index[perms.mul(p, q)] for q in elts] for p in elts]
    return CayleyGroup(table, name=f"S{degree}", labels=elts)


class MatrixGroup(Group):
    """Invertible rational matrices under multiplication (infinite; validated on samples)."""

    def __init__(self, size: int, name="GL", sample_elements: Iterable = ()):
        self.size = size
        self.name = name
        self._samples = [mat(s) for s in sample_elements]

    def identity(self):
        return identity_matrix(self.size)

    def mul(self, p, q):
        self.check(p, q)
        return mat_mul(p, q)

    def inv(self, p):
        self.check(p)
        return mat_inv(p)

    def contains(self, p) -> bool:
        return (
            type(p) is tuple
            and len(p) == self.size
            and all(type(row) is tuple and len(row) == self.size for row in p)
            and det(p) != 0
        )

    def samples(self):
        return [self.identity()] + [s for s in self._samples if s != self.identity()]

    def serialize(self, p) -> str:
        if p == self.identity():
            return "e"
        return "Mat(" + ";".join(",".join(format_scalar(x) for x in row) for row in p) + ")"

    def parse(self, text: str):
        text = text.strip()
        if text == "e":
            return self.identity()
        if text.startswith("Mat(") and text.endswith(")"):
            rows = [[scalar(x) for x in r.split(",")] for r in text[4:-1].split(";")]
            p = mat(rows)
            if self.contains(p):
                return p
        raise AlgebraError(f"cannot parse {text!r} as an element of {self.name}")


class HeisenbergGroup(MatrixGroup):
    """Rational upper unitriangular 3x3 matrices ``M(a, b, c)``::

        [[1, a, c],
         [0, 1, b],
         [0, 0, 1]]
    """

    def __init__(self, sample_params: Iterable = ()):
        super().__init__(3, name="Heis3", sample_elements=[heisenberg_matrix(*abc) for abc in sample_params])

    def contains(self, p) -> bool:
        return (
            type(p) is tuple
            and len(p) == 3
            and p[0][0] == p[1][1] == p[2][2] == 1
            and p[1][0] == p[2][0] == p[2][1] == 0
        )

    def params(self, p):
        return p[0][1], p[1][2], p[0][2]

    def element(self, a, b, c):
        return heisenberg_matrix(a, b, c)

    def serialize(self, p) -> str:
        if p == self.identity():
            return "e"
        return "M(" + ",".join(format_scalar(x) for x in self.params(p)) + ")"

    def parse(self, text: str):
        text = text.strip()
        if text.startswith("M(") and text.endswith(")"):
            parts = text[2:-1].split(",")
            if len(parts) == 3:
                return heisenberg_matrix(*parts)
        return super().parse(text)


def heisenberg_matrix(a, b, c) -> Matrix:
    a, b, c = scalar(a), scalar(b), scalar(c)
    return ((ONE, a, c), (ZERO, ONE, b), (ZERO, ZERO, ONE))


def heisenberg_realization() -> list:
    """e1 = E12, e2 = E23, e3 = E13 inside gl(3); then [e1, e2] = e3."""
    def unit(i, j):
        return tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(3)) for r in range(3))
    return [unit(0, 1), unit(1, 2), unit(0, 2)]


def sl2_realization() -> list:
    return [mat([[1, 0], [0, -1]]), mat([[0, 1], [0, 0]]), mat([[0, 0], [1, 0]])]


# ---------------------------------------------------------------------------
# representations H -> Aut(h)

class Representation:
    """A group homomorphism into Aut(h), matrices acting on coordinate columns.

    Column j of ``matrix(p)`` holds the coordinates of ``A_p(e_j)``.
    """

    def __init__(self, group: Group, algebra: LieAlgebra, rule: Callable, kind: str = "table"):
        self.group = group
        self.algebra = algebra
        self.kind = kind
        self._rule = rule
        self._cache: dict = {}
        self._inv_cache: dict = {}

    def matrix(self, p) -> Matrix:
        m = self._cache.get(p)
        if m is None:
            m = self._rule(p)
            n = self.algebra.dim
            if len(m) != n or any(len(r) != n for r in m):
                raise AlgebraError(f"representation matrix must be {n}x{n}")
            self._cache[p] = m
        return m

    def inverse_matrix(self, p) -> Matrix:
        m = self._inv_cache.get(p)
        if m is None:
            m = self.matrix(self.group.inv(p))
            self._inv_cache[p] = m
        return m

    def act(self, p, vec) -> Vector:
        return mat_vec(self.matrix(p), vec)

    def act_inv(self, p, vec) -> Vector:
        return mat_vec(self.inverse_matrix(p), vec)

    def is_trivial(self) -> bool:
        return self.kind == "trivial"


def trivial_representation(group: Group, algebra: LieAlgebra) -> Representation:
    ident = identity_matrix(algebra.dim)
    return Representation(group, algebra, lambda p: ident, kind="trivial")


def conjugation_representation(group: Group, algebra: LieAlgebra, realization: Sequence[Matrix],
                               group_matrix: Callable = None) -> Representation:
    """``A_p(X) = g X g^-1`` where g is the matrix of p (p itself for matrix groups).

    ``realization`` lists matrices for the basis of the algebra; the bracket of the
    algebra must agree with the matrix commutator (checked by the validator).
    """
    flat = [tuple(x for row in m for x in row) for m in realization]
    group_matrix = group_matrix or (lambda p: p)

    def rule(p):
        g = group_matrix(p)
        g_inv = mat_inv(g)
        cols = []
        for x in realization:
            y = mat_mul(mat_mul(g, x), g_inv)
            cols.append(solve_in_span(flat, tuple(v for row in y for v in row)))
        return tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(len(cols)))

    return Representation(group, algebra, rule, kind="adjoint")


def table_representation(group: Group, algebra: LieAlgebra, matrices: dict) -> Representation:
    table = {p: mat(m) for p, m in matrices.items()}

    def rule(p):
        try:
            return table[p]
        except KeyError:
            raise AlgebraError(f"no matrix given for group element {group.serialize(p)}") from None

    return Representation(group, algebra, rule, kind="table")


def permutation_representation(group: PermutationGroup, algebra: LieAlgebra) -> Representation:
    """``A_p(e_i) = e_{p(i)}``; an automorphism only when the bracket is permutation-invariant."""
    n = algebra.dim

    def rule(p):
        return tuple(tuple(ONE if p[j] == i else ZERO for j in range(n)) for i in range(n))

    return Representation(group, algebra, rule, kind="permutation")


def validate_representation(rep: Representation, alg: LieAlgebra, samples=None) -> ValidationReport:
    group = rep.group
    n = alg.dim
    e = group.identity()
    try:
        if rep.matrix(e) != identity_matrix(n):
            return ValidationReport(False, "identity", (group.serialize(e),), "A_e is not the identity")
        elements = group.elements() if group.finite else list(samples or group.samples())
        if samples is not None and group.finite:
            pairs = list(samples)
        else:
            pairs = [(p, q) for p in elements for q in elements]
        for p, q in pairs:
            lhs = rep.matrix(group.mul(p, q))
            rhs = mat_mul(rep.matrix(p), rep.matrix(q))
            if lhs != rhs:
                return ValidationReport(False, "homomorphism",
                                        ((group.serialize(p), group.serialize(q)),), "A_pq != A_p A_q")
        checked = {p for pair in pairs for p in pair} | set(elements)
        units = [alg.unit_vector(i) for i in range(n)]
        for p in sorted(checked, key=group.serialize):
            m = rep.matrix(p)
            if det(m) == 0:
                return ValidationReport(False, "invertible", (group.serialize(p),), "A_p is singular")
            for i in range(n):
                for j in range(i + 1, n):
                    lhs = mat_vec(m, alg.bracket(units[i], units[j]))
                    rhs = alg.bracket(mat_vec(m, units[i]), mat_vec(m, units[j]))
                    if lhs != rhs:
                        return ValidationReport(False, "automorphism", ((group.serialize(p), i, j),),
                                                "A_p[x,y] != [A_p x, A_p y]")
    except AlgebraError as exc:
        return ValidationReport(False, "error", (), str(exc))
    return ValidationReport(True, "representation")


def validate_group(group: Group, samples=None) -> ValidationReport:
    e = group.identity()
    elements = group.elements() if group.finite else list(samples or group.samples())
    for p in elements:
        if group.mul(p, group.inv(p)) != e or group.mul(group.inv(p), p) != e:
            return ValidationReport(False, "inverse", (group.serialize(p),))
        if group.mul(p, e) != p or group.mul(e, p) != p:
            return ValidationReport(False, "identity", (group.serialize(p),))
    for p, q, r in itertools.product(elements, repeat=3):
        if group.mul(group.mul(p, q), r) != group.mul(p, group.mul(q, r)):
            return ValidationReport(False, "associativity", tuple(group.serialize(x) for x in (p, q, r)))
    return ValidationReport(True, "group")


# ---------------------------------------------------------------------------
# contexts

@dataclass
class Context:
    """Algebra + group + representation, plus named group elements for expressions."""

    algebra: LieAlgebra
    group: Group
    rep: Representation
    name: str = "context"
    named: dict = field(default_factory=dict)
    sample_elements: list = field(default_factory=list)

    def __post_init__(self):
        if self.rep.algebra is not self.algebra and self.rep.algebra != self.algebra:
            raise AlgebraError("representation is over a different algebra")
        if self.rep.group is not self.group:
            raise AlgebraError("representation is over a different group")
        self.neg_algebra = self.algebra.negated()
        if not self.sample_elements:
            self.sample_elements = list(self.group.samples())

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    def group_sort_key(self, p):
        return self.group.serialize(p)

    def parse_group(self, text: str):
        text = text.strip()
        if text in self.named:
            return self.named[text]
        return self.group.parse(text)

    def validate(self) -> list:
        return [
            validate_algebra(self.algebra),
            validate_group(self.group, self.sample_elements),
            validate_representation(self.rep, self.algebra, None if self.group.finite else self.sample_elements),
        ]

    def describe(self) -> dict:
        g = self.group
        return {
            "name": self.name,
            "algebra": {"name": self.algebra.name, "dim": self.algebra.dim, "basis": list(self.algebra.basis)},
            "group": {"name": g.name, "finite": g.finite,
                      "order": len(g.elements()) if g.finite else None,
                      "samples": [g.serialize(p) for p in self.sample_elements]},
            "representation": self.rep.kind,
            "named": {k: g.serialize(v) for k, v in sorted(self.named.items())},
            "validation": {r.check: r.ok for r in self.validate()},
        }


def group_mul(ctx_or_group, p, q):
    group = getattr(ctx_or_group, "group", ctx_or_group)
    return group.mul(p, q)


def group_inv(ctx_or_group, p):
    group = getattr(ctx_or_group, "group", ctx_or_group)
    return group.inv(p)


def group_id(ctx_or_group):
    group = getattr(ctx_or_group, "group", ctx_or_group)
    return group.identity()


# ---------------------------------------------------------------------------
# built-in catalog

def _s3_moebius_matrices():
    """S3 as the Moebius maps permuting {0, 1, oo}, as 2x2 integer matrices.

    Each map is only defined up to scalar, which conjugation does not see.
    """
    return [
        mat([[1, 0], [0, 1]]),     # z
        mat([[-1, 1], [0, 1]]),    # 1 - z
        mat([[0, 1], [1, 0]]),     # 1/z
        mat([[0, 1], [-1, 1]]),    # 1/(1-z)
        mat([[1, -1], [1, 0]]),    # (z-1)/z
        mat([[1, 0], [1, -1]]),    # z/(z-1)
    ]


def _projective_index(mats, m):
    for i, x in enumerate(mats):
        # proportional?
        ratio = None
        ok = True
        for rx, rm in zip(x, m):
            for a, b in zip(rx, rm):
                if a == 0 and b == 0:
                    continue
                if a == 0 or b == 0:
                    ok = False
                    break
                if ratio is None:
                    ratio = b / a
                elif b / a != ratio:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return i
    raise AlgebraError("matrix set is not closed")


def s3_on_sl2_context() -> Context:
    mats = _s3_moebius_matrices()
    table = [[_projective_index(mats, mat_mul(a, b)) for b in mats] for a in mats]
    group = CayleyGroup(table, name="S3")
    alg = sl2_algebra()
    rep = conjugation_representation(group, alg, sl2_realization(), group_matrix=lambda p: mats[p])
    named = {"p": 1, "q": 2, "r": 3}
    return Context(alg, group, rep, name="C3", named=named)


HEISENBERG_SAMPLES = [(1, 2, 3), (-1, 1, 0), (2, -1, 1), (0, 1, -2), (1, 0, 1), (-2, -1, 1)]


def heisenberg_context(samples=None) -> Context:
    group = HeisenbergGroup(samples or HEISENBERG_SAMPLES)
    alg = heisenberg_algebra()
    rep = conjugation_representation(group, alg, heisenberg_realization())
    named = {"p": heisenberg_matrix(1, 2, 3), "q": heisenberg_matrix(-1, 1, 0), "r": heisenberg_matrix(2, -1, 1)}
    return Context(alg, group, rep, name="C2", named=named)


def abelian_z4_context() -> Context:
    group = cyclic_group(4)
    alg = abelian_algebra(3)
    return Context(alg, group, trivial_representation(group, alg), name="C1",
                   named={"p": 1, "q": 2, "r": 3})


def so3_trivial_context() -> Context:
    group = trivial_group()
    alg = so3_algebra()
    return Context(alg, group, trivial_representation(group, alg), name="C4")


BUILTIN_CONTEXTS = {
    "C1": abelian_z4_context,
    "C2": heisenberg_context,
    "C3": s3_on_sl2_context,
    "C4": so3_trivial_context,
}


def builtin_context(name: str) -> Context:
    try:
        return BUILTIN_CONTEXTS[name]()
    except KeyError:
        raise AlgebraError(f"unknown built-in context {name!r}") from None
