"""JSON context documents.

Schema::

    {
      "name": "C2",
      "algebra": {"dim": 3, "basis": ["e1", "e2", "e3"],
                  "brackets": [{"i": "e1", "j": "e2", "value": [0, 0, 1]}]},
      "group": {"kind": "cayley", "table": [[...]]}
             | {"kind": "cayley", "cyclic": 4}
             | {"kind": "permutation", "degree": 3}
             | {"kind": "matrix", "size": 2, "samples": [[[1, 1], [0, 1]]]}
             | {"kind": "matrix", "family": "heisenberg", "samples": [[1, 2, 3]]},
      "representation": {"kind": "trivial"}
                      | {"kind": "adjoint", "realization": [matrix per basis element],
                         "group_matrices": {"g1": matrix}}
                      | {"kind": "table", "matrices": {"g1": matrix}},
      "named": {"p": "M(1,2,3)"},
      "samples": ["M(1,2,3)"]
    }

Omitted brackets are zero; ``i``/``j`` are basis names or 0-based indices;
scalars are integers or "a/b" strings.  Built-in contexts are available as
``builtin:C1`` .. ``builtin:C4``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .foundations import (
    AlgebraError,
    CayleyGroup,
    Context,
    HeisenbergGroup,
    LieAlgebra,
    MatrixGroup,
    PermutationGroup,
    builtin_context,
    conjugation_representation,
    cyclic_group,
    format_scalar,
    mat,
    scalar,
    table_representation,
    trivial_representation,
)


class ConfigError(AlgebraError):
    """Invalid context document."""


def _need(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ConfigError(f"{where}: missing key {key!r}")
    return doc[key]


def _scalar(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ConfigError(f"{where}: scalar must be an integer or an 'a/b' string, got {x!r}")
    try:
        return scalar(x)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{where}: cannot read {x!r} as a rational") from None


def _matrix(m, n, where):
    if not isinstance(m, list) or len(m) != n or any(not isinstance(r, list) or len(r) != n for r in m):
        raise ConfigError(f"{where}: expected a {n}x{n} matrix")
    return mat([[_scalar(x, where) for x in row] for row in m])


def _index(v, basis, where):
    if isinstance(v, bool):
        raise ConfigError(f"{where}: bad index {v!r}")
    if isinstance(v, int):
        if not 0 <= v < len(basis):
            raise ConfigError(f"{where}: index {v} out of range")
        return v
    if isinstance(v, str) and v in basis:
        return basis.index(v)
    raise ConfigError(f"{where}: unknown basis element {v!r}")


def load_algebra(doc: dict) -> LieAlgebra:
    dim = _need(doc, "dim", "algebra")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ConfigError("algebra: dim must be a positive integer")
    basis = doc.get("basis") or [f"e{i + 1}" for i in range(dim)]
    if len(basis) != dim or len(set(basis)) != dim or not all(isinstance(b, str) and b.isidentifier() for b in basis):
        raise ConfigError("algebra: basis must list dim distinct identifier names")
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for k, entry in enumerate(doc.get("brackets", [])):
        where = f"algebra.brackets[{k}]"
        i = _index(_need(entry, "i", where), basis, where)
        j = _index(_need(entry, "j", where), basis, where)
        value = _need(entry, "value", where)
        if not isinstance(value, list) or len(value) != dim:
            raise ConfigError(f"{where}: value must have length {dim}")
        if (i, j) in seen or i == j:
            raise ConfigError(f"{where}: repeated or diagonal entry")
        seen.add((i, j))
        vec = [_scalar(x, where) for x in value]
        table[i][j] = vec
        if (j, i) not in seen:
            table[j][i] = [-x for x in vec]
    return LieAlgebra.from_table(basis, table, name=doc.get("name", "lie"))


def load_group(doc: dict):
    kind = _need(doc, "kind", "group")
    if kind == "cayley":
        if "cyclic" in doc:
            return cyclic_group(int(doc["cyclic"]))
        table = _need(doc, "table", "group")
        if not isinstance(table, list) or not table:
            raise ConfigError("group: table must be a non-empty square list")
        m = len(table)
        if any(not isinstance(r, list) or len(r) != m or any(not isinstance(x, int) or not 0 <= x < m for x in r)
               for r in table):
            raise ConfigError("group: table entries must be indices 0..m-1 in an m x m table")
        return CayleyGroup(table, name=doc.get("name", "cayley"))
    if kind == "permutation":
        degree = _need(doc, "degree", "group")
        if not isinstance(degree, int) or degree < 1 or degree > 6:
            raise ConfigError("group: permutation degree must be between 1 and 6")
        return PermutationGroup(degree)
    if kind == "matrix":
        if doc.get("family") == "heisenberg":
            samples = doc.get("samples", [])
            if any(not isinstance(s, list) or len(s) != 3 for s in samples):
                raise ConfigError("group: Heisenberg samples are [a, b, c] triples")
            return HeisenbergGroup([tuple(_scalar(x, "group.samples") for x in s) for s in samples])
        size = _need(doc, "size", "group")
        samples = [_matrix(s, size, "group.samples") for s in doc.get("samples", [])]
        return MatrixGroup(size, name=doc.get("name", "GL"), sample_elements=samples)
    raise ConfigError(f"group: unknown kind {kind!r}")


def load_representation(doc: dict, group, alg: LieAlgebra):
    kind = _need(doc, "kind", "representation")
    n = alg.dim
    if kind == "trivial":
        return trivial_representation(group, alg)
    if kind == "adjoint":
        real = _need(doc, "realization", "representation")
        if not isinstance(real, list) or len(real) != n or not real:
            raise ConfigError(f"representation: realization needs {n} matrices")
        size = len(real[0])
        realization = [_matrix(m, size, "representation.realization") for m in real]
        gm = doc.get("group_matrices")
        if gm is None:
            if not isinstance(group, MatrixGroup) or group.size != size:
                raise ConfigError("representation: adjoint needs group_matrices unless the group is a matrix group "
                                  "of the realization size")
            return conjugation_representation(group, alg, realization)
        table = {}
        for key, m in gm.items():
            table[group.parse(key)] = _matrix(m, size, f"representation.group_matrices[{key}]")

        def gmat(p):
            try:
                return table[p]
            except KeyError:
                raise AlgebraError(f"no group matrix for {group.serialize(p)}") from None

        return conjugation_representation(group, alg, realization, group_matrix=gmat)
    if kind == "table":
        matrices = _need(doc, "matrices", "representation")
        table = {group.parse(k): _matrix(m, n, f"representation.matrices[{k}]") for k, m in matrices.items()}
        table.setdefault(group.identity(), mat([[int(i == j) for j in range(n)] for i in range(n)]))
        return table_representation(group, alg, table)
    raise ConfigError(f"representation: unknown kind {kind!r}")


def load_context(doc: dict, validate: bool = True) -> Context:
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    try:
        alg = load_algebra(_need(doc, "algebra", "config"))
        group = load_group(_need(doc, "group", "config"))
        rep = load_representation(doc.get("representation", {"kind": "trivial"}), group, alg)
        named = {k: group.parse(v) for k, v in doc.get("named", {}).items()}
        for k in named:
            if not k.isidentifier() or k in alg.basis:
                raise ConfigError(f"named element {k!r} must be an identifier distinct from the basis")
        samples = [group.parse(s) for s in doc.get("samples", [])]
        if samples and group.identity() not in samples:
            samples = [group.identity()] + samples
        ctx = Context(alg, group, rep, name=doc.get("name", "context"), named=named, sample_elements=samples)
    except ConfigError:
        raise
    except (AlgebraError, ValueError, TypeError, KeyError) as exc:
        raise ConfigError(str(exc)) from None
    if validate:
        for report in ctx.validate():
            if not report.ok:
                raise ConfigError(f"validation failed: {report.check} {report.failures} {report.detail}".strip())
    return ctx


def read_context(source: str, validate: bool = True) -> Context:
    """``builtin:NAME`` or a path to a JSON document."""
    if source.startswith("builtin:"):
        ctx = builtin_context(source.split(":", 1)[1])
        if validate:
            for report in ctx.validate():
                if not report.ok:
                    raise ConfigError(f"validation failed: {report.check}")
        return ctx
    try:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    return load_context(doc, validate)


# ---------------------------------------------------------------------------
# dumping (used to ship the built-in contexts as files)

def _jscalar(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else format_scalar(x)


def _jmatrix(m):
    return [[_jscalar(x) for x in row] for row in m]


def dump_context(ctx: Context, realization=None, group_matrices=None) -> dict:
    alg, group, rep = ctx.algebra, ctx.group, ctx.rep
    brackets = [{"i": alg.basis[i], "j": alg.basis[j], "value": [_jscalar(x) for x in alg.consts[i][j]]}
                for i in range(alg.dim) for j in range(i + 1, alg.dim) if any(alg.consts[i][j])]
    doc = {"name": ctx.name,
           "algebra": {"name": alg.name, "dim": alg.dim, "basis": list(alg.basis), "brackets": brackets}}
    if isinstance(group, HeisenbergGroup):
        doc["group"] = {"kind": "matrix", "family": "heisenberg",
                        "samples": [[_jscalar(x) for x in group.params(p)] for p in group.samples()
                                    if p != group.identity()]}
    elif isinstance(group, MatrixGroup):
        doc["group"] = {"kind": "matrix", "size": group.size, "name": group.name,
                        "samples": [_jmatrix(p) for p in group.samples() if p != group.identity()]}
    elif isinstance(group, PermutationGroup):
        doc["group"] = {"kind": "permutation", "degree": group.degree}
    else:
        doc["group"] = {"kind": "cayley", "name": group.name, "table": [list(r) for r in group.table]}
    if rep.kind == "trivial":
        doc["representation"] = {"kind": "trivial"}
    elif realization is not None:
        r = {"kind": "adjoint", "realization": [_jmatrix(m) for m in realization]}
        if group_matrices is not None:
            r["group_matrices"] = {group.serialize(p): _jmatrix(m) for p, m in group_matrices.items()}
        doc["representation"] = r
    else:
        doc["representation"] = {"kind": "table", "matrices": {
            group.serialize(p): _jmatrix(rep.matrix(p)) for p in group.elements()}}
    if ctx.named:
        doc["named"] = {k: group.serialize(v) for k, v in sorted(ctx.named.items())}
    return doc


__all__ = ["ConfigError", "load_context", "read_context", "dump_context", "load_algebra", "load_group",
           "load_representation"]
