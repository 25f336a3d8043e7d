"""Randomized and exhaustive property suites with reproducible reports."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from . import bimodule as bm
from . import currents as cur
from . import tensor_lift as tl
from .enveloping import kernel
from .exterior import antipode_sign, coproduct_mono as ext_coproduct_mono, wedge_mono
from .expr import element_source, evaluate, render
from .foundations import AlgebraError, Context
from .laws import (
    DIFFERENTIAL_LAWS,
    HOPF_LAWS,
    bookkeeping_errors,
    current_structure,
    filtration,
    grade,
    groupring_structure,
    law_associativity,
    law_boundary_antipode_graded,
    law_co_leibniz,
    lift_structure,
)
from .linear import add_to

SUITES = (
    "hopf-axioms", "differential", "bimodule-derivation", "smash-equivalence",
    "groupring-contrast", "tensor-lift", "subalgebra-closure",
)
DEFAULT_SEED = 20240601
DEFAULT_CASES = 500
MAX_RECORDED = 5


@dataclass
class Failure:
    identity: str
    expression: str
    value: str

    def to_dict(self):
        return {"identity": self.identity, "expression": self.expression, "value": self.value}


@dataclass
class SuiteReport:
    suite: str
    context: str
    seed: int
    cases: int
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    failure_count: int = 0
    witnesses: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def count(self, identity: str, n: int = 1):
        self.checks[identity] = self.checks.get(identity, 0) + n

    def fail(self, identity: str, expression: str, value: str):
        self.failure_count += 1
        if sum(1 for f in self.failures if f.identity == identity) < MAX_RECORDED:
            self.failures.append(Failure(identity, expression, value))

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite, "context": self.context, "seed": self.seed, "cases": self.cases,
            "passed": self.ok, "checks": dict(sorted(self.checks.items())),
            "failure_count": self.failure_count, "failures": [f.to_dict() for f in self.failures],
            "witnesses": self.witnesses,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def reports_json(reports, timing: bool = False) -> str:
    """Deterministic JSON; wall time is included only on request."""
    doc = {"passed": all(r.ok for r in reports), "reports": [r.to_dict(timing) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# random elements

class Generator:
    """Random elements: <= 3 terms, U-degree <= 3, wedge grade <= dim, coefficients in {-2..2}."""

    def __init__(self, ctx: Context, rng: random.Random, points=None, max_terms=3, max_degree=3,
                 max_grade=None, words=False):
        self.ctx = ctx
        self.eng = cur.engine(ctx)
        self.rng = rng
        self.n = ctx.algebra.dim
        pts = list(points) if points is not None else list(ctx.sample_elements)
        self.points = [self.eng.intern(p) for p in pts]
        self.max_terms = max_terms
        self.max_degree = max_degree
        self.max_grade = self.n if max_grade is None else min(max_grade, self.n)
        self.words = words

    def key(self):
        rng = self.rng
        g = rng.choice(self.points)
        v = [rng.randrange(self.n) for _ in range(rng.randint(0, self.max_degree))]
        v = tuple(v) if self.words else tuple(sorted(v))
        a = tuple(sorted(rng.sample(range(self.n), rng.randint(0, self.max_grade))))
        return g, v, a

    def terms(self) -> dict:
        """A dict of keys; U-slot keys are raw sorted tuples, PBW-normal by construction."""
        acc: dict = {}
        for _ in range(self.rng.randint(1, self.max_terms)):
            add_to(acc, self.key(), self.rng.choice((-2, -1, 1, 2)))
        return acc or {self.key(): 1}


def _rng(seed, *parts) -> random.Random:
    return random.Random(":".join([str(seed)] + [str(p) for p in parts]))


# ---------------------------------------------------------------------------
# helpers

def _diff(lhs: dict, rhs: dict) -> dict:
    out = dict(lhs)
    for k, c in rhs.items():
        add_to(out, k, -c)
    return out


def _canonical(ctx):
    eng = cur.engine(ctx)
    return lambda k: (eng.name(k[0]),) + tuple(k[1:])


def _shrink(fails, args: list, ctx) -> list:
    """Greedily drop terms from the arguments while the identity still fails."""
    order = _canonical(ctx)
    args = [dict(a) for a in args]
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(args):
            if len(a) <= 1:
                continue
            for k in sorted(a, key=order):
                trial = dict(a)
                del trial[k]
                cand = args[:i] + [trial] + args[i + 1:]
                if fails(cand):
                    args = cand
                    changed = True
                    break
            if changed:
                break
    return args


def _law_expr(name: str, st, args) -> str:
    srcs = [element_source(st.wrap(a)) for a in args]
    return f"defect({name.replace('-', '_')}, " + ", ".join(srcs) + ")"


def _check_law(report: SuiteReport, st, name: str, fn, args: list):
    report.count(name)
    lhs, rhs = fn(st, *args)
    if lhs == rhs:
        return True
    args = _shrink(lambda a: (lambda l, r: l != r)(*fn(st, *a)), args, st.ctx)
    expression = _law_expr(name, st, args)
    value = render(evaluate(expression, st.ctx))
    report.fail(name, expression, value)
    return False


def _check_equal(report: SuiteReport, identity: str, lhs, rhs, expression: str):
    report.count(identity)
    if lhs == rhs:
        return True
    report.fail(identity, expression, render(evaluate(expression, lhs.owner)))
    return False


def _bookkeeping(report: SuiteReport, st, args: list):
    keys = sorted({k for a in args for k in a}, key=_canonical(st.ctx))
    report.count("bookkeeping", 1)
    for kind, key, out in bookkeeping_errors(st, keys)[:1]:
        ks = key if isinstance(key[0], tuple) and isinstance(key[0][0], int) else (key,)
        srcs = [element_source(st.wrap({k: 1})) for k in ks]
        report.fail("bookkeeping", f"{kind}: " + ", ".join(srcs), repr(out))


def _product_bookkeeping(report: SuiteReport, ctx, name, fn, x: dict, y: dict):
    """Grades add and filtrations do not exceed the sum, term pair by term pair."""
    eng = cur.engine(ctx)
    for k1 in x:
        for k2 in y:
            for out in fn(eng, k1, k2):
                if (out[0] != eng.mul(k1[0], k2[0]) or grade(out) != grade(k1) + grade(k2)
                        or filtration(out) > filtration(k1) + filtration(k2)):
                    report.fail("bookkeeping", f"{name}: " + ", ".join(
                        element_source(cur.CurrentElement(ctx, {k: 1}, _trusted=True)) for k in (k1, k2)),
                        repr(out))
                    return


def _wrap(ctx, terms):
    return cur.CurrentElement(ctx, terms, _trusted=True)


# ---------------------------------------------------------------------------
# suites

def suite_hopf(ctx, report, seed, cases):
    st = current_structure(ctx)
    _run_laws(report, st, HOPF_LAWS, seed, cases, words=False)


def _run_laws(report, st, laws, seed, cases, words):
    ctx = st.ctx
    for name, (fn, arity) in laws.items():
        gen = Generator(ctx, _rng(seed, ctx.name, report.suite, name), words=words)
        for _ in range(cases):
            args = [gen.terms() for _ in range(arity)]
            _check_law(report, st, name, fn, args)
            _bookkeeping(report, st, args)


def suite_differential(ctx, report, seed, cases):
    st = current_structure(ctx)
    _run_laws(report, st, DIFFERENTIAL_LAWS, seed, cases, words=False)
    # the graded sign variant of the antipode relation is recorded, not enforced
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "graded-sign"))
    for _ in range(cases):
        x = gen.terms()
        lhs, rhs = law_boundary_antipode_graded(st, x)
        if lhs != rhs:
            (x,) = _shrink(lambda a: (lambda l, r: l != r)(*law_boundary_antipode_graded(st, a[0])), [x], ctx)
            expression = _law_expr("boundary-antipode-graded", st, [x])
            report.witnesses.append({
                "identity": "boundary-antipode-graded", "holds": False, "expression": expression,
                "value": render(evaluate(expression, ctx)),
                "note": "d S = (-1)^k S d fails; d S = S d holds (checked above)",
            })
            break
    else:
        report.witnesses.append({"identity": "boundary-antipode-graded", "holds": True})


def basis_keys(ctx, max_degree=2, max_grade=3, points=None) -> list:
    """All (p | PBW monomial | wedge) with degree <= max_degree and grade <= max_grade."""
    eng = cur.engine(ctx)
    n = ctx.algebra.dim
    if points is None:
        points = default_points(ctx)
    monos = [m for d in range(max_degree + 1) for m in combinations_with_replacement(range(n), d)]
    wedges = [w for k in range(min(max_grade, n) + 1) for w in combinations(range(n), k)]
    return [(eng.intern(p), v, a) for p in points for v in monos for a in wedges]


def default_points(ctx) -> list:
    """Identity plus up to two named (or sampled) non-identity elements."""
    group = ctx.group
    pts = [group.identity()]
    extra = [p for _, p in sorted(ctx.named.items())] + list(ctx.sample_elements)
    for p in extra:
        if len(pts) == 3:
            break
        if all(group.serialize(p) != group.serialize(r) for r in pts):
            pts.append(p)
    return pts


def suite_bimodule(ctx, report, seed, cases, exhaustive=True):
    eng = cur.engine(ctx)

    def compare(x, y):
        X, Y = _wrap(ctx, x), _wrap(ctx, y)
        report.count("derived-convolution")
        if bm.derived_convolution(X, Y) != cur.convolve(X, Y):
            (x, y) = _shrink(lambda a: bm.derived_convolution(_wrap(ctx, a[0]), _wrap(ctx, a[1]))
                             != cur.convolve(_wrap(ctx, a[0]), _wrap(ctx, a[1])), [x, y], ctx)
            sx, sy = element_source(_wrap(ctx, x)), element_source(_wrap(ctx, y))
            expression = f"derived({sx}, {sy}) - {sx} * {sy}"
            report.fail("derived-convolution", expression, render(evaluate(expression, ctx)))

    if exhaustive:
        keys = basis_keys(ctx)
        report.count("basis-terms", len(keys))
        for k1 in keys:
            for k2 in keys:
                compare({k1: 1}, {k2: 1})
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "pairs"))
    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        compare(x, y)
        _product_bookkeeping(report, ctx, "derived", lambda e, a, b: bm.derived_convolution(
            _wrap(ctx, {a: 1}), _wrap(ctx, {b: 1})).terms, x, y)
    # reduce o embed = id and reduce o to_right_form = reduce on four-slot elements
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "slots"))
    nneg = kernel(ctx.neg_algebra)
    for _ in range(cases):
        x = gen.terms()
        X = _wrap(ctx, x)
        _check_equal(report, "reduce-embed", bm.reduce(bm.embed(X)), X,
                     f"reduce(embed({element_source(X)})) - {element_source(X)}")
        us = [tuple(sorted(gen.rng.randrange(gen.n) for _ in range(gen.rng.randint(0, 2)))) for _ in x]
        four = bm.FourSlotElement(ctx, {}, _trusted=True)
        for (k, c), u in zip(sorted(x.items(), key=lambda kv: _canonical(ctx)(kv[0])), us):
            four = four + bm.FourSlotElement(ctx, {k + (u,): c}, _trusted=True)
        src = element_source(four)
        _check_equal(report, "right-form-round-trip", bm.reduce(bm.to_right_form(four)), bm.reduce(four),
                     f"reduce(right_form({src})) - reduce({src})")
        if any(k[1] for k in bm.to_right_form(four).terms):
            report.fail("right-form-left-slot", f"right_form({src})", render(bm.to_right_form(four)))
        report.count("right-form-left-slot")
        # left- and right-invariant operators commute
        w = tuple(sorted(gen.rng.randrange(gen.n) for _ in range(gen.rng.randint(1, 2))))
        z = tuple(sorted(gen.rng.randrange(gen.n) for _ in range(gen.rng.randint(1, 2))))
        nneg.check_word(z)
        lr = bm.reduce(bm.right_multiply(bm.embed(bm.reduce(bm.left_multiply(four, w))), z))
        rl = bm.reduce(bm.left_multiply(bm.embed(bm.reduce(bm.right_multiply(four, z))), w))
        direct = bm.reduce(bm.right_multiply(bm.left_multiply(four, w), z))
        report.count("slot-commutation")
        if not (lr == rl == direct):
            report.fail("slot-commutation", f"{src} with v={w}, u={z}", render(lr - rl))


def suite_smash(ctx, report, seed, cases):
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "pairs"))
    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        X, Y = _wrap(ctx, x), _wrap(ctx, y)
        if cur.smash_product(X, Y) != cur.convolve(X, Y):
            (x, y) = _shrink(lambda a: cur.smash_product(_wrap(ctx, a[0]), _wrap(ctx, a[1]))
                             != cur.convolve(_wrap(ctx, a[0]), _wrap(ctx, a[1])), [x, y], ctx)
            X, Y = _wrap(ctx, x), _wrap(ctx, y)
        sx, sy = element_source(X), element_source(Y)
        _check_equal(report, "smash-equals-convolve", cur.smash_product(X, Y), cur.convolve(X, Y),
                     f"smash({sx}, {sy}) - {sx} * {sy}")
        _product_bookkeeping(report, ctx, "smash", lambda e, a, b: cur.smash_product(
            _wrap(ctx, {a: 1}), _wrap(ctx, {b: 1})).terms, x, y)
    # module-algebra axioms of the action on random monomials
    from .enveloping import UeaElement
    from .exterior import ExtElement

    eng = cur.engine(ctx)
    U = eng.U
    basis = ctx.algebra.basis
    for _ in range(cases):
        (g, v, _), (h, w, _), (k, _, a), (_, _, b) = gen.key(), gen.key(), gen.key(), gen.key()
        P, Q, R = eng.element(g), eng.element(h), eng.element(k)
        V, W = UeaElement(ctx.algebra, {v: 1}, _trusted=True), UeaElement(ctx.algebra, {w: 1}, _trusted=True)
        A = ExtElement(basis, {a: 1}, _trusted=True)
        B = ExtElement(basis, {b: 1}, _trusted=True)
        # (h h') . a = h . (h' . a), with the product of the Hopf subalgebra
        lhs: dict = {}
        for (gg, m), c in cur._hopf_sub_mul(eng, (g, v), (h, w)).items():
            pt, val = cur.smash_action(ctx, (eng.element(gg), UeaElement(ctx.algebra, {m: 1}, _trusted=True)),
                                       (R, A))
            for mm, cc in val.terms.items():
                add_to(lhs, (eng.intern(pt), mm), c * cc)
        pt1, inner = cur.smash_action(ctx, (Q, W), (R, A))
        pt2, outer = cur.smash_action(ctx, (P, V), (pt1, inner))
        rhs = {(eng.intern(pt2), mm): cc for mm, cc in outer.terms.items()}
        report.count("action-associative")
        if lhs != rhs:
            report.fail("action-associative", f"p={eng.name(g)} v={v} q={eng.name(h)} w={w} a={a}",
                        repr(_diff(lhs, rhs)))
        # h . (a ^ b) = sum (h_(1) . a) ^ (h_(2) . b), fiberwise at the point of a and b
        _, whole = cur.smash_action(ctx, (P, V), (R, A ^ B))
        split = ExtElement(basis, {}, _trusted=True)
        for v1, v2, cv in U.coproduct_mono(v):
            _, l = cur.smash_action(ctx, (P, UeaElement(ctx.algebra, {v1: 1}, _trusted=True)), (R, A))
            _, r = cur.smash_action(ctx, (P, UeaElement(ctx.algebra, {v2: 1}, _trusted=True)), (R, B))
            split = split + (l ^ r).scale(cv)
        report.count("action-module-algebra")
        if whole != split:
            report.fail("action-module-algebra", f"p={eng.name(g)} v={v} a={a} b={b}", str(whole - split))


def _is_degenerate(ctx) -> bool:
    alg = ctx.algebra
    abelian = all(not any(alg.consts[i][j]) for i in range(alg.dim) for j in range(alg.dim))
    n = alg.dim
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    trivial = all([[x for x in row] for row in ctx.rep.matrix(p)] == ident for p in ctx.sample_elements)
    return abelian and trivial


def suite_groupring(ctx, report, seed, cases):
    """*' is associative everywhere; it equals * exactly when brackets and A are trivial."""
    st = groupring_structure(ctx)
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "assoc"))
    for _ in range(cases):
        _check_law(report, st, "associativity", law_associativity, [gen.terms() for _ in range(3)])
    degenerate = _is_degenerate(ctx)
    # the canonical example (p | e1 | 1) * (q | 1 | e2)
    pts = default_points(ctx)
    p, q_ = pts[1 % len(pts)], pts[2 % len(pts)]
    eng = cur.engine(ctx)
    e2 = 1 if ctx.algebra.dim > 1 else 0
    X = _wrap(ctx, {(eng.intern(p), (0,), ()): 1})
    Y = _wrap(ctx, {(eng.intern(q_), (), (e2,)): 1})
    found = None
    if cur.convolve(X, Y) != cur.groupring_convolve(X, Y):
        found = (X, Y)
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "pairs"))
    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        Xr, Yr = _wrap(ctx, x), _wrap(ctx, y)
        same = cur.convolve(Xr, Yr) == cur.groupring_convolve(Xr, Yr)
        report.count("contrast-sample")
        if not same and found is None:
            (x, y) = _shrink(lambda a: cur.convolve(_wrap(ctx, a[0]), _wrap(ctx, a[1]))
                             != cur.groupring_convolve(_wrap(ctx, a[0]), _wrap(ctx, a[1])), [x, y], ctx)
            found = (_wrap(ctx, x), _wrap(ctx, y))
        if degenerate and not same:
            sx, sy = element_source(Xr), element_source(Yr)
            expression = f"{sx} * {sy} - {sx} *' {sy}"
            report.fail("degenerate-equality", expression, render(evaluate(expression, ctx)))
        _product_bookkeeping(report, ctx, "groupring", cur.groupring_terms, x, y)
    report.count("contrast")
    if found is not None:
        sx, sy = element_source(found[0]), element_source(found[1])
        expression = f"{sx} * {sy} - {sx} *' {sy}"
        report.witnesses.append({"identity": "contrast", "degenerate": degenerate, "holds": False,
                                 "expression": expression, "value": render(evaluate(expression, ctx)),
                                 "convolve": render(cur.convolve(*found)),
                                 "groupring": render(cur.groupring_convolve(*found))})
        if degenerate:
            report.fail("contrast", expression, "unexpected difference in a degenerate context")
    else:
        report.witnesses.append({"identity": "contrast", "degenerate": degenerate, "holds": True})
        if not degenerate:
            report.fail("contrast", "no witness found", "the products agreed on every sampled pair")


def suite_tensor_lift(ctx, report, seed, cases, witness_word=2, witness_grade=3):
    st = lift_structure(ctx)
    laws = dict(HOPF_LAWS)
    laws["co-leibniz"] = (law_co_leibniz, 1)
    _run_laws(report, st, laws, seed, cases, words=True)
    # phi intertwines the five operations
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "phi"), words=True)
    cst = current_structure(ctx)
    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        X, Y = st.wrap(x), st.wrap(y)
        sx, sy = element_source(X), element_source(Y)
        px, py = tl.phi(X), tl.phi(Y)
        _check_equal(report, "phi-convolve", tl.phi(tl.lift_convolve(X, Y)), cur.convolve(px, py),
                     f"phi({sx} * {sy}) - phi({sx}) * phi({sy})")
        _check_equal(report, "phi-boundary", tl.phi(tl.lift_boundary(X)), cur.boundary(px),
                     f"phi(d({sx})) - d(phi({sx}))")
        _check_equal(report, "phi-antipode", tl.phi(tl.lift_antipode(X)), cur.antipode(px),
                     f"phi(S({sx})) - S(phi({sx}))")
        report.count("phi-coproduct")
        if tl.phi_tensor(tl.lift_coproduct(X)) != cur.coproduct(px):
            report.fail("phi-coproduct", f"delta({sx})", "phi (x) phi does not match")
        report.count("phi-counit")
        if tl.lift_counit(X) != cur.counit(px):
            report.fail("phi-counit", f"eps({sx}) - eps(phi({sx}))", render(evaluate(f"eps({sx}) - eps(phi({sx}))", ctx)))
    # the boundary of the lift need not square to zero
    x, d2, searched = tl.find_boundary_square_witness(ctx, witness_word, witness_grade)
    report.count("boundary-square-search", searched)
    if x is None:
        report.witnesses.append({"identity": "lift-boundary-square", "found": False, "searched": searched,
                                 "note": f"exhausted words of length <= {witness_word}, grade <= {witness_grade}"})
    else:
        expression = f"d(d({element_source(x)}))"
        value = render(evaluate(expression, ctx))
        if value != str(d2) or value == "0":
            report.fail("boundary-square-search", expression, value)
        report.witnesses.append({"identity": "lift-boundary-square", "found": True, "searched": searched,
                                 "expression": expression, "value": value})


def subgroups(ctx) -> list:
    """{e}, the cyclic subgroups of the sample elements and the whole group when finite."""
    group = ctx.group
    out = {(group.serialize(group.identity()),): [group.identity()]}
    if group.finite:
        for p in group.elements():
            sub = cur.generated_subgroup(ctx, [p])
            out.setdefault(tuple(sorted(group.serialize(r) for r in sub)), sub)
        allp = group.elements()
        out.setdefault(tuple(sorted(group.serialize(r) for r in allp)), allp)
    return [out[k] for k in sorted(out, key=lambda k: (len(k), k))]


def suite_closure(ctx, report, seed, cases, subgroup_list=None):
    group = ctx.group
    eng = cur.engine(ctx)
    subs = subgroup_list if subgroup_list is not None else subgroups(ctx)
    per = max(1, cases // max(1, len(subs)))
    for sub in subs:
        cur.validate_subgroup(ctx, sub)
        label = "{" + ",".join(sorted(group.serialize(p) for p in sub)) + "}"
        allowed = {eng.intern(p) for p in sub}
        gen = Generator(ctx, _rng(seed, ctx.name, report.suite, label), points=sub)
        for _ in range(per):
            X, Y = _wrap(ctx, gen.terms()), _wrap(ctx, gen.terms())
            outs = {
                "convolve": cur.convolve(X, Y), "boundary": cur.boundary(X), "antipode": cur.antipode(X),
                "smash": cur.smash_product(X, Y), "groupring": cur.groupring_convolve(X, Y),
            }
            for name, val in outs.items():
                report.count(f"closure-{name}")
                if any(k[0] not in allowed for k in val.terms):
                    report.fail(f"closure-{name}", f"{label}: {element_source(X)}, {element_source(Y)}", str(val))
            report.count("closure-coproduct")
            if any(k1[0] not in allowed or k2[0] not in allowed for (k1, k2) in cur.coproduct(X).terms):
                report.fail("closure-coproduct", f"{label}: {element_source(X)}", "support left the subgroup")
            report.count("closure-counit")
            if any(p not in allowed for p in (eng.intern(r) for r in cur.counit(X))):
                report.fail("closure-counit", f"{label}: {element_source(X)}", "support left the subgroup")
    _grade_zero(ctx, report, seed, cases)
    _filtration_zero(ctx, report, seed, cases)


def _grade_zero(ctx, report, seed, cases):
    """At {e}, the grade-0 part is U(h) with its own Hopf structure."""
    eng = cur.engine(ctx)
    U = eng.U
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "grade-0"), points=[ctx.group.identity()],
                    max_grade=0)
    e = eng.e

    def lift0(d):
        return {(e, m, ()): c for m, c in d.items()}

    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        vx = {k[1]: c for k, c in x.items()}
        vy = {k[1]: c for k, c in y.items()}
        X, Y = _wrap(ctx, x), _wrap(ctx, y)
        checks = {
            "grade-0-product": (cur.convolve(X, Y).terms, lift0(U.mul(vx, vy))),
            "grade-0-antipode": (cur.antipode(X).terms, lift0(U.antipode(vx))),
            "grade-0-coproduct": (cur.coproduct(X).terms,
                                  {((e, l, ()), (e, r, ())): c for (l, r), c in U.coproduct(vx).items()}),
            "grade-0-counit": (cur.counit_scalar(X), vx.get((), 0)),
            "grade-0-boundary": (cur.boundary(X).terms, {}),
        }
        _structural(report, ctx, checks, X, Y)


def _filtration_zero(ctx, report, seed, cases):
    """At {e}, the filtration-0 part is the exterior algebra with its own Hopf structure."""
    eng = cur.engine(ctx)
    gen = Generator(ctx, _rng(seed, ctx.name, report.suite, "filtration-0"), points=[ctx.group.identity()],
                    max_degree=0)
    e = eng.e

    def lift0(d):
        return {(e, (), m): c for m, c in d.items()}

    for _ in range(cases):
        x, y = gen.terms(), gen.terms()
        ax = {k[2]: c for k, c in x.items()}
        ay = {k[2]: c for k, c in y.items()}
        X, Y = _wrap(ctx, x), _wrap(ctx, y)
        wedge_xy: dict = {}
        for a, ca in ax.items():
            for b, cb in ay.items():
                s, m = wedge_mono(a, b)
                if s:
                    add_to(wedge_xy, m, s * ca * cb)
        cop: dict = {}
        for a, c in ax.items():
            for l, r, s in ext_coproduct_mono(a):
                add_to(cop, ((e, (), l), (e, (), r)), s * c)
        checks = {
            "filtration-0-product": (cur.convolve(X, Y).terms, lift0(wedge_xy)),
            "filtration-0-antipode": (cur.antipode(X).terms, lift0({a: antipode_sign(a) * c for a, c in ax.items()})),
            "filtration-0-coproduct": (cur.coproduct(X).terms, cop),
            "filtration-0-counit": (cur.counit_scalar(X), ax.get((), 0)),
        }
        _structural(report, ctx, checks, X, Y)


def _structural(report, ctx, checks, X, Y):
    for name, (got, want) in checks.items():
        report.count(name)
        if got != want:
            report.fail(name, f"{element_source(X)}, {element_source(Y)}", f"{got!r} != {want!r}")


RUNNERS = {
    "hopf-axioms": suite_hopf,
    "differential": suite_differential,
    "bimodule-derivation": suite_bimodule,
    "smash-equivalence": suite_smash,
    "groupring-contrast": suite_groupring,
    "tensor-lift": suite_tensor_lift,
    "subalgebra-closure": suite_closure,
}


def run_suite(ctx: Context, suite: str, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES, **options) -> SuiteReport:
    if suite not in RUNNERS:
        raise AlgebraError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = SuiteReport(suite, ctx.name, seed, cases)
    t0 = time.perf_counter()
    RUNNERS[suite](ctx, report, seed, cases, **options)
    report.wall_time = time.perf_counter() - t0
    return report


def run_suites(ctx: Context, suites=None, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list:
    names = list(suites) if suites else list(SUITES)
    for name in names:
        if name not in RUNNERS:
            raise AlgebraError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return [run_suite(ctx, name, seed, cases) for name in names]


__all__ = [
    "SUITES", "DEFAULT_SEED", "DEFAULT_CASES", "Failure", "SuiteReport", "Generator", "run_suite",
    "run_suites", "reports_json", "basis_keys", "default_points", "subgroups",
]
