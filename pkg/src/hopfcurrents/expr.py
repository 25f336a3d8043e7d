"""A small expression language over a context.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | "*'") unary)*
    unary  := '-' unary | factor
    factor := scalar | call | tuple | '(' expr ')'
    scalar := INT ['/' INT]
    tuple  := '(' group '|' uea '|' ext ['|' uea] ')'
    uea    := '1' | IDENT (('.' | '*') IDENT)*
    ext    := '1' | IDENT ('^' IDENT)*
    call   := NAME '(' [arg (',' arg)*] ')'

``group`` is any text up to the first ``|`` and is read by the context's group
parser (named elements such as ``p`` are allowed).  A 3-slot tuple is a current
and a 4-slot tuple a four-slot element.  Inside ``lift(...)`` tuples keep their
words verbatim as elements of the tensor lift.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import bimodule as bm
from . import currents as cur
from . import tensor_lift as tl
from .foundations import AlgebraError, Context
from .linear import Combination, add_to, format_coeff, q


class ExprError(AlgebraError):
    """Syntax or evaluation error; syntax errors carry line and column."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line, self.column = line, column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Tuple:
    group: str
    uea: tuple
    ext: tuple
    right: Optional[tuple] = None


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


CALLS = {
    "d": 1, "S": 1, "eps": 1, "delta": 1, "smash": 2, "lift": 1, "phi": 1,
    "derived": 2, "embed": 1, "reduce": 1, "right_form": 1, "defect": None,
}


# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*'|[()|+\-*/^.,;]))")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def _position(source: str, pos: int):
    line = source.count("\n", 0, pos) + 1
    column = pos - (source.rfind("\n", 0, pos) + 1) + 1
    return line, column


def tokenize(source: str) -> list:
    out = []
    pos = 0
    n = len(source)
    while pos < n:
        if source[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(source, pos)
        if not m or m.end() == pos:
            raise ExprError(f"unexpected character {source[pos]!r}", *_position(source, pos))
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


# ---------------------------------------------------------------------------
# parser

class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.i]
        return ExprError(msg, *_position(self.source, tok.pos))

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def accept(self, text) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in ("*", "*'"):
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            num = Fraction(int(tok.text))
            if self.accept("/"):
                if self.tok.kind != "int":
                    raise self.error("expected an integer denominator")
                den = int(self.tok.text)
                if den == 0:
                    raise self.error("zero denominator")
                self.i += 1
                num = num / den
            return Num(num)
        if tok.kind == "ident":
            if self.tokens[self.i + 1].text == "(" and tok.text in CALLS:
                return self.call()
            self.i += 1
            return Name(tok.text)
        if tok.kind == "op" and tok.text == "(":
            if self._is_tuple():
                return self.tuple_()
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        raise self.error(f"unexpected {tok.text or 'end of input'!r}")

    def _is_tuple(self) -> bool:
        depth = 0
        for tok in self.tokens[self.i:]:
            if tok.kind != "op":
                continue
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
                if depth == 0:
                    return False
            elif tok.text == "|" and depth == 1:
                return True
        return False

    def call(self):
        name_tok = self.tok
        name = name_tok.text
        self.i += 1
        self.expect("(")
        args = []
        if not self.accept(")"):
            while True:
                args.append(self.expr())
                if self.accept(")"):
                    break
                self.expect(",")
        arity = CALLS[name]
        if arity is not None and len(args) != arity:
            raise self.error(f"{name} takes {arity} argument(s), got {len(args)}", name_tok)
        if name == "defect" and (not args or not isinstance(args[0], Name)):
            raise self.error("defect needs a law name as its first argument", name_tok)
        return Call(name, tuple(args))

    def tuple_(self):
        open_tok = self.tok
        self.i += 1
        # group slot: raw text up to the first '|'
        start = self.tok.pos
        depth = 0
        while not (self.tok.kind == "op" and self.tok.text == "|" and depth == 0):
            if self.tok.kind == "end":
                raise self.error("unterminated tuple", open_tok)
            if self.tok.text == "(":
                depth += 1
            elif self.tok.text == ")":
                depth -= 1
            self.i += 1
        group = self.source[start:self.tok.pos].strip()
        if not group:
            raise self.error("empty group slot")
        self.i += 1
        uea = self.word((".", "*"))
        self.expect("|")
        ext = self.word(("^",))
        right = None
        if self.accept("|"):
            right = self.word((".", "*"))
        self.expect(")")
        return Tuple(group, uea, ext, right)

    def word(self, seps) -> tuple:
        tok = self.tok
        if tok.kind == "int":
            if tok.text != "1":
                raise self.error("only 1 may stand for the empty word")
            self.i += 1
            return ()
        if tok.kind != "ident":
            raise self.error(f"expected a generator name, found {tok.text or 'end of input'!r}")
        names = [tok.text]
        self.i += 1
        while self.tok.kind == "op" and self.tok.text in seps:
            self.i += 1
            if self.tok.kind != "ident":
                raise self.error("expected a generator name")
            names.append(self.tok.text)
            self.i += 1
        return tuple(names)


def parse(source: str):
    return Parser(source).parse()


# ---------------------------------------------------------------------------
# printer (parse(to_source(ast)) == ast)

_PREC = {"+": 1, "-": 1, "*": 2, "*'": 2}


def to_source(node, prec: int = 0) -> str:
    if isinstance(node, Num):
        v = node.value
        text = format_coeff(v)
        return text if prec < 3 or v.denominator == 1 else f"({text})"
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Tuple):
        slots = [node.group, "*".join(node.uea) or "1", "^".join(node.ext) or "1"]
        if node.right is not None:
            slots.append("*".join(node.right) or "1")
        return "(" + " | ".join(slots) + ")"
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(to_source(a) for a in node.args) + ")"
    if isinstance(node, Neg):
        return "-" + to_source(node.arg, 3)
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        text = f"{to_source(node.left, p)} {node.op} {to_source(node.right, p + 1)}"
        return f"({text})" if p < prec else text
    raise TypeError(node)


# ---------------------------------------------------------------------------
# values

class CounitValue(Combination):
    """A finitely supported function on the group; keys are interned group indices."""

    __slots__ = ()

    def _sort_key(self, key):
        return cur.engine(self.owner).name(key)

    def _term_text(self, key):
        return f"[{cur.engine(self.owner).name(key)}]"

    def __mul__(self, other):
        if isinstance(other, CounitValue):
            eng = cur.engine(self.owner)
            acc: dict = {}
            for g, c in self.terms.items():
                for h, d in other.terms.items():
                    add_to(acc, eng.mul(g, h), c * d)
            return CounitValue(self.owner, acc, _trusted=True)
        return NotImplemented


def counit_value(ctx: Context, x) -> CounitValue:
    eng = cur.engine(ctx)
    acc: dict = {}
    for (g, v, a), c in x.terms.items():
        if not v and not a:
            add_to(acc, g, c)
    return CounitValue(ctx, acc, _trusted=True)


def render(value) -> str:
    if isinstance(value, Fraction) or isinstance(value, int):
        return format_coeff(value)
    return str(value)


def _key_json(ctx, key, kind):
    eng = cur.engine(ctx)
    basis = ctx.algebra.basis
    g, v, a = key[:3]
    out = {"group": eng.name(g), "uea" if kind != "lift" else "word": [basis[i] for i in v],
           "ext": [basis[i] for i in a]}
    if kind == "four-slot":
        out["right"] = [basis[i] for i in key[3]]
    return out


def machine_form(value, ctx: Context) -> dict:
    if isinstance(value, (int, Fraction)):
        return {"type": "scalar", "value": format_coeff(value)}
    if isinstance(value, CounitValue):
        eng = cur.engine(ctx)
        return {"type": "counit", "context": ctx.name,
                "terms": [{"group": eng.name(g), "coeff": format_coeff(c)} for g, c in value.sorted_items()]}
    if isinstance(value, tl.LiftTensorPower) or isinstance(value, cur.TensorPower):
        kind = "lift" if isinstance(value, tl.LiftTensorPower) else "current"
        return {"type": "tensor", "context": ctx.name,
                "terms": [{"factors": [_key_json(ctx, k, kind) for k in key], "coeff": format_coeff(c)}
                          for key, c in value.sorted_items()]}
    kind = {cur.CurrentElement: "current", tl.TensorLiftElement: "lift", bm.FourSlotElement: "four-slot"}.get(
        type(value))
    if kind is None:
        raise ExprError(f"cannot serialize {type(value).__name__}")
    return {"type": kind, "context": ctx.name,
            "terms": [dict(_key_json(ctx, k, kind), coeff=format_coeff(c)) for k, c in value.sorted_items()]}


def to_json(value, ctx: Context) -> str:
    return json.dumps(machine_form(value, ctx), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# evaluator

class Evaluator:
    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.index = {name: i for i, name in enumerate(ctx.algebra.basis)}

    def fail(self, node, msg):
        return ExprError(f"{msg} in {to_source(node)}")

    def evaluate(self, node, lift: bool = False):
        try:
            return self._eval(node, lift)
        except ExprError:
            raise
        except AlgebraError as exc:
            raise self.fail(node, str(exc)) from None

    def _indices(self, node, names):
        out = []
        for nm in names:
            if nm not in self.index:
                raise self.fail(node, f"unknown generator {nm!r}")
            out.append(self.index[nm])
        return tuple(out)

    def _eval(self, node, lift):
        ctx = self.ctx
        if isinstance(node, Num):
            return q(node.value)
        if isinstance(node, Name):
            raise self.fail(node, f"unknown identifier {node.name!r}")
        if isinstance(node, Tuple):
            try:
                p = ctx.parse_group(node.group)
                ctx.group.check(p)
            except AlgebraError as exc:
                raise self.fail(node, f"bad group element: {exc}") from None
            v = self._indices(node, node.uea)
            a = self._indices(node, node.ext)
            if node.right is not None:
                if lift:
                    raise self.fail(node, "four-slot tuples cannot be lifted")
                return bm.four_slot(ctx, {(p, v, a, self._indices(node, node.right)): 1})
            if lift:
                return tl.lift_element(ctx, {(p, v, a): 1})
            return cur.current(ctx, {(p, v, a): 1})
        if isinstance(node, Neg):
            val = self._eval(node.arg, lift)
            return -val
        if isinstance(node, BinOp):
            return self._binop(node, lift)
        if isinstance(node, Call):
            return self._call(node, lift)
        raise self.fail(node, "unsupported node")

    def _binop(self, node, lift):
        left = self._eval(node.left, lift)
        right = self._eval(node.right, lift)
        scalar_l = isinstance(left, (int, Fraction))
        scalar_r = isinstance(right, (int, Fraction))
        if node.op in "+-":
            if scalar_l and scalar_r:
                return q(left + right if node.op == "+" else left - right)
            if scalar_l or scalar_r:
                raise self.fail(node, "cannot add a scalar and an element")
            if type(left) is not type(right):
                raise self.fail(node, f"cannot add {type(left).__name__} and {type(right).__name__}")
            return left + right if node.op == "+" else left - right
        if scalar_l and scalar_r:
            return q(left * right)
        if scalar_l:
            return right.scale(left)
        if scalar_r:
            return left.scale(right)
        if node.op == "*'":
            if not isinstance(left, cur.CurrentElement) or not isinstance(right, cur.CurrentElement):
                raise self.fail(node, "*' needs two currents")
            return cur.groupring_convolve(left, right)
        if isinstance(left, cur.CurrentElement) and isinstance(right, cur.CurrentElement):
            return cur.convolve(left, right)
        if isinstance(left, tl.TensorLiftElement) and isinstance(right, tl.TensorLiftElement):
            return tl.lift_convolve(left, right)
        if isinstance(left, bm.FourSlotElement) and isinstance(right, bm.FourSlotElement):
            return bm.conv_mixed(left, right)
        if isinstance(left, CounitValue) and isinstance(right, CounitValue):
            return left * right
        raise self.fail(node, f"cannot multiply {type(left).__name__} by {type(right).__name__}")

    def _call(self, node, lift):
        name = node.name
        if name == "defect":
            return self._defect(node, lift)
        if name == "lift":
            val = self._eval(node.args[0], True)
            if not isinstance(val, tl.TensorLiftElement):
                raise self.fail(node, "lift needs a combination of tuples")
            return val
        args = [self._eval(a, lift) for a in node.args]
        x = args[0]
        is_cur = isinstance(x, cur.CurrentElement)
        is_lift = isinstance(x, tl.TensorLiftElement)
        if name in ("d", "S", "eps", "delta"):
            if not (is_cur or is_lift):
                raise self.fail(node, f"{name} needs a current or a lifted element")
            if name == "d":
                return cur.boundary(x) if is_cur else tl.lift_boundary(x)
            if name == "S":
                return cur.antipode(x) if is_cur else tl.lift_antipode(x)
            if name == "eps":
                return counit_value(self.ctx, x)
            return cur.coproduct(x) if is_cur else tl.lift_coproduct(x)
        if name == "phi":
            if not is_lift:
                raise self.fail(node, "phi needs a lifted element")
            return tl.phi(x)
        if name in ("smash", "derived"):
            if not all(isinstance(a, cur.CurrentElement) for a in args):
                raise self.fail(node, f"{name} needs two currents")
            return cur.smash_product(*args) if name == "smash" else bm.derived_convolution(*args)
        if name == "embed":
            if not is_cur:
                raise self.fail(node, "embed needs a current")
            return bm.embed(x)
        if name in ("reduce", "right_form"):
            if not isinstance(x, bm.FourSlotElement):
                raise self.fail(node, f"{name} needs a four-slot element")
            return bm.reduce(x) if name == "reduce" else bm.to_right_form(x)
        raise self.fail(node, f"unknown function {name!r}")

    def _defect(self, node, lift):
        from .laws import ALL_LAWS, current_structure, lift_structure

        law = node.args[0].name.replace("_", "-")
        if law not in ALL_LAWS:
            raise self.fail(node, f"unknown law {law!r}")
        fn, arity = ALL_LAWS[law]
        args = [self._eval(a, lift) for a in node.args[1:]]
        if len(args) != arity:
            raise self.fail(node, f"law {law} takes {arity} element(s)")
        if all(isinstance(a, cur.CurrentElement) for a in args):
            st = current_structure(self.ctx)
        elif all(isinstance(a, tl.TensorLiftElement) for a in args):
            st = lift_structure(self.ctx)
        else:
            raise self.fail(node, "defect needs currents or lifted elements of one kind")
        lhs, rhs = fn(st, *[a.terms for a in args])
        diff = dict(lhs)
        for k, c in rhs.items():
            add_to(diff, k, -c)
        if not diff:
            return st.wrap({})
        sample = next(iter(diff))
        if isinstance(sample, int):
            return CounitValue(self.ctx, diff, _trusted=True)
        if isinstance(sample[0], tuple):
            return st.wrap_power(diff)
        return st.wrap(diff)


def evaluate(source_or_ast, ctx: Context):
    node = parse(source_or_ast) if isinstance(source_or_ast, str) else source_or_ast
    return Evaluator(ctx).evaluate(node)


def evaluate_text(source: str, ctx: Context) -> tuple:
    """Canonical text and machine form (compact JSON) of an expression's value."""
    value = evaluate(source, ctx)
    return render(value), to_json(value, ctx)


def element_source(x) -> str:
    """Source text that evaluates to ``x`` (currents, lifted and four-slot elements)."""
    text = str(x)
    if isinstance(x, tl.TensorLiftElement):
        return f"lift({text})"
    return text if len(x) <= 1 and not text.startswith("-") else f"({text})"


__all__ = [
    "ExprError", "Num", "Tuple", "Name", "Call", "BinOp", "Neg", "parse", "to_source", "tokenize",
    "Evaluator", "evaluate", "evaluate_text", "render", "machine_form", "to_json", "CounitValue",
    "counit_value", "element_source",
]
