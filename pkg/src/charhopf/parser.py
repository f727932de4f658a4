"""Recursive-descent parser for element expressions.

Grammar (juxtaposition is multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*
    unary  := '-' unary | power
    power  := atom ('^' '-'? INT)?
    atom   := INT | x<i> | g<i> | g '(' INT ')' | p<ij> | q | lambda
            | CALL '(' args ')' | '(' expr ')'

``CALL`` is one of serreL, serreR, bracedL, bracedR, bracedP, bracket, g2top.
Rationals are written ``3/4``.  Scalar identifiers are resolved through the
mode's parameter table, so ``q`` means ``p22`` in free mode and ``p21`` means
``q^-3 p12^-1`` in G2 mode.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chargroup import ParamTable
from .errors import ModeError
from .freealg import SkewElement, SkewGroupAlgebra
from .scalars import Scalar
from .shuffle import ShuffleAlgebra

CALLS = ("serreL", "serreR", "bracedL", "bracedR", "bracedP", "bracket", "g2top")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<call>(?:serreL|serreR|bracedL|bracedR|bracedP|bracket|g2top)(?=\s*\())
  | (?P<name>[A-Za-z]+\d*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)


class ExpressionError(ValueError):
    """Syntax or evaluation error; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionError(f"syntax error: unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class GroupCall:
    index: "Node"
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int


Node = Num | Name | GroupCall | Call | BinOp | Neg | Pow


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ExpressionError(f"syntax error: expected {text!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ExpressionError(f"syntax error: unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.pos)
        return node

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name", "call") or t.text == "("

    def term(self) -> Node:
        node = self.unary()
        while True:
            if self.tok.text in ("*", "/"):
                op = self.advance()
                node = BinOp(op.text, node, self.unary(), op.pos)
            elif self._starts_atom():
                pos = self.tok.pos
                node = BinOp("*", node, self.power(), pos)
            else:
                return node

    def unary(self) -> Node:
        if self.tok.text == "-":
            op = self.advance()
            return Neg(self.unary(), op.pos)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.text == "^":
            op = self.advance()
            sign = 1
            if self.tok.text == "-":
                self.advance()
                sign = -1
            if self.tok.kind != "int":
                raise ExpressionError("syntax error: exponent must be an integer", self.tok.pos)
            return Pow(base, sign * int(self.advance().text), op.pos)
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Num(int(t.text), t.pos)
        if t.kind == "call":
            self.advance()
            self.expect("(")
            args = []
            if self.tok.text != ")":
                args.append(self.expr())
                while self.tok.text == ",":
                    self.advance()
                    args.append(self.expr())
            self.expect(")")
            return Call(t.text, tuple(args), t.pos)
        if t.kind == "name":
            self.advance()
            if t.text == "g" and self.tok.text == "(":
                self.advance()
                index = self.expr()
                self.expect(")")
                return GroupCall(index, t.pos)
            return Name(t.text, t.pos)
        if t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ExpressionError(f"syntax error: unexpected {found!r}", t.pos)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST."""
    return _Parser(text).parse()


# -- evaluation ------------------------------------------------------------------

@dataclass(frozen=True)
class EngineConfig:
    n: int = 2
    mode: str = "free"
    format: str = "text"

    def __post_init__(self):
        if self.mode not in ("free", "g2"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "g2" and self.n != 2:
            raise ValueError("g2 mode requires n = 2")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.format not in ("text", "latex", "json"):
            raise ValueError(f"unknown format {self.format!r}")

    def params(self) -> ParamTable:
        return ParamTable.g2() if self.mode == "g2" else ParamTable.free(self.n)


_PARAM = re.compile(r"p(\d)(\d)")


class Engine:
    """Evaluates ASTs in the algebra fixed by an :class:`EngineConfig`."""

    def __init__(self, config: EngineConfig | None = None):
        self.config = config or EngineConfig()
        params = self.config.params()
        self.algebra = SkewGroupAlgebra(params)
        self.shuffle = ShuffleAlgebra(params)
        self._names = params.bindings()
        if params.mode == "free":
            self._names["q"] = params.p(min(2, params.n), min(2, params.n))

    def parse(self, text: str) -> SkewElement | Scalar:
        return self.evaluate(parse(text))

    def _index(self, i: int, pos: int) -> int:
        if not 1 <= i <= self.algebra.n:
            raise ExpressionError(f"index {i} out of range 1..{self.algebra.n}", pos)
        return i

    def _int_arg(self, node: Node) -> int:
        v = self.evaluate(node)
        if isinstance(v, Scalar) and v.is_polynomial() and not v.variables():
            c = v.num.coefficient(())
            if c.denominator == 1:
                return int(c)
        raise ExpressionError("expected an integer argument", node.pos)

    def _name(self, node: Name):
        name = node.name
        if name in self._names:
            return self._names[name]
        if name == "lambda":
            return Scalar.var("lambda")
        m = re.fullmatch(r"([xg])(\d+)", name)
        if m:
            i = self._index(int(m.group(2)), node.pos)
            return self.algebra.x(i) if m.group(1) == "x" else self.algebra.g(i)
        if _PARAM.fullmatch(name):
            a, b = (int(c) for c in name[1:])
            self._index(a, node.pos)
            self._index(b, node.pos)
        raise ExpressionError(f"unknown identifier {name!r}", node.pos)

    def _call(self, node: Call):
        A = self.algebra
        name, args = node.name, node.args
        arity = {"serreL": 3, "serreR": 3, "bracedL": 3, "bracedR": 3,
                 "bracedP": 2, "bracket": 2, "g2top": 0}[name]
        if len(args) != arity:
            raise ExpressionError(f"{name} takes {arity} arguments, got {len(args)}", node.pos)
        if name == "g2top":
            if A.params.mode != "g2":
                raise ModeError("g2top requires g2 mode")
            from .g2 import g2_top_element
            return g2_top_element(A)
        if name == "bracket":
            a, b = (self._as_element(self.evaluate(x)) for x in args)
            return A.bracket(a, b)
        ints = [self._int_arg(x) for x in args]
        if name == "bracedP":
            i, n = ints
            self._index(i, args[0].pos)
            return A.braced_power(i, self._count(n, args[1]))
        if name in ("serreL", "bracedL"):
            i, j, n = ints
            idx, cnt = (i, j), n
            poss = (args[0].pos, args[1].pos)
        else:
            j, n, i = ints
            idx, cnt = (i, j), n
            poss = (args[2].pos, args[0].pos)
        for v, p in zip(idx, poss):
            self._index(v, p)
        if i == j:
            raise ExpressionError(f"{name} needs distinct indices", node.pos)
        cnt = self._count(cnt, args[2] if name.endswith("L") else args[1])
        return {"serreL": lambda: A.serre_left(i, j, cnt),
                "bracedL": lambda: A.braced_left(i, j, cnt),
                "serreR": lambda: A.serre_right(j, cnt, i),
                "bracedR": lambda: A.braced_right(j, cnt, i)}[name]()

    @staticmethod
    def _count(n: int, node: Node) -> int:
        if n < 0:
            raise ExpressionError("exponent argument must be nonnegative", node.pos)
        return n

    def _as_element(self, v) -> SkewElement:
        return v if isinstance(v, SkewElement) else self.algebra.scalar(v)

    def evaluate(self, node: Node):
        if isinstance(node, Num):
            return Scalar.const(node.value)
        if isinstance(node, Name):
            return self._name(node)
        if isinstance(node, GroupCall):
            i = self._index(self._int_arg(node.index), node.pos)
            return self.algebra.g(i)
        if isinstance(node, Call):
            return self._call(node)
        if isinstance(node, Neg):
            return -self.evaluate(node.operand)
        if isinstance(node, Pow):
            base = self.evaluate(node.base)
            if isinstance(base, SkewElement) and node.exponent < 0:
                if len(base.terms) == 1:
                    ((g, w), c), = base.terms.items()
                    if not w:
                        return self.algebra.monomial(tuple(-e for e in g), (), c ** node.exponent)
                raise ExpressionError("negative power of a non-invertible element", node.pos)
            if isinstance(base, Scalar) and base.is_zero() and node.exponent < 0:
                raise ExpressionError("zero divisor", node.pos)
            return base ** node.exponent
        if isinstance(node, BinOp):
            a = self.evaluate(node.left)
            if node.op == "/":
                inv = _inverse(node.right, self.evaluate)
                return a * inv if isinstance(a, Scalar) else a.scale(inv)
            b = self.evaluate(node.right)
            if not (isinstance(a, Scalar) and isinstance(b, Scalar)):
                a, b = self._as_element(a), self._as_element(b)
            return _arith(node.op, a, b)
        raise TypeError(node)


def _inverse(node: Node, evaluate) -> Scalar:
    """Inverse of a scalar node, inverted factor by factor so that a factored
    denominator such as ``(1 - q)*(1 + q)^2`` stays factored."""
    if isinstance(node, BinOp) and node.op == "*":
        return _inverse(node.left, evaluate) * _inverse(node.right, evaluate)
    if isinstance(node, BinOp) and node.op == "/":
        return _inverse(node.left, evaluate) * evaluate(node.right)
    if isinstance(node, Pow):
        return _inverse(node.base, evaluate) ** node.exponent
    v = evaluate(node)
    if not isinstance(v, Scalar):
        raise ExpressionError("division by a non-scalar", node.pos)
    if v.is_zero():
        raise ExpressionError("zero divisor", node.pos)
    return v.inv()


def _arith(op: str, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    return a * b


def parse_expression(text: str, config: EngineConfig | None = None):
    """Parse and evaluate ``text`` in a fresh engine."""
    return Engine(config).parse(text)


def evaluate(ast: Node, config: EngineConfig | None = None):
    return Engine(config).evaluate(ast)


def parse_scalar(text: str) -> Scalar:
    """Parse a rational expression in raw indeterminate names (no mode aliasing)."""
    return _scalar_eval(parse(text))


def _scalar_eval(node: Node) -> Scalar:
    if isinstance(node, Num):
        return Scalar.const(node.value)
    if isinstance(node, Name):
        if not re.fullmatch(r"p\d\d|q|lambda", node.name):
            raise ExpressionError(f"unknown scalar identifier {node.name!r}", node.pos)
        return Scalar.var(node.name)
    if isinstance(node, Neg):
        return -_scalar_eval(node.operand)
    if isinstance(node, Pow):
        return _scalar_eval(node.base) ** node.exponent
    if isinstance(node, BinOp):
        a = _scalar_eval(node.left)
        if node.op == "/":
            return a * _inverse(node.right, _scalar_eval)
        return _arith(node.op, a, _scalar_eval(node.right))
    raise ExpressionError("not a scalar expression", getattr(node, "pos", None))
