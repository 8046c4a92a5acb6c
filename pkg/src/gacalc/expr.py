"""Expression language over the algebra: lexer, parser, evaluator, and REPL.

Statements come in three forms:

    let name = expr          bind a variable
    assert expr ~ expr tol   compare two expressions (tol optional)
    expr                     evaluate and show the result

Precedence, tightest first: postfix ``~`` (reverse) and function calls,
unary ``-``, then ``^`` and ``.`` on one tier (left-associative), then
``*`` and ``/``, then ``+`` and ``-``.  Parentheses override.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import TextIO, Union

from .algebra import (
    DEFAULT_TOL,
    G3,
    AlgebraError,
    Multivector,
    Signature,
    blade_bits,
    cross,
    dual,
)
from .geometry import Line, distance_to_line
from .stereo import prob_minus, prob_plus, stereo_project, stereo_unproject
from .transforms import (
    project,
    reflect_in_plane,
    reflect_normal,
    reject,
    rotate,
    rotor_between,
    rotor_from_reflections,
)

__all__ = [
    "AssertOutcome",
    "AssertStmt",
    "BinOp",
    "BladeRef",
    "Call",
    "Environment",
    "EvalError",
    "ExprStmt",
    "FUNCTIONS",
    "GaSyntaxError",
    "Let",
    "LexError",
    "Neg",
    "Num",
    "ParseError",
    "Rev",
    "Token",
    "Var",
    "evaluate",
    "execute_statement",
    "format_assert_failure",
    "parse_expression",
    "parse_signature",
    "parse_statement",
    "repl_loop",
    "run_command",
    "tokenize",
]


class GaSyntaxError(ValueError):
    """Input rejected before evaluation; span gives [start, end) offsets."""

    def __init__(self, message: str, start: int, end: int) -> None:
        super().__init__(f"{message} (at {start}..{end})")
        self.span = (start, end)


class LexError(GaSyntaxError):
    pass


class ParseError(GaSyntaxError):
    pass


class EvalError(ValueError):
    """Expression is well formed but cannot be evaluated."""


# -- lexer ---------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # number | ident | operator | paren | comma | assign
    lexeme: str
    start: int
    end: int


_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_BLADE_RE = re.compile(r"e[0-9]+")
_OPERATORS = frozenset("+-*/^.~")
_KEYWORDS = frozenset({"let", "assert"})


def _check_blade_ident(lexeme: str, start: int, end: int) -> None:
    digits = lexeme[1:]
    if "0" in digits:
        raise LexError(f"blade index 0 in '{lexeme}'; indices run from 1", start, end)
    if any(a >= b for a, b in zip(digits, digits[1:])):
        raise LexError(
            f"non-canonical blade '{lexeme}'; indices must strictly ascend", start, end
        )


def _is_digit(c: str) -> bool:
    # ASCII only; unicode digits would otherwise sneak through str.isdigit
    return "0" <= c <= "9"


def _is_ident_start(c: str) -> bool:
    return c == "_" or "a" <= c <= "z" or "A" <= c <= "Z"


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; ``#`` starts a comment running to the end."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c == "#":
            break
        start = i
        if _is_digit(c):
            i += 1
            while i < n and _is_digit(text[i]):
                i += 1
            # a decimal point counts only when a digit follows, so "2." is
            # the number 2 and then a contraction operator
            if i + 1 < n and text[i] == "." and _is_digit(text[i + 1]):
                i += 2
                while i < n and _is_digit(text[i]):
                    i += 1
            # an exponent needs an explicit sign: "1e-5" is one number but
            # "1e5" is the number 1 followed by the blade e5
            if i + 2 < n and text[i] in "eE" and text[i + 1] in "+-" and _is_digit(text[i + 2]):
                i += 3
                while i < n and _is_digit(text[i]):
                    i += 1
            tokens.append(Token("number", text[start:i], start, i))
            continue
        if _is_ident_start(c):
            match = _IDENT_RE.match(text, i)
            assert match is not None
            lexeme = match.group(0)
            i = match.end()
            if _BLADE_RE.fullmatch(lexeme):
                _check_blade_ident(lexeme, start, i)
            tokens.append(Token("ident", lexeme, start, i))
            continue
        if c in _OPERATORS:
            tokens.append(Token("operator", c, i, i + 1))
        elif c in "()":
            tokens.append(Token("paren", c, i, i + 1))
        elif c == ",":
            tokens.append(Token("comma", c, i, i + 1))
        elif c == "=":
            tokens.append(Token("assign", c, i, i + 1))
        else:
            raise LexError(f"unknown character {c!r}", i, i + 1)
        i += 1
    return tokens


# -- syntax tree ---------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class BladeRef:
    name: str


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "AstNode"


@dataclass(frozen=True)
class Rev:
    operand: "AstNode"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^ .
    left: "AstNode"
    right: "AstNode"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["AstNode", ...]


AstNode = Union[Num, BladeRef, Var, Neg, Rev, BinOp, Call]


@dataclass(frozen=True)
class Let:
    name: str
    expr: AstNode


@dataclass(frozen=True)
class AssertStmt:
    left: AstNode
    right: AstNode
    tol: float | None  # None means the environment default


@dataclass(frozen=True)
class ExprStmt:
    expr: AstNode


Statement = Union[Let, AssertStmt, ExprStmt]


# name -> arity; the registry is fixed, no user-defined functions
FUNCTIONS: dict[str, int] = {
    "exp": 1,
    "rev": 1,
    "inv": 1,
    "grade": 2,
    "norm": 1,
    "dual": 1,
    "cross": 2,
    "proj": 2,
    "rej": 2,
    "reflect": 2,
    "reflectn": 2,
    "rot": 2,
    "rotor": 2,
    "rotor2": 2,
    "stereo": 1,
    "unstereo": 1,
    "probp": 2,
    "probm": 2,
    "dist": 3,
}


# -- parser --------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self._pos = 0

    def peek(self) -> Token | None:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return None

    def advance(self) -> Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _fail_eof(self, expected: str) -> None:
        at = self._tokens[-1].end if self._tokens else 0
        raise ParseError(f"unexpected end of input; expected {expected}", at, at)

    def expect_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.lexeme!r}", tok.start, tok.end)

    def _at_operator(self, lexemes: str) -> Token | None:
        tok = self.peek()
        if tok is not None and tok.kind == "operator" and tok.lexeme in lexemes:
            return tok
        return None

    def parse_expr(self) -> AstNode:
        node = self.parse_term()
        while (tok := self._at_operator("+-")) is not None:
            self.advance()
            node = BinOp(tok.lexeme, node, self.parse_term())
        return node

    def parse_term(self) -> AstNode:
        node = self.parse_contraction()
        while (tok := self._at_operator("*/")) is not None:
            self.advance()
            node = BinOp(tok.lexeme, node, self.parse_contraction())
        return node

    def parse_contraction(self) -> AstNode:
        node = self.parse_unary()
        while (tok := self._at_operator("^.")) is not None:
            self.advance()
            node = BinOp(tok.lexeme, node, self.parse_unary())
        return node

    def parse_unary(self) -> AstNode:
        if self._at_operator("-") is not None:
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self) -> AstNode:
        node = self.parse_primary()
        while self._at_operator("~") is not None:
            self.advance()
            node = Rev(node)
        return node

    def parse_primary(self) -> AstNode:
        tok = self.peek()
        if tok is None:
            self._fail_eof("an expression")
        assert tok is not None
        if tok.kind == "number":
            self.advance()
            return Num(float(tok.lexeme))
        if tok.kind == "ident":
            self.advance()
            if tok.lexeme in _KEYWORDS:
                raise ParseError(
                    f"reserved word '{tok.lexeme}' cannot appear here", tok.start, tok.end
                )
            nxt = self.peek()
            if nxt is not None and nxt.kind == "paren" and nxt.lexeme == "(":
                return self._parse_call(tok)
            if _BLADE_RE.fullmatch(tok.lexeme):
                return BladeRef(tok.lexeme)
            return Var(tok.lexeme)
        if tok.kind == "paren" and tok.lexeme == "(":
            self.advance()
            node = self.parse_expr()
            closing = self.peek()
            if closing is None:
                self._fail_eof("')'")
            assert closing is not None
            if closing.kind != "paren" or closing.lexeme != ")":
                raise ParseError(
                    f"expected ')', found {closing.lexeme!r}", closing.start, closing.end
                )
            self.advance()
            return node
        raise ParseError(f"unexpected {tok.lexeme!r}", tok.start, tok.end)

    def _parse_call(self, name_tok: Token) -> AstNode:
        name = name_tok.lexeme
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function '{name}'", name_tok.start, name_tok.end)
        self.advance()  # the opening paren
        args: list[AstNode] = []
        tok = self.peek()
        if tok is not None and tok.kind == "paren" and tok.lexeme == ")":
            self.advance()
        else:
            while True:
                args.append(self.parse_expr())
                tok = self.peek()
                if tok is None:
                    self._fail_eof("',' or ')'")
                assert tok is not None
                if tok.kind == "comma":
                    self.advance()
                    continue
                if tok.kind == "paren" and tok.lexeme == ")":
                    self.advance()
                    break
                raise ParseError(
                    f"expected ',' or ')', found {tok.lexeme!r}", tok.start, tok.end
                )
        if len(args) != FUNCTIONS[name]:
            raise ParseError(
                f"'{name}' takes {FUNCTIONS[name]} argument(s), got {len(args)}",
                name_tok.start,
                name_tok.end,
            )
        return Call(name, tuple(args))


def _parse_full(tokens: list[Token]) -> AstNode:
    parser = _Parser(tokens)
    node = parser.parse_expr()
    parser.expect_end()
    return node


def parse_expression(text: str) -> AstNode:
    return _parse_full(tokenize(text))


def _starts_expression(tok: Token) -> bool:
    if tok.kind in ("number", "ident"):
        return True
    if tok.kind == "paren" and tok.lexeme == "(":
        return True
    return tok.kind == "operator" and tok.lexeme == "-"


def _find_assert_separator(tokens: list[Token]) -> int | None:
    # the separator is the first depth-0 "~" that is followed by something
    # able to start an expression; earlier "~" tokens are postfix reverses
    depth = 0
    for idx, tok in enumerate(tokens):
        if tok.kind == "paren":
            depth += 1 if tok.lexeme == "(" else -1
        elif depth == 0 and tok.kind == "operator" and tok.lexeme == "~":
            if idx + 1 < len(tokens) and _starts_expression(tokens[idx + 1]):
                return idx
    return None


def parse_statement(text: str) -> Statement:
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty statement", 0, len(text))
    head = tokens[0]
    if head.kind == "ident" and head.lexeme == "let":
        if len(tokens) < 2 or tokens[1].kind != "ident":
            raise ParseError("expected a name after 'let'", head.start, head.end)
        name_tok = tokens[1]
        name = name_tok.lexeme
        if name in _KEYWORDS:
            raise ParseError(f"'{name}' is a reserved word", name_tok.start, name_tok.end)
        if _BLADE_RE.fullmatch(name):
            raise ParseError(
                f"cannot bind basis blade '{name}'", name_tok.start, name_tok.end
            )
        if len(tokens) < 3 or tokens[2].kind != "assign":
            raise ParseError("expected '=' after the name", name_tok.start, name_tok.end)
        return Let(name, _parse_full(tokens[3:]))
    if head.kind == "ident" and head.lexeme == "assert":
        body = tokens[1:]
        sep = _find_assert_separator(body)
        if sep is None:
            raise ParseError("assert needs '~' between two expressions", head.start, head.end)
        left = _parse_full(body[:sep])
        parser = _Parser(body[sep + 1 :])
        right = parser.parse_expr()
        tol: float | None = None
        trailing = parser.peek()
        if trailing is not None and trailing.kind == "number":
            parser.advance()
            tol = float(trailing.lexeme)
        parser.expect_end()
        return AssertStmt(left, right, tol)
    return ExprStmt(_parse_full(tokens))


# -- evaluation ----------------------------------------------------------


# blade names use one digit per basis vector, which caps the dimension
MAX_LANGUAGE_DIM = 9


def parse_signature(text: str) -> Signature:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"signature must look like 'p,q', got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"signature must be two integers 'p,q', got {text!r}") from None
    try:
        sig = Signature(p, q)
    except AlgebraError as exc:
        raise ValueError(str(exc)) from None
    if sig.dim > MAX_LANGUAGE_DIM:
        raise ValueError(
            f"dimension {sig.dim} exceeds the language limit {MAX_LANGUAGE_DIM}"
        )
    return sig


@dataclass
class Environment:
    sig: Signature = G3
    tol: float = DEFAULT_TOL
    bindings: dict[str, Multivector] = field(default_factory=dict)

    def set_signature(self, sig: Signature) -> None:
        # bound values belong to the old algebra, so drop them
        self.sig = sig
        self.bindings.clear()


def _grade_selector(arg: Multivector) -> int:
    if arg.grades() not in ((), (0,)):
        raise EvalError("grade() selector must be a number")
    k = arg.scalar_part()
    if k != int(k):
        raise EvalError("grade() selector must be an integer")
    return int(k)


def _apply(name: str, args: list[Multivector], env: Environment) -> Multivector:
    def scalar(value: float) -> Multivector:
        return Multivector.scalar(env.sig, value)

    if name == "exp":
        return args[0].exp(env.tol)
    if name == "rev":
        return ~args[0]
    if name == "inv":
        return args[0].inverse(env.tol)
    if name == "grade":
        return args[0].grade(_grade_selector(args[1]))
    if name == "norm":
        return scalar(args[0].norm())
    if name == "dual":
        return dual(args[0])
    if name == "cross":
        return cross(args[0], args[1])
    if name == "proj":
        return project(args[0], args[1])
    if name == "rej":
        return reject(args[0], args[1])
    if name == "reflect":
        return reflect_in_plane(args[0], args[1], env.tol)
    if name == "reflectn":
        return reflect_normal(args[0], args[1], env.tol)
    if name == "rot":
        return rotate(args[0], args[1], env.tol)
    if name == "rotor":
        return rotor_between(args[0], args[1], env.tol)
    if name == "rotor2":
        return rotor_from_reflections(args[0], args[1], env.tol)
    if name == "stereo":
        return stereo_project(args[0], env.tol)
    if name == "unstereo":
        return stereo_unproject(args[0], env.tol)
    if name == "probp":
        return scalar(prob_plus(args[0], args[1], env.tol))
    if name == "probm":
        return scalar(prob_minus(args[0], args[1], env.tol))
    if name == "dist":
        return scalar(distance_to_line(Line(args[0], args[1]), args[2]))
    raise EvalError(f"unknown function '{name}'")


def evaluate(node: AstNode, env: Environment) -> Multivector:
    if isinstance(node, Num):
        return Multivector.scalar(env.sig, node.value)
    if isinstance(node, BladeRef):
        indices = tuple(int(ch) for ch in node.name[1:])
        if max(indices) > env.sig.dim:
            raise EvalError(f"blade '{node.name}' does not fit in {env.sig}")
        return Multivector.blade(env.sig, blade_bits(indices))
    if isinstance(node, Var):
        try:
            return env.bindings[node.name]
        except KeyError:
            raise EvalError(f"unbound variable '{node.name}'") from None
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    if isinstance(node, Rev):
        return ~evaluate(node.operand, env)
    if isinstance(node, BinOp):
        left = evaluate(node.left, env)
        right = evaluate(node.right, env)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            return left / right
        if node.op == "^":
            return left ^ right
        return left | right  # "."
    return _apply(node.name, [evaluate(arg, env) for arg in node.args], env)


@dataclass(frozen=True)
class AssertOutcome:
    passed: bool
    gap: float
    tol: float


def execute_statement(
    stmt: Statement, env: Environment
) -> Multivector | AssertOutcome | None:
    """Run one statement: None for let, a value for an expression,
    an AssertOutcome for assert."""
    if isinstance(stmt, Let):
        env.bindings[stmt.name] = evaluate(stmt.expr, env)
        return None
    if isinstance(stmt, AssertStmt):
        left = evaluate(stmt.left, env)
        right = evaluate(stmt.right, env)
        tol = env.tol if stmt.tol is None else stmt.tol
        gap = (left - right).norm()
        return AssertOutcome(gap <= tol, gap, tol)
    return evaluate(stmt.expr, env)


# -- REPL ----------------------------------------------------------------


def run_command(line: str, env: Environment, stdout: TextIO) -> str:
    parts = line.split(None, 1)
    name = parts[0]
    arg = parts[1].strip() if len(parts) > 1 else ""
    if name == ":quit":
        return "quit"
    if name == ":sig":
        try:
            env.set_signature(parse_signature(arg))
        except ValueError as exc:
            stdout.write(f"error: {exc}\n")
        return "ok"
    if name == ":tol":
        try:
            value = float(arg)
        except ValueError:
            stdout.write(f"error: ':tol' needs a number, got {arg!r}\n")
            return "ok"
        if not math.isfinite(value) or value <= 0:
            stdout.write("error: tolerance must be a positive finite number\n")
            return "ok"
        env.tol = value
        return "ok"
    stdout.write(f"error: unknown command '{name}'\n")
    return "ok"


def format_assert_failure(outcome: AssertOutcome) -> str:
    return (
        f"assert failed: |lhs - rhs| = {outcome.gap:.17g}"
        f" exceeds tolerance {outcome.tol:.17g}"
    )


def repl_loop(env: Environment, stdin: TextIO, stdout: TextIO) -> int:
    """Read statements line by line until :quit or end of input; always 0."""
    prompt = "ga> " if stdin.isatty() else ""
    while True:
        if prompt:
            stdout.write(prompt)
            stdout.flush()
        line = stdin.readline()
        if line == "":
            return 0
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith(":"):
            if run_command(stripped, env, stdout) == "quit":
                return 0
            continue
        try:
            result = execute_statement(parse_statement(stripped), env)
        except (GaSyntaxError, EvalError, AlgebraError) as exc:
            stdout.write(f"error: {exc}\n")
            continue
        if isinstance(result, Multivector):
            stdout.write(f"{result}\n")
        elif isinstance(result, AssertOutcome):
            stdout.write("ok\n" if result.passed else f"{format_assert_failure(result)}\n")
