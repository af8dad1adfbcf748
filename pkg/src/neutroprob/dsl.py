"""Expression language for declaring events and querying their probabilities.

A program is a sequence of declarations and queries::

    # the visa applicant
    let Popescu = ((40%..60%), (20%..25%) U (30%..35%), {10%, 20%, 30%})
    NP(Popescu)
    classify(Popescu)
    NP(Popescu and not Popescu)

Set literals use ``..`` as the range separator (a bare ``-`` would
collide with negative numbers and with monad suffixes); both ``(a..b)``
and ``[a..b]`` denote closed pieces.  A ``-`` or ``+`` glued directly to
a numeral (or to its percent sign) is a monad suffix: ``0-`` and ``1+``
are the tagged endpoints of the non-standard unit interval ``0-..1+``.
Comments run from ``#`` to end of line; statements separate by newline
or ``;``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from typing import Mapping, Optional, Union

from .nonstandard import Bound, MonadTag
from .nsset import NSSet, Piece, format_pieces
from .probability import ClassificationReport, ComponentFlag, Label, NPTriple, classify
from .worlds import NOT_APPLICABLE


class TokenKind(Enum):
    NUMBER = auto()
    PERCENT = auto()
    MONAD_MINUS = auto()
    MONAD_PLUS = auto()
    IDENT = auto()
    LET = auto()
    AND = auto()
    OR = auto()
    NOT = auto()
    NP = auto()
    CLASSIFY = auto()
    LPAREN = auto()
    RPAREN = auto()
    LBRACKET = auto()
    RBRACKET = auto()
    LBRACE = auto()
    RBRACE = auto()
    COMMA = auto()
    DOTDOT = auto()
    UNION = auto()
    EQUALS = auto()
    MINUS = auto()
    EOF = auto()


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    col: int


class SourceError(ValueError):
    """Error carrying a 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class LexError(SourceError):
    pass


class ParseError(SourceError):
    """Syntax error; such input is not a well-formed program.

    `valuation` is the not-applicable marker the logic side assigns to
    malformed statements.
    """

    valuation = NOT_APPLICABLE

    def __init__(self, message: str, line: int, col: int, expected: frozenset = frozenset()):
        super().__init__(message, line, col)
        self.expected = expected


class EvalError(ValueError):
    def __init__(self, message: str, name: Optional[str] = None):
        super().__init__(message)
        self.name = name


_KEYWORDS = {
    "let": TokenKind.LET,
    "and": TokenKind.AND,
    "or": TokenKind.OR,
    "not": TokenKind.NOT,
    "NP": TokenKind.NP,
    "classify": TokenKind.CLASSIFY,
}

_PUNCT = {
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "[": TokenKind.LBRACKET,
    "]": TokenKind.RBRACKET,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    ",": TokenKind.COMMA,
    "=": TokenKind.EQUALS,
}


def tokenize(src: str) -> list[Token]:
    """Lex a program.  Raises LexError with the position of the first bad
    character; otherwise the whole input tokenizes."""
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(src)
    last_end = -1  # absolute index just past the previous token

    def emit(kind: TokenKind, lexeme: str, at_line: int, at_col: int, end: int) -> None:
        nonlocal last_end
        tokens.append(Token(kind, lexeme, at_line, at_col))
        last_end = end

    while i < n:
        ch = src[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r;":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
                col += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            if j + 1 < n and src[j] == "." and src[j + 1].isdigit():
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
            elif j + 1 < n and src[j] == "/" and src[j + 1].isdigit():
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
            emit(TokenKind.NUMBER, src[i:j], line, col, j)
            col += j - i
            i = j
            continue
        if ch == "%":
            emit(TokenKind.PERCENT, ch, line, col, i + 1)
            i += 1
            col += 1
            continue
        if ch in "+-":
            # Glued to a numeral (or its percent sign) and not starting a
            # number: a monad suffix.
            suffix_position = (
                tokens
                and tokens[-1].kind in (TokenKind.NUMBER, TokenKind.PERCENT)
                and last_end == i
                and not (i + 1 < n and src[i + 1].isdigit())
            )
            if suffix_position:
                kind = TokenKind.MONAD_MINUS if ch == "-" else TokenKind.MONAD_PLUS
                emit(kind, ch, line, col, i + 1)
            elif ch == "-":
                emit(TokenKind.MINUS, ch, line, col, i + 1)
            else:
                raise LexError("unexpected '+'", line, col)
            i += 1
            col += 1
            continue
        if ch == ".":
            if i + 1 < n and src[i + 1] == ".":
                emit(TokenKind.DOTDOT, "..", line, col, i + 2)
                i += 2
                col += 2
                continue
            raise LexError("unexpected '.' (ranges use '..')", line, col)
        if ch in _PUNCT:
            emit(_PUNCT[ch], ch, line, col, i + 1)
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            word = src[i:j]
            if word == "U":
                kind = TokenKind.UNION
            else:
                kind = _KEYWORDS.get(word, TokenKind.IDENT)
            emit(kind, word, line, col, j)
            col += j - i
            i = j
            continue
        raise LexError(f"unexpected character {ch!r}", line, col)

    tokens.append(Token(TokenKind.EOF, "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Not, And, Or]


class QueryKind(Enum):
    NP = "NP"
    CLASSIFY = "classify"


@dataclass(frozen=True)
class Decl:
    name: str
    value: NPTriple


@dataclass(frozen=True)
class Query:
    kind: QueryKind
    expr: Expr


@dataclass(frozen=True)
class Program:
    statements: tuple[Union[Decl, Query], ...]

    @property
    def declarations(self) -> tuple[Decl, ...]:
        return tuple(s for s in self.statements if isinstance(s, Decl))

    @property
    def queries(self) -> tuple[Query, ...]:
        return tuple(s for s in self.statements if isinstance(s, Query))


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def match(self, kind: TokenKind) -> Optional[Token]:
        if self.peek().kind is kind:
            return self.advance()
        return None

    def expect(self, kind: TokenKind, what: str) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            raise self.error(f"expected {what}", {kind})
        return self.advance()

    def error(self, message: str, expected: set = frozenset()) -> ParseError:
        tok = self.peek()
        found = tok.lexeme if tok.kind is not TokenKind.EOF else "end of input"
        return ParseError(
            f"{message}, found {found!r}",
            tok.line,
            tok.col,
            frozenset(k.name for k in expected),
        )

    # program := (decl | query)*
    def program(self) -> Program:
        statements: list[Union[Decl, Query]] = []
        while self.peek().kind is not TokenKind.EOF:
            kind = self.peek().kind
            if kind is TokenKind.LET:
                statements.append(self.decl())
            elif kind in (TokenKind.NP, TokenKind.CLASSIFY):
                statements.append(self.query())
            else:
                raise self.error(
                    "expected 'let', 'NP', or 'classify'",
                    {TokenKind.LET, TokenKind.NP, TokenKind.CLASSIFY},
                )
        return Program(tuple(statements))

    def decl(self) -> Decl:
        self.expect(TokenKind.LET, "'let'")
        name = self.expect(TokenKind.IDENT, "an event name").lexeme
        self.expect(TokenKind.EQUALS, "'='")
        return Decl(name, self.triple())

    def triple(self) -> NPTriple:
        tok = self.expect(TokenKind.LPAREN, "'(' opening a triple")
        t = self.set_literal()
        self.expect(TokenKind.COMMA, "','")
        ind = self.set_literal()
        self.expect(TokenKind.COMMA, "','")
        f = self.set_literal()
        self.expect(TokenKind.RPAREN, "')' closing the triple")
        try:
            return NPTriple(t, ind, f)
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    # set := term ("U" term)*
    def set_literal(self) -> NSSet:
        pieces = list(self.term())
        while self.match(TokenKind.UNION):
            pieces.extend(self.term())
        return NSSet(pieces)

    def term(self) -> list[Piece]:
        tok = self.peek()
        if tok.kind in (TokenKind.LBRACKET, TokenKind.LPAREN):
            closing = (
                (TokenKind.RBRACKET, "']'")
                if tok.kind is TokenKind.LBRACKET
                else (TokenKind.RPAREN, "')'")
            )
            self.advance()
            lo = self.bound()
            self.expect(TokenKind.DOTDOT, "'..'")
            hi = self.bound()
            self.expect(*closing)
            return [self.make_piece(lo, hi, tok)]
        if tok.kind is TokenKind.LBRACE:
            self.advance()
            pieces = [self.point_piece()]
            while self.match(TokenKind.COMMA):
                pieces.append(self.point_piece())
            self.expect(TokenKind.RBRACE, "'}'")
            return pieces
        return [self.point_piece()]

    def point_piece(self) -> Piece:
        b = self.bound()
        return Piece(b, b)

    def make_piece(self, lo: Bound, hi: Bound, at: Token) -> Piece:
        try:
            return Piece(lo, hi)
        except ValueError as exc:
            raise ParseError(str(exc), at.line, at.col) from None

    # bound := ["-"] Number ["%"] [monad suffix]
    def bound(self) -> Bound:
        negative = self.match(TokenKind.MINUS) is not None
        tok = self.expect(TokenKind.NUMBER, "a number")
        try:
            value = Fraction(tok.lexeme)
        except ZeroDivisionError:
            raise ParseError("zero denominator", tok.line, tok.col) from None
        if self.match(TokenKind.PERCENT):
            value /= 100
        if negative:
            value = -value
        tag = MonadTag.NONE
        if self.match(TokenKind.MONAD_MINUS):
            tag = MonadTag.MINUS
        elif self.match(TokenKind.MONAD_PLUS):
            tag = MonadTag.PLUS
        return Bound(value, tag)

    def query(self) -> Query:
        kw = self.advance()
        kind = QueryKind.NP if kw.kind is TokenKind.NP else QueryKind.CLASSIFY
        self.expect(TokenKind.LPAREN, "'('")
        expr = self.expr()
        self.expect(TokenKind.RPAREN, "')'")
        return Query(kind, expr)

    # expr := orExpr; or > and > not in binding looseness
    def expr(self) -> Expr:
        return self.or_expr()

    def or_expr(self) -> Expr:
        left = self.and_expr()
        while self.match(TokenKind.OR):
            left = Or(left, self.and_expr())
        return left

    def and_expr(self) -> Expr:
        left = self.unary()
        while self.match(TokenKind.AND):
            left = And(left, self.unary())
        return left

    def unary(self) -> Expr:
        tok = self.peek()
        if tok.kind is TokenKind.NOT:
            self.advance()
            return Not(self.unary())
        if tok.kind is TokenKind.IDENT:
            self.advance()
            return Var(tok.lexeme)
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            inner = self.expr()
            self.expect(TokenKind.RPAREN, "')'")
            return inner
        raise self.error(
            "expected an event name, 'not', or '('",
            {TokenKind.IDENT, TokenKind.NOT, TokenKind.LPAREN},
        )


def parse(src: str) -> Program:
    """Parse a whole program."""
    return _Parser(tokenize(src)).program()


def _parse_only(src: str, production: str):
    parser = _Parser(tokenize(src))
    node = getattr(parser, production)()
    if parser.peek().kind is not TokenKind.EOF:
        raise parser.error("trailing input after literal")
    return node


def parse_set_literal(src: str) -> NSSet:
    """Parse a standalone set literal such as ``[0.2..0.3] U {0.5}``."""
    return _parse_only(src, "set_literal")


def parse_triple_literal(src: str) -> NPTriple:
    """Parse a standalone triple literal."""
    return _parse_only(src, "triple")


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class QueryResult:
    """One query's outcome: the event's triple, plus the classification
    report when the query asked for one."""

    text: str
    kind: QueryKind
    triple: NPTriple
    report: Optional[ClassificationReport] = None

    @property
    def value(self) -> Union[NPTriple, ClassificationReport]:
        return self.report if self.kind is QueryKind.CLASSIFY else self.triple


def evaluate(
    program: Program, env: Optional[Mapping[str, NPTriple]] = None
) -> list[QueryResult]:
    """Run a program: declarations extend the environment in order, and
    each query produces one result."""
    names: dict[str, NPTriple] = dict(env or {})
    results = []
    for stmt in program.statements:
        if isinstance(stmt, Decl):
            if stmt.name in names:
                raise EvalError(f"duplicate declaration of '{stmt.name}'", stmt.name)
            names[stmt.name] = stmt.value
        else:
            trip = eval_expr(stmt.expr, names)
            report = classify(trip) if stmt.kind is QueryKind.CLASSIFY else None
            results.append(QueryResult(query_text(stmt), stmt.kind, trip, report))
    return results


def eval_expr(expr: Expr, names: Mapping[str, NPTriple]) -> NPTriple:
    if isinstance(expr, Var):
        try:
            return names[expr.name]
        except KeyError:
            raise EvalError(f"unbound identifier '{expr.name}'", expr.name) from None
    if isinstance(expr, Not):
        return ~eval_expr(expr.operand, names)
    if isinstance(expr, And):
        return eval_expr(expr.left, names) & eval_expr(expr.right, names)
    if isinstance(expr, Or):
        return eval_expr(expr.left, names) | eval_expr(expr.right, names)
    raise TypeError(f"not an expression node: {expr!r}")


def _expr_text(expr: Expr) -> tuple[str, int]:
    # Precedence levels: or=1, and=2, not=3, name=4.
    if isinstance(expr, Var):
        return expr.name, 4
    if isinstance(expr, Not):
        s, p = _expr_text(expr.operand)
        if p < 3:
            s = f"({s})"
        return f"not {s}", 3
    if isinstance(expr, And):
        return _binary_text(expr.left, "and", expr.right, 2), 2
    if isinstance(expr, Or):
        return _binary_text(expr.left, "or", expr.right, 1), 1
    raise TypeError(f"not an expression node: {expr!r}")


def _binary_text(left: Expr, word: str, right: Expr, prec: int) -> str:
    ls, lp = _expr_text(left)
    if lp < prec:
        ls = f"({ls})"
    rs, rp = _expr_text(right)
    if rp <= prec:
        rs = f"({rs})"
    return f"{ls} {word} {rs}"


def query_text(query: Query) -> str:
    """Canonical text of a query, reparseable to the same tree."""
    return f"{query.kind.value}({_expr_text(query.expr)[0]})"


# ---------------------------------------------------------------------------
# rendering


class Style(Enum):
    FRACTION = "fraction"
    DECIMAL = "decimal"
    PERCENT = "percent"


_SUFFIX = {MonadTag.MINUS: "-", MonadTag.NONE: "", MonadTag.PLUS: "+"}


def _decimal_str(q: Fraction) -> Optional[str]:
    """Exact decimal form, or None when it would not terminate."""
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return None
    exp = max(twos, fives)
    scaled = abs(q.numerator) * 10**exp // q.denominator
    sign = "-" if q < 0 else ""
    if exp == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(exp + 1, "0")
    return f"{sign}{digits[:-exp]}.{digits[-exp:]}"


def render_bound(b: Bound, style: Style = Style.FRACTION) -> str:
    suffix = _SUFFIX[b.tag]
    if style is Style.FRACTION:
        return f"{b.value}{suffix}"
    if style is Style.DECIMAL:
        dec = _decimal_str(b.value)
        return f"{dec if dec is not None else b.value}{suffix}"
    v = b.value * 100
    if v.denominator == 1:
        body = str(v.numerator)
    else:
        dec = _decimal_str(v)
        body = dec if dec is not None else str(v)
    return f"{body}%{suffix}"


def render_set(s: NSSet, style: Style = Style.FRACTION) -> str:
    return format_pieces(s.pieces, lambda b: render_bound(b, style))


def render_triple(t: NPTriple, style: Style = Style.FRACTION) -> str:
    return "({}, {}, {})".format(
        render_set(t.truth, style),
        render_set(t.indeterminacy, style),
        render_set(t.falsity, style),
    )


def render_report(r: ClassificationReport, style: Style = Style.FRACTION) -> str:
    """Multi-line summary of a classification report."""
    labels = [l.value for l in Label if l in r.labels]
    flags = [f.value for f in ComponentFlag if f in r.flags]
    lines = [", ".join(labels) if labels else "(no label)"]
    lines.append(f"  n_inf = {render_bound(r.n_inf, style)}")
    lines.append(f"  n_sup = {render_bound(r.n_sup, style)}")
    if flags:
        lines.append(f"  flags = {', '.join(flags)}")
    return "\n".join(lines)


def render(
    value: Union[NPTriple, ClassificationReport], style: Style = Style.FRACTION
) -> str:
    if isinstance(value, NPTriple):
        return render_triple(value, style)
    return render_report(value, style)
