"""Parsing and printing of terms, simple types and type contexts."""

import re
from enum import Enum

from ..errors import DistlabError
from ..models import O, Abs, App, Arrow, Name, SimpleType, Term, TypeContext, Var


class ParseError(DistlabError):
    """Syntax error in a term, type or context, located by character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class TokenType(Enum):
    """Lexical categories of the term grammar."""

    NAME = "name"
    LAMBDA = "\\"
    DOT = "."
    COLON = ":"
    ARROW = "->"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    END = "end"


# A name token; a trailing '#' must be followed by digits.
NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*(?:#[0-9]+)?")
MALFORMED_INDEX_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*#(?![0-9])")
PUNCTUATION = {
    "\\": TokenType.LAMBDA,
    ".": TokenType.DOT,
    ":": TokenType.COLON,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
    ",": TokenType.COMMA,
}


def tokenize(text: str) -> list[tuple[TokenType, str, int]]:
    """Split text into (type, lexeme, offset) tokens ending with END."""
    tokens: list[tuple[TokenType, str, int]] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if text.startswith("->", pos):
            tokens.append((TokenType.ARROW, "->", pos))
            pos += 2
            continue
        if ch in PUNCTUATION:
            tokens.append((PUNCTUATION[ch], ch, pos))
            pos += 1
            continue
        if MALFORMED_INDEX_PATTERN.match(text, pos):
            raise ParseError("malformed name index (expected digits after '#')", pos, text)
        match = NAME_PATTERN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {ch!r}", pos, text)
        tokens.append((TokenType.NAME, match.group(0), pos))
        pos = match.end()
    tokens.append((TokenType.END, "", len(text)))
    return tokens


def _to_name(lexeme: str) -> Name:
    base, _, index = lexeme.partition("#")
    return Name(base=base, index=int(index) if index else 0)


class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> TokenType:
        return self.tokens[self.pos][0]

    def advance(self) -> tuple[TokenType, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: TokenType) -> tuple[TokenType, str, int]:
        token = self.tokens[self.pos]
        if token[0] != kind:
            found = token[1] or "end of input"
            raise ParseError(f"expected {kind.value!r}, found {found!r}", token[2], self.text)
        return self.advance()

    def finish(self) -> None:
        token = self.tokens[self.pos]
        if token[0] != TokenType.END:
            raise ParseError(f"unexpected {token[1]!r}", token[2], self.text)

    # term ::= abs | app
    def term(self) -> Term:
        if self.peek() == TokenType.LAMBDA:
            return self.abstraction()
        return self.application()

    def abstraction(self) -> Term:
        self.expect(TokenType.LAMBDA)
        _, lexeme, _ = self.expect(TokenType.NAME)
        annotation = None
        if self.peek() == TokenType.COLON:
            self.advance()
            annotation = self.type_()
        self.expect(TokenType.DOT)
        return Abs(binder=_to_name(lexeme), annotation=annotation, body=self.term())

    def application(self) -> Term:
        result = self.atom()
        while self.peek() in (TokenType.NAME, TokenType.LPAREN, TokenType.LAMBDA):
            # A trailing abstraction extends to the end, as in "f \x. x".
            if self.peek() == TokenType.LAMBDA:
                return App(fun=result, arg=self.abstraction())
            result = App(fun=result, arg=self.atom())
        return result

    def atom(self) -> Term:
        kind, lexeme, offset = self.advance()
        if kind == TokenType.NAME:
            return Var(name=_to_name(lexeme))
        if kind == TokenType.LPAREN:
            inner = self.term()
            self.expect(TokenType.RPAREN)
            return inner
        raise ParseError(f"unexpected {lexeme or 'end of input'!r}", offset, self.text)

    # type ::= 'o' | type '->' type | '(' type ')'
    def type_(self) -> SimpleType:
        domain = self.type_atom()
        if self.peek() == TokenType.ARROW:
            self.advance()
            return Arrow(domain=domain, codomain=self.type_())
        return domain

    def type_atom(self) -> SimpleType:
        kind, lexeme, offset = self.advance()
        if kind == TokenType.NAME and lexeme == "o":
            return O
        if kind == TokenType.LPAREN:
            inner = self.type_()
            self.expect(TokenType.RPAREN)
            return inner
        raise ParseError(f"expected a type, found {lexeme or 'end of input'!r}", offset, self.text)


def parse_term(text: str) -> Term:
    """Parse a λ-term; application is left-associative, bodies extend right."""
    parser = _Parser(text)
    result = parser.term()
    parser.finish()
    return result


def parse_type(text: str) -> SimpleType:
    """Parse a simple type such as ``(o->o)->o``."""
    parser = _Parser(text)
    result = parser.type_()
    parser.finish()
    return result


def parse_context(text: str) -> TypeContext:
    """Parse ``x:o,f:o->o`` into a type context.

    Raises:
        ParseError: on malformed input or a duplicate binding
    """
    ctx: TypeContext = {}
    if not text.strip():
        return ctx
    parser = _Parser(text)
    while True:
        _, lexeme, offset = parser.expect(TokenType.NAME)
        parser.expect(TokenType.COLON)
        n = _to_name(lexeme)
        if n in ctx:
            raise ParseError(f"duplicate binding for {n}", offset, text)
        ctx[n] = parser.type_()
        if parser.peek() != TokenType.COMMA:
            break
        parser.advance()
    parser.finish()
    return ctx


def print_type(tau: SimpleType) -> str:
    return str(tau)


def print_context(ctx: TypeContext) -> str:
    return ",".join(f"{n}:{tau}" for n, tau in ctx.items())


def print_term(t: Term) -> str:
    """Render t so that parse_term gives it back exactly."""
    if isinstance(t, Var):
        return str(t.name)
    if isinstance(t, Abs):
        annotation = f":{t.annotation}" if t.annotation is not None else ""
        return f"\\{t.binder}{annotation}. {print_term(t.body)}"
    fun = print_term(t.fun)
    if isinstance(t.fun, Abs):
        fun = f"({fun})"
    arg = print_term(t.arg)
    if not isinstance(t.arg, Var):
        arg = f"({arg})"
    return f"{fun} {arg}"
