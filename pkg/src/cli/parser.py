"""
Recursive-descent parser for ideal expressions

    expr    := expr '+' term | term
    term    := term '*' factor | factor
    factor  := atom ('^' NAT)?
    atom    := IDENT | '(' genlist ')' | '(' expr ')'
             | 'closure' '(' expr ')'
             | 'intersect' '(' expr ',' expr ')'
             | 'colon' '(' expr ',' expr ')'
    genlist := monomial (',' monomial)* | '0'
    monomial := VAR ('^' NAT)? ('*'? VAR ('^' NAT)?)* | '1'

Inside a generator list juxtaposed variables may share one identifier
("xy^2" is x*y^2). Identifiers outside generator lists name bound ideals.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from src.algebra.closure import integral_closure
from src.algebra.monomial import Exponent, MonomialIdeal, RingContext, colon, intersect, minimalize, power
from src.errors import ParseError

logger = logging.getLogger(__name__)

KEYWORDS = {"closure": 1, "intersect": 2, "colon": 2}
SYMBOLS = "()+*^,-"


@dataclass(frozen=True)
class Token:
    kind: str  # "nat", "ident", a symbol, or "end"
    text: str
    position: int


@dataclass(frozen=True)
class Literal:
    generators: Tuple[Exponent, ...]


@dataclass(frozen=True)
class Binding:
    name: str
    position: int


@dataclass(frozen=True)
class Sum:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Product:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Power:
    base: "IdealExpr"
    exponent: int


@dataclass(frozen=True)
class Closure:
    inner: "IdealExpr"


@dataclass(frozen=True)
class Intersection:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Colon:
    left: "IdealExpr"
    right: "IdealExpr"


IdealExpr = Union[Literal, Binding, Sum, Product, Power, Closure, Intersection, Colon]


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
        elif char.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("nat", text[start:i], start))
        elif char.isalpha() or char == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("ident", text[start:i], start))
        elif char in SYMBOLS:
            tokens.append(Token(char, char, i))
            i += 1
        else:
            raise ParseError(f"Unexpected character {char!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


def split_variables(ring: RingContext, word: str) -> Optional[List[int]]:
    """Indices of ring variables whose names concatenate to the word, longest names first"""
    if word in ring.variable_names:
        return [ring.variable_names.index(word)]
    names = sorted(ring.variable_names, key=len, reverse=True)
    result = []
    rest = word
    while rest:
        match = next((name for name in names if rest.startswith(name)), None)
        if match is None:
            return None
        result.append(ring.variable_names.index(match))
        rest = rest[len(match):]
    return result


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise ParseError(f"Expected {kind!r} but found {found!r}", self.current.position)
        return self.advance()

    def natural(self) -> int:
        if self.current.kind == "-":
            raise ParseError("Negative exponent", self.current.position)
        return int(self.expect("nat").text)

    def finish(self, node) -> IdealExpr:
        if self.current.kind != "end":
            raise ParseError(f"Unexpected {self.current.text!r}", self.current.position)
        return node

    def expr(self) -> IdealExpr:
        node = self.term()
        while self.current.kind == "+":
            self.advance()
            node = Sum(node, self.term())
        return node

    def term(self) -> IdealExpr:
        node = self.factor()
        while self.current.kind == "*":
            self.advance()
            node = Product(node, self.factor())
        return node

    def factor(self) -> IdealExpr:
        node = self.atom()
        if self.current.kind == "^":
            self.advance()
            node = Power(node, self.natural())
        return node

    def atom(self) -> IdealExpr:
        token = self.current
        if token.kind == "ident" and token.text in KEYWORDS:
            self.advance()
            self.expect("(")
            arguments = [self.expr()]
            for _ in range(KEYWORDS[token.text] - 1):
                self.expect(",")
                arguments.append(self.expr())
            self.expect(")")
            if token.text == "closure":
                return Closure(arguments[0])
            if token.text == "intersect":
                return Intersection(*arguments)
            return Colon(*arguments)

        if token.kind == "ident":
            self.advance()
            return Binding(token.text, token.position)

        if token.kind == "(":
            self.advance()
            if self._opens_expression():
                node = self.expr()
                self.expect(")")
                return node
            node = self.genlist()
            self.expect(")")
            return node

        found = token.text or "end of input"
        raise ParseError(f"Expected an ideal but found {found!r}", token.position)

    def _opens_expression(self) -> bool:
        token = self.current
        if token.kind == "(":
            return True
        if token.kind == "ident":
            return token.text in KEYWORDS or split_variables(self.ring, token.text) is None
        return False

    def genlist(self) -> Literal:
        if self.current.kind == "nat" and self.current.text == "0" and self.peek().kind == ")":
            self.advance()
            return Literal(())
        generators = [self.monomial()]
        while self.current.kind == ",":
            self.advance()
            generators.append(self.monomial())
        return Literal(tuple(generators))

    def monomial(self) -> Exponent:
        exponents = [0] * self.ring.dimension
        token = self.current
        if token.kind == "nat":
            if token.text != "1":
                raise ParseError(f"Constant generator must be 1, got {token.text}", token.position)
            self.advance()
            return tuple(exponents)

        self.variables(exponents)
        while self.current.kind == "ident" or (
            self.current.kind == "*" and self.peek().kind == "ident"
        ):
            if self.current.kind == "*":
                self.advance()
            self.variables(exponents)
        return tuple(exponents)

    def variables(self, exponents: List[int]) -> None:
        token = self.current
        if token.kind != "ident":
            found = token.text or "end of input"
            raise ParseError(f"Expected a variable but found {found!r}", token.position)
        indices = split_variables(self.ring, token.text)
        if indices is None:
            raise ParseError(f"Unknown variable {token.text!r}", token.position)
        self.advance()
        for index in indices[:-1]:
            exponents[index] += 1
        exponent = 1
        if self.current.kind == "^":
            self.advance()
            exponent = self.natural()
        exponents[indices[-1]] += exponent


def parse_ideal(text: str, ring: RingContext) -> IdealExpr:
    """
    Parse an ideal expression

    Raises:
        ParseError with the character position of the offending token
    """
    parser = _Parser(text, ring)
    return parser.finish(parser.expr())


def parse_monomial(text: str, ring: RingContext) -> Exponent:
    """Parse a single monomial such as 'x^2*y' or '1'"""
    parser = _Parser(text, ring)
    return parser.finish(parser.monomial())


def evaluate(
    expr: IdealExpr,
    ring: RingContext,
    bindings: Optional[Mapping[str, MonomialIdeal]] = None
) -> MonomialIdeal:
    """Evaluate an expression to its canonical monomial ideal"""
    bindings = bindings or {}
    if isinstance(expr, Literal):
        return minimalize(ring, expr.generators)
    if isinstance(expr, Binding):
        if expr.name not in bindings:
            raise ParseError(f"Unknown ideal {expr.name!r}", expr.position)
        return bindings[expr.name]
    if isinstance(expr, Power):
        return power(evaluate(expr.base, ring, bindings), expr.exponent)
    if isinstance(expr, Closure):
        inner = evaluate(expr.inner, ring, bindings)
        return inner if inner.is_unit else integral_closure(inner)

    left = evaluate(expr.left, ring, bindings)
    right = evaluate(expr.right, ring, bindings)
    if isinstance(expr, Sum):
        return left + right
    if isinstance(expr, Product):
        return left * right
    if isinstance(expr, Intersection):
        return intersect(left, right)
    return colon(left, right)


def read_ideal(
    text: str,
    ring: RingContext,
    bindings: Optional[Dict[str, MonomialIdeal]] = None
) -> MonomialIdeal:
    """parse_ideal followed by evaluate"""
    ideal = evaluate(parse_ideal(text, ring), ring, bindings)
    logger.debug(f"Parsed {text!r} as {ideal}")
    return ideal
