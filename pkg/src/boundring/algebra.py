"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable maps from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  The module also carries the
text parser/printer shared with the command line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

ExponentVector = tuple[int, ...]

MAX_EXPONENT = 2**31


class PolynomialSyntaxError(ValueError):
    """Raised for malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def check_exponent(e: int) -> int:
    if abs(e) >= MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds 2^31")
    return e


def grlex_key(e: ExponentVector) -> tuple:
    """Sort key putting low degree first; ties go to the larger leading exponent."""
    return (sum(e), tuple(-x for x in e))


@dataclass(frozen=True)
class Polynomial:
    n: int
    terms: Mapping[ExponentVector, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("polynomials need at least one variable")
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {self.n}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            for x in e:
                check_exponent(x)
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value) -> Polynomial:
        return cls(n, {(0,) * n: Fraction(value)})

    @classmethod
    def monomial(cls, e: Sequence[int], coeff=1) -> Polynomial:
        e = tuple(e)
        return cls(len(e), {e: Fraction(coeff)})

    def support(self) -> set[ExponentVector]:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[ExponentVector, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(check_exponent(a + b) for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, point):
        return evaluate(self, point)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    point = [Fraction(p) for p in point]
    total = Fraction(0)
    for e, c in f.terms.items():
        term = c
        for x, k in zip(point, e):
            if k:
                term *= x**k
        total += term
    return total


def support(f: Polynomial) -> set[ExponentVector]:
    return f.support()


def default_variables(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def format_monomial(e: ExponentVector, variables: Sequence[str]) -> str:
    parts = []
    for name, k in zip(variables, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial, variables: Sequence[str] | None = None) -> str:
    """Render ``f`` with terms in descending graded-lex order."""
    if variables is None:
        variables = default_variables(f.n)
    if f.is_zero():
        return "0"
    out = []
    for e in sorted(f.terms, key=lambda e: (sum(e), e), reverse=True):
        c = f.terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(e, variables)
        if mono == "1":
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = list(variables)
        self.n = len(self.variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise PolynomialSyntaxError(f"expected {value!r}, got {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected {val!r}", pos)
        return result

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        if val in "+-" and kind == "op":
            self.take()
            result = self.term()
            if val == "-":
                result = -result
        else:
            result = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.power()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.power()
            elif kind == "op" and val == "/":
                self.take()
                divisor = self.power()
                if divisor.degree() > 0:
                    raise PolynomialSyntaxError("division by a non-constant", pos)
                if divisor.is_zero():
                    raise PolynomialSyntaxError("division by zero", pos)
                result = result * Polynomial.constant(self.n, 1 / divisor.terms[(0,) * self.n])
            else:
                return result

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                raise PolynomialSyntaxError("negative exponent", pos)
            kind, val, pos = self.take()
            if kind != "num":
                raise PolynomialSyntaxError("expected an exponent", pos)
            if not val.isdigit():
                raise PolynomialSyntaxError(f"non-integer exponent {val}", pos)
            k = check_exponent(int(val))
            return base**k
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            return Polynomial.constant(self.n, Fraction(val))
        if kind == "name":
            if val not in self.variables:
                raise PolynomialSyntaxError(f"unknown variable {val!r}", pos)
            e = [0] * self.n
            e[self.variables.index(val)] = 1
            return Polynomial.monomial(e)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` over the ordered variable names.

    >>> format_polynomial(parse_polynomial("x*y + x*y", ["x", "y"]))
    '2*x*y'
    """
    if not variables:
        raise ValueError("need at least one variable")
    return _Parser(text, variables).parse()


def polynomial_from_terms(terms: Iterable[tuple[Sequence[int], object]], n: int) -> Polynomial:
    out: dict[ExponentVector, Fraction] = {}
    for e, c in terms:
        e = tuple(e)
        out[e] = out.get(e, Fraction(0)) + Fraction(c)
    return Polynomial(n, out)
