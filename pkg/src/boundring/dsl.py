"""Reader and writer for ``.set`` files.

Grammar::

    file       := ["vars" ident ("," ident)* ";"] ["regime" ("absolute"|"positive") ";"]
                  "set" ident "=" union ";"
    union      := block ("or" block)*
    block      := "{" [constraint ("and" constraint)*] "}"
    constraint := "|" monomial "|" ("<=" | "<" | "≤") rhs
    rhs        := rational ["*" "|" monomial "|"] | "|" monomial "|"
    monomial   := factor ("*" factor)*
    factor     := ident ["^" posint] | "1"

``<`` and ``<=`` mean the same thing: closures do not change B(S).
An empty block ``{}`` is the whole space.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .algebra import check_exponent, default_variables, format_monomial
from .setmodel import MonomialConstraint, SetSpec, SignRegime, Tentacle


class SetSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)"
    r"|(?P<num>\d+(?:/\d+|\.\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op><=|≤|<|[|{}*^;,=])"
)


class _Reader:
    def __init__(self, text: str, variables: Sequence[str] | None, n: int | None):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                self.fail(f"unexpected character {text[pos]!r}", pos)
            if m.lastgroup != "ws":
                val = m.group()
                self.toks.append((m.lastgroup, "<=" if val == "≤" else val, pos))
            pos = m.end()
        self.toks.append(("end", "", len(text)))
        self.i = 0
        self.variables = list(variables) if variables else None
        self.n = n

    def fail(self, msg, pos):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise SetSyntaxError(msg, line, col)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, val):
        kind, v, pos = self.take()
        if v != val:
            self.fail(f"expected {val!r}, found {v or 'end of input'!r}", pos)

    def ident(self):
        kind, v, pos = self.take()
        if kind != "name":
            self.fail(f"expected a name, found {v or 'end of input'!r}", pos)
        return v, pos

    def parse(self) -> SetSpec:
        regime = SignRegime.ABSOLUTE
        if self.peek()[1] == "vars":
            self.take()
            names = [self.ident()[0]]
            while self.peek()[1] == ",":
                self.take()
                name, pos = self.ident()
                if name in names:
                    self.fail(f"duplicate variable name {name!r}", pos)
                names.append(name)
            self.expect(";")
            if self.n is not None and self.n != len(names):
                self.fail(f"file declares {len(names)} variables but n = {self.n}", self.peek()[2])
            self.variables = names
        if self.variables is None:
            self.variables = list(default_variables(self.n if self.n is not None else 2))
        if self.peek()[1] == "regime":
            self.take()
            word, pos = self.ident()
            if word not in ("absolute", "positive"):
                self.fail("regime must be 'absolute' or 'positive'", pos)
            regime = SignRegime.ABSOLUTE if word == "absolute" else SignRegime.POSITIVE
            self.expect(";")
        kind, v, pos = self.take()
        if v != "set":
            self.fail(f"expected 'set', found {v or 'end of input'!r}", pos)
        name, _ = self.ident()
        self.expect("=")
        blocks = [self.block(regime)]
        while self.peek()[1] == "or":
            self.take()
            blocks.append(self.block(regime))
        self.expect(";")
        kind, v, pos = self.peek()
        if kind != "end":
            self.fail(f"trailing input {v!r}", pos)
        return SetSpec(tuple(blocks), len(self.variables), tuple(self.variables), name)

    def block(self, regime) -> Tentacle:
        self.expect("{")
        cons = []
        if self.peek()[1] != "}":
            cons.append(self.constraint())
            while self.peek()[1] == "and":
                self.take()
                cons.append(self.constraint())
        self.expect("}")
        return Tentacle(tuple(cons), len(self.variables), regime)

    def constraint(self) -> MonomialConstraint:
        self.expect("|")
        alpha = self.monomial()
        self.expect("|")
        kind, v, pos = self.take()
        if v not in ("<=", "<"):
            self.fail(f"expected '<=' or '<', found {v or 'end of input'!r}", pos)
        bound = Fraction(1)
        beta = (0,) * len(self.variables)
        kind, v, pos = self.peek()
        if kind == "num":
            self.take()
            bound = Fraction(v)
            if bound <= 0:
                self.fail("bound must be positive", pos)
            if self.peek()[1] == "*":
                self.take()
                self.expect("|")
                beta = self.monomial()
                self.expect("|")
        elif v == "|":
            self.take()
            beta = self.monomial()
            self.expect("|")
        else:
            self.fail(f"expected a bound, found {v or 'end of input'!r}", pos)
        return MonomialConstraint(alpha, beta, bound)

    def monomial(self) -> tuple[int, ...]:
        e = [0] * len(self.variables)
        self.factor(e)
        while self.peek()[1] == "*":
            self.take()
            self.factor(e)
        return tuple(e)

    def factor(self, e):
        kind, v, pos = self.take()
        if kind == "num" and v == "1":
            return
        if kind != "name":
            self.fail(f"expected a variable, found {v or 'end of input'!r}", pos)
        if v not in self.variables:
            self.fail(f"unknown variable {v!r}", pos)
        k = 1
        if self.peek()[1] == "^":
            self.take()
            kind, num, p = self.take()
            if kind != "num" or not num.isdigit() or int(num) == 0:
                self.fail("exponent must be a positive integer", p)
            k = check_exponent(int(num))
        e[self.variables.index(v)] += k


def parse_set(text: str, variables: Sequence[str] | None = None, n: int | None = None) -> SetSpec:
    return _Reader(text, variables, n).parse()


def _format_bound(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_constraint(c: MonomialConstraint, variables: Sequence[str]) -> str:
    lhs = format_monomial(c.alpha, variables)
    if any(c.beta):
        rhs = f"|{format_monomial(c.beta, variables)}|"
        if c.bound != 1:
            rhs = f"{_format_bound(c.bound)}*{rhs}"
    else:
        rhs = _format_bound(c.bound)
    return f"|{lhs}| <= {rhs}"


def format_set(s: SetSpec) -> str:
    lines = [f"vars {', '.join(s.variables)};"]
    if s.tentacles[0].sign_regime == SignRegime.POSITIVE:
        lines.append("regime positive;")
    blocks = []
    for t in s.tentacles:
        body = " and ".join(format_constraint(c, s.variables) for c in t.constraints)
        blocks.append("{ " + body + " }" if body else "{}")
    name = s.name if re.fullmatch(r"[A-Za-z_]\w*", s.name) else "S"
    lines.append(f"set {name} = " + " or ".join(blocks) + ";")
    return "\n".join(lines) + "\n"


def set_to_json(s: SetSpec) -> dict:
    return {
        "name": s.name,
        "vars": list(s.variables),
        "regime": s.tentacles[0].sign_regime.value,
        "tentacles": [
            [
                {"alpha": list(c.alpha), "beta": list(c.beta), "bound": _format_bound(c.bound)}
                for c in t.constraints
            ]
            for t in s.tentacles
        ],
        "text": format_set(s),
    }


def set_from_json(data: dict) -> SetSpec:
    regime = SignRegime(data.get("regime", SignRegime.ABSOLUTE.value))
    variables = tuple(data["vars"])
    n = len(variables)
    tentacles = tuple(
        Tentacle(
            tuple(MonomialConstraint(tuple(c["alpha"]), tuple(c["beta"]), Fraction(c["bound"])) for c in block),
            n,
            regime,
        )
        for block in data["tentacles"]
    )
    return SetSpec(tentacles, n, variables, data.get("name", "S"))
