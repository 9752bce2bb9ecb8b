"""Parser and evaluator for coefficient identities.

An identity relates coefficients of an extremal family to coefficients
of j, with subscripts affine in a free index i, e.g.::

    k=2: g[4*i+2] = 2*j[2*(4*i+2)]

Grammar, one identity per line::

    identity := "k" "=" INT ":" "g" "[" index "]" "=" term ("+" term)*
    term     := [INT ["*"]] symbol "[" index "]"
    symbol   := "g" | "j"
    index    := sums and products of INT, "i" and parenthesized groups

Index expressions must be affine in i after expansion; multiplication of
an integer with "i" may be written without "*" (as in ``10i+10``).
Subscripts are q-exponents and must come out even and positive; the
evaluator halves them for internal lookup. All comparisons are exact
integer equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from . import forms
from .errors import (
    BeyondTruncation,
    IdentitySyntaxError,
    NonAffineIndex,
    OddSubscript,
)
from .extremal import ExtremalFamily, build_family, coefficient_value
from .series import LaurentSeries


@dataclass(frozen=True)
class Affine:
    """a*i + b with integer a, b."""

    a: int
    b: int

    def __call__(self, i: int) -> int:
        return self.a * i + self.b

    def render(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = "i" if self.a == 1 else f"{self.a}*i"
        if self.b == 0:
            return head
        return f"{head}+{self.b}"


@dataclass(frozen=True)
class Term:
    coeff: int
    symbol: str  # "g" or "j"
    index: Affine

    def render(self) -> str:
        body = f"{self.symbol}[{self.index.render()}]"
        return body if self.coeff == 1 else f"{self.coeff}*{body}"


@dataclass(frozen=True)
class Identity:
    k: int
    lhs_index: Affine
    terms: tuple[Term, ...]

    def render(self) -> str:
        rhs = " + ".join(t.render() for t in self.terms)
        return f"k={self.k}: g[{self.lhs_index.render()}] = {rhs}"


@dataclass(frozen=True)
class IdentityRow:
    i: int
    subscript: int
    lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    identity: Identity
    rows: tuple[IdentityRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.rows)


# -- parsing -------------------------------------------------------------

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z]+)|([=:\[\]()+*])|(\S)")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", or the punctuation character itself
    value: str
    pos: int  # 1-based character offset


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        pos = m.start() + 1
        if m.group(1):
            tokens.append(_Token("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(_Token("name", m.group(2), pos))
        elif m.group(3):
            tokens.append(_Token(m.group(3), m.group(3), pos))
        else:
            raise IdentitySyntaxError(f"unexpected character {m.group(4)!r}", pos)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def _eof_pos(self) -> int:
        return len(self.text) + 1

    def peek(self) -> _Token | None:
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise IdentitySyntaxError("unexpected end of input", self._eof_pos())
        self.idx += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> _Token:
        tok = self.peek()
        if tok is None:
            raise IdentitySyntaxError(
                f"expected {what or kind}, found end of input", self._eof_pos()
            )
        if tok.kind != kind:
            raise IdentitySyntaxError(
                f"expected {what or kind}, found {tok.value!r}", tok.pos
            )
        self.idx += 1
        return tok

    def expect_name(self, *names: str) -> _Token:
        tok = self.expect("name", " or ".join(names))
        if tok.value not in names:
            raise IdentitySyntaxError(
                f"expected {' or '.join(names)}, found {tok.value!r}", tok.pos
            )
        return tok

    # index := sum of products; products may use implicit multiplication
    # before "i" or "(".

    def index(self) -> Affine:
        acc = self.product()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "+":
                self.take()
                nxt = self.product()
                acc = Affine(acc.a + nxt.a, acc.b + nxt.b)
            else:
                return acc

    def product(self) -> Affine:
        acc = self.atom()
        while True:
            tok = self.peek()
            if tok is None:
                return acc
            if tok.kind == "*":
                self.take()
                acc = self._affine_mul(acc, self.atom(), tok.pos)
            elif tok.kind == "(" or (tok.kind == "name" and tok.value == "i"):
                acc = self._affine_mul(acc, self.atom(), tok.pos)
            else:
                return acc

    def atom(self) -> Affine:
        tok = self.take()
        if tok.kind == "int":
            return Affine(0, int(tok.value))
        if tok.kind == "name" and tok.value == "i":
            return Affine(1, 0)
        if tok.kind == "(":
            inner = self.index()
            self.expect(")")
            return inner
        raise IdentitySyntaxError(f"expected index atom, found {tok.value!r}", tok.pos)

    @staticmethod
    def _affine_mul(x: Affine, y: Affine, pos: int) -> Affine:
        if x.a != 0 and y.a != 0:
            raise NonAffineIndex(f"index is quadratic in i near offset {pos}")
        return Affine(x.a * y.b + y.a * x.b, x.b * y.b)

    def term(self) -> Term:
        tok = self.peek()
        if tok is None:
            raise IdentitySyntaxError("expected term, found end of input", self._eof_pos())
        coeff = 1
        if tok.kind == "int":
            coeff = int(self.take().value)
            if self.peek() is not None and self.peek().kind == "*":
                self.take()
        sym = self.expect_name("g", "j")
        self.expect("[")
        idx = self.index()
        self.expect("]")
        return Term(coeff, sym.value, idx)

    def identity(self) -> Identity:
        self.expect_name("k")
        self.expect("=")
        k = int(self.expect("int", "integer").value)
        self.expect(":")
        self.expect_name("g")
        self.expect("[")
        lhs = self.index()
        self.expect("]")
        self.expect("=")
        terms = [self.term()]
        while self.peek() is not None:
            self.expect("+")
            terms.append(self.term())
        return Identity(k=k, lhs_index=lhs, terms=tuple(terms))


def parse(text: str) -> Identity:
    """Parse one identity; raises IdentitySyntaxError with a 1-based
    offset, or NonAffineIndex for quadratic indices."""
    return _Parser(text).identity()


def parse_lines(text: str) -> list[Identity]:
    """Parse an identity file: one identity per line, '#' comments."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line))
    return out


_BUILTIN: tuple[Identity, ...] | None = None


def builtin_table1() -> list[Identity]:
    """The built-in identity suite, transcribed from the published table."""
    global _BUILTIN
    if _BUILTIN is None:
        text = resources.files("moonshine").joinpath("data/table1.txt").read_text()
        _BUILTIN = tuple(parse_lines(text))
    return list(_BUILTIN)


# -- evaluation ----------------------------------------------------------


def _subscript(idx: Affine, i: int) -> int:
    """Evaluate an index to an internal exponent, rejecting subscripts
    that are not positive even q-exponents."""
    s = idx(i)
    if s <= 0 or s % 2:
        raise OddSubscript(f"subscript {s} at i={i} is not a positive even exponent")
    return s // 2


def needed_orders(ast: Identity, i_from: int, i_to: int) -> tuple[int, int]:
    """Internal truncation orders (family, j) required to evaluate the
    identity over the i range. Indices are affine, so endpoints suffice."""
    ends = (i_from, i_to)
    need_g = max(ast.lhs_index(i) for i in ends) // 2
    need_j = 0
    for t in ast.terms:
        need = max(t.index(i) for i in ends) // 2
        if t.symbol == "j":
            need_j = max(need_j, need)
        else:
            need_g = max(need_g, need)
    return need_g, need_j


def evaluate(
    ast: Identity,
    family: ExtremalFamily,
    j: LaurentSeries,
    i_from: int,
    i_to: int,
    *,
    extend: bool = False,
    catalog: forms.FormCatalog | None = None,
) -> IdentityReport:
    """Check an identity for every i in the range, exact comparison.

    With ``extend`` false, insufficient truncation orders raise
    BeyondTruncation; with it true, the family and j are rebuilt at the
    required orders.
    """
    if family.k != ast.k:
        raise ValueError(f"identity is for k={ast.k}, family has k={family.k}")
    need_g, need_j = needed_orders(ast, i_from, i_to)
    if need_g > family.order or need_j > j.order:
        if not extend:
            raise BeyondTruncation(
                f"identity needs family order {need_g} and j order {need_j}, "
                f"have {family.order} and {j.order}"
            )
        cat = catalog if catalog is not None else forms.DEFAULT
        if need_g > family.order:
            family = build_family(ast.k, need_g, cat)
        if need_j > j.order:
            j = cat.j_normalized(need_j)

    rows = []
    for i in range(i_from, i_to + 1):
        subscript = ast.lhs_index(i)
        lhs = coefficient_value(family, _subscript(ast.lhs_index, i))
        rhs = 0
        for t in ast.terms:
            n = _subscript(t.index, i)
            if t.symbol == "j":
                rhs += t.coeff * j.coefficient(n)
            else:
                rhs += t.coeff * coefficient_value(family, n)
        rows.append(IdentityRow(i=i, subscript=subscript, lhs=lhs, rhs=rhs, passed=lhs == rhs))
    return IdentityReport(identity=ast, rows=tuple(rows))


def run_suite(
    i_max: int,
    identities: list[Identity] | None = None,
    *,
    catalog: forms.FormCatalog | None = None,
) -> list[IdentityReport]:
    """Evaluate identities (the built-in table by default) for
    i = 0..i_max, building every needed series once."""
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    asts = identities if identities is not None else builtin_table1()
    cat = catalog if catalog is not None else forms.DEFAULT

    need_j = 1
    need_g: dict[int, int] = {}
    for ast in asts:
        g, j = needed_orders(ast, 0, i_max)
        need_j = max(need_j, j)
        need_g[ast.k] = max(need_g.get(ast.k, 1), g)

    j_series = cat.j_normalized(need_j)
    families = {k: build_family(k, order, cat) for k, order in sorted(need_g.items())}
    return [evaluate(ast, families[ast.k], j_series, 0, i_max) for ast in asts]
