"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial is a canonical, immutable collection of monomials with
Fraction coefficients.  Canonical form is unique: terms are fully
combined, zero terms are dropped, and iteration order is strictly
decreasing graded-lex over the fixed lexicographic variable order.
Exactness makes every algebraic identity in this package bit-checkable.

Variables are short identifiers (a letter optionally followed by
digits), ordered lexicographically by name for the whole process.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping

# Exponent key: ((var, exp), ...) sorted by var name, all exps > 0.
ExpKey = tuple[tuple[str, int], ...]

# Assignment of exact rational values to variables, for evaluation.
EvalPoint = Mapping[str, Fraction | int]

_VAR_RE = re.compile(r"[A-Za-z][0-9]*\Z")


class PolyError(ValueError):
    """Base class for polynomial domain errors."""


class ParseError(PolyError):
    """Syntax error in polynomial text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class MissingVariableError(PolyError):
    """An evaluation point does not cover some variable."""


def check_var_name(name: str) -> str:
    if not _VAR_RE.match(name):
        raise PolyError(f"invalid variable name: {name!r}")
    return name


def _degree(exps: ExpKey) -> int:
    return sum(e for _, e in exps)


def _cmp_exps(a: ExpKey, b: ExpKey) -> int:
    """Graded-lex comparison: total degree first, then the first variable
    (in lex order) with differing exponent decides, higher exponent wins."""
    da, db = _degree(a), _degree(b)
    if da != db:
        return 1 if da > db else -1
    ia, ib = dict(a), dict(b)
    for v in sorted(set(ia) | set(ib)):
        ea, eb = ia.get(v, 0), ib.get(v, 0)
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


_exp_sort_key = cmp_to_key(_cmp_exps)


@dataclass(frozen=True)
class Monomial:
    """A single nonzero term: coefficient times a product of variable powers."""

    coeff: Fraction
    exponents: ExpKey

    def __post_init__(self):
        if self.coeff == 0:
            raise PolyError("zero monomials are never materialized")
        for v, e in self.exponents:
            check_var_name(v)
            if e <= 0:
                raise PolyError(f"exponent of {v} must be positive, got {e}")

    @property
    def degree(self) -> int:
        return _degree(self.exponents)

    def times(self, other: "Monomial") -> "Monomial":
        exps: dict[str, int] = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = exps.get(v, 0) + e
        return Monomial(self.coeff * other.coeff, tuple(sorted(exps.items())))

    def as_polynomial(self) -> "Polynomial":
        return Polynomial({self.exponents: self.coeff})

    def __str__(self) -> str:
        return _format_term(self.coeff, self.exponents, leading=True)


def split_monomial(m: Monomial) -> tuple[Monomial, Monomial]:
    """Split m = h1 * h2 by the deterministic degree-halving rule.

    The variable powers of m are flattened into single-variable factors in
    the fixed variable order; h1 takes the first ceil(d/2) of them and the
    coefficient (sign included), h2 takes the rest with coefficient 1.
    A degree-0 monomial c splits as (c, 1).
    """
    flat = [v for v, e in m.exponents for _ in range(e)]
    cut = (len(flat) + 1) // 2
    h1 = _from_flat(m.coeff, flat[:cut])
    h2 = _from_flat(Fraction(1), flat[cut:])
    return h1, h2


def _from_flat(coeff: Fraction, flat: list[str]) -> Monomial:
    exps: dict[str, int] = {}
    for v in flat:
        exps[v] = exps.get(v, 0) + 1
    return Monomial(coeff, tuple(sorted(exps.items())))


class Polynomial:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExpKey, Fraction] | None = None):
        d = {k: Fraction(c) for k, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", d)
        object.__setattr__(self, "_hash", None)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def const(c: Fraction | int) -> "Polynomial":
        return Polynomial({(): Fraction(c)})

    @staticmethod
    def variable(name: str, exp: int = 1) -> "Polynomial":
        check_var_name(name)
        if exp < 0:
            raise PolyError(f"negative exponent {exp} for {name}")
        if exp == 0:
            return Polynomial.const(1)
        return Polynomial({((name, exp),): Fraction(1)})

    @staticmethod
    def from_monomials(monomials: Iterable[Monomial]) -> "Polynomial":
        acc: dict[ExpKey, Fraction] = {}
        for m in monomials:
            acc[m.exponents] = acc.get(m.exponents, Fraction(0)) + m.coeff
        return Polynomial(acc)

    # -- canonical views -------------------------------------------------

    @property
    def terms(self) -> tuple[Monomial, ...]:
        """Monomials in strictly decreasing graded-lex order."""
        keys = sorted(self._terms, key=_exp_sort_key, reverse=True)
        return tuple(Monomial(self._terms[k], k) for k in keys)

    def num_terms(self) -> int:
        return len(self._terms)

    def variables(self) -> set[str]:
        return {v for k in self._terms for v, _ in k}

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(): Fraction(1)}

    def as_constant(self) -> Fraction | None:
        """The value if this is a constant polynomial, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "_terms", out)
        object.__setattr__(p, "_hash", None)
        return p

    def __neg__(self) -> "Polynomial":
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self._terms or not other._terms:
            return _ZERO
        out: dict[ExpKey, Fraction] = {}
        for ka, ca in self._terms.items():
            da = dict(ka)
            for kb, cb in other._terms.items():
                exps = dict(da)
                for v, e in kb:
                    exps[v] = exps.get(v, 0) + e
                key = tuple(sorted(exps.items()))
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "_terms", out)
        object.__setattr__(p, "_hash", None)
        return p

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        return Polynomial({k: c * v for k, v in self._terms.items()})

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point: EvalPoint) -> Fraction:
        """Exact value at an assignment covering all variables."""
        total = Fraction(0)
        for k, c in self._terms.items():
            val = c
            for v, e in k:
                if v not in point:
                    raise MissingVariableError(f"no assignment for variable {v!r}")
                val *= Fraction(point[v]) ** e
            total += val
        return total

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, m in enumerate(self.terms):
            parts.append(_format_term(m.coeff, m.exponents, leading=(i == 0)))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


_ZERO = Polynomial({})


def _format_term(coeff: Fraction, exps: ExpKey, leading: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    factors = [f"{v}^{e}" if e > 1 else v for v, e in exps]
    if not factors or mag != 1:
        factors.insert(0, str(mag))
    body = "*".join(factors)
    if leading:
        return body if coeff > 0 else f"-{body}"
    return f" {sign} {body}"


def count_expanded_monomials(p: Polynomial) -> int:
    """Number of terms of p in canonical (fully combined) form."""
    if p.is_zero():
        raise PolyError("the zero polynomial has no monomial count")
    return p.num_terms()


def evaluate(p: Polynomial, point: EvalPoint) -> Fraction:
    return p.evaluate(point)


# ---------------------------------------------------------------------------
# Parser.  Grammar (ASCII, whitespace ignored):
#   expr     := ('+'|'-')? term (('+'|'-') term)*
#   term     := factor ('*'? factor)*
#   factor   := rational | var ('^' uint)?
#   rational := uint ('/' uint)?
#   var      := letter digits?
# Juxtaposition is multiplication (xy = x*y for single-letter variables).
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<num>\d+)
      | (?P<name>[A-Za-z][0-9]*)
      | (?P<op>[+\-*/^])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unknown token {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.next()
            sign = -1 if tok[1] == "-" else 1
        total = self.term().scale(sign)
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                break
            self.next()
            t = self.term()
            total = total + (t if tok[1] == "+" else -t)
        return total

    def term(self) -> Polynomial:
        product = self.factor()
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok[0] == "op" and tok[1] == "*":
                self.next()
                product = product * self.factor()
            elif tok[0] in ("num", "name"):
                product = product * self.factor()
            else:
                break
        return product

    def factor(self) -> Polynomial:
        kind, text, offset = self.next()
        if kind == "num":
            value = Fraction(int(text))
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "/":
                self.next()
                dkind, dtext, doffset = self.next()
                if dkind != "num":
                    raise ParseError("expected denominator", doffset)
                if int(dtext) == 0:
                    raise ParseError("zero denominator", doffset)
                value /= int(dtext)
            return Polynomial.const(value)
        if kind == "name":
            exp = 1
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "^":
                self.next()
                ekind, etext, eoffset = self.next()
                if ekind == "op" and etext == "-":
                    raise ParseError("negative exponent", eoffset)
                if ekind != "num":
                    raise ParseError("expected exponent", eoffset)
                exp = int(etext)
            return Polynomial.variable(text, exp)
        raise ParseError(f"unexpected token {text!r}", offset)


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text into canonical form.

    parse(print(p)) == p for every polynomial p.
    """
    return _Parser(text).parse()
