"""Canonical multivariate polynomials over an exact field.

A monomial is a dense tuple of nonnegative exponents, one slot per ring
variable.  A polynomial is an immutable, canonically sorted tuple of
``(monomial, coefficient)`` terms: no zero coefficients, no duplicate
monomials, monomials strictly descending in the ring's term order.  Two
equal polynomials therefore have identical term tuples.

The module also hosts the expression grammar used by every JSON document:
integer literals, declared variable names, ``+ - * ^`` and parentheses,
with insignificant whitespace.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import ParseError, StructureError
from .fields import GF, QQ

Monomial = tuple  # dense exponent vector


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial):
    """``a / b`` or None when not divisible."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class MonomialOrder:
    """A global monomial order: ``grevlex`` (default) or ``lex``.

    ``key`` maps an exponent tuple to a sort key (packed into a single
    integer so comparisons are cheap); larger key = larger monomial.  Both
    orders are total, multiplicative, and have 1 minimal.  Exponents must
    stay below 2^16, far beyond anything these computations produce.
    """

    __slots__ = ("kind",)
    _CHUNK = 16
    _MAXE = (1 << 16) - 1

    def __init__(self, kind: str):
        if kind not in ("grevlex", "lex"):
            raise StructureError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, exp: Monomial) -> int:
        if self.kind == "grevlex":
            code = sum(exp)
            for e in reversed(exp):
                if e > self._MAXE:
                    raise StructureError("exponent overflow in order key")
                code = (code << self._CHUNK) | (self._MAXE - e)
            return code
        code = 0
        for e in exp:
            if e > self._MAXE:
                raise StructureError("exponent overflow in order key")
            code = (code << self._CHUNK) | e
        return code

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(("order", self.kind))

    def __repr__(self):
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class PolyRing:
    """A polynomial ring: named variables, a coefficient field, an order."""

    def __init__(self, names: Sequence[str], field, order: MonomialOrder = GREVLEX):
        names = tuple(names)
        if not names:
            raise StructureError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise StructureError("duplicate variable names")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", nm):
                raise StructureError(f"invalid variable name {nm!r}")
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.order = order
        self._index = {nm: i for i, nm in enumerate(names)}
        self._key_cache: dict = {}
        self.zero_mono = (0,) * self.nvars

    # -- constructors -------------------------------------------------------

    def polynomial(self, terms: dict) -> "Polynomial":
        """Canonicalize a {monomial: coefficient} mapping."""
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(self.field.one)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_mono: self.field.coerce(c)})

    def var(self, i: int) -> "Polynomial":
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp: Monomial, c=None) -> "Polynomial":
        return Polynomial(self, {tuple(exp): self.field.coerce(1 if c is None else c)})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return self if order == self.order else PolyRing(self.names, self.field, order)

    def with_field(self, field) -> "PolyRing":
        return self if field == self.field else PolyRing(self.names, field, self.order)

    # -- order key with per-ring memo ---------------------------------------

    def key(self, exp: Monomial):
        k = self._key_cache.get(exp)
        if k is None:
            k = self.order.key(exp)
            self._key_cache[exp] = k
        return k

    def parse(self, text: str) -> "Polynomial":
        return _parse_expression(self, text)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.names == self.names
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}; {self.order}]"


HOMOGENEOUS_ANY = "any"  # degree reported for the zero polynomial


class Polynomial:
    """Immutable canonical polynomial; hashable, safe to share."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        field = ring.field
        clean = {m: c for m, c in terms.items() if c != field.zero}
        key = ring.key
        self.ring = ring
        self.terms = tuple(sorted(clean.items(), key=lambda t: key(t[0]), reverse=True))
        self._hash = None

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise StructureError("zero polynomial has no lead term")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise StructureError("zero polynomial has no lead term")
        return self.terms[0][1]

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.terms[0][1])
        return self.scale(inv)

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.coerce(c)
        if c == f.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(cc, c) for m, cc in self.terms})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise StructureError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms:
            v = f.add(out.get(m, f.zero), c)
            if v == f.zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ring.field.coerce(other))
        self._check(other)
        from operator import add as _add

        f = self.ring.field
        out: dict = {}
        if f.char:
            p = f.char
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = tuple(map(_add, m1, m2))
                    v = (out.get(m, 0) + c1 * c2) % p
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        else:
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = tuple(map(_add, m1, m2))
                    v = out.get(m, f.zero) + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise StructureError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, self.ring.order.kind, self.terms))
        return self._hash

    # -- queries ------------------------------------------------------------

    def evaluate(self, point: Sequence):
        """Exact evaluation at a tuple of field elements."""
        f = self.ring.field
        if len(point) != self.ring.nvars:
            raise StructureError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        pt = [f.coerce(x) for x in point]
        total = f.zero
        for m, c in self.terms:
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = f.mul(v, f.pow(x, e))
            total = f.add(total, v)
        return total

    def homogeneous_degree(self):
        """Common degree of all terms, ``HOMOGENEOUS_ANY`` for 0, else None."""
        if not self.terms:
            return HOMOGENEOUS_ANY
        degs = {sum(m) for m, _ in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """Named-operation arithmetic entry point (add | sub | mul)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise StructureError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# printing

def _coeff_str(field, c) -> str:
    if isinstance(field, GF):
        return str(field.balanced(c))
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    """Canonical expression string, parseable back by the grammar
    (integer coefficients only; rationals with denominators raise)."""
    if not p.terms:
        return "0"
    field = p.ring.field
    names = p.ring.names
    pieces = []
    for m, c in p.terms:
        if isinstance(field, QQ) and c.denominator != 1:
            raise StructureError(
                f"coefficient {c} is not an integer; not representable in the grammar"
            )
        cval = field.balanced(c) if isinstance(field, GF) else c.numerator
        factors = []
        for nm, e in zip(names, m):
            if e == 1:
                factors.append(nm)
            elif e > 1:
                factors.append(f"{nm}^{e}")
        if not factors:
            body = str(abs(cval))
        elif abs(cval) == 1:
            body = "*".join(factors)
        else:
            body = f"{abs(cval)}*" + "*".join(factors)
        pieces.append(("-" if cval < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            tail = text[pos:].lstrip()
            if not tail:
                break
            raise ParseError(f"unexpected character {tail[0]!r} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def expression(self) -> Polynomial:
        node = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self) -> Polynomial:
        node = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = node * self.factor()
            else:
                return node

    def factor(self) -> Polynomial:
        sign = 1
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    sign = -sign
            else:
                break
        node = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            node = node ** e
        return node if sign == 1 else -node

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            idx = self.ring._index.get(val)
            if idx is None:
                raise ParseError(f"undeclared variable {val!r} in {self.text!r}")
            return self.ring.var(idx)
        if kind == "op" and val == "(":
            node = self.expression()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token in {self.text!r}")


def _parse_expression(ring: PolyRing, text: str) -> Polynomial:
    parser = _Parser(ring, text)
    node = parser.expression()
    if parser.peek()[0] != "end":
        raise ParseError(f"trailing input in {text!r}")
    return node


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse an expression in the document grammar into ``ring``."""
    return _parse_expression(ring, text)
