"""Sparse multivariate polynomials as {exponent tuple: coefficient} dicts.

Coefficients are field ints and are always nonzero in stored terms.  The
variable names used by the text form are x for one variable, x,y for two,
and x1..xN beyond that.
"""

from __future__ import annotations

import re

from .field import Field
from .orders import MonomialOrder, vec_add, vec_wrap


class Poly:
    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict[tuple[int, ...], int] | None = None):
        self.field = field
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # -- queries

    def is_zero(self) -> bool:
        return not self.terms

    def nvars(self) -> int:
        for e in self.terms:
            return len(e)
        raise ValueError("zero polynomial has no arity")

    def leading_monomial(self, order: MonomialOrder) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def coeff(self, e: tuple[int, ...]) -> int:
        return self.terms.get(e, 0)

    # -- arithmetic (new objects; inputs untouched)

    def add(self, other: "Poly") -> "Poly":
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(f, out)

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def neg(self) -> "Poly":
        f = self.field
        return Poly(f, {e: f.neg(c) for e, c in self.terms.items()})

    def scale(self, c: int) -> "Poly":
        f = self.field
        if c == 0:
            return Poly(f)
        return Poly(f, {e: f.mul(k, c) for e, k in self.terms.items()})

    def shift(self, delta: tuple[int, ...], wrap: int | None = None) -> "Poly":
        """Multiply by x^delta; exponents wrap mod `wrap` when given."""
        out = {}
        for e, c in self.terms.items():
            ne = vec_add(e, delta)
            if wrap is not None:
                ne = vec_wrap(ne, wrap)
            out[ne] = c
        return Poly(self.field, out)

    def monic(self, order: MonomialOrder) -> "Poly":
        lm = self.leading_monomial(order)
        lc = self.terms[lm]
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    # -- evaluation at a torus point given by coordinate dlogs

    def eval_at(self, point: tuple[int, ...]) -> int:
        f = self.field
        acc = 0
        for e, c in self.terms.items():
            k = sum(d * x for d, x in zip(point, e))
            acc = f.add(acc, f.mul(c, f.exp_alpha(k)))
        return acc

    # -- text form

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Poly({self.terms})"


def var_names(n: int) -> list[str]:
    if n == 1:
        return ["x"]
    if n == 2:
        return ["x", "y"]
    return [f"x{i + 1}" for i in range(n)]


def format_poly(poly: Poly, order: MonomialOrder, int_form: bool = False) -> str:
    if poly.is_zero():
        return "0"
    names = var_names(order.nvars)
    parts = []
    for e in sorted(poly.terms, key=order.key):
        c = poly.terms[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            parts.append("1" if c == 1 else poly.field.format(c, int_form))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([poly.field.format(c, int_form)] + factors))
    return " + ".join(parts)


_FACTOR = re.compile(r"^([A-Za-z]\w*?)(?:\^(\d+))?$")


def parse_poly(field: Field, order: MonomialOrder, text: str) -> Poly:
    n = order.nvars
    names = {name: i for i, name in enumerate(var_names(n))}
    if n <= 2:  # accept the numbered spellings too
        for i in range(n):
            names.setdefault(f"x{i + 1}", i)
    text = text.strip()
    if text == "0":
        return Poly(field)
    acc = Poly(field)
    for raw_term in text.split("+"):
        term = raw_term.strip()
        if not term:
            raise ValueError(f"empty term in {text!r}")
        coeff = field.one
        exps = [0] * n
        for factor in (p.strip() for p in term.split("*")):
            m = _FACTOR.match(factor)
            if m and m.group(1) in names:
                exps[names[m.group(1)]] += int(m.group(2) or 1)
            else:
                coeff = field.mul(coeff, field.parse(factor))
        acc = acc.add(Poly(field, {tuple(exps): coeff}))
    return acc
