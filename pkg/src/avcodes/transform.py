"""Discrete Fourier transforms on the torus (F_q^x)^N.

Arrays over the torus (and over the exponent set A) are dicts keyed by dlog
tuples; both domains are the box [0, q-1)^N and share the canonical lex
ordering given by domain_points().  The forward transform sends a torus
array c to h_a = sum_w c_w w^a; the inverse multiplies by (-1)^N and uses
negated exponents.  The fast paths factor the transform one axis at a time
through a pluggable length-(q-1) kernel.
"""

from __future__ import annotations

from itertools import product
from typing import Callable

from .field import Field

Array = dict[tuple[int, ...], int]
Kernel = Callable[[Field, list[int], bool], list[int]]


def domain_points(q: int, nvars: int) -> list[tuple[int, ...]]:
    """Canonical (lex) ordering of the box, shared by torus points and exponents."""
    return list(product(range(q - 1), repeat=nvars))


def zero_array(q: int, nvars: int) -> Array:
    return {pt: 0 for pt in domain_points(q, nvars)}


def dot(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(x * y for x, y in zip(a, b))


def direct_kernel(field: Field, line: list[int], inverse: bool) -> list[int]:
    """Schoolbook length-(q-1) transform straight off the exp table."""
    n = len(line)
    sign = -1 if inverse else 1
    out = []
    for a in range(n):
        acc = 0
        for i, v in enumerate(line):
            acc = field.add(acc, field.mul(v, field.exp_alpha(sign * i * a)))
        out.append(acc)
    return out


def dft_naive(field: Field, c: Array, nvars: int) -> Array:
    pts = domain_points(field.q, nvars)
    out = {}
    for a in pts:
        acc = 0
        for w in pts:
            acc = field.add(acc, field.mul(c.get(w, 0), field.exp_alpha(dot(w, a))))
        out[a] = acc
    return out


def idft_naive(field: Field, h: Array, nvars: int) -> Array:
    pts = domain_points(field.q, nvars)
    out = {}
    for w in pts:
        acc = 0
        for a in pts:
            acc = field.add(acc, field.mul(h.get(a, 0), field.exp_alpha(-dot(w, a))))
        if nvars % 2:
            acc = field.neg(acc)
        out[w] = acc
    return out


def _axis_passes(field: Field, arr: Array, nvars: int, inverse: bool, kernel: Kernel) -> Array:
    q1 = field.q - 1
    pts = domain_points(field.q, nvars)
    data = {pt: arr.get(pt, 0) for pt in pts}
    for axis in range(nvars):
        new = {}
        others = product(range(q1), repeat=nvars - 1)
        for rest in others:
            line = []
            for i in range(q1):
                idx = rest[:axis] + (i,) + rest[axis:]
                line.append(data[idx])
            line = kernel(field, line, inverse)
            if inverse:
                line = [field.neg(v) for v in line]  # one -1 factor per axis
            for i, v in enumerate(line):
                new[rest[:axis] + (i,) + rest[axis:]] = v
        data = new
    return data


def dft(field: Field, c: Array, nvars: int, fast: bool = True, kernel: Kernel | None = None) -> Array:
    """h_a = sum over torus points w of c_w * w^a."""
    if not fast:
        return dft_naive(field, c, nvars)
    return _axis_passes(field, c, nvars, False, kernel or direct_kernel)


def idft(field: Field, h: Array, nvars: int, fast: bool = True, kernel: Kernel | None = None) -> Array:
    """c_w = (-1)^N * sum over exponents a of h_a * w^(-a); inverse of dft."""
    if not fast:
        return idft_naive(field, h, nvars)
    return _axis_passes(field, h, nvars, True, kernel or direct_kernel)


def eval_poly_vector(
    field: Field,
    h: Array,
    nvars: int,
    at: tuple[int, ...] | None = None,
):
    """Plain polynomial evaluation of the coefficient array h.

    With `at` a point (dlog tuple): returns sum_a h_a * point^a.  With
    at=None: returns the full torus vector (h evaluated at the inverse of
    each point), the classical substitution convention; unlike idft there
    is no (-1)^N factor.
    """
    terms = sorted((a, v) for a, v in h.items() if v != 0)
    if at is not None:
        acc = 0
        for a, v in terms:
            acc = field.add(acc, field.mul(v, field.exp_alpha(dot(a, at))))
        return acc
    out = {}
    for w in domain_points(field.q, nvars):
        acc = 0
        for a, v in terms:
            acc = field.add(acc, field.mul(v, field.exp_alpha(-dot(a, w))))
        out[w] = acc
    return out
