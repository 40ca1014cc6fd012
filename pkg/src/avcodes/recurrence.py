"""Linear recurrence extension and the torus/footprint transform pair.

A reduced Groebner basis with footprint S defines, for each pivot s_w, the
recurrence  k_a = -sum_s g_s^(w) k_(a+s-s_w)  with indices wrapped into the
box.  extend() grows seed values on S to the whole exponent box A under
every such recurrence at once; composing with the inverse transform and a
restriction gives the isomorphism onto arrays supported on the basis's
point set (c_map), whose inverse is plain power-sum evaluation (c_inverse).
"""

from __future__ import annotations

import random

from .field import Field
from .groebner import GroebnerBasis, monomial_eval
from .orders import enumerate_order, vec_sub, vec_wrap
from .transform import Array, domain_points, idft, zero_array


class ExtensionError(ValueError):
    """The generated array violates one of the defining recurrences."""


def _relation_value(field: Field, gb: GroebnerBasis, arr: Array, w: int, a: tuple[int, ...]) -> int:
    """Value of recurrence w at position a (zero when the array satisfies it)."""
    g = gb.polys[w]
    piv = gb.pivots[w]
    q1 = gb.q - 1
    acc = 0
    for s, c in g.terms.items():
        idx = vec_wrap(vec_sub(vec_add_safe(a, s), piv), q1)
        acc = field.add(acc, field.mul(c, arr[idx]))
    return acc


def vec_add_safe(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def extend(gb: GroebnerBasis, seed: dict, rng: random.Random | None = None) -> Array:
    """Fill the box from footprint seed values under all recurrences.

    The fill order is the monomial order by default; with `rng` a randomized
    admissible schedule is used instead (any schedule yields the same array).
    Every recurrence is re-verified over the whole box afterwards; a
    violation means the basis does not define a consistent extension.
    """
    field = gb.field
    q1 = gb.q - 1
    if set(seed) != gb.footprint:
        raise ValueError("seed support must equal the basis footprint")
    arr: Array = dict(seed)
    targets = [a for a in enumerate_order(gb.order, gb.q) if a not in gb.footprint]

    def applicable(a):
        out = []
        for w, piv in enumerate(gb.pivots):
            if all(x >= y for x, y in zip(a, piv)):
                out.append(w)
        return out

    pending = list(targets)
    while pending:
        progressed = False
        order_pick = pending if rng is None else rng.sample(pending, len(pending))
        for a in order_pick:
            ws = applicable(a)
            if not ws:
                raise ExtensionError(f"no recurrence covers exponent {a}")
            if rng is not None:
                rng.shuffle(ws)
            for w in ws:
                g, piv = gb.polys[w], gb.pivots[w]
                operands = {
                    s: vec_wrap(vec_sub(vec_add_safe(a, s), piv), q1)
                    for s in g.terms
                    if s != piv
                }
                if any(idx not in arr for idx in operands.values()):
                    continue
                acc = 0
                for s, idx in operands.items():
                    acc = field.add(acc, field.mul(g.terms[s], arr[idx]))
                arr[a] = field.neg(acc)
                pending.remove(a)
                progressed = True
                break
            if progressed:
                break
        if not progressed:
            raise ExtensionError("generation stalled: no target has its operands")

    for w in range(len(gb.pivots)):
        piv = gb.pivots[w]
        for a in domain_points(gb.q, gb.order.nvars):
            if all(x >= y for x, y in zip(a, piv)):
                if _relation_value(field, gb, arr, w, a) != 0:
                    raise ExtensionError(f"recurrence {w} violated at {a}")
    return arr


def include(c_psi: dict, q: int, nvars: int) -> Array:
    """Embed a point-set array into the full torus array (zeros elsewhere)."""
    arr = zero_array(q, nvars)
    for pt, v in c_psi.items():
        if pt not in arr:
            raise ValueError(f"point {pt} outside the torus box")
        arr[pt] = v
    return arr


def restrict_omega(arr: Array, points) -> dict:
    return {tuple(pt): arr[tuple(pt)] for pt in points}


def restrict_a(arr: Array, exps) -> dict:
    return {tuple(e): arr[tuple(e)] for e in exps}


def c_map(gb: GroebnerBasis, seed: dict, onto, check_vanish: bool = True) -> dict:
    """R . F^-1 . E: extend the seed, inverse-transform, restrict to `onto`.

    `onto` must contain the zero set of the basis ideal; the inverse
    transform of the extension vanishes off that zero set, which is checked
    against the complement of `onto` (a leak signals a basis/point-set
    mismatch).
    """
    field = gb.field
    nvars = gb.order.nvars
    full = idft(field, extend(gb, seed), nvars)
    onto_set = {tuple(pt) for pt in onto}
    if check_vanish:
        for pt, v in full.items():
            if pt not in onto_set and v != 0:
                raise ValueError(f"transform leaks outside the target point set at {pt}")
    return {pt: full[pt] for pt in sorted(onto_set)}


def c_inverse(field: Field, c_psi: dict, exps) -> dict:
    """Power sums h_s = sum_psi c_psi psi^s over the given exponents."""
    out = {}
    for s in exps:
        s = tuple(s)
        acc = 0
        for pt, v in sorted(c_psi.items()):
            acc = field.add(acc, field.mul(v, monomial_eval(field, s, pt)))
        out[s] = acc
    return out


def ev(field: Field, h: dict, points) -> dict:
    """Evaluate the exponent-supported coefficient array at each point."""
    out = {}
    for pt in points:
        pt = tuple(pt)
        acc = 0
        for s, v in sorted(h.items()):
            acc = field.add(acc, field.mul(v, monomial_eval(field, s, pt)))
        out[pt] = acc
    return out
