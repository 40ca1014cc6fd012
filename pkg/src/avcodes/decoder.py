"""Erasure-and-error decoding of dual affine variety codes.

decode() runs the pipeline on a received word: full syndrome array by DFT,
locator basis by the multidimensional Berlekamp-Massey iteration (seeded
with the erasure locator when erasure positions are known), syndrome
extension under the locator recurrences, error values by inverse DFT, and
parity-verified subtraction.

The iteration alone can leave locator tail coefficients underdetermined at
half the order bound, so bms() completes it by certification: it solves the
affine family of all syndrome-valid bases on the candidate footprint and
keeps the member whose ideal cuts out exactly footprint-many code positions
containing the erasures; within the correctable bound that member is unique
and equals the true locator basis.  locator_oracle() reaches the same
certification from the opposite direction (a global search over candidate
footprints with dense linear algebra, no iteration), giving an independent
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .codes import CodeSpec, CodeSpecError, feng_rao_bound, parity_check
from .field import Field
from .groebner import (
    GroebnerBasis,
    check_point_set,
    monomial_eval,
    reduce_basis,
    vanishing_ideal_gb,
)
from .orders import enumerate_order, n0_prefix, vec_geq, vec_sub, vec_wrap
from .poly import Poly
from .recurrence import ExtensionError, c_map, include, vec_add_safe
from .transform import dft, domain_points


@dataclass(frozen=True)
class DecodeResult:
    status: str  # "corrected" | "failure"
    codeword: dict | None
    error: dict | None
    locator: GroebnerBasis | None
    detail: str = ""


# -- linear algebra over the table field


def solve_affine(field: Field, rows: list[list[int]], rhs: list[int], ncols: int | None = None):
    """Solve rows*x = rhs; (particular, nullspace basis) or None if inconsistent.

    Columns are eliminated left to right, so pivot/free column choices (and
    with them the family enumeration downstream) are deterministic.  ncols
    must be given when rows can be empty, otherwise the unknowns would be
    invisible and the zero-equation system would lose its free directions.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = field.inv(aug[r][col])
        aug[r] = [field.mul(inv, x) for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][ncols] != 0 for i in range(r, len(aug))):
        return None
    part = [0] * ncols
    for i, col in enumerate(pivots):
        part[col] = aug[i][ncols]
    pivot_set = set(pivots)
    null = []
    for fc in (c for c in range(ncols) if c not in pivot_set):
        v = [0] * ncols
        v[fc] = 1
        for i, col in enumerate(pivots):
            v[col] = field.neg(aug[i][fc])
        null.append(v)
    return part, null


# -- footprint bookkeeping


def _pivots_of(delta: set, nvars: int) -> list[tuple[int, ...]]:
    """Minimal points of the complement of a finite order ideal in N_0^N."""
    if not delta:
        return [(0,) * nvars]
    hi = [max(p[i] for p in delta) + 2 for i in range(nvars)]
    out = []
    for m in product(*[range(h) for h in hi]):
        if m in delta:
            continue
        if all(
            m[i] == 0 or m[:i] + (m[i] - 1,) + m[i + 1 :] in delta
            for i in range(nvars)
        ):
            out.append(m)
    return sorted(out)


def _lower_set(point: tuple[int, ...]):
    return product(*[range(c + 1) for c in point])


def _downsets(nvars: int, max_size: int, base: frozenset = frozenset()):
    """All order ideals of N_0^N containing `base`, by size then lexically."""
    if len(base) > max_size:
        return
    seen = {base}
    frontier = [base]
    yield base
    while frontier:
        grown = set()
        for d in frontier:
            for t in _pivots_of(set(d), nvars):
                d2 = d | {t}
                if len(d2) <= max_size and d2 not in seen:
                    seen.add(d2)
                    grown.add(d2)
        frontier = sorted(grown, key=lambda d: tuple(sorted(d)))
        yield from frontier


# -- the Berlekamp-Massey-Sakata iteration


@dataclass
class _Witness:
    span: tuple[int, ...]
    pivot: tuple[int, ...]
    coeffs: dict
    disc: int


def _discrepancy(field: Field, lookup, coeffs: dict, pivot: tuple[int, ...], at) -> int:
    acc = 0
    for s, c in coeffs.items():
        pos = tuple(a - t + e for a, t, e in zip(at, pivot, s))
        acc = field.add(acc, field.mul(c, lookup(pos)))
    return acc


def _shift(coeffs: dict, delta: tuple[int, ...]) -> dict:
    return {vec_add_safe(s, delta): c for s, c in coeffs.items()}


def _combine(field: Field, a: dict, b: dict, ratio: int) -> dict:
    out = dict(a)
    for s, c in b.items():
        v = field.sub(out.get(s, 0), field.mul(ratio, c))
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def _direct_poly(field, order, lookup, processed, t2, tail, phi1):
    """Monic candidate with pivot t2 and the given tail support, or None."""
    rows, rhs = [], []
    for a in processed:
        if not vec_geq(a, t2):
            continue
        rows.append(
            [lookup(tuple(x - y + z for x, y, z in zip(a, t2, s))) for s in tail]
        )
        rhs.append(field.neg(lookup(a)))
    for p in phi1:
        rows.append([monomial_eval(field, s, p) for s in tail])
        rhs.append(field.neg(monomial_eval(field, t2, p)))
    sol = solve_affine(field, rows, rhs, ncols=len(tail))
    if sol is None:
        return None
    coeffs = {t2: 1}
    for s, c in zip(tail, sol[0]):
        if c:
            coeffs[s] = c
    return coeffs


def _sakata_core(field, order, lookup, region, box_cap, init_polys=None, phi1=(), init_delta=None):
    """Minimal recurrence basis of the array behind `lookup` over `region`.

    region must be sorted ascending.  Candidates are updated by the classic
    shift/repair rules; when no witness fits, a dense solve fills the slot,
    and an infeasible solve (over tails spanning the whole quotient box,
    box_cap wide) forces the pivot into the delta set.  With init_polys the
    iteration starts from the erasure locator basis; every later candidate
    is a shift or combination of ideal members, so the erasure roots stay
    enforced throughout.
    """
    nvars = order.nvars
    if init_polys:
        F = [(g.leading_monomial(order), dict(g.terms)) for g in init_polys]
        delta = set(init_delta)
    else:
        F = [((0,) * nvars, {(0,) * nvars: 1})]
        delta = set()
    witnesses: list[_Witness] = []

    for idx, k in enumerate(region):
        fails, keep = [], []
        for t, f in F:
            d = _discrepancy(field, lookup, f, t, k) if vec_geq(k, t) else 0
            (fails if d else keep).append((t, f, d) if d else (t, f))
        if not fails:
            continue
        for t, _f, _d in fails:
            delta.update(_lower_set(vec_sub(k, t)))
        processed = region[: idx + 1]
        guard = 0
        while True:
            guard += 1
            if guard > 4 * len(region) + 16:
                raise RuntimeError("footprint growth failed to stabilize")
            newF, regrow = [], None
            for t2 in sorted(_pivots_of(delta, nvars), key=order.key):
                built = next((f for t, f in keep if t == t2), None)
                if built is None:
                    shiftable = [(t, f) for t, f in keep if vec_geq(t2, t)]
                    if shiftable:
                        t, f = min(shiftable, key=lambda p: order.key(p[0]))
                        built = _shift(f, vec_sub(t2, t))
                if built is None:
                    cands = [(t, f, d) for t, f, d in fails if vec_geq(t2, t)]
                    gap = vec_sub(k, t2)
                    usable = [w for w in witnesses if vec_geq(w.span, gap)]
                    if cands and usable:
                        t, f, d = min(cands, key=lambda p: order.key(p[0]))
                        w = min(usable, key=lambda w: order.key(w.span))
                        built = _combine(
                            field,
                            _shift(f, vec_sub(t2, t)),
                            _shift(w.coeffs, vec_sub(w.span, gap)),
                            field.div(d, w.disc),
                        )
                if built is None:
                    tail = sorted(
                        (s for s in delta if order.compare(s, t2) < 0), key=order.key
                    )
                    built = _direct_poly(field, order, lookup, processed, t2, tail, phi1)
                    if built is None:
                        wide = sorted(
                            (
                                s
                                for s in product(range(box_cap), repeat=nvars)
                                if order.compare(s, t2) < 0
                            ),
                            key=order.key,
                        )
                        built = _direct_poly(
                            field, order, lookup, processed, t2, wide, phi1
                        )
                    if built is None:
                        # no valid candidate exists at this pivot at all, so
                        # the pivot itself belongs to every valid footprint
                        regrow = t2
                        break
                newF.append((t2, built))
            if regrow is None:
                break
            delta.update(_lower_set(regrow))
        for t, f, d in fails:
            span = vec_sub(k, t)
            if any(vec_geq(w.span, span) for w in witnesses):
                continue
            witnesses = [w for w in witnesses if not vec_geq(span, w.span)]
            witnesses.append(_Witness(span, t, dict(f), d))
        F = newF

    for t, f in F:
        for a in region:
            if vec_geq(a, t) and _discrepancy(field, lookup, f, t, a) != 0:
                raise RuntimeError("recurrence basis fails revalidation")
    return F, delta


# -- certification: from a candidate footprint to the located positions


_FREE_CAP = 8
_MEMBER_CAP = 6561


def _certify(spec: CodeSpec, syndrome: dict, phi1, delta: set) -> GroebnerBasis | None:
    """Certified locator basis on the footprint `delta`, or None.

    Solves, pivot by pivot, the affine family of monic polynomials whose
    shifts annihilate the known syndromes and which vanish on the erasures;
    a member certifies when its variety inside Psi has exactly |delta|
    points, contains the erasures, and interpolates back to the same
    footprint.  The certified basis returned is the reduced basis of that
    variety, so it is canonical regardless of which route found it.
    """
    field, order = spec.field, spec.order
    nvars = order.nvars
    slots = []
    total = 1
    for t in sorted(_pivots_of(delta, nvars), key=order.key):
        tail = sorted((s for s in delta if order.compare(s, t) < 0), key=order.key)
        rows, rhs = [], []
        for a in spec.r_set:
            if not vec_geq(a, t):
                continue
            rows.append(
                [
                    syndrome[tuple(x - y + z for x, y, z in zip(a, t, s))]
                    for s in tail
                ]
            )
            rhs.append(field.neg(syndrome[a]))
        for p in phi1:
            rows.append([monomial_eval(field, s, p) for s in tail])
            rhs.append(field.neg(monomial_eval(field, t, p)))
        sol = solve_affine(field, rows, rhs, ncols=len(tail))
        if sol is None or len(sol[1]) > _FREE_CAP:
            return None
        total *= field.q ** len(sol[1])
        if total > _MEMBER_CAP:
            return None
        slots.append((t, tail, sol[0], sol[1]))

    def members(slot):
        t, tail, part, null = slot
        for vals in product(range(field.q), repeat=len(null)):
            coeffs = list(part)
            for v, basis in zip(vals, null):
                if v:
                    coeffs = [
                        field.add(x, field.mul(v, y)) for x, y in zip(coeffs, basis)
                    ]
            poly = {t: 1}
            for s, c in zip(tail, coeffs):
                if c:
                    poly[s] = c
            yield poly

    best = None
    phi1_set = set(phi1)
    for combo in product(*[list(members(s)) for s in slots]):
        polys = [Poly(field, c) for c in combo]
        variety = [
            pt for pt in spec.psi if all(g.eval_at(pt) == 0 for g in polys)
        ]
        if len(variety) != len(delta) or not phi1_set <= set(variety):
            continue
        gbv = vanishing_ideal_gb(field, order, variety)
        if set(gbv.footprint) != delta:
            continue
        key = tuple(variety)
        if best is None or key < best[0]:
            best = (key, gbv)
    return best[1] if best else None


@lru_cache(maxsize=None)
def _radius_cap(spec: CodeSpec, n_erasures: int) -> int:
    d = feng_rao_bound(spec)
    return n_erasures + max(0, (d - 1 - n_erasures) // 2)


# -- the three locator routes


def erasure_locator(spec: CodeSpec, phi1) -> GroebnerBasis:
    """Locator basis of the known erasure positions, computed two ways.

    Route one runs the recurrence iteration on the periodic indicator
    power-sum array over the doubled box; route two interpolates the
    vanishing ideal from the points directly.  The routes agree identically
    on any input; disagreement is an implementation defect, not a channel
    event, and raises RuntimeError.
    """
    field, order, q = spec.field, spec.order, spec.field.q
    nvars = order.nvars
    phi1 = check_point_set(phi1, q, nvars)
    if not set(phi1) <= set(spec.psi):
        raise CodeSpecError("erasure positions must lie inside the code positions")
    direct = vanishing_ideal_gb(field, order, phi1)

    cache: dict = {}

    def lookup(pos):
        w = vec_wrap(pos, q - 1)
        if w not in cache:
            acc = 0
            for p in phi1:
                acc = field.add(acc, monomial_eval(field, w, p))
            cache[w] = acc
        return cache[w]

    region = sorted(product(range(2 * (q - 1)), repeat=nvars), key=order.key)
    F, _delta = _sakata_core(field, order, lookup, region, q - 1)
    reduced = reduce_basis(field, order, q, [Poly(field, f) for _t, f in F])
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    if [g.terms for g in reduced] != [g.terms for g in direct.polys]:
        raise RuntimeError("erasure locator routes disagree")
    return direct


def bms(spec: CodeSpec, syndrome: dict, init: GroebnerBasis | None = None, phi1=(), region=None) -> GroebnerBasis:
    """Locator basis from syndrome values on the public region R.

    With init/phi1 the iteration starts from the erasure locator basis.
    region defaults to R; passing the whole exponent box instead runs the
    same iteration on a full (periodic) syndrome array, which is used for
    validation.  Returns the certified basis whenever certification
    succeeds, falling back to downset supersets of the iteration footprint
    up to the decoding radius; otherwise returns the raw iteration result
    and leaves the verdict to downstream consistency checks.
    """
    field, order, q = spec.field, spec.order, spec.field.q
    nvars = order.nvars
    syndrome = {tuple(a): v for a, v in syndrome.items()}
    phi1 = tuple(tuple(p) for p in phi1)
    if region is None:
        region = list(spec.r_set)
    else:
        region = [tuple(a) for a in region]
    if not set(region) <= set(syndrome):
        raise CodeSpecError("syndrome must cover every region position")
    if set(region) == set(domain_points(q, nvars)):
        def lookup(pos):
            return syndrome[vec_wrap(pos, q - 1)]
    else:
        if sorted(region, key=order.key) != n0_prefix(order, len(region)):
            raise CodeSpecError(
                "syndrome region must be an initial segment of the monomial order"
            )
        def lookup(pos):
            return syndrome[pos]
    region = sorted(region, key=order.key)
    init_polys = init.polys if init is not None else None
    init_delta = set(init.footprint) if init is not None else None
    F, delta = _sakata_core(
        field, order, lookup, region, q - 1, init_polys, phi1, init_delta
    )

    cert = _certify(spec, syndrome, phi1, set(delta))
    if cert is not None:
        return cert
    cap = max(_radius_cap(spec, len(phi1)), len(delta))
    for d2 in _downsets(nvars, cap, frozenset(delta)):
        if len(d2) == len(delta):
            continue
        cert = _certify(spec, syndrome, phi1, set(d2))
        if cert is not None:
            return cert

    F = sorted(F, key=lambda p: order.key(p[0]))
    return GroebnerBasis(
        field,
        order,
        q,
        tuple(Poly(field, f) for _t, f in F),
        tuple(t for t, _f in F),
        frozenset(delta),
    )


def locator_oracle(spec: CodeSpec, syndrome: dict, phi1=()) -> GroebnerBasis | None:
    """Independent locator search: no iteration, dense linear algebra only.

    Enumerates candidate footprints (order ideals containing the erasure
    footprint) by increasing size up to the decoding radius and returns the
    first certified basis; None when nothing within the radius certifies.
    Agrees with bms() whenever the correctability bound holds.
    """
    field, order = spec.field, spec.order
    syndrome = {tuple(a): v for a, v in syndrome.items()}
    phi1 = tuple(tuple(p) for p in phi1)
    base = frozenset(
        vanishing_ideal_gb(field, order, phi1).footprint if phi1 else ()
    )
    cap = max(_radius_cap(spec, len(phi1)), len(base))
    for delta in _downsets(order.nvars, cap, base):
        got = _certify(spec, syndrome, phi1, set(delta))
        if got is not None:
            return got
    return None


# -- the decoding pipeline


def syndrome_array(spec: CodeSpec, u: dict) -> dict:
    """Full syndrome array (power sums over all exponents) of a word on Psi."""
    u = {tuple(p): v for p, v in u.items()}
    if set(u) != set(spec.psi):
        raise CodeSpecError("word must cover exactly the code positions")
    nvars = spec.order.nvars
    return dft(spec.field, include(u, spec.field.q, nvars), nvars)


def _extend_symbolic(gb: GroebnerBasis, delta_sorted):
    """Box values as coefficient vectors over the footprint seed values."""
    field, q1 = gb.field, gb.q - 1
    dim = len(delta_sorted)
    arr = {}
    for i, s in enumerate(delta_sorted):
        v = [0] * dim
        v[i] = 1
        arr[s] = v
    pending = [a for a in enumerate_order(gb.order, gb.q) if a not in arr]
    while pending:
        progressed = False
        for a in pending:
            for w, piv in enumerate(gb.pivots):
                if not all(x >= y for x, y in zip(a, piv)):
                    continue
                g = gb.polys[w]
                operands = {
                    s: vec_wrap(vec_sub(vec_add_safe(a, s), piv), q1)
                    for s in g.terms
                    if s != piv
                }
                if any(idx not in arr for idx in operands.values()):
                    continue
                acc = [0] * dim
                for s, idx in operands.items():
                    c = g.terms[s]
                    acc = [
                        field.add(x, field.mul(c, y)) for x, y in zip(acc, arr[idx])
                    ]
                arr[a] = [field.neg(x) for x in acc]
                pending.remove(a)
                progressed = True
                break
            if progressed:
                break
        if not progressed:
            raise ExtensionError("generation stalled: no target has its operands")
    return arr


def _seed_outside_r(spec: CodeSpec, loc: GroebnerBasis, syn_r: dict):
    """Solve for footprint syndrome values when the footprint leaves R."""
    order, field = spec.order, spec.field
    delta_sorted = sorted(loc.footprint, key=order.key)
    try:
        sym = _extend_symbolic(loc, delta_sorted)
    except ExtensionError as ex:
        return None, f"syndrome extension inconsistent: {ex}"
    rows = [sym[a] for a in spec.r_set]
    rhs = [syn_r[a] for a in spec.r_set]
    sol = solve_affine(field, rows, rhs, ncols=len(delta_sorted))
    if sol is None:
        return None, "syndrome values inconsistent with the locator recurrences"
    if sol[1]:
        return None, "syndrome values outside the known region are underdetermined"
    return dict(zip(delta_sorted, sol[0])), ""


def decode(spec: CodeSpec, received: dict, erasures=()) -> DecodeResult:
    """Erasure-and-error decoding of a received word.

    erasures lists known-unreliable positions; their received values are
    ignored (zeroed) before decoding.  Malformed inputs raise; everything
    the channel can cause comes back as a DecodeResult, with failures
    naming the check that tripped.
    """
    field, order, q = spec.field, spec.order, spec.field.q
    received = {tuple(p): v for p, v in received.items()}
    if set(received) != set(spec.psi):
        raise CodeSpecError("received word must cover exactly the code positions")
    if any(not (0 <= v < q) for v in received.values()):
        raise CodeSpecError("received values must be field elements")
    if not spec.syndrome_is_prefix():
        raise CodeSpecError(
            "decoding needs R to be an initial segment of the monomial order"
        )
    phi1 = check_point_set(erasures, q, order.nvars)
    if not set(phi1) <= set(spec.psi):
        raise CodeSpecError("erasure positions must lie inside the code positions")

    work = dict(received)
    for p in phi1:
        work[p] = 0
    er_gb = erasure_locator(spec, phi1) if phi1 else None
    syn = syndrome_array(spec, work)
    syn_r = {a: syn[a] for a in spec.r_set}
    loc = bms(spec, syn_r, init=er_gb, phi1=phi1)

    delta = sorted(loc.footprint, key=order.key)
    if set(delta) <= set(spec.r_set):
        seed = {a: syn_r[a] for a in delta}
    else:
        seed, why = _seed_outside_r(spec, loc, syn_r)
        if seed is None:
            return DecodeResult("failure", None, None, loc, why)
    try:
        err = c_map(loc, seed, onto=spec.psi)
    except ExtensionError as ex:
        return DecodeResult(
            "failure", None, None, loc, f"syndrome extension inconsistent: {ex}"
        )
    except ValueError as ex:
        return DecodeResult(
            "failure", None, None, loc, f"error transform check failed: {ex}"
        )
    cw = {pt: field.sub(work[pt], err[pt]) for pt in spec.psi}
    residue = parity_check(spec, cw)
    if any(residue.values()):
        return DecodeResult(
            "failure", None, None, loc, "parity residue after correction"
        )
    return DecodeResult("corrected", cw, err, loc)
