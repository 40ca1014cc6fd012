"""Deterministic field-operation counts for the transform and the decoder.

Counts come from the field layer's counting scope, so they reflect exactly
the table lookups performed; for fixed seeds the numbers are reproducible
to the digit.
"""

from __future__ import annotations

import random

from avcodes.codes import make_code, random_codeword
from avcodes.decoder import decode
from avcodes.field import build_field, count_ops
from avcodes.orders import MonomialOrder
from avcodes.transform import dft, domain_points

DEFAULT_DFT_SIZES = ((11, 1), (8, 2), (9, 2), (11, 2))
DEFAULT_DECODE_PRIMES = (11, 13, 17, 19)

_MODULI = {
    4: ((2, 2), (1, 1, 1), None),
    8: ((2, 3), (1, 1, 0, 1), None),
    9: ((3, 2), (2, 1, 1), 3),
    16: ((2, 4), (1, 1, 0, 0, 1), None),
    25: ((5, 2), (2, 1, 1), None),
    27: ((3, 3), (1, 2, 0, 1), None),
    49: ((7, 2), (3, 1, 1), None),
}


def field_for(q: int):
    """A field of order q; prime orders directly, known prime powers by table."""
    if q in _MODULI:
        (p, m), modulus, alpha = _MODULI[q]
        return build_field(p, m, modulus=modulus, alpha=alpha)
    return build_field(q)


def dft_rows(sizes=DEFAULT_DFT_SIZES, seed: int = 0) -> list[dict]:
    rows = []
    for q, nvars in sizes:
        field = field_for(q)
        rng = random.Random(seed * 1000003 + q * 101 + nvars)
        arr = {pt: rng.randrange(q) for pt in domain_points(q, nvars)}
        with count_ops() as naive:
            dft(field, arr, nvars, fast=False)
        with count_ops() as fast:
            dft(field, arr, nvars, fast=True)
        rows.append(
            {
                "q": q,
                "N": nvars,
                "box": (q - 1) ** nvars,
                "naive_addsub": naive.addsub,
                "naive_muldiv": naive.muldiv,
                "fast_addsub": fast.addsub,
                "fast_muldiv": fast.muldiv,
                "ratio": fast.total() / naive.total(),
            }
        )
    return rows


def decode_rows(primes=DEFAULT_DECODE_PRIMES, seed: int = 1) -> list[dict]:
    """Decode op-counts for the prime-field family with syndrome set {0..3}.

    Every member has designed distance 5, so two errors are always in
    bound; the reference shape is d*n^2 + n*q (syndrome pass plus the
    iteration/evaluation core).
    """
    rows = []
    for q in primes:
        field = build_field(q)
        order = MonomialOrder((1,))
        spec = make_code(field, order, domain_points(q, 1), weight_cutoff=3)
        rng = random.Random(seed * 1000003 + q * 101)
        cw = random_codeword(spec, rng)
        pts = rng.sample(spec.psi, 2)
        work = dict(cw)
        for pt in pts:
            work[pt] = (work[pt] + rng.randrange(1, q)) % q
        with count_ops() as counter:
            result = decode(spec, work)
        if result.status != "corrected" or result.codeword != cw:
            raise RuntimeError(f"bench decode failed for q={q}")
        n, d = spec.n, 5
        model = d * n * n + n * q
        rows.append(
            {
                "q": q,
                "n": n,
                "d": d,
                "ops": counter.total(),
                "model": model,
                "scaled": counter.total() / model,
            }
        )
    return rows


def format_dft_table(rows) -> list[str]:
    lines = ["# q N box naive_addsub naive_muldiv fast_addsub fast_muldiv fast/naive"]
    for r in rows:
        lines.append(
            f"{r['q']} {r['N']} {r['box']} {r['naive_addsub']} {r['naive_muldiv']} "
            f"{r['fast_addsub']} {r['fast_muldiv']} {r['ratio']:.4f}"
        )
    return lines


def format_decode_table(rows) -> list[str]:
    lines = ["# q n d ops model ops/model"]
    for r in rows:
        lines.append(
            f"{r['q']} {r['n']} {r['d']} {r['ops']} {r['model']} {r['scaled']:.4f}"
        )
    return lines
