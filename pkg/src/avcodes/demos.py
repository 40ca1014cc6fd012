"""Self-checking walkthroughs of the two worked examples.

Each demo recomputes a full encode/decode chain, verifies every labeled
intermediate against the frozen expected values, and emits a byte-stable
transcript.  A mismatch raises DemoMismatch, so a clean transcript doubles
as a regression proof for the worked-example numbers.
"""

from __future__ import annotations

from avcodes.codes import (
    HERMITIAN_PHI,
    encode_dual_nonsystematic,
    encode_systematic,
    feng_rao_bound,
    hermitian_preset,
    rs_preset,
)
from avcodes.decoder import bms, decode, syndrome_array
from avcodes.groebner import vanishing_ideal_gb
from avcodes.recurrence import extend, include, restrict_a
from avcodes.transform import dft, idft

RS_INFO = [1, 7, 3, 2, 0, 5]
RS_DIRECT_CODEWORD = [7, 10, 3, 5, 6, 1, 5, 1, 3, 3]
RS_INFO_TRANSFORM = [7, 3, 3, 1, 5, 1, 6, 5, 3, 10]
RS_PARITY_TRANSFORM = [7, 3, 3, 1, 3, 0, 4, 4, 6, 4]
RS_PARITY_FILLER = [2, 9, 0, 4, 0, 0, 0, 0, 0, 0]
RS_SYSTEMATIC = [2, 9, 0, 4, 1, 7, 3, 2, 0, 5]
RS_RECEIVED = [1, 9, 0, 4, 1, 7, 3, 2, 0, 10]
RS_RECEIVED_TRANSFORM = [4, 7, 3, 1, 2, 6, 4, 7, 5, 4]
RS_LOCATOR_COEFFS = [6, 4, 1]
RS_EXTENDED_SYNDROMES = [4, 7, 3, 1, 0, 5, 2, 6, 8, 9]
RS_ERROR = [10, 0, 0, 0, 0, 0, 0, 0, 0, 5]

HERM_PARITY_BASIS = [
    "1 + x^4",
    "1 + y + y^3",
    "a^1 + a^2*x + a^5*y + a^3*x^2 + a^6*x*y + a^4*x^3 + a^7*x^2*y + x^3*y",
    "a^5 + a^1*x + a^7*y + a^1*x^2 + a^3*x*y + a^4*y^2 + a^3*x^2*y + x*y^2 + x^2*y^2",
]
HERM_ERROR_POINTS = [(1, 0), (0, 4), (6, 4)]
HERM_ERROR_VALUES = [1, 2, 3]
HERM_LOCATOR_BASIS = [
    "a^2 + a^5*x + a^6*y + x^2",
    "a^5 + x + a^5*y + x*y",
    "a^4 + y^2",
]


class DemoMismatch(RuntimeError):
    def __init__(self, label: str, got, want):
        super().__init__(f"{label}: got {got}, expected {want}")


def _row(lines: list[str], label: str, got: list[int], want: list[int]):
    if got != want:
        raise DemoMismatch(label, got, want)
    lines.append(f"{label}: {' '.join(str(v) for v in got)}")


def _basis(lines: list[str], label: str, got: list[str], want: list[str]):
    if got != want:
        raise DemoMismatch(label, got, want)
    lines.append(f"{label}:")
    lines.extend(f"  {entry}" for entry in got)


def rs_lines() -> list[str]:
    spec = rs_preset()
    field = spec.field
    lines = [f"== reed-solomon code over GF(11), n={spec.n}, k={spec.k} =="]

    info = {pt: v for pt, v in zip(spec.info_positions(), RS_INFO)}
    _row(lines, "information (positions a^4..a^9)", RS_INFO, RS_INFO)
    message = {(i,): v for (i,), v in info.items()}
    direct = encode_dual_nonsystematic(spec, message, classic=True)
    _row(
        lines,
        "direct evaluation codeword (h(a^-i))",
        [direct[pt] for pt in spec.psi],
        RS_DIRECT_CODEWORD,
    )

    included = include(info, field.q, 1)
    info_hat = dft(field, included, 1)
    _row(
        lines,
        "transform of included information (h(a^i))",
        [info_hat[(i,)] for i in range(10)],
        RS_INFO_TRANSFORM,
    )
    parity_hat = extend(spec.gb_phi, restrict_a(info_hat, spec.r_set))
    _row(
        lines,
        "parity-extended transform (d_i)",
        [parity_hat[(i,)] for i in range(10)],
        RS_PARITY_TRANSFORM,
    )
    filler = idft(field, parity_hat, 1)
    _row(
        lines,
        "parity filler (-d(a^-i))",
        [field.neg(filler[(i,)]) for i in range(10)],
        RS_PARITY_FILLER,
    )
    systematic = encode_systematic(spec, info)
    _row(
        lines,
        "systematic codeword",
        [systematic[pt] for pt in spec.psi],
        RS_SYSTEMATIC,
    )

    received = dict(zip(spec.psi, RS_RECEIVED))
    _row(lines, "received word", RS_RECEIVED, RS_RECEIVED)
    syn = syndrome_array(spec, received)
    _row(
        lines,
        "received transform",
        [syn[(i,)] for i in range(10)],
        RS_RECEIVED_TRANSFORM,
    )
    locator = bms(spec, {a: syn[a] for a in spec.r_set})
    sigma = locator.polys[0]
    coeffs = [sigma.coeff((l,)) for l in range(3)]
    _row(lines, "locator coefficients (sigma_0 sigma_1 sigma_2)", coeffs, RS_LOCATOR_COEFFS)
    extended = extend(locator, {a: syn[a] for a in locator.footprint})
    _row(
        lines,
        "extended syndromes",
        [extended[(i,)] for i in range(10)],
        RS_EXTENDED_SYNDROMES,
    )
    result = decode(spec, received)
    if result.status != "corrected":
        raise DemoMismatch("decode status", result.status, "corrected")
    _row(lines, "error vector", [result.error[pt] for pt in spec.psi], RS_ERROR)
    _row(
        lines,
        "corrected codeword",
        [result.codeword[pt] for pt in spec.psi],
        RS_SYSTEMATIC,
    )
    lines.append("all rows verified; decode status corrected")
    return lines


def hermitian_lines() -> list[str]:
    spec = hermitian_preset()
    lines = [f"== hermitian code over GF(9), n={spec.n}, k={spec.k} =="]
    bound = feng_rao_bound(spec)
    if bound != 7:
        raise DemoMismatch("designed distance", bound, 7)
    lines.append(f"designed distance (order bound): {bound}")
    lines.append(
        "syndrome exponents R: " + " ".join(f"({a},{b})" for a, b in spec.r_set)
    )
    lines.append(
        "parity positions (dlog pairs): "
        + " ".join(f"({a},{b})" for a, b in HERMITIAN_PHI)
    )

    parity_gb = vanishing_ideal_gb(spec.field, spec.order, list(HERMITIAN_PHI))
    _basis(lines, "vanishing ideal basis of the parity set", parity_gb.describe(), HERM_PARITY_BASIS)
    if set(parity_gb.footprint) != set(spec.r_set):
        raise DemoMismatch(
            "parity footprint", sorted(parity_gb.footprint), sorted(spec.r_set)
        )
    lines.append("footprint of the parity ideal equals R: yes")

    lines.append(
        "errors injected: "
        + " ".join(
            f"({a},{b})={v}"
            for (a, b), v in zip(HERM_ERROR_POINTS, HERM_ERROR_VALUES)
        )
    )
    word = {pt: 0 for pt in spec.psi}
    for pt, v in zip(HERM_ERROR_POINTS, HERM_ERROR_VALUES):
        word[pt] = v
    result = decode(spec, word)
    if result.status != "corrected":
        raise DemoMismatch("decode status", result.status, "corrected")
    _basis(
        lines,
        "locator basis from syndrome decoding",
        result.locator.describe(),
        HERM_LOCATOR_BASIS,
    )
    recovered = [
        (pt, result.error[pt]) for pt in spec.psi if result.error[pt] != 0
    ]
    want = list(zip(HERM_ERROR_POINTS, HERM_ERROR_VALUES))
    if sorted(recovered) != sorted(want):
        raise DemoMismatch("recovered errors", recovered, want)
    lines.append(
        "recovered errors: "
        + " ".join(f"({a},{b})={v}" for (a, b), v in sorted(recovered))
    )
    if any(v != 0 for v in result.codeword.values()):
        raise DemoMismatch("residual codeword", "nonzero", "zero")
    lines.append("corrected word is the zero codeword: yes")
    lines.append("all bases and recovered values verified")
    return lines


_DEMOS = {"rs": rs_lines, "hermitian": hermitian_lines}


def transcript(name: str) -> str:
    if name not in _DEMOS:
        raise ValueError(f"unknown demo {name!r} (choose from {sorted(_DEMOS)})")
    return "\n".join(_DEMOS[name]()) + "\n"
