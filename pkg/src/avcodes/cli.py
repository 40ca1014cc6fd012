"""Command-line front end.

Exit codes: 0 success, 2 malformed input files or arguments, 3 semantic
spec violations, 4 decode or parity-check failure, 1 demo self-test
mismatch.
"""

from __future__ import annotations

import argparse
import sys

from avcodes.bench import (
    DEFAULT_DECODE_PRIMES,
    DEFAULT_DFT_SIZES,
    decode_rows,
    dft_rows,
    format_decode_table,
    format_dft_table,
)
from avcodes.codes import (
    CodeSpecError,
    encode_dual_nonsystematic,
    encode_systematic,
    feng_rao_bound,
    parity_check,
)
from avcodes.decoder import decode
from avcodes.demos import DemoMismatch, transcript
from avcodes.field import build_field
from avcodes.specfile import (
    SpecFileError,
    format_vector,
    load_spec,
    parse_vector_text,
    serialize_spec,
)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_vector(spec, path: str, expected_index: str, expected_len: int):
    index, values = parse_vector_text(_read_input(path), spec.field)
    if index is not None and index != expected_index:
        raise SpecFileError(
            f"vector declares index set {index!r}, expected {expected_index!r}"
        )
    if len(values) != expected_len:
        raise CodeSpecError(
            f"expected {expected_len} values over {expected_index}, got {len(values)}"
        )
    return values


def _fmt_point(pt) -> str:
    return "(" + ",".join(str(x) for x in pt) + ")"


def cmd_field_info(args) -> int:
    modulus = None
    if args.modulus:
        modulus = tuple(int(tok) for tok in args.modulus.split(","))
    alpha = int(args.alpha) if args.alpha is not None else None
    field = build_field(args.p, args.m, modulus=modulus, alpha=alpha)
    print(f"order: {field.q}")
    print(f"characteristic: {field.p}")
    print(f"degree: {field.m}")
    if field.m > 1:
        print(
            "modulus coefficients (constant first): "
            + " ".join(str(c) for c in field.modulus)
        )
        print(f"generator (int form): {field.alpha}")
        powers = " ".join(
            f"a^{k}={field.exp_alpha(k)}" for k in range(field.q - 1)
        )
        print(f"powers: {powers}")
    return 0


def cmd_code_make(args) -> int:
    spec = load_spec(args.spec)
    text = serialize_spec(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_code_describe(args) -> int:
    spec = load_spec(args.spec)
    if spec.name:
        print(f"name: {spec.name}")
    print(f"field: GF({spec.field.q})")
    print(f"variables: {spec.order.nvars}, weights {tuple(spec.order.weights)}")
    print(f"length n: {spec.n}")
    print(f"dimension k: {spec.k}")
    print(f"syndrome exponents R ({len(spec.r_set)}): "
          + " ".join(_fmt_point(a) for a in spec.r_set))
    print(f"designed distance: {feng_rao_bound(spec)}")
    if spec.phi is not None:
        print("parity positions: " + " ".join(_fmt_point(p) for p in spec.phi))
    return 0


def cmd_encode(args) -> int:
    spec = load_spec(args.spec)
    if args.mode == "systematic":
        values = _load_vector(spec, args.infile, "information", spec.k)
        info = dict(zip(spec.info_positions(), values))
        cw = encode_systematic(spec, info)
    else:
        exps = sorted(
            set(spec.footprint) - set(spec.r_set), key=spec.order.key
        )
        values = _load_vector(spec, args.infile, "information", len(exps))
        message = {e: v for e, v in zip(exps, values) if v}
        cw = encode_dual_nonsystematic(spec, message)
    out = format_vector(
        [cw[pt] for pt in spec.psi], spec.field, index="psi", int_form=args.int_form
    )
    sys.stdout.write(out)
    return 0


def cmd_decode(args) -> int:
    spec = load_spec(args.spec)
    values = _load_vector(spec, args.infile, "psi", spec.n)
    erasures = []
    if args.erasures:
        for tok in args.erasures.split(","):
            i = int(tok)
            if not 0 <= i < spec.n:
                raise CodeSpecError(f"erasure index {i} outside 0..{spec.n - 1}")
            erasures.append(spec.psi[i])
    word = dict(zip(spec.psi, values))
    result = decode(spec, word, erasures=erasures)
    print(f"status: {result.status}")
    if result.status != "corrected":
        print(f"reason: {result.detail}")
        return 4
    fmt = spec.field.format
    print(
        "codeword: "
        + " ".join(fmt(result.codeword[pt], args.int_form) for pt in spec.psi)
    )
    errs = [
        (pt, v) for pt, v in ((pt, result.error[pt]) for pt in spec.psi) if v
    ]
    if errs:
        print(
            "errors: "
            + " ".join(f"{_fmt_point(pt)}={fmt(v, args.int_form)}" for pt, v in errs)
        )
    else:
        print("errors: none")
    print("locator basis:")
    for line in result.locator.describe(int_form=args.int_form):
        print(f"  {line}")
    return 0


def cmd_check(args) -> int:
    spec = load_spec(args.spec)
    values = _load_vector(spec, args.infile, "psi", spec.n)
    residue = parity_check(spec, dict(zip(spec.psi, values)))
    bad = {a: v for a, v in residue.items() if v}
    if not bad:
        print("parity: clean")
        return 0
    print(
        "parity residue: "
        + " ".join(
            f"{_fmt_point(a)}={spec.field.format(v, args.int_form)}"
            for a, v in sorted(bad.items())
        )
    )
    return 4


def cmd_demo(args) -> int:
    sys.stdout.write(transcript(args.name))
    return 0


def _parse_sizes(text: str):
    if text is None:
        return DEFAULT_DFT_SIZES
    text = text.strip()
    if not text:
        return ()
    sizes = []
    for tok in text.split(","):
        try:
            q, nvars = tok.split(":")
            sizes.append((int(q), int(nvars)))
        except ValueError as ex:
            raise SpecFileError(f"bad size entry {tok!r}, want q:N") from ex
    return tuple(sizes)


def cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    for line in format_dft_table(dft_rows(sizes, seed=args.seed)):
        print(line)
    print()
    primes = DEFAULT_DECODE_PRIMES if sizes else ()
    for line in format_decode_table(decode_rows(primes, seed=args.seed)):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avcodes",
        description="Encoding, decoding and inspection of dual affine variety codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="finite field utilities")
    field_sub = p_field.add_subparsers(dest="field_command", required=True)
    p_info = field_sub.add_parser("info", help="describe GF(p^m)")
    p_info.add_argument("--p", type=int, required=True)
    p_info.add_argument("--m", type=int, default=1)
    p_info.add_argument("--modulus", help="comma-separated coefficients, constant first")
    p_info.add_argument("--alpha", help="generator as an int")
    p_info.set_defaults(func=cmd_field_info)

    p_code = sub.add_parser("code", help="code spec files")
    code_sub = p_code.add_subparsers(dest="code_command", required=True)
    p_make = code_sub.add_parser("make", help="validate a spec and write canonical form")
    p_make.add_argument("--spec", required=True)
    p_make.add_argument("--out")
    p_make.set_defaults(func=cmd_code_make)
    p_desc = code_sub.add_parser("describe", help="summarize a code spec")
    p_desc.add_argument("--spec", required=True)
    p_desc.set_defaults(func=cmd_code_describe)

    p_enc = sub.add_parser("encode", help="encode an information vector")
    p_enc.add_argument("--spec", required=True)
    p_enc.add_argument("--in", dest="infile", default="-", help="vector file or -")
    p_enc.add_argument(
        "--mode", choices=("systematic", "nonsystematic"), default="systematic"
    )
    p_enc.add_argument("--int-form", action="store_true")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = sub.add_parser("decode", help="erasure-and-error decode a received word")
    p_dec.add_argument("--spec", required=True)
    p_dec.add_argument("--in", dest="infile", default="-", help="vector file or -")
    p_dec.add_argument(
        "--erasures",
        help="comma-separated 0-based positions into the canonical point order",
    )
    p_dec.add_argument("--int-form", action="store_true")
    p_dec.set_defaults(func=cmd_decode)

    p_chk = sub.add_parser("check", help="parity-check a word (exit 4 on residue)")
    p_chk.add_argument("--spec", required=True)
    p_chk.add_argument("--in", dest="infile", default="-", help="vector file or -")
    p_chk.add_argument("--int-form", action="store_true")
    p_chk.set_defaults(func=cmd_check)

    p_demo = sub.add_parser("demo", help="self-checking worked-example walkthroughs")
    p_demo.add_argument("name", choices=("rs", "hermitian"))
    p_demo.set_defaults(func=cmd_demo)

    p_bench = sub.add_parser("bench", help="field-operation count tables")
    p_bench.add_argument(
        "--sizes", help="comma-separated q:N list; empty string for headers only"
    )
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DemoMismatch as ex:
        print(f"demo mismatch: {ex}", file=sys.stderr)
        return 1
    except (SpecFileError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except (CodeSpecError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
