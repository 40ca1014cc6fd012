import random

from avcodes.field import build_field, count_ops
from avcodes.transform import (
    dft,
    dft_naive,
    domain_points,
    eval_poly_vector,
    idft,
    idft_naive,
    zero_array,
)


def gf9():
    return build_field(3, 2, modulus=(2, 1, 1), alpha=3)


def as_array(values):
    return {(i,): v for i, v in enumerate(values)}


def row(arr, n):
    return [arr[(i,)] for i in range(n)]


INFO = [0, 0, 0, 0, 1, 7, 3, 2, 0, 5]
INFO_DFT = [7, 3, 3, 1, 5, 1, 6, 5, 3, 10]
D_ROW = [7, 3, 3, 1, 3, 0, 4, 4, 6, 4]
D_IDFT = [9, 2, 0, 7, 0, 0, 0, 0, 0, 0]
NONSYS = [7, 10, 3, 5, 6, 1, 5, 1, 3, 3]


def test_dft_known_vector():
    f = build_field(11)
    for fast in (False, True):
        out = dft(f, as_array(INFO), 1, fast=fast)
        assert row(out, 10) == INFO_DFT


def test_idft_known_vector():
    f = build_field(11)
    for fast in (False, True):
        out = idft(f, as_array(D_ROW), 1, fast=fast)
        assert row(out, 10) == D_IDFT


def test_dft_trivials():
    f = build_field(11)
    z = zero_array(11, 1)
    assert dft(f, z, 1) == z
    # the all-ones torus array transforms to -1 at exponent 0, zero elsewhere
    ones = {pt: 1 for pt in domain_points(11, 1)}
    out = dft(f, ones, 1)
    assert out[(0,)] == 10
    assert all(v == 0 for a, v in out.items() if a != (0,))


def test_character_sum():
    for f in (build_field(11), gf9()):
        n = f.q - 1
        for k in range(2 * n):
            s = 0
            for i in range(n):
                s = f.add(s, f.exp_alpha(i * k))
            assert s == (f.neg(1) if k % n == 0 else 0)


def test_round_trip_all_schemes():
    rng = random.Random(1)
    cases = [(build_field(11), 1), (gf9(), 2), (build_field(2, 3), 2)]
    for f, nv in cases:
        pts = domain_points(f.q, nv)
        for _ in range(25):
            c = {pt: rng.randrange(f.q) for pt in pts}
            for fast in (False, True):
                assert idft(f, dft(f, c, nv, fast=fast), nv, fast=fast) == c
                assert dft(f, idft(f, c, nv, fast=fast), nv, fast=fast) == c


def test_fast_equals_naive():
    rng = random.Random(2)
    f = gf9()
    pts = domain_points(9, 2)
    for _ in range(10):
        c = {pt: rng.randrange(9) for pt in pts}
        assert dft(f, c, 2, fast=True) == dft_naive(f, c, 2)
        assert idft(f, c, 2, fast=True) == idft_naive(f, c, 2)


def test_linearity():
    rng = random.Random(3)
    f = gf9()
    pts = domain_points(9, 2)
    for _ in range(5):
        a = {pt: rng.randrange(9) for pt in pts}
        b = {pt: rng.randrange(9) for pt in pts}
        s = {pt: f.add(a[pt], b[pt]) for pt in pts}
        da, db, ds = dft(f, a, 2), dft(f, b, 2), dft(f, s, 2)
        assert all(ds[pt] == f.add(da[pt], db[pt]) for pt in pts)


def test_eval_poly_vector_known():
    f = build_field(11)
    h = {(4,): 1, (5,): 7, (6,): 3, (7,): 2, (9,): 5}
    out = eval_poly_vector(f, h, 1)
    assert row(out, 10) == NONSYS
    # at the point alpha^0 = 1 this is the coefficient sum
    assert eval_poly_vector(f, h, 1, at=(0,)) == 7
    assert eval_poly_vector(f, {}, 1, at=(3,)) == 0
    empty = eval_poly_vector(f, {}, 1)
    assert all(v == 0 for v in empty.values())


def test_eval_poly_vector_vs_idft_sign():
    # same data: eval vector differs from idft exactly by the (-1)^N factor
    f = build_field(11)
    h = as_array(D_ROW)
    ev = eval_poly_vector(f, h, 1)
    iv = idft(f, h, 1)
    assert all(iv[pt] == f.neg(ev[pt]) for pt in domain_points(11, 1))


def test_op_counts_naive_and_fast():
    f11 = build_field(11)
    c = as_array(INFO)
    with count_ops() as naive:
        dft_naive(f11, c, 1)
    assert naive.muldiv == 100

    f9 = gf9()
    arr = {pt: 1 for pt in domain_points(9, 2)}
    with count_ops() as cn:
        dft(f9, arr, 2, fast=False)
    with count_ops() as cf:
        dft(f9, arr, 2, fast=True)
    assert cn.muldiv == 64 * 64
    assert cf.muldiv == 2 * 8 * 8 * 8  # two axis passes of 8 length-8 lines
    assert cf.muldiv < cn.muldiv


def test_custom_kernel_seam():
    calls = []

    def spy_kernel(field, line, inverse):
        calls.append(inverse)
        from avcodes.transform import direct_kernel

        return direct_kernel(field, line, inverse)

    f = gf9()
    arr = {pt: (pt[0] + pt[1]) % 9 for pt in domain_points(9, 2)}
    out = dft(f, arr, 2, kernel=spy_kernel)
    assert out == dft_naive(f, arr, 2)
    assert len(calls) == 16 and not any(calls)
