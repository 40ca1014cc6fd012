from avcodes.bench import (
    DEFAULT_DECODE_PRIMES,
    DEFAULT_DFT_SIZES,
    decode_rows,
    dft_rows,
    field_for,
    format_decode_table,
    format_dft_table,
)


def test_field_for_known_orders():
    assert field_for(11).q == 11
    assert field_for(9).q == 9
    assert field_for(8).q == 8


def test_dft_rows_are_deterministic():
    rows = dft_rows(DEFAULT_DFT_SIZES, seed=0)
    assert rows == dft_rows(DEFAULT_DFT_SIZES, seed=0)
    assert [(r["q"], r["N"]) for r in rows] == list(DEFAULT_DFT_SIZES)


def test_dft_naive_cost_is_quadratic_in_box():
    for row in dft_rows(DEFAULT_DFT_SIZES, seed=0):
        box = row["box"]
        assert box == (row["q"] - 1) ** row["N"]
        assert row["naive_muldiv"] == box * box
        assert row["naive_addsub"] == box * box


def test_fast_transform_gains_grow_with_box_size():
    rows = dft_rows(DEFAULT_DFT_SIZES, seed=0)
    ratios = [row["ratio"] for row in rows]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    for row in rows:
        assert row["fast_muldiv"] <= row["naive_muldiv"]
        assert row["fast_addsub"] <= row["naive_addsub"]


def test_decode_rows_track_the_cost_model():
    rows = decode_rows(DEFAULT_DECODE_PRIMES, seed=1)
    assert rows == decode_rows(DEFAULT_DECODE_PRIMES, seed=1)
    assert [row["q"] for row in rows] == list(DEFAULT_DECODE_PRIMES)
    scaled = [row["scaled"] for row in rows]
    assert max(scaled) / min(scaled) < 2.0
    for row in rows:
        assert row["n"] == row["q"] - 1
        assert row["model"] == row["d"] * row["n"] ** 2 + row["n"] * row["q"]


def test_tables_have_headers_and_rows():
    dft_table = format_dft_table(dft_rows(((11, 1),), seed=0))
    assert dft_table[0].startswith("#")
    assert len(dft_table) == 2
    decode_table = format_decode_table(decode_rows((11,), seed=1))
    assert decode_table[0].startswith("#")
    assert len(decode_table) == 2


def test_empty_inputs_give_header_only_tables():
    assert dft_rows((), seed=0) == []
    assert decode_rows((), seed=1) == []
    assert len(format_dft_table([])) == 1
    assert len(format_decode_table([])) == 1
