import hashlib
import random
from importlib import resources

import pytest

from domino_forge.board import BoardDims
from domino_forge.enumeration import count_tilings_oracle
from domino_forge.errors import FixtureError, IndexOutOfRange, WidthTooLarge
from domino_forge.series import PUBLISHED_C
from domino_forge.transfer import (
    BigMatrix,
    MultiplicationCounter,
    build_column_transfer,
    count_via_transfer,
    matrix_power,
    matrix_power_entry,
    paper_matrix_C,
    parse_compact_fixture,
    transfer_sequence,
    verify_compact,
)

FIXTURE_TEXT = resources.files("domino_forge.data").joinpath("compact_c.txt").read_text("ascii")


def test_width_one_matrix():
    t = build_column_transfer(1)
    assert t.entries == ((0, 1), (1, 0))


def test_width_two_empty_to_empty():
    assert build_column_transfer(2).entries[0][0] == 1


def test_width_six_square_gives_c1():
    t = build_column_transfer(6).as_big_matrix()
    assert (t @ t)[0, 0] == 13


@pytest.mark.parametrize(
    "width, cols, expected",
    [(6, 6, 6728), (6, 34, 314771823879840325570888), (6, 0, 1), (8, 8, 12988816), (3, 2, 3)],
)
def test_count_examples(width, cols, expected):
    assert count_via_transfer(width, cols) == expected


def test_width_bounds():
    with pytest.raises(WidthTooLarge):
        build_column_transfer(13)
    with pytest.raises(WidthTooLarge):
        count_via_transfer(0, 4)


@pytest.mark.parametrize("width", range(1, 9))
def test_transfer_matches_oracle(width):
    for cols in range(13):
        if cols == 0:
            continue
        assert count_via_transfer(width, cols) == count_tilings_oracle(BoardDims(width, cols))


def _reverse_bits(x, width):
    return int(format(x, f"0{width}b")[::-1], 2)


@pytest.mark.parametrize("width", [2, 4, 5, 6])
def test_column_reversal_and_row_flip_invariance(width):
    t = build_column_transfer(width).entries
    size = 1 << width
    for a in range(size):
        for b in range(size):
            # reading the board right to left swaps the in/out profiles
            assert t[a][b] == t[b][a]
            # reading it upside down reverses the bit order
            assert t[a][b] == t[_reverse_bits(a, width)][_reverse_bits(b, width)]


def test_transfer_sequence_steps():
    assert transfer_sequence(6, 18, step=2) == list(PUBLISHED_C)
    assert transfer_sequence(2, 8) == [1, 1, 2, 3, 5, 8, 13, 21]


def test_compact_matrix_basics():
    c = paper_matrix_C()
    assert c.dim == 20
    assert c.is_symmetric()
    assert c.trace() == 63
    assert c[0, 0] == 13
    assert c.rows[0] == (13, 5, 3, 4, 3, 5, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1, 1)


@pytest.mark.parametrize("n, expected", [(1, 13), (2, 281), (3, 6728), (17, 314771823879840325570888)])
def test_compact_power_entry(n, expected):
    assert matrix_power_entry(paper_matrix_C(), n, 0, 0) == expected


def test_power_zero_is_identity():
    c = paper_matrix_C()
    assert matrix_power(c, 0) == BigMatrix.identity(20)
    assert matrix_power_entry(c, 0, 4, 4) == 1
    assert matrix_power_entry(c, 0, 4, 5) == 0


def test_power_entry_index_checks():
    with pytest.raises(IndexOutOfRange):
        matrix_power_entry(paper_matrix_C(), 3, 20, 0)
    with pytest.raises(IndexOutOfRange):
        matrix_power_entry(paper_matrix_C(), 3, 0, -1)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 15, 16, 17, 100, 255, 256, 4096])
def test_multiplication_count_bounds(n):
    counter = MultiplicationCounter()
    matrix_power(BigMatrix(((1, 1), (1, 0))), n, counter)
    low = n.bit_length() - 1
    assert low <= counter.count <= 2 * low


def test_4096_uses_twelve_products():
    counter = MultiplicationCounter()
    matrix_power(BigMatrix(((1, 1), (1, 0))), 4096, counter)
    assert counter.count == 12


def test_fibonacci_matrix():
    assert matrix_power_entry(BigMatrix(((1, 1), (1, 0))), 90, 0, 1) == 2880067194370816120


def test_power_additivity_on_compact():
    c = paper_matrix_C()
    rng = random.Random(7)
    for _ in range(5):
        a, b = rng.randrange(12), rng.randrange(12)
        assert matrix_power(c, a + b).rows == (matrix_power(c, a) @ matrix_power(c, b)).rows


def test_verify_compact_table():
    report = verify_compact(paper_matrix_C(), 17, reference=PUBLISHED_C)
    assert report.ok and report.checked == 18


def test_verify_compact_against_transfer():
    assert verify_compact(paper_matrix_C(), 30).ok


def test_verify_compact_reports_mismatch():
    report = verify_compact(BigMatrix.identity(20), 3)
    assert not report.ok
    assert report.mismatch == (1, 1, 13)
    assert report.to_json()["mismatch"]["n"] == 1


def _with_body(lines):
    body = "".join(line + "\n" for line in lines)
    digest = hashlib.sha256(body.encode()).hexdigest()
    return f"# domino-forge compact matrix, format 1\n# sha256 {digest}\n{body}"


def _body():
    return [line for line in FIXTURE_TEXT.splitlines() if not line.startswith("#")]


def test_fixture_round_trip():
    assert parse_compact_fixture(_with_body(_body())) == paper_matrix_C()


def test_fixture_checksum_guard():
    tampered = FIXTURE_TEXT.replace("\n13 5 3 4", "\n13 5 3 5", 1)
    with pytest.raises(FixtureError, match="checksum"):
        parse_compact_fixture(tampered)


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda rows: rows[:19], "19 rows"),
        (lambda rows: [rows[0] + " 0"] + rows[1:], "21 entries"),
        (lambda rows: [rows[0].replace("13", "x", 1)] + rows[1:], "row 1"),
        (lambda rows: [rows[0].replace("13", "-13", 1)] + rows[1:], "negative"),
        (lambda rows: [rows[0].replace("13 5", "13 6", 1)] + rows[1:], "symmetric"),
    ],
)
def test_fixture_rejects_malformed(mutate, message):
    with pytest.raises(FixtureError, match=message):
        parse_compact_fixture(_with_body(mutate(_body())))


def test_fixture_rejects_bad_header():
    with pytest.raises(FixtureError, match="header"):
        parse_compact_fixture(FIXTURE_TEXT.replace("format 1", "format 2"))
