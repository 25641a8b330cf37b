"""Expression parser and file loaders."""

import random
from fractions import Fraction

import pytest

from twoloop.contraction import CLASP_BEAD, LinkingMatrix
from twoloop.laurent import ONE, T, LaurentPoly
from twoloop.parse import (FileFormatError, ParseError, load_linking,
                           load_seifert, parse_laurent)
from twoloop.seifert import SeifertMatrix

from util import random_laurent


def test_parse_frozen_examples():
    assert parse_laurent("t + t^-1 - 2") == CLASP_BEAD
    assert parse_laurent("3/2*t^2 - t^-3") == LaurentPoly({2: Fraction(3, 2), -3: -1})
    assert parse_laurent("1") == ONE
    assert parse_laurent("0") == LaurentPoly()
    assert parse_laurent("-t + 1") == 1 - T
    assert parse_laurent("t") == T
    assert parse_laurent("t^5") == T ** 5
    assert parse_laurent("-3") == LaurentPoly(-3)
    assert parse_laurent("1/2") == LaurentPoly(Fraction(1, 2))
    assert parse_laurent("2t^3") == 2 * T ** 3
    assert parse_laurent("2 * t ^ -2") == LaurentPoly({-2: 2})
    assert parse_laurent("  t+1  ") == T + 1
    assert parse_laurent("t + t") == 2 * T
    assert parse_laurent("t - t") == LaurentPoly()


def test_parse_errors_carry_offsets():
    cases = [
        ("", 0),
        ("   ", 3),
        ("t + ", 4),
        ("t +", 3),
        ("2*", 2),
        ("2*x", 2),
        ("t^", 2),
        ("t t", 2),
        ("t ^ 2 / 3", 6),
        ("1/0", 2),
        ("@", 0),
    ]
    for text, offset in cases:
        with pytest.raises(ParseError) as err:
            parse_laurent(text)
        assert err.value.offset == offset, f"{text!r}: {err.value} (want offset {offset})"
        assert f"offset {offset}" in str(err.value)


def test_exponent_fraction_error_is_specific():
    with pytest.raises(ParseError) as err:
        parse_laurent("t^1/2")
    assert "exponent" in str(err.value)


def test_round_trip():
    rng = random.Random(55)
    for _ in range(300):
        p = random_laurent(rng)
        assert parse_laurent(str(p)) == p


def test_load_seifert(tmp_path):
    f = tmp_path / "trefoil.seifert"
    f.write_text("# right-handed trefoil\nseifert 2\n-1 1\n0 -1  # rows\n")
    assert load_seifert(f) == SeifertMatrix([[-1, 1], [0, -1]])
    f.write_text("seifert 0\n")
    assert load_seifert(f) == SeifertMatrix([])


def test_load_seifert_errors(tmp_path):
    f = tmp_path / "bad.seifert"
    cases = [
        ("", "header"),
        ("# nothing but comments\n", "header"),
        ("linking 3\n", "header"),
        ("seifert x\n", "bad size"),
        ("seifert -2\n", "bad size"),
        ("seifert 2\n1 0\n", "expected 2 rows"),
        ("seifert 2\n1 0\n0 1\n2 2\n", "expected 2 rows"),
        ("seifert 2\n1 0 0\n0 1\n", "expected 2 entries"),
        ("seifert 2\n1 a\n0 1\n", "non-integer"),
    ]
    for text, needle in cases:
        f.write_text(text)
        with pytest.raises(FileFormatError) as err:
            load_seifert(f)
        assert needle in str(err.value), f"{text!r} -> {err.value}"
    # validation failures are ValueError but not file-format errors
    f.write_text("seifert 2\n0 2\n0 0\n")
    with pytest.raises(ValueError) as err:
        load_seifert(f)
    assert not isinstance(err.value, FileFormatError)
    with pytest.raises(OSError):
        load_seifert(tmp_path / "missing.seifert")


def test_load_linking(tmp_path):
    f = tmp_path / "wh.linking"
    f.write_text("# untwisted double, positive clasp\n"
                 "linking 3\n"
                 "t + t^-1 - 2, 0, 0\n"
                 "0, 1, 0\n"
                 "0, 0, 1\n")
    assert load_linking(f) == LinkingMatrix.diagonal(CLASP_BEAD, 1, 1)


def test_load_linking_errors(tmp_path):
    f = tmp_path / "bad.linking"
    cases = [
        ("linking 2\nx\n", "header"),
        ("linking 3\n0, 0, 0\n", "expected 3 rows"),
        ("linking 3\n0, 0\n0, 0, 0\n0, 0, 0\n", "3 comma-separated"),
        ("linking 3\n0, 0, &\n0, 0, 0\n0, 0, 0\n", "offset"),
    ]
    for text, needle in cases:
        f.write_text(text)
        with pytest.raises(FileFormatError) as err:
            load_linking(f)
        assert needle in str(err.value), f"{text!r} -> {err.value}"


def test_line_numbers_in_errors(tmp_path):
    f = tmp_path / "x.seifert"
    f.write_text("# comment\n\nseifert 2\n-1 1\n0 nope\n")
    with pytest.raises(FileFormatError) as err:
        load_seifert(f)
    assert err.value.line == 5
