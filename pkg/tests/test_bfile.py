import pytest

from qcore import (
    BFileParseError,
    first_discrepancy,
    format_bfile,
    gen_a5bar,
    parse_bfile,
)


def test_format_round_trip():
    values = list(gen_a5bar(100).coeffs)
    text = format_bfile(values)
    lines = text.splitlines()
    assert len(lines) == 101
    assert lines[7] == "7 24"
    parsed = parse_bfile(text)
    assert parsed.first_index == 0
    assert list(parsed.values()) == values
    assert first_discrepancy(parsed, values) is None


def test_forged_value_detected():
    values = list(gen_a5bar(20).coeffs)
    forged = values.copy()
    forged[6] = 21
    parsed = parse_bfile(format_bfile(forged))
    assert first_discrepancy(parsed, values) == (6, 21, 20)


def test_overlap_only_is_compared():
    parsed = parse_bfile("0 1\n1 2\n2 4\n3 8\n")
    assert first_discrepancy(parsed, [1, 2]) is None


def test_comments_and_blank_lines_tolerated():
    parsed = parse_bfile("# header comment\n\n0 1\n1 -2\n")
    assert parsed.entries == ((0, 1), (1, -2))


def test_parse_error_reports_line_number():
    with pytest.raises(BFileParseError) as err:
        parse_bfile("0 1\nnot numbers\n")
    assert err.value.lineno == 2


def test_three_fields_rejected():
    with pytest.raises(BFileParseError):
        parse_bfile("0 1 9\n")


def test_index_gap_rejected():
    with pytest.raises(BFileParseError) as err:
        parse_bfile("0 1\n2 4\n")
    assert "gap" in str(err.value)


def test_negative_index_rejected():
    with pytest.raises(BFileParseError):
        parse_bfile("-1 5\n")


def test_empty_file_rejected():
    with pytest.raises(BFileParseError):
        parse_bfile("# only a comment\n")
