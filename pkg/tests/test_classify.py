"""The sixteen-case classification table."""

from collections import Counter

import pytest

from k3auto.classify import (CSV_HEADER, enumerate_cases, match_row,
                             render_csv, render_table, rows_from_json,
                             rows_to_json, theorem1_groups, validate_row)

from fixtures import (GROUP_CURVE_FIXED, GROUP_NOT_FIXED,
                      GROUP_SQUARE_FIXED, TABLE_ROWS, classification_key,
                      row_key)


def test_sixteen_rows_match_fixture():
    rows = enumerate_cases()
    assert len(rows) == 16
    computed = Counter(classification_key(row) for row in rows)
    expected = Counter(row_key(entry) for entry in TABLE_ROWS)
    assert computed == expected


def test_case_numbering_is_stable():
    rows = enumerate_cases()
    by_index = {row.index: row for row in rows}
    assert sorted(by_index) == list(range(1, 17))
    for entry in TABLE_ROWS:
        assert classification_key(by_index[entry[0]]) == row_key(entry)


def test_every_row_validates():
    for row in enumerate_cases():
        checks = validate_row(row)
        assert checks and all(checks.values()), (row.index, checks)


def test_theorem_groups():
    groups = theorem1_groups(enumerate_cases())
    assert len(groups) == 3
    assert groups[0] == GROUP_CURVE_FIXED
    assert groups[1] == GROUP_SQUARE_FIXED
    assert groups[2] == GROUP_NOT_FIXED


def test_match_row():
    rows = enumerate_cases()
    row = match_row(rows, "identity", "order four")
    assert row.index == 1
    row = match_row(rows, "order four", "reflection on I_16")
    assert row.index == 15
    with pytest.raises(ValueError):
        match_row(rows, "identity", "reflection on I_16")


def test_m1_and_derived_quantities():
    for row in enumerate_cases():
        assert row.m1 == (22 - row.rk_pic) // 4
        assert row.r + row.l + 2 * row.m + 4 * row.m1 == 22
        assert row.N == row.n2 + row.n3 + row.n4


def test_csv_round_trip_and_header():
    rows = enumerate_cases()
    text = render_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 17
    assert lines[0].split(",")[:4] == ["r", "l", "m", "k_sigma2"]


def test_json_round_trip():
    rows = enumerate_cases()
    again = rows_from_json(rows_to_json(rows))
    assert again == rows


def test_render_table_shape():
    text = render_table(enumerate_cases())
    lines = text.strip().split("\n")
    assert len(lines) == 17
    assert "action" in lines[0]
    assert "preserves each curve of I_16" in lines[-1]
