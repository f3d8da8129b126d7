"""Tests for report serialization, the JSON/CSV writers, and CSV readers."""

import csv
import io
import json
from fractions import Fraction as F

import pytest

from lacuna import __version__
from lacuna.errors import InputFormatError
from lacuna.exact import make_enclosure
from lacuna.omega import approximants, omega_enclosure, theta_table
from lacuna.report import (
    CSVExporter,
    JSONExporter,
    Report,
    decimal_approx,
    exporter_for,
    parse_serialized_rational,
    read_series,
    read_sizes,
    serialize_enclosure,
    serialize_rational,
)
from lacuna.report.serialize import (
    SIEVE_COLUMNS,
    THETA_COLUMNS,
    omega_body,
    sieve_rows,
    theta_row,
)
from lacuna.sieve import sieve, sizes


def test_serialize_rational_examples():
    assert serialize_rational(F(5, 13), 6) == {"num": "5", "den": "13", "approx": "0.384615"}
    assert serialize_rational(F(657, 1681), 6)["approx"] == "0.390839"
    assert serialize_rational(F(0), 3) == {"num": "0", "den": "1", "approx": "0.00"}


def test_decimal_approx_rounding():
    assert decimal_approx(F(2, 3), 4) == "0.6667"
    assert decimal_approx(F(-1, 8), 2) == "-0.12"  # half-even
    assert decimal_approx(F(3, 8), 2) == "0.38"
    assert decimal_approx(F(9999, 10000), 2) == "1.0"
    assert decimal_approx(F(123456), 3) == "123000"
    assert decimal_approx(F(1, 3 * 10**20), 3) == "0.00000000000000000000333"
    with pytest.raises(ValueError):
        decimal_approx(F(1), 0)


def test_huge_integers_stay_strings():
    big = F(10**40 + 1, 3)
    obj = serialize_rational(big, 5)
    assert obj["num"] == str(10**40 + 1)
    assert parse_serialized_rational(obj) == big


def test_parse_serialized_rational_rejects_garbage():
    with pytest.raises(InputFormatError):
        parse_serialized_rational({"num": "1"})
    with pytest.raises(InputFormatError):
        parse_serialized_rational({"num": "1", "den": "0"})


def test_serialize_enclosure():
    obj = serialize_enclosure(make_enclosure(F(1, 3), F(2, 3)), 3)
    assert obj["lo"]["approx"] == "0.333"
    assert obj["width"] == {"num": "1", "den": "3", "approx": "0.333"}


def test_report_document_header():
    doc = Report("polar", {"a": 3.0}, {"rho": 5.0}).document()
    assert doc["header"] == {
        "tool": "lacuna",
        "version": __version__,
        "command": "polar",
        "params": {"a": 3.0},
    }
    assert doc["body"] == {"rho": 5.0}


def test_omega_body_shape(seq6):
    odds, chain = approximants(seq6)
    rows = theta_table(seq6)
    body = omega_body(seq6, odds, chain, omega_enclosure(seq6), rows, digits=6)
    assert body["sequence"][:3] == ["3", "13", "105"]
    assert body["odd_chain"][:3] == ["5", "41", "657"]
    assert body["q_chain"][1] == {"num": "5", "den": "13", "approx": "0.384615"}
    assert [r["s"] for r in body["theta_table"]] == [2, 3, 4]
    assert all(r["pass"] for r in body["theta_table"])
    assert theta_row(rows[0], 6)["bound"] == "0.250000"


def test_json_exporter_is_deterministic(tmp_path):
    report = Report("gen-seq", {"depth": 2}, {"terms": ["3", "13"]})
    paths = [tmp_path / "a" / "one.json", tmp_path / "two.json"]
    for path in paths:
        exporter = JSONExporter(path)
        exporter.write(report)
        exporter.close()
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert json.loads(paths[0].read_text())["body"]["terms"] == ["3", "13"]


def test_csv_exporter_writes_table():
    out = io.StringIO()
    table = [{"level": 1, "deleted": "1 2"}, {"level": 2, "deleted": ""}]
    report = Report("sieve", {}, {}, table=table)
    exporter = CSVExporter(None, out)
    exporter.write(report)
    exporter.close()
    rows = list(csv.reader(io.StringIO(out.getvalue())))
    assert rows == [["level", "deleted"], ["1", "1 2"], ["2", ""]]


def test_csv_exporter_empty_table_writes_nothing_without_columns():
    out = io.StringIO()
    CSVExporter(None, out).write(Report("sieve", {}, {}, table=[]))
    assert out.getvalue() == ""


def test_csv_exporter_empty_table_keeps_header():
    out = io.StringIO()
    CSVExporter(None, out).write(Report("sieve", {}, {}, table=[], columns=SIEVE_COLUMNS))
    assert out.getvalue() == "level,delta,deleted,last_deleted,survivors,residual_max\n"


def test_column_tuples_match_row_keys(seq6):
    rows = [theta_row(r) for r in theta_table(seq6)]
    assert tuple(rows[0]) == THETA_COLUMNS
    report = sieve(sizes([F(1, 2), 2]), levels=2)
    assert tuple(sieve_rows(report)[0]) == SIEVE_COLUMNS


def test_json_exporter_rejects_non_finite_numbers():
    out = io.StringIO()
    report = Report("polar", {}, {"rho": float("nan")})
    with pytest.raises(ValueError):
        JSONExporter(None, out).write(report)


def test_exporter_for():
    assert isinstance(exporter_for("json", None, io.StringIO()), JSONExporter)
    assert isinstance(exporter_for("csv", None, io.StringIO()), CSVExporter)
    with pytest.raises(ValueError):
        exporter_for("xml", None, io.StringIO())


def test_read_sizes(tmp_path):
    path = tmp_path / "sizes.csv"
    path.write_text("# header comment\n1/2, 0.25\n\n3\n")
    assert read_sizes(path) == [F(1, 2), F(1, 4), F(3)]


def test_read_sizes_reports_line(tmp_path):
    path = tmp_path / "sizes.csv"
    path.write_text("1/2\nnope\n")
    with pytest.raises(InputFormatError) as exc:
        read_sizes(path)
    assert exc.value.details["line"] == 2


def test_read_series(tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("n,a,b\n1,0.5,0\n3,0,1\n")
    pairs = read_series(path)
    assert [(p.n, p.a, p.b) for p in pairs] == [(1, 0.5, 0.0), (3, 0.0, 1.0)]


def test_read_series_header_and_rows(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("freq,a,b\n1,0,1\n")
    with pytest.raises(InputFormatError):
        read_series(path)
    path.write_text("n,a,b\n1,zero,1\n")
    with pytest.raises(InputFormatError) as exc:
        read_series(path)
    assert exc.value.details["line"] == 2


@pytest.mark.parametrize("row", ["1,inf,0", "2,0,nan", "3,-inf,1"])
def test_read_series_rejects_non_finite(tmp_path, row):
    path = tmp_path / "series.csv"
    path.write_text(f"n,a,b\n1,0,1\n{row}\n")
    with pytest.raises(InputFormatError) as exc:
        read_series(path)
    assert exc.value.code == "bad-input"
    assert exc.value.details["line"] == 3
