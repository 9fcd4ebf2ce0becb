import pytest

from app.genbench.generators import FamilyKind, MatrixFamily
from app.genbench.harness import InversionReport, Status, run_experiment
from app.genbench.report import REPORT_COLUMNS, emit_count_table, emit_report, emit_wide_report, pivot_frame
from app.linalg.complexity import count_table
from app.linalg.errors import InvalidArgument
from app.utils.config import Settings

HEADER = "method,n,family,q_theor,q_pract,s_theor,s_pract,residual_fro,dist2,seconds,status,error"


def _report(**overrides):
    values = dict(method="v2", n=3, family=MatrixFamily(FamilyKind.DIAG_DOMINANT, 3, 45),
                  q_theor=18, s_theor=0, q_pract=18, s_pract=0, residual_fro=1e-16)
    values.update(overrides)
    return InversionReport(**values)


def test_single_report_csv():
    lines = emit_report([_report()], "csv").split("\r\n")
    assert lines[0] == HEADER
    assert lines[1].startswith("v2,3,diag_dominant,18,18,0,0,")
    assert lines[2] == ""
    assert len(lines) == 3


def test_csv_quotes_errors_with_commas():
    text = emit_report([_report(status=Status.FAILED, error="bad, very bad", q_pract=None, s_pract=None)], "csv")
    row = text.split("\r\n")[1]
    assert row.endswith(',failed,"bad, very bad"')
    assert ",18,,0,," in row


def test_markdown_layout():
    text = emit_report([_report(method=m) for m in ("cholesky", "ldl", "km", "v1", "v2")], "markdown")
    lines = text.strip().splitlines()
    assert len(lines) == 2 + 5
    assert all(col in lines[0] for col in REPORT_COLUMNS)


def test_invalid_format_and_empty_reports():
    with pytest.raises(InvalidArgument):
        emit_report([_report()], "")
    with pytest.raises(InvalidArgument):
        emit_report([_report()], "xml")
    with pytest.raises(InvalidArgument):
        emit_report([], "csv")


def test_records_input():
    text = emit_report(records=[_report().as_record()], fmt="csv")
    assert text.startswith(HEADER)


def test_bench_csv_is_reproducible():
    settings = Settings(timing_repeats=1, timing_warmup=0)
    first = emit_report(run_experiment(1, [100], "all", seed=42, settings=settings), "csv")
    second = emit_report(run_experiment(1, [100], "all", seed=42, settings=settings), "csv")
    assert first == second
    assert "cholesky,100,diag_dominant,515000,515000,100,100," in first


def test_count_table_markdown():
    text = emit_count_table(count_table([100]), "markdown")
    assert "509950" in text
    assert "62625000" not in text
    with pytest.raises(InvalidArgument):
        emit_count_table([], "csv")


def test_pivot_puts_methods_in_rows_and_orders_in_columns():
    reports = run_experiment(1, [4, 6], "all", seed=42, settings=Settings(timing_repeats=1, timing_warmup=0))
    wide = pivot_frame(reports, "q_pract")
    assert list(wide.columns) == ["q_pract", "4", "6"]
    assert list(wide["q_pract"]) == ["cholesky", "ldl", "km", "v1", "v2"]
    v2 = wide.set_index("q_pract").loc["v2"]
    assert (int(v2["4"]), int(v2["6"])) == (40, 126)

    lines = emit_wide_report(reports, ("q_pract", "s_pract"), "csv").split("\r\n")
    assert lines[0] == "q_pract,4,6"
    assert lines[5] == "v2,40,126"
    assert lines[7] == "s_pract,4,6"
    assert lines[8] == "cholesky,4,6"


def test_wide_markdown_marks_missing_cells():
    reports = [
        _report(method="v2", n=3, seconds=0.5),
        _report(method="v1", n=3, status=Status.INAPPLICABLE, q_pract=None, s_pract=None, residual_fro=None),
    ]
    text = emit_wide_report(reports, ("seconds",), "markdown")
    assert text.splitlines()[0].split("|")[1].strip() == "seconds"
    v1_row = [line for line in text.splitlines() if "v1" in line][0]
    assert v1_row.split("|")[2].strip() == "-"


def test_pivot_rejects_unknown_column():
    with pytest.raises(InvalidArgument):
        pivot_frame([_report()], "colour")
