import pandas as pd

from app.genbench.harness import InversionReport
from app.linalg.errors import InvalidArgument
from app.utils.transformers import reorder_df, to_dataframe

REPORT_COLUMNS = [
    "method", "n", "family", "q_theor", "q_pract", "s_theor", "s_pract",
    "residual_fro", "dist2", "seconds", "status", "error",
]
COUNT_COLUMNS = ["method", "n", "p", "formula", "q_theor", "s_theor"]
INT_COLUMNS = ["n", "p", "q_theor", "q_pract", "s_theor", "s_pract"]
FORMATS = ("csv", "markdown")


def _with_int_columns(df: pd.DataFrame) -> pd.DataFrame:
    return df.astype({col: "Int64" for col in INT_COLUMNS if col in df.columns})


def render(df: pd.DataFrame, fmt: str) -> str:
    """
    Renders a table as RFC-4180 CSV (CRLF line ends, minimal quoting) or as a markdown table.
    :param df: table to render
    :param fmt: 'csv' or 'markdown'
    :return: str
    """
    if fmt not in FORMATS:
        raise InvalidArgument(f"Report format must be one of {FORMATS}, got {fmt!r}")

    df = _with_int_columns(df)
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\r\n")
    cells = df.astype(object).where(df.notna(), None)
    return cells.to_markdown(index=False, missingval="-") + "\n"


def reports_frame(reports: list[InversionReport] | None = None, records: list[dict] | None = None) -> pd.DataFrame:
    rows = records if records is not None else [r.as_record() for r in reports or []]
    if not rows:
        raise InvalidArgument("No reports to emit")
    return _with_int_columns(reorder_df(df=pd.DataFrame(rows), order=REPORT_COLUMNS))


def emit_report(reports: list[InversionReport] | None = None, fmt: str = "csv",
                records: list[dict] | None = None) -> str:
    """
    Benchmark reports as text with a fixed column order.
    :param reports: InversionReports from run_experiment
    :param fmt: 'csv' or 'markdown'
    :param records: plain dict rows (e.g. saved InversionRecords) used instead of reports
    :return: str
    """
    if fmt not in FORMATS:
        raise InvalidArgument(f"Report format must be one of {FORMATS}, got {fmt!r}")
    return render(reports_frame(reports, records), fmt)


def emit_count_table(records: list[dict], fmt: str = "markdown") -> str:
    if not records:
        raise InvalidArgument("No counts to emit")
    return render(reorder_df(df=pd.DataFrame(records), order=COUNT_COLUMNS), fmt)


def saved_records_frame(entries) -> pd.DataFrame:
    """InversionRecord rows loaded from the results database as a report-ordered DataFrame."""
    return _with_int_columns(to_dataframe(entries, column_order=REPORT_COLUMNS))


# report columns laid out as methods x orders, per experiment
WIDE_VALUES = {1: ("q_pract", "s_pract"), 2: ("seconds", "dist2"), 3: ("seconds", "dist2")}


def pivot_frame(reports: list[InversionReport] | None = None, value: str = "seconds",
                records: list[dict] | None = None) -> pd.DataFrame:
    """
    One report column with methods as rows and matrix orders as columns. The first
    column carries the value name and holds the method names.
    :param reports: InversionReports from run_experiment
    :param value: report column to spread, e.g. 'seconds' or 'dist2'
    :param records: plain dict rows used instead of reports
    :return: DataFrame
    """
    if value not in REPORT_COLUMNS[1:]:
        raise InvalidArgument(f"Cannot pivot on '{value}', choose from {REPORT_COLUMNS[1:]}")
    df = reports_frame(reports, records).drop_duplicates(subset=["method", "n"])
    methods = list(dict.fromkeys(df["method"]))
    wide = df.pivot(index="method", columns="n", values=value).reindex(methods)
    wide.columns = [str(n) for n in wide.columns]
    wide.index.name = value
    return wide.reset_index()


def emit_wide_report(reports: list[InversionReport] | None = None, values: tuple[str, ...] = ("seconds", "dist2"),
                     fmt: str = "markdown", records: list[dict] | None = None) -> str:
    """One methods x orders table per value, separated by a blank line."""
    if fmt not in FORMATS:
        raise InvalidArgument(f"Report format must be one of {FORMATS}, got {fmt!r}")
    separator = "\r\n" if fmt == "csv" else "\n"
    return separator.join(render(pivot_frame(reports, value, records), fmt) for value in values)
