import numpy as np
import pytest

from app.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from app.utils.file_io import read_matrix, write_matrix


@pytest.fixture
def spd_file(tmp_path):
    path = tmp_path / "a.csv"
    write_matrix(path, np.array([[2.0, 1.0], [1.0, 2.0]]))
    return path


def test_invert_to_file(tmp_path, spd_file):
    out = tmp_path / "inv.mtx"
    assert main(["invert", "--method", "v1", "--input", str(spd_file), "--output", str(out)]) == EXIT_OK
    np.testing.assert_allclose(read_matrix(out), np.array([[2.0, -1.0], [-1.0, 2.0]]) / 3, rtol=1e-15)


def test_invert_to_stdout_with_counts(spd_file, capsys):
    assert main(["invert", "--method", "cholesky", "--input", str(spd_file), "--count"]) == EXIT_OK
    captured = capsys.readouterr()
    assert len(captured.out.strip().splitlines()) == 2
    assert "muldiv=10 sqrt=2" in captured.err


def test_invert_zero_pivot_is_failure(tmp_path):
    path = tmp_path / "swap.csv"
    write_matrix(path, np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert main(["invert", "--method", "v2", "--input", str(path)]) == EXIT_FAILURE
    assert main(["invert", "--method", "robust", "--input", str(path)]) == EXIT_OK


def test_invert_not_symmetric_is_usage_error(tmp_path):
    path = tmp_path / "tri.csv"
    write_matrix(path, np.array([[2.0, 1.0], [0.0, 2.0]]))
    assert main(["invert", "--method", "v2", "--input", str(path)]) == EXIT_USAGE
    assert main(["invert", "--method", "gauss", "--input", str(path)]) == EXIT_OK


def test_missing_input_is_usage_error(tmp_path):
    assert main(["invert", "--input", str(tmp_path / "missing.csv")]) == EXIT_USAGE


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--experiment", "7"])
    assert exc.value.code == 2


def test_bench_csv(capsys):
    assert main(["bench", "--experiment", "1", "--sizes", "100", "--seed", "42"]) == EXIT_OK
    lines = capsys.readouterr().out.split("\r\n")
    assert lines[0].startswith("method,n,family,q_theor,q_pract")
    assert lines[5].startswith("v2,100,diag_dominant,505000,505000,0,0,")


def test_bench_bad_sizes_is_usage_error():
    assert main(["bench", "--experiment", "1", "--sizes", "ten"]) == EXIT_USAGE


def test_count_markdown(capsys):
    assert main(["count", "--sizes", "500"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "62749750" in out and "83458250" in out


def test_verify_small(capsys):
    assert main(["verify", "--max-n", "6", "--seed", "3"]) == EXIT_OK
    assert "count exactness" in capsys.readouterr().out


def test_bench_wide_layout(capsys):
    assert main(["bench", "--experiment", "1", "--sizes", "4,6", "--layout", "wide", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.split("\r\n")
    assert lines[0] == "q_pract,4,6"
    assert lines[5] == "v2,40,126"


def test_invert_elementwise_km(spd_file, capsys):
    assert main(["invert", "--method", "km_elementwise", "--input", str(spd_file), "--count"]) == EXIT_OK
    assert "muldiv=6 sqrt=2" in capsys.readouterr().err
