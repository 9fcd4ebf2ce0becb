import logging
import re
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from app.linalg.errors import InvalidArgument
from app.linalg.matcore import Matrix, as_matrix

logger = logging.getLogger(__name__)

SUPPORTED_SUFFIXES = (".mtx", ".csv")


def _suffix(path: Path) -> str:
    suffix = path.suffix.lower()
    if suffix not in SUPPORTED_SUFFIXES:
        raise InvalidArgument(f"Unsupported matrix file '{path.name}', expected one of {SUPPORTED_SUFFIXES}")
    return suffix


def read_matrix(path: str | Path) -> Matrix:
    """
    Reads a square real matrix from Matrix Market (.mtx, array or coordinate, general or symmetric)
    or CSV (.csv, n rows of n comma-separated decimals).
    :param path: matrix file
    :return: Matrix
    """
    path = Path(path)
    if _suffix(path) == ".mtx":
        data = scipy.io.mmread(path)
        if scipy.sparse.issparse(data):
            data = data.toarray()
    else:
        data = np.loadtxt(path, delimiter=",", ndmin=2)

    matrix = as_matrix(data)
    logger.debug("Read %dx%d matrix from %s", *matrix.shape, path)
    return matrix


def write_matrix(path: str | Path, matrix: Matrix):
    """
    Writes a matrix with 17 significant digits, format chosen by the file suffix.
    :param path: target .mtx or .csv file
    :param matrix: matrix to save
    :return:
    """
    path = Path(path)
    if _suffix(path) == ".mtx":
        scipy.io.mmwrite(path, np.asarray(matrix), precision=17, symmetry="general")
    else:
        np.savetxt(path, matrix, fmt="%.17g", delimiter=",")
    logger.debug("Wrote %dx%d matrix to %s", *np.shape(matrix), path)


def parse_matrix_text(text: str) -> Matrix:
    """
    Parses pasted text, one matrix row per line, entries separated by commas, tabs or spaces.
    :param text: raw text (e.g. from the clipboard)
    :return: Matrix
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidArgument("No matrix rows found in text")

    rows = []
    for line in lines:
        try:
            rows.append([float(token) for token in re.split(r"[,\t ]+", line.strip()) if token])
        except ValueError:
            raise InvalidArgument(f"Malformed matrix row: {line!r}") from None

    if len({len(row) for row in rows}) != 1:
        raise InvalidArgument("Matrix rows have different lengths")
    return as_matrix(rows)


def format_matrix_text(matrix: Matrix) -> str:
    return "\n".join(",".join(f"{x:.17g}" for x in row) for row in np.asarray(matrix))
