import pyperclip

from app.linalg.errors import InvalidArgument
from app.utils.file_io import parse_matrix_text


def read_clipboard_matrix():
    """
    Parses the clipboard as a matrix, one row per line (e.g. cells copied from a spreadsheet).
    :return: (True, Matrix) when the clipboard holds a square numeric matrix, else (False, error message)
    """
    clipboard_text = pyperclip.paste()

    if not clipboard_text or not clipboard_text.strip():
        return False, "Clipboard is empty"

    try:
        return True, parse_matrix_text(clipboard_text)
    except (InvalidArgument, ValueError) as exc:
        return False, str(exc)
