import tempfile
from pathlib import Path

import numpy as np
import streamlit as st

from app.genbench.generators import FamilyKind, MatrixFamily, generate
from app.genbench.harness import INVERTERS
from app.linalg.errors import GenerationFailed, InversionError
from app.linalg.matcore import OpCounter, residual_fro
from app.utils.file_io import format_matrix_text, parse_matrix_text, read_matrix
from app.utils.transformers import matrix_to_dataframe
from ui.utils.clipboard import read_clipboard_matrix


def _load_uploaded(uploaded):
    suffix = Path(uploaded.name).suffix
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / f"upload{suffix}"
        path.write_bytes(uploaded.getvalue())
        return read_matrix(path)


def display_invert_page():
    source = st.radio(label="Matrix source", options=["Generate", "Upload file", "Paste", "Clipboard"], horizontal=True)

    if source == "Generate":
        kind_col, n_col, seed_col = st.columns(3)
        with kind_col:
            kind = st.selectbox(label="Family", options=[k.value for k in FamilyKind])
        with n_col:
            n = st.number_input(label="Order n", min_value=2, max_value=500, value=6)
        with seed_col:
            seed = st.number_input(label="Seed", min_value=0, value=42)
        if st.button(label="Generate Matrix", type="primary"):
            try:
                st.session_state.matrix = generate(MatrixFamily(kind, int(n), int(seed)))
            except GenerationFailed as exc:
                st.error(str(exc))

    elif source == "Upload file":
        uploaded = st.file_uploader(label="Matrix Market (.mtx) or CSV (.csv)", type=["mtx", "csv"])
        if uploaded is not None and st.button(label="Load File", type="primary"):
            try:
                st.session_state.matrix = _load_uploaded(uploaded)
            except ValueError as exc:
                st.error(str(exc))

    elif source == "Paste":
        text = st.text_area(label="One row per line, entries separated by commas, tabs or spaces")
        if st.button(label="Parse Matrix", type="primary"):
            try:
                st.session_state.matrix = parse_matrix_text(text)
            except ValueError as exc:
                st.error(str(exc))

    else:
        st.info("Copy the cells of a square numeric table, then press the button.")
        if st.button(label="Read Clipboard", type="primary"):
            is_matrix, result = read_clipboard_matrix()
            if is_matrix:
                st.session_state.matrix = result
            else:
                st.error(f"Clipboard does not hold a matrix: {result}")

    matrix = st.session_state.get("matrix")
    if matrix is None:
        st.warning("Generate, upload or paste a matrix to start")
        return

    with st.expander(label=f"Input matrix ({matrix.shape[0]}x{matrix.shape[0]})"):
        st.dataframe(data=matrix_to_dataframe(matrix))

    method = st.selectbox(label="Method", options=list(INVERTERS), index=list(INVERTERS).index("v2"))
    if st.button(label="Invert", type="primary"):
        counter = OpCounter()
        try:
            inverse = INVERTERS[method](matrix, counter)
        except (InversionError, ValueError) as exc:
            st.error(str(exc))
            return

        left, mid, right = st.columns(3)
        with left:
            st.write(f"Mul/div: {counter.muldiv:,}")
        with mid:
            st.write(f"Square roots: {counter.sqrt:,}")
        with right:
            st.write(f"‖A·X − I‖_F: {residual_fro(matrix, inverse):.3e}")

        st.markdown("<h4 style='text-align: center;'>Inverse</h4>", unsafe_allow_html=True)
        st.dataframe(data=matrix_to_dataframe(np.round(inverse, 12)))
        st.download_button(label="Download CSV", data=format_matrix_text(inverse), file_name=f"inverse_{method}.csv")
