import streamlit as st

from app.database import init_db
from ui.bench_page import display_bench_page
from ui.invert_page import display_invert_page
from ui.run_compare import display_run_compare

st.set_page_config(page_title="syminv", layout="wide")


def main():
    if "db_initialized" not in st.session_state:
        init_db()
        st.session_state.db_initialized = True

    st.markdown(
        "<h1 style='color:#1F3A5F; text-align: center; '>SYMINV</h1>",
        unsafe_allow_html=True
    )

    st.markdown(
        "<h2 style='color:#4227F5; text-align: center; padding-bottom: 40px;'>"
        "<i>Square-root-free symmetric inversion</i></h2>",
        unsafe_allow_html=True
    )

    if "page" not in st.session_state:
        st.session_state.page = "invert"

    invert, bench, compare = st.columns([1, 1, 1])
    with invert:
        if st.button(label="Invert Matrix", type="primary", width="stretch"):
            st.session_state.page = "invert"

    with bench:
        if st.button(label="Run Benchmark", type="primary", width="stretch"):
            st.session_state.page = "bench"

    with compare:
        if st.button(label="Compare Runs", type="primary", width="stretch"):
            st.session_state.page = "compare"

    if st.session_state.page == "invert":
        display_invert_page()
    elif st.session_state.page == "bench":
        display_bench_page()
    elif st.session_state.page == "compare":
        display_run_compare()


if __name__ == '__main__':
    main()
