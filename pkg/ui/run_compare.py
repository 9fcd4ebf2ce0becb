import streamlit as st

from app.crud.database import delete_run, get_all_runs, read_records_by_run_id
from app.database import SessionLocal
from app.genbench.report import saved_records_frame
from app.utils.transformers import add_style_to_df

COMPARED = ["q_pract", "residual_fro", "dist2", "seconds"]


def _run_label(run):
    return f"#{run.id} exp {run.experiment} | {run.family} | n={run.sizes} | seed {run.seed}"


def display_run_compare():
    with SessionLocal() as db:
        all_runs = get_all_runs(db=db)

    if not all_runs:
        st.warning("No saved runs yet, run a benchmark and press 'Save Run' first")
        return

    labels = {_run_label(run): run.id for run in all_runs}
    options = list(labels)

    with st.expander(label="Delete Saved Run"):
        st.warning("This removes the run and all of its records from the database.")
        run_to_delete = st.selectbox(label="Select Run to Delete", options=options)
        if st.button(f"Submit deletion of '{run_to_delete}'"):
            with SessionLocal() as db:
                deleted = delete_run(db=db, run_id=labels[run_to_delete])
            if deleted:
                st.success(f"Successfully deleted: {run_to_delete}")
            else:
                st.warning(f"Failed to delete: {run_to_delete}, may not exist.")
            st.rerun()

    if len(all_runs) < 2:
        st.info("Only one saved run found, showing it alone")
        with SessionLocal() as db:
            df = saved_records_frame(read_records_by_run_id(db=db, run_id=all_runs[0].id))
        st.dataframe(data=add_style_to_df(df=df), hide_index=True)
        return

    run_1, run_2 = st.columns(2)
    with run_1:
        selected_1 = st.selectbox(label="Select a run", options=options, key="run_1", index=0)
    with run_2:
        selected_2 = st.selectbox(label="Select a run", options=options, key="run_2", index=1)

    with SessionLocal() as db:
        df_1 = saved_records_frame(read_records_by_run_id(db=db, run_id=labels[selected_1]))
        df_2 = saved_records_frame(read_records_by_run_id(db=db, run_id=labels[selected_2]))

    merged = df_1.merge(df_2, on=["method", "n"], how="outer", suffixes=("_1", "_2"))
    columns = ["method", "n"] + [f"{col}_{side}" for col in COMPARED for side in (1, 2)]
    merged = merged.reindex(columns=columns).sort_values(["n", "method"])

    if "seconds_1" in merged and merged["seconds_1"].notna().any() and merged["seconds_2"].notna().any():
        merged["speedup"] = merged["seconds_1"] / merged["seconds_2"]

    st.markdown(
        f"<h4 style='text-align: center;'>{selected_1} vs {selected_2}</h4>",
        unsafe_allow_html=True
    )
    st.dataframe(data=add_style_to_df(df=merged), hide_index=True)
