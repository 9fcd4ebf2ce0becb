import streamlit as st

from app.crud.database import save_reports
from app.database import SessionLocal
from app.genbench.generators import FamilyKind
from app.genbench.harness import ALL_METHODS, INVERTERS, parse_sizes, run_experiment
from app.genbench.report import emit_report, reports_frame
from app.linalg.errors import GenerationFailed
from app.utils.config import load_settings
from app.utils.transformers import add_style_to_df


def run_bench(experiment: int, sizes_text: str, methods: list[str], seed: int, family: str | None):
    """
    :return: (True, reports) when the experiment ran, else (False, error message)
    """
    try:
        return True, run_experiment(experiment, sizes_text, methods, seed=seed, family=family)
    except (ValueError, GenerationFailed) as exc:
        return False, str(exc)


def display_bench_page():
    settings = load_settings()

    exp_col, family_col, seed_col = st.columns(3)
    with exp_col:
        experiment = st.selectbox(label="Experiment", options=[1, 2, 3],
                                  format_func=lambda e: {1: "1 - counts", 2: "2 - time/accuracy",
                                                         3: "3 - non-dominant"}[e])
    with family_col:
        family = st.selectbox(label="Family override", options=["(experiment default)"] + [k.value for k in FamilyKind])
    with seed_col:
        seed = st.number_input(label="Seed", min_value=0, value=settings.default_seed)

    sizes_text = st.text_input(label="Sizes", value=",".join(str(n) for n in settings.default_sizes))
    methods = st.multiselect(label="Methods", options=list(INVERTERS), default=list(ALL_METHODS))

    if st.button(label="Run Benchmark", type="primary"):
        with st.spinner("Running..."):
            ran, result = run_bench(experiment, sizes_text, methods, int(seed),
                                    None if family.startswith("(") else family)
        if ran:
            st.session_state.bench = {
                "experiment": experiment,
                "seed": int(seed),
                "sizes": parse_sizes(sizes_text),
                "reports": result,
            }
        else:
            st.error(result)

    bench = st.session_state.get("bench")
    if not bench:
        return

    st.dataframe(data=add_style_to_df(df=reports_frame(bench["reports"])), hide_index=True)
    st.download_button(label="Download CSV", data=emit_report(bench["reports"], "csv"), file_name="report.csv")

    if st.button(label="Save Run"):
        with SessionLocal() as db:
            run = save_reports(
                db=db,
                experiment=bench["experiment"],
                seed=bench["seed"],
                sizes=bench["sizes"],
                reports=bench["reports"],
            )
            st.success(f"Saved as run {run.id}")
