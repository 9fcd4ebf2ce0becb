from datetime import datetime, timezone

from app.crud.database import (
    create_bench_run,
    delete_run,
    get_all_runs,
    get_run_by_id,
    read_records_by_run_id,
    save_reports,
)
from app.genbench.harness import run_experiment
from app.genbench.report import emit_report, saved_records_frame
from app.models.db_entry import InversionRecord
from app.utils.config import Settings


def _reports():
    return run_experiment(1, [4, 6], "all", seed=42, settings=Settings())


def test_save_and_read_back(db):
    reports = _reports()
    run = save_reports(db=db, experiment=1, seed=42, sizes=[4, 6], reports=reports)

    assert get_run_by_id(db=db, run_id=run.id).sizes == "4,6"
    records = read_records_by_run_id(db=db, run_id=run.id)
    assert len(records) == len(reports)
    assert [(r.method, r.n) for r in records] == [(r.method, r.n) for r in reports]
    assert all(r.q_pract == r.q_theor for r in records)
    assert records[0].family == "diag_dominant"


def test_saved_records_render_like_live_reports(db):
    reports = _reports()
    run = save_reports(db=db, experiment=1, seed=42, sizes=[4, 6], reports=reports)
    df = saved_records_frame(read_records_by_run_id(db=db, run_id=run.id))
    live = emit_report(reports, "csv")
    saved = emit_report(records=df.to_dict("records"), fmt="csv")
    assert saved == live


def test_runs_listed_newest_first(db):
    older = create_bench_run(db=db, experiment=1, seed=1, sizes=[3], family="diag_dominant",
                             created_at=datetime(2024, 1, 1, tzinfo=timezone.utc))
    newer = create_bench_run(db=db, experiment=2, seed=1, sizes=[3], family="diag_dominant",
                             created_at=datetime(2025, 1, 1, tzinfo=timezone.utc))
    db.commit()
    assert [r.id for r in get_all_runs(db=db)] == [newer.id, older.id]


def test_delete_run_cascades(db):
    run = save_reports(db=db, experiment=1, seed=42, sizes=[4, 6], reports=_reports())
    assert delete_run(db=db, run_id=run.id)
    assert db.query(InversionRecord).count() == 0
    assert not delete_run(db=db, run_id=run.id)
