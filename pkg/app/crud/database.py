from sqlalchemy.orm import Session

from app.genbench.harness import InversionReport
from app.models.db_entry import BenchRun, InversionRecord


def create_bench_run(db: Session, experiment: int, seed: int, sizes: list[int], family: str, created_at=None):
    run = BenchRun(
        experiment=experiment,
        seed=seed,
        sizes=",".join(str(n) for n in sizes),
        family=family,
    )
    if created_at is not None:
        run.created_at = created_at
    db.add(run)
    db.flush()
    return run


def create_inversion_record(db: Session, run_id: int, report: InversionReport):
    record = InversionRecord(run_id=run_id, **report.as_record())
    db.add(record)
    return record


def save_reports(db: Session, experiment: int, seed: int, sizes: list[int], reports: list[InversionReport]):
    """
    Stores one benchmark run and one InversionRecord per report, then commits.
    :param db: open session
    :param experiment: experiment id (1, 2 or 3)
    :param seed: base seed of the run
    :param sizes: matrix orders of the run
    :param reports: reports from run_experiment
    :return: BenchRun
    """
    family = reports[0].family.kind.value if reports else ""
    run = create_bench_run(db=db, experiment=experiment, seed=seed, sizes=sizes, family=family)
    for report in reports:
        create_inversion_record(db=db, run_id=run.id, report=report)
    db.commit()
    return run


def get_all_runs(db: Session):
    return db.query(BenchRun).order_by(BenchRun.created_at.desc(), BenchRun.id.desc()).all()


def get_run_by_id(db: Session, run_id: int):
    return db.query(BenchRun).filter_by(id=run_id).first()


def read_records_by_run_id(db: Session, run_id: int):
    return (
        db.query(InversionRecord)
        .filter_by(run_id=run_id)
        .order_by(InversionRecord.n, InversionRecord.id)
        .all()
    )


def delete_run(db: Session, run_id: int) -> bool:
    run = get_run_by_id(db=db, run_id=run_id)
    if run is None:
        return False
    db.delete(run)
    db.commit()
    return True
