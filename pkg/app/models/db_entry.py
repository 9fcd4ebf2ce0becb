from sqlalchemy import Column, Integer, String, DateTime, Float, ForeignKey
from sqlalchemy.orm import relationship
from datetime import datetime, timezone

from app.database import Base


def _now():
    return datetime.now(timezone.utc)


class BenchRun(Base):
    __tablename__ = "bench_runs"

    id = Column(Integer, primary_key=True)
    experiment = Column(Integer, nullable=False)
    seed = Column(Integer, nullable=False)
    sizes = Column(String, nullable=False)
    family = Column(String, nullable=False)
    created_at = Column(DateTime, default=_now)

    records = relationship(
        "InversionRecord",
        back_populates="run",
        cascade="all, delete-orphan",
        passive_deletes=True,
    )


class InversionRecord(Base):
    __tablename__ = "inversion_records"

    id = Column(Integer, primary_key=True)
    run_id = Column(
        Integer,
        ForeignKey("bench_runs.id", ondelete="CASCADE"),
        index=True,
    )
    method = Column(String, nullable=False, index=True)
    n = Column(Integer, nullable=False)
    family = Column(String, nullable=False)
    seed = Column(Integer, nullable=False)
    q_theor = Column(Integer)
    q_pract = Column(Integer, nullable=True)
    s_theor = Column(Integer)
    s_pract = Column(Integer, nullable=True)
    residual_fro = Column(Float, nullable=True)
    dist2 = Column(Float, nullable=True)
    seconds = Column(Float, nullable=True)
    status = Column(String, nullable=False, default="ok")
    error = Column(String, nullable=True)

    run = relationship("BenchRun", back_populates="records")
