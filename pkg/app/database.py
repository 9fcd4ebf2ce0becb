from sqlalchemy import create_engine, event
from sqlalchemy.engine import Engine
from sqlalchemy.orm import declarative_base, sessionmaker
import sqlite3

from app.utils.config import load_settings

Base = declarative_base()


def enable_sqlite_foreign_keys(dbapi_connection, connection_record):
    if isinstance(dbapi_connection, sqlite3.Connection):
        cursor = dbapi_connection.cursor()
        cursor.execute("PRAGMA foreign_keys=ON")
        cursor.close()


def make_engine(url: str) -> Engine:
    engine = create_engine(url, echo=False)
    event.listen(engine, "connect", enable_sqlite_foreign_keys)
    return engine


engine = make_engine(f"sqlite:///{load_settings().results_db}")
SessionLocal = sessionmaker(autocommit=False, autoflush=True, bind=engine)


def init_db(bind: Engine = engine):
    # models register themselves on Base when imported
    import app.models.db_entry  # noqa: F401

    Base.metadata.create_all(bind=bind)
