import numpy as np
import pytest
from sqlalchemy.orm import sessionmaker

from app.database import init_db, make_engine


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def db():
    engine = make_engine("sqlite://")
    init_db(bind=engine)
    session = sessionmaker(autocommit=False, autoflush=True, bind=engine)()
    try:
        yield session
    finally:
        session.close()
        engine.dispose()
