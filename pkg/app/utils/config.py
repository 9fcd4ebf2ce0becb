import logging
import os
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from pathlib import Path

import json5

logger = logging.getLogger(__name__)

DEFAULTS_FILE = Path(__file__).resolve().parents[2] / "config" / "defaults.json5"
CONFIG_ENV = "SYMINV_CONFIG"


@dataclass(frozen=True)
class Settings:
    symmetry_tol: float = 0.0
    norm_iters: int = 200
    norm_tol: float = 1e-12
    timing_repeats: int = 5
    timing_warmup: int = 1
    max_reseeds: int = 100
    default_seed: int = 42
    default_sizes: tuple[int, ...] = field(default=(100, 300, 500))
    workers: int = 1
    results_db: str = "Bench_Results.db"
    log_level: str = "INFO"

    def with_overrides(self, **overrides) -> "Settings":
        """Returns a copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def read_config_file(path: Path) -> dict:
    """
    Opens and reads a JSON5 config file (inline comments allowed), returns its entries.
    Unknown keys are dropped with a warning.
    :param path: path to the .json5 file
    :return: Dict
    """
    with open(file=path, mode="r", encoding="utf-8") as f:
        data = json5.load(f)

    known = {f.name for f in fields(Settings)}
    for key in set(data) - known:
        logger.warning("Ignoring unknown config key '%s' in %s", key, path)
    entries = {k: v for k, v in data.items() if k in known}
    if "default_sizes" in entries:
        entries["default_sizes"] = tuple(int(n) for n in entries["default_sizes"])
    return entries


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """
    Built-in defaults, overlaid with config/defaults.json5 and then with the file named by
    SYMINV_CONFIG when that variable is set.
    """
    entries = {}
    if DEFAULTS_FILE.exists():
        entries.update(read_config_file(DEFAULTS_FILE))
    override = os.environ.get(CONFIG_ENV)
    if override:
        entries.update(read_config_file(Path(override)))
    return Settings(**entries)
