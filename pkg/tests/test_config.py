from app.utils.config import CONFIG_ENV, Settings, load_settings, read_config_file


def test_defaults_file_matches_builtin_defaults():
    load_settings.cache_clear()
    try:
        assert load_settings() == Settings()
    finally:
        load_settings.cache_clear()


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "local.json5"
    path.write_text("{\n  // smaller runs\n  default_sizes: [10, 20],\n  timing_repeats: 3,\n}\n")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    load_settings.cache_clear()
    try:
        settings = load_settings()
        assert settings.default_sizes == (10, 20)
        assert settings.timing_repeats == 3
        assert settings.default_seed == 42
    finally:
        load_settings.cache_clear()


def test_unknown_keys_are_dropped(tmp_path):
    path = tmp_path / "extra.json5"
    path.write_text("{workers: 4, colour: 'blue'}")
    assert read_config_file(path) == {"workers": 4}


def test_with_overrides_ignores_none():
    settings = Settings().with_overrides(symmetry_tol=None, workers=2)
    assert settings.workers == 2
    assert settings.symmetry_tol == 0.0
