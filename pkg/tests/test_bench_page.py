import ui.bench_page as bench_page
from app.linalg.errors import GenerationFailed


def test_run_bench_returns_reports():
    ran, reports = bench_page.run_bench(1, "4", ["v2"], 42, None)
    assert ran
    assert [(r.method, r.q_pract) for r in reports] == [("v2", 40)]


def test_run_bench_reports_generation_failure(monkeypatch):
    def fail(*args, **kwargs):
        raise GenerationFailed("no pivot-free matrix after 3 reseeds")

    monkeypatch.setattr(bench_page, "run_experiment", fail)
    assert bench_page.run_bench(3, "5", ["v2"], 42, None) == (False, "no pivot-free matrix after 3 reseeds")


def test_run_bench_reports_bad_input():
    ran, message = bench_page.run_bench(1, "four", ["v2"], 42, None)
    assert not ran
    assert "integers" in message
