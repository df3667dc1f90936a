import pytest

from latticescheme.config import Settings, get_settings
from latticescheme.dependencies import DummyMetric, get_prometheus_metrics, write_metrics_file
from latticescheme.exceptions import ConfigurationError


def test_defaults():
    settings = get_settings()
    assert settings == Settings()
    assert settings.log_level == 'WARNING'
    assert settings.closed_subset_cap == 20
    assert settings.sweep_workers == 1
    assert settings.metrics_file is None


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv('LATTICESCHEME_EIGEN_TOLERANCE', '1e-9')
    monkeypatch.setenv('LATTICESCHEME_SWEEP_WORKERS', '4')
    monkeypatch.setenv('LATTICESCHEME_LOG_LEVEL', 'DEBUG')
    settings = get_settings()
    assert settings.eigen_tolerance == 1e-9
    assert settings.sweep_workers == 4
    assert settings.log_level == 'DEBUG'


def test_empty_values_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv('LATTICESCHEME_RENDER_NORM_CAP', '')
    assert get_settings().render_norm_cap == 10_000


@pytest.mark.parametrize("name,value", [
    ('LATTICESCHEME_CLOSED_SUBSET_CAP', '0'),
    ('LATTICESCHEME_EIGEN_TOLERANCE', '-1'),
    ('LATTICESCHEME_SWEEP_NORM_CAP', 'many'),
])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigurationError):
        get_settings()


def test_metrics_are_registered_once():
    first = get_prometheus_metrics()
    second = get_prometheus_metrics()
    assert all(a is b for a, b in zip(first, second))
    command_count, command_latency, sweep_rows = first
    command_count.labels(command='factor', status='ok').inc()
    command_latency.labels(command='factor').observe(0.01)
    sweep_rows.labels(check='axioms', status='pass').inc()


def test_dummy_metric_accepts_every_call():
    metric = DummyMetric()
    assert metric.labels(command='x') is metric
    metric.inc()
    metric.observe(1.0)


def test_write_metrics_file(tmp_path):
    get_prometheus_metrics()
    path = tmp_path / 'metrics.prom'
    assert write_metrics_file(str(path))
    assert 'latticescheme_sweep_rows_total' in path.read_text()


def test_write_metrics_file_reports_failure(tmp_path):
    assert not write_metrics_file(str(tmp_path / 'missing' / 'metrics.prom'))
