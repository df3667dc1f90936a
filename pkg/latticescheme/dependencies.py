import logging

logger = logging.getLogger(__name__)

# Global metrics to avoid duplicate registration
_command_count = None
_command_latency = None
_sweep_rows = None


class DummyMetric:
    def labels(self, **kwargs):
        return self

    def inc(self, amount=1):
        pass

    def observe(self, value):
        pass


def get_prometheus_metrics():
    """Get prometheus metrics at runtime to avoid import-time failures"""
    global _command_count, _command_latency, _sweep_rows
    if _command_count is None:
        try:
            from prometheus_client import Counter, Histogram
            _command_count = Counter(
                'latticescheme_command_total', 'CLI command runs', ['command', 'status'])
            _command_latency = Histogram(
                'latticescheme_command_seconds', 'CLI command latency', ['command'])
            _sweep_rows = Counter(
                'latticescheme_sweep_rows_total', 'Sweep report rows', ['check', 'status'])
        except ImportError:
            logger.warning("prometheus_client not available, metrics disabled")
            _command_count = DummyMetric()
            _command_latency = DummyMetric()
            _sweep_rows = DummyMetric()
    return _command_count, _command_latency, _sweep_rows


def write_metrics_file(path: str) -> bool:
    """Write the default registry in Prometheus text format"""
    try:
        from prometheus_client import REGISTRY, write_to_textfile
    except ImportError:
        logger.warning(f"prometheus_client not available, cannot write {path}")
        return False

    try:
        write_to_textfile(path, REGISTRY)
        return True
    except OSError as e:
        logger.error(f"Failed to write metrics file {path}: {e}")
        return False
