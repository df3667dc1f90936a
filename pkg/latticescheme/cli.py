import sys
import time
import logging
import argparse
from typing import List, Optional

from . import __version__
from .commands import COMMANDS
from .config import get_settings
from .dependencies import get_prometheus_metrics, write_metrics_file
from .exceptions import LatticeSchemeError
from .models.schemas import CommandConfig

logger = logging.getLogger(__name__)


def configure_logging(level: str = 'WARNING'):
    # stdout carries command output, logs go to stderr
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='latticescheme',
        description='Association schemes on Z[i]/alpha Z[i]: rings, schemes, quotients, tilings and constellations',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def command_config(args: argparse.Namespace) -> CommandConfig:
    if getattr(args, 'json', False):
        output_format = 'json'
    elif getattr(args, 'csv', False):
        output_format = 'csv'
    elif getattr(args, 'svg', None):
        output_format = 'svg'
    else:
        output_format = 'text'
    alpha = getattr(args, 'alpha', None)
    return CommandConfig(
        subcommand=args.command,
        alpha=None if alpha is None else str(alpha),
        p=getattr(args, 'p', None),
        output_format=output_format,
        output_path=getattr(args, 'svg', None) or getattr(args, 'out_dir', None),
    )


def run(args: argparse.Namespace, out=None) -> int:
    """Dispatch a parsed command; 0 on success, 1 on a domain or file error"""
    out = out or sys.stdout
    config = command_config(args)
    logger.debug(f"Running {config.model_dump()}")

    command_count, command_latency, _ = get_prometheus_metrics()
    start = time.perf_counter()
    status = 'ok'
    try:
        args.handler(args, out)
        return 0
    except (LatticeSchemeError, OSError) as e:
        status = 'error'
        logger.error(f"{config.subcommand} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    finally:
        command_count.labels(command=config.subcommand, status=status).inc()
        command_latency.labels(command=config.subcommand).observe(time.perf_counter() - start)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        settings = get_settings()
    except LatticeSchemeError as e:
        configure_logging()
        print(f"error: {e}", file=sys.stderr)
        return 1
    configure_logging(settings.log_level)

    code = run(args)
    if settings.metrics_file:
        write_metrics_file(settings.metrics_file)
    return code


if __name__ == "__main__":
    sys.exit(main())
