from ..tasks import CHECKS, run_sweep
from .common import emit_json


def register(subparsers):
    parser = subparsers.add_parser('sweep', help='Run property checks over all alpha up to a norm bound')
    parser.add_argument('--norm-bound', type=int, required=True)
    parser.add_argument('--checks', default=','.join(CHECKS),
                        help=f"Comma separated subset of {','.join(CHECKS)}")
    parser.add_argument('--workers', type=int, help='Worker processes (default from configuration)')
    parser.add_argument('--failures-only', action='store_true', help='Print failing rows only')
    parser.add_argument('--json', action='store_true', help='Emit a JSON report')
    parser.set_defaults(handler=run)


def run(args, out):
    checks = [c.strip() for c in args.checks.split(',') if c.strip()]
    report = run_sweep(args.norm_bound, checks, workers=args.workers)
    if args.json:
        emit_json(report, out)
        return

    rows = report.failures if args.failures_only else report.rows
    for row in rows:
        detail = " ".join(f"{k}={v}" for k, v in row.detail.items())
        print(f"{row.check}\t{row.alpha}\t{row.norm}\t{row.status}\t{detail}".rstrip(), file=out)
    print(f"{len(report.rows)} rows, {len(report.failures)} not passing", file=out)
