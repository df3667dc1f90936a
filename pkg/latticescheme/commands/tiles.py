import logging

from ..core.svg import render_svg
from ..core.tiling import classify_tile, clean_quotient_check, is_clean_boundary, is_clean_odd, tile_report
from ..core.quotient_ring import build_ring
from ..core.scheme import build_scheme
from ..models.schemas import TileExport
from .common import emit_json, format_set, gaussian_integer, parse_class_list

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('tiles', help='Tile type, cleanliness and drawings of alpha Z[i]')
    parser.add_argument('--alpha', type=gaussian_integer, required=True)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument('--classify', action='store_true', help='Tile type only')
    mode.add_argument('--clean', action='store_true', help='Voronoi-boundary and odd-order verdicts')
    mode.add_argument('--clean-quotient', action='store_true', help='Cleanliness along the divisor chain')
    mode.add_argument('--reps', action='store_true', help='Fundamental-region representatives')
    mode.add_argument('--svg', metavar='PATH', help='Write an SVG drawing')
    mode.add_argument('--json', action='store_true', help='Emit a JSON export')
    parser.add_argument('--window', type=int, help='Half-width of the drawn window')
    parser.add_argument('--orbit-colors', action='store_true', help='Color points by scheme class')
    parser.add_argument('--group', help='Color points by quotient class for this closed subset')
    parser.add_argument('--gf-labels', action='store_true', help='Label representatives with GF(p) labels')
    parser.set_defaults(handler=run)


def _verdict(clean: bool) -> str:
    return "clean" if clean else "not clean"


def run(args, out):
    alpha = args.alpha

    if args.classify:
        print(classify_tile(alpha).value, file=out)

    elif args.clean:
        clean, witness = is_clean_boundary(alpha)
        suffix = f" (witness {witness})" if witness is not None else ""
        print(f"boundary: {_verdict(clean)}{suffix}", file=out)
        print(f"odd order: {_verdict(is_clean_odd(alpha))}", file=out)

    elif args.clean_quotient:
        report = clean_quotient_check(alpha)
        for step in report.steps:
            print(f"{step.divisor}\torder {step.order}\tA = {format_set(step.involution_classes)}\t"
                  f"{'pass' if step.passed else 'FAIL'}", file=out)

    elif args.reps:
        for z in tile_report(alpha).representatives:
            print(z, file=out)

    elif args.svg:
        zero_tilde = None
        if args.group:
            zero_tilde = parse_class_list(build_scheme(build_ring(alpha)), args.group)
        document = render_svg(alpha, window=args.window, orbit_colors=args.orbit_colors,
                              zero_tilde=zero_tilde, gfp_labels=args.gf_labels)
        with open(args.svg, 'w') as f:
            f.write(document)
        logger.info(f"SVG written to {args.svg}")
        print(args.svg, file=out)

    else:
        report = tile_report(alpha)
        if args.json:
            emit_json(TileExport(
                alpha=str(alpha),
                tile_type=report.tile_type.value,
                clean_boundary=report.clean_boundary,
                clean_odd=report.clean_odd,
                boundary_witness=None if report.boundary_witness is None else str(report.boundary_witness),
                representatives=[str(z) for z in report.representatives],
            ), out)
            return
        print(f"tile type: {report.tile_type.value}", file=out)
        witness = f" (witness {report.boundary_witness})" if report.boundary_witness is not None else ""
        print(f"boundary: {_verdict(report.clean_boundary)}{witness}", file=out)
        print(f"odd order: {_verdict(report.clean_odd)}", file=out)
        print(f"representatives: {format_set(report.representatives)}", file=out)
