from ..core.quotient_ring import build_ring
from ..core.quotient_scheme import closed_subsets, quotient, quotient_chain
from ..core.scheme import build_scheme, format_relation_vector, relation_vector
from ..models.schemas import ChainExport, ChainStepExport, QuotientExport
from .common import emit_json, format_set, gaussian_integer, parse_class_list


def register(subparsers):
    parser = subparsers.add_parser('quotient', help='Quotient schemes, involutions and divisor chains')
    parser.add_argument('--alpha', type=gaussian_integer, required=True)
    parser.add_argument('--zero-tilde', action='append', default=[],
                        help='Closed subset, e.g. "0,2"; bare integers are class indices, entries with i '
                             '(e.g. "2+0i") are representatives. Repeat to quotient again')
    parser.add_argument('--chain', action='store_true', help='Divisor chain with involution sets')
    parser.add_argument('--vector', action='store_true', help='Relation vector of the quotient only')
    parser.add_argument('--json', action='store_true', help='Emit a JSON export')
    parser.set_defaults(handler=run)


def _run_chain(args, out):
    steps = quotient_chain(args.alpha)
    if args.json:
        emit_json(ChainExport(alpha=str(args.alpha), steps=[
            ChainStepExport(divisor=str(s.divisor), order=s.ring.order,
                            invariant_factors=list(s.ring.invariant_factors), d=s.scheme.d,
                            involutions=list(s.involutions.classes))
            for s in steps]), out)
        return
    for s in steps:
        d1, d2 = s.ring.invariant_factors
        print(f"{s.divisor}\torder {s.ring.order}\tZ_{d1} x Z_{d2}\tA = {format_set(s.involutions.classes)}",
              file=out)


def run(args, out):
    if args.chain:
        _run_chain(args, out)
        return

    scheme = build_scheme(build_ring(args.alpha))
    if not args.zero_tilde:
        for subset in closed_subsets(scheme):
            print(format_set(sorted(subset)), file=out)
        return

    applied = []
    current = scheme
    qs = None
    for text in args.zero_tilde:
        zero_tilde = parse_class_list(current, text)
        qs = quotient(current, zero_tilde)
        applied.append(zero_tilde)
        current = qs.scheme

    if args.json:
        emit_json(QuotientExport(
            alpha=str(args.alpha),
            zero_tilde=applied,
            n=current.n,
            d=current.d,
            point_classes=[list(c) for c in qs.point_classes],
            relation_classes=[list(c) for c in qs.relation_classes],
            relation_vector=relation_vector(current),
        ), out)
        return

    if args.vector:
        print(format_relation_vector(current), file=out)
        return

    print(f"points: {current.n}", file=out)
    parent = qs.parent
    for k, cls in enumerate(qs.point_classes):
        labels = [str(parent.ring.residues[x].rep) for x in cls] if parent.ring is not None else list(cls)
        print(f"point {k}: {format_set(labels)}", file=out)
    for k, block in enumerate(qs.relation_classes):
        print(f"class {k}: parent classes {format_set(block)}", file=out)
    print(format_relation_vector(current), file=out)
