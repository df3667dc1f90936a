from ..core.quotient_ring import build_ring
from ..models.schemas import ResidueEntry, RingExport
from .common import emit_json, gaussian_integer


def register(subparsers):
    parser = subparsers.add_parser('ring', help='Residues and translation group of Z[i]/alpha Z[i]')
    parser.add_argument('--alpha', type=gaussian_integer, required=True)
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='Emit a JSON export')
    output.add_argument('--table', action='store_true', help='List index, representative and coordinates')
    parser.set_defaults(handler=run)


def run(args, out):
    ring = build_ring(args.alpha)
    if args.json:
        emit_json(RingExport(
            alpha=str(ring.alpha),
            order=ring.order,
            invariant_factors=list(ring.invariant_factors),
            coordinate_basis=[str(g) for g in ring.coordinate_basis],
            residues=[ResidueEntry(index=r.index, rep=str(r.rep), coords=list(ring.coords(r)))
                      for r in ring.residues],
        ), out)
        return

    if args.table:
        for res in ring.residues:
            c1, c2 = ring.coords(res)
            print(f"{res.index}\t{res.rep}\t({c1},{c2})", file=out)
        return

    d1, d2 = ring.invariant_factors
    g1, g2 = ring.coordinate_basis
    print(f"alpha: {ring.alpha}", file=out)
    print(f"order: {ring.order}", file=out)
    print(f"translation group: Z_{d1} x Z_{d2}", file=out)
    print(f"basis: g1 = {g1}, g2 = {g2}", file=out)
