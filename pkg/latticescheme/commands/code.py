from typing import Optional

from sympy import isprime

from ..core.coding import (ConstellationKind, build_inert_constellation, build_split_constellation,
                           mannheim_distance)
from ..core.gaussian import GaussInt, norm, two_square
from ..core.quotient_ring import build_ring
from ..exceptions import PreconditionError
from ..models.schemas import CarrierEntry, ConstellationExport
from .common import emit_json, gaussian_integer


def register(subparsers):
    parser = subparsers.add_parser('code', help='GF(p) and Z_p[i] constellations with Mannheim distances')
    parser.add_argument('--p', type=int, required=True, help='Rational prime')
    parser.add_argument('--pi', type=gaussian_integer, help='Split prime of norm p (default: two-square of p)')
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument('--table', action='store_true', help='List (label, point) pairs')
    mode.add_argument('--distances', action='store_true', help='Mannheim distance matrix over the labels')
    parser.add_argument('--json', action='store_true', help='Emit a JSON export')
    parser.set_defaults(handler=run)


def _constellation(p: int, pi: Optional[GaussInt]):
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if p % 4 == 1:
        pi = pi or two_square(p)
        if norm(pi) != p:
            raise PreconditionError(f"norm({pi}) = {norm(pi)} differs from p = {p}")
        return build_split_constellation(pi)
    if pi is not None:
        raise PreconditionError(f"p = {p} is not split; --pi only applies to p = 1 mod 4")
    return build_inert_constellation(p)


def _distance_matrix(constellation):
    modulus = constellation.pi if constellation.kind is ConstellationKind.SPLIT else GaussInt(constellation.p)
    ring = build_ring(modulus)
    residues = [ring.reduce(point) for point in constellation.points]
    return [[mannheim_distance(ring, x, y) for y in residues] for x in residues]


def _grid(constellation, out):
    """Labels drawn at their points, top row first"""
    where = {point: label for label, point in constellation.carrier}
    h = max(max(abs(z.re), abs(z.im)) for z in constellation.points)
    width = len(str(len(constellation.carrier) - 1))
    for y in range(h, -h - 1, -1):
        cells = [str(where[GaussInt(x, y)]) if GaussInt(x, y) in where else '.' for x in range(-h, h + 1)]
        print(" ".join(c.rjust(width) for c in cells), file=out)


def run(args, out):
    constellation = _constellation(args.p, args.pi)
    distances = _distance_matrix(constellation) if args.distances else None

    if args.json:
        emit_json(ConstellationExport(
            kind=constellation.kind.value,
            p=constellation.p,
            pi=None if constellation.pi is None else str(constellation.pi),
            carrier=[CarrierEntry(label=g, point=str(z)) for g, z in constellation.carrier],
            distances=distances,
        ), out)
        return

    if args.table:
        for label, point in constellation.carrier:
            print(f"{label}\t{point}", file=out)
    elif distances is not None:
        for row in distances:
            print(" ".join(str(v) for v in row), file=out)
    else:
        _grid(constellation, out)
