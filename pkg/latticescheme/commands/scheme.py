import os
import logging

import numpy as np

from ..core.quotient_ring import Ordering, build_ring
from ..core.scheme import (block_circulant_form, build_scheme, eigenvalues, format_relation_vector,
                           intersection_numbers, is_primitive_bruteforce, is_primitive_theorem,
                           is_pseudocyclic, relation_vector, signed_refinement, verify_axioms)
from ..exceptions import PreconditionError
from ..models.schemas import AxiomEntry, ComplexValue, EigenmatrixExport, SchemeExport
from .common import emit_json, format_set, gaussian_integer

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('scheme', help='The rotation-orbit association scheme of Z[i]/alpha Z[i]')
    parser.add_argument('--alpha', type=gaussian_integer, required=True)
    parser.add_argument('--ordering', choices=[o.value for o in Ordering], default=Ordering.COORDS.value)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument('--vector', action='store_true', help='Relation vector only')
    mode.add_argument('--matrices', action='store_true', help='Circulant first rows, or CSV files with --csv')
    mode.add_argument('--pmatrix', action='store_true', help='First eigenmatrix from character sums')
    mode.add_argument('--tensor', action='store_true', help='Intersection numbers p_ij^k')
    mode.add_argument('--verify', action='store_true', help='Check the five scheme axioms')
    mode.add_argument('--primitive', action='store_true', help='Brute-force and Gaussian-prime primitivity')
    mode.add_argument('--pseudocyclic', action='store_true', help='Pseudocyclic test and signed refinement')
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='Emit a JSON export')
    output.add_argument('--csv', action='store_true', help='Write adjacency matrices as CSV (with --matrices)')
    parser.add_argument('--out-dir', help='Directory for CSV files')
    parser.set_defaults(handler=run)


def _labels(scheme, ordering):
    """Point labels: representatives in coords order, GF(p) labels in gfp order"""
    ring = scheme.ring
    if ordering is Ordering.GFP:
        position = {idx: pos for pos, idx in enumerate(ring.ordering_permutation(ordering))}
        return lambda x: str(position[x])
    return lambda x: str(ring.residues[x].rep)


def _complex(value: complex) -> str:
    re, im = round(value.real, 6) + 0.0, round(value.imag, 6) + 0.0
    if abs(im) < 1e-9:
        return f"{re:g}"
    return f"{re:g}{im:+g}i"


def _export(scheme, ordering) -> SchemeExport:
    label = _labels(scheme, ordering)
    eig = eigenvalues(scheme)
    report = verify_axioms(scheme)
    return SchemeExport(
        alpha=str(scheme.ring.alpha),
        ordering=ordering.value,
        n=scheme.n,
        d=scheme.d,
        orbits=[[label(x) for x in scheme.orbit_cycle(k)] for k in range(scheme.d + 1)],
        orbit_reps=[str(z) for z in scheme.orbit_reps],
        valencies=list(scheme.valencies),
        relation_vector=relation_vector(scheme, ordering),
        tensor=intersection_numbers(scheme).tolist(),
        eigenmatrix=EigenmatrixExport(
            rows=[[ComplexValue(re=round(float(v.real), 9) + 0.0, im=round(float(v.imag), 9) + 0.0) for v in row]
                  for row in eig.P],
            multiplicities=list(eig.multiplicities),
        ),
        axioms=[AxiomEntry(name=r.name, passed=r.passed, witness=r.witness) for r in report.results],
    )


def _write_csv(scheme, out_dir, out):
    if not out_dir:
        raise PreconditionError("--csv needs --out-dir")
    os.makedirs(out_dir, exist_ok=True)
    for i in range(scheme.d + 1):
        path = os.path.join(out_dir, f"A_{i}.csv")
        np.savetxt(path, scheme.adjacency(i), fmt='%d', delimiter=',')
        print(path, file=out)
    logger.info(f"Wrote {scheme.d + 1} adjacency matrices to {out_dir}")


def run(args, out):
    ordering = Ordering(args.ordering)
    ring = build_ring(args.alpha)
    scheme = build_scheme(ring, ordering)

    if args.json:
        emit_json(_export(scheme, ordering), out)
        return

    if args.csv and not args.matrices:
        raise PreconditionError("--csv is only available with --matrices")

    if args.vector:
        print(format_relation_vector(scheme, ordering), file=out)

    elif args.matrices:
        if args.csv:
            _write_csv(scheme, args.out_dir, out)
            return
        for i in range(scheme.d + 1):
            form = block_circulant_form(scheme, i)
            if form.outer_size == 1:
                print(f"D_{i} = [{','.join(map(str, form.blocks[0]))}]", file=out)
            else:
                blocks = " | ".join(",".join(map(str, b)) for b in form.blocks)
                print(f"D_{i} = [{blocks}]", file=out)

    elif args.pmatrix:
        eig = eigenvalues(scheme)
        for row, multiplicity in zip(eig.P, eig.multiplicities):
            print(f"[{', '.join(_complex(v) for v in row)}]  x{multiplicity}", file=out)

    elif args.tensor:
        p = intersection_numbers(scheme)
        for k in range(scheme.d + 1):
            print(f"p^{k}:", file=out)
            for i in range(scheme.d + 1):
                print("  " + " ".join(str(int(v)) for v in p[i, :, k]), file=out)

    elif args.verify:
        for result in verify_axioms(scheme).results:
            status = "pass" if result.passed else f"FAIL {result.witness}"
            print(f"{result.name}: {status}", file=out)

    elif args.primitive:
        brute = is_primitive_bruteforce(scheme)
        verdict = "primitive" if brute.primitive else f"imprimitive, classes {format_set(sorted(brute.witness))}"
        print(f"bruteforce: {verdict}", file=out)
        theorem = is_primitive_theorem(args.alpha)
        print(f"gaussian prime: {'primitive' if theorem else 'imprimitive'}", file=out)

    elif args.pseudocyclic:
        report = is_pseudocyclic(scheme)
        print(f"sum_i p_ii^k for k = 1..{scheme.d}: {list(report.sums)}", file=out)
        print(f"pseudocyclic: {'yes' if report.pseudocyclic else 'no'}", file=out)
        refinement = signed_refinement(ring, ordering)
        for c, parts in refinement.merge_map.items():
            print(f"class {c} <- signed classes {format_set(parts)}", file=out)

    else:
        label = _labels(scheme, ordering)
        for k in range(scheme.d + 1):
            members = format_set(label(x) for x in scheme.orbit_cycle(k))
            print(f"class {k}: {members}", file=out)
        print(format_relation_vector(scheme, ordering), file=out)
