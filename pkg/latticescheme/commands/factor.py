from ..core.gaussian import factor, is_gaussian_prime, norm
from ..models.schemas import FactorEntry, FactorExport
from .common import emit_json, gaussian_integer


def register(subparsers):
    parser = subparsers.add_parser('factor', help='Factor a Gaussian integer into canonical primes')
    parser.add_argument('--alpha', type=gaussian_integer, required=True)
    parser.add_argument('--json', action='store_true', help='Emit a JSON export')
    parser.set_defaults(handler=run)


def run(args, out):
    """Print unit and prime factors of alpha"""
    alpha = args.alpha
    factorization = factor(alpha)
    if args.json:
        emit_json(FactorExport(
            alpha=str(alpha),
            norm=norm(alpha),
            unit=str(factorization.unit),
            factors=[FactorEntry(prime=str(p), multiplicity=m) for p, m in factorization.factors],
            is_prime=is_gaussian_prime(alpha),
        ), out)
        return
    print(f"{alpha} = {factorization}", file=out)
    print(f"norm: {norm(alpha)}", file=out)
    print(f"prime: {'yes' if is_gaussian_prime(alpha) else 'no'}", file=out)
