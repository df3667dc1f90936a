"""Tile types, clean sublattices and fundamental-region representatives"""
import logging
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import isprime

from ..exceptions import PreconditionError
from .gaussian import GaussInt, I, canonical_key, divmod_nearest, is_gaussian_prime, is_unit, norm
from .quotient_scheme import quotient_chain

logger = logging.getLogger(__name__)


class TileType(str, Enum):
    ONE_PLUS_I = "one_plus_i"
    SPLIT_PRIME = "split_prime"
    INERT_PRIME = "inert_prime"
    COMPOSITE = "composite"


def _require_proper(alpha: GaussInt):
    if not alpha or is_unit(alpha):
        raise PreconditionError(f"alpha = {alpha} must be non-zero and not a unit")


def classify_tile(alpha: GaussInt) -> TileType:
    _require_proper(alpha)
    if not is_gaussian_prime(alpha):
        return TileType.COMPOSITE
    n = norm(alpha)
    if n == 2:
        return TileType.ONE_PLUS_I
    # inert primes p have norm p², which is never prime
    if isprime(n):
        return TileType.SPLIT_PRIME
    return TileType.INERT_PRIME


def is_clean_odd(alpha: GaussInt) -> bool:
    _require_proper(alpha)
    return norm(alpha) % 2 == 1


def parallelogram_coords(alpha: GaussInt, z: GaussInt) -> Tuple[Fraction, Fraction]:
    """Exact (u, v) with z = u·(-iα) + v·α"""
    n = norm(alpha)
    w = z * alpha.conj()
    return Fraction(-w.im, n), Fraction(w.re, n)


def fundamental_representatives(alpha: GaussInt) -> List[GaussInt]:
    """Points of the half-open parallelogram spanned by -iα and α, canonical order"""
    _require_proper(alpha)
    corners = [GaussInt(0), alpha, -I * alpha, alpha - I * alpha]
    xs = [c.re for c in corners]
    ys = [c.im for c in corners]

    points = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            z = GaussInt(x, y)
            u, v = parallelogram_coords(alpha, z)
            if 0 <= u < 1 and 0 <= v < 1:
                points.append(z)

    if len(points) != norm(alpha):
        raise AssertionError(f"parallelogram of {alpha} holds {len(points)} points, expected {norm(alpha)}")
    return sorted(points, key=canonical_key)


def nearest_sublattice_points(alpha: GaussInt, z: GaussInt) -> List[GaussInt]:
    """All points of αZ[i] at minimal Euclidean distance from z"""
    _require_proper(alpha)
    q, _ = divmod_nearest(z, alpha)
    # in units of α the sublattice is Z[i], so every nearest point is within one step of q
    candidates = [(q + GaussInt(dx, dy)) * alpha for dx in (-1, 0, 1) for dy in (-1, 0, 1)]
    best = min(norm(z - c) for c in candidates)
    return sorted((c for c in candidates if norm(z - c) == best), key=lambda c: (c.re, c.im))


def is_clean_boundary(alpha: GaussInt) -> Tuple[bool, Optional[GaussInt]]:
    """Whether the Voronoi boundary of αZ[i] avoids Z², with the first point on it"""
    for z in fundamental_representatives(alpha):
        if len(nearest_sublattice_points(alpha, z)) > 1:
            logger.debug(f"{z} lies on the Voronoi boundary of ({alpha})Z[i]")
            return False, z
    return True, None


@dataclass(frozen=True)
class CleanStep:
    divisor: GaussInt
    order: int
    involution_classes: Tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.order % 2 == 1 and self.involution_classes == (0,)


@dataclass(frozen=True)
class CleanQuotientReport:
    alpha: GaussInt
    steps: Tuple[CleanStep, ...]

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)


def clean_quotient_check(alpha: GaussInt) -> CleanQuotientReport:
    """Every quotient along the divisor chain of a clean α is clean"""
    _require_proper(alpha)
    if norm(alpha) % 2 == 0:
        raise PreconditionError(f"norm({alpha}) = {norm(alpha)} is even; the quotient argument needs odd order")

    steps = tuple(CleanStep(step.divisor, step.ring.order, step.involutions.classes)
                  for step in quotient_chain(alpha))
    report = CleanQuotientReport(alpha, steps)
    if not report.passed:
        logger.warning(f"Clean quotient check failed for {alpha}: {steps}")
    return report


@dataclass(frozen=True)
class TileReport:
    alpha: GaussInt
    tile_type: TileType
    clean_boundary: bool
    clean_odd: bool
    boundary_witness: Optional[GaussInt]
    representatives: Tuple[GaussInt, ...]


def tile_report(alpha: GaussInt) -> TileReport:
    clean, witness = is_clean_boundary(alpha)
    return TileReport(
        alpha=alpha,
        tile_type=classify_tile(alpha),
        clean_boundary=clean,
        clean_odd=is_clean_odd(alpha),
        boundary_witness=witness,
        representatives=tuple(fundamental_representatives(alpha)),
    )
