"""The finite quotient L = Z[i]/αZ[i] and its translation group.

Residues are indexed by their coordinates in T ≅ Z_d1 × Z_d2 (index
c1·d2 + c2), so that relation matrices come out block-circulant. Coordinates
of an arbitrary Gaussian integer are linear: a + bi = b·g1 + (a - b·t)·g2 with
g1 = t + i and g2 = 1.
"""
import math
import logging
from enum import Enum
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ..exceptions import PreconditionError, OrderingError, LatticeSchemeError
from .gaussian import GaussInt, I, norm, divides, is_unit

logger = logging.getLogger(__name__)


class Ordering(str, Enum):
    COORDS = "coords"
    GFP = "gfp"


@dataclass(frozen=True)
class Residue:
    rep: GaussInt
    index: int


def invariant_factors(alpha: GaussInt) -> Tuple[int, int]:
    """(d1, d2) from the Smith normal form of the columns α, iα"""
    a, b = alpha.re, alpha.im
    snf = smith_normal_form(Matrix([[a, -b], [b, a]]), domain=ZZ)
    d1, d2 = sorted(abs(int(snf[k, k])) for k in range(2))
    return d1, d2


@dataclass(frozen=True, eq=False)
class QuotientRing:
    alpha: GaussInt
    order: int
    residues: Tuple[Residue, ...]
    invariant_factors: Tuple[int, int]
    coordinate_basis: Tuple[GaussInt, GaussInt]
    shift: int = field(repr=False)

    @property
    def d1(self) -> int:
        return self.invariant_factors[0]

    @property
    def d2(self) -> int:
        return self.invariant_factors[1]

    @property
    def is_cyclic(self) -> bool:
        return self.d1 == 1

    def coords_of(self, x: GaussInt) -> Tuple[int, int]:
        """Coordinates of the class of x in Z_d1 × Z_d2"""
        return x.im % self.d1, (x.re - x.im * self.shift) % self.d2

    def index_of(self, x: GaussInt) -> int:
        c1, c2 = self.coords_of(x)
        return c1 * self.d2 + c2

    def reduce(self, x: GaussInt) -> Residue:
        return self.residues[self.index_of(x)]

    def from_coords(self, c1: int, c2: int) -> Residue:
        return self.residues[(c1 % self.d1) * self.d2 + c2 % self.d2]

    def owns(self, res: Residue) -> bool:
        return 0 <= res.index < self.order and self.residues[res.index] == res

    def coords(self, res: Residue) -> Tuple[int, int]:
        if not self.owns(res):
            raise PreconditionError(f"Residue {res} does not belong to Z[i]/({self.alpha})")
        return divmod(res.index, self.d2)

    def section(self, res: Residue) -> GaussInt:
        """A lift of res to Z[i]; reduce(section(res)) == res"""
        return res.rep

    def add(self, x: Residue, y: Residue) -> Residue:
        return self.reduce(x.rep + y.rep)

    def rotate(self, res: Residue) -> Residue:
        """Multiplication by i"""
        return self.reduce(I * res.rep)

    def ordering_permutation(self, ordering: Ordering) -> List[int]:
        """Residue indices listed in the given point ordering"""
        ordering = Ordering(ordering)
        if ordering is Ordering.COORDS:
            return list(range(self.order))
        if not self.is_cyclic:
            raise OrderingError(
                f"gfp ordering needs a cyclic translation group; Z[i]/({self.alpha}) has "
                f"invariant factors {self.invariant_factors}")
        return [self.index_of(GaussInt(g)) for g in range(self.order)]


def section(res: Residue) -> GaussInt:
    return res.rep


def _basis_shift(alpha: GaussInt, g: int) -> int:
    """Least t >= 0 with (α/g) | t + i"""
    beta = GaussInt(alpha.re // g, alpha.im // g)
    for t in range(norm(beta)):
        if divides(beta, GaussInt(t, 1)):
            return t
    raise LatticeSchemeError(f"no coordinate basis found for Z[i]/({alpha})")


@lru_cache(maxsize=256)
def build_ring(alpha: GaussInt) -> QuotientRing:
    """Build Z[i]/αZ[i] with smallest-norm representatives"""
    if not alpha:
        raise PreconditionError("alpha must be non-zero (the quotient would be infinite)")
    if is_unit(alpha):
        raise PreconditionError(f"alpha = {alpha} is a unit (the quotient would be trivial)")

    n = norm(alpha)
    d1, d2 = invariant_factors(alpha)
    g = math.gcd(alpha.re, alpha.im)
    if (d1, d2) != (g, n // g):
        raise LatticeSchemeError(f"Smith normal form of {alpha} gave {(d1, d2)}, expected {(g, n // g)}")

    t = _basis_shift(alpha, g)
    basis = (GaussInt(t, 1), GaussInt(1, 0))

    # Scan a box that holds every minimal-norm representative
    radius = abs(alpha.re) + abs(alpha.im)
    best: Dict[int, GaussInt] = {}
    skeleton = QuotientRing(alpha, n, (), (d1, d2), basis, t)
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            z = GaussInt(x, y)
            idx = skeleton.index_of(z)
            current = best.get(idx)
            # minimal norm, ties go to the largest (re, im)
            if current is None or (norm(z), -z.re, -z.im) < (norm(current), -current.re, -current.im):
                best[idx] = z

    if len(best) != n:
        raise LatticeSchemeError(f"found {len(best)} classes mod {alpha}, expected {n}")

    residues = tuple(Residue(best[idx], idx) for idx in range(n))
    logger.info(f"Built Z[i]/({alpha}): order {n}, T = Z_{d1} x Z_{d2}, basis {basis[0]}, {basis[1]}")
    return QuotientRing(alpha, n, residues, (d1, d2), basis, t)
