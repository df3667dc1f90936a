"""Mannheim-metric constellations over Gaussian-integer quotients.

A split prime π of norm p ≡ 1 mod 4 carries GF(p) through g ↦ g - [gπ̄/p]π;
an inert prime p ≡ 3 mod 4 carries GF(p²) on the centered p×p grid.
"""
import math
import logging
from enum import Enum
from functools import lru_cache
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from sympy import isprime

from ..exceptions import PreconditionError
from .gaussian import GaussInt, I, ONE, divmod_nearest, norm
from .quotient_ring import QuotientRing, Residue, build_ring

logger = logging.getLogger(__name__)


class ConstellationKind(str, Enum):
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class Constellation:
    kind: ConstellationKind
    p: int
    pi: Optional[GaussInt]
    carrier: Tuple[Tuple[int, GaussInt], ...]

    @property
    def points(self) -> Tuple[GaussInt, ...]:
        return tuple(point for _, point in self.carrier)


def _require_split(pi: GaussInt) -> int:
    p = norm(pi)
    if p % 4 != 1 or not isprime(p):
        raise PreconditionError(f"norm({pi}) = {p} is not a prime congruent to 1 mod 4")
    return p


def gfp_to_point(g: int, pi: GaussInt) -> GaussInt:
    """ν(g) = g - [gπ̄/p]π"""
    p = _require_split(pi)
    if not 0 <= g < p:
        raise PreconditionError(f"label {g} is outside 0..{p - 1}")
    _, r = divmod_nearest(GaussInt(g), pi)
    return r


def point_to_gfp(z: GaussInt, pi: GaussInt) -> int:
    _require_split(pi)
    # for a cyclic quotient the coords index of an integer g is g mod p
    return build_ring(pi).index_of(z)


def build_split_constellation(pi: GaussInt) -> Constellation:
    p = _require_split(pi)
    carrier = tuple((g, gfp_to_point(g, pi)) for g in range(p))
    if len({point for _, point in carrier}) != p:
        raise AssertionError(f"GF({p}) carrier of {pi} is not injective")
    return Constellation(ConstellationKind.SPLIT, p, pi, carrier)


def build_inert_constellation(p: int) -> Constellation:
    """The grid {k + li : |k|, |l| <= (p-1)/2}"""
    if p % 4 != 3 or not isprime(p):
        raise PreconditionError(f"{p} is not a prime congruent to 3 mod 4")

    h = (p - 1) // 2
    points = [GaussInt(k, l) for k in range(-h, h + 1) for l in range(-h, h + 1)]
    ring = build_ring(GaussInt(p))
    position = {ring.index_of(z): z for z in points}
    if len(position) != p * p:
        raise AssertionError(f"Z_{p}[i] grid does not meet every class mod {p}")

    def centered(v):
        return (v + h) % p - h

    # coordinate addition mod p agrees with the quotient ring on both generators
    for z in points:
        for step in (ONE, I):
            grid_sum = GaussInt(centered(z.re + step.re), centered(z.im + step.im))
            if position[ring.index_of(z + step)] != grid_sum:
                raise AssertionError(f"grid addition disagrees with Z[i]/({p}) at {z} + {step}")

    logger.debug(f"Built Z_{p}[i] with {len(points)} points")
    return Constellation(ConstellationKind.INERT, p, None, tuple(enumerate(points)))


@lru_cache(maxsize=128)
def weight_table(ring: QuotientRing) -> Tuple[int, ...]:
    """Mannheim weight of every residue, indexed like ring.residues"""
    radius = math.isqrt(ring.order) + 1
    xs, ys = np.meshgrid(np.arange(-radius, radius + 1), np.arange(-radius, radius + 1))
    xs, ys = xs.ravel(), ys.ravel()
    idx = (ys % ring.d1) * ring.d2 + (xs - ys * ring.shift) % ring.d2

    weights = np.full(ring.order, np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(weights, idx, np.abs(xs) + np.abs(ys))
    if (weights == np.iinfo(np.int64).max).any():
        raise AssertionError(f"weight window missed classes of Z[i]/({ring.alpha})")
    return tuple(int(v) for v in weights)


def mannheim_weight(ring: QuotientRing, res: Residue) -> int:
    if not ring.owns(res):
        raise PreconditionError(f"Residue {res} does not belong to Z[i]/({ring.alpha})")
    return weight_table(ring)[res.index]


def mannheim_distance(ring: QuotientRing, x: Residue, y: Residue) -> int:
    if not (ring.owns(x) and ring.owns(y)):
        raise PreconditionError(f"Residues {x}, {y} must both belong to Z[i]/({ring.alpha})")
    return weight_table(ring)[ring.index_of(x.rep - y.rep)]
