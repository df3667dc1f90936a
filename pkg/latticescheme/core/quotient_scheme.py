"""Quotient schemes by closed subsets, involutions and divisor chains"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import PreconditionError, SchemeConsistencyError
from .gaussian import GaussInt, canonical_associate, canonical_key, exact_quotient, factor, is_unit
from .quotient_ring import QuotientRing, build_ring
from .scheme import AssociationScheme, build_scheme, intersection_numbers, verify_axioms
from .union_find import UnionFind

logger = logging.getLogger(__name__)


def _closure(support: np.ndarray, subset: Iterable[int]) -> FrozenSet[int]:
    """Smallest S ⊇ subset ∪ {0} with p_ab^c = 0 for a, b in S and c outside S"""
    mask = np.zeros(support.shape[0], dtype=bool)
    mask[list(subset)] = True
    mask[0] = True
    while True:
        grown = mask | support[np.ix_(mask, mask)].any(axis=(0, 1))
        if (grown == mask).all():
            return frozenset(int(c) for c in np.nonzero(mask)[0])
        mask = grown


def is_closed(scheme: AssociationScheme, subset: Iterable[int]) -> bool:
    subset = frozenset(subset)
    if 0 not in subset:
        return False
    return _closure(intersection_numbers(scheme) > 0, subset) == subset


def closed_subsets(scheme: AssociationScheme, cap: Optional[int] = None) -> List[FrozenSet[int]]:
    """Every S ∋ 0 whose union of relations is an equivalence, smallest first"""
    if cap is None:
        cap = get_settings().closed_subset_cap
    if scheme.d > cap:
        raise PreconditionError(
            f"scheme has {scheme.d} classes, closed subset enumeration is capped at {cap}")

    support = intersection_numbers(scheme) > 0
    trivial = frozenset({0})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        current = frontier.pop()
        for i in range(1, scheme.d + 1):
            if i in current:
                continue
            candidate = _closure(support, current | {i})
            if candidate not in found:
                found.add(candidate)
                frontier.append(candidate)

    return sorted(found, key=lambda s: (len(s), sorted(s)))


def index_equivalence(scheme: AssociationScheme, zero_tilde: Iterable[int]) -> List[List[int]]:
    """Blocks of a ~ b iff p_ab^i != 0 for some i in 0̃, closed transitively"""
    zero_tilde = frozenset(zero_tilde)
    if not is_closed(scheme, zero_tilde):
        raise PreconditionError(f"classes {sorted(zero_tilde)} are not a closed subset")

    p = intersection_numbers(scheme)
    members = sorted(zero_tilde)
    linked = p[:, :, members].sum(axis=2) > 0
    uf = UnionFind(range(scheme.d + 1))
    for a, b in np.argwhere(linked):
        uf.union(int(a), int(b))
    blocks = uf.groups()

    if frozenset(blocks[0]) != zero_tilde:
        raise SchemeConsistencyError(
            f"block of 0 is {blocks[0]}, expected {members}", witness={"block": blocks[0]})
    return blocks


@dataclass(frozen=True, eq=False)
class QuotientScheme:
    parent: AssociationScheme
    zero_tilde: FrozenSet[int]
    point_classes: Tuple[Tuple[int, ...], ...]
    relation_classes: Tuple[Tuple[int, ...], ...]
    scheme: AssociationScheme

    @property
    def relation_of(self) -> np.ndarray:
        return self.scheme.relation_of

    @property
    def point_class_reps(self) -> Tuple[GaussInt, ...]:
        ring = self.parent.ring
        if ring is None:
            raise PreconditionError("parent scheme has no quotient ring")
        return tuple(min((ring.residues[x].rep for x in cls), key=canonical_key)
                     for cls in self.point_classes)


def quotient(scheme: AssociationScheme, zero_tilde: Iterable[int]) -> QuotientScheme:
    zero_tilde = frozenset(zero_tilde)
    blocks = index_equivalence(scheme, zero_tilde)
    block_of = np.empty(scheme.d + 1, dtype=np.int64)
    for b, block in enumerate(blocks):
        block_of[block] = b

    table = scheme.relation_of
    union = np.isin(table, sorted(zero_tilde))
    point_classes: List[Tuple[int, ...]] = []
    assigned = np.zeros(scheme.n, dtype=bool)
    for x in range(scheme.n):
        if not assigned[x]:
            members = np.nonzero(union[x])[0]
            assigned[members] = True
            point_classes.append(tuple(int(m) for m in members))

    m = len(point_classes)
    point_of = np.empty(scheme.n, dtype=np.int64)
    for a, xs in enumerate(point_classes):
        point_of[list(xs)] = a
    firsts = [xs[0] for xs in point_classes]
    merged_full = block_of[table]
    merged = merged_full[np.ix_(firsts, firsts)]
    bad = np.argwhere(merged_full != merged[np.ix_(point_of, point_of)])
    if len(bad):
        a, b = (int(point_of[v]) for v in bad[0])
        values = np.unique(block_of[table[np.ix_(point_classes[a], point_classes[b])]])
        logger.error(f"Merged relation between point classes {a} and {b} is not unique: {values}")
        raise SchemeConsistencyError(
            f"point classes {a} and {b} meet merged classes {values.tolist()}",
            witness={"classes": (a, b), "merged": values.tolist()})

    result = AssociationScheme.from_table(merged)
    report = verify_axioms(result)
    if not report.passed:
        failed = next(r for r in report.results if not r.passed)
        raise SchemeConsistencyError(f"quotient fails the {failed.name} axiom", witness=failed.witness)

    logger.info(f"Quotient by {sorted(zero_tilde)}: {m} points, {result.d} classes")
    return QuotientScheme(
        parent=scheme,
        zero_tilde=zero_tilde,
        point_classes=tuple(point_classes),
        relation_classes=tuple(tuple(b) for b in blocks),
        scheme=result,
    )


@dataclass(frozen=True)
class InvolutionReport:
    classes: Tuple[int, ...]
    permutations: Dict[int, Tuple[int, ...]]
    composition: Dict[Tuple[int, int], int]

    @property
    def order(self) -> int:
        return len(self.classes)


def involutions(scheme: AssociationScheme) -> InvolutionReport:
    """The valency-1 classes A and the permutations σ_a they induce"""
    p = intersection_numbers(scheme)
    table = scheme.relation_of
    classes = tuple(a for a in range(scheme.d + 1) if p[a, a, 0] == 1)

    sigma = {}
    for a in classes:
        rows, cols = np.nonzero(table == a)
        perm = np.empty(scheme.n, dtype=np.int64)
        perm[rows] = cols
        sigma[a] = perm

    identity = np.arange(scheme.n)
    composition = {}
    for a in classes:
        if not np.array_equal(sigma[a][sigma[a]], identity):
            raise SchemeConsistencyError(f"σ_{a} is not an involution", witness={"class": a})
        for b in classes:
            composed = sigma[a][sigma[b]]
            c = int(table[0, composed[0]])
            if (c not in sigma or not np.array_equal(composed, sigma[c])
                    or not np.array_equal(composed, sigma[b][sigma[a]]) or p[a, b, c] == 0):
                raise SchemeConsistencyError(
                    f"σ_{a}σ_{b} is not σ_c for a valency-one class c", witness={"a": a, "b": b})
            composition[(a, b)] = c

    return InvolutionReport(
        classes=classes,
        permutations={a: tuple(int(v) for v in sigma[a]) for a in classes},
        composition=composition,
    )


@dataclass(frozen=True, eq=False)
class ChainStep:
    divisor: GaussInt
    ring: QuotientRing
    scheme: AssociationScheme
    involutions: InvolutionReport


def quotient_chain(alpha: GaussInt) -> List[ChainStep]:
    """α ⊃ α/π1 ⊃ ... dividing out one prime at a time in canonical factor order"""
    factorization = factor(alpha)
    if is_unit(alpha):
        raise PreconditionError(f"alpha = {alpha} is a unit and has no quotient chain")

    primes = [prime for prime, multiplicity in factorization.factors for _ in range(multiplicity)]
    current = alpha
    steps = []
    for prime in primes:
        divisor = canonical_associate(current)
        ring = build_ring(divisor)
        scheme = build_scheme(ring)
        steps.append(ChainStep(divisor, ring, scheme, involutions(scheme)))
        current = exact_quotient(current, prime)

    logger.info(f"Quotient chain of {alpha}: {' > '.join(str(s.divisor) for s in steps)}")
    return steps
