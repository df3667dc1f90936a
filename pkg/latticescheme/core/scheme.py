"""Association schemes on L = Z[i]/αZ[i] from the orbitals of ⟨i⟩ ⋉ T.

Points are residue indices in coords order. Relation classes are orbits of
multiplication by i (or by -1 for the signed refinement), and the class of a
pair (x, y) is the orbit of x - y.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from scipy.linalg import circulant
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..config import get_settings
from ..exceptions import PreconditionError, OrderingError, SchemeConsistencyError
from .gaussian import GaussInt, I, canonical_key, is_gaussian_prime, is_unit
from .quotient_ring import Ordering, QuotientRing
from .union_find import UnionFind

logger = logging.getLogger(__name__)

AXIOMS = ("partition", "symmetry", "identity", "product", "commutativity")


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    relation_of: np.ndarray
    ring: Optional[QuotientRing] = None
    ordering: Ordering = Ordering.COORDS
    orbits: Tuple[Tuple[int, ...], ...] = ()
    orbit_reps: Tuple[GaussInt, ...] = ()
    generator: GaussInt = I

    @classmethod
    def from_table(cls, table) -> "AssociationScheme":
        """Wrap a bare relation table (classes 0..d, all present)"""
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise PreconditionError(f"relation table must be a non-empty square matrix, got shape {table.shape}")
        if table.min() < 0:
            raise PreconditionError("relation table has negative class indices")
        table.setflags(write=False)
        return cls(relation_of=table)

    @property
    def n(self) -> int:
        return self.relation_of.shape[0]

    @property
    def d(self) -> int:
        return int(self.relation_of.max())

    @cached_property
    def valencies(self) -> Tuple[int, ...]:
        counts = np.bincount(self.relation_of[0], minlength=self.d + 1)
        return tuple(int(c) for c in counts)

    def adjacency(self, i: int) -> np.ndarray:
        """0/1 adjacency matrix A_i"""
        if not 0 <= i <= self.d:
            raise PreconditionError(f"class {i} out of range 0..{self.d}")
        return (self.relation_of == i).astype(np.int64)

    def class_of(self, x: int, y: int) -> int:
        return int(self.relation_of[x, y])

    def class_of_residue(self, z: GaussInt) -> int:
        """Class index of the orbit containing z mod α"""
        if self.ring is None:
            raise PreconditionError("scheme has no underlying quotient ring")
        return int(self.relation_of[self.ring.index_of(z), 0])

    def orbit_cycle(self, k: int) -> Tuple[int, ...]:
        """Residue indices of class k, walking from its representative by the generator"""
        if self.ring is None:
            raise PreconditionError("scheme has no underlying quotient ring")
        cycle = []
        z = self.orbit_reps[k]
        while self.ring.index_of(z) not in cycle:
            cycle.append(self.ring.index_of(z))
            z = self.generator * z
        return tuple(cycle)

    @cached_property
    def products(self) -> "_ProductCheck":
        if self.ring is not None and _is_difference_table(self.ring, self.relation_of):
            return _check_products_by_convolution(self)
        return _check_products(self)

    @property
    def p_tensor(self) -> np.ndarray:
        return intersection_numbers(self)


@dataclass(frozen=True)
class _ProductCheck:
    p_tensor: np.ndarray
    product_witness: Optional[dict]
    commute_witness: Optional[dict]


def _check_products(scheme: AssociationScheme) -> _ProductCheck:
    """Sparse A_i A_j for a bare table, with p_ij^k read off the first pair of each class.

    The entries of A_i A_j over the cells of R_k are all p_ij^k exactly when
    their sum is p·|R_k| and their sum of squares is p²·|R_k|, so only the
    nonzero entries of each product are visited.
    """
    table = scheme.relation_of
    d = scheme.d
    sizes = np.bincount(table.ravel(), minlength=d + 1)
    if not sizes.all():
        k = int(np.argmin(sizes))
        raise SchemeConsistencyError(f"class {k} is empty", witness={"class": k})
    _, first = np.unique(table.ravel(), return_index=True)
    xs, ys = np.divmod(first, scheme.n)

    mats = [csr_matrix(table == i, dtype=np.int64) for i in range(d + 1)]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    product_witness = None
    commute_witness = None

    for i in range(d + 1):
        for j in range(i, d + 1):
            m_ij = mats[i] @ mats[j]
            m_ji = m_ij if i == j else mats[j] @ mats[i]
            for a, b, m in ((i, j, m_ij), (j, i, m_ji))[:1 if i == j else 2]:
                p[a, b] = np.asarray(m[xs, ys]).ravel()
                if product_witness is None and not _constant_on_classes(m, table, p[a, b], sizes):
                    dense = m.toarray()
                    x, y = (int(v) for v in np.argwhere(dense != p[a, b][table])[0])
                    product_witness = {"i": a, "j": b, "k": int(table[x, y]), "x": x, "y": y,
                                       "count": int(dense[x, y]), "expected": int(p[a, b, table[x, y]])}
            if commute_witness is None and i != j and (m_ij != m_ji).nnz:
                x, y = _first_pair((m_ij != m_ji).toarray())
                commute_witness = {"i": i, "j": j, "x": x, "y": y}

    return _ProductCheck(p, product_witness, commute_witness)


def _constant_on_classes(m, table: np.ndarray, expected: np.ndarray, sizes: np.ndarray) -> bool:
    m = m.tocoo()
    keep = m.data != 0
    classes = table[m.row[keep], m.col[keep]]
    values = m.data[keep].astype(np.float64)
    total = np.bincount(classes, weights=values, minlength=len(sizes))
    squares = np.bincount(classes, weights=values * values, minlength=len(sizes))
    return bool(np.array_equal(total, expected * sizes) and np.array_equal(squares, expected * expected * sizes))


def _difference_index(ring: QuotientRing) -> np.ndarray:
    """diff[x, y] = index of x - y"""
    idx = np.arange(ring.order)
    c1, c2 = idx // ring.d2, idx % ring.d2
    return ((c1[:, None] - c1[None, :]) % ring.d1) * ring.d2 + (c2[:, None] - c2[None, :]) % ring.d2


def _is_difference_table(ring: QuotientRing, table: np.ndarray) -> bool:
    if table.shape != (ring.order, ring.order):
        return False
    return bool((table == table[:, 0][_difference_index(ring)]).all())


def _check_products_by_convolution(scheme: AssociationScheme) -> _ProductCheck:
    """Products of a translation-invariant table as convolutions over Z_d1 × Z_d2.

    (A_i A_j)[x, y] only depends on w = x - y and equals the number of z with
    class(w - z) = i and class(z) = j, so every product is one FFT convolution
    of class indicators. Each convolution is compared against p_ij^class(w)
    for every w, which covers every pair.
    """
    ring = scheme.ring
    d = scheme.d
    classes = np.asarray(scheme.relation_of[:, 0])
    present = np.bincount(classes, minlength=d + 1)
    if not present.all():
        k = int(np.argmin(present))
        raise SchemeConsistencyError(f"class {k} is empty", witness={"class": k})
    firsts = np.array([int(np.argmax(classes == k)) for k in range(d + 1)])

    indicator = (classes[None, :] == np.arange(d + 1)[:, None]).astype(np.float64)
    spectra = np.fft.fft2(indicator.reshape(d + 1, ring.d1, ring.d2))

    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    product_witness = None
    for i in range(d + 1):
        conv = np.fft.ifft2(spectra[i] * spectra).real.reshape(d + 1, scheme.n)
        conv = np.rint(conv).astype(np.int64)
        p[i] = conv[:, firsts]
        if product_witness is None:
            bad = np.argwhere(conv != p[i][:, classes])
            if len(bad):
                j, w = (int(v) for v in bad[0])
                k = int(classes[w])
                product_witness = {"i": i, "j": j, "k": k, "x": w, "y": 0,
                                   "count": int(conv[j, w]), "expected": int(p[i, j, k])}

    commute_witness = None
    bad = np.argwhere(p != p.transpose(1, 0, 2))
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        commute_witness = {"i": i, "j": j, "x": int(firsts[k]), "y": 0}
    return _ProductCheck(p, product_witness, commute_witness)


def _orbit_partition(ring: QuotientRing, generator: GaussInt) -> List[List[int]]:
    uf = UnionFind(range(ring.order))
    for res in ring.residues:
        uf.union(res.index, ring.index_of(generator * res.rep))
    return uf.groups()


def _relation_table(ring: QuotientRing, class_of: np.ndarray) -> np.ndarray:
    table = class_of[_difference_index(ring)]
    table.setflags(write=False)
    return table


def _orbit_scheme(ring: QuotientRing, ordering: Ordering, generator: GaussInt) -> AssociationScheme:
    ordering = Ordering(ordering)
    ring.ordering_permutation(ordering)  # rejects gfp on non-cyclic rings

    def rep_of(orbit):
        return min((ring.residues[k].rep for k in orbit), key=canonical_key)

    orbits = _orbit_partition(ring, generator)
    if ordering is Ordering.COORDS:
        # first appearance along the residue order
        orbits.sort(key=lambda orbit: orbit[0])
    else:
        orbits.sort(key=lambda orbit: canonical_key(rep_of(orbit)))

    class_of = np.empty(ring.order, dtype=np.int64)
    for k, orbit in enumerate(orbits):
        class_of[orbit] = k

    return AssociationScheme(
        relation_of=_relation_table(ring, class_of),
        ring=ring,
        ordering=ordering,
        orbits=tuple(tuple(orbit) for orbit in orbits),
        orbit_reps=tuple(rep_of(orbit) for orbit in orbits),
        generator=generator,
    )


def build_scheme(ring: QuotientRing, ordering: Ordering = Ordering.COORDS) -> AssociationScheme:
    scheme = _orbit_scheme(ring, ordering, I)
    logger.info(f"Scheme on Z[i]/({ring.alpha}): {scheme.d} classes, valencies {scheme.valencies}")
    return scheme


def relation_vector(scheme: AssociationScheme, ordering: Optional[Ordering] = None) -> List[int]:
    """First row of the relation table with points listed in the given ordering"""
    ordering = Ordering(ordering or scheme.ordering)
    if scheme.ring is None:
        if ordering is not Ordering.COORDS:
            raise OrderingError("schemes without a quotient ring only have the point order")
        order = list(range(scheme.n))
    else:
        order = scheme.ring.ordering_permutation(ordering)
    first = order[0]
    return [int(scheme.relation_of[first, y]) for y in order]


def format_relation_vector(scheme: AssociationScheme, ordering: Optional[Ordering] = None) -> str:
    ordering = Ordering(ordering or scheme.ordering)
    vector = [str(c) for c in relation_vector(scheme, ordering)]
    ring = scheme.ring
    if ring is None or ordering is not Ordering.COORDS or ring.d1 == 1:
        return "[" + ",".join(vector) + "]"
    rows = [",".join(vector[k:k + ring.d2]) for k in range(0, len(vector), ring.d2)]
    return "[" + "|".join(rows) + "]"


def intersection_numbers(scheme: AssociationScheme) -> np.ndarray:
    """(d+1)³ tensor p[i, j, k], validated over every pair of every class"""
    check = scheme.products
    if check.product_witness is not None:
        w = check.product_witness
        logger.error(f"Intersection number p_{w['i']}{w['j']}^{w['k']} is not constant: {w}")
        raise SchemeConsistencyError(
            f"p_{w['i']},{w['j']}^{w['k']} differs at pair ({w['x']}, {w['y']})", witness=w)
    return check.p_tensor


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[dict] = None


@dataclass(frozen=True)
class AxiomReport:
    results: Tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _first_pair(mask: np.ndarray) -> Optional[Tuple[int, int]]:
    hits = np.argwhere(mask)
    if not len(hits):
        return None
    return int(hits[0][0]), int(hits[0][1])


def verify_axioms(scheme: AssociationScheme) -> AxiomReport:
    table = scheme.relation_of
    d = scheme.d
    results = []

    present = set(np.unique(table).tolist())
    missing = [k for k in range(d + 1) if k not in present]
    results.append(AxiomResult("partition", not missing, {"empty_classes": missing} if missing else None))

    pair = _first_pair(table != table.T)
    results.append(AxiomResult("symmetry", pair is None, None if pair is None else {
        "x": pair[0], "y": pair[1],
        "class_xy": int(table[pair]), "class_yx": int(table[pair[1], pair[0]])}))

    off_diagonal_zero = (table == 0) & ~np.eye(scheme.n, dtype=bool)
    pair = _first_pair((np.diag(np.diag(table)) != 0) | off_diagonal_zero)
    results.append(AxiomResult("identity", pair is None, None if pair is None else {
        "x": pair[0], "y": pair[1], "class": int(table[pair])}))

    if missing:
        results.append(AxiomResult("product", False, {"reason": "empty classes"}))
        results.append(AxiomResult("commutativity", False, {"reason": "empty classes"}))
    else:
        check = scheme.products
        results.append(AxiomResult("product", check.product_witness is None, check.product_witness))
        results.append(AxiomResult("commutativity", check.commute_witness is None, check.commute_witness))

    report = AxiomReport(tuple(results))
    if not report.passed:
        failed = [r.name for r in results if not r.passed]
        logger.warning(f"Axiom check failed for {failed}")
    return report


def is_equivalence_union(scheme: AssociationScheme, subset: Iterable[int]) -> bool:
    """Is R_0 ∪ (∪_{i∈subset} R_i) an equivalence relation on the points"""
    classes = sorted(set(subset) | {0})
    union = np.isin(scheme.relation_of, classes)
    if not union.diagonal().all() or (union != union.T).any():
        return False
    u = union.astype(np.float64)
    return not ((u @ u > 0.5) & ~union).any()


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    witness: Optional[FrozenSet[int]] = None


def is_primitive_bruteforce(scheme: AssociationScheme) -> PrimitivityResult:
    """Look for a non-trivial equivalence made of relations.

    Any such union containing R_i contains the connectivity relation of the
    graph R_i, which is itself a union of relations. So it is enough to
    check whether some relation graph is disconnected.
    """
    table = scheme.relation_of
    candidates = []
    for i in range(1, scheme.d + 1):
        n_components, labels = connected_components(csr_matrix(table == i), directed=False)
        if n_components > 1:
            same = labels[:, None] == labels[None, :]
            candidates.append(frozenset(int(c) for c in np.unique(table[same])))

    if not candidates:
        return PrimitivityResult(True)

    witness = min(candidates, key=lambda s: (len(s), sorted(s)))
    if not is_equivalence_union(scheme, witness):
        raise SchemeConsistencyError(
            f"component relation {sorted(witness)} is not an equivalence", witness=sorted(witness))
    logger.debug(f"Imprimitive: classes {sorted(witness)} form an equivalence")
    return PrimitivityResult(False, witness)


def is_primitive_theorem(alpha: GaussInt) -> bool:
    if not alpha or is_unit(alpha):
        raise PreconditionError(f"alpha = {alpha} must be non-zero and not a unit")
    return is_gaussian_prime(alpha)


@dataclass(frozen=True)
class BlockCirculantForm:
    """A_i as a d1×d1 block circulant of d2×d2 circulants.

    blocks[k] is the first column of the block in block-row k, block-column 0;
    the relation is symmetric so this is also the first row of block (0, k)
    read in reverse block order.
    """
    class_index: int
    outer_size: int
    inner_size: int
    blocks: Tuple[Tuple[int, ...], ...]

    def expand(self) -> np.ndarray:
        circulants = [circulant(np.asarray(b, dtype=np.int64)) for b in self.blocks]
        d1 = self.outer_size
        return np.block([[circulants[(r - s) % d1] for s in range(d1)] for r in range(d1)])


def block_circulant_form(scheme: AssociationScheme, i: int) -> BlockCirculantForm:
    if scheme.ring is None:
        raise OrderingError("block-circulant form needs points in coords order of a quotient ring")
    if not 0 <= i <= scheme.d:
        raise PreconditionError(f"class {i} out of range 0..{scheme.d}")
    d1, d2 = scheme.ring.invariant_factors
    column = (scheme.relation_of[:, 0] == i).astype(np.int64)
    blocks = tuple(tuple(int(v) for v in column[k * d2:(k + 1) * d2]) for k in range(d1))
    return BlockCirculantForm(class_index=i, outer_size=d1, inner_size=d2, blocks=blocks)


def characters(ring: QuotientRing) -> np.ndarray:
    """χ_s(x) for all s, x in T ≅ Z_d1 × Z_d2; rows are characters, columns points"""
    d1, d2 = ring.invariant_factors
    idx = np.arange(ring.order)
    c1, c2 = idx // d2, idx % d2
    # reduce the integer phases before dividing so angles stay exact
    num1 = np.outer(c1, c1) % d1
    num2 = np.outer(c2, c2) % d2
    return np.exp(2j * np.pi * (num1 / d1 + num2 / d2))


@dataclass(frozen=True)
class Eigenmatrix:
    P: np.ndarray
    multiplicities: Tuple[int, ...]
    characters: Tuple[Tuple[Tuple[int, int], ...], ...]
    character_sums: np.ndarray = field(repr=False)


def eigenvalues(scheme: AssociationScheme, tolerance: Optional[float] = None) -> Eigenmatrix:
    """First eigenmatrix from character sums over the orbits"""
    if scheme.ring is None:
        raise PreconditionError("eigenvalues need the translation group of a quotient ring")
    if tolerance is None:
        tolerance = get_settings().eigen_tolerance

    ring = scheme.ring
    indicator = np.zeros((scheme.n, scheme.d + 1))
    indicator[np.arange(scheme.n), scheme.relation_of[:, 0]] = 1.0
    sums = characters(ring) @ indicator

    rows: List[np.ndarray] = []
    members: List[List[Tuple[int, int]]] = []
    for s in range(scheme.n):
        for k, row in enumerate(rows):
            if np.max(np.abs(sums[s] - row)) < tolerance:
                members[k].append(divmod(s, ring.d2))
                break
        else:
            rows.append(sums[s])
            members.append([divmod(s, ring.d2)])

    return Eigenmatrix(
        P=np.array(rows),
        multiplicities=tuple(len(m) for m in members),
        characters=tuple(tuple(m) for m in members),
        character_sums=sums,
    )


@dataclass(frozen=True)
class PseudocyclicReport:
    pseudocyclic: bool
    sums: Tuple[int, ...]

    @property
    def multiplicity(self) -> Optional[int]:
        """Common eigenvalue multiplicity implied by a constant sum"""
        if not self.pseudocyclic or not self.sums:
            return None
        return self.sums[0] + 1


def is_pseudocyclic(scheme: AssociationScheme) -> PseudocyclicReport:
    """Constancy of Σ_{i>=1} p_ii^k over the nonzero classes k"""
    p = intersection_numbers(scheme)
    d = scheme.d
    sums = tuple(int(sum(p[i, i, k] for i in range(1, d + 1))) for k in range(1, d + 1))
    return PseudocyclicReport(pseudocyclic=len(set(sums)) <= 1, sums=sums)


@dataclass(frozen=True)
class SignedRefinement:
    scheme: AssociationScheme
    merge_map: Dict[int, Tuple[int, ...]]


def signed_refinement(ring: QuotientRing, ordering: Ordering = Ordering.COORDS) -> SignedRefinement:
    """The scheme of {±1}-orbits, with each ⟨i⟩-class written as a union of its classes"""
    parent = build_scheme(ring, ordering)
    refined = _orbit_scheme(ring, ordering, GaussInt(-1))

    merge: Dict[int, List[int]] = {}
    for k, orbit in enumerate(refined.orbits):
        owners = {int(parent.relation_of[x, 0]) for x in orbit}
        if len(owners) != 1:
            raise SchemeConsistencyError(f"refined class {k} straddles classes {sorted(owners)}",
                                         witness={"refined": k, "classes": sorted(owners)})
        merge.setdefault(owners.pop(), []).append(k)

    for c, orbit in enumerate(parent.orbits):
        parts = merge.get(c, [])
        covered = sorted(x for k in parts for x in refined.orbits[k])
        if covered != sorted(orbit) or len(parts) > 2:
            raise SchemeConsistencyError(f"class {c} is not a union of at most two refined classes",
                                         witness={"class": c, "refined": parts})

    logger.info(f"Signed refinement of Z[i]/({ring.alpha}): {refined.d} classes over {parent.d}")
    return SignedRefinement(scheme=refined, merge_map={c: tuple(merge[c]) for c in sorted(merge)})
