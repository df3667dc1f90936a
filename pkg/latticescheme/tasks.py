import math
import time
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional

import numpy as np

from .config import get_settings
from .dependencies import get_prometheus_metrics
from .exceptions import PreconditionError
from .models.schemas import SweepReport, SweepRow
from .core.gaussian import GaussInt, canonical_key, is_gaussian_prime, norm
from .core.quotient_ring import build_ring
from .core.scheme import (block_circulant_form, build_scheme, is_primitive_bruteforce,
                          is_primitive_theorem, is_pseudocyclic, signed_refinement, verify_axioms)
from .core.tiling import is_clean_boundary, is_clean_odd
from .core.coding import weight_table

logger = logging.getLogger(__name__)

CHECKS = ("axioms", "primitivity", "clean", "circulant", "mannheim", "pseudocyclic")


def sweep_alphas(norm_bound: int) -> List[GaussInt]:
    """One α per associate class with 2 <= norm(α) <= norm_bound, in (norm, re, im) order"""
    alphas = []
    radius = math.isqrt(norm_bound)
    for a in range(1, radius + 1):
        for b in range(0, radius + 1):
            z = GaussInt(a, b)
            if 2 <= norm(z) <= norm_bound:
                alphas.append(z)
    return sorted(alphas, key=canonical_key)


def _row(check: str, alpha: GaussInt, passed: bool, detail: Dict, failed: str = "fail") -> SweepRow:
    return SweepRow(check=check, alpha=str(alpha), norm=norm(alpha),
                    status="pass" if passed else failed, detail=detail)


def _check_axioms(alpha, ring, scheme):
    report = verify_axioms(scheme)
    failed = [r.name for r in report.results if not r.passed]
    return _row("axioms", alpha, report.passed, {"failed": failed} if failed else {})


def _check_primitivity(alpha, ring, scheme):
    brute = is_primitive_bruteforce(scheme)
    theorem = is_primitive_theorem(alpha)
    detail = {"bruteforce": brute.primitive, "theorem": theorem}
    if brute.witness is not None:
        detail["witness"] = sorted(brute.witness)
    return _row("primitivity", alpha, brute.primitive == theorem, detail, failed="mismatch")


def _check_clean(alpha, ring, scheme):
    boundary, witness = is_clean_boundary(alpha)
    odd = is_clean_odd(alpha)
    detail = {"boundary": boundary, "odd": odd}
    if witness is not None:
        detail["witness"] = str(witness)
    return _row("clean", alpha, boundary == odd, detail, failed="mismatch")


def _check_circulant(alpha, ring, scheme):
    bad = [i for i in range(scheme.d + 1)
           if not np.array_equal(block_circulant_form(scheme, i).expand(), scheme.adjacency(i))]
    return _row("circulant", alpha, not bad, {"classes": bad} if bad else {})


def _check_mannheim(alpha, ring, scheme):
    weights = weight_table(ring)
    bad = [k for k, orbit in enumerate(scheme.orbits) if len({weights[x] for x in orbit}) != 1]
    zero_weight = [x for x in range(ring.order) if weights[x] == 0]
    passed = not bad and zero_weight == [0]
    return _row("mannheim", alpha, passed, {"classes": bad} if bad else {})


def _check_pseudocyclic(alpha, ring, scheme):
    report = is_pseudocyclic(scheme)
    refinement = signed_refinement(ring)
    detail = {"pseudocyclic": report.pseudocyclic, "sums": sorted(set(report.sums)),
              "merge_sizes": sorted({len(v) for v in refinement.merge_map.values()})}
    passed = all(k == 4 for k in scheme.valencies[1:]) and max(detail["merge_sizes"]) <= 2
    return _row("pseudocyclic", alpha, passed, detail)


_RUNNERS = {
    "axioms": _check_axioms,
    "primitivity": _check_primitivity,
    "clean": _check_clean,
    "circulant": _check_circulant,
    "mannheim": _check_mannheim,
    "pseudocyclic": _check_pseudocyclic,
}


def sweep_alpha(alpha: GaussInt, checks: Iterable[str]) -> List[SweepRow]:
    """Run the selected checks on one α"""
    ring = build_ring(alpha)
    scheme = build_scheme(ring)
    rows = []
    for check in checks:
        # valency 4 holds for odd Gaussian primes only
        if check == "pseudocyclic" and not (is_gaussian_prime(alpha) and norm(alpha) % 2):
            continue
        rows.append(_RUNNERS[check](alpha, ring, scheme))
    return rows


def run_sweep(norm_bound: int, checks: Optional[Iterable[str]] = None,
              workers: Optional[int] = None) -> SweepReport:
    """Run property checks over every α up to associates; rows keep (norm, re, im) order"""
    settings = get_settings()
    if norm_bound > settings.sweep_norm_cap:
        raise PreconditionError(f"norm bound {norm_bound} exceeds the sweep cap {settings.sweep_norm_cap}")
    checks = list(checks) if checks else list(CHECKS)
    unknown = [c for c in checks if c not in _RUNNERS]
    if unknown:
        raise PreconditionError(f"unknown sweep checks {unknown}; choose from {', '.join(CHECKS)}")
    workers = workers or settings.sweep_workers

    alphas = sweep_alphas(norm_bound)
    logger.info(f"Sweeping {len(alphas)} values of alpha up to norm {norm_bound}: {checks}")
    start = time.perf_counter()

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_alpha = list(pool.map(sweep_alpha, alphas, [checks] * len(alphas)))
    else:
        per_alpha = [sweep_alpha(alpha, checks) for alpha in alphas]

    rows = [row for block in per_alpha for row in block]
    _, _, sweep_rows = get_prometheus_metrics()
    for row in rows:
        sweep_rows.labels(check=row.check, status=row.status).inc()

    report = SweepReport(norm_bound=norm_bound, checks=checks, rows=rows)
    failures = report.failures
    if failures:
        logger.warning(f"Sweep found {len(failures)} failing rows")
    logger.info(f"Sweep finished in {time.perf_counter() - start:.2f}s")
    return report
