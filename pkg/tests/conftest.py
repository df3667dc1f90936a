import os

import numpy as np
import pytest

from latticescheme.core.gaussian import GaussInt
from latticescheme.core.quotient_ring import Ordering, build_ring
from latticescheme.core.scheme import AssociationScheme, build_scheme


def canonical_alphas(max_norm, min_norm=2):
    """One α per associate class, re > 0 and im >= 0"""
    out = []
    a = 1
    while a * a <= max_norm:
        b = 0
        while a * a + b * b <= max_norm:
            if a * a + b * b >= min_norm:
                out.append(GaussInt(a, b))
            b += 1
        a += 1
    return out


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in list(os.environ):
        if name.startswith('LATTICESCHEME_'):
            monkeypatch.delenv(name)


@pytest.fixture
def ring_3_2i():
    return build_ring(GaussInt(3, 2))


@pytest.fixture
def ring_2_2i():
    return build_ring(GaussInt(2, 2))


@pytest.fixture
def scheme_3_2i(ring_3_2i):
    return build_scheme(ring_3_2i, Ordering.GFP)


@pytest.fixture
def scheme_2_2i(ring_2_2i):
    return build_scheme(ring_2_2i)


@pytest.fixture
def corrupted_scheme(scheme_3_2i):
    """3+2i table with the classes of the pairs (0, 1) and (0, 4) swapped"""
    table = np.array(scheme_3_2i.relation_of)
    a, b = table[0, 1], table[0, 4]
    table[0, 1] = table[1, 0] = b
    table[0, 4] = table[4, 0] = a
    return AssociationScheme.from_table(table)


def in_lattice(alpha, re, im):
    """Elementwise test that re + im·i lies in αZ[i]"""
    n = alpha.re * alpha.re + alpha.im * alpha.im
    re, im = np.asarray(re), np.asarray(im)
    # (re + im·i)·conj(α) must be divisible by N(α)
    return ((re * alpha.re + im * alpha.im) % n == 0) & ((im * alpha.re - re * alpha.im) % n == 0)
