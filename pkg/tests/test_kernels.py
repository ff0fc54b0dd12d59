import math

import pytest
from hypothesis import given, settings, strategies as st

from acmbundles import _pykernels, grr, kernels
from acmbundles.core_model import catalog

needs_compiled = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")


def test_chi12_matches_exact():
    for X in catalog():
        for c1 in range(-4, 5):
            for c2 in range(0, 30):
                assert _pykernels.chi12(X.r, X.k, c1, c2) == 12 * grr.grr_chi_exact(X, c1, c2)


@needs_compiled
def test_compiled_chi12_matches():
    for X in catalog():
        for c1 in range(-4, 5):
            for c2 in range(0, 30):
                assert kernels.compiled_backend.chi12(X.r, X.k, c1, c2) == _pykernels.chi12(X.r, X.k, c1, c2)


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(st.sampled_from(catalog()), st.integers(-5, 5), st.integers(0, 60),
       st.lists(st.integers(-4, 4), min_size=1, max_size=5, unique=True),
       st.integers(-2, 2))
def test_backends_agree(X, c1, c2, twists, jitter):
    # floor keeps targets integral even where chi itself is not
    targets = [math.floor(grr.grr_chi_exact(X, *grr.twist_chern(c1, c2, n, X.r))) for n in twists]
    targets[0] += jitter
    py = kernels.scan_chern(X.r, X.k, (-6, 6), (0, 80), twists, targets, backend="python")
    cy = kernels.scan_chern(X.r, X.k, (-6, 6), (0, 80), twists, targets, backend="cython")
    assert py == cy


def test_python_backend_forced():
    got = kernels.scan_chern(5, 1, (-3, 3), (0, 20), [0, 1, 2], [4, 18, 52], backend="python")
    assert got == [(2, 11)]


def test_large_inputs_fall_back():
    X = catalog()[0]
    targets = [grr.chi_twisted(X, 0, 10**6, n) for n in (0, 1, 2)]
    got = kernels.scan_chern(X.r, X.k, (0, 0), (10**6 - 1, 10**6 + 1), [0, 1, 2], targets)
    assert got == [(0, 10**6)]


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
