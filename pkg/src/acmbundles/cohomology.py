"""Line-bundle cohomology on projective space and complete intersections."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .core_model import CompleteIntersection


class _Undetermined:
    """Marker for a cohomology dimension the available data cannot fix."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDETERMINED"

    def __bool__(self):
        return False


UNDETERMINED = _Undetermined()


@dataclass(frozen=True)
class CohomologyTable:
    variety: CompleteIntersection
    twist: int
    dims: tuple

    def __post_init__(self):
        if len(self.dims) != self.variety.dimension + 1:
            raise ValueError("need one entry per cohomological degree")
        for h in self.dims:
            if h is not UNDETERMINED and h < 0:
                raise ValueError(f"negative dimension {h}")

    def __getitem__(self, i):
        return self.dims[i]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h for i, h in enumerate(self.dims))


def ext_binomial(a: int, b: int) -> int:
    """Binomial coefficient ``C(a, b)`` for any integer ``a`` and ``b >= 0``."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def _sections_pn(N: int, n: int) -> int:
    return ext_binomial(n + N, N) if n >= 0 else 0


def pn_line_cohomology(N: int, n: int) -> CohomologyTable:
    dims = [0] * (N + 1)
    dims[0] = _sections_pn(N, n)
    if n <= -N - 1:
        dims[N] = ext_binomial(-n - 1, N)
    return CohomologyTable(CompleteIntersection(N), n, tuple(dims))


def _subset_sums(degrees):
    for size in range(len(degrees) + 1):
        for S in combinations(degrees, size):
            yield (-1) ** size, sum(S)


def hilbert_function_ci(X: CompleteIntersection, n: int) -> int:
    """``h^0(O_X(n))``: coefficient of ``t^n`` in ``prod(1 - t^d) / (1 - t)^(N+1)``."""
    if n < 0:
        return 0
    N = X.ambient_dim
    # each inclusion-exclusion term is a section count, so it truncates at 0
    return sum(sign * _sections_pn(N, n - s) for sign, s in _subset_sums(X.degrees))


def chi_line_bundle(X: CompleteIntersection, n: int) -> int:
    """Euler characteristic of ``O_X(n)``; polynomial in ``n``, no truncation."""
    N = X.ambient_dim
    return sum(sign * ext_binomial(n - s + N, N) for sign, s in _subset_sums(X.degrees))


def ci_structure_cohomology(X: CompleteIntersection, n: int) -> CohomologyTable:
    dims = [0] * (X.dimension + 1)
    dims[0] = hilbert_function_ci(X, n)
    # middle cohomology vanishes (complete intersections are ACM); top by Serre duality
    if X.dimension > 0:
        dims[-1] = hilbert_function_ci(X, X.canonical_twist - n)
    return CohomologyTable(X, n, tuple(dims))


def h0_module(X: CompleteIntersection, twists, n: int = 0) -> int:
    """``h^0`` of ``⊕ O_X(a + n)``."""
    return sum(hilbert_function_ci(X, a + n) for a in twists)


def chi_module(X: CompleteIntersection, twists, n: int = 0) -> int:
    return sum(chi_line_bundle(X, a + n) for a in twists)
