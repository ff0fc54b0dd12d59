"""Chern-class arithmetic for rank 2 bundles on CICY threefolds.

All formulas are evaluated in exact rationals and converted to integers
only when the denominators clear; a non-integral Euler characteristic is
an error, never a rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import kernels
from .cohomology import UNDETERMINED, hilbert_function_ci
from .core_model import CATALOG, CICY, CurveInvariants, serre_dual_twist


class NonIntegralChi(ArithmeticError):
    pass


class OddProduct(ValueError):
    """``c1 * c2`` is odd, so no subcanonical curve has these invariants."""


class InconsistentAnchor(ValueError):
    pass


class NoMatch(LookupError):
    pass


class AmbiguousMatch(LookupError):
    def __init__(self, matches):
        self.matches = list(matches)
        super().__init__(f"{len(self.matches)} Chern classes fit the profile: {self.matches}")


class InsufficientSamples(ValueError):
    pass


@dataclass(frozen=True)
class TangentChernData:
    cicy: CICY
    d2_in_lines: int


@dataclass(frozen=True)
class ChiProfile:
    samples: tuple[tuple[int, int], ...]

    def __post_init__(self):
        samples = tuple((int(n), int(v)) for n, v in self.samples)
        if len({n for n, _ in samples}) != len(samples):
            raise ValueError("profile twists must be distinct")
        object.__setattr__(self, "samples", samples)

    @property
    def twists(self):
        return [n for n, _ in self.samples]

    @property
    def values(self):
        return [v for _, v in self.samples]


def tangent_linear_coefficient(X: CICY) -> int:
    """``c2(T_X) . h`` in line units, i.e. ``12(k + 4) - 2r``."""
    return 12 * (X.k + 4) - 2 * X.r


def tangent_d2(X: CICY) -> TangentChernData:
    d2 = tangent_linear_coefficient(X)
    stored = CATALOG[X.degrees][1]
    # d2 = stored * h^2 with h^2 = r lines
    if d2 != stored * X.r:
        raise AssertionError(f"{X.name}: 12(k+4)-2r = {d2} but stored d2 gives {stored * X.r}")
    return TangentChernData(X, d2)


def twist_chern(c1: int, c2: int, n: int, r: int) -> tuple[int, int]:
    return c1 + 2 * n, c2 + r * n * c1 + r * n * n


def grr_chi_exact(X: CICY, c1: int, c2) -> Fraction:
    """Riemann-Roch polynomial as an exact rational (no integrality check)."""
    c1 = Fraction(c1)
    return (Fraction(X.r, 6) * c1**3 - c1 * Fraction(c2) / 2
            + c1 * tangent_linear_coefficient(X) / 12)


def grr_chi(X: CICY, c1: int, c2: int) -> int:
    chi = grr_chi_exact(X, c1, c2)
    if chi.denominator != 1:
        raise NonIntegralChi(f"chi = {chi} on {X.name} for c1={c1}, c2={c2}")
    return int(chi)


def chi_twisted(X: CICY, c1: int, c2: int, n: int) -> int:
    return grr_chi(X, *twist_chern(c1, c2, n, X.r))


def solve_c2(X: CICY, c1: int, n: int, chi_target: int) -> Optional[int]:
    """The ``c2`` with ``chi(E(n)) = chi_target``, or ``None`` if not integral.

    The twisted Euler characteristic is affine in ``c2``; two exact
    evaluations of the Riemann-Roch polynomial recover the line.
    """
    f0 = grr_chi_exact(X, *twist_chern(c1, 0, n, X.r))
    f1 = grr_chi_exact(X, *twist_chern(c1, 1, n, X.r))
    slope = f1 - f0
    if slope == 0:
        return None
    c2 = (Fraction(chi_target) - f0) / slope
    if c2.denominator != 1:
        return None
    return int(c2)


def serre_invariants(c1: int, c2: int) -> CurveInvariants:
    if (c1 * c2) % 2:
        raise OddProduct(f"c1*c2 = {c1 * c2} is odd")
    return CurveInvariants(degree=c2, genus=c1 * c2 // 2 + 1)


def acm_h0(X: CICY, c1: int, c2: int, n: int,
           anchors: Optional[Mapping[int, int]] = None, normalized: bool = True):
    """``h^0(E(n))`` for a normalized rank 2 ACM bundle, or ``UNDETERMINED``.

    Uses ``h^0(n) - h^0(-c1 - n) = chi(E(n))``, which holds because the
    intermediate cohomology vanishes and ``h^3(E(n)) = h^0(E(-c1 - n))``.
    Normalization gives ``h^0(m) = 0`` for ``m < 0``; for ``c1 <= 0`` the
    section cutting out the curve gives ``h^0(0) = 1`` unless overridden.
    """
    known = dict(anchors or {})
    for m, v in known.items():
        if v < 0:
            raise InconsistentAnchor(f"anchor h0({m}) = {v} is negative")
        if normalized and m < 0 and v != 0:
            raise InconsistentAnchor(f"normalized bundle has h0({m}) = 0, anchor says {v}")
    if normalized and c1 <= 0:
        known.setdefault(0, 1)

    def lookup(m):
        if m in known:
            return known[m]
        if normalized and m < 0:
            return 0
        return None

    m = serre_dual_twist(c1, n)
    chi = chi_twisted(X, c1, c2, n)
    here, there = lookup(n), lookup(m)
    if m == n:
        if chi != 0:
            raise InconsistentAnchor(f"self-dual twist {n} needs chi = 0, got {chi}")
        return here if here is not None else UNDETERMINED
    if there is not None:
        value = chi + there
        if value < 0:
            raise InconsistentAnchor(f"h0({n}) would be {value}")
        if here is not None and here != value:
            raise InconsistentAnchor(f"anchor h0({n}) = {here} but recursion gives {value}")
        return value
    if here is not None:
        if here - chi < 0:
            raise InconsistentAnchor(f"h0({m}) would be {here - chi}")
        return here
    return UNDETERMINED


def curve_ideal_h0(X: CICY, c1: int, c2: int, n: int, anchors=None):
    """``h^0(I_C(n))`` from ``0 -> O_X -> E -> I_C(c1) -> 0`` twisted by ``n - c1``."""
    h = acm_h0(X, c1, c2, n - c1, anchors)
    if h is UNDETERMINED:
        return UNDETERMINED
    return h - hilbert_function_ci(X.base, n - c1)


def chi_profile(X: CICY, c1: int, c2: int, twists: Sequence[int] = (0, 1, 2)) -> ChiProfile:
    return ChiProfile(tuple((n, chi_twisted(X, c1, c2, n)) for n in twists))


def infer_chern(X: CICY, profile: ChiProfile, c1_range=(-6, 6), c2_range=(0, 100),
                backend=None) -> tuple[int, int]:
    """Unique ``(c1, c2)`` in the box whose Euler characteristics match ``profile``."""
    if len(profile.samples) < 3:
        raise InsufficientSamples(f"need at least 3 samples, got {len(profile.samples)}")
    matches = kernels.scan_chern(X.r, X.k, c1_range, c2_range,
                                 profile.twists, profile.values, backend=backend)
    if not matches:
        raise NoMatch(f"no (c1, c2) in {c1_range} x {c2_range} fits {profile.samples}")
    if len(matches) > 1:
        raise AmbiguousMatch(sorted(matches))
    return matches[0]
