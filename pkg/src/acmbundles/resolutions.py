"""Degree shapes of Gorenstein curve resolutions and the bundles they carry.

Only twists are modelled.  A codimension-3 arithmetically Gorenstein curve
with ``2b + 1`` generators of degrees ``r_j`` in a fourfold ``Y`` has

    0 -> O(-c) -> ⊕ O(r_j - c) -> ⊕ O(-r_j) -> I_C -> 0,   c = sum(r_j) / b,

and when ``X`` is the degree-``d`` section of ``Y`` with ``c1(E) = c - d``
the rank 2 bundle has the two-term resolution

    0 -> O(c - 2d) ⊕ ⊕ O(r_j - d) -> O ⊕ ⊕ O(c - d - r_j) -> E -> 0.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from . import grr
from .cohomology import chi_module, h0_module
from .core_model import (
    CICY,
    CompleteIntersection,
    FreeResolution,
    GradedFreeModule,
    dual_module,
)

P4 = CompleteIntersection(4)


class GeneratorError(ValueError):
    pass


class EvenGeneratorCount(GeneratorError):
    pass


class NonIntegralSocle(GeneratorError):
    pass


class InconsistentDegrees(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AGCurveData:
    gen_degrees: tuple[int, ...]
    b: int
    socle: int

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "AGCurveData":
        gens = tuple(sorted((int(g) for g in gens), reverse=True))
        if any(g < 1 for g in gens):
            raise GeneratorError(f"generator degrees must be positive: {gens}")
        if len(gens) % 2 == 0:
            raise EvenGeneratorCount(f"{len(gens)} generators; a Gorenstein ideal needs an odd number")
        if len(gens) < 3:
            raise GeneratorError("need at least 3 generators")
        b = (len(gens) - 1) // 2
        total = sum(gens)
        if total % b:
            raise NonIntegralSocle(f"sum of degrees {total} is not divisible by b = {b}")
        return cls(gens, b, total // b)


@dataclass(frozen=True)
class DegreeMatrix:
    entries: tuple[tuple[int, ...], ...]

    def display(self, clamp: bool = True) -> str:
        rows = [[max(e, 0) if clamp else e for e in row] for row in self.entries]
        width = max((len(str(e)) for row in rows for e in row), default=1)
        return "\n".join("[ " + " ".join(str(e).rjust(width) for e in row) + " ]" for row in rows)


class Minimality(enum.Enum):
    MINIMAL = "minimal"
    INDETERMINATE = "indeterminate"


def ag_curve_resolution(gens: Iterable[int], ambient: CompleteIntersection = P4) -> FreeResolution:
    data = AGCurveData.from_generators(gens)
    c = data.socle
    P0 = GradedFreeModule(tuple(-r for r in data.gen_degrees))
    P1 = dual_module(P0, -c)
    P2 = GradedFreeModule((-c,))
    return FreeResolution(ambient, (P0, P1, P2), "curve_ideal")


def bundle_resolution(gens: Iterable[int], d: int,
                      ambient: CompleteIntersection = P4) -> tuple[FreeResolution, int]:
    """Two-term resolution over ``Y`` of the bundle attached to the curve; returns ``(res, c1)``."""
    if d < 1:
        raise ValueError("hypersurface degree must be positive")
    data = AGCurveData.from_generators(gens)
    c = data.socle
    L0 = GradedFreeModule((0,) + tuple(c - d - r for r in data.gen_degrees))
    L1 = GradedFreeModule((c - 2 * d,) + tuple(r - d for r in data.gen_degrees))
    if L1 != dual_module(L0, c - 2 * d):
        raise AssertionError("bundle resolution lost its self-dual shape")
    return FreeResolution(ambient, (L0, L1), "bundle"), c - d


def theorem_applicable(gens: Iterable[int], d: int, c1: int) -> bool:
    """Whether the curve/bundle correspondence above covers this ``c1``."""
    return c1 == AGCurveData.from_generators(gens).socle - d


def curve_resolution_from_bundle_quintic(c1: int, gens: Iterable[int]) -> FreeResolution:
    """Curve resolution in ``P^4`` from a quintic bundle with ``L0 = O ⊕ ⊕ O(-r_i)``.

    The last term is ``O(-(c1 + 5))``; generators of the curve sit in
    degrees ``r_i + c1``.
    """
    gens = tuple(int(r) for r in gens)
    P0 = GradedFreeModule(tuple(-r - c1 for r in gens))
    P1 = GradedFreeModule(tuple(r - 5 for r in gens))
    P2 = GradedFreeModule((-(c1 + 5),))
    try:
        check = ag_curve_resolution([r + c1 for r in gens], P4)
    except GeneratorError as exc:
        raise InconsistentDegrees(f"curve generators {[r + c1 for r in gens]}: {exc}") from exc
    res = FreeResolution(P4, (P0, P1, P2), "curve_ideal")
    if check != res:
        raise InconsistentDegrees(
            f"socle {-check.terms[2].twists[0]} of the curve does not equal c1 + 5 = {c1 + 5}")
    return res


def curve_resolution_from_bundle_resolution(res: FreeResolution, c1: int) -> FreeResolution:
    """Same, reading ``r_i`` off ``L0`` after removing one ``O`` summand."""
    twists = list(res.terms[0].twists)
    if 0 not in twists:
        raise ShapeMismatch("L0 has no O summand")
    twists.remove(0)
    return curve_resolution_from_bundle_quintic(c1, [-a for a in twists])


def degree_matrix(data: AGCurveData | Iterable[int]) -> DegreeMatrix:
    if not isinstance(data, AGCurveData):
        data = AGCurveData.from_generators(data)
    rs = sorted(data.gen_degrees, reverse=True)
    c = data.socle
    return DegreeMatrix(tuple(tuple(c - ri - rj for rj in rs) for ri in rs))


def minimality_check(res: FreeResolution) -> Minimality:
    """Sufficient test: consecutive terms sharing no twist force a minimal map."""
    for a, b in zip(res.terms, res.terms[1:]):
        if set(a.twists) & set(b.twists):
            return Minimality.INDETERMINATE
    return Minimality.MINIMAL


# ---------------------------------------------------------------- restriction


@dataclass(frozen=True)
class FourTermSequence:
    """``0 -> E(-d) -> L1|X -> L0|X -> E -> 0``."""

    d: int
    l1: GradedFreeModule
    l0: GradedFreeModule

    def ranks(self) -> tuple[int, int, int, int]:
        return (2, self.l1.rank, self.l0.rank, 2)

    def __str__(self):
        return f"0 -> E({-self.d}) -> {self.l1} -> {self.l0} -> E -> 0"


@dataclass(frozen=True)
class RestrictionResult:
    four_term: FourTermSequence
    split_kernel: GradedFreeModule
    new_rank: int
    normalization_shift: Optional[int]
    inferred_chern: Optional[tuple[int, int]]
    bundle_chern: Optional[tuple[int, int]]
    note: str = ""


def self_dual_twist(res: FreeResolution) -> int:
    """The twist ``t`` with ``L1 = L0^dual(t)``; raises ``ShapeMismatch`` otherwise."""
    if len(res.terms) != 2:
        raise ShapeMismatch(f"expected a two-term resolution, got {len(res.terms)} terms")
    L0, L1 = res.terms
    if L0.rank != L1.rank or L0.rank == 0:
        raise ShapeMismatch("L0 and L1 must have equal positive rank")
    t = L1.twists[0] + L0.twists[-1]
    if dual_module(L0, t) != L1:
        raise ShapeMismatch(f"L1 = {L1} is not a twisted dual of L0 = {L0}")
    if 0 not in L0.twists:
        raise ShapeMismatch("L0 has no O summand")
    return t


class _RestrictedBundle:
    """Numerics of ``E`` on ``X`` read from its resolution over ``Y``."""

    def __init__(self, res: FreeResolution):
        self.res = res
        self.Y = res.ambient

    def h0(self, n: int) -> int:
        # Y is ACM, so H^0 of the resolution stays exact
        return h0_module(self.Y, self.res.terms[0], n) - h0_module(self.Y, self.res.terms[1], n)

    def chi(self, n: int) -> int:
        return chi_module(self.Y, self.res.terms[0], n) - chi_module(self.Y, self.res.terms[1], n)


def restrict_construction(res: FreeResolution, d: int, X: CICY,
                          shift_range=(-10, 10), c1_range=(-6, 6),
                          c2_range=(0, 100)) -> RestrictionResult:
    """Restrict a self-dual bundle resolution to ``X`` and identify the new bundle.

    The image ``G`` of ``L1|X -> L0|X`` fits in ``0 -> E(-d) -> L1|X -> G -> 0``
    and has rank ``rank L1 - 2``.  Since ``E`` is ACM its sections and Euler
    characteristics give those of ``G`` exactly; ``G = F(s)`` with ``F``
    normalized.
    """
    t = self_dual_twist(res)
    if tuple(sorted(res.ambient.degrees + (d,))) != X.degrees or res.ambient.ambient_dim != X.ambient_dim:
        raise ShapeMismatch(f"{X} is not the degree-{d} section of {res.ambient}")
    L0, L1 = res.terms
    E = _RestrictedBundle(res)
    four = FourTermSequence(d, L1, L0)
    new_rank = L1.rank - 2
    if new_rank < 1:
        raise ShapeMismatch("restricted kernel would have rank < 1")

    bundle_chern = None
    try:
        bundle_chern = grr.infer_chern(X, grr.ChiProfile(tuple((n, E.chi(n)) for n in range(4))),
                                       c1_range, c2_range)
    except LookupError:
        pass
    if bundle_chern is not None and bundle_chern[0] != t + d:
        raise ShapeMismatch(f"c1(E) = {bundle_chern[0]} disagrees with c - d = {t + d}")

    def g_h0(n):
        return h0_module(X.base, L1, n) - E.h0(n - d)

    def g_chi(n):
        return chi_module(X.base, L1, n) - E.chi(n - d)

    lo, hi = shift_range
    shift = None
    # s = b(G) = max{n : h0(G(-n)) != 0}, so F = G(-s) is normalized
    for s in range(hi, lo - 1, -1):
        if g_h0(-s) != 0:
            shift = s
            break

    inferred = None
    note = ""
    if new_rank == 2 and shift is not None:
        profile = grr.ChiProfile(tuple((n, g_chi(n - shift)) for n in range(4)))
        inferred = grr.infer_chern(X, profile, c1_range, c2_range)
    elif new_rank != 2:
        note = (f"F is either an indecomposable rank {new_rank} bundle or a direct sum "
                f"of a line bundle and an indecomposable rank {new_rank - 1} bundle")
    return RestrictionResult(four, L1, new_rank, shift, inferred, bundle_chern, note)


def restricted_chi_defect(res: FreeResolution, d: int, X: CICY, n: int) -> int:
    """Alternating Euler characteristic of the four-term sequence (zero when exact)."""
    E = _RestrictedBundle(res)
    L0, L1 = res.terms
    return E.chi(n - d) - chi_module(X.base, L1, n) + chi_module(X.base, L0, n) - E.chi(n)
