"""Hilbert series and polynomials read off free resolutions.

A resolution over a complete intersection ``Y`` in ``P^N`` gives the
Hilbert series numerator ``prod(1 - t^d) * sum_i (-1)^i sum_j t^(-a_ij)``;
dividing exactly by powers of ``(1 - t)`` exposes the dimension, degree
and (for curves) the arithmetic genus.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cohomology import ext_binomial, hilbert_function_ci
from .core_model import CICY, CurveInvariants, FreeResolution
from .grr import OddProduct, serre_invariants


class NotACurve(ValueError):
    pass


@dataclass(frozen=True)
class HilbertNumerator:
    """Finitely supported Laurent polynomial in ``t`` as ``{exponent: coeff}``."""

    coefficients: tuple[tuple[int, int], ...]

    @classmethod
    def from_map(cls, coeffs) -> "HilbertNumerator":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    def as_map(self) -> dict[int, int]:
        return dict(self.coefficients)

    def __add__(self, other):
        out = defaultdict(int, self.as_map())
        for e, c in other.coefficients:
            out[e] += c
        return HilbertNumerator.from_map(out)

    def __mul__(self, other):
        out = defaultdict(int)
        for e1, c1 in self.coefficients:
            for e2, c2 in other.coefficients:
                out[e1 + e2] += c1 * c2
        return HilbertNumerator.from_map(out)

    def at_one(self) -> int:
        return sum(c for _, c in self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for e, c in self.coefficients:
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+") + " " + body)
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _poly(pairs) -> HilbertNumerator:
    out = defaultdict(int)
    for e, c in pairs:
        out[e] += c
    return HilbertNumerator.from_map(out)


ONE = _poly([(0, 1)])


def ambient_numerator(degrees) -> HilbertNumerator:
    num = ONE
    for d in degrees:
        num = num * _poly([(0, 1), (d, -1)])
    return num


def resolution_numerator(res: FreeResolution) -> HilbertNumerator:
    """Numerator of the Hilbert series of the resolved module."""
    alt = _poly([(-a, (-1) ** i) for i, term in enumerate(res.terms) for a in term])
    return ambient_numerator(res.ambient.degrees) * alt


def numerator_from_resolution(res: FreeResolution) -> HilbertNumerator:
    """Numerator of ``HS(O_C)`` for an ideal-sheaf resolution of ``C``."""
    if res.target_kind != "curve_ideal":
        raise ValueError("expected a resolution of a curve ideal sheaf")
    ideal = _poly([(-a, (-1) ** i) for i, term in enumerate(res.terms) for a in term])
    return ambient_numerator(res.ambient.degrees) * (ONE + _poly([(e, -c) for e, c in ideal.coefficients]))


def divide_by_one_minus_t(num: HilbertNumerator, times: int) -> Optional[HilbertNumerator]:
    """Exact quotient by ``(1 - t)^times``, or ``None`` when it does not divide."""
    cur = num.as_map()
    for _ in range(times):
        if not cur:
            return HilbertNumerator(())
        lo, hi = min(cur), max(cur)
        out, run = {}, 0
        for e in range(lo, hi + 1):
            run += cur.get(e, 0)
            if run:
                out[e] = run
        if run != 0:
            return None
        cur = out
    return HilbertNumerator.from_map(cur)


@dataclass(frozen=True)
class HilbertPolynomial:
    coefficients: tuple[Fraction, ...]

    def __call__(self, n: int) -> Fraction:
        return sum(c * n**i for i, c in enumerate(self.coefficients))

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coefficients) if c]
        return nz[-1] if nz else -1

    def __add__(self, other):
        m = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (m - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (m - len(other.coefficients))
        return HilbertPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __str__(self):
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c:
                parts.append(f"({c})" + ("" if i == 0 else "n" if i == 1 else f"n^{i}"))
        return " + ".join(parts) or "0"


def _binomial_poly(shift: int, dim: int) -> list[Fraction]:
    """Coefficients in ``n`` of ``C(n + shift, dim)``."""
    poly = [Fraction(1)]
    for i in range(dim):
        # multiply by (n + shift - i)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j] += c * (shift - i)
            nxt[j + 1] += c
        poly = nxt
    fact = 1
    for i in range(2, dim + 1):
        fact *= i
    return [c / fact for c in poly]


def hilbert_polynomial(N: int, num: HilbertNumerator, dim: int = 1) -> HilbertPolynomial:
    """Hilbert polynomial of a ``dim``-dimensional sheaf on ``P^N`` with numerator ``num``."""
    q = divide_by_one_minus_t(num, N - dim)
    if q is None:
        raise NotACurve(f"numerator {num} is not divisible by (1-t)^{N - dim}")
    coeffs = [Fraction(0)] * (dim + 1)
    for e, c in q.coefficients:
        for i, b in enumerate(_binomial_poly(dim - e, dim)):
            coeffs[i] += c * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HilbertPolynomial(tuple(coeffs))


def curve_hilbert_polynomial(res: FreeResolution) -> HilbertPolynomial:
    return hilbert_polynomial(res.ambient.ambient_dim, numerator_from_resolution(res), 1)


def curve_invariants_from_resolution(res: FreeResolution) -> CurveInvariants:
    P = curve_hilbert_polynomial(res)
    if P.degree != 1:
        raise NotACurve(f"Hilbert polynomial {P} is not linear")
    deg, const = P.coefficients[1], P.coefficients[0]
    if deg.denominator != 1 or const.denominator != 1 or deg < 1:
        raise NotACurve(f"Hilbert polynomial {P} has no curve reading")
    return CurveInvariants(degree=int(deg), genus=int(1 - const))


def series_hilbert_function(res: FreeResolution, n: int) -> int:
    """Coefficient of ``t^n`` in ``HS(O_C)``, expanded from the numerator."""
    N = res.ambient.ambient_dim
    total = 0
    for e, c in numerator_from_resolution(res).coefficients:
        if n - e >= 0:
            total += c * ext_binomial(n - e + N, N)
    return total


def resolution_hilbert_function(res: FreeResolution, n: int) -> int:
    """``h^0(O_Y(n)) - h^0(I_C(n))`` with the ideal's sections summed term by term.

    Independent of the series expansion: each free term contributes its
    own section count on ``Y``.  Valid for ACM curves, where the section
    sequence of the resolution stays exact.
    """
    Y = res.ambient
    ideal = sum((-1) ** i * hilbert_function_ci(Y, n + a)
                for i, term in enumerate(res.terms) for a in term)
    return hilbert_function_ci(Y, n) - ideal


def sheaf_rank_on_section(res: FreeResolution, d: int, dim: int = 3) -> Fraction:
    """Rank of a sheaf resolved over ``Y`` and supported on a degree-``d`` section.

    The leading Hilbert coefficient is ``rank * deg(Y) * d / dim!``.
    """
    P = hilbert_polynomial(res.ambient.ambient_dim, resolution_numerator(res), dim)
    lead = P.coefficients[dim] if len(P.coefficients) > dim else Fraction(0)
    fact = 1
    for i in range(2, dim + 1):
        fact *= i
    return lead * fact / (res.ambient.degree * d)


@dataclass(frozen=True)
class SerreReport:
    consistent: bool
    computed: Optional[CurveInvariants]
    expected: Optional[CurveInvariants]
    reason: str = ""

    def __bool__(self):
        return self.consistent


def check_serre_consistency(res: FreeResolution, X: Optional[CICY], c1: int, c2: int) -> SerreReport:
    try:
        computed = curve_invariants_from_resolution(res)
    except NotACurve as exc:
        return SerreReport(False, None, None, str(exc))
    try:
        expected = serre_invariants(c1, c2)
    except OddProduct as exc:
        return SerreReport(False, computed, None, str(exc))
    if computed != expected:
        return SerreReport(False, computed, expected,
                           f"resolution gives (deg {computed.degree}, g {computed.genus}), "
                           f"class ({c1}, {c2}) needs (deg {expected.degree}, g {expected.genus})")
    return SerreReport(True, computed, expected)
