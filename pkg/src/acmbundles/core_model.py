"""Data model: complete intersections, graded free modules, resolutions.

Everything here is immutable; twists are signed integers with ``O(a)``
meaning the degree-``a`` twist.  Multisets of twists are kept sorted
descending so equality and display are deterministic.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable


class NotInCatalog(ValueError):
    """The degree list is not one of the five CICY threefold types."""


class NotCalabiYau(NotInCatalog):
    """The complete intersection is not a Calabi-Yau threefold."""


class ResolutionFormatError(ValueError):
    """A resolution document could not be parsed."""


# (degrees) -> (ambient dimension, stored tangent d2 coefficient)
CATALOG = {
    (5,): (4, 10),
    (2, 4): (5, 7),
    (3, 3): (5, 6),
    (2, 2, 3): (6, 5),
    (2, 2, 2, 2): (7, 4),
}

TARGET_KINDS = ("curve_ideal", "bundle", "other")


@dataclass(frozen=True)
class CompleteIntersection:
    ambient_dim: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        degs = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 for d in degs):
            raise ValueError(f"hypersurface degrees must be >= 1, got {degs}")
        if len(degs) > self.ambient_dim:
            raise ValueError("more hypersurfaces than ambient dimension")
        object.__setattr__(self, "degrees", degs)

    @property
    def dimension(self) -> int:
        return self.ambient_dim - len(self.degrees)

    @property
    def degree(self) -> int:
        return prod(self.degrees)

    @property
    def canonical_twist(self) -> int:
        """``a`` with ``omega = O(a)`` (adjunction)."""
        return sum(self.degrees) - self.ambient_dim - 1

    def drop(self, d: int) -> "CompleteIntersection":
        """The complete intersection with one copy of degree ``d`` removed."""
        degs = list(self.degrees)
        try:
            degs.remove(d)
        except ValueError:
            raise ValueError(f"degree {d} does not occur in {self.degrees}") from None
        return CompleteIntersection(self.ambient_dim, tuple(degs))

    def cut(self, d: int) -> "CompleteIntersection":
        return CompleteIntersection(self.ambient_dim, self.degrees + (d,))

    def __str__(self):
        if not self.degrees:
            return f"P^{self.ambient_dim}"
        return f"({','.join(map(str, self.degrees))}) in P^{self.ambient_dim}"


@dataclass(frozen=True)
class CICY:
    base: CompleteIntersection
    r: int
    k: int

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.base.degrees

    @property
    def ambient_dim(self) -> int:
        return self.base.ambient_dim

    @property
    def name(self) -> str:
        return f"X{self.r}"

    def fourfolds(self) -> list[tuple[CompleteIntersection, int]]:
        """Distinct ``(Y, d)`` with ``X`` the degree-``d`` section of ``Y``."""
        out = []
        for d in sorted(set(self.degrees)):
            out.append((self.base.drop(d), d))
        return out

    def __str__(self):
        return f"{self.name} of type ({','.join(map(str, self.degrees))}) in P^{self.ambient_dim}"


def make_cicy(degrees: Iterable[int]) -> CICY:
    degs = tuple(sorted(int(d) for d in degrees))
    if not degs:
        raise ValueError("degree list must be nonempty")
    n = sum(degs) - 1
    if n - len(degs) != 3:
        raise NotCalabiYau(
            f"type {degs} needs P^{n} for trivial canonical class, "
            f"giving dimension {n - len(degs)} != 3"
        )
    if degs not in CATALOG:
        raise NotInCatalog(f"type {degs} is not a CICY threefold type")
    dim, _ = CATALOG[degs]
    r, k = prod(degs), len(degs)
    # derived fields cross-checked against the stored catalog
    assert dim == n and k == r // 4, degs
    return CICY(CompleteIntersection(n, degs), r, k)


def catalog() -> list[CICY]:
    return [make_cicy(d) for d in CATALOG]


def parse_degrees(text: str) -> list[int]:
    """``"2,4"`` -> ``[2, 4]``."""
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise ValueError(f"malformed integer list: {text!r}") from None


@dataclass(frozen=True)
class BundleClass:
    c1: int
    c2: int
    rank: int = 2
    normalized: bool = True

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    def in_classification_range(self) -> bool:
        return self.rank == 2 and self.normalized and -2 <= self.c1 <= 4


@dataclass(frozen=True)
class GradedFreeModule:
    """``⊕ O(a_j)`` stored as the multiset of twists ``a_j``."""

    twists: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(sorted((int(a) for a in self.twists), reverse=True)))

    @classmethod
    def of(cls, *parts: tuple[int, int] | int) -> "GradedFreeModule":
        """Build from ``(twist, multiplicity)`` pairs or bare twists."""
        out = []
        for p in parts:
            if isinstance(p, tuple):
                a, m = p
                out.extend([a] * m)
            else:
                out.append(p)
        return cls(tuple(out))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def counts(self) -> Counter:
        return Counter(self.twists)

    def twist(self, n: int) -> "GradedFreeModule":
        return GradedFreeModule(tuple(a + n for a in self.twists))

    def dual(self, twist_by: int = 0) -> "GradedFreeModule":
        return GradedFreeModule(tuple(-a + twist_by for a in self.twists))

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.twists + other.twists)

    def __iter__(self):
        return iter(self.twists)

    def __str__(self):
        if not self.twists:
            return "0"
        parts = []
        for a, m in sorted(self.counts().items(), reverse=True):
            parts.append(("O" if a == 0 else f"O({a})") + (f"^{m}" if m > 1 else ""))
        return " + ".join(parts)


def twist_module(m: GradedFreeModule, n: int) -> GradedFreeModule:
    return m.twist(n)


def dual_module(m: GradedFreeModule, twist_by: int) -> GradedFreeModule:
    return m.dual(twist_by)


def serre_dual_twist(c1: int, n: int) -> int:
    """Twist ``m`` with ``h^3(E(n)) = h^0(E(m))`` for rank 2 on a Calabi-Yau."""
    return -c1 - n


@dataclass(frozen=True)
class FreeResolution:
    """``... -> M_1 -> M_0 -> target -> 0`` over ``ambient``; ``terms[0]`` is ``M_0``."""

    ambient: CompleteIntersection
    terms: tuple[GradedFreeModule, ...]
    target_kind: str = "other"

    def __post_init__(self):
        terms = tuple(t if isinstance(t, GradedFreeModule) else GradedFreeModule(tuple(t))
                      for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2:
            raise ValueError("a resolution needs at least two terms")
        if self.target_kind not in TARGET_KINDS:
            raise ValueError(f"unknown target kind {self.target_kind!r}")
        alt = self.alternating_rank()
        # ideal sheaves have rank 1; bundles on a hypersurface section are torsion on Y
        if self.target_kind == "curve_ideal" and alt != 1:
            raise ValueError(f"ideal-sheaf resolution has alternating rank {alt}, expected 1")
        if self.target_kind == "bundle" and alt != 0:
            raise ValueError(f"bundle resolution has alternating rank {alt}, expected 0")

    def alternating_rank(self) -> int:
        return sum((-1) ** i * t.rank for i, t in enumerate(self.terms))

    def twist_sets(self) -> list[list[int]]:
        return [list(t.twists) for t in self.terms]

    def arrow_string(self) -> str:
        target = {"curve_ideal": "I_C", "bundle": "E", "other": "M"}[self.target_kind]
        pieces = ["0"] + [str(t) for t in reversed(self.terms)] + [target, "0"]
        return " -> ".join(pieces)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "ambient": {"dim": self.ambient.ambient_dim, "degrees": list(self.ambient.degrees)},
            "terms": self.twist_sets(),
            "target": self.target_kind,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> "FreeResolution":
        try:
            amb = doc["ambient"]
            ambient = CompleteIntersection(int(amb["dim"]), tuple(int(d) for d in amb.get("degrees", [])))
            terms = tuple(GradedFreeModule(tuple(int(a) for a in t)) for t in doc["terms"])
            target = doc.get("target", "other")
        except (KeyError, TypeError, ValueError) as exc:
            raise ResolutionFormatError(f"malformed resolution document: {exc}") from exc
        try:
            return cls(ambient, terms, target)
        except ValueError as exc:
            raise ResolutionFormatError(str(exc)) from exc

    @classmethod
    def loads(cls, text: str) -> "FreeResolution":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ResolutionFormatError(f"not a JSON document: {exc}") from exc
        if not isinstance(doc, dict):
            raise ResolutionFormatError("resolution document must be an object")
        return cls.from_dict(doc)


@dataclass(frozen=True)
class CurveInvariants:
    degree: int
    genus: int
