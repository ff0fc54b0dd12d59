"""Exact numerics for rank 2 ACM bundles on complete intersection Calabi-Yau threefolds."""
from .core_model import (
    CICY,
    BundleClass,
    CompleteIntersection,
    FreeResolution,
    GradedFreeModule,
    NotCalabiYau,
    NotInCatalog,
    catalog,
    make_cicy,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "CICY",
    "BundleClass",
    "CompleteIntersection",
    "FreeResolution",
    "GradedFreeModule",
    "NotCalabiYau",
    "NotInCatalog",
    "catalog",
    "make_cicy",
]
