"""Exact classification machinery for generic singularities of nilpotent
orbit closures in the exceptional simple Lie algebras."""

from .rootsys import build_root_system, dominantize, detect_cartan_type
from .liealg import algebra, LieElement, SL2Triple

__all__ = [
    "build_root_system", "dominantize", "detect_cartan_type",
    "algebra", "LieElement", "SL2Triple",
]
