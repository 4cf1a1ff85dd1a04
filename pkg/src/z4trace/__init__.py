"""Trace codes over Z4 built from Boolean functions and skew sets."""

from .gf2m import BinaryField
from .gr4m import GaloisRing, TwoAdic, graeffe_lift

__all__ = ["BinaryField", "GaloisRing", "TwoAdic", "graeffe_lift"]
__version__ = "0.1.0"
