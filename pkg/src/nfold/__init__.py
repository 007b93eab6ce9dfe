"""Posetal iterated monoidal categories, their combinatorial models and n-fold operads."""
from .core import EMPTY, Structure, certify_structure, hom_exists, interchange_holds, with_bottom
from .registry import get_structure

__all__ = ["EMPTY", "Structure", "certify_structure", "get_structure", "hom_exists",
           "interchange_holds", "with_bottom"]
