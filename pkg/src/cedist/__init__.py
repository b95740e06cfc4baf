"""Convolutional entanglement distillation: stabilizer construction, encoders and simulation."""

from .laurent import D, ONE, ZERO, LaurentPoly, parse_poly
from .pauli import PauliVec, PauliWindow, shifted_symplectic
from .builder import GeneratorSet, augment_multi, augment_single, protocol_yield

__all__ = [
    "D",
    "ONE",
    "ZERO",
    "LaurentPoly",
    "parse_poly",
    "PauliVec",
    "PauliWindow",
    "shifted_symplectic",
    "GeneratorSet",
    "augment_single",
    "augment_multi",
    "protocol_yield",
]

__version__ = "0.1.0"
