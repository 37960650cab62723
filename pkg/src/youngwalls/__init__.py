"""Level-1 perfect crystals of types E6(2) and F4(1), their energy functions,
and Young wall realizations of B(Lambda_0) and the Fock space crystal."""

from .cartan import LAMBDA0, AffineWeight, CartanDatum, CartanType, ClassicalWeight, cartan_datum
from .perfect_crystal import CrystalVertex, PerfectCrystal, build_crystal, check_perfect

__version__ = "0.1.0"

__all__ = [
    "LAMBDA0", "AffineWeight", "CartanDatum", "CartanType", "ClassicalWeight", "cartan_datum",
    "CrystalVertex", "PerfectCrystal", "build_crystal", "check_perfect",
]
