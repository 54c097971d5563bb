"""Betti numbers of moduli of parabolic U(2,1)-Higgs bundles."""
from .assembly import ModuliReport, dimension, n111_only, poincare_U
from .errors import InternalMismatch, ParaHiggsError, ValidationError
from .series import LaurentPoly
from .weights import DistributionCase, ModuliInput, WeightPoint, classify, dualize, toledo

__all__ = [
    "ModuliReport", "dimension", "n111_only", "poincare_U",
    "InternalMismatch", "ParaHiggsError", "ValidationError", "LaurentPoly",
    "DistributionCase", "ModuliInput", "WeightPoint", "classify", "dualize", "toledo",
]
__version__ = "0.1.0"
