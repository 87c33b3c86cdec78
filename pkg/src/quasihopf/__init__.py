"""Exact computational algebra for finite-dimensional quasi-Hopf algebras."""

from .fields import GF, QQ, Field
from .finalg import FinAlgebra, Report, VerificationError
from .quasihopf import QuasiBialgebra, QuasiHopfAlgebra

__all__ = [
    "Field", "QQ", "GF",
    "FinAlgebra", "Report", "VerificationError",
    "QuasiBialgebra", "QuasiHopfAlgebra",
]

__version__ = "0.1.0"
