"""Newton diagram invariants, non-degeneracy classification and blow-up
resolution for plane curve germs over the rationals and finite fields."""

from .algebra import FElem, FieldTower, QQ, prime_field
from .bivar import BivarPoly, CompressedForm, WeightedDecomposition
from .errors import (DomainError, InternalError, NewtonSingError, ParseError,
                     PaperViolationError, TowerMismatchError)
from .unipoly import UniPoly, extend_tower, factor_finite_field, \
    squarefree_decomposition, uni_gcd

__version__ = "0.1.0"

__all__ = [
    "BivarPoly", "CompressedForm", "DomainError", "FElem", "FieldTower",
    "InternalError", "NewtonSingError", "PaperViolationError", "ParseError",
    "QQ", "TowerMismatchError", "UniPoly", "WeightedDecomposition",
    "extend_tower", "factor_finite_field", "prime_field",
    "squarefree_decomposition", "uni_gcd", "__version__",
]
