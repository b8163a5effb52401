"""Free monoidal categories with chosen duals, as finite combinatorics.

Morphisms of Dpr (one dual pair ``- -| +``) and of the signature-indexed
family D(Λ, σ) are pairs of retained position sets ``(A, B)``; composition,
tensor, factorisation, the simplicial embedding, matrix evaluation and the
coend checks all work on that representation.
"""

from .core import (AmbiguousMatchingError, BoundsError, CompositionError, ContractError,
                   DiagramError, InconsistencyError, Interval)
from .dpr import DiagMorphism, MarkedWord, compose, decompose, identity, tensor, validate
from .dsig import (DPR, DSEQ, DZ, Signature, SigMorphism, cjv_signature, sig_compose,
                   sig_decompose, sig_identity, sig_tensor, sig_validate, signature_from_name)
from .delta import SimplicialMap, theta_map, theta_obj
from .evaluation import IntMatrix, evaluate, matrix_dual_pair
from .homs import enumerate_homs

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatchingError", "BoundsError", "CompositionError", "ContractError", "DiagramError",
    "InconsistencyError", "Interval", "DiagMorphism", "MarkedWord", "compose", "decompose",
    "identity", "tensor", "validate", "DPR", "DSEQ", "DZ", "Signature", "SigMorphism",
    "cjv_signature", "sig_compose", "sig_decompose", "sig_identity", "sig_tensor",
    "sig_validate", "signature_from_name", "SimplicialMap", "theta_map", "theta_obj",
    "IntMatrix", "evaluate", "matrix_dual_pair", "enumerate_homs",
]
