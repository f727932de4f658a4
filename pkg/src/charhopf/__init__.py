"""Exact symbolic computation in character Hopf algebras and their shuffle representation."""

from .chargroup import ParamTable, g2_bindings
from .errors import (InhomogeneousBracket, ModeError, SpecializationError,
                     UndefinedScaledElement, ZeroDivisorError)
from .freealg import SkewElement, SkewGroupAlgebra
from .hopf import (BraidedTensor, Tensor, alpha_closed, alpha_recurrent, braided_from_ordinary,
                   closed_coproduct, coproduct, ordinary_from_braided, tensor,
                   verify_pol_identity)
from .parser import Engine, EngineConfig, ExpressionError, parse, parse_expression
from .qcalc import gauss_binomial, q_factorial, q_int
from .render import from_json, render
from .scalars import Poly, Scalar, var
from .shuffle import ShuffleAlgebra, ShuffleElement
from .verify import IDENTITIES, VerifyOptions, run_all, run_identity

__all__ = [
    "BraidedTensor", "Engine", "EngineConfig", "ExpressionError", "IDENTITIES",
    "InhomogeneousBracket", "ModeError", "ParamTable", "Poly", "Scalar", "ShuffleAlgebra",
    "ShuffleElement", "SkewElement", "SkewGroupAlgebra", "SpecializationError", "Tensor",
    "UndefinedScaledElement", "VerifyOptions", "ZeroDivisorError", "alpha_closed",
    "alpha_recurrent", "braided_from_ordinary", "closed_coproduct", "coproduct",
    "from_json", "g2_bindings", "gauss_binomial", "ordinary_from_braided", "parse",
    "parse_expression", "q_factorial", "q_int", "render", "run_all", "run_identity",
    "tensor", "var", "verify_pol_identity",
]
