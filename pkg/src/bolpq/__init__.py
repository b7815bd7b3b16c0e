"""Right Bol loops of order pq: construction, classification and audits."""

from .ff import FieldCtx, Fp2, make_context
from .loopcore import LoopTable, build_bol_loop
from .spectrum import SolutionSeq, theta_from_gamma

__all__ = ["FieldCtx", "Fp2", "LoopTable", "SolutionSeq", "build_bol_loop", "make_context", "theta_from_gamma"]
__version__ = "0.1.0"
