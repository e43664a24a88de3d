from .candidates import CandidateSet, LemmaViolation, build_G0, build_Q, small_ex
from .recipes import RecipeError, parse_recipe
from .theorems import THEOREMS, TheoremParameterError, UnknownTheoremError, theorem_construction, theorem_family

__all__ = [
    "CandidateSet", "LemmaViolation", "build_G0", "build_Q", "small_ex",
    "RecipeError", "parse_recipe",
    "THEOREMS", "TheoremParameterError", "UnknownTheoremError", "theorem_construction", "theorem_family",
]
