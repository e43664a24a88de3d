from .compare import TIE_WINDOW, Verdict, compare_certificates, compare_lambda, edge_rotation
from .exact import TARGET_WIDTH, ExactLambdaCertificate, certify_lambda, char_poly
from .power import (
    DEFAULT_TOL,
    ConvergenceError,
    SpectralResult,
    adjacency_matrix,
    lambda_estimate,
    spectral_radius,
)

__all__ = [
    "TIE_WINDOW", "Verdict", "compare_certificates", "compare_lambda", "edge_rotation",
    "TARGET_WIDTH", "ExactLambdaCertificate", "certify_lambda", "char_poly",
    "DEFAULT_TOL", "ConvergenceError", "SpectralResult", "adjacency_matrix", "lambda_estimate",
    "spectral_radius",
]
