"""Exact rational solutions of the dispersionless Hirota system.

The library builds the solutions from Cauchy-interpolation determinants and
certifies their properties in exact rational arithmetic: residual vanishing
over all index triples, Frobenius integrability of the annihilating
one-form, and the flatness dichotomy of the underlying Veronese web.
"""

from .errors import (DegenerateInterpolantError, DegenerateRestrictionError,
                     DimensionError, HirotaWebError, InexactDivisionError,
                     PoleError, WebSpecError)
from .forms import DifferentialForm, LambdaForm
from .interpolation import (CauchyInterpolant, WebSpec, build_system_matrix,
                            cauchy_interpolant, evaluate_interpolant,
                            highest_coefficients, interpolant_matches_oracle,
                            interpolation_check, random_numeric_instances,
                            row_matrix, signed_minors, solve_oracle)
from .polynomials import (MultiPoly, PolyMatrix, determinant,
                          determinant_cofactor_naive, exact_div,
                          maximal_minors, poly_from_json, poly_text,
                          poly_to_json)
from .ratfunc import RationalFunction
from .webs import (Coframe, FlatnessVerdict, HirotaSolution, Mobius,
                   PropertyCheck, TripleCheck, VerificationReport,
                   build_solution, coframe, flatness_check, frobenius_check,
                   hirota_residual, restrict, restricted_nodes,
                   structural_properties, transform, verify_hirota,
                   veronese_form, web_triples)

__version__ = "0.1.0"

__all__ = [
    "CauchyInterpolant", "Coframe", "DegenerateInterpolantError",
    "DegenerateRestrictionError", "DifferentialForm", "DimensionError",
    "FlatnessVerdict", "HirotaSolution", "HirotaWebError",
    "InexactDivisionError", "LambdaForm", "Mobius", "MultiPoly",
    "PoleError", "PolyMatrix", "PropertyCheck", "RationalFunction",
    "TripleCheck", "VerificationReport", "WebSpec", "WebSpecError",
    "build_solution", "build_system_matrix", "cauchy_interpolant",
    "coframe", "determinant", "determinant_cofactor_naive",
    "evaluate_interpolant", "exact_div", "flatness_check",
    "frobenius_check", "highest_coefficients", "hirota_residual",
    "interpolant_matches_oracle", "interpolation_check", "maximal_minors",
    "poly_from_json", "poly_text", "poly_to_json",
    "random_numeric_instances", "restrict", "restricted_nodes",
    "row_matrix", "signed_minors", "solve_oracle", "structural_properties",
    "transform", "verify_hirota", "veronese_form", "web_triples",
]
