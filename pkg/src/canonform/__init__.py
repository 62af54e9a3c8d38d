"""canonform: canonical decompositions of complex homogeneous forms.

Library plus command-line tool for Waring-type decompositions of binary and
n-ary forms, completion of squares and cubes, mixed-power representations,
Jacobian full-rank certification of canonical-form candidates, and the
number-theoretic enumeration of the mixed-power families.
"""

from .apolarity import HankelMatrix, apply_diff, hankel, hankel_kernel, pair
from .binary import (MixedSpec, QuarticNormal, count_reps_monte_carlo,
                     mixed_decompose, quartic_normalize, quartic_six_for_form,
                     quartic_six_reps, quartic_two_fixed, sylvester_decompose,
                     two_squares_all)
from .canonicity import (CertifyReport, ParamMap, build_map, catalog_names,
                         hyperplane_classify, jacobian_certify, zerosum_verify)
from .enumeration import (NeatForm, neat_enumerate, neat_upto, obstruction_A,
                          partial_sum_S, s_of_d, smallest_in_A)
from .errors import (AllZero, BadShape, CanonformError, DegenerateInput,
                     DegenerateLambda, DegeneratePencil, DegenerateStage,
                     LeadingZero, NormalizationFailed, NotGeneric, ParseError,
                     PivotZero, RepeatedRoot, ShapeMismatch, UnknownName,
                     UnsupportedShape, ZeroForm)
from .forms import (Decomposition, Form, Term, biermann_point, binary_factor,
                    dim, form_from_json, form_to_json, forms_close, index_set,
                    linear_coeffs, linear_form, monomial_form, multinomial,
                    parse_decomposition, parse_form, power_of_linear,
                    random_form)
from .multivar import (PencilDiag, TriangularSquares, pencil_diagonalize,
                       quartic_lift, reichstein_full, reichstein_step, slinky,
                       slowpoke, uppertri)
from .scalars import EPS_DEFAULT, QQi, exact_sqrt, snap_scalar

__all__ = [
    "AllZero", "BadShape", "CanonformError", "CertifyReport", "Decomposition",
    "DegenerateInput", "DegenerateLambda", "DegeneratePencil",
    "DegenerateStage", "EPS_DEFAULT", "Form", "HankelMatrix", "LeadingZero",
    "MixedSpec", "NeatForm", "NormalizationFailed", "NotGeneric", "ParamMap",
    "ParseError", "PencilDiag", "PivotZero", "QQi", "QuarticNormal",
    "RepeatedRoot", "ShapeMismatch", "Term", "TriangularSquares",
    "UnknownName", "UnsupportedShape", "ZeroForm", "apply_diff",
    "biermann_point", "binary_factor", "build_map", "catalog_names",
    "count_reps_monte_carlo", "dim", "exact_sqrt", "form_from_json",
    "form_to_json", "forms_close", "hankel", "hankel_kernel",
    "hyperplane_classify", "index_set", "jacobian_certify", "linear_coeffs",
    "linear_form", "mixed_decompose", "monomial_form", "multinomial",
    "neat_enumerate", "neat_upto", "obstruction_A", "pair",
    "parse_decomposition", "parse_form", "partial_sum_S",
    "pencil_diagonalize", "power_of_linear", "quartic_lift",
    "quartic_normalize", "quartic_six_for_form", "quartic_six_reps",
    "quartic_two_fixed", "random_form", "reichstein_full", "reichstein_step",
    "s_of_d", "slinky", "slowpoke", "smallest_in_A", "snap_scalar",
    "sylvester_decompose", "two_squares_all", "uppertri", "zerosum_verify",
]
