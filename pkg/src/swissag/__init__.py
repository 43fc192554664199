"""Self-orthogonal evaluation codes on maximal curves and their quantum parameters."""

from .codes import (EvaluationCode, build_code, dual_code,
                    dual_membership_witnesses, is_self_orthogonal, min_weight)
from .curves import (AffinePlace, CurveDescriptor, FamilyParams,
                     enumerate_affine_places, family_params, make_descriptor,
                     maximality_check)
from .fields import FieldCtx, FieldElement, FieldSpec, all_elements, build_field
from .polys import Poly, derivative, poly_from_coeffs, poly_gcd, product_from_roots, roots_in_field
from .quantum import (QuantumCodeParams, css_params, gv_check,
                      stabilizer_from_self_orthogonal, t_point_params,
                      theorem_table, verify_table)
from .rrbasis import DivisorSpec, MonomialFn, candidate_monomials, select_basis
from .swiss import SwissData, build_swiss_data, compute_A_set, simple_zero_certificate

__version__ = "0.1.0"
