"""Near MDS codes over finite fields and the t-designs they support."""

from .codes import (BchSpec, LinearCode, bch, dual, extend, from_generator_poly, lift,
                    sphere_packing_check, subfield_subcode, trace_code)
from .designs import (Design, DesignCheck, assmus_mattson, complementary_design, lambda_s,
                      sqs_direct, support_design, verify_t_design)
from .field import FieldCtx, build_field, extension, parse_field, prime_field
from .nmds import NmdsReport, classify, nmds_weight_formulas
from .poly import Poly, cyclotomic_cosets
from .search import low_weight_supports, min_distance
from .weights import BudgetExceeded, WeightDistribution, macwilliams, weight_distribution, weight_distribution_enum

__all__ = [
    "BchSpec", "BudgetExceeded", "Design", "DesignCheck", "FieldCtx", "LinearCode", "NmdsReport", "Poly",
    "WeightDistribution", "assmus_mattson", "bch", "build_field", "classify", "complementary_design",
    "cyclotomic_cosets", "dual", "extend", "extension", "from_generator_poly", "lambda_s", "lift",
    "low_weight_supports", "macwilliams", "min_distance", "nmds_weight_formulas", "parse_field",
    "prime_field", "sphere_packing_check", "sqs_direct", "subfield_subcode", "support_design",
    "trace_code", "verify_t_design", "weight_distribution", "weight_distribution_enum",
]
