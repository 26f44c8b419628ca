"""Linear codes over small finite fields: constructions, extension to minimal
codes with a large weight spread, and exhaustive verification."""

from mincode.analysis import CodeReport, ab_status, analyze, griesmer, griesmer_defect, is_minimal, is_minimal_codeword
from mincode.codes import LinearCode, WeightDistribution, code_from_generator, weight_distribution
from mincode.constructions import (
    ab_violating_extend,
    dual_bch_trace,
    even_weight_code,
    predict_extension_distribution,
    self_orthogonal_extend,
    simplex,
    simplex_complement,
    solomon_stiffler,
)
from mincode.families import ExpectedParams, family_parameters
from mincode.galois import Field, field_new
from mincode.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CodeReport",
    "ExpectedParams",
    "Field",
    "LinearCode",
    "WeightDistribution",
    "ab_status",
    "ab_violating_extend",
    "analyze",
    "code_from_generator",
    "dual_bch_trace",
    "even_weight_code",
    "family_parameters",
    "field_new",
    "griesmer",
    "griesmer_defect",
    "is_minimal",
    "is_minimal_codeword",
    "predict_extension_distribution",
    "self_orthogonal_extend",
    "simplex",
    "simplex_complement",
    "solomon_stiffler",
    "weight_distribution",
]
