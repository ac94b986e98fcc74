"""Systole lower bounds for arithmetic quotients, at desk scale.

The pieces: exact orders of the finite matrix groups that control
congruence-subgroup indices (lie_orders), translation-length bounds from
traces (length_trace), the certified chain from an ideal norm to systole
and volume bounds (congruence_bounds), exact minimal traces in the
congruence covers of the modular surface (modular_oracle), and complex
Salem polynomial search for the uniform length bound (salem).
"""
from .congruence_bounds import (
    BoundCertificate,
    CertStep,
    ExactConstant,
    Family,
    IdealData,
    LatticeSpec,
    Subtype,
    check_admissibility,
    epsilon_ab,
    explicit_c_constant,
    gromov_constant,
    index_upper_bound,
    lie_type_of,
    quaternion_norm,
    systole_lower_from_ideal,
    systole_volume_bound,
    trace_lower_from_ideal,
)
from .errors import DomainError, SearchBudgetError, ToleranceError
from .length_trace import (
    LengthBound,
    length_from_eigenvalue,
    sl2_length_lower,
    sl_length_lower,
    so_length_lower,
    su_length_lower,
)
from .lie_orders import (
    LieType,
    Series,
    dimension_exponent,
    group_order,
    is_prime_power,
    order_vs_exponent_check,
)
from .modular_oracle import (
    GrowthTable,
    SystoleResult,
    TraceWitness,
    growth_table,
    is_in_gamma,
    min_hyperbolic_trace,
    systole_of_gamma,
)
from .salem import (
    IntPolynomial,
    MinimalSearchResult,
    RootEntry,
    RootProfile,
    SalemVerdict,
    SystoleBoundResult,
    cyclotomic,
    divide_cyclotomic,
    enumerate_complex_salem,
    find_integer_factor,
    is_complex_salem,
    mahler_measure,
    minimal_complex_salem,
    poly_from_string,
    poly_to_string,
    roots,
    salem_systole_bound,
    self_reciprocal_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CertStep",
    "DomainError",
    "ExactConstant",
    "Family",
    "GrowthTable",
    "IdealData",
    "IntPolynomial",
    "LatticeSpec",
    "LengthBound",
    "LieType",
    "MinimalSearchResult",
    "RootEntry",
    "RootProfile",
    "SalemVerdict",
    "SearchBudgetError",
    "Series",
    "Subtype",
    "SystoleBoundResult",
    "SystoleResult",
    "ToleranceError",
    "TraceWitness",
    "check_admissibility",
    "cyclotomic",
    "dimension_exponent",
    "divide_cyclotomic",
    "enumerate_complex_salem",
    "epsilon_ab",
    "explicit_c_constant",
    "find_integer_factor",
    "gromov_constant",
    "group_order",
    "growth_table",
    "index_upper_bound",
    "is_complex_salem",
    "is_in_gamma",
    "is_prime_power",
    "length_from_eigenvalue",
    "lie_type_of",
    "mahler_measure",
    "min_hyperbolic_trace",
    "minimal_complex_salem",
    "order_vs_exponent_check",
    "poly_from_string",
    "poly_to_string",
    "quaternion_norm",
    "roots",
    "salem_systole_bound",
    "self_reciprocal_check",
    "sl2_length_lower",
    "sl_length_lower",
    "so_length_lower",
    "su_length_lower",
    "systole_lower_from_ideal",
    "systole_of_gamma",
    "systole_volume_bound",
    "trace_lower_from_ideal",
]
