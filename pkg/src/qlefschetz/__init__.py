"""
Exact q-deformed intersection calculus for Lefschetz fibrations.

The coefficient ring is Z[q, q^-1] with arbitrary-precision integers; all
linear algebra is fraction-free and every comparison in the package and
its test suite is exact.
"""

from .catalog import MilnorData, induced_total_space, milnor_ar, mirror_p2, xab
from .laurent import ExactDivisionError, LaurentPoly, gcd_many, laurent_gcd, q
from .lefschetz import ConsistencyError, LefschetzAlgebra
from .matrix import KClass, LaurentMatrix, gram_pairing
from .moves import (
    TwistWord,
    apply_twist_word,
    dehn_twist_class,
    hurwitz_inverse_move,
    hurwitz_move,
    inverse_dehn_twist_class,
    rescale_object,
    shift_object,
)
from .obstructions import (
    HypothesisError,
    SphereTestResult,
    Verdict,
    betti_lower_bound,
    independence_certificate,
    kernel_classes,
    nonzero_primitive_certificate,
    self_pairing,
    sphere_test,
    spherical_value,
)

__all__ = [
    "ConsistencyError",
    "ExactDivisionError",
    "HypothesisError",
    "KClass",
    "LaurentMatrix",
    "LaurentPoly",
    "LefschetzAlgebra",
    "MilnorData",
    "SphereTestResult",
    "TwistWord",
    "Verdict",
    "apply_twist_word",
    "betti_lower_bound",
    "dehn_twist_class",
    "gcd_many",
    "gram_pairing",
    "hurwitz_inverse_move",
    "hurwitz_move",
    "independence_certificate",
    "induced_total_space",
    "inverse_dehn_twist_class",
    "kernel_classes",
    "laurent_gcd",
    "milnor_ar",
    "mirror_p2",
    "nonzero_primitive_certificate",
    "q",
    "rescale_object",
    "self_pairing",
    "shift_object",
    "sphere_test",
    "spherical_value",
    "xab",
]
