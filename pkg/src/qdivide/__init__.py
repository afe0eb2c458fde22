"""Exact divisibility theory for q-binomial coefficients.

The central object is A(b,a;n,m) = (1 - q^b)/(1 - q^a) * [n, m], with the
q-binomial [n, m] = (q;q)_n / ((q;q)_m (q;q)_{n-m}).
"""

from .afunc import (
    AParams,
    ReducedForm,
    andrews_predicate,
    expand,
    gcd_characterization,
    is_integer_poly,
    is_nonneg_poly,
    reduced_form,
    shift_equivalence_check,
    unify_hypothesis,
)
from .cyclotomic import ExponentVector, cyclotomic_poly, exponent_of, exponent_vector, reconstruct
from .errors import (
    DivisionByZero,
    HypothesisNotMet,
    InvalidShift,
    NegativeExponent,
    NotDivisible,
    NotPolynomial,
    NotReducible,
    PrecisionGuard,
    PreconditionViolated,
    QDivideError,
)
from .gould import GouldInstance, gould_lhs, root_unity_sum_exact, theorem9_check
from .integer_theorems import DivisibilityReport, binom_div_a, binom_div_b, binomial, sun_congruence
from .qpoly import QPoly, gaussian_binomial, q_pochhammer
from .reports import ScanReport

__version__ = "0.1.0"
