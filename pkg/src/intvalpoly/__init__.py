"""Absolutely irreducible split integer-valued polynomials over a DVR.

Over a discrete valuation domain ``(R, M)`` with finite residue field, the
absolutely irreducible split polynomials in ``Int(R)`` with roots in ``R``
correspond to *balanced* root sets. This package builds the associated
M-adic partitions, the equalizing polynomial of a balanced set (two
independent ways), fixed divisors and posh sets, classifies arbitrary split
polynomials, and cross-checks the classification with a bounded search.
"""

from .classifier import (
    ClassificationReport,
    FailedCondition,
    Verdict,
    classify,
    classify_linear_kr,
)
from .dvr import (
    INFINITY,
    DvrContext,
    ResidueClass,
    class_member_outside,
    class_of,
    subclasses,
    valuation_diff,
)
from .equalizer import (
    SplitPolynomial,
    equalizing_polynomial,
    equalizing_polynomial_lcm,
    fixed_divisor_val,
    poor_values,
    posh_set,
)
from .exactla import (
    MultiplicityVector,
    PartitionMatrix,
    determinant,
    partition_matrix,
    solve_equalizing,
)
from .exceptions import (
    CoveredError,
    EqualizingError,
    IntValPolyError,
    NotBalancedError,
    NotImagePrimitiveError,
    PoolTooShallowError,
    RootInRError,
)
from .oracle import OracleConfig, OracleResult, oracle_check, strict_witness
from .orderings import (
    POrdering,
    generalized_binomial_check,
    greedy_p_ordering,
    legendre_alpha,
)
from .partition import (
    ClassUnion,
    PointedPartition,
    associated_partition,
    balanced_subset,
    enumerate_balanced,
    enumerate_partitions,
    is_balanced,
    measure,
    poor_neighborhoods,
    rich_set,
)

__version__ = "0.1.0"
