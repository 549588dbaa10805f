"""Additive systems of integers: sum systems, sum-and-distance systems,
principal reversible cuboids and the square families built from them.

Everything is exact 64-bit integer arithmetic; every construction has a
matching verifier and every verifier reports the first violated
invariant with a witness.
"""

from .core import (
    DEFAULT_CAP,
    CapExceededError,
    InputError,
    Int64OverflowError,
    InternalContradictionError,
    Progression,
    SumSystem,
    VerificationFailedError,
    VerificationReport,
    first_segment,
    is_progression,
    minkowski_sum,
    progression_set,
)
from .cuboid import (
    Cuboid,
    axis_sets,
    build_cuboid,
    building_op,
    cuboid_from_sumsystem,
    decompose_cuboid,
    kron_dir,
    trivial_cuboid,
    verify_property_V,
    verify_reversible,
)
from .factorisation import (
    JointOrderedFactorisation,
    canonicalise,
    count_jofs,
    enumerate_jofs,
    format_jof,
    parse_jof,
    validate_jof,
)
from .sds import (
    INCLUSIVE,
    NON_INCLUSIVE,
    SdsSystem,
    infer_flavour,
    sds_to_sumsys_inclusive,
    sds_to_sumsys_noninclusive,
    sumsys_to_sds_inclusive,
    sumsys_to_sds_noninclusive,
    verify_sds,
    verify_sds_two_part,
)
from .squares import (
    SquareMatrix,
    associated_magic_square,
    most_perfect_square,
    reversible_square_even,
    reversible_square_odd,
    verify_square,
)
from .sumsystem import (
    base_q_system,
    build_sum_system,
    check_palindromic,
    decompose_sum_system,
    parity_signature,
    polynomial_check,
    verify_sum_system,
)

__version__ = "0.1.0"
