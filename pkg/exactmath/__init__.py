"""
Exact scalars over cyclotomic fields and subspace linear algebra.
"""

from .scalar import QQ, CyclotomicField, Scalar, as_scalar, common_field, get_field, parse_scalar, square_class
from .polynomial import roots_in_field, scalar_is_square
from .linalg import (
    Subspace,
    annihilator,
    identity,
    invert,
    kernel,
    mat_mul,
    mat_vec,
    matrix,
    rank,
    rref,
    solve,
    solve_sparse,
    subspace_image,
    subspace_intersection,
    subspace_preimage,
    subspace_quotient_map,
    subspace_sum,
    tensor_map,
    tensor_subspace,
    tensor_vector,
    unit_vector,
    vector,
    zeros,
)

__all__ = [
    'QQ',
    'CyclotomicField',
    'Scalar',
    'as_scalar',
    'common_field',
    'get_field',
    'parse_scalar',
    'square_class',
    'roots_in_field',
    'scalar_is_square',
    'Subspace',
    'annihilator',
    'identity',
    'invert',
    'kernel',
    'mat_mul',
    'mat_vec',
    'matrix',
    'rank',
    'rref',
    'solve',
    'solve_sparse',
    'subspace_image',
    'subspace_intersection',
    'subspace_preimage',
    'subspace_quotient_map',
    'subspace_sum',
    'tensor_map',
    'tensor_subspace',
    'tensor_vector',
    'unit_vector',
    'vector',
    'zeros',
]
