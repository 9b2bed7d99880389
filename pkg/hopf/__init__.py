"""
Hopf algebras by structure constants: bialgebra checks, antipode, structure and the stable coalgebra search.
"""

from .base import GroupData, HopfAlgebra, check_bialgebra, group_data, tensor_product
from .antipode import AntipodeOrder, antipode_order, antipode_power, compute_antipode
from .structure import (
    ComponentAction,
    component_action,
    generated_hopf_subalgebra,
    group_divisibility_check,
    has_nontrivial_skew_primitive,
    is_semisimple,
    isotypic_symmetry_check,
    s_stable,
)
from .stable_search import (
    SearchOutcome,
    StableSearchResult,
    adapted_basis_from_s2,
    s_squared_adapted_basis,
    stable_coalgebra_search,
)

__all__ = [
    'GroupData',
    'HopfAlgebra',
    'check_bialgebra',
    'group_data',
    'tensor_product',
    'AntipodeOrder',
    'antipode_order',
    'antipode_power',
    'compute_antipode',
    'ComponentAction',
    'component_action',
    'generated_hopf_subalgebra',
    'group_divisibility_check',
    'has_nontrivial_skew_primitive',
    'is_semisimple',
    'isotypic_symmetry_check',
    's_stable',
    'SearchOutcome',
    'StableSearchResult',
    'adapted_basis_from_s2',
    's_squared_adapted_basis',
    'stable_coalgebra_search',
]
