"""
Coalgebras by structure constants: duals, coradical, filtration and the Nichols projection.
"""

from .base import (
    AlgebraSC,
    AxiomReport,
    Coalgebra,
    NicholsData,
    SimpleComponent,
    check_algebra,
    check_coalgebra,
    dual_algebra,
    subcoalgebra_restriction,
    transport_coalgebra,
)
from .semisimple import SplittingSettings, decompose, radical
from .coradical import (
    SkewPrimitiveSpace,
    coradical,
    coradical_filtration,
    coradical_space,
    grouplikes,
    skew_primitives,
    wedge,
)
from .nichols import (
    P1Comatrix,
    WedgeIdentity,
    isotypic_table,
    nichols_data,
    nichols_projection,
    nonzero_p1_for_grouplikes,
    p1_comatrix,
    p_spaces,
    wedge_identity,
)

__all__ = [
    'AlgebraSC',
    'AxiomReport',
    'Coalgebra',
    'NicholsData',
    'SimpleComponent',
    'check_algebra',
    'check_coalgebra',
    'dual_algebra',
    'subcoalgebra_restriction',
    'transport_coalgebra',
    'SplittingSettings',
    'decompose',
    'radical',
    'SkewPrimitiveSpace',
    'coradical',
    'coradical_filtration',
    'coradical_space',
    'grouplikes',
    'skew_primitives',
    'wedge',
    'P1Comatrix',
    'WedgeIdentity',
    'isotypic_table',
    'nichols_data',
    'nichols_projection',
    'nonzero_p1_for_grouplikes',
    'p1_comatrix',
    'p_spaces',
    'wedge_identity',
]
