"""
Example coalgebras and Hopf algebras, built and verified from structure constants.
"""

from .groups import FiniteGroup, cyclic, dihedral
from .builders import (
    GROUPS,
    HOPF_FAMILIES,
    ZooFamily,
    ZooSpec,
    build,
    direct_sum,
    dualize,
    group_algebra,
    matrix_coalgebra,
    parse_zoo_spec,
    pointed8,
    spec,
    taft,
)

__all__ = [
    'FiniteGroup',
    'cyclic',
    'dihedral',
    'GROUPS',
    'HOPF_FAMILIES',
    'ZooFamily',
    'ZooSpec',
    'build',
    'direct_sum',
    'dualize',
    'group_algebra',
    'matrix_coalgebra',
    'parse_zoo_spec',
    'pointed8',
    'spec',
    'taft',
]
