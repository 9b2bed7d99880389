"""
Classification of 2×2 matrix-like coalgebras.
"""

from .classifier import (
    C2Grouplikes,
    C2Isomorphism,
    MatrixLikeClass,
    MatrixLikeSpan,
    MatrixLikeTag,
    c2_grouplikes,
    c2_iso,
    classify,
    normal_form,
    relabel,
    validate_span,
)

__all__ = [
    'C2Grouplikes',
    'C2Isomorphism',
    'MatrixLikeClass',
    'MatrixLikeSpan',
    'MatrixLikeTag',
    'c2_grouplikes',
    'c2_iso',
    'classify',
    'normal_form',
    'relabel',
    'validate_span',
]
