"""Simple evolution algebras of small dimension: classification, isomorphism,
tensor products and the families' moduli.

Matrices use the column convention: column i holds the coordinates of e_i^2.
Scalars are exchanged as strings ("3/2" over Q, "t+1" over F_4) or ints.
"""

from ._evoalg import (
    Algebra as _Algebra,
    DomainError,
    InternalError,
    ParseError,
    acceptance,
    are_isomorphic,
    brute_force_isomorphic,
    census,
    classify,
    decompose,
    family_ids,
    inflate,
    quotient_check,
    run_cli,
    tensor,
)
from ._evoalg import canonical_algebra as _canonical_algebra

Algebra = _Algebra


def algebra(field, rows):
    """Algebra over `field` ("Q", "F 5", "F 2^2 t^2+t+1") from matrix rows."""
    return Algebra(field, [[str(x) for x in row] for row in rows])


def canonical_algebra(family, params, field="Q"):
    return _canonical_algebra(family, [str(p) for p in params], field)


__all__ = [
    "Algebra",
    "DomainError",
    "InternalError",
    "ParseError",
    "acceptance",
    "algebra",
    "are_isomorphic",
    "brute_force_isomorphic",
    "canonical_algebra",
    "census",
    "classify",
    "decompose",
    "family_ids",
    "inflate",
    "quotient_check",
    "run_cli",
    "tensor",
]
