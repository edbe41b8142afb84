"""Characters, sl2 branching and semigroup bounds for simple Lie algebras."""

from ._core import (
    MissingMValueError,
    Sl2CertificateError,
    b_bound,
    branch,
    character,
    complement,
    describe,
    e_value,
    exclusion_set,
    g0,
    golden,
    invariant_dim,
    is_member,
    parabolic_table,
    weyl_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "MissingMValueError",
    "Sl2CertificateError",
    "b_bound",
    "branch",
    "character",
    "complement",
    "describe",
    "e_value",
    "exclusion_set",
    "g0",
    "golden",
    "invariant_dim",
    "is_member",
    "parabolic_table",
    "weyl_dimension",
]
