"""Exact Hermitian/symmetric forms over fields with involution.

Core objects: fields with involution (F_p, F_{p^2}, Q, Q(sqrt d)), Hermitian
forms as Gram matrices, orthogonal diagonalization, norm-equation and
diagonal-quadric isotropic-vector constructions, a brute-force solver for
homogeneous polynomials over finite fields, and Maschke averaging for finite
matrix groups with the orthogonal-complement counterexample harness.

The package is importable as a library, exposed over HTTP by
``isoform.service``, and driven from the command line by ``isoform.cli``.
"""

from .errors import (
    CharacteristicDividesOrder,
    DimensionMismatch,
    DimensionTooSmall,
    DivisionByZero,
    FieldMismatch,
    GroupTooLarge,
    IsoformError,
    NoIsotropicVector,
    NormNotRepresented,
    NotInvariant,
    ParseError,
    PreconditionViolated,
    SearchSpaceTooLarge,
    SingularGenerator,
    UnsupportedField,
)
from .fields import (
    Field,
    FieldElement,
    PrimeField,
    QuadraticExtField,
    QuadraticNumberField,
    RationalField,
    parse_field_spec,
)
from .forms import DiagonalizationResult, HermitianForm, Subspace
from .isotropy import (
    HomogeneousPoly,
    IsotropyWitness,
    cw_solve,
    isotropic_any,
    isotropic_symmetric,
    isotropic_via_norm,
    norm_solve,
)
from .linalg import Matrix
from .maschke import CounterexampleReport, Representation, counterexample_report

__all__ = [
    "CharacteristicDividesOrder",
    "CounterexampleReport",
    "DiagonalizationResult",
    "DimensionMismatch",
    "DimensionTooSmall",
    "DivisionByZero",
    "Field",
    "FieldElement",
    "FieldMismatch",
    "GroupTooLarge",
    "HermitianForm",
    "HomogeneousPoly",
    "IsoformError",
    "IsotropyWitness",
    "Matrix",
    "NoIsotropicVector",
    "NormNotRepresented",
    "NotInvariant",
    "ParseError",
    "PreconditionViolated",
    "PrimeField",
    "QuadraticExtField",
    "QuadraticNumberField",
    "RationalField",
    "Representation",
    "SearchSpaceTooLarge",
    "SingularGenerator",
    "Subspace",
    "UnsupportedField",
    "counterexample_report",
    "cw_solve",
    "isotropic_any",
    "isotropic_symmetric",
    "isotropic_via_norm",
    "norm_solve",
    "parse_field_spec",
]
