"""Pydantic request/response models for the HTTP service.

Field elements travel as their element-literal strings (e.g. "1+2*u",
"-3/6"); matrices as row-major lists of those strings.  Negative search
outcomes (no isotropic vector, norm not represented, ...) are in-band
results with ``found``/``solved`` flags, not HTTP errors.
"""

from __future__ import annotations

from pydantic import BaseModel


class HealthResponse(BaseModel):
    status: str
    version: str


class DiagonalizeRequest(BaseModel):
    field: str
    gram: list[list[str]]


class DiagonalizeResponse(BaseModel):
    field: str
    dim: int
    diagonal: list[str]
    basis_change: list[list[str]]
    diagonal_fixed_check: bool
    congruence_check: bool
    invertible_check: bool


class IsotropicRequest(BaseModel):
    field: str
    gram: list[list[str]]
    search_bound: int = 10_000


class IsotropicResponse(BaseModel):
    field: str
    dim: int
    found: bool
    witness: list[str] | None = None
    construction: str | None = None
    isotropic_check: bool | None = None
    error: str | None = None
    detail: str | None = None


class NormSolveRequest(BaseModel):
    field: str
    target: str
    search_bound: int = 10_000


class NormSolveResponse(BaseModel):
    field: str
    target: str
    solved: bool
    result: str | None = None
    norm_check: bool | None = None
    error: str | None = None
    detail: str | None = None


class Monomial(BaseModel):
    coeff: str
    exponents: list[int]


class CwSolveRequest(BaseModel):
    field: str
    n_vars: int
    degree: int
    monomials: list[Monomial]
    space_cap: int = 10_000_000


class CwSolveResponse(BaseModel):
    field: str
    n_vars: int
    degree: int
    found: bool
    solution: list[str] | None = None
    value_check: bool | None = None
    error: str | None = None
    detail: str | None = None


class RepCloseRequest(BaseModel):
    field: str
    dim: int
    generators: list[list[list[str]]]
    max_group: int = 10_000


class RepCloseResponse(BaseModel):
    field: str
    dim: int
    generators: int
    order: int
    closure_check: bool


class RepAverageRequest(RepCloseRequest):
    seed_gram: list[list[str]] | None = None  # identity form when omitted


class RepAverageResponse(BaseModel):
    field: str
    dim: int
    order: int
    invariant_check: bool
    degenerate: bool
    radical_dim: int
    averaged_gram: list[list[str]]


class RepDecomposeRequest(RepCloseRequest):
    seed: int = 0


class RepDecomposeResponse(BaseModel):
    field: str
    dim: int
    order: int
    probe_seed: int
    summands: list[list[list[str]]]  # each summand: list of basis vectors
    invariant_check: bool
    dimension_sum_check: bool


class CounterexampleRequest(RepCloseRequest):
    seed_gram: list[list[str]] | None = None
    search_bound: int = 10_000


class CounterexampleResponse(BaseModel):
    field: str
    dim: int
    order: int
    found: bool
    witness: list[str] | None = None
    construction: str | None = None
    isotropic_check: bool | None = None
    w_dim: int | None = None
    w_perp_dim: int | None = None
    w_contained_in_w_perp: bool | None = None
    restriction_rank: int | None = None
    maschke_complement: list[list[str]] | None = None
    direct_sum_check: bool | None = None
    averaged_gram: list[list[str]] | None = None
    error: str | None = None
    detail: str | None = None


class ErrorBody(BaseModel):
    error: str
    detail: str
