"""FastAPI service exposing the core operations.

All operations are pure functions of the request body, so the service is
stateless and safe under any concurrency.  Malformed or contract-violating
input maps to HTTP 422 with an ``{"error", "detail"}`` body; negative search
outcomes are ordinary 200 responses with ``found``/``solved`` set to false.

Run with: ``uvicorn isoform.service:app``
"""

from __future__ import annotations

import functools

from fastapi import FastAPI, HTTPException

from ..errors import (
    IsoformError,
    NoIsotropicVector,
    NormNotRepresented,
    ParseError,
)
from ..fields import Field, parse_field_spec
from ..forms import HermitianForm
from ..isotropy import HomogeneousPoly, cw_solve, isotropic_any, norm_solve
from ..linalg import Matrix
from ..maschke import Representation, counterexample_report
from . import schemas

app = FastAPI(
    title="isoform",
    version="0.1.0",
    description="Exact Hermitian forms over fields with involution: "
    "diagonalization, isotropic vectors, norm equations, Maschke averaging.",
)


def _unprocessable(exc: Exception):
    name = type(exc).__name__ if isinstance(exc, IsoformError) else "InvalidInput"
    return HTTPException(status_code=422, detail={"error": name, "detail": str(exc)})


def _guarded(handler):
    """Map domain/contract errors to 422; negative outcomes stay in-band."""

    @functools.wraps(handler)
    def wrapper(*args, **kwargs):
        try:
            return handler(*args, **kwargs)
        except (NormNotRepresented, NoIsotropicVector):
            raise  # handled in-band by the endpoint itself
        except (IsoformError, ValueError) as exc:
            raise _unprocessable(exc) from None

    return wrapper


def _field(spec: str) -> Field:
    return parse_field_spec(spec)


def _matrix(field: Field, cells: list[list[str]], ncols: int | None = None) -> Matrix:
    rows = [[field.parse(cell) for cell in row] for row in cells]
    return Matrix(field, rows, ncols=ncols)


def _form(field: Field, cells: list[list[str]]) -> HermitianForm:
    return HermitianForm(field, _matrix(field, cells))


def _cells(matrix: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in matrix.rows]


def _vec(v) -> list[str]:
    return [str(x) for x in v]


def _rep(body: schemas.RepCloseRequest) -> Representation:
    field = _field(body.field)
    gens = [_matrix(field, g, ncols=body.dim) for g in body.generators]
    return Representation.close(field, gens, dim=body.dim, max_group=body.max_group)


def _seed_form(rep: Representation, seed_gram) -> HermitianForm:
    if seed_gram is None:
        return HermitianForm(rep.field, Matrix.identity(rep.field, rep.dim))
    return _form(rep.field, seed_gram)


@app.get("/health", response_model=schemas.HealthResponse)
def health():
    return schemas.HealthResponse(status="ok", version=app.version)


@app.post(
    "/diagonalize",
    response_model=schemas.DiagonalizeResponse,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def diagonalize(body: schemas.DiagonalizeRequest):
    field = _field(body.field)
    form = _form(field, body.gram)
    result = form.diagonalize()
    transformed = result.transformed_gram(form)
    return schemas.DiagonalizeResponse(
        field=field.spec,
        dim=form.n,
        diagonal=_vec(result.diagonal),
        basis_change=_cells(result.basis_change),
        diagonal_fixed_check=all(x.is_fixed() for x in result.diagonal),
        congruence_check=transformed.is_diagonal()
        and transformed.diagonal() == result.diagonal,
        invertible_check=result.basis_change.is_invertible(),
    )


@app.post(
    "/isotropic",
    response_model=schemas.IsotropicResponse,
    response_model_exclude_none=True,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def isotropic(body: schemas.IsotropicRequest):
    field = _field(body.field)
    form = _form(field, body.gram)
    witness = isotropic_any(form, search_bound=body.search_bound)
    if witness is None:
        detail = (
            "no nonzero isotropic vector exists (full enumeration)"
            if field.is_finite or form.n < 2
            else f"no isotropic vector within search bound {body.search_bound}"
        )
        return schemas.IsotropicResponse(
            field=field.spec, dim=form.n, found=False, error="NotFound", detail=detail
        )
    return schemas.IsotropicResponse(
        field=field.spec,
        dim=form.n,
        found=True,
        witness=_vec(witness.vector),
        construction=witness.construction,
        isotropic_check=form.is_isotropic(witness.vector),
    )


@app.post(
    "/norm-solve",
    response_model=schemas.NormSolveResponse,
    response_model_exclude_none=True,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def norm_solve_endpoint(body: schemas.NormSolveRequest):
    field = _field(body.field)
    target = field.parse(body.target)
    try:
        x = norm_solve(field, target, search_bound=body.search_bound)
    except NormNotRepresented as exc:
        return schemas.NormSolveResponse(
            field=field.spec,
            target=str(target),
            solved=False,
            error="NormNotRepresented",
            detail=str(exc),
        )
    return schemas.NormSolveResponse(
        field=field.spec,
        target=str(target),
        solved=True,
        result=str(x),
        norm_check=x.norm() == target,
    )


@app.post(
    "/cw-solve",
    response_model=schemas.CwSolveResponse,
    response_model_exclude_none=True,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def cw_solve_endpoint(body: schemas.CwSolveRequest):
    field = _field(body.field)
    poly = HomogeneousPoly(
        field,
        body.n_vars,
        body.degree,
        [(field.parse(m.coeff), m.exponents) for m in body.monomials],
    )
    solution = cw_solve(poly, space_cap=body.space_cap)
    if solution is None:
        return schemas.CwSolveResponse(
            field=field.spec,
            n_vars=poly.n_vars,
            degree=poly.degree,
            found=False,
            error="NoSolutionFound",
            detail="no nontrivial zero exists (full enumeration)",
        )
    return schemas.CwSolveResponse(
        field=field.spec,
        n_vars=poly.n_vars,
        degree=poly.degree,
        found=True,
        solution=_vec(solution),
        value_check=not poly.evaluate(solution),
    )


@app.post(
    "/rep/close",
    response_model=schemas.RepCloseResponse,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def rep_close(body: schemas.RepCloseRequest):
    rep = _rep(body)
    members = set(rep.elements)
    closed = all(x @ g in members for x in rep.elements for g in rep.generators)
    return schemas.RepCloseResponse(
        field=rep.field.spec,
        dim=rep.dim,
        generators=len(rep.generators),
        order=rep.order,
        closure_check=closed,
    )


@app.post(
    "/rep/average",
    response_model=schemas.RepAverageResponse,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def rep_average(body: schemas.RepAverageRequest):
    rep = _rep(body)
    averaged = rep.average_form(_seed_form(rep, body.seed_gram))
    invariant = all(
        g.transpose() @ averaged.gram @ g.conj() == averaged.gram
        for g in rep.generators
    )
    radical_dim = averaged.radical().dim
    return schemas.RepAverageResponse(
        field=rep.field.spec,
        dim=rep.dim,
        order=rep.order,
        invariant_check=invariant,
        degenerate=radical_dim > 0,
        radical_dim=radical_dim,
        averaged_gram=_cells(averaged.gram),
    )


@app.post(
    "/rep/decompose",
    response_model=schemas.RepDecomposeResponse,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def rep_decompose(body: schemas.RepDecomposeRequest):
    rep = _rep(body)
    summands = rep.decompose(seed=body.seed)
    return schemas.RepDecomposeResponse(
        field=rep.field.spec,
        dim=rep.dim,
        order=rep.order,
        probe_seed=body.seed,
        summands=[[_vec(c) for c in s.basis.cols()] for s in summands],
        invariant_check=all(rep.is_invariant_subspace(s) for s in summands),
        dimension_sum_check=sum(s.dim for s in summands) == rep.dim,
    )


@app.post(
    "/counterexample",
    response_model=schemas.CounterexampleResponse,
    response_model_exclude_none=True,
    responses={422: {"model": schemas.ErrorBody}},
)
@_guarded
def counterexample(body: schemas.CounterexampleRequest):
    rep = _rep(body)
    seed = _seed_form(rep, body.seed_gram)
    try:
        report = counterexample_report(rep, seed, search_bound=body.search_bound)
    except NoIsotropicVector as exc:
        return schemas.CounterexampleResponse(
            field=rep.field.spec,
            dim=rep.dim,
            order=rep.order,
            found=False,
            error="NoIsotropicVector",
            detail=str(exc),
        )
    stacked = Matrix.from_cols(
        rep.field,
        rep.dim,
        report.w_subspace.basis.cols() + report.maschke_complement.basis.cols(),
    )
    return schemas.CounterexampleResponse(
        field=rep.field.spec,
        dim=rep.dim,
        order=rep.order,
        found=True,
        witness=_vec(report.witness.vector),
        construction=report.witness.construction,
        isotropic_check=report.form.is_isotropic(report.witness.vector),
        w_dim=report.w_subspace.dim,
        w_perp_dim=report.w_perp.dim,
        w_contained_in_w_perp=report.contains,
        restriction_rank=report.restriction_rank,
        maschke_complement=[_vec(c) for c in report.maschke_complement.basis.cols()],
        direct_sum_check=stacked.ncols == rep.dim and stacked.rank() == rep.dim,
        averaged_gram=_cells(report.form.gram),
    )
