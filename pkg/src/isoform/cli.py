"""Command-line front end: every operation on files/stdin, deterministic output.

Output is line-oriented ``key = value`` (stable ordering, no timestamps);
matrix results are appended as matrix-format blocks so one subcommand's
output pipes into another.  Exit codes: 0 success, 1 domain error (printed as
one ``error = <Name>: <detail>`` line), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import IsoformError, ParseError
from .fields import parse_field_spec
from .forms import HermitianForm
from .io_formats import format_matrix, format_vector, parse_form, parse_poly, parse_rep
from .isotropy import (
    DEFAULT_SEARCH_BOUND,
    DEFAULT_SPACE_CAP,
    cw_solve,
    isotropic_any,
    norm_solve,
)
from .linalg import Matrix
from .maschke import DEFAULT_GROUP_CAP, counterexample_report

_BOOL = {True: "true", False: "false"}


class _DomainFailure(Exception):
    """A domain-level negative outcome (not an exception in the library API)."""

    def __init__(self, name: str, detail: str):
        super().__init__(detail)
        self.name = name
        self.detail = detail


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _matrix_block(title: str, field, matrix) -> list[str]:
    return [f"# {title}"] + format_matrix(field, matrix).rstrip("\n").splitlines()


# ---------------------------------------------------------------------------
# subcommand handlers (each returns the list of output lines)


def _cmd_diagonalize(args) -> list[str]:
    form = parse_form(_read_input(args.input))
    result = form.diagonalize()
    transformed = result.transformed_gram(form)
    congruent = transformed.is_diagonal() and transformed.diagonal() == result.diagonal
    out = [
        "command = diagonalize",
        f"field = {form.field.spec}",
        f"dim = {form.n}",
        "diagonal = " + " ".join(str(x) for x in result.diagonal),
        f"diagonal_fixed_check = {_BOOL[all(x.is_fixed() for x in result.diagonal)]}",
        f"congruence_check = {_BOOL[congruent]}",
        f"invertible_check = {_BOOL[result.basis_change.is_invertible()]}",
    ]
    out += _matrix_block(
        "basis change (columns are the orthogonal basis)",
        form.field,
        result.basis_change,
    )
    return out


def _cmd_isotropic(args) -> list[str]:
    form = parse_form(_read_input(args.input))
    witness = isotropic_any(form, search_bound=args.search_bound)
    if witness is None:
        if form.field.is_finite or form.n < 2:
            raise _DomainFailure(
                "NotFound", "no nonzero isotropic vector exists (full enumeration)"
            )
        raise _DomainFailure(
            "NotFound",
            f"no isotropic vector within search bound {args.search_bound}",
        )
    return [
        "command = isotropic",
        f"field = {form.field.spec}",
        f"dim = {form.n}",
        f"witness = {format_vector(witness.vector)}",
        f"construction = {witness.construction}",
        f"isotropic_check = {_BOOL[form.is_isotropic(witness.vector)]}",
    ]


def _cmd_norm_solve(args) -> list[str]:
    field = parse_field_spec(args.field)
    target = field.parse(args.target)
    x = norm_solve(field, target, search_bound=args.search_bound)
    return [
        "command = norm-solve",
        f"field = {field.spec}",
        f"target = {target}",
        f"result = {x}",
        f"norm_check = {_BOOL[x.norm() == target]}",
    ]


def _cmd_cw_solve(args) -> list[str]:
    poly = parse_poly(_read_input(args.input))
    solution = cw_solve(poly, space_cap=args.search_bound or DEFAULT_SPACE_CAP)
    if solution is None:
        raise _DomainFailure(
            "NoSolutionFound", "no nontrivial zero exists (full enumeration)"
        )
    return [
        "command = cw-solve",
        f"field = {poly.field.spec}",
        f"n_vars = {poly.n_vars}",
        f"degree = {poly.degree}",
        f"solution = {format_vector(solution)}",
        f"value_check = {_BOOL[not poly.evaluate(solution)]}",
    ]


def _cmd_rep_close(args) -> list[str]:
    rep, _ = parse_rep(_read_input(args.input), max_group=args.max_group)
    members = set(rep.elements)
    closed = all(x @ g in members for x in rep.elements for g in rep.generators)
    return [
        "command = rep-close",
        f"field = {rep.field.spec}",
        f"dim = {rep.dim}",
        f"generators = {len(rep.generators)}",
        f"order = {rep.order}",
        f"closure_check = {_BOOL[closed]}",
    ]


def _cmd_rep_average(args) -> list[str]:
    rep, seed = parse_rep(_read_input(args.input), max_group=args.max_group)
    if seed is None:
        seed = HermitianForm(rep.field, Matrix.identity(rep.field, rep.dim))
    averaged = rep.average_form(seed)
    invariant = all(
        g.transpose() @ averaged.gram @ g.conj() == averaged.gram
        for g in rep.generators
    )
    radical_dim = averaged.radical().dim
    out = [
        "command = rep-average",
        f"field = {rep.field.spec}",
        f"dim = {rep.dim}",
        f"order = {rep.order}",
        f"invariant_check = {_BOOL[invariant]}",
        f"degenerate = {_BOOL[radical_dim > 0]}",
        f"radical_dim = {radical_dim}",
    ]
    out += _matrix_block("averaged invariant form", rep.field, averaged.gram)
    return out


def _cmd_rep_decompose(args) -> list[str]:
    rep, _ = parse_rep(_read_input(args.input), max_group=args.max_group)
    summands = rep.decompose(seed=args.seed)
    invariant = all(rep.is_invariant_subspace(s) for s in summands)
    dims_ok = sum(s.dim for s in summands) == rep.dim
    out = [
        "command = rep-decompose",
        f"field = {rep.field.spec}",
        f"dim = {rep.dim}",
        f"order = {rep.order}",
        f"probe_seed = {args.seed}",
        f"summands = {len(summands)}",
    ]
    for i, s in enumerate(summands):
        cols = "; ".join(format_vector(c) for c in s.basis.cols())
        out.append(f"summand_{i} = {cols}")
    out.append(f"invariant_check = {_BOOL[invariant]}")
    out.append(f"dimension_sum_check = {_BOOL[dims_ok]}")
    return out


def _cmd_counterexample(args) -> list[str]:
    rep, seed = parse_rep(_read_input(args.input), max_group=args.max_group)
    if seed is None:
        seed = HermitianForm(rep.field, Matrix.identity(rep.field, rep.dim))
    report = counterexample_report(rep, seed, search_bound=args.search_bound)
    complement_cols = "; ".join(
        format_vector(c) for c in report.maschke_complement.basis.cols()
    )
    stacked = Matrix.from_cols(
        rep.field,
        rep.dim,
        report.w_subspace.basis.cols() + report.maschke_complement.basis.cols(),
    )
    direct_sum = stacked.ncols == rep.dim and stacked.rank() == rep.dim
    out = [
        "command = counterexample",
        f"field = {rep.field.spec}",
        f"dim = {rep.dim}",
        f"order = {rep.order}",
        f"witness = {format_vector(report.witness.vector)}",
        f"construction = {report.witness.construction}",
        f"isotropic_check = {_BOOL[report.form.is_isotropic(report.witness.vector)]}",
        f"w_dim = {report.w_subspace.dim}",
        f"w_perp_dim = {report.w_perp.dim}",
        f"w_contained_in_w_perp = {_BOOL[report.contains]}",
        f"restriction_rank = {report.restriction_rank}",
        f"maschke_complement = {complement_cols}",
        f"direct_sum_check = {_BOOL[direct_sum]}",
    ]
    out += _matrix_block("averaged invariant form", rep.field, report.form.gram)
    return out


_HANDLERS = {
    "diagonalize": _cmd_diagonalize,
    "isotropic": _cmd_isotropic,
    "norm-solve": _cmd_norm_solve,
    "cw-solve": _cmd_cw_solve,
    "rep-close": _cmd_rep_close,
    "rep-average": _cmd_rep_average,
    "rep-decompose": _cmd_rep_decompose,
    "counterexample": _cmd_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoform",
        description="Exact Hermitian forms: diagonalization, isotropic vectors, "
        "norm equations, Maschke averaging.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, with_input=True, search_bound=False, seed=False,
            max_group=False, field_target=False):
        p = sub.add_parser(name, help=help_text)
        if with_input:
            p.add_argument("input", help="input file path, or '-' for stdin")
        if field_target:
            p.add_argument("--field", required=True, help="field spec, e.g. Fp2:3")
            p.add_argument("--target", required=True, help="element literal")
        if search_bound:
            p.add_argument(
                "--search-bound",
                type=int,
                default=DEFAULT_SEARCH_BOUND,
                help=f"enumeration/height cap (default {DEFAULT_SEARCH_BOUND})",
            )
        if seed:
            p.add_argument(
                "--seed", type=int, default=0, help="probe RNG seed (default 0)"
            )
        if max_group:
            p.add_argument(
                "--max-group",
                type=int,
                default=DEFAULT_GROUP_CAP,
                help=f"group closure cap (default {DEFAULT_GROUP_CAP})",
            )
        p.add_argument(
            "--format", choices=["plain"], default="plain",
            help="output format (reserved for extension)",
        )
        return p

    add("diagonalize", "orthogonally diagonalize a Hermitian Gram matrix")
    add("isotropic", "find a nonzero isotropic vector", search_bound=True)
    add(
        "norm-solve",
        "solve x*conj(x) = target over the given field",
        with_input=False,
        field_target=True,
        search_bound=True,
    )
    p = add(
        "cw-solve",
        "find a nontrivial zero of a homogeneous polynomial (finite fields)",
    )
    p.add_argument(
        "--search-bound",
        type=int,
        default=DEFAULT_SPACE_CAP,
        help=f"search-space cap q^n (default {DEFAULT_SPACE_CAP})",
    )
    add("rep-close", "close a generated matrix group", max_group=True)
    add("rep-average", "average a seed form into a G-invariant form", max_group=True)
    add(
        "rep-decompose",
        "split a representation into invariant summands",
        seed=True,
        max_group=True,
    )
    add(
        "counterexample",
        "exhibit W <= W-perp for an isotropic line of the averaged form",
        search_bound=True,
        max_group=True,
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        lines = handler(args)
    except ParseError as exc:
        print(f"error = ParseError: {exc}")
        return 2
    except OSError as exc:
        print(f"error = IOError: {exc}")
        return 2
    except _DomainFailure as exc:
        print(f"error = {exc.name}: {exc.detail}")
        return 1
    except IsoformError as exc:
        print(f"error = {type(exc).__name__}: {exc}")
        return 1
    for line in lines:
        print(line)
    return 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
