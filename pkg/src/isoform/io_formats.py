"""Text formats for matrices, homogeneous polynomials, and representations.

Matrix format::

    # optional comments
    field Fp:7
    dim 2          (or "dim 2 3" for rectangular)
    1 0
    0 1

Polynomial format::

    poly Fp:7 3 2
    1 : 2 0 0
    1 : 0 2 0

Representation format::

    rep Fp:5 2 1
    0 4
    1 0

followed optionally by a seed Gram matrix (bare rows, or a full matrix block
with its own headers).  Blank lines and "#" comments are ignored everywhere.
Report lines of the form "key = value" before a "field" header are skipped,
so output piped from one CLI subcommand parses as input to another.
"""

from __future__ import annotations

from .errors import DimensionMismatch, ParseError
from .fields import Field, parse_field_spec
from .forms import HermitianForm
from .isotropy import HomogeneousPoly
from .linalg import Matrix, Vector
from .maschke import Representation


class _Lines:
    """Significant-line reader: skips blanks and comments, tracks line numbers."""

    def __init__(self, text: str):
        self.raw = text.splitlines()
        self.i = 0

    def peek(self) -> str | None:
        while self.i < len(self.raw):
            stripped = self.raw[self.i].strip()
            if stripped and not stripped.startswith("#"):
                return stripped
            self.i += 1
        return None

    def take(self, what: str) -> str:
        line = self.peek()
        if line is None:
            raise ParseError(f"unexpected end of input, expected {what}")
        self.i += 1
        return line

    def fail(self, message: str):
        # self.i already points past the line just consumed by take()
        raise ParseError(f"{message} (line {max(self.i, 1)})")

    def skip_preamble(self):
        """Skip report lines ("key = value") emitted ahead of a data block."""
        while True:
            line = self.peek()
            if line is None or "=" not in line:
                return
            self.i += 1


def _parse_row(field: Field, line: str, width: int, lines: _Lines) -> list:
    tokens = line.split()
    if len(tokens) != width:
        lines.fail(f"expected {width} entries per row, got {len(tokens)}")
    try:
        return [field.parse(tok) for tok in tokens]
    except ParseError as exc:
        lines.fail(f"bad element literal: {exc}")


def _parse_header(lines: _Lines) -> tuple[Field, int, int]:
    lines.skip_preamble()
    header = lines.take("'field <spec>' header")
    if not header.startswith("field "):
        lines.fail(f"expected 'field <spec>', got {header!r}")
    field = parse_field_spec(header[len("field ") :])
    dim_line = lines.take("'dim <n>' header")
    parts = dim_line.split()
    if parts[0] != "dim" or len(parts) not in (2, 3):
        lines.fail(f"expected 'dim <n>' or 'dim <n> <m>', got {dim_line!r}")
    try:
        nrows = int(parts[1])
        ncols = int(parts[2]) if len(parts) == 3 else nrows
    except ValueError:
        lines.fail(f"bad dimensions in {dim_line!r}")
    if nrows < 0 or ncols < 0:
        lines.fail("dimensions must be non-negative")
    return field, nrows, ncols


def parse_matrix(text: str) -> tuple[Field, Matrix]:
    lines = _Lines(text)
    field, nrows, ncols = _parse_header(lines)
    rows = [
        _parse_row(field, lines.take(f"matrix row {i + 1}"), ncols, lines)
        for i in range(nrows)
    ]
    return field, Matrix(field, rows, ncols=ncols)


def format_matrix(field: Field, matrix: Matrix) -> str:
    out = [f"field {field.spec}"]
    if matrix.nrows == matrix.ncols:
        out.append(f"dim {matrix.nrows}")
    else:
        out.append(f"dim {matrix.nrows} {matrix.ncols}")
    for row in matrix.rows:
        out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"


def parse_form(text: str) -> HermitianForm:
    field, matrix = parse_matrix(text)
    if matrix.nrows != matrix.ncols:
        raise ParseError("a Hermitian form needs a square Gram matrix")
    try:
        return HermitianForm(field, matrix)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_poly(text: str) -> HomogeneousPoly:
    lines = _Lines(text)
    lines.skip_preamble()
    header = lines.take("'poly <spec> <n_vars> <degree>' header")
    parts = header.split()
    if len(parts) != 4 or parts[0] != "poly":
        lines.fail(f"expected 'poly <spec> <n_vars> <degree>', got {header!r}")
    field = parse_field_spec(parts[1])
    try:
        n_vars, degree = int(parts[2]), int(parts[3])
    except ValueError:
        lines.fail(f"bad n_vars/degree in {header!r}")
    monomials = []
    while lines.peek() is not None:
        line = lines.take("monomial line")
        if ":" not in line:
            lines.fail(f"expected '<coeff> : e1 .. en', got {line!r}")
        coeff_text, _, exp_text = line.partition(":")
        try:
            coeff = field.parse(coeff_text.strip())
        except ParseError as exc:
            lines.fail(f"bad coefficient: {exc}")
        exps = exp_text.split()
        if len(exps) != n_vars:
            lines.fail(f"expected {n_vars} exponents, got {len(exps)}")
        try:
            exps = [int(e) for e in exps]
        except ValueError:
            lines.fail(f"bad exponent in {line!r}")
        monomials.append((coeff, exps))
    try:
        return HomogeneousPoly(field, n_vars, degree, monomials)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_poly(poly: HomogeneousPoly) -> str:
    out = [f"poly {poly.field.spec} {poly.n_vars} {poly.degree}"]
    for coeff, exps in poly.monomials:
        out.append(f"{coeff} : " + " ".join(str(e) for e in exps))
    return "\n".join(out) + "\n"


def parse_rep(
    text: str, max_group: int = 10_000
) -> tuple[Representation, HermitianForm | None]:
    """A representation plus the optional trailing seed Gram matrix."""
    lines = _Lines(text)
    lines.skip_preamble()
    header = lines.take("'rep <spec> <dim> <num_generators>' header")
    parts = header.split()
    if len(parts) != 4 or parts[0] != "rep":
        lines.fail(f"expected 'rep <spec> <dim> <num_generators>', got {header!r}")
    field = parse_field_spec(parts[1])
    try:
        dim, num_gens = int(parts[2]), int(parts[3])
    except ValueError:
        lines.fail(f"bad dimensions in {header!r}")
    if dim < 0 or num_gens < 0:
        lines.fail("dimension and generator count must be non-negative")
    generators = []
    for _ in range(num_gens):
        generators.append(_parse_block_matrix(lines, field, dim))
    rep = Representation.close(field, generators, dim=dim, max_group=max_group)
    if lines.peek() is None:
        return rep, None
    seed_gram = _parse_block_matrix(lines, field, dim)
    try:
        seed = HermitianForm(field, seed_gram)
    except ValueError as exc:
        raise ParseError(f"seed matrix: {exc}") from None
    return rep, seed


def _parse_block_matrix(lines: _Lines, field: Field, dim: int) -> Matrix:
    """An n x n block: bare rows, or a full matrix block with headers."""
    line = lines.peek()
    if line is not None and line.startswith("field "):
        block_field, nrows, ncols = _parse_header(lines)
        if block_field != field:
            lines.fail(
                f"matrix block field {block_field.spec} differs from {field.spec}"
            )
        if (nrows, ncols) != (dim, dim):
            lines.fail(f"expected a {dim}x{dim} block, got {nrows}x{ncols}")
    rows = [
        _parse_row(field, lines.take(f"matrix row {i + 1}"), dim, lines)
        for i in range(dim)
    ]
    return Matrix(field, rows, ncols=dim)


def format_rep(rep: Representation, seed: HermitianForm | None = None) -> str:
    out = [f"rep {rep.field.spec} {rep.dim} {len(rep.generators)}"]
    for g in rep.generators:
        for row in g.rows:
            out.append(" ".join(str(x) for x in row))
    if seed is not None:
        out.append("# seed form")
        for row in seed.gram.rows:
            out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"


def format_vector(v: Vector) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def parse_vector(field: Field, text: str) -> Vector:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ParseError("vector literal must be parenthesized: (x1, x2, ...)")
    inner = t[1:-1].strip()
    if not inner:
        return ()
    return tuple(field.parse(part) for part in inner.split(","))
