"""Text format for exact matrices.

::

    hermitian 2          # or: matrix 2
    2 1-i
    1+i 3

Entries use the scalar syntax of :func:`potcert.arith.parse_scalar` and are
separated by whitespace, so an entry cannot contain spaces. Lines starting
with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ScalarSyntaxError, format_scalar, parse_scalar
from .matrices import is_hermitian

__all__ = [
    "MatrixFile",
    "MatrixSyntaxError",
    "parse_matrix",
    "parse_matrix_file",
    "serialize_matrix",
    "format_indexed",
]


class MatrixSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class MatrixFile:
    hermitian: bool
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)


def parse_matrix_file(text: str) -> MatrixFile:
    lines = [
        (no, raw) for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixSyntaxError("empty matrix file", 1, 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("hermitian", "matrix"):
        raise MatrixSyntaxError("header must be 'hermitian <n>' or 'matrix <n>'", no, 1)
    try:
        n = int(parts[1])
    except ValueError:
        raise MatrixSyntaxError(f"bad dimension {parts[1]!r}", no, header.index(parts[1]) + 1) from None
    if n < 1:
        raise MatrixSyntaxError("dimension must be positive", no, header.index(parts[1]) + 1)
    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else no
        raise MatrixSyntaxError(f"expected {n} rows, found {len(body)}", last, 1)
    rows = []
    for no, raw in body:
        row = []
        pos = 0
        for token in raw.split():
            col = raw.index(token, pos) + 1
            pos = col - 1 + len(token)
            try:
                row.append(parse_scalar(token))
            except ScalarSyntaxError as exc:
                raise MatrixSyntaxError(f"malformed entry {token!r}", no, col + exc.column - 1) from None
        if len(row) != n:
            raise MatrixSyntaxError(f"expected {n} entries, found {len(row)}", no, 1)
        rows.append(tuple(row))
    hermitian = parts[0] == "hermitian"
    if hermitian and not is_hermitian(rows):
        for i in range(n):
            for j in range(n):
                if rows[j][i] != rows[i][j].conjugate():
                    raise MatrixSyntaxError(
                        f"claimed Hermitian but entry ({i + 1},{j + 1}) != conj of ({j + 1},{i + 1})",
                        body[i][0],
                        1,
                    )
    return MatrixFile(hermitian, tuple(rows))


def parse_matrix(text: str) -> list:
    """Parse a matrix file into a list of rows of Gaussian rationals."""
    return [list(row) for row in parse_matrix_file(text).entries]


def serialize_matrix(M, hermitian: bool | None = None) -> str:
    if hermitian is None:
        hermitian = is_hermitian(M)
    cells = [[format_scalar(z) for z in row] for row in M]
    width = max((len(s) for row in cells for s in row), default=1)
    lines = [f"{'hermitian' if hermitian else 'matrix'} {len(M)}"]
    lines += [" ".join(s.rjust(width) for s in row).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _label(kind: str, label) -> str:
    if kind == "permutation":
        return "(" + " ".join(str(i + 1) for i in label) + ")"
    return "{" + ",".join(str(i + 1) for i in label) + "}"


def format_indexed(M) -> str:
    """Serialize an indexed matrix with a commented legend of row labels (1-based)."""
    legend = [f"# index {r + 1}: {_label(M.kind, lab)}" for r, lab in enumerate(M.index)]
    return "\n".join(legend) + "\n" + serialize_matrix(M.entries)
