"""Dense exact linear algebra over Q(i).

Matrices are dense and immutable by convention.  Elimination uses ordinary
pivot-normalized Gauss-Jordan reduction with a deterministic pivot rule
(first nonzero entry scanning columns left to right, rows top to bottom),
so ranks, kernels and reduced forms are reproducible bit for bit.  Kernel
bases are canonical: free columns are taken in increasing order and each
basis vector carries a 1 in its free position.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exactfield import GaussianRational, ZERO, ONE, dump_entry, gq, sub_mul


def _entry(x) -> GaussianRational:
    if type(x) is GaussianRational:
        return x
    return gq(x)


class ExactMatrix:
    """A rows x cols matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "_d")

    def __init__(self, data: Sequence[Sequence]):
        d = [[_entry(x) for x in row] for row in data]
        if not d or not d[0]:
            raise ValueError("matrix must have at least one row and column")
        cols = len(d[0])
        if any(len(row) != cols for row in d):
            raise ValueError("ragged rows")
        self._d = d
        self.rows = len(d)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls(
            [[_entry(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    def at(self, i: int, j: int) -> GaussianRational:
        return self._d[i][j]

    def row(self, i: int) -> list[GaussianRational]:
        return list(self._d[i])

    def column(self, j: int) -> list[GaussianRational]:
        return [r[j] for r in self._d]

    def copy_rows(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._d]

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._d, other._d)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._d, other._d)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self._d])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for matrix product")
        od = other._d
        out = []
        for row in self._d:
            orow = []
            for j in range(other.cols):
                s = ZERO
                for k, a in enumerate(row):
                    if a:
                        b = od[k][j]
                        if b:
                            s = s + a * b
                orow.append(s)
            out.append(orow)
        return ExactMatrix(out)

    def scale(self, s) -> "ExactMatrix":
        s = _entry(s)
        return ExactMatrix([[s * a for a in row] for row in self._d])

    def apply(self, v: Sequence[GaussianRational]) -> list[GaussianRational]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self._d:
            s = ZERO
            for a, x in zip(row, v):
                if a and x:
                    s = s + a * x
            out.append(s)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self._d[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def conj_transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [
                [self._d[i][j].conjugate() for i in range(self.rows)]
                for j in range(self.cols)
            ]
        )

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self._d, other._d) for a, b in zip(ra, rb))
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def _reduce(rows: list[list[GaussianRational]], cols: int) -> list[int]:
    """In-place Gauss-Jordan reduction; returns the pivot columns."""
    nrows = len(rows)
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        p = prow[c]
        if p != ONE:
            inv = p.inverse()
            for j in range(c, cols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            for j in nz:
                row[j] = sub_mul(row[j], f, prow[j])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows = M.copy_rows()
    pivots = _reduce(rows, M.cols)
    return ExactMatrix(rows), pivots


def rank(M: ExactMatrix) -> int:
    rows = M.copy_rows()
    return len(_reduce(rows, M.cols))


def kernel_basis(M: ExactMatrix) -> list[list[GaussianRational]]:
    """Canonical basis of the right nullspace of M.

    One vector per free column, free columns in increasing order, each
    vector with a 1 in its own free position; M @ v == 0 exactly.
    """
    rows = M.copy_rows()
    pivots = _reduce(rows, M.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[f] = ONE
        for ridx, pc in enumerate(pivots):
            coeff = rows[ridx][f]
            if coeff:
                v[pc] = -coeff
        basis.append(v)
    return basis


def rank_of_rows(vectors: Iterable[Sequence[GaussianRational]], cols: int) -> int:
    """Rank of the span of the given coordinate vectors."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return len(_reduce(rows, cols))


def same_span(
    a: Sequence[Sequence[GaussianRational]],
    b: Sequence[Sequence[GaussianRational]],
    cols: int,
) -> bool:
    """True when the two families of vectors span the same subspace."""
    ra = rank_of_rows(a, cols)
    rb = rank_of_rows(b, cols)
    if ra != rb:
        return False
    return rank_of_rows(list(a) + list(b), cols) == ra


def det(M: ExactMatrix) -> GaussianRational:
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = M.copy_rows()
    n = M.rows
    sign = ONE
    acc = ONE
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            return ZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        p = rows[c][c]
        acc = acc * p
        inv = p.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if not f:
                continue
            f = f * inv
            prow = rows[c]
            row = rows[i]
            for j in range(c, n):
                if prow[j]:
                    row[j] = sub_mul(row[j], f, prow[j])
    return sign * acc


def dump_text(M: ExactMatrix) -> str:
    """Plain-text debug dump: one row per line, tab-separated entries."""
    return "\n".join("\t".join(dump_entry(x) for x in row) for row in M._d)
