"""Exact dense linear algebra over any field descriptor.

Reduced row echelon form with first-nonzero pivoting (magnitude is
meaningless over exact fields), canonical subspaces, membership, sums,
intersections and kernels.  Everything is small and dense by design; the
finite instances this package certifies stay below a few hundred dimensions.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

from .fields import Field, FieldMismatchError, require_same_field


class Matrix:
    def __init__(self, field: Field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = [list(r) for r in rows]
        if self.rows:
            ncols = len(self.rows[0])
            if any(len(r) != ncols for r in self.rows):
                raise ValueError("ragged matrix")
            self.cols = ncols
        else:
            self.cols = 0

    @property
    def nrows(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows!r})"


def _reduce_row(field: Field, row: list, pivots: List[int], rows: List[list]) -> list:
    """Reduce `row` against RREF rows with the given pivot columns."""
    row = list(row)
    for prow, pcol in zip(rows, pivots):
        c = row[pcol]
        if not field.is_zero(c):
            row = [field.sub(x, field.mul(c, y)) for x, y in zip(row, prow)]
    return row


class SpanBuilder:
    """Incremental RREF accumulator: add vectors, track rank, emit a Subspace."""

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: List[list] = []
        self.pivots: List[int] = []

    @property
    def dim(self):
        return len(self.rows)

    def residual(self, vec: Sequence) -> list:
        return _reduce_row(self.field, list(vec), self.pivots, self.rows)

    def contains(self, vec: Sequence) -> bool:
        r = self.residual(vec)
        return all(self.field.is_zero(x) for x in r)

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; returns True when the rank grew."""
        if len(vec) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        f = self.field
        row = self.residual(vec)
        pcol = next((j for j, x in enumerate(row) if not f.is_zero(x)), None)
        if pcol is None:
            return False
        inv = f.inv(row[pcol])
        row = [f.mul(inv, x) for x in row]
        # clear the new pivot column from existing rows
        for i, prow in enumerate(self.rows):
            c = prow[pcol]
            if not f.is_zero(c):
                self.rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(prow, row)]
        at = next((k for k, p in enumerate(self.pivots) if p > pcol), len(self.pivots))
        self.rows.insert(at, row)
        self.pivots.insert(at, pcol)
        return True

    def to_subspace(self) -> "Subspace":
        return Subspace(self.field, self.ambient, self.rows, _trusted=True)


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form with zero rows pruned; row space preserved."""
    sb = SpanBuilder(m.field, m.cols)
    for row in m.rows:
        sb.add(row)
    return Matrix(m.field, sb.rows)


class Subspace:
    """Canonical subspace: RREF basis with strictly increasing pivots.

    Two subspaces are equal iff their basis matrices are identical; the zero
    subspace (no rows) is a valid value.
    """

    def __init__(self, field: Field, ambient: int, vectors: Iterable[Sequence], _trusted=False):
        self.field = field
        self.ambient = ambient
        if _trusted:
            self.basis = [list(v) for v in vectors]
        else:
            sb = SpanBuilder(field, ambient)
            for v in vectors:
                sb.add(v)
            self.basis = sb.rows
        self.pivots = []
        for row in self.basis:
            self.pivots.append(next(j for j, x in enumerate(row) if not field.is_zero(x)))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [])

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        rows = []
        for i in range(ambient):
            row = [field.zero] * ambient
            row[i] = field.one
            rows.append(row)
        return cls(field, ambient, rows, _trusted=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def _check_compat(self, other: "Subspace"):
        require_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")

    def contains(self, vec: Sequence) -> bool:
        if len(vec) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        r = _reduce_row(self.field, list(vec), self.pivots, self.basis)
        return all(self.field.is_zero(x) for x in r)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compat(other)
        return all(self.contains(row) for row in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compat(other)
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_compat(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient)
        # kernel of the stacked-coefficients system: c with sum c_k row_k = 0;
        # the first block of coefficients recombines self.basis into A cap B.
        stacked = self.basis + other.basis
        coeffs = kernel(Matrix(self.field, [list(col) for col in zip(*stacked)]))
        f = self.field
        vecs = []
        for c in coeffs.basis:
            v = [f.zero] * self.ambient
            for x, row in zip(c[: self.dim], self.basis):
                if not f.is_zero(x):
                    v = [f.add(a, f.mul(x, b)) for a, b in zip(v, row)]
            vecs.append(v)
        return Subspace(self.field, self.ambient, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(m: Matrix) -> Subspace:
    """Right kernel {v : M v = 0} as a canonical subspace."""
    f = m.field
    r = rref(m)
    pivots = [next(j for j, x in enumerate(row) if not f.is_zero(x)) for row in r.rows]
    free = [j for j in range(m.cols) if j not in pivots]
    vecs = []
    for j in free:
        v = [f.zero] * m.cols
        v[j] = f.one
        for row, p in zip(r.rows, pivots):
            v[p] = f.neg(row[j])
        vecs.append(v)
    return Subspace(f, m.cols, vecs)


def kernel_of_functional(field: Field, values: Sequence) -> Subspace:
    """Kernel of a linear functional given by its values on the basis.

    Built directly in canonical form (pivots at every column except the last
    one where the functional is nonzero), so it stays cheap at dimensions
    where generic elimination would not.
    """
    vals = list(values)
    n = len(vals)
    nonzero = [j for j, c in enumerate(vals) if not field.is_zero(c)]
    if not nonzero:
        return Subspace.full(field, n)
    jlast = nonzero[-1]
    inv = field.inv(vals[jlast])
    rows = []
    for j in range(n):
        if j == jlast:
            continue
        row = [field.zero] * n
        row[j] = field.one
        if not field.is_zero(vals[j]):
            row[jlast] = field.neg(field.mul(vals[j], inv))
        rows.append(row)
    return Subspace(field, n, rows, _trusted=True)
