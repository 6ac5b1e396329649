"""Exact linear algebra over finite fields.

Matrices are lists of rows; entries are integer-encoded field elements.
Codes are always stored with their generator matrix in reduced row-echelon
form, so two codes are equal as sets exactly when their stored matrices are
equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FiniteField, SubfieldEmbedding


def rref(rows, fld: FiniteField):
    """Reduced row-echelon form. Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = fld.inv(rows[rank][col])
        if inv != 1:
            rows[rank] = [fld.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                prow = rows[rank]
                rows[r] = [fld.sub(v, fld.mul(c, w))
                           for v, w in zip(rows[r], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(rows, fld: FiniteField) -> int:
    return len(rref(rows, fld)[0])


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by its generator matrix in canonical RREF."""

    field: FiniteField
    n: int
    generators: tuple  # tuple of row tuples, reduced row-echelon form

    @property
    def k(self) -> int:
        return len(self.generators)

    def codeword(self, message) -> tuple:
        """Encode a message vector (length k) into a codeword."""
        fld = self.field
        out = [0] * self.n
        for coeff, row in zip(message, self.generators):
            if coeff:
                for i, v in enumerate(row):
                    if v:
                        out[i] = fld.add(out[i], fld.mul(coeff, v))
        return tuple(out)

    def contains(self, word) -> bool:
        return rank(list(self.generators) + [list(word)], self.field) == self.k


def row_space_basis(rows, fld: FiniteField, n: int | None = None) -> LinearCode:
    """Canonical code with the same row space as the given rows."""
    rows = [list(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("cannot infer length from an empty row list")
        n = len(rows[0])
    if n <= 0:
        raise ValueError("code length must be positive")
    if any(len(r) != n for r in rows):
        raise ValueError("rows have mismatched lengths")
    basis, _ = rref(rows, fld)
    return LinearCode(fld, n, tuple(tuple(r) for r in basis))


def kernel(code: LinearCode) -> LinearCode:
    """The dual code: all vectors orthogonal to every generator."""
    fld = code.field
    n = code.n
    basis, pivots = rref(code.generators, fld)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    out = []
    for fc in free_cols:
        vec = [0] * n
        vec[fc] = 1
        for row, pc in zip(basis, pivots):
            vec[pc] = fld.neg(row[fc])
        out.append(vec)
    return row_space_basis(out, fld, n)


def expand_to_subfield(rows, emb: SubfieldEmbedding):
    """Replace each big-field entry by its coordinate expansion.

    An r x n matrix over F_{t^m} becomes an r x (n*m) matrix over F_t, entry
    (i, j) expanding into columns j*m .. j*m + m - 1.
    """
    out = []
    for row in rows:
        new = []
        for v in row:
            new.extend(emb.decompose(v))
        out.append(new)
    return out


def matrix_product_is_zero(a_rows, b_rows, fld: FiniteField) -> bool:
    """Whether A * B^T = 0, i.e. every row of A is orthogonal to each of B."""
    for ra in a_rows:
        for rb in b_rows:
            acc = 0
            for x, y in zip(ra, rb):
                if x and y:
                    acc = fld.add(acc, fld.mul(x, y))
            if acc:
                return False
    return True
