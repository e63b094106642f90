"""Dense exact matrices over a RingDescriptor.

Matrices are immutable; entries are stored row-major as a tuple of tuples of
normalized ring elements.  Products over the modular rings are dispatched to
the kernel backend (compiled if available) when the modulus fits a machine
word.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rings import RingDescriptor
from . import _kernels

_WORD_LIMIT = 1 << 31


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: RingDescriptor, rows: Iterable[Sequence], ncols: int | None = None):
        norm = ring.normalize
        data = tuple(tuple(norm(x) for x in row) for row in rows)
        self.ring = ring
        self.rows = data
        self.nrows = len(data)
        if data:
            self.ncols = len(data[0])
            if any(len(r) != self.ncols for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols mismatch")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zeros(ring: RingDescriptor, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero
        return Matrix(ring, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(ring: RingDescriptor, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return Matrix(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_cols(ring: RingDescriptor, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs explicit nrows")
            return Matrix(ring, [[] for _ in range(nrows)], 0)
        nrows = len(cols[0])
        return Matrix(ring, [[cols[j][i] for j in range(len(cols))] for i in range(nrows)], len(cols))

    @staticmethod
    def row_vector(ring: RingDescriptor, entries: Sequence) -> "Matrix":
        return Matrix(ring, [list(entries)], len(entries))

    @staticmethod
    def col_vector(ring: RingDescriptor, entries: Sequence) -> "Matrix":
        return Matrix(ring, [[x] for x in entries], 1)

    # -- basic access --------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for r in self.rows for x in r)

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        add = self.ring.add
        return Matrix(self.ring,
                      [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        sub = self.ring.sub
        return Matrix(self.ring,
                      [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self) -> "Matrix":
        neg = self.ring.neg
        return Matrix(self.ring, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        ring = self.ring
        c = ring.normalize(c)
        mul = ring.mul
        return Matrix(ring, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ring = self.ring
        if ring != other.ring:
            raise ValueError("ring mismatch")
        if self.ncols == 0 or self.nrows == 0 or other.ncols == 0:
            return Matrix.zeros(ring, self.nrows, other.ncols)
        if ring.is_modular and ring.modulus < _WORD_LIMIT:
            data = _kernels.matmul_mod([list(r) for r in self.rows],
                                       [list(r) for r in other.rows],
                                       ring.modulus)
            return Matrix(ring, data, other.ncols)
        bt = list(zip(*other.rows))  # columns of other
        if ring.kind in ("Q", "Z"):
            out = [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows]
        else:
            n = ring.modulus
            out = [[sum(a * b for a, b in zip(row, col)) % n for col in bt] for row in self.rows]
        return Matrix(ring, out, other.ncols)

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix(self.ring, [[] for _ in range(self.ncols)], 0)
        return Matrix(self.ring, list(zip(*self.rows)), self.nrows)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; block (i,k) x (j,l) entry is a[i,j]*b[k,l].

        Index convention everywhere in this package: the flat index of basis
        vector e_i (x) e_k is i * (cols of the right factor) + k, i.e. the left
        factor is the major index.
        """
        ring = self.ring
        mul = ring.mul
        out = []
        for i in range(self.nrows):
            arow = self.rows[i]
            for k in range(other.nrows):
                brow = other.rows[k]
                out.append([mul(a, b) for a in arow for b in brow])
        return Matrix(ring, out, self.ncols * other.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack: row count mismatch")
        return Matrix(self.ring, [ra + rb for ra, rb in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("vstack: column count mismatch")
        return Matrix(self.ring, self.rows + other.rows, self.ncols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, [[self.rows[i][j] for j in col_idx] for i in row_idx],
                      len(col_idx))

    # -- misc ---------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape or self.ring != other.ring:
            raise ValueError(f"shape/ring mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.ring, self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix({self.ring}, shape={self.shape})"
        body = "; ".join(" ".join(self.ring.element_to_string(x) for x in r) for r in self.rows)
        return f"Matrix({self.ring}, [{body}])"


def hstack_all(mats: Sequence[Matrix]) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


def vstack_all(mats: Sequence[Matrix]) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.vstack(m)
    return out
