"""Coalgebras over a commutative base ring, their structure checks, duals
and standard constructions.

A coalgebra with free carrier of rank d is stored by its structure matrices:
delta is the d^2 x d matrix whose column j holds the coordinates of the
comultiplication of the j-th basis vector in the tensor basis (flat index
i*d + k for c_i (x) c_k, left factor major), epsilon is the 1 x d counit row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix
from .rings import RingDescriptor


@dataclass(frozen=True)
class Coalgebra:
    ring: RingDescriptor
    dim: int
    delta: Matrix  # dim^2 x dim
    epsilon: Matrix  # 1 x dim
    name: str = ""

    def __post_init__(self):
        d = self.dim
        if self.delta.shape != (d * d, d):
            raise ValueError(f"delta must be {d * d} x {d}, got {self.delta.shape}")
        if self.epsilon.shape != (1, d):
            raise ValueError(f"epsilon must be 1 x {d}, got {self.epsilon.shape}")
        if self.delta.ring != self.ring or self.epsilon.ring != self.ring:
            raise ValueError("structure matrices must live over the base ring")

    def __repr__(self) -> str:
        label = self.name or "coalgebra"
        return f"Coalgebra({label}, {self.ring}, dim={self.dim})"


@dataclass(frozen=True)
class Algebra:
    ring: RingDescriptor
    dim: int
    mult: Matrix  # dim x dim^2
    unit: Matrix  # dim x 1

    def multiply(self, x, y) -> tuple:
        col = Matrix.col_vector(self.ring, list(x)).kron(
            Matrix.col_vector(self.ring, list(y)))
        return (self.mult @ col).column(0)


@dataclass(frozen=True)
class LawCheck:
    law: str
    ok: bool
    column: int | None = None
    defect: tuple | None = None


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    checks: tuple[LawCheck, ...]

    def failed_laws(self) -> tuple[str, ...]:
        return tuple(c.law for c in self.checks if not c.ok)


def _compare(law: str, lhs: Matrix, rhs: Matrix) -> LawCheck:
    if lhs == rhs:
        return LawCheck(law, True)
    diff = lhs - rhs
    for j in range(diff.ncols):
        col = diff.column(j)
        if any(x != diff.ring.zero for x in col):
            return LawCheck(law, False, column=j, defect=col)
    return LawCheck(law, True)  # unreachable; shapes match and lhs != rhs


def check_coalgebra(c: Coalgebra) -> StructureReport:
    """Coassociativity and both counit laws, with a witness basis column and
    defect vector on failure."""
    ring, d = c.ring, c.dim
    eye = Matrix.identity(ring, d)
    coassoc = _compare(
        "coassociativity",
        c.delta.kron(eye) @ c.delta,
        eye.kron(c.delta) @ c.delta,
    )
    left_counit = _compare("left counit", c.epsilon.kron(eye) @ c.delta, eye)
    right_counit = _compare("right counit", eye.kron(c.epsilon) @ c.delta, eye)
    checks = (coassoc, left_counit, right_counit)
    return StructureReport(all(ch.ok for ch in checks), checks)


def check_algebra(a: Algebra) -> StructureReport:
    ring, d = a.ring, a.dim
    eye = Matrix.identity(ring, d)
    assoc = _compare(
        "associativity",
        a.mult @ a.mult.kron(eye),
        a.mult @ eye.kron(a.mult),
    )
    left_unit = _compare("left unit", a.mult @ a.unit.kron(eye), eye)
    right_unit = _compare("right unit", a.mult @ eye.kron(a.unit), eye)
    checks = (assoc, left_unit, right_unit)
    return StructureReport(all(ch.ok for ch in checks), checks)


def dual_algebra(c: Coalgebra) -> Algebra:
    """The convolution algebra C* on the dual basis: multiplication is the
    transpose of delta, the unit is the transpose of epsilon."""
    return Algebra(c.ring, c.dim, c.delta.T, c.epsilon.T)


def check_coalgebra_morphism(f: Matrix, dom: Coalgebra, cod: Coalgebra) -> StructureReport:
    """f is a cod.dim x dom.dim matrix; checks Delta f = (f (x) f) Delta and
    epsilon f = epsilon."""
    if f.shape != (cod.dim, dom.dim):
        raise ValueError(f"morphism must be {cod.dim} x {dom.dim}, got {f.shape}")
    comult = _compare("comultiplicativity", cod.delta @ f, f.kron(f) @ dom.delta)
    counit = _compare("counit", cod.epsilon @ f, dom.epsilon)
    checks = (comult, counit)
    return StructureReport(all(ch.ok for ch in checks), checks)


def grouplike_coalgebra(ring: RingDescriptor, d: int, name: str = "") -> Coalgebra:
    """Basis of grouplikes: Delta(c_j) = c_j (x) c_j, epsilon(c_j) = 1."""
    delta = Matrix.zeros(ring, d * d, d).rows
    rows = [list(r) for r in delta]
    for j in range(d):
        rows[j * d + j][j] = ring.one
    eps = Matrix(ring, [[ring.one] * d], d)
    return Coalgebra(ring, d, Matrix(ring, rows, d), eps, name or f"grouplike({d})")


def matrix_coalgebra(ring: RingDescriptor, n: int, name: str = "") -> Coalgebra:
    """Comatrix coalgebra on basis e_{ij} (flat index i*n + j):
    Delta(e_ij) = sum_k e_ik (x) e_kj, epsilon(e_ij) = [i == j]."""
    d = n * n
    rows = [[ring.zero] * d for _ in range(d * d)]
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k in range(n):
                a = i * n + k  # e_ik
                b = k * n + j  # e_kj
                rows[a * d + b][col] = ring.one
    eps = Matrix(ring, [[ring.one if i == j else ring.zero
                         for i in range(n) for j in range(n)]], d)
    return Coalgebra(ring, d, Matrix(ring, rows, d), eps, name or f"comatrix({n})")


def direct_sum_coalgebras(c1: Coalgebra, c2: Coalgebra, name: str = "") -> Coalgebra:
    if c1.ring != c2.ring:
        raise ValueError("ring mismatch")
    ring = c1.ring
    d1, d2 = c1.dim, c2.dim
    d = d1 + d2
    rows = [[ring.zero] * d for _ in range(d * d)]
    for j in range(d1):
        for i in range(d1):
            for k in range(d1):
                rows[i * d + k][j] = c1.delta[i * d1 + k, j]
    for j in range(d2):
        for i in range(d2):
            for k in range(d2):
                rows[(d1 + i) * d + (d1 + k)][d1 + j] = c2.delta[i * d2 + k, j]
    eps = Matrix(ring, [list(c1.epsilon.rows[0]) + list(c2.epsilon.rows[0])], d)
    return Coalgebra(ring, d, Matrix(ring, rows, d), eps,
                     name or f"{c1.name or 'C1'}(+){c2.name or 'C2'}")
