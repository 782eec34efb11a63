"""Exact dense linear algebra over GF(q).

Matrices are immutable row-major tuples of integer element codes.
Elimination uses first-nonzero pivoting; since arithmetic is exact there
is no pivot-magnitude heuristic, and every operation is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from lrcgeom.galois import GF


@dataclass(frozen=True)
class MatGF:
    """Dense matrix over a finite field; `rows` holds element codes."""

    field: GF
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        q = self.field.q
        width = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            for e in r:
                if not 0 <= e < q:
                    raise ValueError(f"entry {e} out of range for {self.field!r}")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "MatGF":
        return MatGF(self.field, tuple(zip(*self.rows)) if self.rows else ())


def mat(field: GF, rows: Iterable[Iterable[int]]) -> MatGF:
    return MatGF(field, tuple(tuple(r) for r in rows))


def mat_from_cols(field: GF, cols: Iterable[Iterable[int]]) -> MatGF:
    cols = [tuple(c) for c in cols]
    return MatGF(field, tuple(zip(*cols)) if cols else ())


def identity(field: GF, n: int) -> MatGF:
    return MatGF(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def zeros(field: GF, nrows: int, ncols: int) -> MatGF:
    return MatGF(field, tuple((0,) * ncols for _ in range(nrows)))


def mat_vec(M: MatGF, v: Sequence[int]) -> tuple[int, ...]:
    f = M.field
    if len(v) != M.ncols:
        raise ValueError("dimension mismatch")
    out = []
    for row in M.rows:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_mat(v: Sequence[int], M: MatGF) -> tuple[int, ...]:
    return mat_vec(M.transpose(), v)


def mat_mul(A: MatGF, B: MatGF) -> MatGF:
    if A.field != B.field:
        raise ValueError("mixed fields")
    if A.ncols != B.nrows:
        raise ValueError("dimension mismatch")
    Bt = B.transpose()
    f = A.field
    rows = []
    for ra in A.rows:
        row = []
        for cb in Bt.rows:
            acc = 0
            for a, b in zip(ra, cb):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            row.append(acc)
        rows.append(tuple(row))
    return MatGF(A.field, tuple(rows))


def _rref_rows(field: GF, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            irow = field.mul_row(inv)
            rows[r] = [irow[x] for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                crow = field.mul_row(rows[i][c])
                sub = field.sub
                rows[i] = [sub(x, crow[y]) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank_rref(M: MatGF) -> tuple[int, MatGF]:
    """Rank and reduced row echelon form (pivot entries 1, pivots increasing)."""
    rows, pivots = _rref_rows(M.field, [list(r) for r in M.rows])
    return len(pivots), MatGF(M.field, tuple(tuple(r) for r in rows))


def rank(M: MatGF) -> int:
    elim = Eliminator(M.field, M.nrows)
    r = 0
    for j in range(M.ncols):
        if elim.push(M.col(j)):
            r += 1
    return r


def rref_basis(M: MatGF) -> tuple[tuple[int, ...], ...]:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    r, R = rank_rref(M)
    return R.rows[:r]


def columns_independent(M: MatGF, idx: Sequence[int]) -> bool:
    """True iff the selected columns have rank len(idx)."""
    cols = []
    for j in idx:
        if not 0 <= j < M.ncols:
            raise IndexError(f"column index {j} out of range")
        cols.append(M.col(j))
    elim = Eliminator(M.field, M.nrows)
    return all(elim.push(c) for c in cols)


@dataclass(frozen=True)
class LinearSolution:
    """A particular solution together with a kernel basis."""

    x: tuple[int, ...]
    kernel: MatGF


def solve(M: MatGF, b: Sequence[int]) -> Optional[LinearSolution]:
    """Solve M x = b; returns None when the system is inconsistent.

    The particular solution sets all free variables to 0; the kernel basis
    rows are ordered by increasing free column.
    """
    if len(b) != M.nrows:
        raise ValueError("dimension mismatch")
    f = M.field
    aug = [list(r) + [bv] for r, bv in zip(M.rows, b)]
    if not aug:
        return LinearSolution(x=(), kernel=kernel_basis(M))
    rows, pivots = _rref_rows(f, aug)
    n = M.ncols
    if n in pivots:
        return None
    x = [0] * n
    for r_i, c in enumerate(pivots):
        x[c] = rows[r_i][n]
    return LinearSolution(x=tuple(x), kernel=kernel_basis(M))


def kernel_basis(M: MatGF) -> MatGF:
    """Rows span {x : M x = 0}; row count = ncols - rank; deterministic."""
    f = M.field
    n = M.ncols
    if M.nrows == 0:
        return identity(f, n)
    rows, pivots = _rref_rows(f, [list(r) for r in M.rows])
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r_i, pc in enumerate(pivots):
            v[pc] = f.neg(rows[r_i][fc])
        basis.append(tuple(v))
    return MatGF(f, tuple(basis))


def det3(field: GF, a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """Determinant of the 3x3 matrix with rows a, b, c."""
    mul, sub, add = field.mul, field.sub, field.add
    m00 = sub(mul(b[1], c[2]), mul(b[2], c[1]))
    m01 = sub(mul(b[0], c[2]), mul(b[2], c[0]))
    m02 = sub(mul(b[0], c[1]), mul(b[1], c[0]))
    return add(sub(mul(a[0], m00), mul(a[1], m01)), mul(a[2], m02))


class Eliminator:
    """Incremental independence tester for vectors over one field.

    Maintains a row-echelon basis of the vectors pushed so far.  `push`
    reduces the new vector against the basis and reports whether it was
    independent (in which case it joins the basis).  `pop` undoes the most
    recent successful push, which makes depth-first subset enumeration
    cheap: earlier pivots are never modified by later pushes.
    """

    __slots__ = ("field", "nrows", "pivots", "_reduce")

    def __init__(self, field: GF, nrows: int):
        self.field = field
        self.nrows = nrows
        self.pivots: list[tuple[int, list[int]]] = []
        if field.p == 2:
            self._reduce = self._reduce_char2
        elif field.m == 1:
            self._reduce = self._reduce_prime
        else:
            self._reduce = self._reduce_generic

    @property
    def depth(self) -> int:
        return len(self.pivots)

    def _reduce_char2(self, v: list[int]) -> list[int]:
        mul_row = self.field.mul_row
        for pr, pv in self.pivots:
            c = v[pr]
            if c:
                row = mul_row(c)
                v = [x ^ row[y] for x, y in zip(v, pv)]
        return v

    def _reduce_prime(self, v: list[int]) -> list[int]:
        p = self.field.p
        mul_row = self.field.mul_row
        for pr, pv in self.pivots:
            c = v[pr]
            if c:
                row = mul_row(c)
                v = [(x - row[y]) % p for x, y in zip(v, pv)]
        return v

    def _reduce_generic(self, v: list[int]) -> list[int]:
        f = self.field
        for pr, pv in self.pivots:
            c = v[pr]
            if c:
                row = f.mul_row(c)
                v = [f.sub(x, row[y]) for x, y in zip(v, pv)]
        return v

    def push(self, col: Sequence[int]) -> bool:
        v = self._reduce(list(col))
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        if v[lead] != 1:
            irow = self.field.mul_row(self.field.inv(v[lead]))
            v = [irow[x] for x in v]
        self.pivots.append((lead, v))
        return True

    def pop(self) -> None:
        self.pivots.pop()

    def reset(self) -> None:
        self.pivots.clear()
