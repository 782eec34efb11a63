"""Points, lines, planes, duality, spreads and sunflowers in PG(N,q), N in {2,3}.

Representations are canonical so that equality and set membership are
structural:

* a point is a coordinate tuple whose first nonzero entry is 1;
* a line (or plane) is the tuple of nonzero rows of the reduced row
  echelon form of any spanning set, which is the unique canonical basis
  of the subspace.

`PG` instances cache their point enumeration; the position of a point in
that lexicographic enumeration (its point index) is the deterministic
ordering used for every greedy tie-break downstream.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from lrcgeom.galois import GF
from lrcgeom.linalg import Eliminator, MatGF, _rref_rows, det3, kernel_basis, mat_from_cols

Point = tuple[int, ...]
Subspace = tuple[Point, ...]  # canonical RREF rows; len 2 = line, len 3 = plane


def canonical_point(field: GF, vec: Sequence[int]) -> Point:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((i for i, x in enumerate(vec) if x), None)
    if lead is None:
        raise ValueError("zero vector does not represent a point")
    if vec[lead] == 1:
        return tuple(vec)
    row = field.mul_row(field.inv(vec[lead]))
    return tuple(row[x] for x in vec)


def vec_add(field: GF, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: GF, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: GF, c: int, v: Sequence[int]) -> tuple[int, ...]:
    row = field.mul_row(c)
    return tuple(row[x] for x in v)


def _echelon(field: GF, vectors: Iterable[Sequence[int]]) -> Subspace:
    rows, pivots = _rref_rows(field, [list(v) for v in vectors])
    return tuple(tuple(r) for r in rows[: len(pivots)])


class PG:
    """The projective space PG(dim, q) over a fixed field, with caches."""

    def __init__(self, dim: int, field: GF):
        if dim not in (2, 3):
            raise ValueError("only PG(2,q) and PG(3,q) are supported")
        self.dim = dim
        self.field = field
        self._points: tuple[Point, ...] | None = None
        self._index: dict[Point, int] | None = None
        self._all_lines: tuple[Subspace, ...] | None = None
        self._spread: tuple[Subspace, ...] | None = None

    def __repr__(self) -> str:
        return f"PG({self.dim}, {self.field.q})"

    # -- points ---------------------------------------------------------

    @property
    def points(self) -> tuple[Point, ...]:
        if self._points is None:
            pts: list[Point] = []
            n = self.dim + 1
            q = self.field.q
            for lead in range(n):
                free = n - lead - 1
                for tail in itertools.product(range(q), repeat=free):
                    pts.append((0,) * lead + (1,) + tail)
            pts.sort()
            self._points = tuple(pts)
            self._index = {p: i for i, p in enumerate(pts)}
        return self._points

    def point_index(self, p: Point) -> int:
        self.points
        assert self._index is not None
        return self._index[p]

    def sort_points(self, pts: Iterable[Point]) -> list[Point]:
        return sorted(pts, key=self.point_index)

    # -- lines ----------------------------------------------------------

    def line_through(self, p: Point, q: Point) -> Subspace:
        if p == q:
            raise ValueError("two distinct points are required to span a line")
        basis = _echelon(self.field, [p, q])
        if len(basis) != 2:  # pragma: no cover - canonical points are distinct
            raise ValueError("points do not span a line")
        return basis

    def points_on_line(self, line: Subspace) -> tuple[Point, ...]:
        f = self.field
        b1, b2 = line
        pts = [canonical_point(f, b2)]
        for t in range(f.q):
            pts.append(canonical_point(f, vec_add(f, b1, vec_scale(f, t, b2))))
        return tuple(self.sort_points(pts))

    def point_on_subspace(self, p: Point, sub: Subspace) -> bool:
        f = self.field
        v = list(p)
        for row in sub:
            lead = next(i for i, x in enumerate(row) if x)
            c = v[lead]
            if c:
                crow = f.mul_row(c)
                v = [f.sub(x, crow[y]) for x, y in zip(v, row)]
        return not any(v)

    def meet(self, l1: Subspace, l2: Subspace):
        """Intersection of two lines: a Point, None (skew), or l1 if equal."""
        if l1 == l2:
            return l1
        f = self.field
        M = mat_from_cols(f, list(l1) + list(l2))
        ker = kernel_basis(M)
        if ker.nrows == 0:
            return None
        a, b = ker.rows[0][0], ker.rows[0][1]
        vec = vec_add(f, vec_scale(f, a, l1[0]), vec_scale(f, b, l1[1]))
        return canonical_point(f, vec)

    def collinear(self, p: Point, q: Point, r: Point) -> bool:
        if self.dim == 2:
            return det3(self.field, p, q, r) == 0
        elim = Eliminator(self.field, self.dim + 1)
        pushed = sum(elim.push(v) for v in (p, q, r))
        return pushed <= 2

    def all_lines(self) -> tuple[Subspace, ...]:
        if self._all_lines is None:
            seen: set[Subspace] = set()
            pts = self.points
            for i, p in enumerate(pts):
                for q in pts[i + 1:]:
                    seen.add(self.line_through(p, q))
            self._all_lines = tuple(sorted(seen))
        return self._all_lines

    def lines_through_point(self, p: Point) -> tuple[Subspace, ...]:
        seen: set[Subspace] = set()
        for q in self.points:
            if q != p:
                seen.add(self.line_through(p, q))
        return tuple(sorted(seen))

    # -- duality in the plane --------------------------------------------

    def dual_line_of_point(self, p: Point) -> Subspace:
        """The line {x : p . x = 0} dual to a point of PG(2,q)."""
        self._require_plane()
        M = MatGF(self.field, (tuple(p),))
        ker = kernel_basis(M)
        return _echelon(self.field, ker.rows)

    def dual_point_of_line(self, line: Subspace) -> Point:
        self._require_plane()
        M = MatGF(self.field, tuple(tuple(r) for r in line))
        ker = kernel_basis(M)
        return canonical_point(self.field, ker.rows[0])

    def _require_plane(self) -> None:
        if self.dim != 2:
            raise ValueError("duality is implemented for PG(2,q) only")

    # -- planes of PG(3,q) -------------------------------------------------

    def planes_through_line(self, line: Subspace) -> tuple[Subspace, ...]:
        """All q+1 planes containing the line: a maximal sunflower center."""
        if self.dim != 3:
            raise ValueError("planes live in PG(3,q)")
        seen: set[Subspace] = set()
        for p in self.points:
            if not self.point_on_subspace(p, line):
                seen.add(_echelon(self.field, list(line) + [p]))
        planes = tuple(sorted(seen))
        assert len(planes) == self.field.q + 1
        return planes

    def plane_points(self, plane: Subspace) -> tuple[Point, ...]:
        f = self.field
        r1, r2, r3 = plane
        pts = [canonical_point(f, r3)]
        for t in range(f.q):
            pts.append(canonical_point(f, vec_add(f, r2, vec_scale(f, t, r3))))
        for s in range(f.q):
            base = vec_add(f, r1, vec_scale(f, s, r2))
            for t in range(f.q):
                pts.append(canonical_point(f, vec_add(f, base, vec_scale(f, t, r3))))
        return tuple(self.sort_points(pts))

    def lines_in_plane_through(self, plane: Subspace, p: Point) -> tuple[Subspace, ...]:
        """The q+1 lines of a plane of PG(3,q) through a point of it."""
        seen: set[Subspace] = set()
        for x in self.plane_points(plane):
            if x != p:
                seen.add(self.line_through(p, x))
        return tuple(sorted(seen))

    # -- the regular spread -------------------------------------------------

    def regular_spread(self) -> tuple[Subspace, ...]:
        """q^2+1 pairwise disjoint lines partitioning the points of PG(3,q).

        F_q^4 is identified with E^2 for the quadratic extension
        E = F_q[t]/(t^2 + a t + b); the spread lines are the E-scalar
        classes of nonzero vectors, one per point of PG(1, q^2).  The
        extension modulus is the lexicographically first irreducible
        (a, b), so the construction is deterministic.
        """
        if self.dim != 3:
            raise ValueError("spreads of lines live in PG(3,q)")
        if self._spread is not None:
            return self._spread
        f = self.field
        a, b = _first_irreducible_quadratic(f)

        def emul(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
            x1, y1 = u
            x2, y2 = v
            yy = f.mul(y1, y2)
            re = f.sub(f.mul(x1, x2), f.mul(b, yy))
            im = f.sub(f.add(f.mul(x1, y2), f.mul(x2, y1)), f.mul(a, yy))
            return re, im

        t_elem = (0, 1)
        reps: list[tuple[tuple[int, int], tuple[int, int]]] = [((0, 0), (1, 0))]
        for y in range(f.q):
            for x in range(f.q):
                reps.append(((1, 0), (x, y)))
        lines = []
        for u, v in reps:
            v1 = u + v
            v2 = emul(t_elem, u) + emul(t_elem, v)
            lines.append(_echelon(f, [v1, v2]))
        assert len(set(lines)) == f.q**2 + 1
        self._spread = tuple(sorted(lines))
        return self._spread


def _first_irreducible_quadratic(field: GF) -> tuple[int, int]:
    """First (a, b) in code order with t^2 + a t + b irreducible over F_q."""
    for a in range(field.q):
        for b in range(field.q):
            if all(
                field.add(field.add(field.mul(x, x), field.mul(a, x)), b) != 0
                for x in range(field.q)
            ):
                return a, b
    raise AssertionError("no irreducible quadratic found")  # pragma: no cover


_SPACES: dict[tuple[int, GF], PG] = {}


def projective_space(dim: int, field: GF) -> PG:
    """Shared PG(dim, q) instance (enumerations are cached per space)."""
    key = (dim, field)
    space = _SPACES.get(key)
    if space is None:
        space = PG(dim, field)
        _SPACES[key] = space
    return space


def enumerate_points(dim: int, field: GF) -> tuple[Point, ...]:
    """Canonical points of PG(dim, q) in lexicographic coordinate order."""
    return projective_space(dim, field).points
