"""Locally repairable code objects with disjoint repair groups.

A code is represented by its parity-check matrix H in the block shape

    [ indicator rows of the repair groups ]
    [ 0 | v_1 | ... | v_r   per group     ]

where the upper rows are the locality rows (one all-ones indicator per
repair group) and the lower rows hold the per-group column vectors.  The
dimension k is always computed as n - rank(H), never trusted from input.

Minimum distance is established by column-subset independence checks on H
(d >= t+1 iff every t columns are independent), enumerated in
colexicographic order so the first dependent subset reported is
deterministic.  A full codeword-enumeration distance is provided as an
independent cross-check for small codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Sequence

from lrcgeom.galois import GF
from lrcgeom.linalg import (
    Eliminator,
    MatGF,
    columns_independent,
    kernel_basis,
    mat_vec,
    rank,
    solve,
    vec_mat,
)

DEFAULT_SUBSET_BUDGET = 10**7


class BudgetExceededError(Exception):
    """A subset-enumeration budget would be exceeded; nothing was computed."""

    def __init__(self, needed: int, budget: int, what: str = "subsets"):
        super().__init__(f"{needed} {what} exceed budget {budget}")
        self.needed = needed
        self.budget = budget


class RepairError(ValueError):
    """Local repair is impossible (another erasure in the same group)."""


class DecodeError(ValueError):
    """Erasure decoding is impossible or inconsistent."""


@dataclass(frozen=True)
class LrcCode:
    """An [n, k] code with locality r and disjoint repair groups."""

    field: GF
    n: int
    k: int
    r: int
    ell: int
    u: int
    H: MatGF
    repair_groups: tuple[tuple[int, ...], ...]
    verified_d: Optional[int] = None

    def with_verified_d(self, d: int) -> "LrcCode":
        return replace(self, verified_d=d)


def _assemble(field: GF, groups: Sequence[Sequence[Sequence[int]]], r: int, u: int) -> LrcCode:
    if not groups:
        raise ValueError("at least one repair group is required")
    ell = len(groups)
    n = ell * (r + 1)
    for gi, vecs in enumerate(groups):
        if len(vecs) != r:
            raise ValueError(f"group {gi}: expected {r} column vectors")
        elim = Eliminator(field, u)
        for v in vecs:
            if len(v) != u:
                raise ValueError(f"group {gi}: vectors must have length {u}")
            if not elim.push(list(v)):
                raise ValueError(f"group {gi}: column vectors are linearly dependent")
    rows: list[tuple[int, ...]] = []
    for i in range(ell):
        row = [0] * n
        for j in range(r + 1):
            row[i * (r + 1) + j] = 1
        rows.append(tuple(row))
    for t in range(u):
        row = [0] * n
        for gi, vecs in enumerate(groups):
            base = gi * (r + 1)
            for j in range(r):
                row[base + 1 + j] = vecs[j][t]
        rows.append(tuple(row))
    H = MatGF(field, tuple(rows))
    k = n - rank(H)
    repair_groups = tuple(tuple(range(i * (r + 1), (i + 1) * (r + 1))) for i in range(ell))
    return LrcCode(field=field, n=n, k=k, r=r, ell=ell, u=u, H=H, repair_groups=repair_groups)


def assemble_h_d6r3(field: GF, groups: Sequence[Sequence[Sequence[int]]]) -> LrcCode:
    """Assemble the r=3 shape: per group the lower rows are (0 | u | v | w).

    Each group supplies three independent vectors in F_q^3.
    """
    return _assemble(field, groups, r=3, u=3)


def assemble_h_d7r2(field: GF, groups: Sequence[Sequence[Sequence[int]]]) -> LrcCode:
    """Assemble the r=2 shape: per group the lower rows are (0 | u | v).

    Each group supplies two independent vectors in F_q^4.
    """
    return _assemble(field, groups, r=2, u=4)


def code_from_parts(
    field: GF,
    H: MatGF,
    repair_groups: Sequence[Sequence[int]],
    r: int,
) -> LrcCode:
    """Rebuild a code object from a parity-check matrix read from a file."""
    n = H.ncols
    ell = len(repair_groups)
    code = LrcCode(
        field=field,
        n=n,
        k=n - rank(H),
        r=r,
        ell=ell,
        u=H.nrows - ell,
        H=H,
        repair_groups=tuple(tuple(g) for g in repair_groups),
    )
    verify_locality(code)
    return code


# ----------------------------------------------------------------------
# Distance verification
# ----------------------------------------------------------------------

def first_dependent_subset(
    H: MatGF, t: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> Optional[tuple[int, ...]]:
    """Colexicographically first dependent t-subset of columns, or None.

    Enumerates by depth-first search choosing the largest index first;
    a dependent prefix short-circuits to its colex-least completion, so
    the certificate is deterministic.
    """
    n = H.ncols
    if t <= 0 or t > n:
        return None
    need = math.comb(n, t)
    if need > budget:
        raise BudgetExceededError(need, budget)
    cols = [list(H.col(j)) for j in range(n)]
    elim = Eliminator(H.field, H.nrows)
    chosen: list[int] = []

    def rec(cap: int, slots: int) -> Optional[tuple[int, ...]]:
        for e in range(slots - 1, cap):
            if elim.push(cols[e]):
                chosen.append(e)
                if slots > 1:
                    res = rec(e, slots - 1)
                    if res is not None:
                        return res
                chosen.pop()
                elim.pop()
            else:
                return tuple(sorted(chosen + [e] + list(range(slots - 1))))
        return None

    return rec(n, t)


def verify_distance_at_least(
    H: MatGF, delta: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> bool:
    """True iff every (delta-1)-subset of columns of H is independent."""
    if delta - 1 > H.ncols:
        raise ValueError("delta - 1 exceeds the number of columns")
    return first_dependent_subset(H, delta - 1, budget) is None


def min_distance_exact(code: LrcCode, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Smallest t such that some t columns of H are dependent."""
    if code.k == 0:
        raise ValueError("k = 0: the code has no nonzero codewords")
    h_rank = code.n - code.k
    for t in range(1, h_rank + 2):
        if first_dependent_subset(code.H, t, budget) is not None:
            return t
    raise AssertionError("unreachable: any rank+1 columns are dependent")


@lru_cache(maxsize=64)
def generator_matrix(code: LrcCode) -> MatGF:
    """k x n generator: the kernel basis of H (deterministic row order)."""
    return kernel_basis(code.H)


def min_distance_by_enumeration(code: LrcCode) -> int:
    """Minimum weight over all q^k codewords; independent distance oracle."""
    G = generator_matrix(code)
    k, n = G.nrows, G.ncols
    if k == 0:
        raise ValueError("k = 0: the code has no nonzero codewords")
    f = code.field
    q = f.q
    rows = [list(r) for r in G.rows]
    best = n + 1

    def rec(i: int, word: list[int]) -> None:
        nonlocal best
        if i == k:
            w = sum(1 for x in word if x)
            if 0 < w < best:
                best = w
            return
        rec(i + 1, word)
        row = rows[i]
        add = f.add
        for c in range(1, q):
            crow = f.mul_row(c)
            rec(i + 1, [add(x, crow[y]) for x, y in zip(word, row)])

    rec(0, [0] * n)
    return best


# ----------------------------------------------------------------------
# Locality and optimality
# ----------------------------------------------------------------------

def verify_locality(code: LrcCode) -> int:
    """Check the repair-group structure of H and return the locality r."""
    n, r = code.n, code.r
    seen: set[int] = set()
    for g in code.repair_groups:
        if len(g) != r + 1:
            raise ValueError(f"repair group {g} does not have size r+1 = {r + 1}")
        for pos in g:
            if not 0 <= pos < n or pos in seen:
                raise ValueError("repair groups must partition the coordinates")
            seen.add(pos)
    if len(seen) != n:
        raise ValueError("repair groups must cover all coordinates")
    for i, g in enumerate(code.repair_groups):
        row = code.H.row(i)
        gset = set(g)
        for j, x in enumerate(row):
            if (j in gset) != (x == 1) or (j not in gset and x != 0):
                raise ValueError(f"H row {i} is not the indicator of group {g}")
    return r


@dataclass(frozen=True)
class SingletonReport:
    """Optimality verdict for given (n, k, d, r) with disjoint groups."""

    n: int
    k: int
    d: int
    r: int
    verdict: str  # "optimal" | "not-optimal" | "excluded-by-remark"
    distance_bound_met: bool  # d == n - k - ceil(k/r) + 2
    redundancy_identity_met: bool  # n - k == ell + d - 2 - floor((d-2)/(r+1))
    remark_applies: bool  # d - 2 == r (mod r+1): the bound above is unreachable

    def __bool__(self) -> bool:
        return self.verdict == "optimal"


def check_singleton_optimal(n: int, k: int, d: int, r: int) -> SingletonReport:
    """Decide Singleton-optimality.

    For d - 2 != r (mod r+1) optimality is d = n - k - ceil(k/r) + 2.  In
    the excluded congruence class that equality is unachievable and the
    redundancy identity n - k = ell + d - 2 - floor((d-2)/(r+1)) takes its
    place; parameters claiming the plain equality there are reported as
    "excluded-by-remark".
    """
    if n % (r + 1):
        raise ValueError(f"(r+1) = {r + 1} must divide n = {n}")
    ell = n // (r + 1)
    eq1 = d == n - k - math.ceil(k / r) + 2
    eq3 = n - k == ell + d - 2 - (d - 2) // (r + 1)
    remark = (d - 2) % (r + 1) == r
    if remark and eq1:
        verdict = "excluded-by-remark"
    elif (remark and eq3) or (not remark and eq1):
        verdict = "optimal"
    else:
        verdict = "not-optimal"
    return SingletonReport(
        n=n, k=k, d=d, r=r,
        verdict=verdict,
        distance_bound_met=eq1,
        redundancy_identity_met=eq3,
        remark_applies=remark,
    )


# ----------------------------------------------------------------------
# Encode / repair / decode
# ----------------------------------------------------------------------

def encode(code: LrcCode, message: Sequence[int]) -> tuple[int, ...]:
    """Encode a length-k message with the kernel-basis generator matrix."""
    G = generator_matrix(code)
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k = {code.k}")
    return vec_mat(message, G)


def group_of(code: LrcCode, pos: int) -> tuple[int, ...]:
    for g in code.repair_groups:
        if pos in g:
            return g
    raise ValueError(f"position {pos} out of range")


def local_repair(code: LrcCode, word: Sequence[Optional[int]], pos: int) -> int:
    """Recover the symbol at `pos` from the r other symbols of its group.

    The locality row sums the group to zero, so the missing symbol is the
    negated sum of the rest; exactly r symbols are read.
    """
    g = group_of(code, pos)
    f = code.field
    acc = 0
    for j in g:
        if j == pos:
            continue
        x = word[j]
        if x is None:
            raise RepairError(f"group {g} has another erasure at {j}")
        acc = f.add(acc, x)
    return f.neg(acc)


def erasure_decode(
    code: LrcCode, word: Sequence[Optional[int]], erasures: Sequence[int]
) -> tuple[int, ...]:
    """Recover all erased symbols by solving H_E x_E = -H_rest x_rest.

    Requires the erased columns of H to be independent (always true when
    len(erasures) <= d - 1).
    """
    E = sorted(set(erasures))
    H, f = code.H, code.field
    if not columns_independent(H, E):
        raise DecodeError(f"erased columns {E} are dependent; cannot decode")
    eset = set(E)
    b = [0] * H.nrows
    for j in range(code.n):
        if j in eset:
            continue
        x = word[j]
        if x is None:
            raise DecodeError(f"position {j} is erased but not listed")
        if x:
            col = H.col(j)
            b = [f.add(acc, f.mul(h, x)) for acc, h in zip(b, col)]
    b = [f.neg(x) for x in b]
    sub = MatGF(f, tuple(tuple(row[j] for j in E) for row in H.rows))
    sol = solve(sub, b)
    if sol is None:
        raise DecodeError("inconsistent word: not correctable by erasure decoding")
    out = list(word)
    for j, x in zip(E, sol.x):
        out[j] = x
    return tuple(out)  # type: ignore[arg-type]
