"""Exact integer and rational linear algebra.

Everything here runs over arbitrary-precision integers (and Fractions for
the one LP-based predicate); no floating point anywhere.  The module
provides Hermite and Smith normal forms, determinant divisors, torsion
orders of cokernels, integer linear solving, and rational span / cone
membership for column configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Sequence

from .errors import InternalInvariantError, ValidationError

Vector = tuple[int, ...]


class IntMatrix:
    """Dense matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValidationError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValidationError("ragged matrix")
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise ValidationError("need at least one column")
        m = len(columns[0])
        return cls([[col[r] for col in columns] for r in range(m)])

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError("dimension mismatch in matrix product")
        ot = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class SnfResult:
    """Rank and invariant factors d_1 | d_2 | ... | d_r of a matrix."""

    rank: int
    invariant_factors: tuple[int, ...]


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns (h, u) with h = m @ u and u unimodular.  h is in column
    echelon form: pivot rows strictly increase left to right, pivots are
    positive, entries left of a pivot in its row lie in [0, pivot), and
    zero columns are pushed to the right.  The form is canonical, so the
    output is deterministic.
    """
    a = [list(col) for col in m.columns()]
    n = m.cols
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    pivot = 0
    for r in range(m.rows):
        if pivot >= n:
            break
        while True:
            cand = [j for j in range(pivot, n) if a[j][r]]
            if not cand:
                break
            jstar = min(cand, key=lambda j: (abs(a[j][r]), j))
            if jstar != pivot:
                a[pivot], a[jstar] = a[jstar], a[pivot]
                u[pivot], u[jstar] = u[jstar], u[pivot]
            p = a[pivot][r]
            clean = True
            for j in range(pivot + 1, n):
                if a[j][r]:
                    q = a[j][r] // p
                    if q:
                        a[j] = [x - q * y for x, y in zip(a[j], a[pivot])]
                        u[j] = [x - q * y for x, y in zip(u[j], u[pivot])]
                    if a[j][r]:
                        clean = False
            if clean:
                break
        if pivot < n and a[pivot][r]:
            if a[pivot][r] < 0:
                a[pivot] = [-x for x in a[pivot]]
                u[pivot] = [-x for x in u[pivot]]
            p = a[pivot][r]
            for j in range(pivot):
                q = a[j][r] // p
                if q:
                    a[j] = [x - q * y for x, y in zip(a[j], a[pivot])]
                    u[j] = [x - q * y for x, y in zip(u[j], u[pivot])]
            pivot += 1
    h = IntMatrix.from_columns(a)
    return h, IntMatrix.from_columns(u)


def snf(m: IntMatrix) -> SnfResult:
    """Invariant factors via alternating row/column reduction.

    Pivots are chosen deterministically: smallest nonzero absolute value,
    ties broken by lowest (row, column) index.
    """
    a = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    factors: list[int] = []
    k = 0
    while k < min(nrows, ncols):
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        a[k], a[bi] = a[bi], a[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
        while True:
            p = a[k][k]
            dirty = False
            for i in range(k + 1, nrows):
                if a[i][k]:
                    q = a[i][k] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        dirty = True
                        break
            if dirty:
                continue
            p = a[k][k]
            for j in range(k + 1, ncols):
                if a[k][j]:
                    q = a[k][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[k]
                    if a[k][j]:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        dirty = True
                        break
            if dirty:
                continue
            if any(a[i][k] for i in range(k + 1, nrows)):
                continue
            p = a[k][k]
            offender = None
            for i in range(k + 1, nrows):
                for j in range(k + 1, ncols):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
        factors.append(abs(a[k][k]))
        k += 1
    for d, e in zip(factors, factors[1:]):
        if e % d:
            raise InternalInvariantError("invariant factor chain broken")
    return SnfResult(rank=len(factors), invariant_factors=tuple(factors))


def delta_t(m: IntMatrix, t: int) -> Optional[int]:
    """gcd of all nonzero t x t minors, or None when every such minor is 0.

    Computed as d_1 * ... * d_t from the Smith form, which equals the
    minor gcd whenever t <= rank.
    """
    if t < 1 or t > min(m.rows, m.cols):
        raise ValidationError(f"t={t} out of range for {m.rows}x{m.cols} matrix")
    s = snf(m)
    if t > s.rank:
        return None
    return prod(s.invariant_factors[:t])


def torsion_order(m: IntMatrix) -> int:
    """Order of the torsion subgroup of Z^rows / (column span of m)."""
    return prod(snf(m).invariant_factors)


def card_group(m: IntMatrix) -> Optional[int]:
    """Order of Z^rows modulo the column span, or None when infinite."""
    s = snf(m)
    if s.rank < m.rows:
        return None
    return prod(s.invariant_factors)


def solve_integer(m: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """Some integer solution x of m @ x = b, or None when none exists."""
    if len(b) != m.rows:
        raise ValidationError("right-hand side has wrong dimension")
    h, u = hnf(m)
    residual = [int(x) for x in b]
    y = [0] * m.cols
    for j in range(m.cols):
        col = h.column(j)
        r = next((i for i, v in enumerate(col) if v), None)
        if r is None:
            break
        if residual[r] % col[r]:
            return None
        q = residual[r] // col[r]
        y[j] = q
        if q:
            for i in range(r, m.rows):
                residual[i] -= q * col[i]
    if any(residual):
        return None
    ucols = u.columns()
    x = [0] * m.cols
    for j, q in enumerate(y):
        if q:
            col = ucols[j]
            for i in range(m.cols):
                x[i] += q * col[i]
    return tuple(x)


def rank_of_columns(columns: Sequence[Sequence[int]]) -> int:
    """Rank of the matrix whose columns are the given vectors."""
    if not columns:
        return 0
    m = len(columns[0])
    rows = [[col[r] for col in columns] for r in range(m)]
    return _rank_rows(rows)


def _rank_rows(rows: list[list[int]]) -> int:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [pv * x - f * y for x, y in zip(rows[i], rows[r])]
                g = 0
                for x in rows[i]:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    rows[i] = [x // g for x in rows[i]]
        r += 1
        if r == nrows:
            break
    return r


def in_q_span(v: Sequence[int], vectors: Sequence[Sequence[int]]) -> bool:
    """Whether v lies in the rational span of the given vectors."""
    if not any(v):
        return True
    if not vectors:
        return False
    return rank_of_columns(vectors) == rank_of_columns(list(vectors) + [tuple(v)])


def _torsion_of_columns(columns: list) -> int:
    # For one or two rows the torsion order is a plain minor gcd
    # (d_1 ... d_r equals the gcd of the r x r minors); the general case
    # goes through the Smith form.
    m = len(columns[0])
    if m == 1:
        g = 0
        for c in columns:
            g = gcd(g, c[0])
        return g if g else 1
    if m == 2:
        g1 = 0
        for a, b in columns:
            g1 = gcd(gcd(g1, a), b)
        if g1 == 0:
            return 1
        d2 = 0
        for i, (a, b) in enumerate(columns):
            for c, d in columns[i + 1 :]:
                d2 = gcd(d2, a * d - b * c)
                if d2 == 1:
                    return 1
        return d2 if d2 else g1
    return torsion_order(IntMatrix.from_columns(columns))


def min_multiple_in_zspan(
    v: Sequence[int],
    vectors: Sequence[Sequence[int]],
    *,
    assume_in_span: bool = False,
) -> int:
    """Smallest B >= 1 with B*v in the integer span of the vectors.

    Requires v to lie in the rational span (callers that have already
    checked can pass assume_in_span=True).  Computed as the ratio of the
    torsion orders of the cokernels without and with v adjoined.
    """
    if not assume_in_span and not in_q_span(v, vectors):
        raise ValidationError("vector is not in the rational span of the configuration")
    if not any(v):
        return 1
    without = _torsion_of_columns(list(vectors))
    with_v = _torsion_of_columns(list(vectors) + [tuple(v)])
    if without % with_v:
        raise InternalInvariantError("torsion orders do not divide")
    return without // with_v


def in_cone(v: Sequence[int], vectors: Sequence[Sequence[int]]) -> bool:
    """Whether v is a nonnegative rational combination of the vectors.

    The generators live in N^m, so for m <= 2 the cone is an explicit
    sector and membership is a pair of integer cross products.  Higher
    dimensions run an exact phase-one simplex (Fractions, Bland's rule).
    """
    if not any(v):
        return True
    if not vectors:
        return False
    m = len(v)
    if m == 1:
        return v[0] >= 0
    if m == 2:
        return _in_sector(tuple(v), vectors)
    return _lp_feasible(tuple(v), vectors)


def _in_sector(v: Vector, vectors: Sequence[Sequence[int]]) -> bool:
    # First-quadrant generators span the sector between their extreme rays.
    if v[0] < 0 or v[1] < 0:
        return False
    lo = hi = vectors[0]
    for s in vectors[1:]:
        if s[0] * lo[1] - s[1] * lo[0] > 0:
            lo = s
        if s[0] * hi[1] - s[1] * hi[0] < 0:
            hi = s
    return lo[0] * v[1] - lo[1] * v[0] >= 0 and v[0] * hi[1] - v[1] * hi[0] >= 0


def _lp_feasible(v: Vector, vectors: Sequence[Sequence[int]]) -> bool:
    # Phase-one simplex for {sum_j x_j s_j = v, x >= 0}: minimize the sum
    # of artificial variables; feasible iff the optimum is zero.
    m = len(v)
    n = len(vectors)
    zero = Fraction(0)
    one = Fraction(1)
    tab = []
    for r in range(m):
        row = [Fraction(vectors[j][r]) for j in range(n)]
        row += [one if i == r else zero for i in range(m)]
        row.append(Fraction(v[r]))
        tab.append(row)
    # Reduced-cost row z_j - c_j for minimizing the artificial total; the
    # basic artificial columns start at zero as required.
    obj = [zero] * (n + m + 1)
    for row in tab:
        for j in range(n):
            obj[j] += row[j]
        obj[-1] += row[-1]
    # artificial columns: z_j = 1 (own row), c_j = 1 -> reduced cost 0
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            coef = tab[r][enter]
            if coef > 0:
                ratio = tab[r][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            raise InternalInvariantError("phase-one objective unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for r in range(m):
            if r != leave and tab[r][enter]:
                f = tab[r][enter]
                tab[r] = [x - f * y for x, y in zip(tab[r], tab[leave])]
        f = obj[enter]
        if f:
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    return obj[-1] == 0
