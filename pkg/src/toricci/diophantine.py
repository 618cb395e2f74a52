"""Nonnegative-integer feasibility for column configurations.

Membership of a vector in the semigroup spanned by the columns is decided
by a depth-first enumeration with per-coordinate pruning; the returned
certificate is always the lexicographically smallest coefficient vector,
which makes golden tests reproducible.  On top of that sit the scalar
proxy minimum computed inside a proportionality class and the augmented
system that certifies when the proxy is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InternalInvariantError, ValidationError

Vector = tuple[int, ...]
Certificate = tuple[int, ...]


def _search(
    columns: Sequence[Vector],
    target: Sequence[int],
    caps: Optional[Sequence[Optional[int]]] = None,
) -> Optional[list[int]]:
    """Lexicographically smallest x >= 0 with sum x_j * col_j = target."""
    k = len(columns)
    supports = [tuple(r for r, e in enumerate(col) if e) for col in columns]
    # rows reachable by the remaining columns, as a bitmask per suffix
    suffix = [0] * (k + 1)
    for idx in range(k - 1, -1, -1):
        mask = suffix[idx + 1]
        for r in supports[idx]:
            mask |= 1 << r
        suffix[idx] = mask
    sol = [0] * k

    def rec(idx: int, residual: list[int]) -> bool:
        live = 0
        for r, v in enumerate(residual):
            if v:
                live |= 1 << r
        if not live:
            for t in range(idx, k):
                sol[t] = 0
            return True
        if idx == k or (live & ~suffix[idx]):
            return False
        col = columns[idx]
        rows = supports[idx]
        if not rows:
            sol[idx] = 0
            return rec(idx + 1, residual)
        bound = min(residual[r] // col[r] for r in rows)
        if caps is not None and caps[idx] is not None:
            bound = min(bound, caps[idx])
        if bound < 0:
            return False
        res = list(residual)
        x = 0
        while True:
            if rec(idx + 1, res):
                sol[idx] = x
                return True
            if x == bound:
                return False
            x += 1
            for r in rows:
                res[r] -= col[r]

    if rec(0, [int(t) for t in target]):
        return sol
    return None


def semigroup_member(b: Sequence[int], vectors: Sequence[Vector]) -> Optional[Certificate]:
    """Certificate x in N^n with sum x_j a_j = b, or None if b is outside.

    The certificate is the lexicographically smallest one, columns taken
    in input order.
    """
    if not vectors:
        raise ValidationError("empty configuration")
    if len(b) != len(vectors[0]):
        raise ValidationError("target dimension does not match configuration")
    if any(x < 0 for x in b):
        raise ValidationError("target must be componentwise nonnegative")
    sol = _search(list(vectors), b)
    return tuple(sol) if sol is not None else None


def semigroup_member_restricted(
    b: Sequence[int],
    vectors: Sequence[Vector],
    allowed: Iterable[int],
) -> Optional[Certificate]:
    """As semigroup_member, with columns outside `allowed` pinned to zero.

    `allowed` holds positions into the configuration (0-based).  The
    returned certificate still has full length n.
    """
    allowed_set = set(allowed)
    if any(i < 0 or i >= len(vectors) for i in allowed_set):
        raise ValidationError("allowed set contains an out-of-range column index")
    if any(x < 0 for x in b):
        raise ValidationError("target must be componentwise nonnegative")
    positions = [i for i in range(len(vectors)) if i in allowed_set]
    if not positions:
        return tuple([0] * len(vectors)) if not any(b) else None
    sol = _search([vectors[i] for i in positions], b)
    if sol is None:
        return None
    full = [0] * len(vectors)
    for i, x in zip(positions, sol):
        full[i] = x
    return tuple(full)


@dataclass(frozen=True)
class MBarResult:
    """Scalar upper proxy for the critical exponent of one column.

    value is None when the column has no proportional partner, in which
    case it can never take part in an equal-product pair and no exponent
    is needed for it.  confirmed_exact means the proxy provably equals
    the true minimum.
    """

    value: Optional[int]
    confirmed_exact: bool

    @property
    def unmatchable(self) -> bool:
        return self.value is None or not self.confirmed_exact


def proportional(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether a = lambda * b for some positive rational lambda."""
    if len(a) != len(b):
        return False
    k = next((i for i, x in enumerate(a) if x), None)
    if k is None or b[k] == 0:
        return False
    p, q = a[k], b[k]
    return all(x * q == y * p for x, y in zip(a, b))


def _scalar_min_multiple(c: int, coins: Sequence[int]) -> int:
    """min b >= 1 with b*c in the numerical semigroup spanned by coins."""
    g = 0
    for x in coins:
        g = gcd(g, x)
    step = g // gcd(g, c)
    # b*c/g beyond the Frobenius number of the reduced coins is always
    # reachable, so scanning multiples of `step` up to a growing bound
    # terminates.
    bound = max(coins) * max(coins) // (g * g) + max(coins) + c
    for _ in range(64):
        reach = 1
        mask = (1 << (bound + 1)) - 1
        for coin in coins:
            shift = coin
            while shift <= bound:
                reach |= (reach << shift) & mask
                shift <<= 1
        b = step
        while b * c <= bound:
            if (reach >> (b * c)) & 1:
                return b
            b += step
        bound *= 2
    raise InternalInvariantError("scalar minimum search failed to converge")


def m_bar(i: int, vectors: Sequence[Vector]) -> MBarResult:
    """Proxy minimum for column i, computed inside its proportionality class.

    The caller is responsible for only asking about columns that lie in
    the cone of the remaining ones; the proxy itself is well defined (or
    unmatchable) regardless.
    """
    if i < 0 or i >= len(vectors):
        raise ValidationError("column index out of range")
    v = vectors[i]
    partners = [w for j, w in enumerate(vectors) if j != i and proportional(w, v)]
    if not partners:
        return MBarResult(None, False)
    k = next(r for r, x in enumerate(v) if x)
    value = _scalar_min_multiple(v[k], [w[k] for w in partners])
    if value == 1:
        return MBarResult(1, True)
    return MBarResult(value, confirm_exact(i, vectors, value))


def confirm_exact(i: int, vectors: Sequence[Vector], mbar: int) -> bool:
    """Whether the proxy value mbar is the true minimum for column i.

    True iff the only nonnegative solution of sum x_j a_j = (mbar-1) a_i
    is the trivial x_i = mbar - 1; decided by capping x_i at mbar - 2 and
    testing feasibility of the remaining system.
    """
    if mbar < 2:
        raise ValidationError("confirmation is only defined for mbar >= 2")
    if i < 0 or i >= len(vectors):
        raise ValidationError("column index out of range")
    target = tuple(x * (mbar - 1) for x in vectors[i])
    caps: list[Optional[int]] = [None] * len(vectors)
    caps[i] = mbar - 2
    return _search(list(vectors), target, caps) is None
