"""Independent verification of claimed generating sets.

A set of s binomials with coprime sides generates the lattice ideal of a
configuration exactly when the s x n matrix of exponent differences is
dominating (contains no square submatrix in which every row has both a
positive and a negative entry) and the gcd of its s x s minors is 1.
This check shares nothing with the solver except the normal-form
routines, so it closes the loop on every positive decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import exactlin
from .errors import ValidationError
from .toric import Binomial, Configuration, height, is_homogeneous


def exponent_matrix(gens: Sequence[Binomial]) -> exactlin.IntMatrix:
    """Rows alpha_i - beta_i of the (normalized) binomials."""
    if not gens:
        raise ValidationError("need at least one binomial")
    rows = []
    for g in gens:
        g = g.normalized()
        rows.append([a - b for a, b in zip(g.alpha, g.beta)])
    return exactlin.IntMatrix(rows)


def is_mixed(m: exactlin.IntMatrix) -> bool:
    """Every row contains a strictly positive and a strictly negative entry."""
    return all(
        any(x > 0 for x in row) and any(x < 0 for x in row) for row in m.entries
    )


def is_dominating(m: exactlin.IntMatrix) -> bool:
    """No square submatrix of m is mixed.

    Exhaustive search over row subsets; for each subset we try to pick
    equally many columns giving every chosen row a positive and a
    negative entry.  Only rows that are mixed in the full matrix can
    appear in a mixed submatrix, which prunes most of the space.
    """
    candidates = [
        i
        for i, row in enumerate(m.entries)
        if any(x > 0 for x in row) and any(x < 0 for x in row)
    ]
    for k in range(1, min(len(candidates), m.cols) + 1):
        for rows in combinations(candidates, k):
            if _mixed_square_exists(m, rows, k):
                return False
    return True


def _mixed_square_exists(m: exactlin.IntMatrix, rows: tuple[int, ...], k: int) -> bool:
    entries = m.entries
    cols = [c for c in range(m.cols) if any(entries[r][c] for r in rows)]

    def rec(start: int, picked: int, pos_missing: frozenset, neg_missing: frozenset) -> bool:
        if picked == k:
            return not pos_missing and not neg_missing
        if len(cols) - start < k - picked:
            return False
        remaining = cols[start:]
        for r in pos_missing:
            if all(entries[r][c] <= 0 for c in remaining):
                return False
        for r in neg_missing:
            if all(entries[r][c] >= 0 for c in remaining):
                return False
        for idx in range(start, len(cols)):
            c = cols[idx]
            np = frozenset(r for r in pos_missing if entries[r][c] <= 0)
            nn = frozenset(r for r in neg_missing if entries[r][c] >= 0)
            if rec(idx + 1, picked + 1, np, nn):
                return True
        return False

    full = frozenset(rows)
    return rec(0, 0, full, full)


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.valid


def verify_ci(config: Configuration, gens: Sequence[Binomial]) -> VerifyResult:
    """Check that gens is a generating set witnessing a complete intersection.

    Clauses, in order: every binomial is homogeneous for the
    configuration (after dividing out common support); the count equals
    the ideal height; the exponent matrix is dominating; the gcd of its
    maximal minors is 1.  The reason names the first failed clause.
    """
    for g in gens:
        if len(g.alpha) != config.n:
            raise ValidationError("binomial length does not match configuration")
        if not is_homogeneous(config, g.normalized()):
            return VerifyResult(False, "not-homogeneous")
    s = height(config)
    if len(gens) != s:
        return VerifyResult(False, "count")
    if s == 0:
        return VerifyResult(True)
    mat = exponent_matrix(gens)
    if not is_dominating(mat):
        return VerifyResult(False, "not-dominating")
    if exactlin.delta_t(mat, s) != 1:
        return VerifyResult(False, "delta")
    return VerifyResult(True)
