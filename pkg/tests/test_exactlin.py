"""Normal forms, torsion orders, and cone membership."""

from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from toricci import exactlin
from toricci.errors import ValidationError
from toricci.exactlin import (
    IntMatrix,
    card_group,
    delta_t,
    hnf,
    in_cone,
    in_q_span,
    min_multiple_in_zspan,
    rank_of_columns,
    snf,
    solve_integer,
    torsion_order,
)


def det_laplace(mat):
    """Independent determinant oracle (cofactor expansion)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j, v in enumerate(mat[0]):
        if v:
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            total += (-1) ** j * v * det_laplace(minor)
    return total


def minor_gcd(mat, t):
    """Independent oracle for the gcd of nonzero t x t minors."""
    g = 0
    for rs in combinations(range(len(mat)), t):
        for cs in combinations(range(len(mat[0])), t):
            g = gcd(g, det_laplace([[mat[r][c] for c in cs] for r in rs]))
    return g if g else None


entry = st.integers(min_value=-9, max_value=9)


def matrices(max_rows=4, max_cols=6):
    return st.tuples(
        st.integers(1, max_rows), st.integers(1, max_cols)
    ).flatmap(
        lambda shape: st.lists(
            st.lists(entry, min_size=shape[1], max_size=shape[1]),
            min_size=shape[0],
            max_size=shape[0],
        )
    )


class TestHnf:
    def test_identity(self):
        m = IntMatrix.identity(3)
        h, u = hnf(m)
        assert h == m
        assert u == m

    def test_upper_triangular_pair(self):
        m = IntMatrix([[2, 4], [0, 2]])
        h, u = hnf(m)
        assert h == m @ u
        assert all(h.entries[r][c] >= 0 for r in range(2) for c in range(2))
        assert h == IntMatrix([[2, 0], [0, 2]])

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_recomposition_and_unimodularity(self, rows):
        m = IntMatrix(rows)
        h, u = hnf(m)
        assert h == m @ u
        assert abs(det_laplace([list(r) for r in u.entries])) == 1

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_echelon_shape(self, rows):
        h, _ = hnf(IntMatrix(rows))
        pivots = []
        for j in range(h.cols):
            col = h.column(j)
            r = next((i for i, v in enumerate(col) if v), None)
            if r is None:
                # zero columns trail
                assert all(not any(h.column(k)) for k in range(j, h.cols))
                break
            pivots.append((r, j))
        rows_seen = [r for r, _ in pivots]
        assert rows_seen == sorted(rows_seen)
        for r, j in pivots:
            p = h.entries[r][j]
            assert p > 0
            for k in range(j):
                assert 0 <= h.entries[r][k] < p


class TestSnf:
    def test_identity(self):
        res = snf(IntMatrix.identity(2))
        assert res.rank == 2
        assert res.invariant_factors == (1, 1)

    def test_diagonal(self):
        assert snf(IntMatrix([[2, 0], [0, 4]])).invariant_factors == (2, 4)

    def test_group_order_product(self, group_columns):
        res = snf(IntMatrix.from_columns(group_columns))
        prod = 1
        for d in res.invariant_factors:
            prod *= d
        assert prod == 72

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_divisibility_chain(self, rows):
        res = snf(IntMatrix(rows))
        assert len(res.invariant_factors) == res.rank
        for d, e in zip(res.invariant_factors, res.invariant_factors[1:]):
            assert d > 0 and e % d == 0


class TestDeltaT:
    def test_entry_gcd(self):
        assert delta_t(IntMatrix([[2, 4], [6, 8]]), 1) == 2

    def test_identity(self):
        assert delta_t(IntMatrix.identity(2), 2) == 1

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            delta_t(IntMatrix([[1, 2]]), 2)

    def test_above_rank_is_none(self):
        assert delta_t(IntMatrix([[1, 2], [2, 4]]), 2) is None

    @given(matrices(max_rows=4, max_cols=4), st.integers(1, 4))
    @settings(max_examples=200, deadline=None)
    def test_matches_minor_enumeration(self, rows, t):
        m = IntMatrix(rows)
        if t > min(m.rows, m.cols):
            return
        assert delta_t(m, t) == minor_gcd(rows, t)


class TestCardGroup:
    def test_group_order(self, group_columns):
        assert card_group(IntMatrix.from_columns(group_columns)) == 72

    def test_identity(self):
        assert card_group(IntMatrix.identity(4)) == 1

    def test_rank_deficient_is_infinite(self):
        assert card_group(IntMatrix.from_columns([(2, 0)])) is None


class TestTorsionOrder:
    def test_identity(self):
        assert torsion_order(IntMatrix.identity(3)) == 1

    def test_mixed_free_and_torsion(self):
        assert torsion_order(IntMatrix([[2, 0], [0, 0]])) == 2

    def test_ratio_in_reduction_example(self, reduction_config):
        four = IntMatrix.from_columns(reduction_config.vectors[:4])
        five = IntMatrix.from_columns(reduction_config.vectors)
        assert torsion_order(four) == 3 * torsion_order(five)


class TestSolveInteger:
    def test_identity(self):
        x = solve_integer(IntMatrix.identity(3), (4, -1, 7))
        assert x == (4, -1, 7)

    def test_parity_obstruction(self):
        assert solve_integer(IntMatrix([[2]]), (3,)) is None

    @given(matrices(max_rows=4, max_cols=5), st.data())
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, rows, data):
        m = IntMatrix(rows)
        x = data.draw(
            st.lists(st.integers(-6, 6), min_size=m.cols, max_size=m.cols)
        )
        b = [sum(m.entries[r][j] * x[j] for j in range(m.cols)) for r in range(m.rows)]
        y = solve_integer(m, b)
        assert y is not None
        assert all(
            sum(m.entries[r][j] * y[j] for j in range(m.cols)) == b[r]
            for r in range(m.rows)
        )


class TestQSpan:
    def test_member_of_full_rank_span(self, reduction_config):
        vectors = reduction_config.vectors
        assert in_q_span(vectors[0], vectors[1:])

    def test_outside_plane(self):
        assert not in_q_span((0, 0, 1), [(1, 0, 0), (0, 1, 0)])

    def test_zero_vector(self):
        assert in_q_span((0, 0), [(1, 1)])


class TestMinMultiple:
    def test_reduction_example_first_stage(self, reduction_config):
        v = reduction_config.vectors
        assert min_multiple_in_zspan(v[4], v[:4]) == 3

    def test_reduction_example_second_stage(self, reduction_config):
        v = reduction_config.vectors
        assert min_multiple_in_zspan(v[0], v[1:4]) == 2

    def test_member_gives_one(self):
        assert min_multiple_in_zspan((2, 3), [(2, 3), (0, 1)]) == 1

    def test_requires_rational_span(self):
        with pytest.raises(ValidationError):
            min_multiple_in_zspan((0, 0, 1), [(1, 0, 0), (0, 1, 0)])

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_matches_direct_search(self, data):
        m = data.draw(st.integers(1, 4))
        n = data.draw(st.integers(1, 4))
        cols = data.draw(
            st.lists(
                st.lists(st.integers(0, 12), min_size=m, max_size=m).filter(any),
                min_size=n,
                max_size=n,
            )
        )
        v = tuple(data.draw(st.lists(st.integers(0, 12), min_size=m, max_size=m)))
        cols = [tuple(c) for c in cols]
        if not in_q_span(v, cols):
            return
        b = min_multiple_in_zspan(v, cols)
        mat = IntMatrix.from_columns(cols)
        k = 1
        while solve_integer(mat, [k * x for x in v]) is None:
            k += 1
        assert b == k


class TestInCone:
    def test_eight_column_membership_pattern(self, eight_column_ci):
        vectors = eight_column_ci.config.vectors
        inside = [
            in_cone(v, [w for j, w in enumerate(vectors) if j != i])
            for i, v in enumerate(vectors)
        ]
        assert inside == [False, False, False, True, True, True, True, True]

    def test_scaled_generator(self):
        s = [(3, 1, 2), (0, 5, 1)]
        assert in_cone((6, 2, 4), s)

    def test_zero_vector(self):
        assert in_cone((0, 0, 0), [(1, 2, 3)])

    def test_plane_sector(self):
        s = [(2, 1), (1, 2)]
        assert in_cone((1, 1), s)
        assert not in_cone((3, 1), s)
        assert not in_cone((0, 1), s)

    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_invariant_under_scaling_and_permutation(self, data):
        m = data.draw(st.integers(1, 4))
        cols = data.draw(
            st.lists(
                st.lists(st.integers(0, 6), min_size=m, max_size=m).filter(any),
                min_size=1,
                max_size=5,
            )
        )
        v = tuple(data.draw(st.lists(st.integers(0, 6), min_size=m, max_size=m)))
        cols = [tuple(c) for c in cols]
        base = in_cone(v, cols)
        k = data.draw(st.integers(1, 5))
        assert in_cone(tuple(k * x for x in v), cols) == base
        perm = data.draw(st.permutations(cols))
        assert in_cone(v, list(perm)) == base


class TestRank:
    def test_full_rank_axes(self):
        assert rank_of_columns([(1, 0), (0, 1), (1, 1)]) == 2

    def test_proportional_columns(self):
        assert rank_of_columns([(2, 4), (1, 2)]) == 1


class TestCardGroupInvariance:
    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_column_permutation_and_sign(self, data):
        m = data.draw(st.integers(1, 3))
        cols = data.draw(
            st.lists(
                st.lists(st.integers(-6, 6), min_size=m, max_size=m),
                min_size=1,
                max_size=5,
            )
        )
        base = card_group(IntMatrix.from_columns(cols))
        perm = list(data.draw(st.permutations(cols)))
        flips = data.draw(
            st.lists(st.booleans(), min_size=len(cols), max_size=len(cols))
        )
        mutated = [
            [-x for x in col] if flip else col for col, flip in zip(perm, flips)
        ]
        assert card_group(IntMatrix.from_columns(mutated)) == base
