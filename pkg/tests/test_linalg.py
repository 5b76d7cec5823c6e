"""Gaussian elimination suite: frozen examples, properties, exhaustive oracle."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdskit.errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NotSquareError,
    SizeConstraintError,
)
from mdskit.fields import field_make
from mdskit.linalg import (
    MatrixF,
    block_mds_matrix,
    det,
    kernel,
    rank,
    rref,
    solve,
    subspace_intersection_dim,
)

F3 = field_make(3)
F7 = field_make(7)
F13 = field_make(13)


def test_vandermonde_rank():
    m = MatrixF(F7, [[1, 1, 1], [1, 2, 3]])
    assert rank(m) == 2


def test_kernel_frozen_example():
    m = MatrixF(F7, [[1, 1, 1], [0, 1, 2]])
    basis = kernel(m)
    assert len(basis) == 1
    assert tuple(e.to_int() for e in basis[0]) == (1, 5, 1)


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    for _ in range(25):
        rows = [[rng.randrange(7) for _ in range(5)] for _ in range(3)]
        m = MatrixF(F7, rows)
        basis = kernel(m)
        assert len(basis) == 5 - rank(m)
        for v in basis:
            assert all(e.is_zero() for e in m.mul_vector(v))


def test_det_vandermonde_formula():
    pts = [2, 5, 6, 1]
    m = MatrixF(F7, [[F7.element(x) ** i for x in pts] for i in range(4)])
    expected = F7.one
    for i in range(4):
        for j in range(i + 1, 4):
            expected = expected * (F7.element(pts[j]) - F7.element(pts[i]))
    assert det(m) == expected


def test_det_identity_and_swap():
    assert det(MatrixF.identity(F7, 4)) == F7.one
    m = MatrixF(F7, [[0, 1], [1, 0]])
    assert det(m) == F7.element(-1)


def test_det_empty_matrix_is_one():
    assert det(MatrixF(F7, [])) == F7.one


def test_det_singular():
    m = MatrixF(F7, [[1, 2, 3], [2, 4, 6], [0, 1, 5]])
    assert det(m).is_zero()
    assert rank(m) == 2


def test_det_requires_square():
    with pytest.raises(NotSquareError):
        det(MatrixF(F7, [[1, 2, 3], [4, 5, 6]]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=18, max_size=18))
def test_det_multiplicative(vals):
    a = MatrixF(F7, [vals[0:3], vals[3:6], vals[6:9]])
    b = MatrixF(F7, [vals[9:12], vals[12:15], vals[15:18]])
    assert det(a @ b) == det(a) * det(b)


def test_rref_idempotent_and_pivots():
    m = MatrixF(F7, [[2, 4, 1], [1, 2, 3]])
    r, pivots = rref(m)
    assert pivots == (0, 2)
    r2, pivots2 = rref(r)
    assert r2 == r and pivots2 == pivots


def test_solve_consistent():
    m = MatrixF(F7, [[1, 2], [3, 4], [4, 6]])
    x = (F7.element(2), F7.element(5))
    b = m.mul_vector(x)
    got = solve(m, b)
    assert got is not None
    assert m.mul_vector(got) == b


def test_solve_inconsistent():
    m = MatrixF(F7, [[1, 1], [2, 2]])
    assert solve(m, [F7.element(1), F7.element(3)]) is None


def test_solve_dimension_check():
    m = MatrixF(F7, [[1, 1]])
    with pytest.raises(DimensionMismatchError):
        solve(m, [F7.one, F7.one])


def test_matmul_shape_check():
    a = MatrixF(F7, [[1, 2]])
    with pytest.raises(DimensionMismatchError):
        a @ a
    with pytest.raises(FieldMismatchError):
        a @ MatrixF(F3, [[1], [1]])


# -- subspace intersections -----------------------------------------------------


def _span(field, m):
    cols = [m.col(j) for j in range(m.ncols)]
    vecs = set()
    for coeffs in itertools.product(range(field.order), repeat=len(cols)):
        acc = [field.zero] * m.nrows
        for c, col in zip(coeffs, cols):
            ce = field.from_int(c)
            acc = [a + ce * v for a, v in zip(acc, col)]
        vecs.add(tuple(e.to_int() for e in acc))
    return vecs


def test_intersection_matches_exhaustive_oracle_q3():
    rng = random.Random(31)
    for trial in range(30):
        nsub = rng.choice([2, 2, 3])
        mats = []
        for _ in range(nsub):
            nc = rng.randrange(1, 4)
            mats.append(
                MatrixF(F3, [[rng.randrange(3) for _ in range(nc)] for _ in range(4)])
            )
        got = subspace_intersection_dim(mats)
        common = set.intersection(*[_span(F3, m) for m in mats])
        # intersection of subspaces is a subspace: size 3^dim
        assert len(common) == 3**got, f"trial {trial}"


def test_intersection_order_independent():
    rng = random.Random(77)
    for _ in range(10):
        mats = [
            MatrixF(F7, [[rng.randrange(7) for _ in range(2)] for _ in range(4)])
            for _ in range(3)
        ]
        dims = {
            subspace_intersection_dim([mats[i] for i in perm])
            for perm in itertools.permutations(range(3))
        }
        assert len(dims) == 1


def test_intersection_with_self_and_zero():
    m = MatrixF(F7, [[1, 0], [0, 1], [1, 1]])
    assert subspace_intersection_dim([m, m]) == 2
    z = MatrixF(F7, [[], [], []])
    assert subspace_intersection_dim([m, z]) == 0


def test_intersection_validation():
    m = MatrixF(F7, [[1], [0]])
    with pytest.raises(DimensionMismatchError):
        subspace_intersection_dim([])
    with pytest.raises(FieldMismatchError):
        subspace_intersection_dim([m, MatrixF(F3, [[1], [0]])])
    with pytest.raises(DimensionMismatchError):
        subspace_intersection_dim([m, MatrixF(F7, [[1], [0], [0]])])


# -- the block certificate matrix ------------------------------------------------


def _rs_matrix(field, k, pts):
    return MatrixF(field, [[field.element(x) ** i for x in pts] for i in range(k)])


def test_block_matrix_layout():
    v = _rs_matrix(F7, 2, [1, 2, 3, 4])
    m = block_mds_matrix(v, [[1], [2]])
    assert (m.nrows, m.ncols) == (4, 4)
    ints = [[e.to_int() for e in row] for row in m.rows]
    assert ints == [
        [1, 0, 1, 0],
        [0, 1, 2, 0],
        [1, 0, 0, 1],
        [0, 1, 0, 3],
    ]


def test_block_matrix_detects_intersection():
    v = _rs_matrix(F7, 2, [1, 2, 3, 4])
    # three sets sharing column 1: the intersection is that line
    m = block_mds_matrix(v, [[0, 1], [1], [1]])
    assert det(m).is_zero()
    # two distinct lines inside the plane spanned by {0,1}: intersection 0
    m2 = block_mds_matrix(v, [[0, 1], [1], [2]])
    assert not det(m2).is_zero()
    # the empty set spans the zero subspace, forcing a trivial intersection
    m3 = block_mds_matrix(v, [[0, 1], [0, 1], []])
    assert not det(m3).is_zero()


def test_block_matrix_matches_intersection_dim():
    rng = random.Random(5)
    f = F13
    k, n = 3, 6
    for _ in range(60):
        v = MatrixF(f, [[rng.randrange(13) for _ in range(n)] for _ in range(k)])
        sets = []
        remaining = (2 - 1) * k  # two sets summing to k
        a = rng.randrange(0, k + 1)
        sets = [sorted(rng.sample(range(n), a)), None]
        sets[1] = sorted(rng.sample(range(n), k - a))
        mats = [v.submatrix(range(k), s) for s in sets]
        # block determinant test is valid only when each restriction has
        # full column rank
        if any(rank(m) < m.ncols for m in mats):
            continue
        m = block_mds_matrix(v, sets)
        assert det(m).is_zero() == (subspace_intersection_dim(mats) > 0)


def test_block_matrix_validation():
    v = _rs_matrix(F7, 2, [1, 2, 3, 4])
    with pytest.raises(SizeConstraintError):
        block_mds_matrix(v, [[0, 1], [2]])  # sizes sum to 3, need 2
    with pytest.raises(SizeConstraintError):
        block_mds_matrix(v, [[0, 1, 2], [3]])  # first set exceeds k
    with pytest.raises(SizeConstraintError):
        block_mds_matrix(v, [[0, 0], [1, 2]])  # repeated element
    with pytest.raises(SizeConstraintError):
        block_mds_matrix(v, [[0, 7], [1]])  # out of range
