"""Verification-engine tests.

The independent oracle here is a test-local Gaussian elimination over
plain python ints mod p: actual span intersections computed from scratch,
with no block certificates, no product matrices, and no pairing
determinants.  Every fast path must agree with it on every qualifying
tuple.
"""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from mdskit.codes import (
    SetTuple,
    explicit_code,
    generator_matrix,
    generically_zero,
    rs_code,
)
from mdskit.errors import (
    BudgetExceededError,
    NotMDSError,
    SizeConstraintError,
    WrongKindError,
)
from mdskit.fields import field_make
from mdskit.linalg import rref, subspace_intersection_dim
from mdskit.mdscheck import (
    CheckReport,
    _canonical_tuples,
    _pairings_of_six,
    exhaustive_code_search,
    is_mds,
    is_mds3_rs_fast,
    is_mds_ell,
    lb_witness_projective,
    weak_reduce,
)

F7 = field_make(7)
F11 = field_make(11)
F13 = field_make(13)


def rs(field, points, k):
    return rs_code(field, [field.from_int(b) for b in points], k)


def span_of(code, cols):
    g = generator_matrix(code)
    return g.submatrix(range(code.k), sorted(cols))


# -- a from-scratch oracle over plain ints -------------------------------------------


def _int_rref(rows, p):
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(rows[i][j] - f * rows[r][j]) % p for j in range(nc)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots


def _int_rank(rows, p):
    return len(_int_rref(rows, p)[1]) if rows else 0


def _int_null_basis(rows, p):
    """Basis of the right kernel, as rows."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    red, pivots = _int_rref(rows, p)
    pivs = set(pivots)
    out = []
    for free in range(nc):
        if free in pivs:
            continue
        v = [0] * nc
        v[free] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-red[ri][free]) % p
        out.append(v)
    return out


def _int_span_intersection_dim(k, spans, p):
    """dim of the intersection of column spans, via stacked normals:
    dim = k - rank of the union of orthogonal complements."""
    normals = []
    for cols in spans:
        # rows of cols^T; kernel vectors are the normals of the span
        mat = [list(col) for col in cols]
        normals.extend(_int_null_basis(mat, p))
    if not normals:
        return k
    return k - _int_rank(normals, p)


def _int_cols(code, subset):
    g = generator_matrix(code)
    return [
        tuple(int(g[(r, c)].to_int()) for r in range(code.k)) for c in subset
    ]


def brute_mds3(code, p):
    """Definition-level MDS(3) over all ordered qualifying tuples."""
    if not is_mds(code).ok:
        return False
    n, k = code.n, code.k
    gcols = {
        s: list(itertools.combinations(range(n), s)) for s in range(1, k + 1)
    }
    colcache = {}

    def cols_of(subset):
        got = colcache.get(subset)
        if got is None:
            got = _int_cols(code, subset)
            colcache[subset] = got
        return got

    for profile in itertools.product(range(1, k + 1), repeat=3):
        if sum(profile) != 2 * k:
            continue
        for sets in itertools.product(*(gcols[s] for s in profile)):
            tup = SetTuple(sets, n, k)
            if not generically_zero(tup):
                continue
            dim = _int_span_intersection_dim(
                k, [cols_of(a) for a in tup.sets], p
            )
            if dim != 0:
                return False
    return True


def test_int_oracle_matches_library_gaussian():
    rng = random.Random(3)
    for _ in range(40):
        k = rng.randrange(2, 4)
        spans = []
        mats = []
        for _ in range(2):
            w = rng.randrange(1, k + 1)
            cols = [
                tuple(rng.randrange(7) for _ in range(k)) for _ in range(w)
            ]
            spans.append(cols)
            from mdskit.linalg import MatrixF

            mats.append(
                MatrixF(F7, [[cols[j][i] for j in range(w)] for i in range(k)])
            )
        got = _int_span_intersection_dim(k, spans, 7)
        assert got == subspace_intersection_dim(mats)


# -- report formatting ------------------------------------------------------------


def test_report_line_format():
    r = CheckReport("mds3", True, 105, 12)
    assert r.to_line() == "property=mds3 verdict=pass tuples=105 time_ms=12"


def test_report_line_with_witness():
    w = SetTuple(((0, 1), (2, 3), (4, 5)), 6, 3)
    r = CheckReport("mds3-rs", False, 7, 3, w)
    assert (
        r.to_line()
        == "property=mds3-rs verdict=fail tuples=7 time_ms=3 witness=0,1;2,3;4,5"
    )


# -- is_mds -----------------------------------------------------------------------


def test_rs_code_is_mds():
    rep = is_mds(rs(F7, [0, 1, 2, 3, 4], 3))
    assert rep.ok
    assert rep.tuples == 10  # C(5,3)


def test_explicit_repeated_column_fails_with_pair_witness():
    rows = [[1, 0, 1, 2], [0, 1, 0, 3]]
    code = explicit_code(F7, rows)
    rep = is_mds(code)
    assert not rep.ok
    assert rep.witness is not None
    assert rep.witness.sets == ((0, 2),)


def test_mds_agrees_with_minor_bruteforce():
    rng = random.Random(5)
    done = 0
    while done < 20:
        rows = [[rng.randrange(7) for _ in range(5)] for _ in range(2)]
        try:
            code = explicit_code(F7, rows)
        except Exception:
            continue
        done += 1
        cols = _int_cols(code, tuple(range(5)))
        expect = all(
            _int_rank([list(cols[a]), list(cols[b])], 7) == 2
            for a, b in itertools.combinations(range(5), 2)
        )
        assert is_mds(code).ok == expect


# -- canonical tuple enumeration ----------------------------------------------------


def test_canonical_tuple_count_matches_multiset_formula():
    tups = list(_canonical_tuples(6, 3, 3, 2))
    # only the (2,2,2) profile fits; multisets of three pair-sets from C(6,2)
    assert len(tups) == 680  # C(15+2, 3)


def test_canonical_matches_ordered_enumeration_after_dedup():
    ordered = set()
    pools = list(itertools.combinations(range(6), 2))
    for sets in itertools.product(pools, repeat=3):
        tup = SetTuple(sets, 6, 3)
        if generically_zero(tup):
            ordered.add(tuple(sorted(tup.sets)))
    canon = {
        tuple(sorted(t.sets))
        for t in _canonical_tuples(6, 3, 3, 2)
        if generically_zero(t)
    }
    assert canon == ordered


def test_pairings_of_six_is_fifteen_distinct():
    ps = list(_pairings_of_six((0, 1, 2, 3, 4, 5)))
    assert len(ps) == 15
    assert len({frozenset(map(frozenset, p)) for p in ps}) == 15
    for p in ps:
        assert sorted(x for pair in p for x in pair) == [0, 1, 2, 3, 4, 5]


# -- weak reduction -----------------------------------------------------------------


def test_weak_reduce_strips_shared_elements():
    tup = SetTuple(((0, 1), (1, 2), (3, 4)), 6, 3)
    sets, k2 = weak_reduce(tup)
    assert k2 == 2
    assert sets == ((0,), (2,), (3, 4))


def test_weak_reduce_disjoint_is_identity():
    tup = SetTuple(((0, 1), (2, 3), (4, 5)), 6, 3)
    sets, k2 = weak_reduce(tup)
    assert k2 == 3
    assert sets == ((0, 1), (2, 3), (4, 5))


def test_weak_reduce_preserves_budget_identity():
    rng = random.Random(11)
    trials = 0
    while trials < 50:
        k = rng.randrange(3, 6)
        n = rng.randrange(2 * k, 2 * k + 4)
        szs = [rng.randrange(1, k) for _ in range(3)]
        if sum(szs) != 2 * k:
            continue
        sets = tuple(tuple(rng.sample(range(n), s)) for s in szs)
        a, b, c = (set(x) for x in sets)
        if a & b & c:
            continue
        trials += 1
        red, k2 = weak_reduce(SetTuple(sets, n, k))
        assert sum(len(s) for s in red) == 2 * k2
        for x, y in itertools.combinations(red, 2):
            assert not (set(x) & set(y))


# -- the equivalence triangle: fast path == block path == int-Gaussian oracle --------


def test_rs_k3_fast_path_agrees_with_oracle_small():
    cases = [
        (7, (0, 1, 2, 3, 4, 5)),
        (7, (0, 1, 2, 3, 4, 6)),
        (7, (1, 2, 3, 4, 5, 6)),
        (17, (0, 3, 6, 10, 11, 12)),  # a passing instance
    ]
    for q, pts in cases:
        field = field_make(q)
        code = rs(field, list(pts), 3)
        fast = is_mds3_rs_fast(code)
        block = is_mds_ell(code, 3)
        assert fast.ok == block.ok == brute_mds3(code, q)


def test_rs_k4_fast_path_agrees_with_oracle():
    code = rs(F13, [0, 1, 2, 3, 4, 5, 6, 7], 4)
    fast = is_mds3_rs_fast(code)
    assert fast.ok == brute_mds3(code, 13)


def test_product_matrix_certificate_per_tuple_k4():
    """The product-polynomial determinant must decide each reduced tuple
    exactly as the definitional intersection does, pass and fail alike."""
    from mdskit.mdscheck import _ProductMatrixContext, _product_matrix_det_nonzero

    rng = random.Random(97)
    for q in (13, 23, 29):
        field = field_make(q)
        pts = rng.sample(range(q), 8)
        code = rs(field, pts, 4)
        ctx = _ProductMatrixContext(code)
        tuples = [
            t for t in _canonical_tuples(8, 4, 3, 3) if generically_zero(t)
        ]
        for tup in rng.sample(tuples, 400):
            sets, k2 = weak_reduce(tup)
            reduced = rs(field, pts, k2) if 0 < k2 <= 8 else None
            if any(len(s) >= k2 for s in sets) or k2 <= 0:
                # the auto-pass rule must be sound; an empty set makes the
                # intersection trivially zero, so only the all-nonempty
                # case needs checking
                if reduced is not None and all(len(s) > 0 for s in sets):
                    spans = [_int_cols(reduced, a) for a in sets]
                    assert _int_span_intersection_dim(k2, spans, q) == 0
                continue
            got = _product_matrix_det_nonzero(ctx, sets, k2)
            want = (
                _int_span_intersection_dim(
                    k2, [_int_cols(reduced, a) for a in sets], q
                )
                == 0
            )
            assert got == want


def test_rs_k2_mds3_reduces_to_mds():
    code = rs(F7, [0, 2, 3, 5, 6], 2)
    rep = is_mds3_rs_fast(code)
    assert rep.ok
    assert rep.tuples == 0  # no qualifying profiles with sizes <= k-1
    assert is_mds_ell(code, 3).ok
    assert brute_mds3(code, 7)


def test_explicit_code_block_path_agrees_with_oracle():
    rng = random.Random(31)
    done = 0
    while done < 8:
        rows = [[rng.randrange(7) for _ in range(6)] for _ in range(3)]
        try:
            code = explicit_code(F7, rows)
        except Exception:
            continue
        done += 1
        assert is_mds_ell(code, 3).ok == brute_mds3(code, 7)


def test_fast_path_rejects_explicit_codes():
    code = explicit_code(F7, [[1, 0, 1], [0, 1, 1]])
    with pytest.raises(WrongKindError):
        is_mds3_rs_fast(code)


def test_mds2_equals_mds():
    code = rs(F7, [0, 1, 2, 3, 4, 5], 3)
    assert is_mds_ell(code, 2).ok == is_mds(code).ok


# -- determinism and exact counts ---------------------------------------------------


def test_rs_k3_n6_pass_examines_exactly_fifteen():
    rep = is_mds3_rs_fast(rs(field_make(17), [0, 3, 6, 10, 11, 12], 3))
    assert rep.ok
    assert rep.tuples == 15


def test_rs_k3_n7_pass_examines_105():
    code = rs(field_make(31), [11, 14, 16, 18, 21, 23, 29], 3)
    rep = is_mds3_rs_fast(code)
    assert rep.ok
    assert rep.tuples == 105
    assert brute_mds3(code, 31)


def test_full_range_seven_points_over_f7_fails():
    # 10 projective points cannot be distinct among the 8 of a line over F7,
    # so MDS(3) is impossible here and a witness must surface
    code = rs(F7, [0, 1, 2, 3, 4, 5, 6], 3)
    rep = is_mds3_rs_fast(code)
    assert not rep.ok
    assert rep.witness is not None
    dim = _int_span_intersection_dim(
        3, [_int_cols(code, a) for a in rep.witness.sets], 7
    )
    assert dim >= 1
    assert not is_mds_ell(code, 3).ok


# -- the projective lower-bound witness ----------------------------------------------


def test_lb_witness_passes_on_mds3_code():
    code = rs(field_make(17), [0, 3, 6, 10, 11, 12], 3)
    assert is_mds3_rs_fast(code).ok
    rep = lb_witness_projective(code)
    assert rep.ok
    assert rep.detail is not None and "bound=5" in rep.detail


def test_lb_witness_fails_when_bound_exceeds_field():
    code = rs(F7, [0, 1, 2, 3, 4, 5, 6], 3)
    rep = lb_witness_projective(code)
    assert not rep.ok
    assert rep.witness is not None
    a1, a2, a3 = rep.witness.sets
    assert a1 == (0, 1)
    dim = _int_span_intersection_dim(
        3, [_int_cols(code, a) for a in (a1, a2, a3)], 7
    )
    assert dim >= 1


def test_lb_witness_k2_shortcut_matches_general_path():
    pts = [0, 1, 3, 5, 6]
    code = rs(F7, pts, 2)
    fast = lb_witness_projective(code)
    g = generator_matrix(code)
    slow = lb_witness_projective(
        explicit_code(F7, [[int(v.to_int()) for v in r] for r in g.rows])
    )
    assert fast.ok == slow.ok
    assert fast.detail is not None and slow.detail is not None
    assert fast.detail.split()[0] == slow.detail.split()[0]


def test_lb_witness_requires_mds():
    code = explicit_code(F7, [[1, 0, 1, 2], [0, 1, 0, 3]])
    with pytest.raises(NotMDSError):
        lb_witness_projective(code)


def test_lb_witness_size_preconditions():
    code = rs(F7, [0, 1, 2], 3)
    with pytest.raises(SizeConstraintError):
        lb_witness_projective(code)


# -- exhaustive search ---------------------------------------------------------------


def brute_count_mds_codes(n, k, p):
    """Row spaces of systematic MDS [n,k] codes over GF(p), counted from
    int matrices alone."""
    seen = set()
    count = 0
    for info in itertools.combinations(range(n), k):
        rest = [j for j in range(n) if j not in info]
        for flat in itertools.product(range(p), repeat=k * (n - k)):
            rows = [[0] * n for _ in range(k)]
            for i, pos in enumerate(info):
                rows[i][pos] = 1
            for i in range(k):
                for j, pos in enumerate(rest):
                    rows[i][pos] = flat[i * (n - k) + j]
            ok = all(
                _int_rank([[rows[i][c] for c in cols] for i in range(k)], p)
                == k
                for cols in itertools.combinations(range(n), k)
            )
            if not ok:
                continue
            key = tuple(map(tuple, _int_rref(rows, p)[0]))
            if key not in seen:
                seen.add(key)
                count += 1
    return count


def test_search_counts_match_direct_enumeration_tiny():
    res = exhaustive_code_search(4, 2, 3, budget=10**4)
    assert res.count == brute_count_mds_codes(4, 2, 3)
    for ex in res.exemplars:
        assert is_mds_ell(ex, 3).ok


def test_search_budget_guard():
    with pytest.raises(BudgetExceededError):
        exhaustive_code_search(6, 3, 4, budget=10**3)


def test_search_rejects_unknown_property():
    with pytest.raises(WrongKindError):
        exhaustive_code_search(4, 2, 3, prop="mds9")


def test_search_k3_internal_path_matches_engine():
    # single information set keeps this quick; the count must match a sweep
    # of the block-determinant engine over the same candidates
    res = exhaustive_code_search(
        5, 3, 2, budget=10**4, all_information_sets=False
    )
    F2 = field_make(2)
    agree = 0
    for flat in itertools.product(range(2), repeat=6):
        rows = [
            [1, 0, 0, flat[0], flat[1]],
            [0, 1, 0, flat[2], flat[3]],
            [0, 0, 1, flat[4], flat[5]],
        ]
        code = explicit_code(F2, rows)
        if is_mds_ell(code, 3).ok:
            agree += 1
    assert res.count == agree


# -- randomized equivalence property --------------------------------------------------


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_property_fast_equals_block_on_random_rs(seed):
    rng = random.Random(seed)
    k = rng.choice([2, 3])
    n = rng.randrange(2 * k, 2 * k + 2)
    pts = rng.sample(range(13), n)
    code = rs(F13, pts, k)
    assert is_mds3_rs_fast(code).ok == is_mds_ell(code, 3).ok
