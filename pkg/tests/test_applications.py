"""Tests for list-decodability deciders and tensor-code recoverability."""

import random

import pytest

from mdskit.applications import (
    ErasurePattern,
    TensorCodeSpec,
    duality_test,
    ld_mds_check,
    mr_check,
    parse_pattern,
    single_parity_code,
    tensor_parity,
    worst_case_ld_check,
)
from mdskit.codes import dual_code, explicit_code, rs_code
from mdskit.errors import (
    BudgetExceededError,
    FieldMismatchError,
    SizeConstraintError,
)
from mdskit.fields import field_make
from mdskit.linalg import MatrixF, rank
from mdskit.mdscheck import is_mds, is_mds_ell

F2 = field_make(2, [])
F3 = field_make(3, [])
F5 = field_make(5, [])
F7 = field_make(7, [])


def _rs(field, n, k):
    return rs_code(field, [field.element(i) for i in range(n)], k)


def _random_code(rng, field, q, n, k):
    while True:
        rows = [[field.element(rng.randrange(q)) for _ in range(n)] for _ in range(k)]
        if rank(MatrixF(field, rows)) == k:
            return explicit_code(field, rows)


# a [4,2] code over F3 with equal columns 0 and 2: not MDS, so not LD-MDS(1) dual
BAD42 = explicit_code(F3, [[1, 0, 1, 0], [0, 1, 0, 1]])


def _extended_rs_63():
    # Vandermonde on all five points of F5 plus the (0,0,1) column
    rows = [
        [F5.element(p) ** i for p in range(5)] + [F5.element(1 if i == 2 else 0)]
        for i in range(3)
    ]
    return explicit_code(F5, rows)


# -- erasure patterns ---------------------------------------------------------------


def test_pattern_bounds_checked():
    ErasurePattern(2, 3, frozenset({(1, 2)}))
    with pytest.raises(SizeConstraintError):
        ErasurePattern(2, 3, frozenset({(2, 0)}))
    with pytest.raises(SizeConstraintError):
        ErasurePattern(2, 3, frozenset({(0, -1)}))


def test_pattern_text_roundtrip():
    p = parse_pattern("1,2;0,0;1,0", 2, 3)
    assert p.cells == frozenset({(1, 2), (0, 0), (1, 0)})
    assert p.format() == "0,0;1,0;1,2"
    assert parse_pattern(p.format(), 2, 3) == p
    assert parse_pattern("", 2, 3).cells == frozenset()
    assert parse_pattern("", 2, 3).format() == ""


def test_pattern_indices_row_major():
    p = ErasurePattern(3, 5, frozenset({(0, 1), (2, 4)}))
    assert p.indices() == (1, 14)
    assert ErasurePattern.from_indices(3, 5, (1, 14)) == p


# -- single parity code -------------------------------------------------------------


def test_single_parity_code_shape():
    c = single_parity_code(F5, 4)
    assert (c.n, c.k) == (4, 3)
    assert is_mds(c).ok
    # all generator rows sum to zero
    g = c.matrix
    for row in g.rows:
        total = F5.zero
        for v in row:
            total = total + v
        assert total.is_zero()
    with pytest.raises(SizeConstraintError):
        single_parity_code(F5, 1)


# -- average-radius list decodability ------------------------------------------------


def test_mds_codes_are_ld1():
    for code in (_rs(F7, 5, 2), _rs(F5, 4, 2), _extended_rs_63()):
        assert is_mds(code).ok
        assert ld_mds_check(code, 1).ok


def test_full_code_vacuous_pass():
    full = _rs(F7, 4, 4)
    r = ld_mds_check(full, 2)
    assert r.ok and r.tuples <= 2


def test_zero_dimensional_code_passes():
    zero = rs_code(F5, [F5.element(i) for i in range(4)], 0)
    assert ld_mds_check(zero, 2).ok


def test_single_size_prop_naming():
    r = ld_mds_check(_rs(F7, 5, 2), 2, up_to=False)
    assert r.prop == "ld-mds(2)"
    r = ld_mds_check(_rs(F7, 5, 2), 2, up_to=True)
    assert r.prop == "ld-mds(<=2)"


def test_ld_failure_witness_on_bad_dual():
    # equal generator columns give two weight-1 vectors with equal syndromes
    r = ld_mds_check(dual_code(BAD42), 1)
    assert not r.ok
    assert "total weight 2 <= 2" in r.detail
    assert "(1, 0, 0, 0)" in r.detail and "(0, 0, 1, 0)" in r.detail


def test_extended_rs_63_fails_ld2():
    # MDS but not MDS(3) over F5, so the average-radius property fails at L=2
    ext = _extended_rs_63()
    assert not ld_mds_check(ext, 2, up_to=False).ok
    assert not ld_mds_check(ext, 2, up_to=True).ok


def test_ld_budget_and_validation():
    with pytest.raises(BudgetExceededError):
        ld_mds_check(_rs(F7, 5, 2), 2, budget=10)
    with pytest.raises(SizeConstraintError):
        ld_mds_check(_rs(F7, 5, 2), 0)


# -- duality ------------------------------------------------------------------------


def test_duality_rs52():
    r = duality_test(_rs(F7, 5, 2), 2)
    assert r.ok
    assert r.detail == "mds(3)=pass ld-mds(<=2)=pass"


def test_duality_agreement_on_failing_code():
    r = duality_test(BAD42, 1)
    assert r.ok
    assert r.detail == "mds(2)=fail ld-mds(<=1)=fail"


def test_duality_full_and_zero_codes():
    assert duality_test(_rs(F5, 3, 3), 1).ok
    zero = rs_code(F5, [F5.element(i) for i in range(3)], 0)
    assert duality_test(zero, 1).ok


def test_duality_validation():
    with pytest.raises(SizeConstraintError):
        duality_test(_rs(F7, 5, 2), 0)


def test_duality_agreement_random_pool():
    rng = random.Random(5)
    tested = 0
    while tested < 15:
        q, field = rng.choice(((2, F2), (3, F3), (5, F5)))
        n = rng.randrange(3, 6)
        k = rng.randrange(1, n)
        code = _random_code(rng, field, q, n, k)
        r = duality_test(code, 2)
        assert r.ok, f"disagreement on [{n},{k}] over F{q}: {r.detail}"
        tested += 1


# -- worst-case list decodability ----------------------------------------------------


def test_worst_case_radius_zero_passes():
    for code in (_rs(F7, 5, 2), BAD42):
        assert worst_case_ld_check(code, 1, 0, 1).ok


def test_worst_case_unique_decoding_radius():
    # L=1 at rho=(n-k)/(2n): the unique-decoding radius floor((d-1)/2)
    code = _rs(F7, 5, 2)
    r = worst_case_ld_check(code, 1, code.n - code.k, 2 * code.n)
    assert r.ok


def test_worst_case_failure_witness():
    r = worst_case_ld_check(_rs(F3, 3, 2), 1, 2, 3)
    assert not r.ok
    assert "> 1 codewords within radius 2" in r.detail


def test_worst_case_monotone_in_radius():
    # once the radius grows enough to fail, shrinking it restores the pass
    code = _rs(F3, 3, 2)
    verdicts = [worst_case_ld_check(code, 1, num, 3).ok for num in (0, 1, 2)]
    assert verdicts == sorted(verdicts, reverse=True)
    assert verdicts[0] and not verdicts[2]


def test_worst_case_budget_and_validation():
    with pytest.raises(BudgetExceededError):
        worst_case_ld_check(_rs(F7, 5, 2), 1, 1, 3, budget=100)
    with pytest.raises(SizeConstraintError):
        worst_case_ld_check(_rs(F7, 5, 2), -1, 1, 3)
    with pytest.raises(SizeConstraintError):
        worst_case_ld_check(_rs(F7, 5, 2), 1, 1, 0)


def test_average_pass_implies_worst_case_pass():
    # non-vacuous at L=1: MDS gives the average-radius pass
    code = _rs(F7, 5, 2)
    n, k = code.n, code.k
    assert ld_mds_check(code, 1, up_to=False).ok
    assert worst_case_ld_check(code, 1, n - k, 2 * n).ok
    # extended RS [6,3]: average fails at L=2 and so does worst-case
    ext = _extended_rs_63()
    avg = ld_mds_check(ext, 2, up_to=False)
    wc = worst_case_ld_check(ext, 2, 1, 3)
    assert (not avg.ok) or wc.ok
    assert not avg.ok and not wc.ok


@pytest.mark.slow
def test_average_implies_worst_case_random_pool():
    rng = random.Random(7)
    tested = 0
    while tested < 25:
        q, field = rng.choice(((2, F2), (3, F3), (5, F5)))
        n = rng.randrange(3, 6)
        k = rng.randrange(1, n)
        code = _random_code(rng, field, q, n, k)
        avg = ld_mds_check(code, 2, up_to=False)
        wc = worst_case_ld_check(code, 2, 2 * (n - k), 3 * n)
        assert (not avg.ok) or wc.ok
        tested += 1


# -- tensor codes --------------------------------------------------------------------


def _spec_3x5(row_code):
    return TensorCodeSpec(single_parity_code(row_code.field, 3), row_code)


def test_tensor_spec_derived_shape():
    spec = _spec_3x5(_rs(F5, 5, 3))
    assert (spec.m, spec.n, spec.a, spec.b) == (3, 5, 1, 2)


def test_tensor_spec_field_mismatch():
    with pytest.raises(FieldMismatchError):
        TensorCodeSpec(single_parity_code(F5, 3), _rs(F7, 5, 3))


def test_tensor_parity_rank():
    for col_m, row in ((2, _rs(F5, 4, 2)), (3, _rs(F5, 5, 3))):
        spec = TensorCodeSpec(single_parity_code(row.field, col_m), row)
        h = tensor_parity(spec)
        m, n, a, b = spec.m, spec.n, spec.a, spec.b
        assert h.ncols == m * n
        assert h.nrows == m * n - (m - a) * (n - b)
        assert rank(h) == h.nrows


def test_empty_and_single_column_patterns_correctable():
    spec = _spec_3x5(_rs(F5, 5, 3))
    h = tensor_parity(spec)
    # empty pattern: nothing to solve for
    assert rank(MatrixF(F5, [[] for _ in range(h.nrows)])) == 0
    # one full grid column with a=1: the per-column parity pins all m cells
    cells = ErasurePattern(3, 5, frozenset({(r, 0) for r in range(3)}))
    cols = [[h.rows[i][j] for j in cells.indices()] for i in range(h.nrows)]
    assert rank(MatrixF(F5, cols)) == len(cells.cells)


def test_mr_pass_on_rs_row_code():
    r = mr_check(_spec_3x5(_rs(F5, 5, 3)))
    assert r.ok
    assert "mode=exhaustive" in r.detail


def test_mr_fail_on_degenerate_row_code():
    bad = explicit_code(F5, [[1, 0, 0, 1, 1], [0, 1, 0, 1, 1], [0, 0, 1, 0, 0]])
    r = mr_check(_spec_3x5(bad))
    assert not r.ok
    assert "correctable generically" in r.detail


def test_mr_matches_mds_order_m3():
    # row codes passing MDS(3) pass mr, failing ones fail it
    rng = random.Random(11)
    col = single_parity_code(F7, 3)
    npass = nfail = 0
    while npass < 3 or nfail < 3:
        row = _random_code(rng, F7, 7, 5, 3)
        verdict = is_mds_ell(row, 3).ok
        if (verdict and npass >= 3) or (not verdict and nfail >= 3):
            continue
        assert mr_check(TensorCodeSpec(col, row)).ok == verdict
        npass += verdict
        nfail += not verdict


def test_mr_matches_mds_order_m2():
    # m=2, a=1: maximal recoverability reduces to the row code being MDS
    rng = random.Random(3)
    col = single_parity_code(F5, 2)
    for _ in range(6):
        row = _random_code(rng, F5, 5, 4, 2)
        assert mr_check(TensorCodeSpec(col, row)).ok == is_mds(row).ok


def test_mr_sampling_mode_agrees():
    spec = TensorCodeSpec(single_parity_code(F5, 2), _rs(F5, 4, 2))
    full = mr_check(spec)
    sampled = mr_check(spec, budget=200)
    assert "mode=sampled" in sampled.detail
    assert sampled.ok == full.ok
    assert sampled.tuples == 200


def test_mr_validation():
    full_col = _rs(F5, 3, 3)
    with pytest.raises(SizeConstraintError):
        mr_check(TensorCodeSpec(full_col, _rs(F5, 5, 3)))
