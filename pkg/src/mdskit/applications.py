"""List-decoding and tensor-code consequences of the higher-order MDS checks.

Brute-force deciders for average-radius list decodability (a syndrome-bucket
search over weight-bounded vectors), the order-(ell+1) duality cross-check,
worst-case list decodability by Hamming-ball enumeration, and maximal
recoverability of tensor codes against a randomized generic oracle.

Everything here is exhaustive verification at desk scale, not an efficient
decoder.  Grid cells are addressed row-major: cell (r, c) is column r*n + c
of the tensor parity-check matrix.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .codes import (
    GENERIC_ORACLE_PRIME,
    CodeSpec,
    dual_code,
    explicit_code,
    generator_matrix,
)
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    RankLossError,
    SizeConstraintError,
)
from .fields import FieldSpec
from .linalg import MatrixF, rref
from .mdscheck import CheckReport, _field_int_tables, _report, is_mds_ell

__all__ = [
    "ErasurePattern",
    "TensorCodeSpec",
    "parse_pattern",
    "single_parity_code",
    "ld_mds_check",
    "duality_test",
    "worst_case_ld_check",
    "tensor_parity",
    "mr_check",
]


@dataclass(frozen=True)
class ErasurePattern:
    """A set of erased cells of an m x n grid, as 0-based (row, col) pairs."""

    m: int
    n: int
    cells: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        for r, c in self.cells:
            if not (0 <= r < self.m and 0 <= c < self.n):
                raise SizeConstraintError(
                    f"cell ({r},{c}) outside the {self.m}x{self.n} grid"
                )

    @classmethod
    def from_indices(cls, m: int, n: int, indices) -> "ErasurePattern":
        return cls(m, n, frozenset(divmod(i, n) for i in indices))

    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted(r * self.n + c for r, c in self.cells))

    def format(self) -> str:
        return ";".join(f"{r},{c}" for r, c in sorted(self.cells))


def parse_pattern(text: str, m: int, n: int) -> ErasurePattern:
    """Parse the semicolon-separated "r,c;r,c" cell list."""
    cells = set()
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        r, c = chunk.split(",")
        cells.add((int(r), int(c)))
    return ErasurePattern(m, n, frozenset(cells))


@dataclass(frozen=True)
class TensorCodeSpec:
    """C_col (x) C_row: an [m, m-a] column code and an [n, n-b] row code."""

    col_code: CodeSpec
    row_code: CodeSpec

    def __post_init__(self):
        if self.col_code.field != self.row_code.field:
            raise FieldMismatchError("component codes must share a field")

    @property
    def m(self) -> int:
        return self.col_code.n

    @property
    def n(self) -> int:
        return self.row_code.n

    @property
    def a(self) -> int:
        return self.col_code.n - self.col_code.k

    @property
    def b(self) -> int:
        return self.row_code.n - self.row_code.k


def single_parity_code(field: FieldSpec, m: int) -> CodeSpec:
    """The [m, m-1] code of vectors whose coordinates sum to zero."""
    if m < 2:
        raise SizeConstraintError("need m >= 2")
    rows = []
    for i in range(m - 1):
        row = [field.zero] * m
        row[i] = field.one
        row[m - 1] = -field.one
        rows.append(row)
    return explicit_code(field, rows)


# -- average-radius list decodability ---------------------------------------------


def _weight_bounded_count(n: int, q: int, w_max: int) -> int:
    return sum(math.comb(n, w) * (q - 1) ** w for w in range(w_max + 1))


def _ld_single(code: CodeSpec, ell: int, budget: int):
    """One list size: (ok, vectors enumerated, failure detail)."""
    n, k = code.n, code.k
    if k == n:
        # weight budget ell*(n-k) = 0: only the zero vector qualifies
        return True, 1, None
    if k == 0:
        # the syndrome map is injective, buckets are singletons
        return True, 0, None
    w_max = ell * (n - k)
    q = code.field.order
    # guard before touching the int backend: its tables are q^2 entries
    count = _weight_bounded_count(n, q, w_max)
    if count > budget:
        raise BudgetExceededError(
            f"{count} weight-bounded vectors exceed budget {budget}"
        )
    q, els, add, mul, _neg = _field_int_tables(code.field)
    idx = {e.coeffs: i for i, e in enumerate(els)}
    h = generator_matrix(dual_code(code))
    hrows = [[idx[x.coeffs] for x in row] for row in h.rows]
    nonzero = range(1, q)
    # buckets hold the first ell+1 arrivals; weight-ascending enumeration
    # makes those the minimum-total choice, so each bucket is decided once
    buckets: Dict[Tuple[int, ...], List[Tuple[int, Tuple[int, ...]]]] = {}
    seen = 0
    for w in range(w_max + 1):
        for supp in itertools.combinations(range(n), w):
            for vals in itertools.product(nonzero, repeat=w):
                seen += 1
                syn = []
                for hrow in hrows:
                    acc = 0
                    for p, v in zip(supp, vals):
                        acc = add[acc][mul[hrow[p]][v]]
                    syn.append(acc)
                best = buckets.setdefault(tuple(syn), [])
                if len(best) > ell:
                    continue
                vec = [0] * n
                for p, v in zip(supp, vals):
                    vec[p] = v
                best.append((w, tuple(vec)))
                if len(best) == ell + 1:
                    total = sum(b[0] for b in best)
                    if total <= w_max:
                        vecs = " | ".join(str(b[1]) for b in best)
                        detail = (
                            f"list size {ell}: {ell + 1} distinct vectors share "
                            f"a syndrome with total weight {total} <= {w_max}: "
                            f"{vecs}"
                        )
                        return False, seen, detail
    return True, seen, None


def ld_mds_check(
    code: CodeSpec, L: int, up_to: bool = True, budget: int = 10**6
) -> CheckReport:
    """Decide average-radius list decodability at list size L.

    Fails iff L+1 distinct vectors share a syndrome of the code's parity
    check with total weight at most L*(n-k); the search enumerates vectors
    in weight-ascending order and buckets them by syndrome.  With up_to=True
    the property is required at every list size 1..L.  Vector entries in
    failure details are canonical element indices.
    """
    t0 = time.perf_counter()
    if L < 1:
        raise SizeConstraintError(f"need L >= 1, got {L}")
    prop = f"ld-mds(<={L})" if up_to else f"ld-mds({L})"
    sizes = range(1, L + 1) if up_to else (L,)
    total = 0
    for ell in sizes:
        ok, seen, detail = _ld_single(code, ell, budget)
        total += seen
        if not ok:
            return _report(prop, False, total, t0, detail=detail)
    return _report(prop, True, total, t0)


def duality_test(code: CodeSpec, ell: int, budget: int = 10**6) -> CheckReport:
    """Cross-check order-(ell+1) structure against list decodability of the dual.

    Runs is_mds_ell(code, ell+1) and ld_mds_check(dual, <=ell) independently
    and passes iff the verdicts agree; a disagreement would falsify one of
    the two implementations, so the detail always records both verdicts.
    """
    t0 = time.perf_counter()
    if ell < 1:
        raise SizeConstraintError(f"need ell >= 1, got {ell}")
    prop = f"duality(ell={ell})"
    if code.k == 0:
        return _report(prop, True, 0, t0, detail="zero-dimensional code")
    left = is_mds_ell(code, ell + 1)
    right = ld_mds_check(dual_code(code), ell, up_to=True, budget=budget)
    detail = f"mds({ell + 1})={left.verdict} ld-mds(<={ell})={right.verdict}"
    return _report(
        prop, left.ok == right.ok, left.tuples + right.tuples, t0, detail=detail
    )


# -- worst-case list decodability --------------------------------------------------


def worst_case_ld_check(
    code: CodeSpec,
    L: int,
    radius_num: int,
    radius_den: int,
    budget: int = 10**6,
) -> CheckReport:
    """Decide (L, rho)-worst-case list decodability, rho = radius_num/radius_den.

    Passes iff every point of F_q^n has at most L codewords within Hamming
    distance floor(rho*n).  Implemented by sweeping a radius-floor(rho*n)
    ball around every codeword, so the work is q^k times the ball size;
    both that product and q^n must stay within the budget.
    """
    t0 = time.perf_counter()
    if L < 0:
        raise SizeConstraintError(f"need L >= 0, got {L}")
    if radius_num < 0 or radius_den <= 0:
        raise SizeConstraintError("radius must be a nonnegative rational")
    n, k = code.n, code.k
    q = code.field.order
    t = min((radius_num * n) // radius_den, n)
    ball = _weight_bounded_count(n, q, t)
    # guard before touching the int backend: its tables are q^2 entries
    if q**n > budget or q**k * ball > budget:
        raise BudgetExceededError(
            f"{q}^{n} points or {q}^{k}*{ball} ball sweeps exceed budget {budget}"
        )
    prop = f"worst-case-ld(L={L},rho={radius_num}/{radius_den})"
    q, els, add, mul, _neg = _field_int_tables(code.field)
    idx = {e.coeffs: i for i, e in enumerate(els)}
    g = generator_matrix(code)
    grows = [[idx[x.coeffs] for x in row] for row in g.rows]
    codewords = []
    for msg in itertools.product(range(q), repeat=k):
        cw = []
        for j in range(n):
            acc = 0
            for i in range(k):
                acc = add[acc][mul[msg[i]][grows[i][j]]]
            cw.append(acc)
        codewords.append(tuple(cw))
    counts: Dict[Tuple[int, ...], int] = {}
    swept = 0
    offender = None
    for cw in codewords:
        for w in range(t + 1):
            for supp in itertools.combinations(range(n), w):
                for vals in itertools.product(range(1, q), repeat=w):
                    swept += 1
                    y = list(cw)
                    for p, v in zip(supp, vals):
                        y[p] = add[y[p]][v]
                    y = tuple(y)
                    c = counts.get(y, 0) + 1
                    counts[y] = c
                    if c > L and offender is None:
                        offender = y
        if offender is not None:
            break
    if offender is not None:
        near = [cw for cw in codewords if sum(a != b for a, b in zip(cw, offender)) <= t]
        detail = (
            f"center {offender} has {len(near)} > {L} codewords within "
            f"radius {t}: " + " | ".join(str(cw) for cw in near)
        )
        return _report(prop, False, swept, t0, detail=detail)
    worst = max(counts.values()) if counts else 0
    return _report(
        prop, True, swept, t0, detail=f"radius {t}, max list size {worst}"
    )


# -- tensor codes -------------------------------------------------------------------


def _tensor_layout(hcol_rows, hrow_rows, m: int, n: int, zero):
    """Stacked constraint rows on row-major cells: per-column checks, then per-row."""
    rows = []
    for c in range(n):
        for h in hcol_rows:
            row = [zero] * (m * n)
            for r in range(m):
                row[r * n + c] = h[r]
            rows.append(row)
    for r in range(m):
        for h in hrow_rows:
            row = [zero] * (m * n)
            for c in range(n):
                row[r * n + c] = h[c]
            rows.append(row)
    return rows


def tensor_parity(spec: TensorCodeSpec) -> MatrixF:
    """Parity-check matrix of C_col (x) C_row on row-major cell coordinates.

    Stacks the column-code checks applied to every grid column over the
    row-code checks applied to every grid row, row-reduces, and drops zero
    rows; the result has rank m*n - (m-a)*(n-b).
    """
    field = spec.col_code.field
    m, n = spec.m, spec.n
    hcol = generator_matrix(dual_code(spec.col_code))
    hrow = generator_matrix(dual_code(spec.row_code))
    stacked = _tensor_layout(hcol.rows, hrow.rows, m, n, field.zero)
    reduced, pivots = rref(MatrixF(field, stacked))
    expected = m * n - (m - spec.a) * (n - spec.b)
    if len(pivots) != expected:
        raise RankLossError(
            f"tensor parity rank {len(pivots)}, expected {expected}"
        )
    return MatrixF(field, [list(reduced.rows[i]) for i in range(len(pivots))])


def _independent_family(columns, eliminate, normalize) -> Set[FrozenSet[int]]:
    """All column-index subsets that are linearly independent.

    Depth-first with one elimination step per (node, candidate): candidates
    are kept reduced against the current basis, and a candidate that reduces
    to zero is dropped from the whole subtree (supersets stay dependent).
    """
    family: Set[FrozenSet[int]] = set()

    def rec(prefix, cand, new_basis):
        family.add(frozenset(prefix))
        survivors = []
        for j, col in cand:
            if new_basis is not None:
                col = eliminate(col, new_basis[0], new_basis[1])
            if any(col):
                survivors.append((j, col))
        for pos, (j, col) in enumerate(survivors):
            lead = next(i for i, x in enumerate(col) if x)
            prefix.append(j)
            rec(prefix, survivors[pos + 1 :], (normalize(col, lead), lead))
            prefix.pop()

    rec([], list(enumerate(columns)), None)
    return family


def _table_backend(q, add, mul, neg):
    inv = [0] * q
    for x in range(1, q):
        inv[x] = next(y for y in range(1, q) if mul[x][y] == 1)

    def eliminate(col, vec, lead):
        f = col[lead]
        if not f:
            return col
        return tuple(add[c][neg[mul[f][v]]] for c, v in zip(col, vec))

    def normalize(col, lead):
        iv = inv[col[lead]]
        return tuple(mul[iv][c] for c in col)

    return eliminate, normalize


def _modp_backend(p):
    def eliminate(col, vec, lead):
        f = col[lead]
        if not f:
            return col
        return tuple((c - f * v) % p for c, v in zip(col, vec))

    def normalize(col, lead):
        iv = pow(col[lead], p - 2, p)
        return tuple(c * iv % p for c in col)

    return eliminate, normalize


def _cols_independent(columns, idxs, eliminate, normalize) -> bool:
    if columns and len(idxs) > len(columns[0]):
        return False
    basis = []
    for j in idxs:
        col = columns[j]
        for vec, lead in basis:
            col = eliminate(col, vec, lead)
        lead = next((i for i, x in enumerate(col) if x), None)
        if lead is None:
            return False
        basis.append((normalize(col, lead), lead))
    return True


def _actual_int_columns(spec: TensorCodeSpec):
    q, els, add, mul, neg = _field_int_tables(spec.col_code.field)
    idx = {e.coeffs: i for i, e in enumerate(els)}
    hcol = generator_matrix(dual_code(spec.col_code))
    hrow = generator_matrix(dual_code(spec.row_code))
    rows = _tensor_layout(
        [[idx[x.coeffs] for x in row] for row in hcol.rows],
        [[idx[x.coeffs] for x in row] for row in hrow.rows],
        spec.m,
        spec.n,
        0,
    )
    cols = [tuple(row[j] for row in rows) for j in range(spec.m * spec.n)]
    return cols, _table_backend(q, add, mul, neg)


def _generic_int_columns(m, n, a, b, rng):
    p = GENERIC_ORACLE_PRIME
    hcol = [[rng.randrange(p) for _ in range(m)] for _ in range(a)]
    hrow = [[rng.randrange(p) for _ in range(n)] for _ in range(b)]
    rows = _tensor_layout(hcol, hrow, m, n, 0)
    return [tuple(row[j] for row in rows) for j in range(m * n)]


# majority-vote generic families, keyed by shape; the oracle is seeded, so
# every spec of the same shape shares one family
_GENERIC_FAMILY_CACHE: Dict[tuple, Set[FrozenSet[int]]] = {}


def _generic_family(m, n, a, b, trials, seed) -> Set[FrozenSet[int]]:
    key = (m, n, a, b, trials, seed)
    cached = _GENERIC_FAMILY_CACHE.get(key)
    if cached is not None:
        return cached
    rng = random.Random(seed)
    eliminate, normalize = _modp_backend(GENERIC_ORACLE_PRIME)
    votes: Dict[FrozenSet[int], int] = {}
    for _ in range(trials):
        cols = _generic_int_columns(m, n, a, b, rng)
        for e in _independent_family(cols, eliminate, normalize):
            votes[e] = votes.get(e, 0) + 1
    fam = {e for e, v in votes.items() if 2 * v > trials}
    _GENERIC_FAMILY_CACHE[key] = fam
    return fam


def mr_check(
    spec: TensorCodeSpec,
    budget: int = 10**6,
    trials: int = 5,
    seed: int = 0,
) -> CheckReport:
    """Maximal recoverability: correctable patterns match the generic oracle.

    A pattern E is correctable iff the E-indexed columns of the tensor
    parity check are independent.  The actual family of correctable patterns
    is compared against the family for random component codes over a large
    prime field (majority over `trials` seeded runs).  All 2^(m*n) patterns
    are decided when that count is within budget; otherwise a seeded uniform
    sample of `budget` patterns is compared, with coverage in the detail.
    """
    t0 = time.perf_counter()
    m, n, a, b = spec.m, spec.n, spec.a, spec.b
    if a < 1 or b < 0:
        raise SizeConstraintError("need a >= 1 and b >= 0")
    cells = m * n
    prop = f"mr-tensor(m={m},n={n},a={a},b={b})"
    q = spec.row_code.field.order
    # the int backend precomputes q^2-entry tables; a pattern decision costs
    # on the order of 100 int ops, so keep the table cost inside that scale
    if q * q > 100 * budget:
        raise BudgetExceededError(
            f"field order {q} needs {q * q} table entries, over budget {budget}"
        )
    act_cols, (elim_t, norm_t) = _actual_int_columns(spec)

    if 2**cells <= budget:
        fam_act = _independent_family(act_cols, elim_t, norm_t)
        fam_gen = _generic_family(m, n, a, b, trials, seed)
        diff = fam_act ^ fam_gen
        if diff:
            e = min(diff, key=lambda s: (len(s), tuple(sorted(s))))
            side = (
                "correctable generically but not by this code"
                if e in fam_gen
                else "correctable by this code but not generically"
            )
            pattern = ErasurePattern.from_indices(m, n, e)
            detail = (
                f"mode=exhaustive; pattern {pattern.format() or '(empty)'} "
                f"{side}; {len(diff)} disagreements"
            )
            return _report(prop, False, 2**cells, t0, detail=detail)
        detail = (
            f"mode=exhaustive; {len(fam_act)} of {2**cells} patterns correctable"
        )
        return _report(prop, True, 2**cells, t0, detail=detail)

    # sampling mode
    rng = random.Random(seed)
    elim_p, norm_p = _modp_backend(GENERIC_ORACLE_PRIME)
    gen_runs = [
        _generic_int_columns(m, n, a, b, random.Random(seed + 1 + i))
        for i in range(trials)
    ]
    for _ in range(budget):
        bits = rng.getrandbits(cells)
        idxs = [j for j in range(cells) if bits >> j & 1]
        act = _cols_independent(act_cols, idxs, elim_t, norm_t)
        votes = sum(
            _cols_independent(cols, idxs, elim_p, norm_p) for cols in gen_runs
        )
        gen = 2 * votes > trials
        if act != gen:
            pattern = ErasurePattern.from_indices(m, n, idxs)
            side = (
                "correctable generically but not by this code"
                if gen
                else "correctable by this code but not generically"
            )
            detail = (
                f"mode=sampled {budget}/{2**cells}; pattern "
                f"{pattern.format() or '(empty)'} {side}"
            )
            return _report(prop, False, budget, t0, detail=detail)
    detail = f"mode=sampled; {budget} of {2**cells} patterns agree"
    return _report(prop, True, budget, t0, detail=detail)
