"""The verification engine for higher-order MDS properties.

Decision paths implemented here:

* ``is_mds``: every k x k minor of the generator matrix nonzero; for
  Reed-Solomon codes each minor is evaluated through the Vandermonde
  product formula, which needs no division and stays cheap over deep
  extension towers.
* ``is_mds_ell``: the definitional check; enumerates canonical set tuples
  (unordered, since the test is symmetric), filters by the generic-zero
  predicate, and evaluates the block certificate determinant.  For three
  sets the enumeration is reduced to sizes <= k-1 after an MDS precheck.
* ``is_mds3_rs_fast``: Reed-Solomon fast paths: the six-point pairing
  determinants when k = 3, and the disjointness reduction followed by the
  product-polynomial matrix for general k.
* ``lb_witness_projective``: the projective-point distinctness witness
  behind the field-size lower bound.
* ``exhaustive_code_search``: complete systematic enumeration at tiny
  parameters over integer-encoded field tables.

All reports carry the number of tuples examined (determinant evaluations
or point comparisons performed) and wall time.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .codes import (
    CodeSpec,
    SetTuple,
    explicit_code,
    generator_matrix,
    generically_zero,
)
from .errors import (
    BudgetExceededError,
    NotMDSError,
    SizeConstraintError,
    WrongKindError,
)
from .fields import FieldElement, FieldSpec, field_make, prime_factors
from .linalg import MatrixF, block_mds_matrix, det, rank, rref
from math import comb

__all__ = [
    "CheckReport",
    "SearchResult",
    "is_mds",
    "is_mds_ell",
    "is_mds3_rs_fast",
    "lb_witness_projective",
    "exhaustive_code_search",
]


@dataclass
class CheckReport:
    prop: str
    ok: bool
    tuples: int
    time_ms: int
    witness: Optional[SetTuple] = None
    detail: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def to_line(self) -> str:
        line = (
            f"property={self.prop} verdict={self.verdict} "
            f"tuples={self.tuples} time_ms={self.time_ms}"
        )
        if self.witness is not None:
            line += f" witness={self.witness.format()}"
        return line


def _report(prop, ok, tuples, t0, witness=None, detail=None) -> CheckReport:
    return CheckReport(
        prop, ok, tuples, int((time.perf_counter() - t0) * 1000), witness, detail
    )


# -- MDS ------------------------------------------------------------------------


def _pair_diffs(code: CodeSpec) -> Dict[Tuple[int, int], FieldElement]:
    diffs: Dict[Tuple[int, int], FieldElement] = {}
    gens = code.generators
    assert gens is not None
    for i in range(code.n):
        for j in range(i + 1, code.n):
            diffs[(i, j)] = gens[j] - gens[i]
    return diffs


def _minimal_dependent(m: MatrixF, cols: Sequence[int]) -> List[int]:
    cols = list(cols)
    changed = True
    while changed:
        changed = False
        for c in list(cols):
            rest = [x for x in cols if x != c]
            if rest and rank(m.submatrix(range(m.nrows), rest)) < len(rest):
                cols = rest
                changed = True
                break
    return cols


def is_mds(code: CodeSpec) -> CheckReport:
    """Every k x k minor of the generator matrix must be nonzero."""
    t0 = time.perf_counter()
    k, n = code.k, code.n
    count = 0
    if code.kind == "rs":
        diffs = _pair_diffs(code)
        for cols in itertools.combinations(range(n), k):
            count += 1
            # Vandermonde minor: product of generator differences
            val = code.field.one
            for a, b in itertools.combinations(cols, 2):
                val = val * diffs[(a, b)]
            if val.is_zero():
                return _report(
                    "mds", False, count, t0, SetTuple((cols,), n, k)
                )
        return _report("mds", True, count, t0)
    g = generator_matrix(code)
    for cols in itertools.combinations(range(n), k):
        count += 1
        if det(g.submatrix(range(k), cols)).is_zero():
            small = _minimal_dependent(g, cols)
            return _report(
                "mds", False, count, t0, SetTuple((tuple(small),), n, k)
            )
    return _report("mds", True, count, t0)


# -- canonical tuple enumeration ---------------------------------------------------


def _nondecreasing_profiles(total: int, ell: int, cap: int) -> Iterator[Tuple[int, ...]]:
    def rec(remaining, slots, lo):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for s in range(lo, cap + 1):
            if s > remaining or remaining > s + cap * (slots - 1):
                continue
            for rest in rec(remaining - s, slots - 1, s):
                yield (s,) + rest

    yield from rec(total, ell, 0)


def _canonical_tuples(n: int, k: int, ell: int, cap: int) -> Iterator[SetTuple]:
    """Unordered qualifying tuples: sizes nondecreasing, sets nondecreasing
    within equal-size groups (the determinant tests are symmetric)."""
    total = (ell - 1) * k
    cap = min(cap, n)
    for profile in _nondecreasing_profiles(total, ell, cap):
        groups = [(s, len(list(g))) for s, g in itertools.groupby(profile)]
        pools = {s: list(itertools.combinations(range(n), s)) for s, _ in groups}
        choices = [
            itertools.combinations_with_replacement(pools[s], cnt)
            for s, cnt in groups
        ]
        for parts in itertools.product(*choices):
            sets = tuple(a for group in parts for a in group)
            yield SetTuple(sets, n, k)


# -- the definitional block-determinant check ----------------------------------------


def is_mds_ell(code: CodeSpec, ell: int) -> CheckReport:
    """Decide MDS(ell) through block certificate determinants.

    Order of work: MDS precheck first (MDS(ell) implies MDS, and the
    reductions below assume it), then canonical tuple enumeration with the
    generic-zero filter.  For ell = 3 only sizes up to k-1 need checking
    once the code is MDS; size-k sets span everything and larger tuples
    reduce to fewer sets.
    """
    t0 = time.perf_counter()
    if ell < 1:
        raise SizeConstraintError("ell must be at least 1")
    prop = f"mds{ell}"
    base = is_mds(code)
    if not base.ok:
        return _report(prop, False, base.tuples, t0, base.witness)
    if ell <= 2:
        return _report(prop, True, base.tuples, t0)
    cap = code.k - 1 if ell == 3 else code.k
    g = generator_matrix(code)
    count = 0
    for tup in _canonical_tuples(code.n, code.k, ell, cap):
        if not generically_zero(tup):
            continue
        count += 1
        m = block_mds_matrix(g, tup.sets)
        if det(m).is_zero():
            return _report(prop, False, count, t0, tup)
    return _report(prop, True, count, t0)


# -- Reed-Solomon fast paths -----------------------------------------------------------


def _pairings_of_six(items: Sequence[int]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """All 15 ways to split six items into three unordered pairs."""
    a = items[0]
    rest = list(items[1:])
    for i, b in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        c = remaining[0]
        for j, d in enumerate(remaining[1:], start=1):
            last = [remaining[t] for t in range(1, 4) if t != j]
            yield ((a, b), (c, d), (last[0], last[1]))


class _ProductMatrixContext:
    """Cached elementary-symmetric products for one Reed-Solomon code."""

    def __init__(self, code: CodeSpec):
        assert code.generators is not None
        self.field = code.field
        self.gens = code.generators
        self._diff: Dict[Tuple[int, int], FieldElement] = {}
        self._pi: Dict[Tuple[frozenset, int], FieldElement] = {}
        self._col: Dict[Tuple[frozenset, int, int], FieldElement] = {}
        self._pow: Dict[Tuple[int, int], FieldElement] = {}

    def diff(self, a: int, b: int) -> FieldElement:
        # generator a minus generator b
        key = (a, b)
        got = self._diff.get(key)
        if got is None:
            got = self.gens[a] - self.gens[b]
            self._diff[key] = got
        return got

    def power(self, a: int, t: int) -> FieldElement:
        key = (a, t)
        got = self._pow.get(key)
        if got is None:
            got = self.gens[a] ** t
            self._pow[key] = got
        return got

    def pi(self, subset: frozenset, a: int) -> FieldElement:
        # product of (gen_a - gen_x) over x in subset
        key = (subset, a)
        got = self._pi.get(key)
        if got is None:
            got = self.field.one
            for x in subset:
                got = got * self.diff(a, x)
            self._pi[key] = got
        return got

    def column_entry(self, subset: frozenset, a: int, t: int) -> FieldElement:
        key = (subset, a, t)
        got = self._col.get(key)
        if got is None:
            got = self.pi(subset, a) * self.power(a, t)
            self._col[key] = got
        return got


def _det_small(field: FieldSpec, rows: List[List[FieldElement]]) -> FieldElement:
    m = len(rows)
    if m == 0:
        return field.one
    if m == 1:
        return rows[0][0]
    if m == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if m == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return det(MatrixF(field, rows))


def weak_reduce(tup: SetTuple) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
    """Strip elements shared by two sets, lowering k; returns disjoint sets
    and the reduced dimension.  Requires an empty triple intersection."""
    sets = [set(a) for a in tup.sets]
    k = tup.k
    changed = True
    while changed:
        changed = False
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                common = sets[i] & sets[j]
                if common:
                    x = min(common)
                    sets[i].discard(x)
                    sets[j].discard(x)
                    k -= 1
                    changed = True
                    break
            if changed:
                break
    return tuple(tuple(sorted(s)) for s in sets), k


def _product_matrix_det_nonzero(
    ctx: _ProductMatrixContext, sets: Sequence[Tuple[int, ...]], k: int
) -> bool:
    """The product-polynomial certificate for a disjoint tuple over an RS
    code of dimension k: nonzero determinant means trivial intersection."""
    order = sorted(range(len(sets)), key=lambda i: len(sets[i]))
    row_set = sets[order[0]]
    others = [sets[i] for i in order[1:]]
    m = len(row_set)
    if m == 0:
        return True
    rows = []
    for a in row_set:
        row = []
        for subset in others:
            delta = k - len(subset)
            fs = frozenset(subset)
            for t in range(delta):
                row.append(ctx.column_entry(fs, a, t))
        rows.append(row)
    return not _det_small(ctx.field, rows).is_zero()


def is_mds3_rs_fast(code: CodeSpec) -> CheckReport:
    """Reed-Solomon MDS(3) fast path.

    k = 3: for every six-point subset and each of its 15 perfect pairings,
    the 3 x 3 matrix with rows (1, b+b', b*b') must be nonsingular.
    Other k: canonical tuples of sizes <= k-1 pass the generic-zero filter,
    are made disjoint by the stripping reduction, and are certified by the
    product-polynomial determinant.
    """
    if code.kind != "rs":
        raise WrongKindError("the fast MDS(3) path requires a Reed-Solomon code")
    t0 = time.perf_counter()
    assert code.generators is not None
    n, k = code.n, code.k
    gens = code.generators
    count = 0
    if k == 3:
        one = code.field.one
        for six in itertools.combinations(range(n), 6):
            prods = {}
            sums = {}
            for a, b in itertools.combinations(six, 2):
                sums[(a, b)] = gens[a] + gens[b]
                prods[(a, b)] = gens[a] * gens[b]
            for pairing in _pairings_of_six(six):
                count += 1
                rows = [[one, sums[p], prods[p]] for p in pairing]
                if _det_small(code.field, rows).is_zero():
                    return _report(
                        "mds3-rs", False, count, t0, SetTuple(pairing, n, k)
                    )
        return _report("mds3-rs", True, count, t0)
    ctx = _ProductMatrixContext(code)
    for tup in _canonical_tuples(n, k, 3, k - 1):
        if not generically_zero(tup):
            continue
        count += 1
        sets, k2 = weak_reduce(tup)
        if any(len(s) >= k2 for s in sets) or k2 <= 0:
            # a full-size set spans everything; the remaining union has at
            # most k2 columns, independent because the code is MDS
            continue
        if not _product_matrix_det_nonzero(ctx, sets, k2):
            return _report("mds3-rs", False, count, t0, tup)
    return _report("mds3-rs", True, count, t0)


# -- the projective lower-bound witness ---------------------------------------------


def lb_witness_projective(code: CodeSpec) -> CheckReport:
    """Distinctness of the projective points attached to (k-1)-subsets.

    After normalizing the first two columns to unit vectors, each
    (k-1)-subset A of the remaining positions yields a point
    (w1 : w2) built from maximal minors; two subsets sharing a point give
    a concrete intersecting triple, and distinctness for all pairs forces
    the field-size lower bound C(n-2, k-1) - 1.
    """
    t0 = time.perf_counter()
    n, k = code.n, code.k
    if k < 2 or n < k + 1:
        raise SizeConstraintError("need k >= 2 and n >= k+1")
    if not is_mds(code).ok:
        raise NotMDSError("projective witness requires an MDS code")
    bound = max(0, comb(n - 2, k - 1) - 1)
    detail = f"bound={bound}"
    if code.kind == "rs" and k == 2:
        # unnormalized pair form; scaling both coordinates by the same
        # nonzero factor does not move a projective point
        assert code.generators is not None
        g0, g1 = code.generators[0], code.generators[1]
        pts = [
            (g0 - code.generators[a], g1 - code.generators[a])
            for a in range(2, n)
        ]
        subsets = [(a,) for a in range(2, n)]
    else:
        g = generator_matrix(code)
        norm, pivots = rref(g)
        if pivots[:2] != (0, 1):
            raise NotMDSError("first two columns are dependent")
        rows_w1 = list(range(1, k))
        rows_w2 = [0] + list(range(2, k))
        pts = []
        subsets = list(itertools.combinations(range(2, n), k - 1))
        for a in subsets:
            w1 = -det(norm.submatrix(rows_w1, a))
            w2 = det(norm.submatrix(rows_w2, a))
            pts.append((w1, w2))
    count = 0
    for i in range(len(pts)):
        w1i, w2i = pts[i]
        if w1i.is_zero() and w2i.is_zero():
            witness = SetTuple(((0, 1), subsets[i], subsets[i]), n, k)
            return _report("lb-witness", False, count, t0, witness, detail)
        for j in range(i + 1, len(pts)):
            count += 1
            w1j, w2j = pts[j]
            if (w1i * w2j - w2i * w1j).is_zero():
                witness = SetTuple(((0, 1), subsets[i], subsets[j]), n, k)
                return _report(
                    "lb-witness", False, count, t0, witness, detail
                )
    q_ok = code.field.order >= bound
    detail += f" q_at_least_bound={q_ok}"
    return _report("lb-witness", q_ok, count, t0, None, detail)


# -- exhaustive search over tiny parameter spaces -------------------------------------


@dataclass
class SearchResult:
    count: int
    exemplars: List[CodeSpec]
    candidates: int


def _field_int_tables(field: FieldSpec):
    els = list(field.elements())
    q = len(els)
    idx = {e.coeffs: i for i, e in enumerate(els)}
    add = [[idx[(a + b).coeffs] for b in els] for a in els]
    mul = [[idx[(a * b).coeffs] for b in els] for a in els]
    neg = [idx[(-a).coeffs] for a in els]
    return q, els, add, mul, neg


def _int_det3(m, add, mul, neg):
    (a, b, c), (d, e, f), (g, h, i) = m
    t1 = mul[a][add[mul[e][i]][neg[mul[f][h]]]]
    t2 = mul[b][add[mul[d][i]][neg[mul[f][g]]]]
    t3 = mul[c][add[mul[d][h]][neg[mul[e][g]]]]
    return add[add[t1][neg[t2]]][t3]


def _int_det2(m, add, mul, neg):
    (a, b), (c, d) = m
    return add[mul[a][d]][neg[mul[b][c]]]


def _int_cross(u, v, add, mul, neg):
    return (
        add[mul[u[1]][v[2]]][neg[mul[u[2]][v[1]]]],
        add[mul[u[2]][v[0]]][neg[mul[u[0]][v[2]]]],
        add[mul[u[0]][v[1]]][neg[mul[u[1]][v[0]]]],
    )


def _totally_nonsingular(x_rows, k, w, add, mul, neg) -> bool:
    # all square minors of the k x w block nonzero, smallest first
    for row in x_rows:
        if any(v == 0 for v in row):
            return False
    for size in range(2, min(k, w) + 1):
        for rr in itertools.combinations(range(k), size):
            for cc in itertools.combinations(range(w), size):
                sub = [[x_rows[i][j] for j in cc] for i in rr]
                if size == 2:
                    if _int_det2(sub, add, mul, neg) == 0:
                        return False
                elif size == 3:
                    if _int_det3(sub, add, mul, neg) == 0:
                        return False
                else:
                    if _int_gauss_det(sub, add, mul, neg) == 0:
                        return False
    return True


def _int_gauss_det(rows, add, mul, neg):
    rows = [list(r) for r in rows]
    m = len(rows)
    detv = 1
    # build inverse by scanning (tiny fields only)
    for col in range(m):
        piv = next((r for r in range(col, m) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            detv = neg[detv]
        pv = rows[col][col]
        detv = mul[detv][pv]
        inv = next(x for x in range(len(mul)) if mul[pv][x] == 1)
        for r in range(col + 1, m):
            if rows[r][col]:
                f = mul[rows[r][col]][inv]
                rows[r] = [
                    add[rows[r][j]][neg[mul[f][rows[col][j]]]] for j in range(m)
                ]
    return detv


def _int_rref_key(cols, k, add, mul, neg):
    # canonical row-space key of the k x n matrix given as columns
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] for i in range(k)]
    q = len(add)
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, k) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        inv = next(x for x in range(q) if mul[pv][x] == 1)
        rows[r] = [mul[inv][v] for v in rows[r]]
        for i in range(k):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [add[rows[i][j]][neg[mul[f][rows[r][j]]]] for j in range(n)]
        r += 1
        if r == k:
            break
    return tuple(tuple(row) for row in rows)


def _prime_power(q: int) -> Tuple[int, int]:
    facs = prime_factors(q)
    if len(facs) != 1:
        raise SizeConstraintError(f"{q} is not a prime power")
    p = facs[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise SizeConstraintError("not a prime power")
    return p, e


def _make_field_of_order(q: int) -> FieldSpec:
    p, e = _prime_power(q)
    f = field_make(p)
    if e > 1:
        f = f.extend(e)
    return f


def exhaustive_code_search(
    n: int,
    k: int,
    q: int,
    prop: str = "mds3",
    budget: int = 10**6,
    all_information_sets: bool = True,
    exemplar_cap: int = 10,
) -> SearchResult:
    """Count MDS(3) codes among all systematic [n, k] codes over GF(q).

    Enumerates generator matrices with identity columns at a chosen
    information set and a free block elsewhere; with all_information_sets,
    sweeps every placement and deduplicates row spaces.  The per-candidate
    decision is exact: the code must be MDS (free block totally
    nonsingular) and every filtered (k-1)-sized triple must have trivial
    span intersection.
    """
    if prop != "mds3":
        raise WrongKindError(f"unsupported search property {prop!r}")
    w = n - k
    if q ** (k * w) > budget:
        raise BudgetExceededError(
            f"q^(k(n-k)) = {q ** (k * w)} exceeds budget {budget}"
        )
    field = _make_field_of_order(q)
    qq, els, add, mul, neg = _field_int_tables(field)
    tuples = [
        tup.sets
        for tup in _canonical_tuples(n, k, 3, k - 1)
        if generically_zero(tup)
    ]
    placements = (
        list(itertools.combinations(range(n), k))
        if all_information_sets
        else [tuple(range(k))]
    )
    seen = set()
    count = 0
    exemplars: List[CodeSpec] = []
    candidates = 0
    for info in placements:
        rest = [j for j in range(n) if j not in info]
        for flat in itertools.product(range(qq), repeat=k * w):
            candidates += 1
            if 0 in flat:
                # a zero entry is already a vanishing 1 x 1 minor
                continue
            x_rows = [flat[i * w : (i + 1) * w] for i in range(k)]
            if not _totally_nonsingular(x_rows, k, w, add, mul, neg):
                continue
            cols = [None] * n
            for i, pos in enumerate(info):
                cols[pos] = tuple(1 if t == i else 0 for t in range(k))
            for j, pos in enumerate(rest):
                cols[pos] = tuple(x_rows[i][j] for i in range(k))
            if not _mds3_int(cols, k, tuples, add, mul, neg):
                continue
            key = _int_rref_key(cols, k, add, mul, neg)
            if key in seen:
                continue
            seen.add(key)
            count += 1
            if len(exemplars) < exemplar_cap:
                rows = [[els[key[i][j]] for j in range(n)] for i in range(k)]
                exemplars.append(explicit_code(field, rows))
    return SearchResult(count, exemplars, candidates)


def _mds3_int(cols, k, tuples, add, mul, neg) -> bool:
    if k == 3:
        normals: Dict[Tuple[int, int], Tuple[int, int, int]] = {}

        def normal(pair):
            got = normals.get(pair)
            if got is None:
                got = _int_cross(cols[pair[0]], cols[pair[1]], add, mul, neg)
                normals[pair] = got
            return got

        for sets in tuples:
            m = [normal(a) for a in sets]
            if _int_det3(m, add, mul, neg) == 0:
                return False
        return True
    if not tuples:
        return True
    # general small k: rank test on stacked kernels (tiny sizes only)
    for sets in tuples:
        if _int_intersection_nontrivial(cols, k, sets, add, mul, neg):
            return False
    return True


def _int_intersection_nontrivial(cols, k, sets, add, mul, neg) -> bool:
    # intersect column spans by alternating projections on small dims:
    # represent each span by its basis, intersect pairwise via kernel
    basis = [list(cols[j]) for j in sets[0]]
    for a in sets[1:]:
        other = [list(cols[j]) for j in a]
        combined = basis + other
        # kernel of the k x (len combined) matrix: vectors (u, v) with
        # basis*u + other*v = 0; intersection spanned by basis*u parts
        mat = [[combined[c][r] for c in range(len(combined))] for r in range(k)]
        ker = _int_kernel(mat, add, mul, neg)
        new_basis = []
        for vec in ker:
            comb_vec = [0] * k
            for ci, coeff in enumerate(vec[: len(basis)]):
                if coeff:
                    for r in range(k):
                        comb_vec[r] = add[comb_vec[r]][mul[coeff][basis[ci][r]]]
            if any(comb_vec):
                new_basis.append(comb_vec)
        # reduce to independent set
        basis = _int_col_reduce(new_basis, add, mul, neg)
        if not basis:
            return False
    return bool(basis)


def _int_kernel(mat, add, mul, neg):
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    q = len(add)
    rows = [list(r) for r in mat]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        inv = next(x for x in range(q) if mul[pv][x] == 1)
        rows[r] = [mul[inv][v] for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [
                    add[rows[i][j]][neg[mul[f][rows[r][j]]]] for j in range(ncols)
                ]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for ri, pc in enumerate(pivots):
            vec[pc] = neg[rows[ri][free]]
        out.append(vec)
    return out


def _int_col_reduce(vectors, add, mul, neg):
    # keep a maximal independent subset of the given vectors
    q = len(add)
    basis = []
    for v in vectors:
        v = list(v)
        for b in basis:
            # eliminate using the leading position of b
            lead = next(i for i, x in enumerate(b) if x)
            if v[lead]:
                inv = next(x for x in range(q) if mul[b[lead]][x] == 1)
                f = mul[v[lead]][inv]
                v = [add[v[i]][neg[mul[f][b[i]]]] for i in range(len(v))]
        if any(v):
            basis.append(v)
    return basis
