"""Sparse multivariate polynomials over prime fields.

Provides exact ring arithmetic, lex/degrevlex monomial orders, the
symbolic expansion of the three-row pairing determinant in a degree-one
twist parameter, multivariate division, and Buchberger's algorithm with
Gebauer-Moeller pair pruning.  Everything here works coefficient-exactly
over F_p; evaluation may land in any extension of F_p.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from importlib import resources
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    ArityMismatchError,
    BudgetExceededError,
    CharacteristicMismatchError,
    DegreeTooHighError,
    EvenCharacteristicError,
    NotPrimeError,
    WrongKindError,
)
from .fields import FieldElement, is_prime

__all__ = [
    "MonomialOrder",
    "SparsePoly",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "parse_poly",
    "gamma_expand_det3",
    "verify_claim_q_identity",
    "verify_groebner_claim",
    "verify_char2_membership",
    "buchberger",
    "gb_reduce",
    "pairing_ideal",
    "PAIR_DIFFERENCE_SET",
]

Exp = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"
    perm: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise WrongKindError(f"unknown monomial order {self.kind!r}")

    def key(self, exp: Exp):
        """Comparable key; larger key means larger monomial."""
        e = exp if self.perm is None else tuple(exp[i] for i in self.perm)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


class SparsePoly:
    """Polynomial over F_p in v variables, term dict exp -> coeff."""

    __slots__ = ("p", "v", "terms")

    def __init__(self, p: int, v: int, terms: Optional[Dict[Exp, int]] = None):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p
        self.v = v
        clean: Dict[Exp, int] = {}
        if terms:
            for exp, c in terms.items():
                c %= p
                if c:
                    if len(exp) != v:
                        raise ArityMismatchError(
                            f"exponent vector of length {len(exp)}, expected {v}"
                        )
                    clean[tuple(exp)] = c
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, p: int, v: int) -> "SparsePoly":
        return cls(p, v)

    @classmethod
    def const(cls, p: int, v: int, c: int) -> "SparsePoly":
        return cls(p, v, {tuple([0] * v): c})

    @classmethod
    def variable(cls, p: int, v: int, i: int) -> "SparsePoly":
        if not 0 <= i < v:
            raise ArityMismatchError(f"variable index {i} out of range")
        e = [0] * v
        e[i] = 1
        return cls(p, v, {tuple(e): 1})

    # helpers

    def _check(self, other: "SparsePoly"):
        if self.p != other.p:
            raise CharacteristicMismatchError(
                f"characteristics {self.p} and {other.p}"
            )
        if self.v != other.v:
            raise ArityMismatchError(f"arities {self.v} and {other.v}")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def var_degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def lead(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Exp, int]:
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.p, self.v, other)
        self._check(other)
        out = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            s = (out.get(e, 0) + c) % p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly(p, self.v, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(
            self.p, self.v, {e: self.p - c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.p, self.v, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.p
            return SparsePoly(
                self.p, self.v, {e: (x * c) % self.p for e, x in self.terms.items()}
            )
        self._check(other)
        p = self.p
        out: Dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = (out.get(e, 0) + c1 * c2) % p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePoly(p, self.v, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(self.p, self.v, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.p == other.p and self.v == other.v and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.v, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SparsePoly(p={self.p}, {self.format()})"

    def eval(self, point: Sequence) -> Union[int, FieldElement]:
        """Evaluate at a point of F_p (plain ints) or any extension
        (FieldElements of a field with the same characteristic)."""
        if len(point) != self.v:
            raise ArityMismatchError(
                f"point of length {len(point)}, expected {self.v}"
            )
        if point and isinstance(point[0], FieldElement):
            field = point[0].field
            if field.p != self.p:
                raise CharacteristicMismatchError(
                    f"field characteristic {field.p}, polynomial {self.p}"
                )
            pows: Dict[Tuple[int, int], FieldElement] = {}

            def power(i, e):
                got = pows.get((i, e))
                if got is None:
                    got = point[i] ** e
                    pows[(i, e)] = got
                return got

            total = field.zero
            for exp, c in self.terms.items():
                term = field.from_int(c)
                for i, e in enumerate(exp):
                    if e:
                        term = term * power(i, e)
                total = total + term
            return total
        total = 0
        for exp, c in self.terms.items():
            t = c
            for i, e in enumerate(exp):
                if e:
                    t = (t * pow(int(point[i]), e, self.p)) % self.p
            total = (total + t) % self.p
        return total

    # text format

    def format(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[exp]
            factors = [str(c)]
            for i, e in enumerate(exp):
                if e:
                    factors.append(f"x{i + 1}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def parse_poly(text: str, p: int, v: int) -> SparsePoly:
    """Parse the `c*x1^e1*...` format; coefficients may be any integers
    (reduced mod p), exponents ^1 may be omitted."""
    terms: Dict[Exp, int] = {}
    text = text.strip()
    if text in ("", "0"):
        return SparsePoly.zero(p, v)
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        exp = [0] * v
        coeff = 1
        seen_coeff = False
        for factor in chunk.split("*"):
            factor = factor.strip()
            if factor.startswith("x"):
                if "^" in factor:
                    name, e = factor.split("^")
                else:
                    name, e = factor, "1"
                idx = int(name[1:]) - 1
                if not 0 <= idx < v:
                    raise ArityMismatchError(f"variable {name} out of range")
                exp[idx] += int(e)
            else:
                coeff = coeff * int(factor)
                seen_coeff = True
        if not seen_coeff and all(e == 0 for e in exp):
            raise WrongKindError(f"cannot parse term {chunk!r}")
        key = tuple(exp)
        terms[key] = (terms.get(key, 0) + coeff) % p
    return SparsePoly(p, v, {e: c for e, c in terms.items() if c})


def poly_add(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return f + g


def poly_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return f * g


def poly_eval(f: SparsePoly, point: Sequence):
    return f.eval(point)


# -- the gamma-expansion of the pairing determinant ----------------------------------


def gamma_expand_det3(
    betas: Sequence[SparsePoly],
) -> Tuple[SparsePoly, SparsePoly, SparsePoly, SparsePoly]:
    """Expand det[(1, b_i+b_j, b_i*b_j)] rows (1,2),(3,4),(5,6) in the last
    variable (the twist parameter) and return its four coefficient
    polynomials, each with one fewer variable.

    Every beta must have degree <= 1 in the last variable.
    """
    if len(betas) != 6:
        raise ArityMismatchError("need exactly six slot polynomials")
    v = betas[0].v
    p = betas[0].p
    for b in betas:
        betas[0]._check(b)
        if b.var_degree(v - 1) > 1:
            raise DegreeTooHighError(
                "slot polynomial has twist degree above one"
            )
    s = []
    pr = []
    for i, j in ((0, 1), (2, 3), (4, 5)):
        s.append(betas[i] + betas[j])
        pr.append(betas[i] * betas[j])
    # det of rows (1, s_r, pr_r), expanded along the all-ones column
    d = (
        s[1] * pr[2]
        - s[2] * pr[1]
        - s[0] * pr[2]
        + s[2] * pr[0]
        + s[0] * pr[1]
        - s[1] * pr[0]
    )
    out: List[Dict[Exp, int]] = [{}, {}, {}, {}]
    for exp, c in d.terms.items():
        gdeg = exp[-1]
        if gdeg > 3:
            raise DegreeTooHighError("twist degree above three in expansion")
        out[gdeg][exp[:-1]] = c
    return tuple(SparsePoly(p, v - 1, t) for t in out)  # type: ignore[return-value]


# -- transcribed certificate data ------------------------------------------------------

# pairs whose differences form the certified product, 1-based as printed
PAIR_DIFFERENCE_SET = (
    (3, 6),
    (2, 4),
    (2, 6),
    (3, 5),
    (4, 5),
    (4, 6),
    (2, 5),
    (2, 3),
)


def _load_certificate_text() -> Dict[str, str]:
    data = (
        resources.files("mdskit").joinpath("data/q_certificate.txt").read_text()
    )
    out = {}
    for line in data.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, expr = line.split("=", 1)
        out[name.strip()] = expr.strip()
    return out


def certificate_polys(p: int) -> Dict[str, SparsePoly]:
    """The transcribed combiner polynomials reduced mod p: g, two_q0, and
    the derived q0, q2, q3 (the latter need odd characteristic)."""
    raw = _load_certificate_text()
    g = parse_poly(raw["g"], p, 6)
    two_q0 = parse_poly(raw["two_q0"], p, 6)
    out = {"g": g, "two_q0": two_q0}
    if p % 2 != 0:
        inv2 = pow(2, -1, p)
        x2 = SparsePoly.variable(p, 6, 1)
        out["q0"] = two_q0 * inv2
        out["q2"] = x2 * g
        out["q3"] = g * (p - inv2)
    return out


def _twist_slots(p: int, power: int) -> List[SparsePoly]:
    """The six slot polynomials x_i + t*x_i^power in seven variables,
    t being the last."""
    t = SparsePoly.variable(p, 7, 6)
    out = []
    for i in range(6):
        xi = SparsePoly.variable(p, 7, i)
        out.append(xi + t * xi**power)
    return out


def pairing_ideal(p: int, power: int = 2) -> Tuple[SparsePoly, ...]:
    """The four twist coefficients of the pairing determinant for slots
    x_i + t*x_i^power over F_p."""
    return gamma_expand_det3(_twist_slots(p, power))


def verify_claim_q_identity(p: int = 7) -> bool:
    """Check the certified combination h = Q0*p0 + Q2*p2 + Q3*p3 against
    the transcribed combiners, plus the p1 = p0*(x1+...+x6) checksum.

    The identity has integer-over-2 coefficients, so it must hold at every
    odd characteristic.
    """
    if p % 2 == 0:
        raise EvenCharacteristicError("the certificate divides by two")
    p0, p1, p2, p3 = pairing_ideal(p, power=2)
    e1 = SparsePoly.zero(p, 6)
    for i in range(6):
        e1 = e1 + SparsePoly.variable(p, 6, i)
    if p1 != p0 * e1:
        return False
    polys = certificate_polys(p)
    h = SparsePoly.const(p, 6, 1)
    for i, j in PAIR_DIFFERENCE_SET:
        h = h * (
            SparsePoly.variable(p, 6, i - 1) - SparsePoly.variable(p, 6, j - 1)
        )
    combo = polys["q0"] * p0 + polys["q2"] * p2 + polys["q3"] * p3
    return combo == h


# -- multivariate division and Buchberger ----------------------------------------------


def _exp_divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def _exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def _neg_key(k):
    return tuple(-x if isinstance(x, int) else _neg_key(x) for x in k)


def gb_reduce(
    f: SparsePoly, basis: Sequence[SparsePoly], order: MonomialOrder = DEGREVLEX
) -> SparsePoly:
    """Full normal form of f modulo the basis: no remainder term is
    divisible by any basis lead term.

    Terms are consumed highest-first off a lazy-deletion heap, so large
    quotient chains stay near O(steps * log terms) instead of rescanning
    the whole working dict per step."""
    if not basis:
        return f
    p = f.p
    leads = [(g.lead(order), g) for g in basis if not g.is_zero()]
    key = order.key
    work = dict(f.terms)
    heap = [(_neg_key(key(e)), e) for e in work]
    heapq.heapify(heap)
    remainder: Dict[Exp, int] = {}
    while heap:
        _, exp = heapq.heappop(heap)
        c = work.pop(exp, None)
        if c is None:
            continue  # stale entry: the term cancelled earlier
        hit = None
        for (lexp, lc), g in leads:
            if _exp_divides(lexp, exp):
                hit = (lexp, lc, g)
                break
        if hit is None:
            remainder[exp] = c
            continue
        lexp, lc, g = hit
        shift = _exp_sub(exp, lexp)
        factor = (c * pow(lc, -1, p)) % p
        for ge, gc in g.terms.items():
            e = _exp_add(ge, shift)
            if e == exp:
                continue
            s = (work.get(e, 0) - factor * gc) % p
            if s:
                if e not in work:
                    heapq.heappush(heap, (_neg_key(key(e)), e))
                work[e] = s
            else:
                work.pop(e, None)
    return SparsePoly(p, f.v, remainder)


def _s_poly(f: SparsePoly, g: SparsePoly, order: MonomialOrder) -> SparsePoly:
    p = f.p
    (fe, fc), (ge, gc) = f.lead(order), g.lead(order)
    l = _exp_lcm(fe, ge)
    mf = SparsePoly(p, f.v, {_exp_sub(l, fe): pow(fc, -1, p)})
    mg = SparsePoly(p, g.v, {_exp_sub(l, ge): pow(gc, -1, p)})
    return mf * f - mg * g


def buchberger(
    generators: Sequence[SparsePoly],
    order: MonomialOrder = DEGREVLEX,
    budget: int = 10**6,
) -> List[SparsePoly]:
    """Reduced Groebner basis via Buchberger with Gebauer-Moeller pair
    pruning; raises BudgetExceeded when more than `budget` S-pairs get
    processed."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise WrongKindError("need at least one nonzero generator")
    for g in gens:
        gens[0]._check(g)
    p, v = gens[0].p, gens[0].v

    basis: List[SparsePoly] = []
    lead_of: List[Exp] = []
    pairs: List[Tuple[Exp, int, int]] = []  # (lcm, i, j)

    def add_element(h: SparsePoly):
        h = h * pow(h.lead(order)[1], -1, p)  # monic
        new_idx = len(basis)
        lt_h = h.lead(order)[0]
        # Gebauer-Moeller update of the pair set
        cand = []
        for i in range(new_idx):
            cand.append((_exp_lcm(lead_of[i], lt_h), i))
        # drop new pairs whose lcm is properly divisible by another new lcm
        keep: List[Tuple[Exp, int]] = []
        for l, i in cand:
            dominated = False
            for l2, i2 in cand:
                if i2 == i:
                    continue
                if _exp_divides(l2, l) and l2 != l:
                    dominated = True
                    break
            if not dominated:
                keep.append((l, i))
        # among equal lcms keep one representative
        by_lcm: Dict[Exp, int] = {}
        for l, i in keep:
            if l not in by_lcm:
                by_lcm[l] = i
        # coprime criterion
        new_pairs = []
        for l, i in by_lcm.items():
            if l == _exp_add(lead_of[i], lt_h):
                continue
            new_pairs.append((l, i, new_idx))
        # chain criterion on old pairs
        survivors = []
        for l, i, j in pairs:
            if (
                _exp_divides(lt_h, l)
                and _exp_lcm(lead_of[i], lt_h) != l
                and _exp_lcm(lead_of[j], lt_h) != l
            ):
                continue
            survivors.append((l, i, j))
        pairs.clear()
        pairs.extend(survivors)
        pairs.extend(new_pairs)
        basis.append(h)
        lead_of.append(lt_h)

    for g in gens:
        r = gb_reduce(g, basis, order)
        if not r.is_zero():
            add_element(r)

    processed = 0
    while pairs:
        pairs.sort(key=lambda t: order.key(t[0]), reverse=True)
        l, i, j = pairs.pop()
        processed += 1
        if processed > budget:
            raise BudgetExceededError(
                f"Buchberger pair budget {budget} exhausted"
            )
        r = gb_reduce(_s_poly(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            add_element(r)

    # minimalize: drop elements whose lead is divisible by another lead
    minimal: List[SparsePoly] = []
    for idx, g in enumerate(basis):
        lt_g = lead_of[idx]
        if any(
            _exp_divides(lead_of[other], lt_g)
            for other in range(len(basis))
            if other != idx
            and (
                lead_of[other] != lt_g or other < idx
            )
        ):
            continue
        minimal.append(g)
    # fully reduce each element against the others
    reduced: List[SparsePoly] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = gb_reduce(g, others, order)
        if not r.is_zero():
            r = r * pow(r.lead(order)[1], -1, p)
            reduced.append(r)
    reduced.sort(key=lambda g: order.key(g.lead(order)[0]))
    return reduced


# -- the certified ideal memberships ---------------------------------------------------


def _vandermonde_product(p: int, v: int = 6) -> SparsePoly:
    out = SparsePoly.const(p, v, 1)
    for i, j in itertools.combinations(range(v), 2):
        out = out * (
            SparsePoly.variable(p, v, j) - SparsePoly.variable(p, v, i)
        )
    return out


def verify_groebner_claim(budget: int = 10**6) -> str:
    """Membership of (x1+...+x6) * prod_{i<j}(x_j - x_i) in the ideal
    (p0 + 2*p3, p1, p2) over F_7, the twist cubing to 2.

    Returns "pass", "fail", or "inconclusive" (both monomial orders ran
    out of pair budget).
    """
    p = 7
    p0, p1, p2, p3 = pairing_ideal(p, power=2)
    gens = [p0 + p3 * 2, p1, p2]
    e1 = SparsePoly.zero(p, 6)
    for i in range(6):
        e1 = e1 + SparsePoly.variable(p, 6, i)
    target = e1 * _vandermonde_product(p)
    for order in (DEGREVLEX, LEX):
        try:
            gb = buchberger(gens, order, budget)
        except BudgetExceededError:
            continue
        rem = gb_reduce(target, gb, order)
        return "pass" if rem.is_zero() else "fail"
    return "inconclusive"


def verify_char2_membership(budget: int = 10**6) -> bool:
    """Membership of prod_{i<j}(x_i+x_j) * prod_{i<j<k}(x_i+x_j+x_k) in
    the ideal of all four twist coefficients over F_2, slots x + t*x^3."""
    p = 2
    gens = list(pairing_ideal(p, power=3))
    target = SparsePoly.const(p, 6, 1)
    for i, j in itertools.combinations(range(6), 2):
        target = target * (
            SparsePoly.variable(p, 6, i) + SparsePoly.variable(p, 6, j)
        )
    for i, j, k in itertools.combinations(range(6), 3):
        target = target * (
            SparsePoly.variable(p, 6, i)
            + SparsePoly.variable(p, 6, j)
            + SparsePoly.variable(p, 6, k)
        )
    gb = buchberger(gens, DEGREVLEX, budget)
    return gb_reduce(target, gb, DEGREVLEX).is_zero()
