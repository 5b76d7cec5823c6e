"""Finite fields and extension towers with exact arithmetic.

A field is either a prime field GF(p) or an extension of another field by a
monic irreducible polynomial, so towers of arbitrary depth are built one
level at a time.  An element is a dense tuple of base-p coefficients in
reduced normal form, ordered mixed-radix with the bottom tower level varying
fastest; the top level therefore sees an element as contiguous blocks over
the field one level down, which is what the recursive inverse exploits.

Multiplication works term-by-term on the sparse supports with per-level
modular reduction.  Products of sparse tower elements stay cheap even when
the total degree runs into the thousands, which is the regime the deep
binomial towers live in.

Irreducibility of a supplied minimal polynomial is verified at construction
time.  Over small fields the standard gcd test with iterated Frobenius is
used.  Binomial levels x^d - g are additionally recognized as tower steps of
a composed binomial y^t - c over the small field at the bottom of the chain,
and certified through the classical criterion for irreducibility of
binomials; that is the only verification that stays affordable once the
field below is itself astronomically large.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import (
    BudgetExceededError,
    DegreeMismatchError,
    DivisionByZeroError,
    FieldMismatchError,
    NotPrimeError,
    ReduciblePolynomialError,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_make",
    "find_irreducible",
    "poly_is_irreducible",
    "frobenius",
    "is_prime",
    "prime_factors",
    "format_field",
    "parse_field",
    "format_element",
    "parse_element",
]

# deterministic witness set for Miller-Rabin below 2^64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# generic gcd-based irreducibility testing is refused above this field size
_GENERIC_TEST_BITS = 128


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**64 (Miller-Rabin)."""
    if n < 2:
        return False
    for small in _MR_BASES:
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n in increasing order (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _binomial_irreducible(q: int, e: int, t: int) -> bool:
    # x^t - c irreducible over GF(q) iff every prime r | t satisfies
    # r | e and r does not divide (q-1)/e, where e = ord(c); and if 4 | t
    # then q = 1 mod 4.
    cofactor = (q - 1) // e
    for r in prime_factors(t):
        if e % r != 0 or cofactor % r == 0:
            return False
    if t % 4 == 0 and q % 4 != 1:
        return False
    return True


class FieldElement:
    """An element of a FieldSpec, held as a dense coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FieldSpec", coeffs: Tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            f = self.field
            g = other.field
            if f is not g and f._sig != g._sig:
                raise FieldMismatchError(
                    f"elements of {f!r} and {g!r} cannot be combined"
                )
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)),
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def __pow__(self, e: int) -> "FieldElement":
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        result = f.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.field.element(other).coeffs
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            self.field is other.field or self.field._sig == other.field._sig
        ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field._sig_hash, self.coeffs))

    def to_int(self) -> int:
        """Canonical index: base-p digits, lowest coefficient least significant."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {self.field!r}>"


class FieldSpec:
    """A prime field or one extension level of a tower.

    Do not call the constructor directly; use :func:`field_make`, or
    :meth:`FieldSpec.extend` on an existing field.
    """

    def __init__(
        self,
        p: int,
        base: Optional["FieldSpec"],
        degree: int,
        mod_tail: Optional[Tuple[Tuple[int, ...], ...]],
        chain: Optional[tuple],
    ):
        self.p = p
        self.base = base
        self.degree = degree          # extension degree over base (1 for prime)
        self.mod_tail = mod_tail      # low d coefficients of the monic minpoly
        self._chain = chain           # (anchor, c_coeffs, ord_c, composed_deg)
        if base is None:
            self.D = 1
            self.dims: Tuple[int, ...] = ()
            self.strides: Tuple[int, ...] = ()
        else:
            self.D = base.D * degree
            self.dims = base.dims + (degree,)
            self.strides = base.strides + (base.D,)
        self._sig = self._signature()
        self._sig_hash = hash(self._sig)
        self._order: Optional[int] = None
        self._level_red: Optional[List[dict]] = None
        self.zero = FieldElement(self, (0,) * self.D)
        one = [0] * self.D
        one[0] = 1
        self.one = FieldElement(self, tuple(one))

    # -- identity -----------------------------------------------------------

    def _signature(self):
        tails = []
        f: Optional[FieldSpec] = self
        while f is not None and f.base is not None:
            tails.append((f.degree, f.mod_tail))
            f = f.base
        return (self.p, tuple(reversed(tails)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self is other or self._sig == other._sig

    def __hash__(self) -> int:
        return self._sig_hash

    def __repr__(self) -> str:
        if self.D == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.D})"

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = self.p ** self.D
        return self._order

    def order_bits(self) -> float:
        """Approximate log2 of the field order, cheap even for deep towers."""
        return self.D * self.p.bit_length()

    def tower(self) -> List["FieldSpec"]:
        """All levels bottom-up, starting at the prime field, ending at self."""
        out = []
        f: Optional[FieldSpec] = self
        while f is not None:
            out.append(f)
            f = f.base
        return out[::-1]

    # -- element construction -------------------------------------------------

    def element(self, value: Union[int, Sequence[int], FieldElement]) -> FieldElement:
        """Make an element: int means an integer constant (image of Z), a
        sequence of length D means raw base-p coefficients."""
        if isinstance(value, FieldElement):
            if value.field is self or value.field._sig == self._sig:
                return value
            return self.lift(value)
        if isinstance(value, int):
            c = [0] * self.D
            c[0] = value % self.p
            return FieldElement(self, tuple(c))
        coeffs = tuple(int(v) % self.p for v in value)
        if len(coeffs) != self.D:
            raise DegreeMismatchError(
                f"expected {self.D} coefficients, got {len(coeffs)}"
            )
        return FieldElement(self, coeffs)

    def from_int(self, n: int) -> FieldElement:
        """Element with canonical index n (base-p digits), 0 <= n < order."""
        if n < 0:
            raise ValueError("canonical index must be nonnegative")
        digits = []
        for _ in range(self.D):
            n, r = divmod(n, self.p)
            digits.append(r)
        if n:
            raise ValueError("canonical index out of range")
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        """Enumerate the whole field in canonical index order (small fields)."""
        if self.order_bits() > 32:
            raise BudgetExceededError(f"refusing to enumerate {self!r}")
        for n in range(self.order):
            yield self.from_int(n)

    def lift(self, elem: FieldElement) -> FieldElement:
        """Embed an element of a lower tower level into this field."""
        sub = elem.field
        if len(sub.dims) <= len(self.dims) and (
            sub._sig == self.tower()[len(sub.dims)]._sig
        ):
            return FieldElement(self, elem.coeffs + (0,) * (self.D - sub.D))
        raise FieldMismatchError(f"{sub!r} is not a level of {self!r}")

    def gen(self, level: Optional[int] = None) -> FieldElement:
        """The adjoined generator of the given extension level (default: top)."""
        if not self.dims:
            raise DegreeMismatchError("prime field has no extension generator")
        idx = self.strides[-1 if level is None else level]
        c = [0] * self.D
        c[idx] = 1
        return FieldElement(self, tuple(c))

    def random_element(self, rng) -> FieldElement:
        return FieldElement(
            self, tuple(rng.randrange(self.p) for _ in range(self.D))
        )

    # -- arithmetic kernels ---------------------------------------------------

    def _build_level_tables(self) -> List[dict]:
        # _level_red[i] maps a full-length exponent tuple to an int coefficient,
        # expressing x_i^{d_i} as a combination of strictly lower monomials
        t = len(self.dims)
        tables: List[dict] = []
        for i, level in enumerate(self.tower()[1:]):
            assert level.mod_tail is not None
            table: dict = {}
            for j, coeff in enumerate(level.mod_tail):
                for subidx, c in enumerate(coeff):
                    if not c:
                        continue
                    exp = [0] * t
                    rem = subidx
                    for lv in range(i):
                        rem, exp[lv] = divmod(rem, self.dims[lv])
                    exp[i] = j
                    key = tuple(exp)
                    table[key] = (table.get(key, 0) - c) % self.p
            tables.append(table)
        return tables

    def _tables(self) -> List[dict]:
        if self._level_red is None:
            self._level_red = self._build_level_tables()
        return self._level_red

    def _mul(self, ca: Tuple[int, ...], cb: Tuple[int, ...]) -> Tuple[int, ...]:
        p = self.p
        if not self.dims:
            return ((ca[0] * cb[0]) % p,)
        ta = [(i, c) for i, c in enumerate(ca) if c]
        if not ta:
            return self.zero.coeffs
        tb = [(i, c) for i, c in enumerate(cb) if c]
        if not tb:
            return self.zero.coeffs
        dims = self.dims
        t = len(dims)

        def exp_of(idx: int) -> Tuple[int, ...]:
            out = []
            for d in dims:
                idx, e = divmod(idx, d)
                out.append(e)
            return tuple(out)

        ea = [(exp_of(i), c) for i, c in ta]
        eb = [(exp_of(i), c) for i, c in tb]
        acc: dict = {}
        for xa, caa in ea:
            for xb, cbb in eb:
                key = tuple(u + v for u, v in zip(xa, xb))
                acc[key] = (acc.get(key, 0) + caa * cbb) % p

        work = [e for e in acc if any(e[i] >= dims[i] for i in range(t))]
        tables = self._tables()
        while work:
            exp = work.pop()
            c = acc.pop(exp, 0)
            if not c:
                continue
            lev = t - 1
            while exp[lev] < dims[lev]:
                lev -= 1
            rest = list(exp)
            rest[lev] -= dims[lev]
            for bexp, bc in tables[lev].items():
                ne = tuple(r + b for r, b in zip(rest, bexp))
                nv = (acc.get(ne, 0) + c * bc) % p
                if nv:
                    if ne not in acc and any(
                        ne[i] >= dims[i] for i in range(t)
                    ):
                        work.append(ne)
                    acc[ne] = nv
                else:
                    acc.pop(ne, None)

        out = [0] * self.D
        strides = self.strides
        for exp, c in acc.items():
            idx = 0
            for e, s in zip(exp, strides):
                idx += e * s
            out[idx] = c
        return tuple(out)

    # polynomial helpers over the base field, used by the recursive inverse;
    # a polynomial is a list of coefficient tuples of the base field

    def _inv(self, c: Tuple[int, ...]) -> Tuple[int, ...]:
        if not any(c):
            raise DivisionByZeroError(f"zero has no inverse in {self!r}")
        if not self.dims:
            return (pow(c[0], -1, self.p),)
        base = self.base
        assert base is not None and self.mod_tail is not None
        s = base.D
        a = [tuple(c[j * s : (j + 1) * s]) for j in range(self.degree)]
        modulus = list(self.mod_tail) + [base.one.coeffs]
        u = _poly_inverse_mod(base, a, modulus)
        flat: List[int] = []
        for j in range(self.degree):
            flat.extend(u[j] if j < len(u) else base.zero.coeffs)
        return tuple(flat)

    # -- extension ------------------------------------------------------------

    def extend(
        self,
        degree: int,
        minpoly: Optional[Sequence] = None,
    ) -> "FieldSpec":
        """Extend by a monic irreducible polynomial of the given degree.

        minpoly lists all degree+1 coefficients low-to-high; entries may be
        ints (integer constants) or elements of this field.  When omitted,
        the lexicographically smallest monic irreducible is found and used.
        Irreducibility is always verified; binomial tower steps x^d - g are
        certified through the composed-binomial criterion, everything else
        through the gcd test (refused over astronomically large fields).
        """
        if degree < 1:
            raise DegreeMismatchError("extension degree must be at least 1")
        if minpoly is None:
            coeffs = find_irreducible(self, degree)
        else:
            coeffs = [self.element(v) for v in minpoly]
            if len(coeffs) != degree + 1:
                raise DegreeMismatchError(
                    f"need {degree + 1} coefficients for degree {degree}, "
                    f"got {len(coeffs)}"
                )
            if coeffs[-1] != self.one:
                raise DegreeMismatchError("minimal polynomial must be monic")
            chain = self._verify_irreducible(coeffs, degree)
            return FieldSpec(
                self.p,
                self,
                degree,
                tuple(e.coeffs for e in coeffs[:-1]),
                chain,
            )
        # find_irreducible already certified the polynomial
        chain = self._chain_meta(coeffs, degree)
        return FieldSpec(
            self.p, self, degree, tuple(e.coeffs for e in coeffs[:-1]), chain
        )

    def _top_gen_coeffs(self) -> Optional[Tuple[int, ...]]:
        if not self.dims:
            return None
        return self.gen().coeffs

    def _chain_meta(self, coeffs: List[FieldElement], degree: int):
        # chain metadata for a verified binomial x^degree - g
        tail = coeffs[:-1]
        if degree < 2 or any(tail[j] for j in range(1, degree)) or not tail[0]:
            return None
        g = -tail[0]
        if self.order_bits() <= _GENERIC_TEST_BITS:
            e = _mult_order(g)
            return (self, g.coeffs, e, degree)
        if self._chain is not None and g.coeffs == self._top_gen_coeffs():
            anchor, c0, e, comp = self._chain
            return (anchor, c0, e, comp * degree)
        return None

    def _verify_irreducible(self, coeffs: List[FieldElement], degree: int):
        """Raise ReduciblePolynomialError unless coeffs is irreducible.

        Returns chain metadata when the polynomial is a certified binomial
        tower step, else None.
        """
        tail = coeffs[:-1]
        binomial = (
            degree >= 2
            and bool(tail[0])
            and not any(tail[j] for j in range(1, degree))
        )
        if binomial:
            g = -tail[0]
            if self.order_bits() <= _GENERIC_TEST_BITS:
                e = _mult_order(g)
                if not _binomial_irreducible(self.order, e, degree):
                    raise ReduciblePolynomialError(
                        f"x^{degree} - {format_element(g)} is reducible "
                        f"over {self!r}"
                    )
                return (self, g.coeffs, e, degree)
            if self._chain is not None and g.coeffs == self._top_gen_coeffs():
                anchor, c0, e, comp = self._chain
                t = comp * degree
                if not _binomial_irreducible(anchor.order, e, t):
                    raise ReduciblePolynomialError(
                        f"composed binomial of degree {t} over {anchor!r} "
                        "is reducible"
                    )
                return (anchor, c0, e, t)
            raise BudgetExceededError(
                f"cannot verify a binomial over {self!r}: the constant is "
                "not the generator of a certified binomial tower"
            )
        if self.order_bits() > _GENERIC_TEST_BITS:
            raise BudgetExceededError(
                f"generic irreducibility test over {self!r} is infeasible; "
                "use binomial tower steps"
            )
        if not poly_is_irreducible(self, coeffs):
            raise ReduciblePolynomialError(
                f"supplied degree-{degree} polynomial is reducible over {self!r}"
            )
        return None


def _mult_order(a: FieldElement) -> int:
    """Order of a in the multiplicative group (field must be small)."""
    if a.is_zero():
        raise DivisionByZeroError("zero has no multiplicative order")
    q1 = a.field.order - 1
    order = q1
    for r in prime_factors(q1):
        while order % r == 0 and (a ** (order // r)) == a.field.one:
            order //= r
    return order


# -- polynomial arithmetic over a field (lists of coefficient tuples) --------


def _p_trim(pol: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    while pol and not any(pol[-1]):
        pol.pop()
    return pol


def _p_sub(field: FieldSpec, a, b):
    p = field.p
    n = max(len(a), len(b))
    z = field.zero.coeffs
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else z
        y = b[i] if i < len(b) else z
        out.append(tuple((u - v) % p for u, v in zip(x, y)))
    return _p_trim(out)


def _p_mul(field: FieldSpec, a, b):
    if not a or not b:
        return []
    z = field.zero.coeffs
    p = field.p
    out = [z] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not any(ca):
            continue
        for j, cb in enumerate(b):
            if not any(cb):
                continue
            prod = field._mul(ca, cb)
            out[i + j] = tuple((u + v) % p for u, v in zip(out[i + j], prod))
    return _p_trim(out)


def _p_divmod(field: FieldSpec, a, b):
    b = _p_trim(list(b))
    if not b:
        raise DivisionByZeroError("polynomial division by zero")
    r = _p_trim(list(a))
    db = len(b) - 1
    lead_inv = field._inv(b[-1])
    q = [field.zero.coeffs] * max(0, len(r) - db)
    p = field.p
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        factor = field._mul(r[-1], lead_inv)
        q[shift] = factor
        for j in range(db + 1):
            sub = field._mul(factor, b[j])
            r[shift + j] = tuple(
                (u - v) % p for u, v in zip(r[shift + j], sub)
            )
        _p_trim(r)
    return q, r


def _p_powmod(field: FieldSpec, a, e: int, modulus):
    result = [field.one.coeffs]
    base = _p_divmod(field, a, modulus)[1]
    while e:
        if e & 1:
            result = _p_divmod(field, _p_mul(field, result, base), modulus)[1]
        base = _p_divmod(field, _p_mul(field, base, base), modulus)[1]
        e >>= 1
    return result


def _p_gcd(field: FieldSpec, a, b):
    a = _p_trim(list(a))
    b = _p_trim(list(b))
    while b:
        a, b = b, _p_divmod(field, a, b)[1]
    return a


def _poly_inverse_mod(field: FieldSpec, a, modulus):
    """Inverse of a modulo a monic irreducible polynomial over field."""
    r0, s0 = _p_trim(list(modulus)), []
    r1, s1 = _p_trim(list(a)), [field.one.coeffs]
    if not r1:
        raise DivisionByZeroError("zero has no inverse")
    while len(r1) > 1:
        q, rem = _p_divmod(field, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _p_sub(field, s0, _p_mul(field, q, s1))
        if not r1:
            raise ReduciblePolynomialError(
                "element shares a factor with the modulus"
            )
    c_inv = field._inv(r1[0])
    return _p_trim([field._mul(c, c_inv) for c in s1])


def poly_is_irreducible(field: FieldSpec, coeffs: Sequence[FieldElement]) -> bool:
    """gcd test: f of degree d is irreducible over GF(q) iff
    gcd(x^(q^i) - x, f) = 1 for all 1 <= i <= d/2 (f monic, d >= 1)."""
    d = len(coeffs) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    f = [c.coeffs for c in coeffs]
    q = field.order
    x = [field.zero.coeffs, field.one.coeffs]
    h = list(x)
    for _ in range(d // 2):
        h = _p_powmod(field, h, q, f)
        g = _p_gcd(field, _p_sub(field, h, x), f)
        if len(g) != 1:
            return False
    return True


def find_irreducible(field: FieldSpec, degree: int) -> List[FieldElement]:
    """Lexicographically smallest monic irreducible of the given degree.

    Candidates x^d + c_{d-1} x^{d-1} + ... + c_0 are ordered by the tuple
    (c_0, c_1, ..., c_{d-1}) under the canonical element order, constant
    term most significant.  Returns all degree+1 coefficients low-to-high.
    """
    if degree < 1:
        raise DegreeMismatchError("degree must be at least 1")
    if field.order_bits() > _GENERIC_TEST_BITS:
        raise BudgetExceededError(f"refusing irreducible search over {field!r}")
    one = field.one
    if degree == 1:
        return [field.zero, one]
    q = field.order
    # constant term 0 would make the polynomial divisible by x
    for c0_idx in range(1, q):
        c0 = field.from_int(c0_idx)
        for rest in itertools.product(range(q), repeat=degree - 1):
            coeffs = [c0] + [field.from_int(i) for i in rest] + [one]
            if poly_is_irreducible(field, coeffs):
                return coeffs
    raise ReduciblePolynomialError(
        f"no irreducible of degree {degree} over {field!r}"
    )  # unreachable: irreducibles exist over every finite field


def field_make(p: int, extensions: Sequence = ()) -> FieldSpec:
    """Build GF(p), then apply extension levels bottom-up.

    Each entry of extensions is either an int degree (the smallest monic
    irreducible of that degree is found and used) or a pair
    (degree, minpoly-coefficients).
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    f = FieldSpec(p, None, 1, None, None)
    for ext in extensions:
        if isinstance(ext, int):
            f = f.extend(ext)
        else:
            degree, poly = ext
            f = f.extend(degree, poly)
    return f


def frobenius(a: FieldElement) -> FieldElement:
    """The p-power Frobenius map."""
    return a ** a.field.p


def extend_binomial_chain(
    field: FieldSpec, c: FieldElement, degree: int, levels: int
) -> FieldSpec:
    """Stack `levels` binomial extensions x^degree - (previous generator),
    anchored at x^degree - c over a small field.  Every level is certified
    through the composed-binomial criterion."""
    f = field
    g = field.element(c)
    for _ in range(levels):
        f = f.extend(degree, [-g] + [f.zero] * (degree - 1) + [f.one])
        g = f.gen()
    return f


# -- serialization ------------------------------------------------------------


def format_field(field: FieldSpec) -> str:
    """Multi-line text form: a `field p=` line then one `ext` line per level.

    Each ext line flattens the full monic minimal polynomial (degree+1
    coefficients low-to-high, each itself a base-p coefficient block of the
    level below) into one comma-separated integer list.
    """
    lines = [f"field p={field.p}"]
    for level in field.tower()[1:]:
        assert level.mod_tail is not None
        flat: List[str] = []
        for coeff in level.mod_tail:
            flat.extend(str(v) for v in coeff)
        base = level.base
        assert base is not None
        lead = [0] * base.D
        lead[0] = 1
        flat.extend(str(v) for v in lead)
        lines.append(f"ext d={level.degree} poly={','.join(flat)}")
    return "\n".join(lines) + "\n"


def parse_field(text: str) -> FieldSpec:
    """Inverse of format_field; re-verifies every level on load."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("field p="):
        raise ValueError("field text must start with a `field p=` line")
    p = int(lines[0][len("field p=") :])
    f = field_make(p)
    for ln in lines[1:]:
        if not ln.startswith("ext "):
            raise ValueError(f"unexpected line in field text: {ln!r}")
        parts = dict(kv.split("=", 1) for kv in ln[4:].split())
        d = int(parts["d"])
        flat = [int(v) for v in parts["poly"].split(",")]
        if len(flat) != (d + 1) * f.D:
            raise DegreeMismatchError(
                f"ext line needs {(d + 1) * f.D} integers, got {len(flat)}"
            )
        coeffs = [
            tuple(flat[j * f.D : (j + 1) * f.D]) for j in range(d + 1)
        ]
        f = f.extend(d, coeffs)
    return f


def format_element(a: FieldElement) -> str:
    return ",".join(str(v) for v in a.coeffs)


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    vals = [int(v) for v in text.strip().split(",")]
    if len(vals) != field.D:
        raise DegreeMismatchError(
            f"element of {field!r} needs {field.D} coefficients, got {len(vals)}"
        )
    return field.element(vals)
