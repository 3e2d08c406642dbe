"""Arithmetic in GF(p^m) for small orders.

Elements are integer codes in [0, q).  The base-p digits of a code are the
coefficients of a polynomial in the standard basis: digit i is the
coefficient of x^i.  Multiplication reduces modulo a fixed monic irreducible
polynomial, chosen as the smallest one when coefficient lists are read as
base-p integers (constant term least significant).  For m = 1 the modulus is
the placeholder ``x`` and arithmetic is plain integer arithmetic mod p.

For q <= 256 the addition, multiplication and inverse tables are built once
at construction; larger fields fall back to digit-wise computation.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

MAX_ORDER = 2**16
TABLE_LIMIT = 256


class FieldError(ValueError):
    """Invalid field parameters or field element."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- polynomials over GF(p) as coefficient lists, constant term first ------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must have a nonzero leading term."""
    a = _poly_trim(list(a))
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * lead_inv % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in base-p integer order."""
    for low in itertools.product(range(p), repeat=degree):
        # product varies the last position fastest; reverse so that the
        # constant term is the least significant digit
        yield list(reversed(low)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^m) with an explicit modulus (coefficients, constant first).

    Instances are immutable and safe to share between workers.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = field(init=False)
    add_table: tuple | None = field(init=False, repr=False, compare=False)
    mul_table: tuple | None = field(init=False, repr=False, compare=False)
    inv_table: tuple | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, m, modulus = self.p, self.m, tuple(self.modulus)
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if m < 1:
            raise FieldError(f"m={m} must be >= 1")
        if p**m > MAX_ORDER:
            raise FieldError(f"order p^m={p}^{m} exceeds the ceiling q <= {MAX_ORDER}")
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {list(modulus)} is not monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if m > 1 and not is_irreducible(list(modulus), p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "q", p**m)
        object.__setattr__(self, "add_table", None)
        object.__setattr__(self, "mul_table", None)
        object.__setattr__(self, "inv_table", None)
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self):
        q = self.q
        add = tuple(tuple(self._add(a, b) for b in range(q)) for a in range(q))
        mul = tuple(tuple(self._mul(a, b) for b in range(q)) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            inv[a] = row.index(1)
        object.__setattr__(self, "add_table", add)
        object.__setattr__(self, "mul_table", mul)
        object.__setattr__(self, "inv_table", tuple(inv))

    # -- digit-level arithmetic, used to build tables and for large q --

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + d
        return code

    def _add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def _neg(self, a):
        if self.m == 1:
            return -a % self.p
        return self.from_digits(-x % self.p for x in self.digits(a))

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(self.modulus), p)
        return self.from_digits(rem + [0] * (m - len(rem)))

    # -- public operations --

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"element code {a!r} outside [0, {self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add(a, b)

    def neg(self, a: int) -> int:
        self.check(a)
        return self._neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self._mul(a, b)

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        self.check(a)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise FieldError("inverse of zero")
        if self.inv_table is not None:
            return self.inv_table[a]
        return self.pow(a, self.q - 2)

    def elements(self) -> range:
        return range(self.q)

    def modulus_str(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c != 1 and i > 0:
                mono = f"{c}*{mono}"
            elif i == 0:
                mono = str(c)
            terms.append(mono)
        return " + ".join(terms)

    def __str__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) with the smallest monic irreducible modulus.

    >>> make_field(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError(f"m={m} must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldError(f"order p^m={p}^{m} exceeds the ceiling q <= {MAX_ORDER}")
    modulus = (0, 1) if m == 1 else smallest_irreducible(p, m)
    return FieldSpec(p, m, modulus)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"q={q} is not a prime power")
            return make_field(p, m)
    raise FieldError(f"q={q} is not a prime power")
