"""Exact arithmetic in GF(p^m) for prime p.

Elements are encoded as integers in [0, p^m): the base-p digits of the
integer are the coefficients of the element in the polynomial basis
{1, x, ..., x^(m-1)}, lowest degree first.  For p = 2 this is the usual
bit-vector packing and all the hot operations reduce to shifts and XORs.

A :class:`FieldSpec` owns the modulus, checks its irreducibility, finds a
multiplicative generator, and exposes integer-level kernels (``add_int``,
``mul_int``, ...).  :class:`FieldElement` is a thin wrapper with operator
overloading for code that prefers algebra over bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple


class FieldMismatchError(ValueError):
    """Raised when two operands belong to different fields."""


# Default moduli over GF(2), coefficient of x^i at position i (lowest degree
# first).  All of them are primitive, so the polynomial x itself generates
# the multiplicative group and the generator search below stops at 2.
_BINARY_MODULI = {
    1: (0, 1),                                               # x
    2: (1, 1, 1),                                            # x^2+x+1
    3: (1, 1, 0, 1),                                         # x^3+x+1
    4: (1, 1, 0, 0, 1),                                      # x^4+x+1
    5: (1, 0, 1, 0, 0, 1),                                   # x^5+x^2+1
    6: (1, 1, 0, 0, 0, 0, 1),                                # x^6+x+1
    7: (1, 1, 0, 0, 0, 0, 0, 1),                             # x^7+x+1
    8: (1, 0, 1, 1, 1, 0, 0, 0, 1),                          # x^8+x^4+x^3+x^2+1
    9: (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),                       # x^9+x^4+1
    10: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),                   # x^10+x^3+1
    11: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),                # x^11+x^2+1
    12: (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),             # x^12+x^6+x^4+x+1
    13: (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),          # x^13+x^4+x^3+x+1
    14: (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1),       # x^14+x^10+x^6+x+1
    15: (1, 1) + (0,) * 13 + (1,),                           # x^15+x+1
    16: (1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1),  # x^16+x^12+x^3+x+1
}

_IRREDUCIBILITY_CHECK_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> Tuple[int, ...]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def modulus_from_string(text: str) -> Tuple[int, ...]:
    """Parse a modulus override: comma-separated coefficients, lowest degree first."""
    coeffs = tuple(int(t.strip()) for t in text.split(","))
    if len(coeffs) < 2:
        raise ValueError("modulus needs at least degree 1 (two coefficients)")
    return coeffs


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as tuples (lowest degree first)
# ---------------------------------------------------------------------------

def _poly_trim(c: Sequence[int]) -> Tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> Tuple[int, ...]:
    num = list(num)
    dd = len(_poly_trim(den)) - 1
    lead_inv = pow(den[dd], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        if num[i]:
            f = (num[i] * lead_inv) % p
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    return _poly_trim(num)


def _irreducible(modulus: Sequence[int], p: int, m: int) -> bool:
    """Exhaustive factor check: no monic divisor of degree 1..m//2."""
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for idx in range(p ** deg):
            cand = []
            v = idx
            for _ in range(deg):
                v, r = divmod(v, p)
                cand.append(r)
            cand.append(1)  # monic
            if not _poly_mod(modulus, cand, p):
                return False
    return True


def _search_modulus(p: int, m: int) -> Tuple[int, ...]:
    """First irreducible monic degree-m polynomial in lexicographic order."""
    for idx in range(p ** m):
        cand = []
        v = idx
        for _ in range(m):
            v, r = divmod(v, p)
            cand.append(r)
        cand.append(1)
        if _irreducible(cand, p, m):
            return tuple(cand)
    raise ValueError(f"no irreducible degree-{m} polynomial over GF({p})")  # unreachable


class FieldSpec:
    """The field GF(q), q = p^m, with a fixed modulus and designated generator.

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree (>= 1).
    modulus : sequence of int, optional
        Monic irreducible degree-m polynomial over GF(p), coefficients
        lowest degree first.  Defaults to a built-in primitive polynomial
        for p = 2, m <= 16, and to the lexicographically first irreducible
        polynomial otherwise.

    Instances are immutable and safe to share across threads.
    """

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p ** m

        if modulus is None:
            if p == 2 and m in _BINARY_MODULI:
                modulus = _BINARY_MODULI[m]
            else:
                modulus = _search_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[m] == 0:
            raise ValueError(f"modulus must have degree exactly {m}")
        if self.q <= _IRREDUCIBILITY_CHECK_LIMIT and not _irreducible(modulus, p, m):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        # x^m == _reduction (mod modulus), used to fold overflow digits back
        self._reduction = tuple((-c) % p for c in modulus[:m])
        if p == 2:
            # bit-packed modulus including the x^m bit
            self._mod_int = sum(c << i for i, c in enumerate(modulus))
        self._q_minus_1_factors = _prime_factors(self.q - 1) if self.q > 2 else ()

        self.generator = self._find_generator()
        if p == 2:
            # Tr(a) = parity of popcount(a & mask), by linearity of the trace
            self._trace_mask = self._build_trace_mask()
        else:
            self._trace_table: Optional[dict] = {} if self.q > 4096 else None
            if self._trace_table is None:
                self._trace_array = [self._trace_slow(a) for a in range(self.q)]

    # -- integer kernels ----------------------------------------------------

    def add_int(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg_int(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub_int(self, a: int, b: int) -> int:
        return self.add_int(a, self.neg_int(b))

    def mul_int(self, a: int, b: int) -> int:
        if self.p == 2:
            m, mod = self.m, self._mod_int
            res = 0
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if (a >> m) & 1:
                    a ^= mod
            return res
        return self._mul_generic(a, b)

    def _mul_generic(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = self._digits(a)
        db = self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        red = self._reduction
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, rj in enumerate(red):
                    prod[i - m + j] = (prod[i - m + j] + c * rj) % p
        out = 0
        for i in range(m - 1, -1, -1):
            out = out * p + prod[i]
        return out

    def pow_int(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise ZeroDivisionError("zero cannot be raised to a negative power")
            a = self.inv_int(a)
            e = -e
        res = 1
        while e:
            if e & 1:
                res = self.mul_int(res, a)
            a = self.mul_int(a, a)
            e >>= 1
        return res

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow_int(a, self.q - 2)

    def trace_int(self, a: int) -> int:
        """Absolute trace into GF(p), returned as an integer in [0, p)."""
        if self.p == 2:
            return (a & self._trace_mask).bit_count() & 1
        if self._trace_table is None:
            return self._trace_array[a]
        t = self._trace_table.get(a)
        if t is None:
            t = self._trace_slow(a)
            self._trace_table[a] = t
        return t

    def _trace_slow(self, a: int) -> int:
        acc = a
        x = a
        for _ in range(self.m - 1):
            x = self.pow_int(x, self.p)
            acc = self.add_int(acc, x)
        # the trace lands in the prime subfield: a constant polynomial
        if acc >= self.p:
            raise AssertionError("trace left the prime subfield; modulus corrupt?")
        return acc

    def _build_trace_mask(self) -> int:
        mask = 0
        for i in range(self.m):
            if self._trace_slow(1 << i):
                mask |= 1 << i
        return mask

    def _digits(self, a: int) -> Tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def _find_generator(self) -> int:
        q1 = self.q - 1
        for g in range(1, self.q):
            if self.pow_int(g, q1) != 1:
                continue
            if all(self.pow_int(g, q1 // f) != 1 for f in self._q_minus_1_factors):
                return g
        raise AssertionError("no generator found; field construction is broken")

    # -- element-level API ---------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"encoded value {value} outside [0, {self.q})")
        return FieldElement(self, value)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + (c % self.p)
        return FieldElement(self, val)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def generator_element(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(self, v)

    @property
    def prime_subfield(self) -> "FieldSpec":
        if self.m == 1:
            return self
        return get_field(self.p, 1)

    # -- plumbing -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, q={self.q})"


@lru_cache(maxsize=None)
def get_field(p: int, m: int, modulus: Optional[Tuple[int, ...]] = None) -> FieldSpec:
    """Cached field constructor; moduli must be hashable (tuples)."""
    return FieldSpec(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(q), carried together with its field."""

    spec: FieldSpec
    val: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.spec != other.spec:
            raise FieldMismatchError(
                f"operands from different fields: {self.spec} vs {other.spec}"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.add_int(self.val, other.val))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.sub_int(self.val, other.val))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul_int(self.val, other.val))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul_int(self.val, self.spec.inv_int(other.val)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow_int(self.val, e))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg_int(self.val))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_int(self.val))

    def trace(self) -> "FieldElement":
        """Absolute trace, as an element of the prime subfield."""
        return FieldElement(self.spec.prime_subfield, self.spec.trace_int(self.val))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.spec._digits(self.val)

    def __int__(self) -> int:
        return self.val

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"GF({self.spec.q}):{self.val}"


def multiplicative_order(a: FieldElement) -> int:
    """Order of a nonzero element, by explicit power iteration."""
    if a.val == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    x = a
    order = 1
    one = a.spec.one()
    while x != one:
        x = x * a
        order += 1
        if order > a.spec.q:
            raise AssertionError("order exceeded field size; arithmetic is broken")
    return order
