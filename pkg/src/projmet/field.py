"""Finite field arithmetic over F_q, q = p^e.

Elements are encoded as integers in ``[0, q)``.  For prime fields this is the
residue; for extension fields the polynomial ``c_0 + c_1 x + ... `` is packed
as ``sum(c_i * p**i)``, so ``x`` itself is the integer ``p``.

Multiplication in extension fields goes through log/antilog tables built from
a primitive element found at construction.  For ``q <= 256`` full addition and
multiplication tables are also kept so vectorized code can index them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, FieldTooLarge, NotPrime, ReducibleModulus

MAX_ORDER = 2 ** 16
_DENSE_TABLE_LIMIT = 256

# Irreducible moduli, lowest degree coefficient first, leading 1 included.
BUILTIN_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 0, 1),  # x^2 + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``p**e == q`` or raise :class:`NotPrime`."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomials over F_p, coefficient lists lowest degree first --------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    m = _poly_trim([c % p for c in m])
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg/2``."""
    m = _poly_trim([c % p for c in modulus])
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    """The field F_q.  Build with :func:`field_new` or :func:`gf`."""

    p: int
    e: int
    modulus: tuple[int, ...] = ()
    _exp: np.ndarray = dc_field(default=None, repr=False)
    _log: np.ndarray = dc_field(default=None, repr=False)
    _add_t: np.ndarray | None = dc_field(default=None, repr=False)
    _mul_t: np.ndarray | None = dc_field(default=None, repr=False)
    _inv: np.ndarray = dc_field(default=None, repr=False)
    _neg: np.ndarray = dc_field(default=None, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e, self.modulus) == (
            other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    # -- scalar ops on encoded ints ------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return int(self._add_t[a, b])
        if self.e == 1:
            return (a + b) % self.p
        return int(self.vadd(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self._neg[b]))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return int(self._mul_t[a, b])
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return int(self._exp[(int(self._log[a]) * k) % (self.q - 1)])

    # -- vectorized ops on integer arrays -------------------------------------
    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add_t is not None:
            return self._add_t[a, b]
        if self.e == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.e):
            out += ((a // place % self.p + b // place % self.p) % self.p) * place
            place *= self.p
        return out

    def vneg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul_t is not None:
            return self._mul_t[a, b]
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- element wrappers ------------------------------------------------------
    def __call__(self, value: int) -> "FieldElement":
        value = int(value)
        if self.e == 1:
            value %= self.p
        elif not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of {self!r}")
        return FieldElement(value, self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(v, self) for v in range(self.q)]

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    @property
    def primitive(self) -> int:
        return int(self._exp[1]) if self.q > 2 else 1

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteField":
        return field_new(int(data["p"]), int(data.get("e", 1)), data.get("modulus") or None)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: FiniteField

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return FieldElement(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return FieldElement(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field.div(self.value, self._other(other)), self.field)

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __pow__(self, k: int):
        return FieldElement(self.field.pow(self.value, k), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


def arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Apply ``op`` in {add, sub, mul, div, neg, inv}; unary ops ignore ``b``."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _poly_mulmod_int(a: int, b: int, p: int, e: int, modulus: Sequence[int]) -> int:
    da = [(a // p ** i) % p for i in range(e)]
    db = [(b // p ** i) % p for i in range(e)]
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    r = _poly_mod(prod, modulus, p)
    return sum(c * p ** i for i, c in enumerate(r))


def _build(p: int, e: int, modulus: tuple[int, ...]) -> FiniteField:
    q = p ** e
    if e == 1:
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        g = next(g for g in range(1, q) if _order_mod(g, p) == q - 1) if q > 2 else 1
        v = 1
        for k in range(q - 1):
            exp[k] = v
            log[v] = k
            v = v * g % p
    else:
        exp = log = None
        for g in range(2, q):
            seq = [1]
            v = g
            while v != 1:
                seq.append(v)
                v = _poly_mulmod_int(v, g, p, e, modulus)
            if len(seq) == q - 1:
                exp = np.array(seq, dtype=np.int64)
                log = np.zeros(q, dtype=np.int64)
                log[exp] = np.arange(q - 1)
                break
        assert exp is not None
    inv = np.zeros(q, dtype=np.int64)
    if q > 1:
        nz = np.arange(1, q)
        inv[nz] = exp[(-log[nz]) % (q - 1)]
    neg = np.zeros(q, dtype=np.int64)
    for a in range(q):
        digits = [(a // p ** i) % p for i in range(e)]
        neg[a] = sum(((-d) % p) * p ** i for i, d in enumerate(digits))
    f = FiniteField(p, e, modulus, exp, log, None, None, inv, neg)
    if q <= _DENSE_TABLE_LIMIT:
        idx = np.arange(q)
        add_t = f.vadd(idx[:, None], idx[None, :])
        mul_t = f.vmul(idx[:, None], idx[None, :])
        object.__setattr__(f, "_add_t", add_t)
        object.__setattr__(f, "_mul_t", mul_t)
    return f


def _order_mod(g: int, p: int) -> int:
    k, v = 1, g % p
    while v != 1:
        v = v * g % p
        k += 1
    return k


@lru_cache(maxsize=None)
def _cached(p: int, e: int, modulus: tuple[int, ...]) -> FiniteField:
    return _build(p, e, modulus)


def field_new(p: int, e: int = 1, modulus: Iterable[int] | None = None) -> FiniteField:
    """Construct F_{p^e}, verifying primality and irreducibility of the modulus.

    ``modulus`` lists coefficients lowest degree first and must be monic of
    degree ``e``.  It may be omitted when ``e == 1`` or a built-in exists.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("exponent must be positive")
    if p ** e > MAX_ORDER:
        raise FieldTooLarge(f"q = {p}^{e} exceeds {MAX_ORDER}")
    if e == 1:
        return _cached(p, 1, ())
    if modulus is None:
        if p ** e not in BUILTIN_MODULI:
            raise ValueError(f"no built-in modulus for q = {p ** e}; pass one explicitly")
        mod = BUILTIN_MODULI[p ** e]
    else:
        mod = tuple(int(c) % p for c in modulus)
    if len(mod) != e + 1 or mod[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {e}")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"{list(mod)} is reducible over F_{p}")
    return _cached(p, e, mod)


def gf(q: int, modulus: Iterable[int] | None = None) -> FiniteField:
    """Shorthand: the field of order ``q`` with the built-in modulus."""
    p, e = prime_power(q)
    return field_new(p, e, modulus)
