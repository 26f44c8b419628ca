"""Arithmetic in small finite fields GF(p^m).

Elements are integers in ``[0, q)``.  The base-p digits of an element,
least significant first, are the coefficients of its polynomial
representative modulo the field's modulus, so ``0`` is the additive identity
and ``1`` the multiplicative identity in every field.

Arithmetic goes through precomputed ``q x q`` tables stored as ``uint8``
numpy arrays.  Indexing a table with arrays broadcasts, which is how the
linear algebra layer performs elementwise operations on whole vectors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from mincode.errors import DivisionByZero, NotAPrimePower, UnsupportedOrder

# Monic moduli, coefficients low degree first.  GF(4), GF(8) and GF(9) are
# fixed for bit-exact file formats; the rest cover every prime power <= 256.
CANONICAL_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),
    25: (2, 1, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (1, 0, 1),
    64: (1, 1, 0, 0, 0, 0, 1),
    81: (2, 1, 0, 0, 1),
    121: (1, 0, 1),
    125: (2, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    169: (2, 1, 1),
    243: (1, 2, 0, 0, 0, 1),
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),
}

EAGER_TABLE_LIMIT = 16
MAX_ORDER = 256


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise :class:`NotAPrimePower` otherwise."""
    if q < 2:
        raise NotAPrimePower(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotAPrimePower(q)
    return p, m


def to_digits(code: int, p: int, m: int) -> tuple[int, ...]:
    return tuple((code // p**i) % p for i in range(m))


def from_digits(digits: Sequence[int], p: int) -> int:
    return sum(int(d) * p**i for i, d in enumerate(digits))


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic: x^m = -(lower terms)
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for i in range(m + 1):
                prod[deg - m + i] = (prod[deg - m + i] - c * modulus[i]) % p
    return prod[:m] + [0] * max(0, m - len(prod))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            g = list(coeffs) + [1]
            rem = list(modulus)
            while len(rem) >= len(g):
                c = rem[-1]
                shift = len(rem) - len(g)
                for i, x in enumerate(g):
                    rem[shift + i] = (rem[shift + i] - c * x) % p
                rem.pop()
            if not any(rem):
                return False
    return True


class Field:
    """The finite field GF(q), q = p^m, with table-driven arithmetic.

    Instances are immutable once built; obtain them through :func:`field_new`
    so that each order is constructed once per process.
    """

    def __init__(self, q: int):
        p, m = prime_power(q)
        if q > MAX_ORDER:
            raise UnsupportedOrder(q)
        if m == 1:
            modulus: tuple[int, ...] = (0, 1)
        elif q in CANONICAL_MODULI:
            modulus = CANONICAL_MODULI[q]
        else:
            raise UnsupportedOrder(q)
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._tables: dict[str, np.ndarray] | None = None
        if q <= EAGER_TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"Field(q={self.q})"

    def __reduce__(self):
        return (field_new, (self.q,))

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        digits = [to_digits(a, p, m) for a in range(q)]
        add = np.empty((q, q), dtype=np.uint8)
        mul = np.empty((q, q), dtype=np.uint8)
        for a in range(q):
            for b in range(q):
                add[a, b] = from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                if m == 1:
                    mul[a, b] = (a * b) % p
                else:
                    mul[a, b] = from_digits(_poly_mulmod(digits[a], digits[b], self.modulus, p), p)
        neg = np.array([from_digits([(-x) % p for x in digits[a]], p) for a in range(q)], dtype=np.uint8)
        sub = add[:, neg]
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        for t in (add, mul, neg, sub, inv):
            t.setflags(write=False)
        self._tables = {"add": add, "mul": mul, "neg": neg, "sub": sub, "inv": inv}

    def _table(self, name: str) -> np.ndarray:
        if self._tables is None:
            self._build_tables()
        assert self._tables is not None
        return self._tables[name]

    @property
    def add_table(self) -> np.ndarray:
        return self._table("add")

    @property
    def mul_table(self) -> np.ndarray:
        return self._table("mul")

    @property
    def sub_table(self) -> np.ndarray:
        return self._table("sub")

    @property
    def neg_table(self) -> np.ndarray:
        return self._table("neg")

    @property
    def inv_table(self) -> np.ndarray:
        return self._table("inv")

    def digits(self, a: int) -> tuple[int, ...]:
        return to_digits(a, self.p, self.m)

    def element(self, digits: Sequence[int]) -> int:
        return from_digits(digits, self.p)


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """Return the canonical GF(q).

    Raises :class:`NotAPrimePower` when ``q`` is not a prime power and
    :class:`UnsupportedOrder` when no modulus is registered for it.
    """
    return Field(q)


def _scalar_or_array(x):
    return int(x) if np.ndim(x) == 0 else x


def add(f: Field, a, b):
    return _scalar_or_array(f.add_table[a, b])


def sub(f: Field, a, b):
    return _scalar_or_array(f.sub_table[a, b])


def neg(f: Field, a):
    return _scalar_or_array(f.neg_table[a])


def mul(f: Field, a, b):
    return _scalar_or_array(f.mul_table[a, b])


def inv(f: Field, a):
    if np.any(np.asarray(a) == 0):
        raise DivisionByZero(f"zero has no inverse in GF({f.q})")
    return _scalar_or_array(f.inv_table[a])


def power(f: Field, a: int, e: int) -> int:
    result, base = 1, int(a)
    while e:
        if e & 1:
            result = int(f.mul_table[result, base])
        base = int(f.mul_table[base, base])
        e >>= 1
    return result
