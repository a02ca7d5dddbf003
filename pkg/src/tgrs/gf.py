"""Finite fields GF(p^m) built as F_p[z]/(modulus).

Every element is stored as its canonical integer: the base-p digits of the
integer are the coefficients of z^0, z^1, ..., z^(m-1) of the reduced
polynomial.  In GF(9) = F_3[z]/(z^2 + z + 2), for instance, ``z + 1`` is
``1 + 1*3 = 4`` and ``2z + 1`` is ``1 + 2*3 = 7``.

Scalar arithmetic goes through :class:`FieldElement`.  Vector arithmetic
(used by the polynomial and linear algebra layers) goes through the
array methods of :class:`GF`, which accept numpy integer arrays of
canonical integers and use log/antilog tables.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "GF",
    "FieldElement",
    "FieldError",
    "NotPrime",
    "Reducible",
    "DegreeMismatch",
    "FieldMismatch",
    "OutOfRange",
    "DivisionByZero",
    "is_irreducible",
    "smallest_irreducible",
]


class FieldError(ValueError):
    """Base class for invalid field constructions and mixed-field use."""


class NotPrime(FieldError):
    pass


class Reducible(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class OutOfRange(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# Polynomials over the prime field F_p, as tuples of ints (ascending).
# These only serve field construction and the Euclidean inverse.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    size = max(len(a), len(b))
    out = [0] * size
    for i in range(size):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _trim(out)


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = _trim([c % p for c in a])
    if len(rem) < len(b):
        return [], rem
    lead_inv = pow(b[-1], p - 2, p)
    quot = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * lead_inv % p
        quot[shift] = c
        if c:
            for i, y in enumerate(b):
                rem[shift + i] = (rem[shift + i] - c * y) % p
    return _trim(quot), _trim(rem[: len(b) - 1])


def _fp_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    return _fp_divmod(_fp_mul(a, b, p), mod, p)[1]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            if not _fp_divmod(f, g, p)[1]:
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``m``.

    Candidates are ordered by the base-p integer formed by their lower
    coefficients (constant term as the least significant digit).
    """
    if m == 1:
        return (0, 1)
    for v in range(p**m):
        low = [(v // p**i) % p for i in range(m)]
        if is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError("an irreducible polynomial exists for every degree")


# ---------------------------------------------------------------------------


_ADD_TABLE_MAX = 2048

_TABLES: dict[tuple[int, int, tuple[int, ...]], dict[str, np.ndarray]] = {}


class GF:
    """The finite field GF(p^m) = F_p[z]/(modulus).

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree, at least 1.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree ``m`` over F_p, ascending
        coefficients.  Defaults to the lexicographically smallest one.
        For ``m == 1`` the modulus is ``z`` by convention.

    Examples
    --------
    >>> F9 = GF(3, 2, [2, 1, 1])      # z^2 + z + 2
    >>> z = F9(3)
    >>> z * z == F9.from_digits([1, 2])   # 2z + 1
    True
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        p, m = int(p), int(m)
        if not _is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = [int(c) for c in modulus]
            if any(not 0 <= c < p for c in modulus):
                raise FieldError(f"modulus coefficients must lie in [0, {p})")
            modulus = _trim(modulus)
            if len(modulus) - 1 != m:
                raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
            if modulus[-1] != 1:
                raise FieldError("modulus must be monic")
            if m > 1 and not is_irreducible(modulus, p):
                raise Reducible(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        key = (p, m, self.modulus)
        if key not in _TABLES:
            _TABLES[key] = self._build_tables()
        t = _TABLES[key]
        self._exp = t["exp"]
        self._log = t["log"]
        self._zech = t.get("zech")
        self._addtab = t.get("addtab")
        self._neg = t["neg"]
        self._inv = t["inv"]
        self.primitive = int(t["exp"][1]) if self.q > 2 else 1
        self._char2 = p == 2
        self._prime = m == 1
        self._row_ops = None

    # -- construction ------------------------------------------------------

    def _digits_list(self, v: int) -> list[int]:
        return _trim([(v // self.p**i) % self.p for i in range(self.m)])

    def _encode_list(self, digits: Sequence[int]) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _fp_mulmod(self._digits_list(a), self._digits_list(b), self.modulus, self.p)
        return self._encode_list(prod)

    def _slow_pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._slow_pow(g, order // r) != 1 for r in factors):
                return g
        raise AssertionError("multiplicative group of a field is cyclic")

    def _build_tables(self) -> dict[str, np.ndarray]:
        q, p, m = self.q, self.p, self.m
        g = self._find_generator()
        # log(0) points into a zero block so mul needs no masking
        zero_log = 2 * (q - 1)
        exp = np.zeros(2 * zero_log + 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[0] = zero_log
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]

        vals = np.arange(q, dtype=np.int64)
        digits = (vals[:, None] // p ** np.arange(m)) % p
        weights = p ** np.arange(m, dtype=np.int64)
        neg = ((-digits) % p) @ weights
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        tables = {"exp": exp, "log": log, "neg": neg, "inv": inv}
        if p != 2 and m > 1:
            if q <= _ADD_TABLE_MAX:
                tables["addtab"] = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
            else:
                # zech[i] = log(1 + g^i), or -1 where 1 + g^i == 0
                one_plus = ((digits[exp[: q - 1]] + digits[1]) % p) @ weights
                tables["zech"] = np.where(one_plus == 0, -1, log[one_plus])
        return tables

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={_format_poly(self.modulus, 'z')})"

    def __len__(self) -> int:
        return self.q

    def __call__(self, value: int | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        return FieldElement(self, value)

    def from_digits(self, digits: Sequence[int]) -> FieldElement:
        """Element with ``digits[i]`` as the coefficient of z^i."""
        digits = [int(d) for d in digits]
        if len(digits) > self.m or any(not 0 <= d < self.p for d in digits):
            raise OutOfRange(f"digits {digits} do not describe an element of {self!r}")
        return FieldElement(self, self._encode_list(digits))

    def decode_int(self, v: int) -> FieldElement:
        return self(v)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> GF:
        return cls(d["p"], d.get("m", 1), d.get("modulus"))

    # -- vectorised arithmetic on canonical integers -----------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._char2:
            return a ^ b
        if self._prime:
            return (a + b) % self.p
        if self._addtab is not None:
            return self._addtab[a, b]
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        s = np.where(z < 0, 0, self._exp[la + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, s))

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self._char2:
            return a
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a, e = self.inv(a), -e
        lg = (self._log[a] * e) % (self.q - 1)
        return np.where(a == 0, 0, self._exp[lg])

    def sum(self, a, axis: int = 0):
        """Field sum along ``axis``."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        if self._char2:
            return np.bitwise_xor.reduce(a, axis=0) if len(a) else np.zeros(a.shape[1:], np.int64)
        if self._prime:
            return a.sum(axis=0) % self.p
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            out = self.add(out, row)
        return out

    def row_ops(self):
        """Pure-Python row kernels on lists of canonical ints.

        Returns ``(scale, prepare, sub_scaled)``: ``scale(row, c)`` is
        c*row, ``prepare(piv)`` precomputes whatever ``sub_scaled`` needs
        from a pivot row, and ``sub_scaled(row, prepared, c)`` is
        row - c*piv.  Elimination runs on these so its cost tracks the
        operation count rather than per-call array overhead.
        """
        if self._row_ops is None:
            self._row_ops = self._make_row_ops()
        return self._row_ops

    def _make_row_ops(self):
        p = self.p
        exp = self._exp.tolist()
        log = self._log.tolist()
        neg = self._neg.tolist()

        def scale(row, c):
            lc = log[c]
            return [exp[lc + log[b]] for b in row]

        def prepare(piv):
            return [log[b] for b in piv]

        if self._prime:

            def scale(row, c):  # noqa: F811
                return [c * b % p for b in row]

            def prepare(piv):  # noqa: F811
                return piv

            def sub_scaled(row, piv, c):
                return [(a - c * b) % p for a, b in zip(row, piv)]

        elif self._char2:

            def sub_scaled(row, logs, c):
                lc = log[c]
                return [a ^ exp[lc + lb] for a, lb in zip(row, logs)]

        elif self._addtab is not None:
            add = self._addtab.tolist()

            def sub_scaled(row, logs, c):
                lc = log[neg[c]]
                return [add[a][exp[lc + lb]] for a, lb in zip(row, logs)]

        else:

            def prepare(piv):  # noqa: F811
                return np.asarray(piv, dtype=np.int64)

            def sub_scaled(row, piv, c):
                return self.sub(row, self.mul(c, piv)).tolist()

        return scale, prepare, sub_scaled

    def digits(self, a) -> np.ndarray:
        """Base-p digit vectors of canonical integers, shape (..., m)."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self.p ** np.arange(self.m)) % self.p

    def validate(self, a) -> np.ndarray:
        """Coerce ints / FieldElements to a canonical int array, checking range."""
        if isinstance(a, FieldElement):
            self(a)
            return np.asarray(a.value, dtype=np.int64)
        if isinstance(a, np.ndarray) and a.dtype != object:
            arr = a.astype(np.int64, copy=False)
        else:
            items = list(a) if not isinstance(a, (int, np.integer)) else a
            arr = np.asarray(_to_ints(self, items), dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise OutOfRange(f"values outside [0, {self.q}) for {self!r}")
        return arr


def _to_ints(field: GF, items):
    if isinstance(items, (int, np.integer)):
        return int(items)
    if isinstance(items, FieldElement):
        field(items)
        return items.value
    return [_to_ints(field, x) for x in items]


def _format_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


class FieldElement:
    """An immutable element of a :class:`GF`.

    Compares equal to its canonical integer, so ``F9(4) == 4``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise OutOfRange(f"{value} is not a canonical element of {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def digits(self) -> tuple[int, ...]:
        f = self.field
        return tuple((self.value // f.p**i) % f.p for i in range(f.m))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __hash__(self) -> int:
        return hash(self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def _peer(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        o = self._peer(other)
        return FieldElement(self.field, int(self.field.add(self.value, o.value)))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        o = self._peer(other)
        return FieldElement(self.field, int(self.field.sub(self.value, o.value)))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.value)))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        o = self._peer(other)
        return FieldElement(self.field, int(self.field.mul(self.value, o.value)))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * self._peer(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = self.field.one, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> FieldElement:
        """Inverse via the extended Euclidean algorithm on digit polynomials."""
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        f = self.field
        p = f.p
        if f.m == 1:
            return FieldElement(f, pow(self.value, p - 2, p))
        # invariant: s_i * a == r_i (mod modulus)
        r0, r1 = list(f.modulus), f._digits_list(self.value)
        s0, s1 = [], [1]
        while r1:
            quot, rem = _fp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _fp_sub(s0, _fp_mul(quot, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        s = [c * c_inv % p for c in s0]
        s = _fp_divmod(s, f.modulus, p)[1]
        return FieldElement(f, f._encode_list(s))

    def pretty(self, var: str = "z") -> str:
        if self.field.m == 1:
            return str(self.value)
        return _format_poly(self.digits, var)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"

    def __str__(self) -> str:
        return str(self.value)


def as_elements(field: GF, values: Iterable) -> tuple[FieldElement, ...]:
    return tuple(FieldElement(field, int(v)) for v in np.asarray(field.validate(values)).ravel())
