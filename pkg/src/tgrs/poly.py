"""Dense univariate polynomials over a :class:`~tgrs.gf.GF`."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .gf import GF, DivisionByZero, FieldElement, FieldMismatch

__all__ = ["Poly"]


class Poly:
    """Polynomial with coefficients in ascending degree.

    The zero polynomial has no coefficients.  :meth:`degree` is only
    defined for nonzero polynomials; check :attr:`is_zero` first.

    Parameters
    ----------
    field : GF
    coeffs : sequence of int or FieldElement
        ``coeffs[i]`` is the coefficient of x^i.  Trailing zeros are dropped.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: GF, coeffs: Iterable = ()):
        c = field.validate(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs)
        c = np.atleast_1d(c).astype(np.int64)
        nz = np.flatnonzero(c)
        self.field = field
        self._c = c[: nz[-1] + 1].copy() if nz.size else np.zeros(0, dtype=np.int64)

    @classmethod
    def _raw(cls, field: GF, arr: np.ndarray) -> Poly:
        out = cls.__new__(cls)
        nz = np.flatnonzero(arr)
        out.field = field
        out._c = arr[: nz[-1] + 1] if nz.size else np.zeros(0, dtype=np.int64)
        return out

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff: int | FieldElement = 1) -> Poly:
        c = np.zeros(degree + 1, dtype=np.int64)
        c[degree] = int(field(coeff))
        return cls._raw(field, c)

    @classmethod
    def from_roots(cls, field: GF, roots: Iterable) -> Poly:
        """Monic product of (x - r) over ``roots``."""
        out = cls._raw(field, np.ones(1, dtype=np.int64))
        for r in roots:
            out = out * cls._raw(field, np.array([int(field.neg(int(field(r)))), 1]))
        return out

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._c.size == 0

    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return self._c.size - 1

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(v)) for v in self._c)

    def coefficient(self, i: int) -> FieldElement:
        v = int(self._c[i]) if 0 <= i < self._c.size else 0
        return FieldElement(self.field, v)

    def to_list(self) -> list[int]:
        return [int(v) for v in self._c]

    def padded(self, length: int) -> np.ndarray:
        """Canonical-integer coefficient array padded with zeros to ``length``."""
        out = np.zeros(max(length, self._c.size), dtype=np.int64)
        out[: self._c.size] = self._c
        return out

    # -- evaluation --------------------------------------------------------

    def __call__(self, x: int | FieldElement) -> FieldElement:
        return FieldElement(self.field, int(self.eval_many(np.asarray(int(self.field(x))))))

    def eval_many(self, xs) -> np.ndarray:
        """Horner evaluation at every point of ``xs`` (canonical ints)."""
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        f = self.field
        for c in self._c[::-1]:
            acc = f.add(f.mul(acc, xs), c)
        return acc

    def roots(self) -> list[FieldElement]:
        """All roots in the field, by exhaustive evaluation."""
        vals = self.eval_many(np.arange(self.field.q))
        return [FieldElement(self.field, int(v)) for v in np.flatnonzero(vals == 0)]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other: Poly) -> Poly:
        other = self._check(other)
        size = max(self._c.size, other._c.size)
        return Poly._raw(self.field, self.field.add(self.padded(size), other.padded(size)))

    def __sub__(self, other: Poly) -> Poly:
        other = self._check(other)
        size = max(self._c.size, other._c.size)
        return Poly._raw(self.field, self.field.sub(self.padded(size), other.padded(size)))

    def __neg__(self) -> Poly:
        return Poly._raw(self.field, self.field.neg(self._c))

    def __mul__(self, other) -> Poly:
        f = self.field
        if isinstance(other, FieldElement):
            return Poly._raw(f, f.mul(self._c, int(f(other))))
        other = self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(f)
        a, b = (self._c, other._c) if self._c.size <= other._c.size else (other._c, self._c)
        out = np.zeros(a.size + b.size - 1, dtype=np.int64)
        for i, c in enumerate(a):
            if c:
                out[i : i + b.size] = f.add(out[i : i + b.size], f.mul(c, b))
        return Poly._raw(f, out)

    def __rmul__(self, other) -> Poly:
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        den = other._c
        dd = den.size - 1
        rem = self._c.copy()
        if rem.size <= dd:
            return Poly(f), Poly._raw(f, rem)
        lead_inv = f.inv(den[-1])
        quot = np.zeros(rem.size - dd, dtype=np.int64)
        for top in range(rem.size - 1, dd - 1, -1):
            c = rem[top]
            if c:
                c = f.mul(c, lead_inv)
                quot[top - dd] = c
                rem[top - dd : top + 1] = f.sub(rem[top - dd : top + 1], f.mul(c, den))
        return Poly._raw(f, quot), Poly._raw(f, rem[:dd])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._c, other._c)

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.to_list())))

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self._c.size - 1, -1, -1):
            v = int(self._c[i])
            if not v:
                continue
            c = FieldElement(self.field, v).pretty()
            if " + " in c and i:
                c = f"({c})"
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(c)
            elif c == "1":
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self.to_list()})"
