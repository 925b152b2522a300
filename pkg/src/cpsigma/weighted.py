"""Vectors and matrices in the binomial weight gauge.

The semantic value of vector entry i is sqrt(C(N,i)) * u_i and of matrix
entry (i,j) is sqrt(C(N,i) C(N,j)) * m_ij, where u_i and m_ij are stored
exact rational functions. Products, sums, adjoints and derivatives stay in
the gauge: the square roots only ever appear pairwise, e.g.
sqrt(C(N,i)C(N,l)) * sqrt(C(N,l)C(N,j)) = sqrt(C(N,i)C(N,j)) * C(N,l).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .rational import RF_ZERO, BiRationalFn


def _binoms(order: int):
    return [Fraction(comb(order, i)) for i in range(order + 1)]


class WeightedVector:
    __slots__ = ("order", "entries")

    def __init__(self, order: int, entries):
        entries = tuple(entries)
        if len(entries) != order + 1:
            raise ValueError(f"expected {order + 1} entries, got {len(entries)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedVector is immutable")

    @staticmethod
    def zero(order: int) -> "WeightedVector":
        return WeightedVector(order, [RF_ZERO] * (order + 1))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other):
        self._check(other)
        return WeightedVector(
            self.order, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        self._check(other)
        return WeightedVector(
            self.order, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return WeightedVector(self.order, [-a for a in self.entries])

    def scale(self, c) -> "WeightedVector":
        return WeightedVector(self.order, [a * c for a in self.entries])

    def d_plus(self) -> "WeightedVector":
        return WeightedVector(self.order, [a.d_plus() for a in self.entries])

    def d_minus(self) -> "WeightedVector":
        return WeightedVector(self.order, [a.d_minus() for a in self.entries])

    def dot(self, other: "WeightedVector") -> BiRationalFn:
        """Hermitian inner product self^dagger . other (semantic)."""
        self._check(other)
        total = RF_ZERO
        for w, a, b in zip(_binoms(self.order), self.entries, other.entries):
            total = total + a.involution() * b * w
        return total

    def norm_squared(self) -> BiRationalFn:
        return self.dot(self)

    def __eq__(self, other):
        if not isinstance(other, WeightedVector):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    def __hash__(self):
        return hash((self.order, self.entries))

    def _check(self, other):
        if not isinstance(other, WeightedVector) or other.order != self.order:
            raise ValueError("weighted vector order mismatch")

    def semantic_numeric(self, xi_plus: complex) -> np.ndarray:
        """Evaluate the semantic vector (with explicit sqrt weights)."""
        n = self.order
        return np.array(
            [
                sqrt(comb(n, i)) * e.eval_numeric(xi_plus)
                for i, e in enumerate(self.entries)
            ],
            dtype=complex,
        )

    def __repr__(self):
        return f"WeightedVector(order={self.order}, entries={list(self.entries)!r})"


class WeightedMatrix:
    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != order + 1 or any(len(r) != order + 1 for r in rows):
            raise ValueError("weighted matrix must be (order+1) x (order+1)")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedMatrix is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(order: int) -> "WeightedMatrix":
        z = [[RF_ZERO] * (order + 1) for _ in range(order + 1)]
        return WeightedMatrix(order, z)

    @staticmethod
    def identity(order: int) -> "WeightedMatrix":
        """Semantic identity: gauge entries delta_ij / C(N,i)."""
        rows = [[RF_ZERO] * (order + 1) for _ in range(order + 1)]
        for i, w in enumerate(_binoms(order)):
            rows[i][i] = BiRationalFn.const(1 / w)
        return WeightedMatrix(order, rows)

    @staticmethod
    def from_entries(order: int, fill) -> "WeightedMatrix":
        return WeightedMatrix(
            order,
            [[fill(i, j) for j in range(order + 1)] for i in range(order + 1)],
        )

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def entry(self, i: int, j: int) -> BiRationalFn:
        return self.rows[i][j]

    # -- algebra ------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return WeightedMatrix(
            self.order,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check(other)
        return WeightedMatrix(
            self.order,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return WeightedMatrix(self.order, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "WeightedMatrix":
        return WeightedMatrix(self.order, [[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, WeightedMatrix):
            self._check(other)
            w = _binoms(self.order)
            n = self.order + 1
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = RF_ZERO
                    for l in range(n):
                        a = self.rows[i][l]
                        b = other.rows[l][j]
                        if a.is_zero() or b.is_zero():
                            continue
                        acc = acc + a * b * w[l]
                    row.append(acc)
                out.append(row)
            return WeightedMatrix(self.order, out)
        if isinstance(other, WeightedVector):
            return self.matvec(other)
        return NotImplemented

    def matvec(self, v: WeightedVector) -> WeightedVector:
        if v.order != self.order:
            raise ValueError("weighted order mismatch")
        w = _binoms(self.order)
        out = []
        for i in range(self.order + 1):
            acc = RF_ZERO
            for j in range(self.order + 1):
                a = self.rows[i][j]
                b = v.entries[j]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a * b * w[j]
            out.append(acc)
        return WeightedVector(self.order, out)

    def trace(self) -> BiRationalFn:
        total = RF_ZERO
        for i, w in enumerate(_binoms(self.order)):
            total = total + self.rows[i][i] * w
        return total

    def adjoint(self) -> "WeightedMatrix":
        n = self.order + 1
        return WeightedMatrix(
            self.order,
            [[self.rows[j][i].involution() for j in range(n)] for i in range(n)],
        )

    def commutator(self, other: "WeightedMatrix") -> "WeightedMatrix":
        return self * other - other * self

    def d_plus(self) -> "WeightedMatrix":
        return WeightedMatrix(
            self.order, [[a.d_plus() for a in r] for r in self.rows]
        )

    def d_minus(self) -> "WeightedMatrix":
        return WeightedMatrix(
            self.order, [[a.d_minus() for a in r] for r in self.rows]
        )

    # -- comparison / numerics ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, WeightedMatrix):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        return hash((self.order, self.rows))

    def _check(self, other):
        if not isinstance(other, WeightedMatrix) or other.order != self.order:
            raise ValueError("weighted matrix order mismatch")

    def semantic_numeric(self, xi_plus: complex) -> np.ndarray:
        """Evaluate the semantic matrix (with explicit sqrt weights)."""
        n = self.order
        d = n + 1
        out = np.empty((d, d), dtype=complex)
        root = [sqrt(comb(n, i)) for i in range(d)]
        for i in range(d):
            for j in range(d):
                out[i, j] = root[i] * root[j] * self.rows[i][j].eval_numeric(xi_plus)
        return out

    def __repr__(self):
        return f"WeightedMatrix(order={self.order})"


def outer_product(f: WeightedVector, g: WeightedVector) -> WeightedMatrix:
    """Semantic f (x) g^dagger as a weighted matrix."""
    if f.order != g.order:
        raise ValueError("weighted vector order mismatch")
    conj = [e.involution() for e in g.entries]
    return WeightedMatrix.from_entries(
        f.order, lambda i, j: f.entries[i] * conj[j]
    )
