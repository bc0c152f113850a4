"""Univariate polynomials with exact coefficients, and matrices of them.

A polynomial is a tuple of coefficients in ascending degree with trailing
zeros trimmed; the zero polynomial is ``()``. Coefficients are Python ints
by default but any exact ring element (e.g. ``Fraction``) works.
"""

from __future__ import annotations

import operator
from typing import Iterable, Sequence

from .errors import DomainError
from .exact import ExactMatrix

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)
T: Poly = (0, 1)


def trim(coeffs: Iterable) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def const(c) -> Poly:
    return trim((c,))


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    return trim(tuple(a + b for a, b in zip(p, q)) + p[len(q):])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, k) -> Poly:
    return trim(k * a for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: Poly, e: int) -> Poly:
    if e < 0:
        raise DomainError("negative exponent")
    result, base = ONE, p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def coeff(p: Poly, k: int):
    return p[k] if 0 <= k < len(p) else 0


def evaluate(p: Poly, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def degree(p: Poly) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def linear_power_product(a0, a1, m: int, b0, b1, k: int) -> Poly:
    """Coefficients of ``(a0 + a1*y)**m * (b0 + b1*y)**k`` in ascending powers of y."""
    return mul(power(trim((a0, a1)), m), power(trim((b0, b1)), k))


class PolyMatrix:
    """Immutable dense matrix whose entries are integer polynomials in ``t``."""

    __slots__ = ("_rows",)

    def __init__(self, entries: Sequence[Sequence[Iterable[int]]]):
        rows = tuple(tuple(trim(operator.index(c) for c in p) for p in r) for r in entries)
        if not rows or not rows[0]:
            raise DomainError("matrix must have at least one row and column")
        if len({len(r) for r in rows}) != 1:
            raise DomainError("ragged rows")
        self._rows = rows

    @classmethod
    def constant(cls, m: ExactMatrix) -> "PolyMatrix":
        return cls([[const(x) for x in r] for r in m.tolist()])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index) -> Poly:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self._rows[i]

    def tolist(self) -> list[list[list[int]]]:
        return [[list(p) for p in r] for r in self._rows]

    def degree(self) -> int:
        return max(degree(p) for r in self._rows for p in r)

    def coefficient(self, k: int) -> ExactMatrix:
        """The integer matrix of ``t**k`` coefficients."""
        return ExactMatrix([[coeff(p, k) for p in r] for r in self._rows])

    def evaluate(self, t: int) -> ExactMatrix:
        return ExactMatrix([[evaluate(p, t) for p in r] for r in self._rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self._rows:
            new_row = []
            for j in range(other.cols):
                acc = ZERO
                for k, p in enumerate(r):
                    if p:
                        acc = add(acc, mul(p, other._rows[k][j]))
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out)

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        out = []
        for ra in self._rows:
            for rb in other._rows:
                out.append([mul(p, q) for p in ra for q in rb])
        return PolyMatrix(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"PolyMatrix({self.tolist()!r})"
