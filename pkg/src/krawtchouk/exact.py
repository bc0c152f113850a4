"""Dense exact matrices over the integers and the rationals.

:class:`ExactMatrix` stores its entries in a read-only numpy array. Entries
that fit comfortably in 64 bits are kept as ``int64``; anything larger is
held as Python ``int`` in an ``object`` array. Every operation checks a
magnitude bound before using a fixed-width kernel, so results are always
exact:

* products whose partial sums stay below 2**53 go through float64 BLAS
  (every intermediate is an exactly representable integer),
* products below 2**62 use int64 arithmetic,
* everything else falls back to Python integers.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .config import get_limits
from .errors import ConsistencyError, DomainError, ResourceError

_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(x) for x in a.flat)
    return int(np.abs(a).max())


def _narrow(a: np.ndarray) -> np.ndarray:
    """Return an int64 view of ``a`` when every entry is safely representable."""
    if a.dtype == object:
        if _maxabs(a) < _INT64_SAFE:
            return a.astype(np.int64)
        return a
    return a.astype(np.int64, copy=False)


def _wide(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    return np.array(a.tolist(), dtype=object)


def _to_object_int_array(entries) -> np.ndarray:
    if isinstance(entries, np.ndarray):
        if entries.dtype.kind in "iub":
            if entries.dtype.kind == "u" and entries.dtype.itemsize == 8:
                entries = entries.astype(object)
            else:
                return entries.astype(np.int64)
        elif entries.dtype != object:
            raise DomainError(f"ExactMatrix needs integer entries, got dtype {entries.dtype}")
        rows = entries.tolist()
    else:
        rows = [list(r) for r in entries]
    try:
        rows = [[operator.index(x) for x in r] for r in rows]
    except TypeError as exc:
        raise DomainError(f"ExactMatrix entries must be integers ({exc})") from None
    if rows and len({len(r) for r in rows}) != 1:
        raise DomainError("ragged rows")
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        out[i, :] = r
    return out


class ExactMatrix:
    """Immutable dense matrix of arbitrary-precision integers (0-based indices)."""

    __slots__ = ("_a",)
    __array_priority__ = 1000

    def __init__(self, entries):
        a = _narrow(_to_object_int_array(entries))
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise DomainError(f"matrix must be 2-D with at least one row and column, got shape {a.shape}")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "ExactMatrix":
        m = object.__new__(cls)
        a = _narrow(a)
        a.flags.writeable = False
        m._a = a
        return m

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._wrap(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "ExactMatrix":
        values = [operator.index(v) for v in values]
        n = len(values)
        out = np.zeros((n, n), dtype=object)
        out[...] = 0
        for i, v in enumerate(values):
            out[i, i] = v
        return cls._wrap(out)

    # -- shape and access ---------------------------------------------
    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat tuple of the entries."""
        return tuple(int(x) for x in self._a.flat)

    def __getitem__(self, index) -> int:
        i, j = index
        return int(self._a[i, j])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[i])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[:, j])

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self._a.tolist()]

    def to_numpy(self) -> np.ndarray:
        """A writeable copy (int64 or object dtype)."""
        return self._a.copy()

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.diagonal(self._a))

    def max_abs(self) -> int:
        return _maxabs(self._a)

    def total(self) -> int:
        return int(_wide(self._a).sum())

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self._a.T.copy())

    def transpose(self) -> "ExactMatrix":
        return self.T

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and bool(np.array_equal(self._a, self._a.T))

    def is_diagonal(self) -> bool:
        return self.is_square() and bool(np.array_equal(self._a, np.diag(np.diagonal(self._a))))

    # -- arithmetic ---------------------------------------------------
    def _binary(self, other: "ExactMatrix", op) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DomainError(f"shape mismatch {self.shape} vs {other.shape}")
        a, b = self._a, other._a
        if _maxabs(a) + _maxabs(b) >= _INT64_SAFE:
            a, b = _wide(a), _wide(b)
        return ExactMatrix._wrap(op(a, b))

    def __add__(self, other):
        return self._binary(other, operator.add)

    def __sub__(self, other):
        return self._binary(other, operator.sub)

    def __neg__(self):
        return ExactMatrix._wrap(-self._a)

    def __mul__(self, k):
        try:
            k = operator.index(k)
        except TypeError:
            return NotImplemented
        a = self._a
        if _maxabs(a) * abs(k) >= _INT64_SAFE:
            a = _wide(a)
        return ExactMatrix._wrap(a * k)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self._a, other._a
        bound = _maxabs(a) * _maxabs(b) * self.cols
        if bound < _FLOAT_EXACT and a.dtype != object and b.dtype != object:
            prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        elif bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
            prod = a @ b
        else:
            prod = _wide(a) @ _wide(b)
        return ExactMatrix._wrap(prod)

    def __pow__(self, e: int) -> "ExactMatrix":
        if not self.is_square() or e < 0:
            raise DomainError("power needs a square matrix and a nonnegative exponent")
        result = ExactMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        rows, cols = self.rows * other.rows, self.cols * other.cols
        if rows * cols > get_limits().max_entries:
            raise ResourceError(
                f"Kronecker product of size {rows}x{cols} exceeds max_entries={get_limits().max_entries}"
            )
        a, b = self._a, other._a
        if _maxabs(a) * _maxabs(b) >= _INT64_SAFE:
            a, b = _wide(a), _wide(b)
        return ExactMatrix._wrap(np.kron(a, b))

    def exact_divide_columns(self, divisors: Sequence[int]) -> "ExactMatrix":
        """Divide column ``j`` by ``divisors[j]``; every quotient must be exact."""
        if len(divisors) != self.cols:
            raise DomainError("one divisor per column required")
        out = _wide(self._a).copy()
        for j, d in enumerate(divisors):
            for i in range(self.rows):
                q, r = divmod(out[i, j], d)
                if r:
                    raise ConsistencyError(
                        f"entry ({i},{j}) = {out[i, j]} is not divisible by {d}"
                    )
                out[i, j] = q
        return ExactMatrix._wrap(out)

    def exact_divide(self, d: int) -> "ExactMatrix":
        return self.exact_divide_columns([d] * self.cols)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMatrix):
            return other == self
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    __hash__ = None

    def first_mismatch(self, other: "ExactMatrix"):
        """Location ``(i, j, self[i,j], other[i,j])`` of the first differing entry, or None."""
        if self.shape != other.shape:
            return ("shape", self.shape, other.shape)
        diff = np.argwhere(_wide(self._a) != _wide(other._a))
        if len(diff) == 0:
            return None
        i, j = (int(x) for x in diff[0])
        return (i, j, self[i, j], other[i, j])

    def __repr__(self) -> str:
        return f"ExactMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.tolist()]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


class RationalMatrix:
    """Immutable dense matrix of :class:`fractions.Fraction` entries."""

    __slots__ = ("_a",)
    __array_priority__ = 1000

    def __init__(self, entries):
        if isinstance(entries, ExactMatrix):
            entries = entries.tolist()
        rows = [[Fraction(x) for x in r] for r in entries]
        if not rows or not rows[0]:
            raise DomainError("matrix must have at least one row and column")
        if len({len(r) for r in rows}) != 1:
            raise DomainError("ragged rows")
        a = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, r in enumerate(rows):
            a[i, :] = r
        a.flags.writeable = False
        self._a = a

    @classmethod
    def scaled(cls, m: ExactMatrix, scale) -> "RationalMatrix":
        scale = Fraction(scale)
        return cls([[scale * x for x in r] for r in m.tolist()])

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(self._a.flat)

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self._a[i, j]

    def tolist(self) -> list[list[Fraction]]:
        return self._a.tolist()

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(self._a[:, j], Fraction(0)) for j in range(self.cols))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._a.flat)

    def to_exact(self) -> ExactMatrix:
        if not self.is_integral():
            raise ConsistencyError("matrix has non-integer entries")
        return ExactMatrix([[int(x) for x in r] for r in self.tolist()])

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(self._a.T.tolist())

    def apply(self, vector: Iterable) -> tuple[Fraction, ...]:
        v = [Fraction(x) for x in vector]
        if len(v) != self.cols:
            raise DomainError(f"vector length {len(v)} does not match {self.cols} columns")
        return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in self._a.tolist())

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            other = RationalMatrix(other)
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        return RationalMatrix((self._a @ other._a).tolist())

    def __rmatmul__(self, other):
        if isinstance(other, ExactMatrix):
            return RationalMatrix(other) @ self
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactMatrix):
            other = RationalMatrix(other)
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    __hash__ = None

    def first_mismatch(self, other):
        if isinstance(other, ExactMatrix):
            other = RationalMatrix(other)
        if self.shape != other.shape:
            return ("shape", self.shape, other.shape)
        for i in range(self.rows):
            for j in range(self.cols):
                if self._a[i, j] != other._a[i, j]:
                    return (i, j, self._a[i, j], other._a[i, j])
        return None

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in r] for r in self.tolist()]!r})"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.tolist()]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """``[a, b] = ab - ba``."""
    return a @ b - b @ a
