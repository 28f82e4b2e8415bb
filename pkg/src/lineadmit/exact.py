"""Exact rational and Gaussian-rational arithmetic, plus exact matrix rank.

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
(``re + im*i`` with both parts rational) are :class:`QComplex`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction, "QComplex"]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or string such as ``"-3/4"`` into a Fraction.

    Floats are refused: they would silently smuggle rounding into the
    positive-integer tests.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fraction_str(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def fractional_part(r: Fraction) -> Fraction:
    """Return ``r - floor(r)``, which lies in ``[0, 1)``."""
    r = to_fraction(r)
    return r - math.floor(r)


@dataclass(frozen=True)
class QComplex:
    """Gaussian rational ``re + im*i``."""

    re: Fraction = ZERO
    im: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @classmethod
    def coerce(cls, value: Number) -> "QComplex":
        if isinstance(value, QComplex):
            return value
        return cls(to_fraction(value), ZERO)

    @classmethod
    def parse(cls, data) -> "QComplex":
        """Build from ``{"re": "p/q", "im": "p/q"}``, a bare rational, or a pair."""
        if isinstance(data, dict):
            unknown = set(data) - {"re", "im"}
            if unknown:
                raise ValueError(f"unexpected keys in complex value: {sorted(unknown)}")
            return cls(to_fraction(data.get("re", 0)), to_fraction(data.get("im", 0)))
        if isinstance(data, (list, tuple)) and len(data) == 2:
            return cls(to_fraction(data[0]), to_fraction(data[1]))
        return cls.coerce(data)

    def to_json(self) -> dict:
        return {"re": fraction_str(self.re), "im": fraction_str(self.im)}

    def __add__(self, other):
        if not isinstance(other, (QComplex, int, Fraction)):
            return NotImplemented
        other = QComplex.coerce(other)
        return QComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (QComplex, int, Fraction)):
            return NotImplemented
        return self + (-QComplex.coerce(other))

    def __rsub__(self, other):
        return QComplex.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (QComplex, int, Fraction)):
            return NotImplemented
        other = QComplex.coerce(other)
        return QComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        if not isinstance(other, (QComplex, int, Fraction)):
            return NotImplemented
        other = QComplex.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return QComplex(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return QComplex.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, QComplex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def is_positive_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1 and self.re >= 1

    def __str__(self):
        if self.im == 0:
            return fraction_str(self.re)
        if self.re == 0:
            return f"{fraction_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{fraction_str(self.re)}{sign}{fraction_str(abs(self.im))}i"

    def __repr__(self):
        return f"QComplex({self})"


def is_positive_integer(z: Number) -> bool:
    """True iff ``z`` is one of 1, 2, 3, ... (zero imaginary part)."""
    return QComplex.coerce(z).is_positive_integer()


def qsum(values: Iterable[Number]) -> QComplex:
    total = QComplex()
    for v in values:
        total = total + v
    return total


class ExactMatrix:
    """Dense matrix of Gaussian rationals.

    Only what the Aomoto computation needs: construction, products and rank.
    """

    def __init__(self, entries: Sequence[Sequence[Number]], cols: int | None = None):
        rows = [tuple(QComplex.coerce(x) for x in row) for row in entries]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        self._rows = tuple(rows)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[QComplex()] * cols for _ in range(rows)], cols=cols)

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[QComplex, ...]:
        return self._rows[i]

    def to_lists(self) -> list[list[QComplex]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self._rows:
            out.append([
                qsum(r[k] * other._rows[k][j] for k in range(self.cols) if r[k])
                for j in range(other.cols)
            ])
        return ExactMatrix(out, cols=other.cols)

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def rank(self) -> int:
        return rank(self)

    def kernel_dim(self) -> int:
        return self.cols - rank(self)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._rows)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def rank(m: ExactMatrix | Sequence[Sequence[Number]]) -> int:
    """Exact rank via fraction-free (Bareiss) elimination.

    Rows are first scaled to Gaussian integers so every Bareiss division is an
    exact division in Z[i]; the update ``(p*a - b*c) / prev`` then never leaves
    the ring.
    """
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m) if m else ExactMatrix.zeros(0, 0)
    work = [_integral_row(r) for r in m.to_lists()]
    nrows, ncols = len(work), m.cols
    prev = (1, 0)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if work[i][c] != (0, 0)), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][c]
        for i in range(r + 1, nrows):
            b = work[i][c]
            row_i, row_r = work[i], work[r]
            for j in range(c + 1, ncols):
                num = _gsub(_gmul(p, row_i[j]), _gmul(b, row_r[j]))
                row_i[j] = _gdiv_exact(num, prev)
            row_i[c] = (0, 0)
        prev = p
        r += 1
    return r


def kernel_dim(m: ExactMatrix) -> int:
    return m.cols - rank(m)


# Gaussian integers as (re, im) int pairs, used inside rank() only.

def _integral_row(row: Sequence[QComplex]) -> list[tuple[int, int]]:
    den = 1
    for z in row:
        den = math.lcm(den, z.re.denominator, z.im.denominator)
    return [(int(z.re * den), int(z.im * den)) for z in row]


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise ArithmeticError("inexact Bareiss division; elimination invariant broken")
    return (re // n, im // n)
