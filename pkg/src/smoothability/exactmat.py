"""Exact rational dense matrices: reduced echelon form, rank, nullspace.

Entries are :class:`fractions.Fraction`.  Elimination runs fraction-free on
integer rows (each row scaled by the lcm of its denominators and kept
primitive), which keeps coefficient growth in check without any floating
point.  A prime-field rank never exceeds the rational rank, so it settles
the rational rank whenever it reaches an upper bound known in advance
(:func:`certified_rank`); otherwise the rank is computed over Q.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

import gmpy2

__all__ = [
    "RatMatrix",
    "rref",
    "rank",
    "nullspace",
    "rank_mod_p",
    "random_prime",
    "same_row_space",
    "parse_rational",
    "certified_rank",
    "EchelonBasis",
]


def parse_rational(value) -> Fraction:
    """Convert an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point entries are not accepted")
    return Fraction(int(value))


class RatMatrix:
    """Immutable dense matrix over the rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def _trusted(cls, rows: tuple, cols: int) -> "RatMatrix":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        zero = Fraction(0)
        return cls._trusted(tuple((zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_json(cls, text: str) -> "RatMatrix":
        data = json.loads(text)
        return cls(data, len(data[0]) if data else 0)

    def to_json(self) -> str:
        return json.dumps([[str(x) for x in row] for row in self._data])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._data for x in row)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return self.rows

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    @property
    def T(self) -> "RatMatrix":
        if self.rows == 0:
            return RatMatrix._trusted(tuple(() for _ in range(self.cols)), 0)
        return RatMatrix._trusted(tuple(zip(*self._data)), self.rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T._data
        out = tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
            for row in self._data
        )
        return RatMatrix._trusted(out, other.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def select_columns(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix._trusted(tuple(tuple(row[j] for j in idx) for row in self._data), len(idx))

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RatMatrix._trusted(
            tuple(a + b for a, b in zip(self._data, other._data)), self.cols + other.cols
        )

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RatMatrix._trusted(self._data + other._data, self.cols)


# -- integer-row elimination -------------------------------------------------


def _as_rows(M) -> list[Sequence]:
    if isinstance(M, RatMatrix):
        return list(M._data)
    return [row for row in M]


def _ncols(M) -> int:
    if isinstance(M, RatMatrix):
        return M.cols
    rows = list(M)
    return len(rows[0]) if rows else 0


def _integer_row(row: Sequence) -> list[int] | None:
    """Scale a rational row to a primitive integer row; None if zero."""
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x]
    scale = reduce(lcm, dens, 1)
    if scale == 1:
        out = [int(x) for x in row]
    else:
        out = [int(x * scale) for x in row]
    g = reduce(gcd, out, 0)
    if g == 0:
        return None
    if g != 1:
        out = [x // g for x in out]
    return out


def _make_primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _eliminate(rows: list[list], ncols: int, full: bool) -> list[int]:
    """In-place fraction-free elimination; returns pivot columns.

    With ``full`` the rows above each pivot are cleared as well
    (Gauss-Jordan); otherwise only the rows below.
    """
    pivots: list[int] = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        best = -1
        best_bits = None
        for i in range(r, m):
            v = rows[i][c]
            if v:
                bits = abs(v).bit_length()
                if best_bits is None or bits < best_bits:
                    best, best_bits = i, bits
                    if bits == 1:
                        break
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        pv = prow[c]
        targets = range(m) if full else range(r + 1, m)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if not a:
                continue
            g = gcd(pv, a)
            mp, ma = pv // g, a // g
            start = 0 if full else c
            new = row[:start] + [mp * x - ma * y for x, y in zip(row[start:], prow[start:])]
            rows[i] = _make_primitive(new)
        pivots.append(c)
        r += 1
    return pivots


def _prepare(M) -> tuple[list[list], int]:
    ncols = _ncols(M)
    rows = []
    for row in _as_rows(M):
        ir = _integer_row(row)
        if ir is not None:
            rows.append([gmpy2.mpz(x) for x in ir])
    return rows, ncols


def rref(M) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns.

    The result has the same shape as ``M``; zero rows go to the bottom.
    """
    nrows = len(_as_rows(M))
    rows, ncols = _prepare(M)
    pivots = _eliminate(rows, ncols, full=True)
    out = []
    for k, c in enumerate(pivots):
        pv = rows[k][c]
        out.append(tuple(Fraction(int(x), int(pv)) if x else Fraction(0) for x in rows[k]))
    zero = (Fraction(0),) * ncols
    out.extend(zero for _ in range(nrows - len(pivots)))
    return RatMatrix._trusted(tuple(out), ncols), tuple(pivots)


def rank(M) -> int:
    """Rank over the rationals. Accepts a RatMatrix or a list of rows."""
    rows, ncols = _prepare(M)
    if not rows:
        return 0
    return len(_eliminate(rows, ncols, full=False))


def nullspace(M) -> RatMatrix:
    """Basis of the right kernel, one vector per row.

    For each free column f the basis vector has a 1 at f and zeros at the
    other free columns, so for ``M = (I | A)`` the basis is ``(-A^T | I)``.
    """
    ncols = _ncols(M)
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R[k, f]
        basis.append(tuple(v))
    return RatMatrix._trusted(tuple(basis), ncols)


def same_row_space(A, B) -> bool:
    """True if the row spaces of A and B coincide."""
    ra, rb = rank(A), rank(B)
    if ra != rb:
        return False
    return rank(_as_rows(A) + _as_rows(B)) == ra


# -- prime field check --------------------------------------------------------


def random_prime(rng: random.Random | None = None, bits: int = 62) -> int:
    """A random prime with exactly ``bits`` bits."""
    rng = rng or random.Random(0)
    while True:
        p = int(gmpy2.next_prime(rng.getrandbits(bits) | (1 << (bits - 1))))
        if p.bit_length() == bits:
            return p


def rank_mod_p(M, p: int) -> int:
    """Rank of M reduced modulo the prime p.

    Raises ZeroDivisionError if p divides a denominator.
    """
    ncols = _ncols(M)
    rows = []
    for row in _as_rows(M):
        rr = []
        for x in row:
            x = parse_rational(x)
            if x.denominator % p == 0:
                raise ZeroDivisionError("prime divides a denominator")
            rr.append(x.numerator * pow(x.denominator, -1, p) % p)
        if any(rr):
            rows.append(rr)
    r = 0
    m = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [x * inv % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, m):
            a = rows[i][c]
            if a:
                rows[i] = [(x - a * y) % p for x, y in zip(rows[i], prow)]
        r += 1
        if r == m:
            break
    return r


def _rank_mod_small_prime(rows: list[list[int]], ncols: int, p: int) -> int:
    import numpy as np

    A = np.array([[x % p for x in row] for row in rows], dtype=np.int64).reshape(len(rows), ncols)
    m = A.shape[0]
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r]) % p) % p
        r += 1
    return r


def certified_rank(M, upper: int, p: int = 2147483629) -> int:
    """Rational rank of M, given a proven upper bound ``upper``.

    The rank modulo p never exceeds the rational rank, so when it reaches
    ``upper`` the rational rank is settled without rational elimination.
    Otherwise the exact rational rank is computed.
    """
    rows, ncols = _prepare(M)
    if not rows:
        return 0
    upper = min(upper, len(rows), ncols)
    if p < 2**31:
        modp = _rank_mod_small_prime([[int(x) for x in row] for row in rows], ncols, p)
    else:
        modp = rank_mod_p([[int(x) for x in row] for row in rows], p)
    if modp > upper:
        raise AssertionError(f"rank mod p ({modp}) exceeds the proven bound {upper}")
    if modp == upper:
        return modp
    return len(_eliminate(rows, ncols, full=False))


class EchelonBasis:
    """Incrementally grown row-echelon basis of a subspace of Q^ncols."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, list] = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, row: Sequence) -> list | None:
        ir = _integer_row(row)
        if ir is None:
            return None
        vec = [gmpy2.mpz(x) for x in ir]
        for c in sorted(self._rows):
            a = vec[c]
            if not a:
                continue
            prow = self._rows[c]
            pv = prow[c]
            g = gcd(pv, a)
            vec = _make_primitive([(pv // g) * x - (a // g) * y for x, y in zip(vec, prow)])
        if not any(vec):
            return None
        return vec

    def add(self, row: Sequence) -> bool:
        """Insert a row; True if it enlarged the span."""
        vec = self.reduce(row)
        if vec is None:
            return False
        lead = next(i for i, x in enumerate(vec) if x)
        self._rows[lead] = vec
        return True

    def contains(self, row: Sequence) -> bool:
        return self.reduce(row) is None
