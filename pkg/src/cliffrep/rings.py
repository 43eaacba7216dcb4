"""Exact dense matrix arithmetic over R, C, H and the doubled rings 2R, 2H.

Scalars carry a ring tag and up to four rational components; complex and
quaternion products follow the usual unit laws (i^2 = j^2 = -1, ij = k =
-ji).  Plain rings live in RingMatrix, the doubled rings in BlockPair, an
ordered pair of same-size blocks composed entrywise.  Everything is
immutable and exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"
DOUBLE_REAL = "2R"
DOUBLE_QUATERNION = "2H"

PLAIN_RINGS = (REAL, COMPLEX, QUATERNION)
DOUBLED_RINGS = (DOUBLE_REAL, DOUBLE_QUATERNION)

_COMPONENTS = {REAL: 1, COMPLEX: 2, QUATERNION: 4}


class RingError(Exception):
    """Base class for ring/matrix usage errors."""


class RingMismatchError(RingError):
    """Operands carry different ring tags or incompatible shapes."""


class UnsupportedRingError(RingError):
    """The operation is not defined over the operand's ring."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class RingScalar:
    """Tagged scalar over R, C or H with exact rational components."""

    __slots__ = ("ring", "r", "i", "j", "k")

    def __init__(self, ring: str, r=0, i=0, j=0, k=0):
        if ring not in PLAIN_RINGS:
            raise UnsupportedRingError(f"no scalar type for ring {ring!r}")
        r, i, j, k = _frac(r), _frac(i), _frac(j), _frac(k)
        rank = _COMPONENTS[ring]
        if rank < 4 and (j or k):
            raise RingMismatchError(f"{ring} scalar with j/k components")
        if rank < 2 and i:
            raise RingMismatchError("real scalar with an imaginary component")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RingScalar is immutable")

    # -- constructors

    @classmethod
    def real(cls, value) -> "RingScalar":
        return cls(REAL, value)

    @classmethod
    def complex_parts(cls, r, i) -> "RingScalar":
        return cls(COMPLEX, r, i)

    @classmethod
    def quaternion_parts(cls, r, i, j, k) -> "RingScalar":
        return cls(QUATERNION, r, i, j, k)

    @classmethod
    def zero(cls, ring: str) -> "RingScalar":
        return cls(ring)

    @classmethod
    def one(cls, ring: str) -> "RingScalar":
        return cls(ring, 1)

    def components(self) -> tuple[Fraction, ...]:
        return (self.r, self.i, self.j, self.k)[: _COMPONENTS[self.ring]]

    @property
    def is_zero(self) -> bool:
        return not (self.r or self.i or self.j or self.k)

    def _check(self, other: "RingScalar") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "RingScalar") -> "RingScalar":
        self._check(other)
        return RingScalar(
            self.ring, self.r + other.r, self.i + other.i, self.j + other.j, self.k + other.k
        )

    def __sub__(self, other: "RingScalar") -> "RingScalar":
        self._check(other)
        return RingScalar(
            self.ring, self.r - other.r, self.i - other.i, self.j - other.j, self.k - other.k
        )

    def __neg__(self) -> "RingScalar":
        return RingScalar(self.ring, -self.r, -self.i, -self.j, -self.k)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return RingScalar(self.ring, self.r * f, self.i * f, self.j * f, self.k * f)
        if not isinstance(other, RingScalar):
            return NotImplemented
        self._check(other)
        a0, a1, a2, a3 = self.r, self.i, self.j, self.k
        b0, b1, b2, b3 = other.r, other.i, other.j, other.k
        # quaternion product; exact for the complex and real sub-cases
        return RingScalar(
            self.ring,
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def conjugate(self) -> "RingScalar":
        return RingScalar(self.ring, self.r, -self.i, -self.j, -self.k)

    def norm_sq(self) -> Fraction:
        return self.r * self.r + self.i * self.i + self.j * self.j + self.k * self.k

    def inverse(self) -> "RingScalar | None":
        n = self.norm_sq()
        if not n:
            return None
        return self.conjugate() * (1 / n)

    def __eq__(self, other):
        if not isinstance(other, RingScalar):
            return NotImplemented
        return (self.ring, self.r, self.i, self.j, self.k) == (
            other.ring,
            other.r,
            other.i,
            other.j,
            other.k,
        )

    def __hash__(self):
        return hash((self.ring, self.r, self.i, self.j, self.k))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"RingScalar({self.ring!r}, {format_scalar(self)})"


def format_scalar(s: RingScalar) -> str:
    """Scalar grammar: ``a``, ``a+bi``, ``a+bi+cj+dk`` with zero parts dropped."""

    def rat(f: Fraction) -> str:
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    parts: list[str] = []
    for comp, unit in zip((s.r, s.i, s.j, s.k), ("", "i", "j", "k")):
        if not comp:
            continue
        body = f"{rat(abs(comp))}{unit}"
        if not parts:
            parts.append(body if comp > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if comp > 0 else f"-{body}")
    return "".join(parts) if parts else "0"


class RingMatrix:
    """Immutable dense matrix with entries sharing one plain ring tag."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: str, rows: Sequence[Sequence[RingScalar]]):
        if ring not in PLAIN_RINGS:
            raise UnsupportedRingError(f"RingMatrix does not hold ring {ring!r}")
        grid = tuple(tuple(row) for row in rows)
        if not grid or not grid[0]:
            raise RingMismatchError("empty matrix")
        width = len(grid[0])
        for row in grid:
            if len(row) != width:
                raise RingMismatchError("ragged rows")
            for entry in row:
                if not isinstance(entry, RingScalar) or entry.ring != ring:
                    raise RingMismatchError("entry ring tag differs from the matrix tag")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nrows", len(grid))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RingMatrix is immutable")

    @classmethod
    def from_components(cls, ring: str, rows) -> "RingMatrix":
        """Build from bare rationals (R), (r, i) pairs (C) or 4-tuples (H)."""
        rank = _COMPONENTS[ring]
        out = []
        for row in rows:
            line = []
            for cell in row:
                if rank == 1:
                    line.append(RingScalar(ring, cell))
                else:
                    line.append(RingScalar(ring, *cell))
            out.append(line)
        return cls(ring, out)

    @classmethod
    def identity(cls, ring: str, size: int) -> "RingMatrix":
        one, zero = RingScalar.one(ring), RingScalar.zero(ring)
        return cls(ring, [[one if r == c else zero for c in range(size)] for r in range(size)])

    @classmethod
    def zeros(cls, ring: str, nrows: int, ncols: int | None = None) -> "RingMatrix":
        ncols = nrows if ncols is None else ncols
        zero = RingScalar.zero(ring)
        return cls(ring, [[zero] * ncols for _ in range(nrows)])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def size(self) -> int:
        if not self.is_square:
            raise RingMismatchError("size of a non-square matrix")
        return self.nrows

    def entry(self, r: int, c: int) -> RingScalar:
        return self.rows[r][c]

    def _check_ring(self, other: "RingMatrix") -> None:
        if not isinstance(other, RingMatrix) or other.ring != self.ring:
            raise RingMismatchError("ring tags differ")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise RingMismatchError("shape mismatch in addition")
        return RingMatrix(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.ring, [[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check_ring(other)
        if self.ncols != other.nrows:
            raise RingMismatchError("shape mismatch in product")
        zero = RingScalar.zero(self.ring)
        cols = other.ncols
        out = []
        for ra in self.rows:
            line = []
            for c in range(cols):
                acc = zero
                for k, a in enumerate(ra):
                    if not a.is_zero:
                        acc = acc + a * other.rows[k][c]
                line.append(acc)
            out.append(line)
        return RingMatrix(self.ring, out)

    def scale(self, factor) -> "RingMatrix":
        return RingMatrix(self.ring, [[a * factor for a in row] for row in self.rows])

    def map_entries(self, fn: Callable[[RingScalar], RingScalar]) -> "RingMatrix":
        return RingMatrix(self.ring, [[fn(a) for a in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"<RingMatrix {self.ring} {self.nrows}x{self.ncols}>"


class BlockPair:
    """Element of a doubled ring: an ordered (plus, minus) pair of blocks."""

    __slots__ = ("ring", "plus", "minus")

    def __init__(self, ring: str, plus: RingMatrix, minus: RingMatrix):
        if ring not in DOUBLED_RINGS:
            raise UnsupportedRingError(f"BlockPair does not hold ring {ring!r}")
        inner = REAL if ring == DOUBLE_REAL else QUATERNION
        for block in (plus, minus):
            if block.ring != inner:
                raise RingMismatchError(f"{ring} blocks must be over {inner}")
        if (plus.nrows, plus.ncols) != (minus.nrows, minus.ncols):
            raise RingMismatchError("blocks of different shapes")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("BlockPair is immutable")

    @classmethod
    def identity(cls, ring: str, size: int) -> "BlockPair":
        inner = REAL if ring == DOUBLE_REAL else QUATERNION
        eye = RingMatrix.identity(inner, size)
        return cls(ring, eye, eye)

    @property
    def nrows(self) -> int:
        return self.plus.nrows

    @property
    def ncols(self) -> int:
        return self.plus.ncols

    @property
    def size(self) -> int:
        return self.plus.size

    def _check(self, other: "BlockPair") -> None:
        if not isinstance(other, BlockPair) or other.ring != self.ring:
            raise RingMismatchError("ring tags differ")

    def __add__(self, other: "BlockPair") -> "BlockPair":
        self._check(other)
        return BlockPair(self.ring, self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: "BlockPair") -> "BlockPair":
        self._check(other)
        return BlockPair(self.ring, self.plus - other.plus, self.minus - other.minus)

    def __neg__(self) -> "BlockPair":
        return BlockPair(self.ring, -self.plus, -self.minus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BlockPair(self.ring, self.plus * other, self.minus * other)
        if not isinstance(other, BlockPair):
            return NotImplemented
        self._check(other)
        return BlockPair(self.ring, self.plus * other.plus, self.minus * other.minus)

    def scale(self, factor) -> "BlockPair":
        return BlockPair(self.ring, self.plus.scale(factor), self.minus.scale(factor))

    def __eq__(self, other):
        if not isinstance(other, BlockPair):
            return NotImplemented
        return self.ring == other.ring and self.plus == other.plus and self.minus == other.minus

    def __hash__(self):
        return hash((self.ring, self.plus, self.minus))

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"<BlockPair {self.ring} {self.nrows}x{self.ncols} x2>"


RingElement = RingMatrix | BlockPair


def ring_identity(ring: str, size: int) -> RingElement:
    if ring in DOUBLED_RINGS:
        return BlockPair.identity(ring, size)
    return RingMatrix.identity(ring, size)


def mat_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def mat_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mat_inverse(a: RingElement) -> RingElement | None:
    """Two-sided inverse, or None when singular.

    Over H the elimination multiplies rows from the left only, which is
    sound in a division ring; doubled rings invert blockwise.
    """
    if isinstance(a, BlockPair):
        plus = mat_inverse(a.plus)
        minus = mat_inverse(a.minus)
        if plus is None or minus is None:
            return None
        return BlockPair(a.ring, plus, minus)
    if not a.is_square:
        raise RingMismatchError("only square matrices invert")
    n = a.size
    work = [list(row) for row in a.rows]
    aug = [list(RingMatrix.identity(a.ring, n).rows[r]) for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = work[col][col].inverse()
        work[col] = [inv * v for v in work[col]]
        aug[col] = [inv * v for v in aug[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero:
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return RingMatrix(a.ring, aug)


def mat_det(a: RingMatrix) -> RingScalar:
    """Determinant over the commutative rings R and C, by fraction-free
    elimination on a common-denominator integer lift."""
    if isinstance(a, BlockPair):
        raise UnsupportedRingError("determinant of a doubled-ring pair is taken blockwise")
    if a.ring == QUATERNION:
        raise UnsupportedRingError("no determinant over the quaternions")
    if not a.is_square:
        raise RingMismatchError("determinant of a non-square matrix")
    n = a.size
    den = 1
    for row in a.rows:
        for s in row:
            den = lcm(den, s.r.denominator, s.i.denominator)
    lifted = [[s * den for s in row] for row in a.rows]
    sign = 1
    prev = RingScalar.one(a.ring)
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if not lifted[r][col].is_zero), None)
        if pivot is None:
            return RingScalar.zero(a.ring)
        if pivot != col:
            lifted[col], lifted[pivot] = lifted[pivot], lifted[col]
            sign = -sign
        pk = lifted[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = pk * lifted[r][c] - lifted[r][col] * lifted[col][c]
                lifted[r][c] = _exact_divide(num, prev)
            lifted[r][col] = RingScalar.zero(a.ring)
        prev = pk
    det = lifted[n - 1][n - 1] * sign
    return det * Fraction(1, den**n)


def _exact_divide(num: RingScalar, den: RingScalar) -> RingScalar:
    inv = den.inverse()
    if inv is None:
        raise ZeroDivisionError("fraction-free step divided by zero")
    return num * inv


def char_poly(a: RingMatrix) -> list[Fraction]:
    """Monic characteristic polynomial coefficients [1, c1, ..., cn] over R."""
    if isinstance(a, BlockPair) or a.ring != REAL:
        raise UnsupportedRingError("characteristic polynomial is computed over R")
    if not a.is_square:
        raise RingMismatchError("characteristic polynomial of a non-square matrix")
    n = a.size
    coeffs = [Fraction(1)]
    m = RingMatrix.identity(REAL, n)
    for k in range(1, n + 1):
        m = a * m
        trace = sum((m.rows[d][d].r for d in range(n)), Fraction(0))
        ck = -trace / k
        coeffs.append(ck)
        if k < n:
            m = m + RingMatrix.identity(REAL, n).scale(ck)
    return coeffs


def poly_eval_matrix(coeffs: Sequence[Fraction], a: RingMatrix) -> RingMatrix:
    """Evaluate a polynomial (descending powers, monic first) at a matrix."""
    acc = RingMatrix.zeros(a.ring, a.size)
    eye = RingMatrix.identity(a.ring, a.size)
    for c in coeffs:
        acc = acc * a + eye.scale(c)
    return acc


_EMBED_C = (((0, 0), (1, -1)), ((1, 1), (0, 0)))


def ring_embed_real(a: RingMatrix) -> RingMatrix:
    """Replace complex entries by 2x2 real blocks, quaternion by 4x4 blocks.

    The block patterns make the embedding multiplicative:
        r + si        -> [[r, -s], [s, r]]
        r + si+tj+uk  -> [[r, -s, -t, -u], [s, r, -u, t], [t, u, r, -s], [u, -t, s, r]]
    """
    if a.ring == REAL:
        return a
    if a.ring == COMPLEX:
        width = 2

        def block(s: RingScalar):
            return ((s.r, -s.i), (s.i, s.r))

    elif a.ring == QUATERNION:
        width = 4

        def block(s: RingScalar):
            return (
                (s.r, -s.i, -s.j, -s.k),
                (s.i, s.r, -s.k, s.j),
                (s.j, s.k, s.r, -s.i),
                (s.k, -s.j, s.i, s.r),
            )

    else:
        raise UnsupportedRingError(f"cannot embed ring {a.ring!r}")
    rows = []
    for row in a.rows:
        blocks = [block(s) for s in row]
        for sub in range(width):
            rows.append([RingScalar.real(v) for b in blocks for v in b[sub]])
    return RingMatrix(REAL, rows)


def format_matrix(a: RingElement) -> str:
    """Ring tag header, then aligned rows; doubled rings label both blocks."""
    if isinstance(a, BlockPair):
        inner_plus = _format_rows(a.plus)
        inner_minus = _format_rows(a.minus)
        return "\n".join(
            [f"{a.ring}({a.plus.nrows})", "plus:", inner_plus, "minus:", inner_minus]
        )
    shape = f"{a.nrows}" if a.nrows == a.ncols else f"{a.nrows}x{a.ncols}"
    return f"{a.ring}({shape})\n" + _format_rows(a)


def _format_rows(a: RingMatrix) -> str:
    cells = [[format_scalar(s) for s in row] for row in a.rows]
    widths = [max(len(cells[r][c]) for r in range(a.nrows)) for c in range(a.ncols)]
    lines = []
    for row in cells:
        lines.append("[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]")
    return "\n".join(lines)
