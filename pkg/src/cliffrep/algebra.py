"""Exact multivector arithmetic for real Clifford algebras of signature (p, q).

Basis blades are encoded as bitmasks over the n = p + q generator slots:
generator i (1-based) occupies bit i - 1.  Generators 1..p square to +1,
generators p+1..n square to -1, and distinct generators anticommute.
Coefficients are exact rationals, stored internally as an integer numerator
per blade over one positive common denominator, so products and sums never
round.

The product sign of two blades is the parity of the transpositions needed to
interleave their generators, times the metric signs of the generators they
share.  For small algebras the signs are precomputed into a flat byte table;
wider algebras fall back to a per-pair popcount loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

MAX_GENERATORS = 32

# Sign tables take 4**n bytes; beyond this width compute signs pairwise.
_TABLE_MAX_N = 12


class AlgebraError(Exception):
    """Base class for errors raised by the algebra layer."""


class SignatureMismatchError(AlgebraError):
    """Two operands belong to different algebras."""


class BladeWidthError(AlgebraError):
    """A blade mask does not fit the signature's generator count."""


class DegenerateSignatureError(AlgebraError):
    """The operation needs at least one generator."""


class DecompositionError(AlgebraError):
    """An element is not reachable from the requested generating set."""


class StructureError(AlgebraError):
    """Supplied generators violate the required square/anticommutation laws."""


@dataclass(frozen=True)
class Signature:
    """Generator counts (p, q): p squares of +1 followed by q squares of -1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative generator count in ({self.p}, {self.q})")
        if self.p + self.q > MAX_GENERATORS:
            raise BladeWidthError(
                f"signature ({self.p}, {self.q}) exceeds the {MAX_GENERATORS}-generator bound"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def neg_mask(self) -> int:
        """Bits of the generators squaring to -1."""
        return ((1 << self.q) - 1) << self.p

    def square_of(self, index: int) -> int:
        """Square (+1 or -1) of generator `index`, 1-based."""
        if not 1 <= index <= self.n:
            raise BladeWidthError(f"generator {index} outside 1..{self.n}")
        return 1 if index <= self.p else -1

    def generator_name(self, index: int) -> str:
        return f"e{index}" if index <= self.p else f"eps{index - self.p}"

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


# ---------------------------------------------------------------------------
# blade product signs

_BIT_LUT = [bytes(((byte >> k) & 1) for k in range(8)) for byte in range(256)]

_sign_tables: dict[tuple[int, int], bytes] = {}


def _column_bits(n: int) -> list[int]:
    """colbits[i] has bit b set iff generator slot i is present in mask b."""
    size = 1 << n
    cols = []
    for i in range(n):
        block = ((1 << (1 << i)) - 1) << (1 << i)
        period = 1 << (i + 1)
        val = 0
        for start in range(0, size, period):
            val |= block << start
        cols.append(val)
    return cols


def _build_sign_table(n: int, neg_mask: int) -> bytes:
    size = 1 << n
    cols = _column_bits(n)
    nbytes = max(1, size // 8)
    rows = bytearray(size * size)
    for a in range(size):
        rowmask = 0
        for i in range(n):
            if ((a >> (i + 1)).bit_count()) & 1:
                rowmask ^= cols[i]
        m = a & neg_mask
        while m:
            low = m & -m
            rowmask ^= cols[low.bit_length() - 1]
            m ^= low
        packed = rowmask.to_bytes(nbytes, "little")
        row = b"".join(_BIT_LUT[byte] for byte in packed)
        rows[a * size : (a + 1) * size] = row[:size]
    return bytes(rows)


def _sign_table(sig: Signature) -> bytes:
    key = (sig.n, sig.neg_mask)
    table = _sign_tables.get(key)
    if table is None:
        table = _build_sign_table(sig.n, sig.neg_mask)
        _sign_tables[key] = table
    return table


def _pair_sign(a: int, b: int, neg_mask: int) -> int:
    """Sign of the blade product a*b, computed without a table."""
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    swaps += (a & b & neg_mask).bit_count()
    return -1 if swaps & 1 else 1


def blade_product(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """Multiply two basis blades given as masks; returns (sign, result mask)."""
    if a >> sig.n or b >> sig.n:
        raise BladeWidthError(f"blade mask wider than {sig.n} generators")
    if a < 0 or b < 0:
        raise BladeWidthError("blade masks must be non-negative")
    return _pair_sign(a, b, sig.neg_mask), a ^ b


def pseudoscalar_square(sig: Signature) -> int:
    """Square of the product of all generators, +1 or -1."""
    n = sig.n
    if n == 0:
        raise DegenerateSignatureError("no generators: the unit element has no pseudoscalar")
    swaps = (n * (n - 1)) // 2 + sig.q
    return -1 if swaps & 1 else 1


# ---------------------------------------------------------------------------
# multivectors


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def _normalized(num: dict[int, int], den: int) -> tuple[dict[int, int], int]:
    num = {m: c for m, c in num.items() if c}
    if not num:
        return {}, 1
    g = gcd(den, *num.values())
    if g > 1:
        den //= g
        num = {m: c // g for m, c in num.items()}
    return num, den


class Multivector:
    """Immutable element of the Clifford algebra with rational coefficients.

    Zero coefficients are never stored; equality and hashing are structural
    on the pruned term mapping.
    """

    __slots__ = ("sig", "_num", "_den")

    def __init__(self, sig: Signature, terms: Mapping[int, Fraction | int] | None = None):
        coeffs: dict[int, Fraction] = {}
        if terms:
            for mask, value in terms.items():
                if mask >> sig.n or mask < 0:
                    raise BladeWidthError(f"blade mask {mask:#x} outside signature {sig}")
                f = _as_fraction(value)
                if f:
                    coeffs[mask] = coeffs.get(mask, Fraction(0)) + f
        den = 1
        for f in coeffs.values():
            den = lcm(den, f.denominator)
        num = {m: int(f * den) for m, f in coeffs.items() if f}
        num, den = _normalized(num, den)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Multivector is immutable")

    @classmethod
    def _raw(cls, sig: Signature, num: dict[int, int], den: int) -> "Multivector":
        mv = object.__new__(cls)
        num, den = _normalized(num, den)
        object.__setattr__(mv, "sig", sig)
        object.__setattr__(mv, "_num", num)
        object.__setattr__(mv, "_den", den)
        return mv

    # -- constructors

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls._raw(sig, {}, 1)

    @classmethod
    def scalar(cls, sig: Signature, value: Fraction | int) -> "Multivector":
        f = _as_fraction(value)
        return cls._raw(sig, {0: f.numerator}, f.denominator)

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff: Fraction | int = 1) -> "Multivector":
        if mask >> sig.n or mask < 0:
            raise BladeWidthError(f"blade mask {mask:#x} outside signature {sig}")
        f = _as_fraction(coeff)
        return cls._raw(sig, {mask: f.numerator}, f.denominator)

    @classmethod
    def generator(cls, sig: Signature, index: int) -> "Multivector":
        """Generator by 1-based index."""
        if not 1 <= index <= sig.n:
            raise BladeWidthError(f"generator {index} outside 1..{sig.n}")
        return cls.blade(sig, 1 << (index - 1))

    @classmethod
    def pseudoscalar(cls, sig: Signature) -> "Multivector":
        if sig.n == 0:
            raise DegenerateSignatureError("no generators")
        return cls.blade(sig, sig.full_mask)

    # -- inspection

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_scalar(self) -> bool:
        return not self._num or set(self._num) == {0}

    def coefficient(self, mask: int) -> Fraction:
        return Fraction(self._num.get(mask, 0), self._den)

    def scalar_part(self) -> Fraction:
        return self.coefficient(0)

    def terms(self) -> list[tuple[int, Fraction]]:
        """(mask, coefficient) pairs in ascending mask order."""
        return [(m, Fraction(c, self._den)) for m, c in sorted(self._num.items())]

    def blades(self) -> list[int]:
        return sorted(self._num)

    # -- arithmetic

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatchError(f"{self.sig} vs {other.sig}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_sig(other)
        da, db = self._den, other._den
        den = lcm(da, db)
        fa, fb = den // da, den // db
        num = {m: c * fa for m, c in self._num.items()}
        for m, c in other._num.items():
            num[m] = num.get(m, 0) + c * fb
        return Multivector._raw(self.sig, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._num.items()}, self._den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            num = {m: c * f.numerator for m, c in self._num.items()}
            return Multivector._raw(self.sig, num, self._den * f.denominator)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_sig(other)
        sig = self.sig
        num = _mul_term_dicts(sig, self._num, other._num)
        return Multivector._raw(sig, num, self._den * other._den)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if not f:
                raise ZeroDivisionError("division of a multivector by zero")
            return self * Fraction(f.denominator, f.numerator)
        return NotImplemented

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Multivector.scalar(self.sig, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    # -- comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._den == other._den and self._num == other._num

    def __hash__(self):
        return hash((self.sig, self._den, frozenset(self._num.items())))

    def __bool__(self):
        return bool(self._num)

    def __repr__(self):
        from . import text

        return f"<{text.format_multivector(self)} in {self.sig}>"

    def __str__(self):
        from . import text

        return text.format_multivector(self)


def _mul_accumulate(sig: Signature, out: dict[int, int], xa: dict[int, int], xb: dict[int, int]) -> None:
    """Accumulate the integer-numerator blade products of xa*xb into out."""
    n = sig.n
    get = out.get
    if n <= _TABLE_MAX_N:
        table = _sign_table(sig)
        for ma, ca in xa.items():
            base = ma << n
            for mb, cb in xb.items():
                v = -ca * cb if table[base + mb] else ca * cb
                k = ma ^ mb
                w = get(k)
                out[k] = v if w is None else w + v
    else:
        neg = sig.neg_mask
        for ma, ca in xa.items():
            for mb, cb in xb.items():
                v = ca * cb * _pair_sign(ma, mb, neg)
                k = ma ^ mb
                w = get(k)
                out[k] = v if w is None else w + v


def _mul_term_dicts(sig: Signature, xa: dict[int, int], xb: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    _mul_accumulate(sig, out, xa, xb)
    return out


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product; function form of ``a * b``."""
    return a * b


def mv_add(a: Multivector, b: Multivector) -> Multivector:
    return a + b


def scalar_mul(value: Fraction | int, a: Multivector) -> Multivector:
    return a * _as_fraction(value)


# ---------------------------------------------------------------------------
# generator lists and structured decompositions


class GeneratorList:
    """Elements acting as the generators of an abstract signature inside a host.

    Every element must square to +1 or -1 and all pairs must anticommute;
    the squares, sorted +1 before -1, determine the abstract signature the
    list presents.  Subset products (ascending position order) are cached.
    """

    def __init__(
        self,
        sig: Signature,
        elements: Sequence[Multivector],
        squares: Sequence[int] | None = None,
    ):
        self.sig = sig
        self.elements = tuple(elements)
        for g in self.elements:
            if g.sig != sig:
                raise SignatureMismatchError("generator from a different algebra")
        computed = []
        for idx, g in enumerate(self.elements):
            sq = g * g
            if sq == 1:
                computed.append(1)
            elif sq == -1:
                computed.append(-1)
            else:
                raise StructureError(f"generator {idx} squares to {sq}, not +1 or -1")
        if squares is not None and list(squares) != computed:
            raise StructureError(f"declared squares {list(squares)} != computed {computed}")
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                gi, gj = self.elements[i], self.elements[j]
                if gi * gj != -(gj * gi):
                    raise StructureError(f"generators {i} and {j} do not anticommute")
        self.squares = tuple(computed)
        pos = sum(1 for s in computed if s == 1)
        if any(s == 1 for s in computed[pos:]):
            raise StructureError("squares must be ordered with all +1 generators first")
        self.abstract_signature = Signature(pos, len(computed) - pos)
        self._products: dict[int, Multivector] = {0: Multivector.scalar(sig, 1)}

    def __len__(self) -> int:
        return len(self.elements)

    def product(self, subset_mask: int) -> Multivector:
        """Ordered product of the generators selected by an abstract mask."""
        cached = self._products.get(subset_mask)
        if cached is not None:
            return cached
        low = subset_mask & -subset_mask
        rest = subset_mask ^ low
        value = self.elements[low.bit_length() - 1] * self.product(rest)
        self._products[subset_mask] = value
        return value


def _single_signed_blade(mv: Multivector) -> tuple[int, Fraction] | None:
    if len(mv._num) != 1:
        return None
    ((mask, num),) = mv._num.items()
    return mask, Fraction(num, mv._den)


class SplitBasis:
    """Rewriting of host elements over (sub generators) x (outer generators).

    Solves the linear change of basis from host blades to the products
    (sub)_S * (outer)_A.  When every product is a single signed blade the
    basis change is a signed permutation and decomposition is a per-blade
    lookup; otherwise an exact dense solve over the 2^n blade coordinates
    is factored once and reused.
    """

    def __init__(self, sub: GeneratorList, outer: GeneratorList):
        if sub.sig != outer.sig:
            raise SignatureMismatchError("sub and outer generators in different algebras")
        for u in outer.elements:
            for g in sub.elements:
                if u * g != g * u:
                    raise StructureError("outer generator does not commute with the sub generators")
        self.sig = sub.sig
        self.sub = sub
        self.outer = outer
        self._lookup: dict[int, tuple[int, int, Fraction]] | None = None
        self._solver = None
        ks, ko = len(sub), len(outer)
        lookup: dict[int, tuple[int, int, Fraction]] = {}
        permutation = True
        for amask in range(1 << ko):
            outer_part = outer.product(amask)
            for smask in range(1 << ks):
                prod = sub.product(smask) * outer_part
                single = _single_signed_blade(prod)
                if single is None:
                    permutation = False
                    break
                mask, coeff = single
                if mask in lookup:
                    permutation = False
                    break
                lookup[mask] = (amask, smask, coeff)
            if not permutation:
                break
        if permutation:
            self._lookup = lookup
        else:
            self._solver = _DenseBasisSolver(sub, outer)

    def decompose(self, a: Multivector) -> dict[int, Multivector]:
        """Components of ``a`` keyed by outer subset mask, as abstract sub elements."""
        if a.sig != self.sig:
            raise SignatureMismatchError("element from a different algebra")
        if self._lookup is not None:
            buckets: dict[int, dict[int, Fraction]] = {}
            for mask, coeff in a.terms():
                hit = self._lookup.get(mask)
                if hit is None:
                    raise DecompositionError(
                        f"blade {mask:#x} is not reachable from the given generators"
                    )
                amask, smask, factor = hit
                buckets.setdefault(amask, {})[smask] = coeff / factor
            sub_sig = self.sub.abstract_signature
            return {am: Multivector(sub_sig, terms) for am, terms in buckets.items()}
        return self._solver.decompose(a)

    def recompose(self, components: Mapping[int, Multivector]) -> Multivector:
        """Inverse of decompose: sum of reindex(component) * outer product."""
        total = Multivector.zero(self.sig)
        for amask, comp in components.items():
            total = total + reindex(comp, self.sub) * self.outer.product(amask)
        return total


class _DenseBasisSolver:
    """Exact Gaussian-elimination fallback for non-blade basis changes."""

    def __init__(self, sub: GeneratorList, outer: GeneratorList):
        self.sig = sub.sig
        self.sub_sig = sub.abstract_signature
        self.ko = len(outer)
        self.ks = len(sub)
        dim = self.sig.dim
        cols = []
        for amask in range(1 << self.ko):
            for smask in range(1 << self.ks):
                prod = sub.product(smask) * outer.product(amask)
                vec = [Fraction(0)] * dim
                for mask, coeff in prod.terms():
                    vec[mask] = coeff
                cols.append(vec)
        self._solver = LinearSolver(cols)

    def decompose(self, a: Multivector) -> dict[int, Multivector]:
        dim = self.sig.dim
        vec = [Fraction(0)] * dim
        for mask, coeff in a.terms():
            vec[mask] = coeff
        coords = self._solver.solve(vec)
        if coords is None:
            raise DecompositionError("element outside the span of the generator products")
        out: dict[int, Multivector] = {}
        width = 1 << self.ks
        for amask in range(1 << self.ko):
            terms = {s: coords[amask * width + s] for s in range(width)}
            mv = Multivector(self.sub_sig, terms)
            if not mv.is_zero:
                out[amask] = mv
        return out


class LinearSolver:
    """Exact rational solver for a fixed column family, factored once.

    Solves ``sum x_j col_j = target`` and reports inconsistency with None.
    """

    def __init__(self, columns: Sequence[Sequence[Fraction]]):
        self.ncols = len(columns)
        self.nrows = len(columns[0]) if columns else 0
        # rows of [A | I] reduced to echelon form; track pivot columns
        aug = []
        for r in range(self.nrows):
            row = [columns[c][r] for c in range(self.ncols)]
            rhs = [Fraction(int(i == r)) for i in range(self.nrows)]
            aug.append(row + rhs)
        self.pivots: list[tuple[int, int]] = []  # (row, col)
        row = 0
        for col in range(self.ncols):
            pivot = next((r for r in range(row, self.nrows) if aug[r][col]), None)
            if pivot is None:
                continue
            aug[row], aug[pivot] = aug[pivot], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [v * inv for v in aug[row]]
            for r in range(self.nrows):
                if r != row and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[row])]
            self.pivots.append((row, col))
            row += 1
            if row == self.nrows:
                break
        self.rank = row
        self._aug = aug

    def solve(self, target: Sequence[Fraction]) -> list[Fraction] | None:
        width = self.ncols
        transformed = []
        for r in range(self.nrows):
            acc = Fraction(0)
            rowdata = self._aug[r]
            for i, t in enumerate(target):
                if t:
                    acc += rowdata[width + i] * t
            transformed.append(acc)
        x = [Fraction(0)] * self.ncols
        for row, col in self.pivots:
            x[col] = transformed[row]
        # consistency: rows below the rank must have zero transformed target
        for r in range(self.rank, self.nrows):
            if transformed[r]:
                return None
        return x


def split_along(
    a: Multivector, u: Multivector, sub: GeneratorList
) -> tuple[Multivector, Multivector]:
    """Write ``a = a0 + a1*u`` with both parts in the subalgebra of ``sub``.

    ``u`` must square to +1 or -1 and commute with everything ``sub``
    generates; the decomposition is unique when it exists.
    """
    outer = GeneratorList(a.sig, [u])
    basis = SplitBasis(sub, outer)
    comps = basis.decompose(a)
    zero = Multivector.zero(a.sig)
    a0 = reindex(comps[0], sub) if 0 in comps else zero
    a1 = reindex(comps[1], sub) if 1 in comps else zero
    return a0, a1


def conjugate_along(a: Multivector, u: Multivector, sub: GeneratorList) -> Multivector:
    """The involution a0 + a1*u -> a0 - a1*u over the split along ``u``."""
    a0, a1 = split_along(a, u, sub)
    return a0 - a1 * u


def reindex(a_abstract: Multivector, gens: GeneratorList) -> Multivector:
    """Structure-preserving image of an abstract element through ``gens``."""
    if a_abstract.sig != gens.abstract_signature:
        raise StructureError(
            f"element over {a_abstract.sig} does not match generators presenting "
            f"{gens.abstract_signature}"
        )
    total = Multivector.zero(gens.sig)
    for mask, coeff in a_abstract.terms():
        total = total + gens.product(mask) * coeff
    return total
