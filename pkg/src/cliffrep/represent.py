"""Applying catalog recipes: element images, reconstruction and pullbacks.

represent() walks a recipe's step structure (the fast path); the symbolic
conjugation lives in the verify module and must agree with it exactly.
reconstruct() inverts the image by an exact linear solve against the basis
blade images, so inverses, determinants and characteristic polynomials of
matrix images pull back to the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    LinearSolver,
    Multivector,
    Signature,
    SignatureMismatchError,
)
from .catalog import (
    CatalogMissError,
    ComplexPairLeaf,
    ExtendNode,
    PeriodicNode,
    QuadNode,
    RealPairLeaf,
    RealQuadLeaf,
    RepSpec,
    RingUnitsNode,
    SplitNode,
    Target,
    default_route,
    get_spec,
)
from .rings import (
    COMPLEX,
    DOUBLE_QUATERNION,
    DOUBLE_REAL,
    REAL,
    BlockPair,
    RingMatrix,
    RingScalar,
    UnsupportedRingError,
    char_poly,
    mat_det,
    mat_inverse,
    ring_identity,
)


class NotInImageError(Exception):
    """The matrix is not the image of any element under this recipe."""


@dataclass(frozen=True)
class RepImage:
    """Matrix image of an element, tagged with the producing route."""

    signature: Signature
    route: str
    value: RingMatrix | BlockPair

    @property
    def target(self) -> Target:
        size = self.value.plus.nrows if isinstance(self.value, BlockPair) else self.value.nrows
        return Target(self.value.ring, size)


def _scalar_or_zero(comps: dict[int, Multivector], key: int) -> Fraction:
    mv = comps.get(key)
    return mv.scalar_part() if mv is not None else Fraction(0)


def _apply_node(spec: RepSpec, a: Multivector) -> RingMatrix | BlockPair:
    node = spec.node
    if isinstance(node, RingUnitsNode):
        comps = node.basis.decompose(a)
        parts = [_scalar_or_zero(comps, k) for k in range(4)]
        ring = spec.target.ring
        if ring == REAL:
            s = RingScalar.real(parts[0])
        elif ring == COMPLEX:
            s = RingScalar.complex_parts(parts[0], parts[1])
        else:
            s = RingScalar.quaternion_parts(parts[0], parts[1], parts[2], parts[3])
        return RingMatrix(ring, [[s]])
    if isinstance(node, RealPairLeaf):
        a0 = a.coefficient(0)
        a1 = a.coefficient(1)
        return RingMatrix.from_components(REAL, [[a0, -a1], [a1, a0]])
    if isinstance(node, ComplexPairLeaf):
        comps = node.basis.decompose(a)
        a0, a1, a2, a3 = (_scalar_or_zero(comps, k) for k in range(4))
        return RingMatrix.from_components(
            COMPLEX, [[(a0, a1), (-a2, -a3)], [(a2, -a3), (a0, -a1)]]
        )
    if isinstance(node, RealQuadLeaf):
        comps = node.basis.decompose(a)
        a0, a1, a2, a3 = (_scalar_or_zero(comps, k) for k in range(4))
        return RingMatrix.from_components(
            REAL,
            [
                [a0, -a1, -a2, -a3],
                [a1, a0, -a3, a2],
                [a2, a3, a0, -a1],
                [a3, -a2, a1, a0],
            ],
        )
    if isinstance(node, ExtendNode):
        comps = node.basis.decompose(a)
        sub_sig = node.sub.signature
        zero = Multivector.zero(sub_sig)
        blocks = [
            _apply_node(node.sub, comps.get(k, zero)) for k in range(1 << node.nunits)
        ]
        size = spec.target.size
        ring = spec.target.ring
        rows = []
        for r in range(size):
            line = []
            for c in range(size):
                vals = [b.entry(r, c).r for b in blocks]
                if ring == COMPLEX:
                    line.append(RingScalar.complex_parts(vals[0], vals[1]))
                else:
                    line.append(
                        RingScalar.quaternion_parts(vals[0], vals[1], vals[2], vals[3])
                    )
            rows.append(line)
        return RingMatrix(ring, rows)
    if isinstance(node, QuadNode):
        comps = node.basis.decompose(a)
        sub_sig = node.sub.signature
        zero = Multivector.zero(sub_sig)
        m0, m1, m2, m3 = (_apply_node(node.sub, comps.get(k, zero)) for k in range(4))
        top_right = m2 + m3 if node.sign > 0 else -(m2 + m3)
        return _paste_blocks(spec.target, [[m0 + m1, top_right], [m2 - m3, m0 - m1]])
    if isinstance(node, SplitNode):
        comps = node.basis.decompose(a)
        sub_sig = node.sub.signature
        zero = Multivector.zero(sub_sig)
        m0 = _apply_node(node.sub, comps.get(0, zero))
        m1 = _apply_node(node.sub, comps.get(1, zero))
        return BlockPair(spec.target.ring, m0 + m1, m0 - m1)
    if isinstance(node, PeriodicNode):
        return _apply_periodic(spec, node, a)
    raise TypeError(f"unknown node type {type(node).__name__}")


def _paste_blocks(
    target: Target, blocks: Sequence[Sequence[RingMatrix | BlockPair]]
) -> RingMatrix | BlockPair:
    (a, b), (c, d) = blocks
    if isinstance(a, BlockPair):
        plus = _paste_plain([[a.plus, b.plus], [c.plus, d.plus]])
        minus = _paste_plain([[a.minus, b.minus], [c.minus, d.minus]])
        return BlockPair(target.ring, plus, minus)
    return _paste_plain(blocks)


def _paste_plain(blocks: Sequence[Sequence[RingMatrix]]) -> RingMatrix:
    (a, b), (c, d) = blocks
    rows = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    rows += [list(rc) + list(rd) for rc, rd in zip(c.rows, d.rows)]
    return RingMatrix(a.ring, rows)


def periodic_stage1(node: PeriodicNode, a: Multivector) -> list[list[Multivector]]:
    """First reduction stage: a 16x16 layout of reduced-signature elements."""
    comps = node.basis.decompose(a)
    width = 16
    entries: list[list[dict[int, Fraction]]] = [
        [dict() for _ in range(width)] for _ in range(width)
    ]
    for outer_mask, comp in comps.items():
        block = _apply_node(node.core, comp)
        for r in range(width):
            for c in range(width):
                val = block.entry(r, c).r
                if val:
                    entries[r][c][outer_mask] = val
    reduced = node.reduced
    return [[Multivector(reduced, cell) for cell in row] for row in entries]


def assemble_entry_images(
    target: Target, images: Sequence[Sequence[RingMatrix | BlockPair]], t: int
) -> RingMatrix | BlockPair:
    """Paste a grid of equal-size entry images into the composed matrix."""
    if target.ring in (DOUBLE_REAL, DOUBLE_QUATERNION):
        plus = _paste_grid([[m.plus for m in row] for row in images], t)
        minus = _paste_grid([[m.minus for m in row] for row in images], t)
        return BlockPair(target.ring, plus, minus)
    return _paste_grid(images, t)


def _apply_periodic(spec: RepSpec, node: PeriodicNode, a: Multivector) -> RingMatrix | BlockPair:
    stage1 = periodic_stage1(node, a)
    images = [[_apply_node(node.inner, x) for x in row] for row in stage1]
    return assemble_entry_images(spec.target, images, node.inner.target.size)


def _paste_grid(grid: Sequence[Sequence[RingMatrix]], t: int) -> RingMatrix:
    ring = grid[0][0].ring
    rows = []
    for block_row in grid:
        for sub_r in range(t):
            rows.append([entry for block in block_row for entry in block.rows[sub_r]])
    return RingMatrix(ring, rows)


def represent(a: Multivector, route: str | None = None) -> RepImage:
    """Matrix image of ``a`` under the signature's recipe for ``route``."""
    spec = get_spec(a.sig, route if route is not None else default_route(a.sig))
    return RepImage(a.sig, spec.route, _apply_node(spec, a))


def represent_with(spec: RepSpec, a: Multivector) -> RingMatrix | BlockPair:
    if a.sig != spec.signature:
        raise SignatureMismatchError("element does not match the recipe's signature")
    return _apply_node(spec, a)


# ---------------------------------------------------------------------------
# reconstruction


def _vectorize(value: RingMatrix | BlockPair) -> list[Fraction]:
    if isinstance(value, BlockPair):
        return _vectorize(value.plus) + _vectorize(value.minus)
    out: list[Fraction] = []
    for row in value.rows:
        for s in row:
            out.extend(s.components())
    return out


class BasisImageTable:
    """Images of all basis blades for one recipe, with the solve factored.

    Faithfulness is certified by the rank of the image vectors; solving a
    vectorized matrix either reconstructs the unique preimage or reports
    that the matrix is foreign to the image space.
    """

    def __init__(self, spec: RepSpec):
        self.spec = spec
        sig = spec.signature
        self.images = [
            represent_with(spec, Multivector.blade(sig, m)) for m in range(sig.dim)
        ]
        columns = [_vectorize(img) for img in self.images]
        self.solver = LinearSolver(columns)
        if self.solver.rank != sig.dim:
            raise NotInImageError(
                f"basis images for {sig} route {spec.route} are linearly dependent"
            )

    def reconstruct(self, value: RingMatrix | BlockPair) -> Multivector:
        vec = _vectorize(value)
        if len(vec) != self.solver.nrows:
            raise NotInImageError("matrix shape does not match the recipe target")
        coords = self.solver.solve(vec)
        if coords is None:
            raise NotInImageError("matrix lies outside the representation's image space")
        sig = self.spec.signature
        return Multivector(sig, {m: c for m, c in enumerate(coords) if c})


_TABLES: dict[tuple[int, int, str], BasisImageTable] = {}


def basis_table(sig: Signature, route: str | None = None) -> BasisImageTable:
    spec = get_spec(sig, route if route is not None else default_route(sig))
    key = (sig.p, sig.q, spec.route)
    table = _TABLES.get(key)
    if table is None:
        table = BasisImageTable(spec)
        _TABLES.setdefault(key, table)
    return _TABLES[key]


def reconstruct(image: RepImage) -> Multivector:
    """Unique preimage of a matrix under the recipe that produced it."""
    return basis_table(image.signature, image.route).reconstruct(image.value)


# ---------------------------------------------------------------------------
# pullbacks


def element_inverse(a: Multivector, route: str | None = None) -> Multivector | None:
    """Inverse of ``a`` in the algebra, or None for zero divisors.

    Non-invertibility is an ordinary outcome in the split signatures, so it
    is a return value rather than an error.
    """
    image = represent(a, route)
    inv = mat_inverse(image.value)
    if inv is None:
        return None
    result = reconstruct(RepImage(image.signature, image.route, inv))
    one = Multivector.scalar(a.sig, 1)
    assert a * result == one and result * a == one, "pullback of a matrix inverse must invert"
    return result


def _as_real_block(value: RingMatrix | BlockPair) -> RingMatrix:
    """Real square form used for determinants over R and the doubled reals."""
    if isinstance(value, BlockPair):
        if value.ring != DOUBLE_REAL:
            raise UnsupportedRingError("determinant over doubled quaternions is unsupported")
        plus, minus = value.plus, value.minus
        size = plus.nrows
        zero = RingScalar.zero(REAL)
        rows = [list(r) + [zero] * size for r in plus.rows]
        rows += [[zero] * size + list(r) for r in minus.rows]
        return RingMatrix(REAL, rows)
    return value


def element_det(a: Multivector, route: str | None = None) -> RingScalar:
    """Determinant of the matrix image; commutative targets only."""
    image = represent(a, route)
    value = image.value
    if isinstance(value, BlockPair) or value.ring not in (REAL, COMPLEX):
        value = _as_real_block(value)
    return mat_det(value)


def element_charpoly(a: Multivector, route: str | None = None) -> list[Fraction]:
    """Monic characteristic polynomial of the image over a real target."""
    image = represent(a, route)
    value = _as_real_block(image.value)
    if value.ring != REAL:
        raise UnsupportedRingError("characteristic polynomial needs a real target")
    return char_poly(value)


def charpoly_evaluate(coeffs: Sequence[Fraction], a: Multivector) -> Multivector:
    """Evaluate a monic polynomial (descending powers) at an algebra element."""
    acc = Multivector.zero(a.sig)
    for c in coeffs:
        acc = acc * a + Multivector.scalar(a.sig, c)
    return acc


# ---------------------------------------------------------------------------
# rectangular lifts for the two one-generator signatures


def matrix_represent(rows: Sequence[Sequence[Multivector]]) -> BlockPair | RingMatrix:
    """Blockwise image of a rectangular array over (1,0) or (0,1).

    Over (1,0) the image is the pair (A0 + A1, A0 - A1); over (0,1) it is
    the 2m x 2n real block matrix [[A0, -A1], [A1, A0]].  Both lifts are
    multiplicative for composable shapes.
    """
    grid = [list(row) for row in rows]
    if not grid or not grid[0]:
        raise ValueError("empty matrix")
    sig = grid[0][0].sig
    if (sig.p, sig.q) not in ((1, 0), (0, 1)):
        raise CatalogMissError("rectangular lifts cover only the signatures (1,0) and (0,1)")
    for row in grid:
        for x in row:
            if x.sig != sig:
                raise SignatureMismatchError("mixed signatures in the array")
    comp0 = [[x.coefficient(0) for x in row] for row in grid]
    comp1 = [[x.coefficient(1) for x in row] for row in grid]
    if sig.p == 1:
        plus = RingMatrix.from_components(
            REAL, [[a + b for a, b in zip(r0, r1)] for r0, r1 in zip(comp0, comp1)]
        )
        minus = RingMatrix.from_components(
            REAL, [[a - b for a, b in zip(r0, r1)] for r0, r1 in zip(comp0, comp1)]
        )
        return BlockPair(DOUBLE_REAL, plus, minus)
    top = [r0 + [-b for b in r1] for r0, r1 in zip(comp0, comp1)]
    bottom = [list(r1) + list(r0) for r0, r1 in zip(comp0, comp1)]
    return RingMatrix.from_components(REAL, top + bottom)


def identity_image(sig: Signature, route: str | None = None) -> RingMatrix | BlockPair:
    spec = get_spec(sig, route if route is not None else default_route(sig))
    return ring_identity(spec.target.ring, spec.target.size)
