"""Finite-dimensional multimatrix *-algebras over Q(z).

An algebra is a direct sum of full matrix blocks; its canonical basis is the
matrix units ordered block-major, row-major inside each block.  Elements
carry sparse coordinate dicts against that basis, so products of basis
elements are again basis elements (coefficient one) or zero.

Linear maps store one sparse column per source basis vector.  Dense matrices
are produced only at the serialization boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import Cyc, ZERO, ONE
from .linalg import Vector

Scalar = Cyc | int | Fraction


def _cyc(x: Scalar) -> Cyc:
    return x if isinstance(x, Cyc) else Cyc.from_rational(x)


class MultiMatrixAlgebra:
    """Direct sum of matrix algebras M_{n_1} + ... + M_{n_r}."""

    __slots__ = ("block_sizes", "labels", "dim", "_starts", "_decomp")

    def __init__(self, block_sizes: Sequence[int], labels: Sequence[str] | None = None):
        sizes = tuple(int(n) for n in block_sizes)
        if not sizes or any(n < 1 for n in sizes):
            raise ValueError("block sizes must be positive")
        if labels is not None and len(labels) != len(sizes):
            raise ValueError("one label per block")
        self.block_sizes = sizes
        self.labels = tuple(labels) if labels is not None else tuple(
            f"b{k}" for k in range(len(sizes)))
        starts = []
        acc = 0
        for n in sizes:
            starts.append(acc)
            acc += n * n
        self.dim = acc
        self._starts = tuple(starts)
        self._decomp = tuple(
            (b, i, j)
            for b, n in enumerate(sizes)
            for i in range(n)
            for j in range(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiMatrixAlgebra):
            return NotImplemented
        return self.block_sizes == other.block_sizes

    def __hash__(self) -> int:
        return hash(self.block_sizes)

    def __repr__(self) -> str:
        return f"MultiMatrixAlgebra({self.block_sizes})"

    # basis bookkeeping

    def index(self, block: int, i: int, j: int) -> int:
        return self._starts[block] + i * self.block_sizes[block] + j

    def decompose(self, idx: int) -> tuple[int, int, int]:
        return self._decomp[idx]

    def mul_basis(self, p: int, q: int) -> int | None:
        """Index of e_p * e_q, or None when the product vanishes."""
        b1, i1, j1 = self._decomp[p]
        b2, i2, j2 = self._decomp[q]
        if b1 != b2 or j1 != i2:
            return None
        return self._starts[b1] + i1 * self.block_sizes[b1] + j2

    def star_index(self, p: int) -> int:
        b, i, j = self._decomp[p]
        return self._starts[b] + j * self.block_sizes[b] + i

    def basis_name(self, idx: int) -> str:
        b, i, j = self._decomp[idx]
        if self.block_sizes[b] == 1:
            return self.labels[b]
        return f"{self.labels[b]}[{i},{j}]"

    # element constructors

    def element(self, coords: Vector) -> AlgElement:
        return AlgElement(self, coords)

    def zero(self) -> AlgElement:
        return AlgElement(self, {})

    def unit(self) -> AlgElement:
        coords = {self.index(b, i, i): ONE
                  for b, n in enumerate(self.block_sizes) for i in range(n)}
        return AlgElement(self, coords)

    def basis_element(self, block: int, i: int, j: int) -> AlgElement:
        return AlgElement(self, {self.index(block, i, j): ONE})

    def basis(self) -> list[AlgElement]:
        return [AlgElement(self, {p: ONE}) for p in range(self.dim)]

    def from_blocks(self, blocks: Sequence[Sequence[Sequence[Scalar]]]) -> AlgElement:
        if len(blocks) != len(self.block_sizes):
            raise ValueError("one matrix per block")
        coords: Vector = {}
        for b, (n, mat) in enumerate(zip(self.block_sizes, blocks)):
            if len(mat) != n or any(len(r) != n for r in mat):
                raise ValueError(f"block {b} must be {n}x{n}")
            for i in range(n):
                for j in range(n):
                    v = _cyc(mat[i][j])
                    if v:
                        coords[self.index(b, i, j)] = v
        return AlgElement(self, coords)


class AlgElement:
    __slots__ = ("parent", "coords")

    def __init__(self, parent: MultiMatrixAlgebra, coords: Vector):
        self.parent = parent
        self.coords = {p: v for p, v in coords.items() if v}

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.parent.block_sizes, tuple(sorted(self.coords.items()))))

    def __add__(self, other: AlgElement) -> AlgElement:
        coords = dict(self.coords)
        for p, v in other.coords.items():
            nv = coords.get(p, ZERO) + v
            if nv:
                coords[p] = nv
            else:
                coords.pop(p, None)
        return AlgElement(self.parent, coords)

    def __sub__(self, other: AlgElement) -> AlgElement:
        return self + (-other)

    def __neg__(self) -> AlgElement:
        return AlgElement(self.parent, {p: -v for p, v in self.coords.items()})

    def scale(self, c: Scalar) -> AlgElement:
        c = _cyc(c)
        if not c:
            return AlgElement(self.parent, {})
        return AlgElement(self.parent, {p: c * v for p, v in self.coords.items()})

    def __mul__(self, other: AlgElement) -> AlgElement:
        alg = self.parent
        acc: Vector = {}
        for p, x in self.coords.items():
            for q, y in other.coords.items():
                r = alg.mul_basis(p, q)
                if r is None:
                    continue
                nv = acc.get(r, ZERO) + x * y
                if nv:
                    acc[r] = nv
                else:
                    acc.pop(r, None)
        return AlgElement(alg, acc)

    def star(self) -> AlgElement:
        alg = self.parent
        return AlgElement(alg, {alg.star_index(p): v.conj()
                                for p, v in self.coords.items()})

    def tensor(self, other: AlgElement) -> AlgElement:
        ta, tidx = tensor_algebra(self.parent, other.parent)
        coords: Vector = {}
        for p, x in self.coords.items():
            row = tidx[p]
            for q, y in other.coords.items():
                coords[row[q]] = x * y
        return AlgElement(ta, coords)

    def blocks(self) -> list[list[list[Cyc]]]:
        out = [[[ZERO] * n for _ in range(n)] for n in self.parent.block_sizes]
        for p, v in self.coords.items():
            b, i, j = self.parent.decompose(p)
            out[b][i][j] = v
        return out

    def describe(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for p in sorted(self.coords):
            v = self.coords[p]
            name = self.parent.basis_name(p)
            sv = str(v)
            parts.append(name if sv == "1" else f"({sv})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.describe()}>"


_TENSOR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]],
                    tuple[MultiMatrixAlgebra, list[list[int]]]] = {}


def tensor_algebra(a: MultiMatrixAlgebra, b: MultiMatrixAlgebra,
                   ) -> tuple[MultiMatrixAlgebra, list[list[int]]]:
    """Tensor product algebra and the basis index table.

    Block (b1, b2) pairs run in lex order; inside a block the Kronecker
    convention pairs row (i1, i2) -> i1 * n2 + i2, so index chasing matches
    matrix Kronecker products.  Returns (algebra, table) with
    table[p][q] == index of e_p tensor e_q.
    """
    key = (a.block_sizes, b.block_sizes)
    hit = _TENSOR_CACHE.get(key)
    if hit is not None:
        return hit
    sizes = []
    labels = []
    for n1, l1 in zip(a.block_sizes, a.labels):
        for n2, l2 in zip(b.block_sizes, b.labels):
            sizes.append(n1 * n2)
            labels.append(f"{l1}(x){l2}")
    ta = MultiMatrixAlgebra(sizes, labels)
    nb = len(b.block_sizes)
    table = [[0] * b.dim for _ in range(a.dim)]
    for p in range(a.dim):
        b1, i1, j1 = a.decompose(p)
        n1 = a.block_sizes[b1]
        for q in range(b.dim):
            b2, i2, j2 = b.decompose(q)
            n2 = b.block_sizes[b2]
            blk = b1 * nb + b2
            table[p][q] = ta.index(blk, i1 * n2 + i2, j1 * n2 + j2)
    _TENSOR_CACHE[key] = (ta, table)
    return ta, table


class LinearMap:
    """Linear map between multimatrix algebras, stored as sparse columns."""

    __slots__ = ("source", "target", "cols")

    def __init__(self, source: MultiMatrixAlgebra, target: MultiMatrixAlgebra,
                 cols: Sequence[Vector]):
        if len(cols) != source.dim:
            raise ValueError("one column per source basis vector")
        self.source = source
        self.target = target
        self.cols = [{p: v for p, v in col.items() if v} for col in cols]

    @classmethod
    def identity(cls, alg: MultiMatrixAlgebra) -> LinearMap:
        return cls(alg, alg, [{p: ONE} for p in range(alg.dim)])

    @classmethod
    def from_images(cls, source: MultiMatrixAlgebra,
                    images: Sequence[AlgElement]) -> LinearMap:
        if not images:
            raise ValueError("empty image list")
        return cls(source, images[0].parent, [im.coords for im in images])

    def apply_coords(self, vec: Vector) -> Vector:
        acc: Vector = {}
        for j, c in vec.items():
            for p, v in self.cols[j].items():
                nv = acc.get(p, ZERO) + c * v
                if nv:
                    acc[p] = nv
                else:
                    acc.pop(p, None)
        return acc

    def __call__(self, x: AlgElement) -> AlgElement:
        if x.parent != self.source:
            raise ValueError("element not in the source algebra")
        return AlgElement(self.target, self.apply_coords(x.coords))

    def compose(self, other: LinearMap) -> LinearMap:
        """self after other."""
        if other.target != self.source:
            raise ValueError("shape mismatch in composition")
        return LinearMap(other.source, self.target,
                         [self.apply_coords(col) for col in other.cols])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.cols == other.cols)

    def matrix(self) -> list[list[Cyc]]:
        out = [[ZERO] * self.source.dim for _ in range(self.target.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    @classmethod
    def from_matrix(cls, source: MultiMatrixAlgebra, target: MultiMatrixAlgebra,
                    mat: Sequence[Sequence[Scalar]]) -> LinearMap:
        if len(mat) != target.dim or any(len(r) != source.dim for r in mat):
            raise ValueError("matrix shape mismatch")
        cols: list[Vector] = [{} for _ in range(source.dim)]
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                v = _cyc(v)
                if v:
                    cols[j][i] = v
        return cls(source, target, cols)


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """f tensor g, materialized column by column (stays sparse)."""
    src, sidx = tensor_algebra(f.source, g.source)
    tgt, tidx = tensor_algebra(f.target, g.target)
    cols: list[Vector] = [{} for _ in range(src.dim)]
    for p, fcol in enumerate(f.cols):
        for q, gcol in enumerate(g.cols):
            col: Vector = {}
            for r, fv in fcol.items():
                row = tidx[r]
                for s, gv in gcol.items():
                    col[row[s]] = fv * gv
            cols[sidx[p][q]] = col
    return LinearMap(src, tgt, cols)


def mult_map(alg: MultiMatrixAlgebra) -> LinearMap:
    """Multiplication as a linear map from the tensor square."""
    ta, tidx = tensor_algebra(alg, alg)
    cols: list[Vector] = [{} for _ in range(ta.dim)]
    for p in range(alg.dim):
        for q in range(alg.dim):
            r = alg.mul_basis(p, q)
            if r is not None:
                cols[tidx[p][q]] = {r: ONE}
    return LinearMap(ta, alg, cols)


def flip_map(alg: MultiMatrixAlgebra) -> LinearMap:
    """The tensor swap a tensor b -> b tensor a on the tensor square."""
    ta, tidx = tensor_algebra(alg, alg)
    cols: list[Vector] = [{} for _ in range(ta.dim)]
    for p in range(alg.dim):
        for q in range(alg.dim):
            cols[tidx[p][q]] = {tidx[q][p]: ONE}
    return LinearMap(ta, ta, cols)


SCALARS = MultiMatrixAlgebra((1,), labels=("k",))
