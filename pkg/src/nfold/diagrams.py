"""n-dimensional Young diagrams as monotone arrays of nonnegative integers.

A diagram of array dimension ``d`` is a finitely supported array that is
nonincreasing along every axis.  For ``d == 1`` the entries are the column
heights of an ordinary Young diagram.  Axis 1 is the outermost axis: it has
precedence in the lexicographic order and it is the axis merged by the
first stacking product.
"""
from __future__ import annotations

import itertools
import json
import random
from typing import Optional

import numpy as np

from .core import Structure, interchange_sides, max_augmented


class MonotonicityViolation(ValueError):
    def __init__(self, axis: int, index: tuple[int, ...]):
        self.axis = axis
        self.index = index
        super().__init__(f"entries increase along axis {axis} at index {index}")


class NegativeEntry(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _canonical_shape(arr: np.ndarray) -> np.ndarray:
    """Drop all-zero trailing hyperplanes along every axis."""
    if arr.size == 0 or not arr.any():
        return np.zeros((0,) * arr.ndim, dtype=np.int64)
    nz = np.nonzero(arr)
    return arr[tuple(slice(0, int(ix.max()) + 1) for ix in nz)]


class DiagramND:
    """Immutable monotone array; construct through :func:`validate` or :meth:`from_array`."""

    __slots__ = ("data", "_key")

    def __init__(self, data: np.ndarray):
        data = np.ascontiguousarray(data, dtype=np.int64)
        data.setflags(write=False)
        self.data = data
        self._key = (data.ndim, data.shape, data.tobytes())

    @classmethod
    def from_array(cls, arr, check: bool = True) -> "DiagramND":
        arr = _canonical_shape(np.asarray(arr, dtype=np.int64))
        if check:
            _check_monotone(arr)
        return cls(arr)

    @classmethod
    def empty(cls, dim: int) -> "DiagramND":
        return cls(np.zeros((0,) * dim, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.data.ndim

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    def is_empty(self) -> bool:
        return self.data.size == 0

    def cells(self) -> int:
        return int(self.data.sum())

    def height(self) -> int:
        return 0 if self.is_empty() else int(self.data.flat[0])

    def tolist(self):
        return _nested_nonzero(self.data)

    def __eq__(self, other):
        return isinstance(other, DiagramND) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"DiagramND({format_diagram(self)})"

    def __lt__(self, other):
        return lex_cmp_nd(self, other) < 0

    def __le__(self, other):
        return lex_cmp_nd(self, other) <= 0


def _nested_nonzero(arr: np.ndarray):
    """Nested lists with trailing zeros dropped, as the matrices are printed."""
    if arr.ndim == 1:
        xs = [int(v) for v in arr]
        while xs and xs[-1] == 0:
            xs.pop()
        return xs
    rows = [_nested_nonzero(sub) for sub in arr]
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _check_monotone(arr: np.ndarray) -> None:
    if (arr < 0).any():
        raise NegativeEntry(f"negative entry {int(arr.min())}")
    for ax in range(arr.ndim):
        if arr.shape[ax] < 2:
            continue
        diff = np.diff(arr, axis=ax)
        bad = np.argwhere(diff > 0)
        if len(bad):
            idx = tuple(int(v) for v in bad[0])
            idx = idx[:ax] + (idx[ax] + 1,) + idx[ax + 1:]
            raise MonotonicityViolation(ax + 1, idx)


def _depth(x) -> int:
    if isinstance(x, list):
        return 1 + max((_depth(v) for v in x), default=0)
    return 0


def _to_dense(raw, dim: int) -> np.ndarray:
    """Zero-pad a ragged nested list to a rectangular array of the given depth."""

    def extents(x, level, ext):
        if level == dim:
            if isinstance(x, list) or isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"expected integer at depth {dim}, got {x!r}")
            return
        if not isinstance(x, list):
            raise ValueError(f"expected list at depth {level + 1}, got {x!r}")
        ext[level] = max(ext[level], len(x))
        for v in x:
            extents(v, level + 1, ext)

    ext = [0] * dim
    extents(raw, 0, ext)
    out = np.zeros(ext, dtype=np.int64)

    def fill(x, prefix):
        if len(prefix) == dim:
            out[prefix] = x
            return
        for i, v in enumerate(x):
            fill(v, prefix + (i,))

    if all(ext):
        fill(raw, ())
    return out


def validate(raw, dim: Optional[int] = None) -> DiagramND:
    """Canonicalize a nested list (ragged rows read as zero-padded).

    The dimension is the nesting depth unless given; ``[]`` needs an
    explicit ``dim`` for anything but ``d == 1``.
    """
    if isinstance(raw, np.ndarray):
        return DiagramND.from_array(raw)
    if dim is None:
        dim = max(_depth(raw), 1)
    arr = _to_dense(raw, dim)
    if (arr < 0).any():
        raise NegativeEntry(f"negative entry {int(arr.min())}")
    _check_monotone(arr)
    return DiagramND.from_array(arr, check=False)


def parse_diagram(text: str, dim: Optional[int] = None) -> DiagramND:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad diagram {text!r} at column {exc.colno}: {exc.msg}") from None
    if isinstance(raw, int) and not isinstance(raw, bool):
        raw = [raw]
    if not isinstance(raw, list):
        raise ValueError(f"diagram must be a nested bracket list: {text!r}")
    if dim is not None and raw and _depth(raw) != dim:
        raise DimensionMismatch(f"expected nesting depth {dim}, got {_depth(raw)} in {text!r}")
    return validate(raw, dim)


def format_diagram(a: DiagramND) -> str:
    return json.dumps(a.tolist(), separators=(",", ":"))


def _same_dim(a: DiagramND, b: DiagramND) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension {a.dim} vs {b.dim}")


def _pad_to(arr: np.ndarray, shape) -> np.ndarray:
    if arr.shape == tuple(shape):
        return arr
    out = np.zeros(shape, dtype=np.int64)
    out[tuple(slice(0, n) for n in arr.shape)] = arr
    return out


def lex_cmp_nd(a: DiagramND, b: DiagramND) -> int:
    """Lexicographic comparison of entries in index-tuple order, axis 1 outermost."""
    _same_dim(a, b)
    if a._key == b._key:
        return 0
    shape = tuple(max(x, y) for x, y in zip(a.shape, b.shape))
    fa = _pad_to(a.data, shape).ravel()
    fb = _pad_to(b.data, shape).ravel()
    diff = np.flatnonzero(fa != fb)
    if len(diff) == 0:
        return 0
    i = diff[0]
    return -1 if fa[i] < fb[i] else 1


def lex_leq_nd(a: DiagramND, b: DiagramND) -> bool:
    return lex_cmp_nd(a, b) <= 0


def lex_max_nd(a: DiagramND, b: DiagramND) -> DiagramND:
    return a if lex_cmp_nd(a, b) >= 0 else b


def sort_desc_along(arr: np.ndarray, axis: int) -> np.ndarray:
    """Sort every fiber parallel to ``axis`` (0-based) into nonincreasing order."""
    return -np.sort(-arr, axis=axis, kind="stable")


def merge_axis(a: DiagramND, b: DiagramND, axis: int) -> DiagramND:
    """Concatenate along ``axis`` (1-based) then sort each fiber on that axis."""
    _same_dim(a, b)
    if not 1 <= axis <= a.dim:
        raise IndexError(f"axis {axis} outside 1..{a.dim}")
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    ax = axis - 1
    shape = [max(x, y) for x, y in zip(a.shape, b.shape)]
    sa = list(shape)
    sa[ax] = a.shape[ax]
    sb = list(shape)
    sb[ax] = b.shape[ax]
    cat = np.concatenate([_pad_to(a.data, sa), _pad_to(b.data, sb)], axis=ax)
    return DiagramND(_canonical_shape(sort_desc_along(cat, ax)))


def pointwise_add(a: DiagramND, b: DiagramND) -> DiagramND:
    _same_dim(a, b)
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    shape = tuple(max(x, y) for x, y in zip(a.shape, b.shape))
    return DiagramND(_pad_to(a.data, shape) + _pad_to(b.data, shape))


def conjugate(a: DiagramND) -> DiagramND:
    """Transpose a partition: column heights <-> row lengths."""
    if a.dim != 1:
        raise DimensionMismatch("conjugate is defined for d = 1 only")
    if a.is_empty():
        return a
    h = a.data
    return DiagramND(np.array([int((h > r).sum()) for r in range(int(h[0]))], dtype=np.int64))


def rowwise_sum(a: DiagramND, b: DiagramND) -> DiagramND:
    """Add two partitions entrywise (the row-length view of merging)."""
    return pointwise_add(a, b)


def interchange_check(a, b, c, d, j: int, k: int, s: Structure) -> bool:
    """Whether ``(a*k b)*j(c*k d) <= (a*j c)*k(b*j d)`` in ``s``."""
    lhs, rhs = interchange_sides(s, j, k, a, b, c, d)
    return s.leq(lhs, rhs)


def minmax_sides(a: list, b: list, sigma, tau) -> tuple[int, int]:
    if len(a) != len(b) or len(sigma) != len(a) or len(tau) != len(a):
        raise ValueError("sequences and permutations must have equal length")
    lhs = max(min(a[sigma[i]], b[tau[i]]) for i in range(len(a)))
    return lhs, min(max(a), max(b))


def minmax_check(a: list, b: list, sigma, tau) -> bool:
    lhs, rhs = minmax_sides(a, b, sigma, tau)
    return lhs <= rhs


def matrixsort_sides(m) -> tuple[np.ndarray, np.ndarray]:
    """Rows-then-columns and columns-then-rows descending sorts of ``m``."""
    m = np.asarray(m, dtype=np.int64)
    rows_first = sort_desc_along(sort_desc_along(m, 1), 0)
    cols_first = sort_desc_along(sort_desc_along(m, 0), 1)
    return rows_first, cols_first


def matrixsort_check(m) -> bool:
    rows_first, cols_first = matrixsort_sides(m)
    for r in (rows_first, cols_first):
        if (np.diff(r, axis=0) > 0).any() or (np.diff(r, axis=1) > 0).any():
            return False
    lhs = DiagramND.from_array(rows_first, check=False)
    rhs = DiagramND.from_array(cols_first, check=False)
    return lex_cmp_nd(lhs, rhs) <= 0


def render_ascii(a: DiagramND) -> str:
    """Unit cells as ``[]``; rows are read off the column heights.

    For ``d == 2`` each row of the matrix is drawn as its own layer.
    """
    if a.dim > 2:
        raise ValueError("rendering supports d <= 2")
    if a.is_empty():
        return ""
    if a.dim == 1:
        rows = conjugate(a).data
        return "\n".join("[]" * int(r) for r in rows)
    blocks = []
    for idx, row in enumerate(a.data, 1):
        layer = DiagramND.from_array(row, check=False)
        if layer.is_empty():
            continue
        blocks.append(f"layer {idx}:\n" + render_ascii(layer))
    return "\n".join(blocks)


# --- sampling and enumeration ---------------------------------------------

def random_partition(rng: random.Random, max_parts: int = 5, max_entry: int = 9) -> DiagramND:
    n = rng.randint(0, max_parts)
    return DiagramND.from_array(sorted((rng.randint(1, max_entry) for _ in range(n)), reverse=True), check=False)


def random_diagram(rng: random.Random, dim: int, max_extent: int = 4, max_entry: int = 9) -> DiagramND:
    """Random monotone array: sorting a random array along every axis keeps it monotone."""
    shape = tuple(rng.randint(0, max_extent) for _ in range(dim))
    if 0 in shape:
        return DiagramND.empty(dim)
    arr = np.array([rng.randint(0, max_entry) for _ in range(int(np.prod(shape)))], dtype=np.int64).reshape(shape)
    for ax in range(dim):
        arr = sort_desc_along(arr, ax)
    return DiagramND.from_array(arr, check=False)


def all_partitions(max_parts: int, max_entry: int) -> list[DiagramND]:
    out = []
    for n in range(max_parts + 1):
        for parts in itertools.combinations_with_replacement(range(max_entry, 0, -1), n):
            out.append(DiagramND.from_array(list(parts), check=False))
    return out


def all_matrices(rows: int, cols: int, max_entry: int) -> list[DiagramND]:
    seen = set()
    out = []
    for vals in itertools.product(range(max_entry + 1), repeat=rows * cols):
        arr = np.array(vals, dtype=np.int64).reshape(rows, cols)
        if (np.diff(arr, axis=0) > 0).any() or (np.diff(arr, axis=1) > 0).any():
            continue
        d = DiagramND.from_array(arr, check=False)
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def diagram_structure(dim: int, name: Optional[str] = None) -> Structure:
    """Products: merge along axis ``k`` for ``k = 1..dim``, then pointwise addition."""
    merges = tuple((lambda a, b, ax=ax: merge_axis(a, b, ax)) for ax in range(1, dim + 1))
    names = tuple(f"merge along axis {ax}" for ax in range(1, dim + 1)) + ("pointwise addition",)
    if dim == 1:
        sampler = lambda r: random_partition(r)
        enum = lambda bound: all_partitions(bound, bound)
    else:
        sampler = lambda r: random_diagram(r, dim)
        enum = (lambda bound: all_matrices(2, 2, bound)) if dim == 2 else None
    return Structure(
        name=name or f"yd{dim}",
        products=merges + (pointwise_add,),
        leq=lex_leq_nd,
        unit=DiagramND.empty(dim),
        product_names=names,
        parse=lambda t: parse_diagram(t, dim),
        format=format_diagram,
        sample=sampler,
        enumerate=enum,
        description=f"{dim + 1}-dimensional Young diagrams as monotone {dim}-arrays, lexicographic order",
    )


def max_diagram_structure(dim: int) -> Structure:
    return max_augmented(diagram_structure(dim), name=f"yd-max:{dim}")


def height_structure() -> Structure:
    """Partitions preordered by height (first column); merge and addition."""
    base = diagram_structure(1)
    return Structure(
        name="yd-height",
        products=base.products,
        leq=lambda a, b: a.height() <= b.height(),
        unit=base.unit,
        product_names=("merge (height max)", "addition (height sum)"),
        parse=base.parse,
        format=base.format,
        sample=base.sample,
        enumerate=base.enumerate,
        description="partitions preordered by height",
    )
