import itertools
import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given

from nfold.diagrams import (
    DiagramND,
    DimensionMismatch,
    MonotonicityViolation,
    NegativeEntry,
    all_matrices,
    all_partitions,
    conjugate,
    format_diagram,
    lex_cmp_nd,
    matrixsort_check,
    merge_axis,
    minmax_check,
    minmax_sides,
    parse_diagram,
    pointwise_add,
    render_ascii,
    rowwise_sum,
    validate,
)
from nfold.registry import get_structure

from tests.strategies import matrices, partitions


def flat_cmp(a: DiagramND, b: DiagramND) -> int:
    # oracle: compare padded row-major flattenings as Python tuples
    shape = tuple(max(x, y) for x, y in zip(a.shape, b.shape))

    def flat(d):
        out = np.zeros(shape, dtype=np.int64)
        out[tuple(slice(0, n) for n in d.shape)] = d.data
        return tuple(out.ravel().tolist())

    fa, fb = flat(a), flat(b)
    return (fa > fb) - (fa < fb)


def test_validation_errors():
    with pytest.raises(MonotonicityViolation) as exc:
        validate([1, 3])
    assert exc.value.axis == 1
    with pytest.raises(MonotonicityViolation):
        validate([[1], [2]])
    with pytest.raises(NegativeEntry):
        validate([-1])
    with pytest.raises(DimensionMismatch):
        parse_diagram("[[1]]", dim=1)
    with pytest.raises(ValueError, match="column"):
        parse_diagram("[1,")


def test_canonical_form_and_format():
    d = validate([[3, 1, 0], [0, 0], []])
    assert d.shape == (1, 2) and format_diagram(d) == "[[3,1]]"
    assert validate([[4, 3], [2]]).tolist() == [[4, 3], [2]]
    assert validate([]).is_empty() and validate([0, 0]) == validate([])


@given(partitions)
def test_partition_roundtrip(d):
    assert parse_diagram(format_diagram(d), 1) == d


@given(matrices())
def test_matrix_roundtrip(d):
    assert parse_diagram(format_diagram(d), 2) == d


@given(partitions, partitions)
def test_lex_matches_oracle_1d(a, b):
    assert lex_cmp_nd(a, b) == flat_cmp(a, b)


@given(matrices(), matrices())
def test_lex_matches_oracle_2d(a, b):
    assert lex_cmp_nd(a, b) == flat_cmp(a, b)


def test_printed_products_3d():
    A = validate([[4, 3, 1, 1], [4, 2, 1, 1], [3, 2, 1], [1, 1, 1]])
    B = validate([[3, 1], [2, 1], [1, 1]])
    assert merge_axis(A, B, 2).tolist() == [[4, 3, 3, 1, 1, 1], [4, 2, 2, 1, 1, 1], [3, 2, 1, 1, 1], [1, 1, 1]]
    assert pointwise_add(A, B).tolist() == [[7, 4, 1, 1], [6, 3, 1, 1], [4, 3, 1], [1, 1, 1]]


def test_printed_products_2d():
    # the row-length view of the 2-d example: A has rows 4,1 and B rows 2,1,1
    A, B = conjugate(validate([4, 1])), conjugate(validate([2, 1, 1]))
    assert conjugate(merge_axis(A, B, 1)).tolist() == [6, 2, 1]
    assert conjugate(pointwise_add(A, B)).tolist() == [4, 2, 1, 1, 1]


@given(partitions, partitions, partitions)
def test_merge_associative(a, b, c):
    assert merge_axis(merge_axis(a, b, 1), c, 1) == merge_axis(a, merge_axis(b, c, 1), 1)


@given(partitions, partitions)
def test_merge_commutative_and_multiset(a, b):
    m = merge_axis(a, b, 1)
    assert m == merge_axis(b, a, 1)
    assert Counter(m.data.tolist()) == Counter(a.data.tolist()) + Counter(b.data.tolist())


@given(partitions, partitions, partitions)
def test_merge_monotone_1d(a, b, c):
    if lex_cmp_nd(a, b) <= 0:
        assert lex_cmp_nd(merge_axis(a, c, 1), merge_axis(b, c, 1)) <= 0


def test_merge_not_monotone_2d():
    a, b = validate([[1, 1]]), validate([[2]])
    assert lex_cmp_nd(a, b) < 0
    assert merge_axis(a, b, 1).tolist() == [[2, 1], [1]]
    assert lex_cmp_nd(merge_axis(a, b, 1), merge_axis(b, b, 1)) > 0


@given(partitions)
def test_conjugate_involution(a):
    assert conjugate(conjugate(a)) == a
    assert conjugate(a).cells() == a.cells()


@given(partitions, partitions)
def test_merge_is_rowwise_sum_of_conjugates(a, b):
    assert conjugate(merge_axis(a, b, 1)) == rowwise_sum(conjugate(a), conjugate(b))


@given(partitions, partitions)
def test_heights(a, b):
    assert merge_axis(a, b, 1).height() == max(a.height(), b.height())
    assert pointwise_add(a, b).height() == a.height() + b.height()


@given(matrices(), matrices())
def test_products_preserve_cells_and_monotonicity(a, b):
    for ax in (1, 2):
        m = merge_axis(a, b, ax)
        assert m.cells() == a.cells() + b.cells()
        validate(m.data)
    assert pointwise_add(a, b).cells() == a.cells() + b.cells()


def test_minmax_exhaustive_small():
    for n in (1, 2):
        vecs = list(itertools.product(range(3), repeat=n))
        perms = list(itertools.permutations(range(n)))
        assert all(minmax_check(a, b, s, t) for a in vecs for b in vecs for s in perms for t in perms)
    assert minmax_sides([3, 1], [1, 3], (0, 1), (0, 1)) == (1, 3)
    with pytest.raises(ValueError):
        minmax_sides([1], [1, 2], (0,), (0,))


@given(matrices(max_entry=9))
def test_matrixsort(m):
    if not m.is_empty():
        rng = np.random.default_rng(m.cells())
        assert matrixsort_check(rng.permuted(m.data, axis=1))


def test_render():
    assert render_ascii(validate([5, 3, 3, 1, 1])) == "[][][][][]\n[][][]\n[][][]\n[]\n[]"
    assert render_ascii(validate([])) == ""
    assert render_ascii(validate([[2, 1], [1]])).startswith("layer 1:\n[][]\n[]")
    with pytest.raises(ValueError):
        render_ascii(validate([[[1]]]))


def test_enumerators_match_brute_force():
    # partitions with at most 3 parts each at most 3: C(6,3)
    assert len(all_partitions(3, 3)) == 20
    brute = [m for m in itertools.product(range(3), repeat=4)
             if m[0] >= m[1] and m[2] >= m[3] and m[0] >= m[2] and m[1] >= m[3]]
    assert len(all_matrices(2, 2, 2)) == len(brute)


def test_structures_registered():
    assert get_structure("yd2").dims == 3 and get_structure("yd3").dims == 4
    assert get_structure("ydN:3").dims == 4
    assert get_structure("yd-max:1").dims == 3
    s = get_structure("yd-height")
    assert s.leq(validate([3]), validate([3, 1])) and s.leq(validate([3, 1]), validate([3]))
    assert not s.leq(validate([3]), validate([1, 1, 1]))
    with pytest.raises(KeyError):
        get_structure("yd0")


def test_random_diagrams_monotone():
    s = get_structure("yd3")
    rng = random.Random(5)
    for _ in range(50):
        validate(s.sample(rng).data)
