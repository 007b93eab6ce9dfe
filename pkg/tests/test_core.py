import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nfold.core import (
    EMPTY,
    Structure,
    certify_structure,
    derived_product_monotone,
    hom_exists,
    interchange_holds,
    interchange_sides,
    is_empty,
    max_augmented,
    product_pairs,
    with_bottom,
)
from nfold.registry import get_structure, nat_structure

from tests.strategies import nat


def broken_nat() -> Structure:
    base = nat_structure()
    return Structure(name="broken", products=(max, min), leq=base.leq, unit=0,
                     sample=lambda r: r.randint(0, 20), format=str)


def test_empty_is_singleton_and_bottom():
    s = with_bottom(nat_structure())
    assert is_empty(EMPTY) and not is_empty(0)
    assert hom_exists(s, EMPTY, 0) and hom_exists(s, EMPTY, EMPTY)
    assert not hom_exists(s, 3, EMPTY)
    assert s.product(2, EMPTY, 5) is EMPTY and s.product(1, 4, EMPTY) is EMPTY
    assert s.format_obj(EMPTY) == "empty" and s.parse_obj("empty") is EMPTY


def test_product_index_out_of_range():
    s = nat_structure()
    with pytest.raises(IndexError):
        s.product(3, 1, 2)
    with pytest.raises(IndexError):
        interchange_sides(s, 2, 2, 1, 1, 1, 1)


@given(nat, nat, nat, nat)
def test_nat_interchange(a, b, c, d):
    # max(a+b, c+d) <= max(a,c) + max(b,d)
    assert interchange_holds(nat_structure(), 1, 2, a, b, c, d)
    assert max(a + b, c + d) <= max(a, c) + max(b, d)


def test_nat_certifies():
    rep = certify_structure(nat_structure(), trials=300)
    assert rep.ok and rep.trials == 300
    assert rep.tallies["interchange"].passed == 300


def test_exhaustive_certification_small():
    rep = certify_structure(nat_structure(), exhaustive_bound=3)
    assert rep.ok and rep.trials == 4 ** 4


def test_broken_structure_fails_with_witness():
    s = broken_nat()
    rep = certify_structure(s, trials=300)
    assert not rep.ok
    cx = rep.counterexample
    assert cx is not None and cx.check in rep.tallies
    assert "'" in cx.render(s)


def test_fold_and_max():
    s = nat_structure()
    assert s.fold(2, [1, 2, 3]) == 6 and s.fold(2, []) == 0
    assert s.max(3, 7) == 7 and s.cmp(2, 2) == 0 and s.lt(1, 2)


def test_max_augmented_prepends_max():
    s = max_augmented(get_structure("yd1"), name="m")
    assert s.dims == 3 and s.product_names[0] == "max"


def test_derived_product_monotone_seeded():
    assert derived_product_monotone(nat_structure(), 1, 2, trials=200)
    assert not derived_product_monotone(broken_nat(), 1, 2, trials=500)


def test_product_pairs():
    assert product_pairs(3) == [(1, 2), (1, 3), (2, 3)]


def test_certification_is_deterministic():
    a = certify_structure(get_structure("seq"), trials=100, seed=7)
    b = certify_structure(get_structure("seq"), trials=100, seed=7)
    s = get_structure("seq")
    assert a.lines(s) == b.lines(s)


@given(st.integers(0, 10 ** 6))
def test_seeded_samples_reproduce(seed):
    s = get_structure("seq")
    r1, r2 = random.Random(seed), random.Random(seed)
    assert [s.sample(r1) for _ in range(5)] == [s.sample(r2) for _ in range(5)]
