import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nfold.freecat import (
    UNIT,
    Atom,
    ExprSyntaxError,
    Prod,
    all_exprs,
    atoms,
    check_object,
    failing_pair,
    hom_count,
    max_index,
    morphism_exists,
    normalize,
    pair_index,
    pair_table,
    parse,
    restrict,
    to_text,
)
from nfold.registry import get_structure

from tests.strategies import exprs

NAMES = ["a", "b", "c", "d", "e"]


def evaluate(e, s, env):
    if isinstance(e, Atom):
        return env[e.name]
    if isinstance(e, Prod):
        return s.product(e.index, evaluate(e.left, s, env), evaluate(e.right, s, env))
    return s.unit


def test_parse_examples():
    e = parse("((a *2 b) *1 (c *2 d))")
    assert e == Prod(1, Prod(2, Atom("a"), Atom("b")), Prod(2, Atom("c"), Atom("d")))
    assert to_text(e) == "((a *2 b) *1 (c *2 d))"
    assert parse(" ( a*3b ) ") == Prod(3, Atom("a"), Atom("b"))
    assert normalize(parse("((a *1 0) *2 b)")) == Prod(2, Atom("a"), Atom("b"))
    assert max_index(e) == 2 and atoms(e) == ["a", "b", "c", "d"]


@pytest.mark.parametrize("text,pos", [("(a ** b)", 3), ("(a *0 b)", 3), ("(a *5 b)", 3), ("(a *1 b) c", 9),
                                      ("(a *1 b", 7), ("7", 0)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse(text, n=4)
    assert exc.value.pos == pos


def test_eta_shaped_hom():
    src, tgt = parse("((a *2 b) *1 (c *2 d))"), parse("((a *1 c) *2 (b *1 d))")
    assert hom_count(src, tgt) == 1 and hom_count(tgt, src) == 0
    assert failing_pair(tgt, src) == ("a", "d", 2, 1)


def test_identity_needs_non_strict_rule():
    e = parse("(a *1 b)")
    assert morphism_exists(e, e)
    assert not morphism_exists(e, e, strict_rule=True)
    # swapped orientation needs a strictly larger index either way
    assert morphism_exists(e, parse("(b *2 a)")) and not morphism_exists(e, parse("(b *1 a)"))


def test_atom_set_mismatch_and_duplicates():
    with pytest.raises(ValueError):
        morphism_exists(parse("(a *1 b)"), parse("(a *1 c)"))
    with pytest.raises(ValueError):
        check_object(parse("(a *1 a)"))


def test_pair_index():
    e = parse("((a *2 b) *1 c)")
    assert pair_index(e, "a", "b") == (2, False)
    assert pair_index(e, "c", "a") == (1, True)
    with pytest.raises(KeyError):
        pair_index(e, "a", "z")


@given(exprs(NAMES, 4))
def test_pair_table_matches_restriction(e):
    table = pair_table(e)
    for (x, y), i in table.items():
        assert pair_index(e, x, y) == (i, False)
    assert len(table) == 10


@given(exprs(NAMES, 4), st.sets(st.sampled_from(NAMES)))
def test_restrict_idempotent(e, keep):
    once = restrict(e, keep)
    assert restrict(once, keep) == once
    assert sorted(atoms(once)) == sorted(set(keep))


@given(exprs(NAMES, 4))
def test_identity(e):
    assert hom_count(e, e) == 1


@given(exprs(NAMES[:4], 3), exprs(NAMES[:4], 3), exprs(NAMES[:4], 3))
def test_transitive(a, b, c):
    if morphism_exists(a, b) and morphism_exists(b, c):
        assert morphism_exists(a, c)


@given(exprs(NAMES[:2], 3), exprs(NAMES[:2], 3), exprs(NAMES[2:4], 3), exprs(NAMES[2:4], 3), st.integers(1, 3))
def test_functorial(a, b, c, d, i):
    if morphism_exists(a, b) and morphism_exists(c, d):
        assert morphism_exists(Prod(i, a, c), Prod(i, b, d))


def test_sound_in_certified_structures():
    # every free morphism must become an inequality in a genuine n-fold poset
    rng = random.Random(11)
    for sname, n in (("nat", 2), ("yd-max:1", 3)):
        s = get_structure(sname)
        objs = all_exprs(["a", "b", "c"], n)
        envs = [{x: s.sample(rng) for x in "abc"} for _ in range(15)]
        for src in objs[::7]:
            for tgt in objs[::5]:
                if morphism_exists(src, tgt):
                    assert all(s.leq(evaluate(src, s, env), evaluate(tgt, s, env)) for env in envs)


def test_all_exprs_count():
    # 2 atoms: 2 orders x n indices
    assert len(all_exprs(["a", "b"], 3)) == 6
    assert UNIT not in all_exprs(["a"], 2)
