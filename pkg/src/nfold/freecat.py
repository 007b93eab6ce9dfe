"""Free n-fold monoidal category on a finite set of atoms.

Objects are binary expressions over atoms, the unit ``0`` and indexed
products ``*i``.  Between two expressions that use each atom exactly once
there is at most one morphism, and its existence is decided pairwise by
restricting both expressions to every two-atom subset.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

DEFAULT_MAX_INDEX = 9


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Prod:
    index: int
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"({self.left} *{self.index} {self.right})"


Expr = Union[Atom, Unit, Prod]
UNIT = Unit()


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(?P<lp>\()|(?P<rp>\))|(?P<op>\*(?P<idx>\d*))|(?P<id>[A-Za-z_][A-Za-z0-9_']*)|(?P<num>\d+))")


def parse(text: str, n: int = DEFAULT_MAX_INDEX) -> Expr:
    """Parse ``expr := atom | "0" | "(" expr "*"digits expr ")"``."""
    pos = 0

    def peek():
        m = _TOKEN.match(text, pos)
        return m if m and m.end() > pos else None

    def expr():
        nonlocal pos
        m = peek()
        if m is None:
            raise ExprSyntaxError("expected expression", text, _skip_ws(text, pos))
        start = m.start(m.lastgroup)
        if m.group("id"):
            pos = m.end()
            return Atom(m.group("id"))
        if m.group("num"):
            if m.group("num") != "0":
                raise ExprSyntaxError("only 0 may appear as a numeral", text, start)
            pos = m.end()
            return UNIT
        if not m.group("lp"):
            raise ExprSyntaxError("expected atom, 0 or '('", text, start)
        pos = m.end()
        left = expr()
        m = peek()
        if m is None or not m.group("op"):
            raise ExprSyntaxError("expected product '*i'", text, _skip_ws(text, pos))
        digits = m.group("idx")
        op_pos = m.start("op")
        if not digits:
            raise ExprSyntaxError("product needs an index", text, op_pos)
        i = int(digits)
        if not 1 <= i <= n:
            raise ExprSyntaxError(f"product index {i} outside 1..{n}", text, op_pos)
        pos = m.end()
        right = expr()
        m = peek()
        if m is None or not m.group("rp"):
            raise ExprSyntaxError("expected ')'", text, _skip_ws(text, pos))
        pos = m.end()
        return Prod(i, left, right)

    e = expr()
    if text[pos:].strip():
        raise ExprSyntaxError("trailing input", text, _skip_ws(text, pos))
    return e


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def to_text(e: Expr) -> str:
    return str(e)


def normalize(e: Expr) -> Expr:
    """Absorb units: ``0 *i X = X = X *i 0``."""
    if isinstance(e, Prod):
        left, right = normalize(e.left), normalize(e.right)
        if isinstance(left, Unit):
            return right
        if isinstance(right, Unit):
            return left
        return Prod(e.index, left, right)
    return e


def atoms(e: Expr) -> list[str]:
    if isinstance(e, Atom):
        return [e.name]
    if isinstance(e, Prod):
        return atoms(e.left) + atoms(e.right)
    return []


def max_index(e: Expr) -> int:
    if isinstance(e, Prod):
        return max(e.index, max_index(e.left), max_index(e.right))
    return 0


def check_object(e: Expr) -> None:
    """Each atom must occur exactly once."""
    names = atoms(e)
    dup = {a for a in names if names.count(a) > 1}
    if dup:
        raise ValueError(f"atoms occur more than once: {sorted(dup)}")


def restrict(e: Expr, keep: Iterable[str]) -> Expr:
    keep = set(keep)

    def go(x):
        if isinstance(x, Atom):
            return x if x.name in keep else UNIT
        if isinstance(x, Prod):
            return Prod(x.index, go(x.left), go(x.right))
        return x

    return normalize(go(e))


def pair_index(e: Expr, a: str, b: str) -> tuple[int, bool]:
    """The product joining ``a`` and ``b`` in ``e``, and whether ``b`` comes first."""
    if a == b:
        raise ValueError("pair_index needs two distinct atoms")
    r = restrict(e, {a, b})
    if not isinstance(r, Prod):
        missing = [x for x in (a, b) if x not in atoms(e)]
        raise KeyError(f"atom(s) {missing} missing from {e}")
    return r.index, r.left == Atom(b)


def pair_table(e: Expr) -> dict[tuple[str, str], int]:
    """Map each ordered pair ``(x, y)`` with ``x *i y`` in ``e`` to ``i``.

    Computed in one pass: two atoms are joined by their lowest common
    product node, with left-subtree atoms first.
    """
    table: dict[tuple[str, str], int] = {}

    def go(x):
        if isinstance(x, Atom):
            return [x.name]
        if isinstance(x, Prod):
            ls, rs = go(x.left), go(x.right)
            for u in ls:
                for v in rs:
                    table[(u, v)] = x.index
            return ls + rs
        return []

    go(normalize(e))
    return table


def failing_pair(a: Expr, b: Expr, strict_rule: bool = False) -> Optional[tuple[str, str, int, Optional[int]]]:
    """First atom pair blocking a morphism ``a -> b``, or None if one exists.

    Same orientation needs ``j >= i``; swapped orientation needs ``j > i``.
    ``strict_rule`` demands ``j > i`` in both cases.
    """
    sa, sb = sorted(atoms(a)), sorted(atoms(b))
    if sa != sb:
        raise ValueError(f"atom sets differ: {sa} vs {sb}")
    check_object(a)
    ta, tb = pair_table(a), pair_table(b)
    for (x, y), i in sorted(ta.items()):
        if (x, y) in tb:
            j = tb[(x, y)]
            ok = j > i if strict_rule else j >= i
        else:
            j = tb[(y, x)]
            ok = j > i
        if not ok:
            return x, y, i, j
    return None


def morphism_exists(a: Expr, b: Expr, strict_rule: bool = False) -> bool:
    return failing_pair(a, b, strict_rule) is None


def hom_count(a: Expr, b: Expr, strict_rule: bool = False) -> int:
    return int(morphism_exists(a, b, strict_rule))


def random_expr(rng: random.Random, names: list[str], n: int) -> Expr:
    """Random bracketing of a random permutation of ``names`` with indices in 1..n."""
    names = list(names)
    rng.shuffle(names)

    def build(xs):
        if len(xs) == 1:
            return Atom(xs[0])
        cut = rng.randint(1, len(xs) - 1)
        return Prod(rng.randint(1, n), build(xs[:cut]), build(xs[cut:]))

    return build(names) if names else UNIT


def all_exprs(names: list[str], n: int) -> list[Expr]:
    """Every object of M_n over ``names`` (small inputs only)."""
    out = []

    def trees(xs):
        if len(xs) == 1:
            yield Atom(xs[0])
            return
        for cut in range(1, len(xs)):
            for left in trees(xs[:cut]):
                for right in trees(xs[cut:]):
                    for i in range(1, n + 1):
                        yield Prod(i, left, right)

    for perm in itertools.permutations(names):
        out.extend(trees(list(perm)))
    return out
