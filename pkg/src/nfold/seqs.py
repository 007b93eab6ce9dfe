"""Finitely supported sequences over an ordered monoid.

Sequences are stored as tuples with trailing identities trimmed, so
structural equality is equality of the underlying functions.  The 3-fold
structure on them has products lexicographic max, concatenation and
pointwise monoid operation.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .core import Structure

Seq = tuple


@dataclass(frozen=True)
class OrderedMonoid:
    """Totally ordered monoid whose identity is the least element.

    The order is Python's ``<=`` on the carrier values.
    """

    name: str
    op: Callable[[Any, Any], Any]
    identity: Any
    sample: Callable[[random.Random], Any]


NAT_PLUS = OrderedMonoid("(N,+)", lambda a, b: a + b, 0, lambda r: r.randint(0, 9))
NAT_MAX = OrderedMonoid("(N,max)", max, 0, lambda r: r.randint(0, 9))


def trim(xs: Iterable, identity: Any = 0) -> Seq:
    xs = list(xs)
    while xs and xs[-1] == identity:
        xs.pop()
    return tuple(xs)


def lex_cmp(a: Seq, b: Seq, identity: Any = 0) -> int:
    """Compare over ``max(len(a), len(b))`` positions, missing entries as identity."""
    for x, y in itertools.zip_longest(a, b, fillvalue=identity):
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_leq(a: Seq, b: Seq) -> bool:
    return lex_cmp(a, b) <= 0


def lex_max(a: Seq, b: Seq) -> Seq:
    return a if lex_cmp(a, b) >= 0 else b


def concat(a: Seq, b: Seq) -> Seq:
    # a is canonical, so its stored length is its support length
    return trim(tuple(a) + tuple(b))


def pointwise(a: Seq, b: Seq, monoid: OrderedMonoid = NAT_PLUS) -> Seq:
    e = monoid.identity
    return trim((monoid.op(x, y) for x, y in itertools.zip_longest(a, b, fillvalue=e)), e)


def sort_desc(a: Seq) -> Seq:
    return tuple(sorted(a, reverse=True))


def _pad(a: Seq, n: int, identity: Any = 0) -> tuple:
    return tuple(a) + (identity,) * (n - len(a))


def triangle_sides(a: Seq, b: Seq) -> tuple[Seq, Seq]:
    """``s(A+B)`` and ``s(A)+s(B)`` for the sorting triangle inequality.

    Sorting acts on the zero-padded common-length sequences.
    """
    n = max(len(a), len(b))
    pa, pb = _pad(a, n), _pad(b, n)
    lhs = trim(sorted((x + y for x, y in zip(pa, pb)), reverse=True))
    rhs = trim(x + y for x, y in zip(sorted(pa, reverse=True), sorted(pb, reverse=True)))
    return lhs, rhs


def triangle_check(a: Seq, b: Seq) -> bool:
    lhs, rhs = triangle_sides(a, b)
    return lex_cmp(lhs, rhs) <= 0


def strictly_monotone(monoid: OrderedMonoid, samples: Sequence[Any]) -> bool:
    """``0 < a < b`` and ``c <= d`` imply ``a+c < b+d`` and ``c+a < d+b``, on the given samples."""
    e, op = monoid.identity, monoid.op
    for a, b, c, d in itertools.product(samples, repeat=4):
        if e < a < b and c <= d:
            if not (op(a, c) < op(b, d) and op(c, a) < op(d, b)):
                return False
    return True


def parse_seq(text: str) -> Seq:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad sequence {text!r} at column {exc.colno}: {exc.msg}") from None
    if isinstance(value, int):
        value = [value]
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ValueError(f"sequence must be a bracketed list of integers: {text!r}")
    if any(v < 0 for v in value):
        raise ValueError(f"sequence entries must be nonnegative: {text!r}")
    return trim(value)


def format_seq(a: Seq) -> str:
    return "[" + ",".join(map(str, a)) + "]"


def random_seq(rng: random.Random, max_len: int = 5, max_entry: int = 4,
               monoid: OrderedMonoid = NAT_PLUS) -> Seq:
    n = rng.randint(0, max_len)
    if monoid is NAT_PLUS:
        return trim(rng.randint(0, max_entry) for _ in range(n))
    return trim((monoid.sample(rng) for _ in range(n)), monoid.identity)


def all_seqs(max_len: int, max_entry: int) -> list[Seq]:
    out = {trim(t) for n in range(max_len + 1) for t in itertools.product(range(max_entry + 1), repeat=n)}
    return sorted(out)


def seq_structure(monoid: OrderedMonoid = NAT_PLUS, name: str = "seq") -> Structure:
    """The 3-fold structure (lex max, concatenation, pointwise op).

    Refuses monoids whose operation does not strictly respect strict order,
    checked on a sample of carrier values.
    """
    rng = random.Random(0)
    probe = sorted({monoid.identity} | {monoid.sample(rng) for _ in range(12)})
    if not strictly_monotone(monoid, probe):
        raise ValueError(f"{monoid.name} does not strictly respect strict order; "
                         "pointwise product would not be monotone")
    e = monoid.identity
    return Structure(
        name=name,
        products=(lex_max, concat, lambda a, b: pointwise(a, b, monoid)),
        leq=lambda a, b: lex_cmp(a, b, e) <= 0,
        unit=(),
        product_names=("lexicographic max", "concatenation", f"pointwise {monoid.name}"),
        parse=parse_seq,
        format=format_seq,
        sample=lambda r: random_seq(r, monoid=monoid),
        enumerate=lambda bound: all_seqs(bound, bound),
        description=f"finitely supported sequences over {monoid.name}, lexicographic order",
    )
