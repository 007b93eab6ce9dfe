"""Posetal n-fold monoidal structures and a sample-based axiom certifier.

A :class:`Structure` bundles ``n`` binary products on a totally (pre)ordered
carrier with a shared strict unit.  Morphisms are the order relations, so a
structure is a posetal category and every coherence diagram commutes as soon
as each of its edges exists.  Associators are identities.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

DEFAULT_SEED = 20070401


class _Empty:
    """The adjoined bottom object: initial, terminal and absorbing."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()


def is_empty(x: Any) -> bool:
    return x is EMPTY


@dataclass(frozen=True)
class Structure:
    """An ordered carrier with ``dims`` interchanging products.

    ``products[i - 1]`` is the product numbered ``i``.  ``leq`` must be a
    total preorder in which ``unit`` is least.  ``sample`` draws a random
    object from a ``random.Random``; ``enumerate`` (optional) lists every
    object below a size bound, for exhaustive sweeps.
    """

    name: str
    products: tuple[Callable[[Any, Any], Any], ...]
    leq: Callable[[Any, Any], bool]
    unit: Any
    product_names: tuple[str, ...] = ()
    parse: Callable[[str], Any] = repr
    format: Callable[[Any], str] = str
    sample: Optional[Callable[[random.Random], Any]] = None
    enumerate: Optional[Callable[[int], Iterable[Any]]] = None
    description: str = ""
    has_bottom: bool = field(default=False)

    @property
    def dims(self) -> int:
        return len(self.products)

    def product(self, i: int, a: Any, b: Any) -> Any:
        if not 1 <= i <= self.dims:
            raise IndexError(f"product index {i} outside 1..{self.dims} for {self.name}")
        return self.products[i - 1](a, b)

    def fold(self, i: int, items: Iterable[Any]) -> Any:
        """Iterated product ``x1 *i x2 *i ... *i xk``; the empty product is the unit."""
        acc = self.unit
        first = True
        for x in items:
            acc = x if first else self.product(i, acc, x)
            first = False
        return acc

    def lt(self, a: Any, b: Any) -> bool:
        return self.leq(a, b) and not self.leq(b, a)

    def equiv(self, a: Any, b: Any) -> bool:
        return self.leq(a, b) and self.leq(b, a)

    def cmp(self, a: Any, b: Any) -> int:
        if self.leq(a, b):
            return 0 if self.leq(b, a) else -1
        return 1

    def max(self, a: Any, b: Any) -> Any:
        return a if self.leq(b, a) else b

    def format_obj(self, x: Any) -> str:
        return "empty" if x is EMPTY else self.format(x)

    def parse_obj(self, text: str) -> Any:
        if text.strip() == "empty":
            if not self.has_bottom:
                raise ValueError(f"structure {self.name} has no bottom object")
            return EMPTY
        return self.parse(text)

    def describe(self) -> str:
        lines = [f"{self.name}: {self.dims} products"]
        if self.description:
            lines.append(f"  {self.description}")
        names = self.product_names or tuple(f"product {i}" for i in range(1, self.dims + 1))
        for i, nm in enumerate(names, 1):
            lines.append(f"  *{i} = {nm}")
        lines.append(f"  unit = {self.format_obj(self.unit)}")
        return "\n".join(lines)


def with_bottom(s: Structure) -> Structure:
    """Adjoin ``EMPTY``: least in the order and absorbing for every product."""
    if s.has_bottom:
        return s

    def lift(f):
        def g(a, b):
            if a is EMPTY or b is EMPTY:
                return EMPTY
            return f(a, b)

        return g

    def leq(a, b):
        if a is EMPTY:
            return True
        if b is EMPTY:
            return False
        return s.leq(a, b)

    return Structure(
        name=s.name,
        products=tuple(lift(f) for f in s.products),
        leq=leq,
        unit=s.unit,
        product_names=s.product_names,
        parse=s.parse,
        format=s.format,
        sample=s.sample,
        enumerate=s.enumerate,
        description=s.description,
        has_bottom=True,
    )


def max_augmented(s: Structure, name: Optional[str] = None) -> Structure:
    """Prepend the order-maximum as a new first product.

    Valid whenever the unit is least and every product of ``s`` is monotone.
    """
    return Structure(
        name=name or f"max+{s.name}",
        products=(s.max,) + s.products,
        leq=s.leq,
        unit=s.unit,
        product_names=("max",) + (s.product_names or tuple(f"old *{i}" for i in range(1, s.dims + 1))),
        parse=s.parse,
        format=s.format,
        sample=s.sample,
        enumerate=s.enumerate,
        description=s.description,
        has_bottom=s.has_bottom,
    )


def hom_exists(s: Structure, a: Any, b: Any) -> bool:
    """Whether a morphism ``a -> b`` exists.

    Maps out of ``EMPTY`` always exist.  Maps into ``EMPTY`` from a non-empty
    object are zero maps and are not counted.
    """
    if a is EMPTY:
        return True
    if b is EMPTY:
        return False
    return s.leq(a, b)


def _check_pair(s: Structure, i: int, j: int) -> None:
    if not (1 <= i < j <= s.dims):
        raise IndexError(f"need 1 <= i < j <= {s.dims}, got i={i}, j={j}")


def interchange_sides(s: Structure, i: int, j: int, a, b, c, d) -> tuple[Any, Any]:
    """Source and target of the interchange ``(a*j b)*i(c*j d) -> (a*i c)*j(b*i d)``."""
    _check_pair(s, i, j)
    lhs = s.product(i, s.product(j, a, b), s.product(j, c, d))
    rhs = s.product(j, s.product(i, a, c), s.product(i, b, d))
    return lhs, rhs


def interchange_holds(s: Structure, i: int, j: int, a, b, c, d) -> bool:
    lhs, rhs = interchange_sides(s, i, j, a, b, c, d)
    return hom_exists(s, lhs, rhs)


def _samples(s: Structure, rng: random.Random, arity: int, trials: int) -> Iterator[tuple]:
    if s.sample is None:
        raise ValueError(f"structure {s.name} has no sampler")
    for _ in range(trials):
        yield tuple(s.sample(rng) for _ in range(arity))


def exhaustive_tuples(s: Structure, bound: int, arity: int) -> Iterator[tuple]:
    if s.enumerate is None:
        raise ValueError(f"structure {s.name} has no enumerator")
    objs = list(s.enumerate(bound))
    return itertools.product(objs, repeat=arity)


def derived_product_monotone(s: Structure, p: int, q: int, sampler=None, trials: int = 1000,
                             seed: int = DEFAULT_SEED) -> bool:
    """Check ``A *p B <= A *q B`` and ``A *p B <= B *q A`` on sampled pairs."""
    _check_pair(s, p, q)
    rng = random.Random(seed)
    pairs = sampler if sampler is not None else _samples(s, rng, 2, trials)
    for a, b in pairs:
        ab = s.product(p, a, b)
        if not (hom_exists(s, ab, s.product(q, a, b)) and hom_exists(s, ab, s.product(q, b, a))):
            return False
    return True


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0


@dataclass
class Counterexample:
    check: str
    indices: tuple[int, ...]
    objects: tuple
    detail: str

    def render(self, s: Structure) -> str:
        objs = " ".join(f"'{s.format_obj(x)}'" for x in self.objects)
        idx = ",".join(map(str, self.indices))
        return f"{self.check} [{idx}] {objs}: {self.detail}"


@dataclass
class CertReport:
    structure: str
    trials: int
    seed: Optional[int]
    tallies: dict[str, CheckTally] = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def record(self, check: str, ok: bool, indices=(), objects=(), detail="") -> None:
        t = self.tallies.setdefault(check, CheckTally())
        if ok:
            t.passed += 1
        else:
            t.failed += 1
            if self.counterexample is None:
                self.counterexample = Counterexample(check, tuple(indices), tuple(objects), detail)

    def lines(self, s: Structure) -> list[str]:
        out = [f"structure {self.structure}: {'PASS' if self.ok else 'FAIL'} "
               f"({self.trials} tuples, seed {self.seed})"]
        for name in sorted(self.tallies):
            t = self.tallies[name]
            out.append(f"  {name}: {t.passed} ok, {t.failed} failed")
        if self.counterexample is not None:
            out.append("  witness: " + self.counterexample.render(s))
        return out


def certify_structure(s: Structure, sampler=None, trials: int = 1000, seed: int = DEFAULT_SEED,
                      exhaustive_bound: Optional[int] = None) -> CertReport:
    """Sample-check the axioms of an n-fold monoidal structure.

    Each tuple supplies eight objects ``(A, B, C, D, A', B', C', D')``; the
    first six double as ``U..Z`` for the associativity diagrams.  In a poset
    every diagram commutes once each edge exists, so the checks are: unit
    and associativity equalities, functoriality, the interchange for every
    ``i < j``, the unit conditions as object equalities, every edge of the
    internal/external associativity squares, and every edge of the
    hexagon for ``i < j < k``.
    """
    if exhaustive_bound is not None:
        tuples: Iterable[tuple] = (t + t for t in exhaustive_tuples(s, exhaustive_bound, 4))
    elif sampler is not None:
        tuples = sampler
    else:
        tuples = _samples(s, random.Random(seed), 8, trials)

    report = CertReport(structure=s.name, trials=0, seed=None if exhaustive_bound is not None else seed)
    n = s.dims
    I = s.unit
    P = s.product
    eq = s.equiv
    edge = lambda x, y: hom_exists(s, x, y)

    for tup in tuples:
        report.trials += 1
        A, B, C, D, A2, B2, C2, D2 = tup
        U, V, W, X, Y, Z = A, B, C, D, A2, B2
        for i in range(1, n + 1):
            report.record("unit", eq(P(i, A, I), A) and eq(P(i, I, A), A), (i,), (A,))
            report.record("associativity", eq(P(i, P(i, A, B), C), P(i, A, P(i, B, C))), (i,), (A, B, C))
            if edge(A, B) and edge(C, D):
                report.record("functoriality", edge(P(i, A, C), P(i, B, D)), (i,), (A, B, C, D))
        for i, j in itertools.combinations(range(1, n + 1), 2):
            lhs, rhs = interchange_sides(s, i, j, A, B, C, D)
            report.record("interchange", edge(lhs, rhs), (i, j), (A, B, C, D),
                          f"{s.format_obj(lhs)} !<= {s.format_obj(rhs)}")
            # unit conditions: both ends of the degenerate interchanges coincide
            for src_tgt in (interchange_sides(s, i, j, A, B, I, I), interchange_sides(s, i, j, I, I, A, B)):
                report.record("internal-unit", eq(*src_tgt) and eq(src_tgt[0], P(j, A, B)), (i, j), (A, B))
            for src_tgt in (interchange_sides(s, i, j, A, I, B, I), interchange_sides(s, i, j, I, A, I, B)):
                report.record("external-unit", eq(*src_tgt) and eq(src_tgt[0], P(i, A, B)), (i, j), (A, B))
            report.record("derived-maps", edge(P(i, A, B), P(j, A, B)) and edge(P(i, A, B), P(j, B, A)),
                          (i, j), (A, B))
            # internal associativity square, edges as object inequalities
            top = P(i, P(i, P(j, U, V), P(j, W, X)), P(j, Y, Z))
            r1 = P(i, P(j, P(i, U, W), P(i, V, X)), P(j, Y, Z))
            r2 = P(j, P(i, P(i, U, W), Y), P(i, P(i, V, X), Z))
            l1 = P(i, P(j, U, V), P(j, P(i, W, Y), P(i, X, Z)))
            bottom = P(j, P(i, U, P(i, W, Y)), P(i, V, P(i, X, Z)))
            ok = edge(top, r1) and edge(r1, r2) and edge(top, l1) and edge(l1, bottom) and eq(r2, bottom)
            report.record("internal-associativity", ok, (i, j), (U, V, W, X, Y, Z))
            # external associativity square
            top = P(i, P(j, P(j, U, V), W), P(j, P(j, X, Y), Z))
            r1 = P(j, P(i, P(j, U, V), P(j, X, Y)), P(i, W, Z))
            r2 = P(j, P(j, P(i, U, X), P(i, V, Y)), P(i, W, Z))
            l1 = P(j, P(i, U, X), P(i, P(j, V, W), P(j, Y, Z)))
            bottom = P(j, P(i, U, X), P(j, P(i, V, Y), P(i, W, Z)))
            ok = edge(top, r1) and edge(r1, r2) and edge(top, l1) and edge(l1, bottom) and eq(r2, bottom)
            report.record("external-associativity", ok, (i, j), (U, V, W, X, Y, Z))
        for i, j, k in itertools.combinations(range(1, n + 1), 3):
            ok = _hexagon_edges_exist(s, i, j, k, A, A2, B, B2, C, C2, D, D2)
            report.record("hexagon", ok, (i, j, k), (A, A2, B, B2, C, C2, D, D2))
    return report


def hexagon_objects(s: Structure, i, j, k, A, A2, B, B2, C, C2, D, D2) -> dict[str, Any]:
    """The six vertices of the hexagonal interchange diagram for ``i < j < k``."""
    P = s.product
    return {
        "top": P(i, P(j, P(k, A, A2), P(k, B, B2)), P(j, P(k, C, C2), P(k, D, D2))),
        "left1": P(i, P(k, P(j, A, B), P(j, A2, B2)), P(k, P(j, C, D), P(j, C2, D2))),
        "left2": P(k, P(i, P(j, A, B), P(j, C, D)), P(i, P(j, A2, B2), P(j, C2, D2))),
        "right1": P(j, P(i, P(k, A, A2), P(k, C, C2)), P(i, P(k, B, B2), P(k, D, D2))),
        "right2": P(j, P(k, P(i, A, C), P(i, A2, C2)), P(k, P(i, B, D), P(i, B2, D2))),
        "bottom": P(k, P(j, P(i, A, C), P(i, B, D)), P(j, P(i, A2, C2), P(i, B2, D2))),
    }


HEXAGON_EDGES = (("top", "left1"), ("left1", "left2"), ("left2", "bottom"),
                 ("top", "right1"), ("right1", "right2"), ("right2", "bottom"))


def _hexagon_edges_exist(s: Structure, i, j, k, *objs) -> bool:
    v = hexagon_objects(s, i, j, k, *objs)
    return all(hom_exists(s, v[a], v[b]) for a, b in HEXAGON_EDGES)


def product_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def interchange_sweep(s: Structure, i: int, j: int, quadruples: Iterable[Sequence]) -> Optional[tuple]:
    """Return the first quadruple violating the ``(i, j)`` interchange, or None."""
    for q in quadruples:
        if not interchange_holds(s, i, j, *q):
            return tuple(q)
    return None
