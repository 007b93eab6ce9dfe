"""Collections and n-fold operads in posetal iterated monoidal categories.

An operad here is an arity-indexed family of objects in a structure with an
adjoined bottom ``EMPTY``.  Composition maps are order relations, so a
collection is an operad exactly when every composite source lies below its
target (and is not sent to ``EMPTY`` by a zero map).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Mapping, Optional, Sequence

from .core import DEFAULT_SEED, EMPTY, Structure, hom_exists, with_bottom


@dataclass(frozen=True)
class Collection:
    """Objects ``C(0..max_arity)`` in a bottom-adjoined structure."""

    structure: Structure
    objects: tuple

    def __post_init__(self):
        if not self.structure.has_bottom:
            object.__setattr__(self, "structure", with_bottom(self.structure))

    @classmethod
    def from_terms(cls, structure: Structure, terms: Mapping[int, Any] | Sequence, c0: Any = EMPTY) -> "Collection":
        """``terms`` maps arity to object; a sequence is read as ``C(1), C(2), ...``."""
        if not isinstance(terms, Mapping):
            terms = {j: x for j, x in enumerate(terms, 1)}
        terms = dict(terms)
        terms.setdefault(0, c0)
        top = max(terms)
        missing = [j for j in range(top + 1) if j not in terms]
        if missing:
            raise ValueError(f"collection has gaps at arities {missing}")
        return cls(structure, tuple(terms[j] for j in range(top + 1)))

    @property
    def max_arity(self) -> int:
        return len(self.objects) - 1

    def __getitem__(self, j: int) -> Any:
        if not 0 <= j <= self.max_arity:
            raise IndexError(f"arity {j} outside 0..{self.max_arity}")
        return self.objects[j]

    def __len__(self):
        return len(self.objects)

    def truncate(self, n: int) -> "Collection":
        return Collection(self.structure, self.objects[: n + 1])


def _check_pq(s: Structure, p: int, q: int) -> None:
    if not 1 <= p < q <= s.dims:
        raise IndexError(f"need 1 <= p < q <= {s.dims}, got p={p}, q={q}")


def gamma_source(C: Collection, p: int, q: int, k: int, js: Sequence[int]) -> Any:
    """``C(k) *p (C(j1) *q ... *q C(jk))``."""
    s = C.structure
    _check_pq(s, p, q)
    if k < 1 or len(js) != k:
        raise ValueError(f"need k >= 1 inner arities, got k={k}, js={tuple(js)}")
    inner = s.fold(q, (C[j] for j in js))
    return s.product(p, C[k], inner)


def gamma_exists(C: Collection, p: int, q: int, k: int, js: Sequence[int]) -> bool:
    """Whether the composition map exists; a zero map does not count."""
    src = gamma_source(C, p, q, k, js)
    return hom_exists(C.structure, src, C[sum(js)])


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions into positive parts."""
    for w in weak_compositions(total - parts, parts):
        yield tuple(x + 1 for x in w)


@dataclass
class Witness:
    kind: str
    k: int
    js: tuple[int, ...]
    source: Any
    target: Any
    detail: str = ""

    def label(self) -> str:
        return f"({self.k}; {','.join(map(str, self.js))})"

    def render(self, s: Structure) -> str:
        msg = f"{self.kind} {self.label()}: {s.format_obj(self.source)} !-> {s.format_obj(self.target)}"
        return msg + (f" [{self.detail}]" if self.detail else "")


@dataclass
class OperadReport:
    pair: tuple[int, int]
    max_arity: int
    witnesses: list[Witness] = field(default_factory=list)
    unit_ok: bool = True
    compositions_checked: int = 0
    associativity_checked: int = 0

    @property
    def valid(self) -> bool:
        return not self.witnesses and self.unit_ok

    @property
    def verdict(self) -> str:
        return f"valid-to-{self.max_arity}" if self.valid else "invalid"

    def lines(self, s: Structure, limit: Optional[int] = None) -> list[str]:
        p, q = self.pair
        out = [f"pair ({p},{q}) to arity {self.max_arity}: {self.verdict}",
               f"  compositions checked: {self.compositions_checked}",
               f"  associativity squares audited: {self.associativity_checked}",
               f"  unit laws: {'ok' if self.unit_ok else 'FAILED'}"]
        shown = self.witnesses if limit is None else self.witnesses[:limit]
        for w in shown:
            out.append("  witness " + w.render(s))
        if len(shown) < len(self.witnesses):
            out.append(f"  ... {len(self.witnesses) - len(shown)} more witnesses")
        return out


def _sweep_gammas(C: Collection, p: int, q: int, N: int, report: OperadReport) -> None:
    """Depth-first over ``(k, j1..jk)`` in lexicographic order, reusing prefix products."""
    s = C.structure
    for k in range(1, N + 1):
        ck = C[k]

        def dfs(prefix: list[int], acc, remaining: int):
            if len(prefix) == k:
                report.compositions_checked += 1
                target = C[sum(prefix)]
                src = s.product(p, ck, acc) if acc is not EMPTY else EMPTY
                if not hom_exists(s, src, target):
                    report.witnesses.append(Witness("composition", k, tuple(prefix), src, target))
                return
            for j in range(remaining + 1):
                nxt = C[j] if not prefix else (EMPTY if acc is EMPTY else s.product(q, acc, C[j]))
                prefix.append(j)
                dfs(prefix, nxt, remaining - j)
                prefix.pop()

        dfs([], s.unit, N)


def associativity_square(C: Collection, p: int, q: int, js: Sequence[int], is_: Sequence[int]) -> dict:
    """Vertices and edge verdicts of one associativity square.

    ``js`` are the arities composed into ``C(k)`` (``k = len(js)``); ``is_``
    (length ``sum(js)``) are composed into the result.
    """
    s = C.structure
    _check_pq(s, p, q)
    k, j = len(js), sum(js)
    if len(is_) != j:
        raise ValueError(f"need {j} outer arities, got {len(is_)}")
    P = s.product
    Z = s.fold(q, (C[i] for i in is_))
    blocks, h = [], []
    start = 0
    for js_s in js:
        blk = list(is_[start:start + js_s])
        start += js_s
        blocks.append(s.product(p, C[js_s], s.fold(q, (C[i] for i in blk))))
        h.append(sum(blk))
    v = {
        "source": P(p, P(p, C[k], s.fold(q, (C[x] for x in js))), Z),
        "top": P(p, C[j], Z),
        "target": C[sum(is_)],
        "left": P(p, C[k], s.fold(q, blocks)),
        "bottom": P(p, C[k], s.fold(q, (C[x] for x in h))),
    }
    edges = {
        "gamma*id": hom_exists(s, v["source"], v["top"]),
        "gamma(top)": hom_exists(s, v["top"], v["target"]),
        "interchange": hom_exists(s, v["source"], v["left"]),
        "id*gamma": hom_exists(s, v["left"], v["bottom"]),
        "gamma(bottom)": hom_exists(s, v["bottom"], v["target"]),
    }
    return {"vertices": v, "edges": edges, "commutes": all(edges.values()), "h": tuple(h)}


def _random_weak_composition(rng: random.Random, parts: int, budget: int) -> tuple[int, ...]:
    total = rng.randint(0, budget)
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def verify_operad(C: Collection, p: int, q: int, N: Optional[int] = None,
                  audit: int = 200, seed: int = DEFAULT_SEED) -> OperadReport:
    """Check every composition with ``k <= N`` and ``sum(js) <= N``, the unit laws,
    and ``audit`` seeded random associativity squares."""
    s = C.structure
    _check_pq(s, p, q)
    N = C.max_arity if N is None else N
    if N > C.max_arity:
        raise ValueError(f"arity bound {N} exceeds stored arity {C.max_arity}")
    report = OperadReport(pair=(p, q), max_arity=N)
    _sweep_gammas(C, p, q, N, report)

    unit_ok = hom_exists(s, s.unit, C[1]) if N >= 1 else True
    for k in range(1, N + 1):
        unit_ok = unit_ok and gamma_exists(C, p, q, k, (1,) * k) and gamma_exists(C, p, q, 1, (k,))
    report.unit_ok = unit_ok

    rng = random.Random(seed)
    for _ in range(audit if N >= 1 else 0):
        k = rng.randint(1, N)
        js = _random_weak_composition(rng, k, N)
        j = sum(js)
        if j == 0:
            is_: tuple[int, ...] = ()
        else:
            is_ = _random_weak_composition(rng, j, N)
        sq = associativity_square(C, p, q, js, is_)
        report.associativity_checked += 1
        if not sq["commutes"]:
            bad = [e for e, ok in sq["edges"].items() if not ok]
            v = sq["vertices"]
            report.witnesses.append(Witness("associativity", k, tuple(js), v["source"], v["target"],
                                            f"is={','.join(map(str, is_))}; failing edges {bad}"))
    report.witnesses.sort(key=lambda w: (w.kind != "composition", w.k, w.js))
    return report


def demote_check(C: Collection, q: int, N: Optional[int] = None) -> tuple[bool, dict[tuple[int, int], bool]]:
    """Given a valid ``(q, q+1)`` operad, check every pair ``p < s <= q+1``."""
    base = verify_operad(C, q, q + 1, N)
    if not base.valid:
        raise ValueError(f"collection is not a ({q},{q + 1}) operad: {base.witnesses[:1]}")
    results = {}
    for p_, s_ in itertools.combinations(range(1, q + 2), 2):
        results[(p_, s_)] = verify_operad(C, p_, s_, N).valid
    return all(results.values()), results


# --- generation ---------------------------------------------------------------

def generate_minimal(s: Structure, p: int, q: int, seed_terms: Sequence[Any], N: int) -> list[Any]:
    """Extend ``C(1..l) = seed_terms`` to arity ``N`` by order-maximal composites.

    ``C(n)`` is the maximum over ``k >= 2`` and positive ``j1+...+jk = n`` of
    ``C(k) *p (C(j1) *q ... *q C(jk))``.  Computed by dynamic programming on
    ``best[k][m]``, the maximal ``q``-product of ``k`` terms of total arity
    ``m``; exact because both products are monotone in a total order.
    Returns ``[C(1), ..., C(N)]``.
    """
    _check_pq(s, p, q)
    C = [None] + list(seed_terms)
    l = len(seed_terms)
    best: dict[tuple[int, int], Any] = {}
    for n in range(1, N + 1):
        for k in range(2, n + 1):
            cand = None
            for j in range(1, n - k + 2):
                x = s.product(q, C[j], best[(k - 1, n - j)])
                cand = x if cand is None else s.max(cand, x)
            best[(k, n)] = cand
        if n > l:
            val = None
            for k in range(2, n):
                x = s.product(p, C[k], best[(k, n)])
                val = x if val is None else s.max(val, x)
            if val is None:
                raise ValueError("need at least C(1) and C(2) to generate")
            C.append(val)
        best[(1, n)] = C[n]
    return C[1:N + 1]


def generate_minimal_bruteforce(s: Structure, p: int, q: int, seed_terms: Sequence[Any], N: int) -> list[Any]:
    """Same as :func:`generate_minimal` by enumerating every composition."""
    C = [None] + list(seed_terms)
    for n in range(len(seed_terms) + 1, N + 1):
        val = None
        for k in range(2, n):
            for js in compositions(n, k):
                x = s.product(p, C[k], s.fold(q, (C[j] for j in js)))
                val = x if val is None else s.max(val, x)
        C.append(val)
    return C[1:N + 1]


def check_nat_prefix(starts: Sequence[int]) -> None:
    if not starts or starts[0] != 0:
        raise ValueError("starting terms must begin with C(1) = 0")
    a = [0] + list(starts)
    for n in range(2, len(a)):
        for x in range(1, n):
            if a[n] < a[x] + a[n - x]:
                raise ValueError(f"starting terms violate C({n}) >= C({x}) + C({n - x})")


def generate_minimal_nat(starts: Sequence[int], N: int) -> list[int]:
    """Minimal 2-fold operad in (N, max, +) with the given starting terms.

    Uses ``a(n) = max over x + y = n of a(x) + a(y)``; see
    :func:`generate_minimal` for the full composition definition.
    """
    check_nat_prefix(starts)
    a = [0] + list(starts)
    for n in range(len(a), N + 1):
        a.append(max(a[x] + a[n - x] for x in range(1, n // 2 + 1)))
    return a[1:N + 1]


def closed_form_nat(starts: Sequence[int], n: int) -> int:
    """``a(q) + p * a(k)`` for ``n = p*k + q``, ``0 <= q < k``, reading ``a(0)`` as 0."""
    check_nat_prefix(starts)
    if n < 1:
        raise ValueError("n must be >= 1")
    k = len(starts)
    a = [0] + list(starts)
    p_, q_ = divmod(n, k)
    return a[q_] + p_ * a[k]


def round_half_down(num: int, den: int) -> int:
    """Nearest integer to ``num/den``, halves rounded toward zero (num, den >= 0)."""
    quo, rem = divmod(num, den)
    return quo + 1 if 2 * rem > den else quo


def closed_form_single_box(n: int):
    """Column heights ``round(n / 2**k)``, k = 1, 2, ..., of the single-box operad term."""
    from .diagrams import DiagramND

    if n < 1:
        raise ValueError("n must be >= 1")
    heights = []
    k = 1
    while True:
        h = round_half_down(n, 2 ** k)
        if h == 0:
            break
        heights.append(h)
        k += 1
    return DiagramND.from_array(heights, check=False)


def canonical_construction(n: int, s: Optional[Structure] = None):
    """``C(ceil(n/2)) *2 (C(2) *3 ... *3 C(2) [*3 C(1)])`` from closed-form terms."""
    from .registry import get_structure

    s = s or get_structure("yd-max:1")
    inner = [closed_form_single_box(2)] * (n // 2) + [closed_form_single_box(1)] * (n % 2)
    return s.product(2, closed_form_single_box(math.ceil(n / 2)), s.fold(3, inner))


def canonical_construction_check(n: int) -> bool:
    if n < 2:
        raise ValueError("n must be >= 2")
    return canonical_construction(n) == closed_form_single_box(n)


def generate_minimal_diagram(B, p: int = 2, q: int = 3, N: int = 10, s: Optional[Structure] = None) -> Collection:
    """The minimal operad with ``C(1) = unit`` and ``C(2) = B``."""
    from .registry import get_structure

    s = s or get_structure("yd-max:1")
    terms = generate_minimal(s, p, q, [s.unit, B], N)
    return Collection.from_terms(s, terms)


def check_superadditive_heights(f: Callable[[int], int] | Mapping[int, int] | Sequence[int], N: int) -> bool:
    """``f(1) = 0`` and ``f(i+j) > f(i) + f(j)`` for all ``i + j <= N``.

    A sequence is read as ``f(1), f(2), ...``.
    """
    if isinstance(f, Mapping):
        get = f.__getitem__
    elif callable(f):
        get = f
    else:
        seq = list(f)
        get = lambda n: seq[n - 1]
    if get(1) != 0:
        return False
    return all(get(i + j) > get(i) + get(j) for i in range(1, N) for j in range(1, N - i + 1))


# --- products of operads ----------------------------------------------------------

def fibrewise_product(C: Collection, D: Collection, index: int) -> Collection:
    """``(C x D)(j) = C(j) *index D(j)`` for every stored arity."""
    s = C.structure
    if D.structure.name != s.name:
        raise ValueError(f"collections live in different structures: {s.name} vs {D.structure.name}")
    if not 1 <= index <= s.dims:
        raise IndexError(f"product index {index} outside 1..{s.dims}")
    n = min(C.max_arity, D.max_arity)
    return Collection(s, tuple(s.product(index, C[j], D[j]) for j in range(n + 1)))


def tensor_operads(C: Collection, D: Collection, i: int, m: int = 2) -> Collection:
    """Tensor of two m-fold operads: fibrewise product ``*(i+m)``, for ``1 <= i <= n - m``."""
    n = C.structure.dims
    if not 1 <= i <= n - m:
        raise IndexError(f"tensor index i={i} needs 1 <= i <= n - m = {n - m} (product *{i + m} does not exist)")
    return fibrewise_product(C, D, i + m)


# --- algebras ------------------------------------------------------------------

@dataclass
class AlgebraReport:
    pair: tuple[int, int]
    max_arity: int
    obj: Any
    failures: list[tuple[str, tuple[int, ...], Any, Any]] = field(default_factory=list)
    unit_ok: bool = True
    associativity_checked: int = 0

    @property
    def valid(self) -> bool:
        return not self.failures and self.unit_ok

    @property
    def verdict(self) -> str:
        return f"valid-to-{self.max_arity}" if self.valid else "invalid"

    def lines(self, s: Structure, limit: Optional[int] = None) -> list[str]:
        p, q = self.pair
        out = [f"algebra {s.format_obj(self.obj)} for pair ({p},{q}) to arity {self.max_arity}: {self.verdict}",
               f"  unit law: {'ok' if self.unit_ok else 'FAILED'}",
               f"  associativity squares audited: {self.associativity_checked}"]
        shown = self.failures if limit is None else self.failures[:limit]
        for kind, idx, src, tgt in shown:
            out.append(f"  witness {kind} ({';'.join(map(str, idx))}): "
                       f"{s.format_obj(src)} !-> {s.format_obj(tgt)}")
        if len(shown) < len(self.failures):
            out.append(f"  ... {len(self.failures) - len(shown)} more witnesses")
        return out


def action_source(C: Collection, A: Any, p: int, q: int, j: int) -> Any:
    """``C(j) *p (A *q ... *q A)`` with ``j`` copies of ``A``."""
    s = C.structure
    return s.product(p, C[j], s.fold(q, [A] * j))


def verify_algebra(C: Collection, A: Any, p: int, q: int, N: Optional[int] = None,
                   audit: int = 200, seed: int = DEFAULT_SEED) -> AlgebraReport:
    s = C.structure
    _check_pq(s, p, q)
    N = C.max_arity if N is None else N
    report = AlgebraReport(pair=(p, q), max_arity=N, obj=A)
    for j in range(N + 1):
        src = action_source(C, A, p, q, j)
        if not hom_exists(s, src, A):
            report.failures.append(("action", (j,), src, A))
    report.unit_ok = (s.equiv(s.product(p, s.unit, A), A) if A is not EMPTY else True) and \
        hom_exists(s, s.unit, C[1]) and hom_exists(s, action_source(C, A, p, q, 1), A)

    rng = random.Random(seed)
    P = s.product
    seen = set()
    for _ in range(audit if N >= 1 else 0):
        k = rng.randint(1, N)
        js = _random_weak_composition(rng, k, N)
        j = sum(js)
        power = lambda r: s.fold(q, [A] * r)
        src = P(p, P(p, C[k], s.fold(q, (C[x] for x in js))), power(j))
        top = P(p, C[j], power(j))
        left = P(p, C[k], s.fold(q, (P(p, C[x], power(x)) for x in js)))
        bottom = P(p, C[k], power(k))
        edges = [(src, top), (top, A), (src, left), (left, bottom), (bottom, A)]
        report.associativity_checked += 1
        bad = next(((x, y) for x, y in edges if not hom_exists(s, x, y)), None)
        if bad is not None and (k,) + tuple(js) not in seen:
            seen.add((k,) + tuple(js))
            report.failures.append(("associativity", (k,) + tuple(js), *bad))
    report.failures.sort(key=lambda f: (f[0] != "action", f[1]))
    return report


# --- collection files ------------------------------------------------------------

def read_collection(text: str, structure: Optional[Structure] = None) -> Collection:
    """Parse ``j: <object>`` lines; ``# structure: <name>`` names the carrier.

    Arities not listed default to ``EMPTY``.
    """
    from .registry import get_structure

    entries: dict[int, str] = {}
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("structure:"):
                declared = body.split(":", 1)[1].strip()
            continue
        head, sep, obj = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise ValueError(f"line {lineno}: expected 'j: <object>', got {raw!r}")
        j = int(head)
        if j in entries:
            raise ValueError(f"line {lineno}: arity {j} listed twice")
        entries[j] = obj.strip()
    if structure is None:
        if declared is None:
            raise ValueError("collection file names no structure ('# structure: <name>')")
        structure = get_structure(declared)
    s = with_bottom(structure)
    if not entries:
        raise ValueError("collection file lists no arities")
    top = max(entries)
    objs = []
    for j in range(top + 1):
        if j not in entries:
            objs.append(EMPTY)
            continue
        try:
            objs.append(s.parse_obj(entries[j]))
        except ValueError as exc:
            raise ValueError(f"arity {j}: {exc}") from None
    return Collection(s, tuple(objs))


def write_collection(C: Collection) -> str:
    s = C.structure
    lines = [f"# structure: {s.name}"]
    lines += [f"{j}: {s.format_obj(C[j])}" for j in range(len(C))]
    return "\n".join(lines) + "\n"
