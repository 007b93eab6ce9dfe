"""Named example collections."""
from __future__ import annotations

from .core import EMPTY, Structure
from .diagrams import DiagramND
from .operads import Collection
from .registry import get_structure


def ones(j: int) -> tuple:
    """Sequence with ``j - 1`` leading ones."""
    return (1,) * max(j - 1, 0)


def bee(N: int = 10) -> Collection:
    """``B(j)_i = 1`` for ``i < j``: a (1,2) operad in seq that fails (2,3)."""
    return Collection.from_terms(get_structure("seq"), [ones(j) for j in range(1, N + 1)])


def predecessor(N: int = 10) -> Collection:
    """``C(j) = (j - 1)`` as a one-entry sequence: a 3-fold operad in seq."""
    return Collection.from_terms(get_structure("seq"), [((j - 1,) if j > 1 else ()) for j in range(1, N + 1)])


def square(j: int) -> DiagramND:
    """The (j-1) x (j-1) square, in column heights."""
    return DiagramND.from_array([j - 1] * (j - 1), check=False)


def squares(N: int = 10) -> Collection:
    """``C(n)`` the square of side ``n - 1`` in yd-max:1; a (2,3) operad."""
    return Collection.from_terms(get_structure("yd-max:1"), [square(j) for j in range(1, N + 1)])


def all_unit(s: Structure, N: int = 10, c0=EMPTY) -> Collection:
    return Collection.from_terms(s, [s.unit] * N, c0=c0)


def bee_heights(N: int = 10) -> Collection:
    """``B(j)`` drawn as ``j - 1`` unit columns, in the height preorder."""
    return Collection.from_terms(get_structure("yd-height"),
                                 [DiagramND.from_array([1] * (j - 1), check=False) for j in range(1, N + 1)])


NAMED = {
    "bee": bee,
    "predecessor": predecessor,
    "squares": squares,
    "bee-heights": bee_heights,
}
