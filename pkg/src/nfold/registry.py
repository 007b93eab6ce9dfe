"""Named structures used by the CLI and the collection file format."""
from __future__ import annotations

import functools

from .core import Structure
from .diagrams import diagram_structure, height_structure, max_diagram_structure
from .seqs import seq_structure


def _parse_nat(text: str) -> int:
    try:
        v = int(text.strip())
    except ValueError:
        raise ValueError(f"expected a natural number, got {text!r}") from None
    if v < 0:
        raise ValueError(f"expected a natural number, got {text!r}")
    return v


def nat_structure() -> Structure:
    """Natural numbers with max and +, ordered as usual."""
    return Structure(
        name="nat",
        products=(max, lambda a, b: a + b),
        leq=lambda a, b: a <= b,
        unit=0,
        product_names=("max", "addition"),
        parse=_parse_nat,
        format=str,
        sample=lambda r: r.randint(0, 20),
        enumerate=lambda bound: range(bound + 1),
        description="natural numbers, usual order",
    )


NAMES = ("nat", "seq", "yd1", "yd2", "yd3", "ydN:k", "yd-max:k", "yd-height")


@functools.lru_cache(maxsize=None)
def get_structure(name: str) -> Structure:
    if name == "nat":
        return nat_structure()
    if name == "seq":
        return seq_structure()
    if name == "yd-height":
        return height_structure()
    if name.startswith("yd-max:"):
        return max_diagram_structure(_dim(name, "yd-max:"))
    if name.startswith("ydN:"):
        return diagram_structure(_dim(name, "ydN:"))
    if name.startswith("yd") and name[2:].isdigit():
        return diagram_structure(_dim(name, "yd"))
    raise KeyError(f"unknown structure {name!r}; known: {', '.join(NAMES)}")


def _dim(name: str, prefix: str) -> int:
    tail = name[len(prefix):]
    if not tail.isdigit() or int(tail) < 1:
        raise KeyError(f"bad dimension in structure name {name!r}")
    return int(tail)


# structures swept by certification and the interchange acceptance runs
CERTIFIED = ("nat", "seq", "yd1", "yd2", "yd3", "yd-max:1", "yd-max:2", "yd-height")
