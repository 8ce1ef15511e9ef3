"""Small named groups as loop tables.

Names: `c<m>` (cyclic of order m), `klein`, `s<m>` (symmetric group on m
points). Element 1 is always the identity.
"""

import itertools
import re

import numpy as np

from .loop import LoopTable, validate_table
from .products import direct_product


def cyclic_group(m: int) -> LoopTable:
    """Z_m with element i + 1 standing for residue i."""
    if m < 1:
        raise ValueError(f"cyclic group order must be positive, got {m}")
    residues = np.arange(m)
    return validate_table((residues[:, None] + residues[None, :]) % m + 1)


def klein_group() -> LoopTable:
    """C2 x C2."""
    return direct_product(cyclic_group(2), cyclic_group(2))


def symmetric_group(m: int) -> LoopTable:
    """S_m over permutations in lexicographic order, (p*q)(i) = p(q(i))."""
    if not 1 <= m <= 6:
        raise ValueError(f"symmetric group degree must be in 1..6, got {m}")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [[index[tuple(p[q[i]] for i in range(m))] + 1 for q in perms] for p in perms]
    return validate_table(rows)


_NAME = re.compile(r"^(?:(?P<kind>[cs])(?P<size>[1-9]\d*)|(?P<klein>klein))$")


def by_name(name: str) -> LoopTable:
    """Resolve `c<m>`, `s<m>` or `klein`."""
    match = _NAME.match(name.strip().lower())
    if match is None:
        raise ValueError(f"unknown table name {name!r}; use c<m>, s<m> or klein")
    if match.group("klein"):
        return klein_group()
    size = int(match.group("size"))
    return cyclic_group(size) if match.group("kind") == "c" else symmetric_group(size)
