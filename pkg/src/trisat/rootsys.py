"""Static data for irreducible root systems.

Everything downstream needs only exponent-derived quantities: the exponent
multiset e_1 <= ... <= e_r, the adjoint group dimension sum(2*e_j + 1), and
the Coxeter number h = max(e_j) + 1.  Exponent lists are the classical ones
(Bourbaki, Groupes et algebres de Lie, planches I-IX).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

FAMILIES = "ABCDEFG"

#: Smallest rank for which each classical family is taken as irreducible here.
_RANK_MIN = {"A": 1, "B": 2, "C": 2, "D": 4}

#: Hard cap so that accidental huge ranks fail fast instead of allocating.
MAX_RANK = 512

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True, order=True)
class DynkinType:
    """An irreducible Dynkin type, e.g. DynkinType("D", 7)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.rank > MAX_RANK:
            raise ValueError(f"rank {self.rank} exceeds supported cap {MAX_RANK}")
        if self.family in _RANK_MIN:
            lo = _RANK_MIN[self.family]
            if self.rank < lo:
                raise ValueError(f"{self.family}_r requires rank >= {lo}")
        elif self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("E_r exists only for rank 6, 7, 8")
        elif self.family == "F":
            if self.rank != 4:
                raise ValueError("F_r exists only for rank 4")
        elif self.family == "G":
            if self.rank != 2:
                raise ValueError("G_r exists only for rank 2")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse a label like "E8" or "D13"."""
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystemData:
    """Derived quantities of a root system: exponents, adjoint dim, Coxeter number."""

    exponents: tuple[int, ...]
    dim: int
    coxeter: int


_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


@lru_cache(maxsize=None)
def exponents(t: DynkinType) -> tuple[int, ...]:
    """Exponents of the root system of type ``t``, sorted ascending.

    A_r: 1..r;  B_r, C_r: 1, 3, ..., 2r-1;  D_r: 1, 3, ..., 2r-3 together
    with r-1 (a repeated value when r is even);  E/F/G: literal lists.
    """
    r = t.rank
    if t.family == "A":
        return tuple(range(1, r + 1))
    if t.family in ("B", "C"):
        return tuple(range(1, 2 * r, 2))
    if t.family == "D":
        return tuple(sorted(list(range(1, 2 * r - 2, 2)) + [r - 1]))
    return _EXCEPTIONAL_EXPONENTS[(t.family, t.rank)]


def adjoint_dim(t: DynkinType) -> int:
    """Dimension of the adjoint simple group of type ``t``: sum(2*e_j + 1)."""
    return sum(2 * e + 1 for e in exponents(t))


def coxeter_number(t: DynkinType) -> int:
    """Coxeter number h = largest exponent + 1 (equivalently |Phi| / rank)."""
    return exponents(t)[-1] + 1


def root_data(t: DynkinType) -> RootSystemData:
    """Bundle exponents, adjoint dimension and Coxeter number for ``t``."""
    return RootSystemData(exponents(t), adjoint_dim(t), coxeter_number(t))


def all_types(max_rank: int) -> list[DynkinType]:
    """Every valid irreducible type of rank <= max_rank, in a fixed order."""
    out: list[DynkinType] = []
    for family in ("A", "B", "C", "D"):
        for r in range(_RANK_MIN[family], max_rank + 1):
            out.append(DynkinType(family, r))
    for r in (6, 7, 8):
        if r <= max_rank:
            out.append(DynkinType("E", r))
    if max_rank >= 4:
        out.append(DynkinType("F", 4))
    if max_rank >= 2:
        out.append(DynkinType("G", 2))
    return out
