"""Exact permutation-group machinery on {0, ..., m-1}.

Covers what the alternating-group saturation method needs: cycle types and
their conjugacy classes, deterministic class enumeration, exact group order
via a Schreier-Sims stabilizer chain, search for generating pairs of
prescribed orders in Alt_m, and non-generation proofs (Scott's cycle-count
bound, else exhaustion over class pairs).

Composition convention: (p * q) applies p first, then q, so
(p * q).images[x] == q.images[p.images[x]].  Cycle types, element orders
and the conjugacy class of a product are unaffected by this choice.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import factorial

from .weil import Triple

__all__ = [
    "Permutation",
    "CycleType",
    "GenerationWitness",
    "NotFound",
    "NonGenerated",
    "Refuted",
    "cycle_type",
    "cycle_types_of_order",
    "enumerate_class",
    "lex_min_of_type",
    "group_order",
    "find_generating_triple",
    "scott_min_sum",
    "prove_non_generation",
]


class Permutation:
    """Immutable permutation of {0..m-1}, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def from_cycles(cls, m: int, cycles) -> "Permutation":
        images = list(range(m))
        for cyc in cycles:
            for u, v in zip(cyc, cyc[1:]):
                images[u] = v
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (including fixed points), each led by its smallest element."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, _cycle_lengths(self.images), 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return f"Permutation(identity on {self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in moved)
        return f"Permutation[{text} on {self.degree}]"


def _cycle_lengths(images) -> list[int]:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        n = 1
        seen[start] = True
        x = images[start]
        while x != start:
            seen[x] = True
            n += 1
            x = images[x]
        lengths.append(n)
    return lengths


_SHAPE_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")
_SHAPE_PRETTY = re.compile(r"\((\d+)\)(?:\^(\d+))?")


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths (fixed points included), stored descending."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"cycle lengths must be positive integers: {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse "3^3.1^2" (dot-separated) or the pretty form "(3)^3(1)^2"."""
        text = text.strip()
        parts: list[int] = []
        if "(" in text:
            for length, mult in _SHAPE_PRETTY.findall(text):
                parts.extend([int(length)] * int(mult or 1))
        else:
            for term in re.split(r"[.\s]+", text):
                if not term:
                    continue
                m = _SHAPE_TERM.match(term)
                if not m:
                    raise ValueError(f"cannot parse cycle type term {term!r}")
                parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        if not parts:
            raise ValueError(f"empty cycle type {text!r}")
        return cls(tuple(parts))

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def order(self) -> int:
        return reduce(math.lcm, self.parts, 1)

    @property
    def cycle_count(self) -> int:
        return len(self.parts)

    @property
    def is_even(self) -> bool:
        return sum(1 for p in self.parts if p % 2 == 0) % 2 == 0

    def class_size(self) -> int:
        """Size of the Sym_m conjugacy class: m! / prod(b^k_b * k_b!)."""
        denom = 1
        for length in set(self.parts):
            k = self.parts.count(length)
            denom *= length**k * factorial(k)
        return factorial(self.m) // denom

    def padded(self, m: int) -> "CycleType":
        """Pad with fixed points up to degree m."""
        if self.m > m:
            raise ValueError(f"cycle type {self} exceeds degree {m}")
        return CycleType(self.parts + (1,) * (m - self.m))

    def __str__(self) -> str:
        out = []
        for length in sorted(set(self.parts), reverse=True):
            k = self.parts.count(length)
            out.append(f"({length})" + (f"^{k}" if k > 1 else ""))
        return "".join(out)


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(_cycle_lengths(p.images)))


def cycle_types_of_order(
    m: int, n: int, *, even_only: bool = False, dividing: bool = False
) -> list[CycleType]:
    """All cycle types on m points whose element order is exactly n.

    With dividing=True the order need only divide n.  With even_only=True
    only types of even permutations (even count of even-length parts) are
    kept.  Returned sorted by parts tuple, largest first.
    """
    divisors = [d for d in range(1, min(m, n) + 1) if n % d == 0]
    found: list[CycleType] = []

    def rec(remaining: int, max_part: int, chosen: list[int]):
        if remaining == 0:
            if not dividing and reduce(math.lcm, chosen, 1) != n:
                return
            if even_only and sum(1 for p in chosen if p % 2 == 0) % 2:
                return
            found.append(CycleType(tuple(chosen)))
            return
        for d in reversed(divisors):
            if d > max_part or d > remaining:
                continue
            chosen.append(d)
            rec(remaining - d, d, chosen)
            chosen.pop()

    rec(m, m, [])
    return sorted(found, key=lambda t: t.parts, reverse=True)


def lex_min_of_type(m: int, ct: CycleType) -> Permutation:
    """The lexicographically smallest (by image tuple) permutation of type ct.

    Cycles are laid on consecutive blocks of points in increasing length
    order; each cycle maps its block cyclically upward.  Shorter cycles
    first is forced: closing a cycle writes the block's smallest point,
    which beats any continuation.
    """
    if ct.m != m:
        raise ValueError(f"type {ct} has degree {ct.m}, expected {m}")
    images = list(range(m))
    pos = 0
    for length in sorted(ct.parts):
        if length > 1:
            for i in range(pos, pos + length - 1):
                images[i] = i + 1
            images[pos + length - 1] = pos
        pos += length
    return Permutation(images)


def _class_images(m: int, parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All image tuples of cycle type `parts` on m points, sorted."""
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    distinct = sorted(counts)
    out: list[tuple[int, ...]] = []
    images = list(range(m))

    def rec(points: tuple[int, ...]):
        if not points:
            out.append(tuple(images))
            return
        leader, rest = points[0], points[1:]
        for length in distinct:
            if counts[length] == 0:
                continue
            counts[length] -= 1
            if length == 1:
                images[leader] = leader
                rec(rest)
            else:
                for arm in itertools.permutations(rest, length - 1):
                    images[leader] = arm[0]
                    for i in range(length - 2):
                        images[arm[i]] = arm[i + 1]
                    images[arm[-1]] = leader
                    armset = set(arm)
                    rec(tuple(p for p in rest if p not in armset))
            counts[length] += 1

    rec(tuple(range(m)))
    out.sort()
    return out


def enumerate_class(m: int, ct: CycleType):
    """Yield every permutation of cycle type ct exactly once, lexicographically."""
    if ct.m != m:
        raise ValueError(f"type {ct} has degree {ct.m}, expected {m}")
    for images in _class_images(m, ct.parts):
        yield Permutation(images)


# ---------------------------------------------------------------------------
# Schreier-Sims stabilizer chain


def _mul(p, q):
    return tuple(q[i] for i in p)


def _inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _bsgs_order(gens: list[tuple[int, ...]], m: int) -> int:
    ident = tuple(range(m))
    strong = [g for g in gens if g != ident]
    if not strong:
        return 1
    base: list[int] = []
    for g in strong:
        if all(g[x] == x for x in base):
            base.append(next(x for x in range(m) if g[x] != x))
    orbits: list[dict] = [None] * len(base)

    def level_gens(i):
        prefix = base[:i]
        return [g for g in strong if all(g[x] == x for x in prefix)]

    def rebuild(i):
        trans = {base[i]: ident}
        queue = deque([base[i]])
        gl = level_gens(i)
        while queue:
            a = queue.popleft()
            ta = trans[a]
            for g in gl:
                b = g[a]
                if b not in trans:
                    trans[b] = _mul(ta, g)
                    queue.append(b)
        orbits[i] = trans

    def strip(p, i):
        while i < len(base):
            u = orbits[i].get(p[base[i]])
            if u is None:
                return p, i
            p = _mul(p, _inv(u))
            i += 1
        return p, len(base)

    for i in range(len(base)):
        rebuild(i)

    i = len(base) - 1
    while i >= 0:
        rebuild(i)
        added = False
        for x in sorted(orbits[i]):
            tx = orbits[i][x]
            for s in level_gens(i):
                sg = _mul(_mul(tx, s), _inv(orbits[i][s[x]]))
                if sg == ident:
                    continue
                residue, j = strip(sg, i + 1)
                if residue == ident:
                    continue
                strong.append(residue)
                if j == len(base):
                    base.append(next(z for z in range(m) if residue[z] != z))
                    orbits.append(None)
                for k in range(i + 1, j + 1):
                    rebuild(k)
                i = j
                added = True
                break
            if added:
                break
        if not added:
            i -= 1
    return math.prod(len(t) for t in orbits)


def group_order(gens) -> int:
    """Exact order of the permutation group generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    m = gens[0].degree
    if any(g.degree != m for g in gens):
        raise ValueError("generators act on different degrees")
    return _bsgs_order([g.images for g in gens], m)


def _is_transitive(imgs_a, imgs_b, m: int) -> bool:
    seen = bytearray(m)
    seen[0] = 1
    queue = [0]
    count = 1
    while queue:
        x = queue.pop()
        for g in (imgs_a, imgs_b):
            y = g[x]
            if not seen[y]:
                seen[y] = 1
                count += 1
                queue.append(y)
    return count == m


# ---------------------------------------------------------------------------
# Generation search in Alt_m


@dataclass(frozen=True)
class GenerationWitness:
    """A pair (A, B) in Alt_m with |A| = a, |B| = b, |AB| = c and <A,B> = Alt_m."""

    gen_a: Permutation
    gen_b: Permutation
    orders: tuple[int, int, int]
    shapes: tuple[CycleType, CycleType, CycleType]

    @property
    def product(self) -> Permutation:
        return self.gen_a * self.gen_b

    def validate(self) -> bool:
        a, b, c = self.orders
        prod = self.product
        m = self.gen_a.degree
        return (
            self.gen_a.order() == a
            and self.gen_b.order() == b
            and prod.order() == c
            and cycle_type(self.gen_a) == self.shapes[0]
            and cycle_type(self.gen_b) == self.shapes[1]
            and cycle_type(prod) == self.shapes[2]
            and group_order([self.gen_a, self.gen_b]) == factorial(m) // 2
        )

    def as_dict(self) -> dict:
        return {
            "A": list(self.gen_a.images),
            "B": list(self.gen_b.images),
            "orders": list(self.orders),
            "shapes": [str(s) for s in self.shapes],
        }


@dataclass(frozen=True)
class NotFound:
    """Negative search result, with the reason exhaustion stopped."""

    reason: str


def _validated_hint(m, hint, allowed, which):
    if hint.m != m:
        hint = hint.padded(m)
    if hint.parts not in {t.parts for t in allowed}:
        raise ValueError(f"shape hint {hint} is not an even cycle type for the {which} slot")
    return hint


def find_generating_triple(
    m: int,
    tr: Triple,
    shape_hint: tuple[CycleType, CycleType, CycleType] | None = None,
    *,
    order_dividing: bool = False,
) -> GenerationWitness | NotFound:
    """Search Alt_m for A, B with |A| = a, |B| = b, |AB| = c and <A,B> = Alt_m.

    A ranges over one representative per even class of order a (the
    lexicographically minimal element; up to simultaneous conjugation one
    representative suffices).  B ranges over every element of every even
    class of order b, in lexicographic order, so the first validated hit is
    the lexicographically minimal witness.  A shape_hint pins the three
    classes to search.  Candidates are discarded early when the product
    order is wrong, when Scott's bound sum of cycle counts > m + 2 rules
    out transitivity, or when <A, B> is not transitive; survivors are
    settled by the exact stabilizer-chain order.
    """
    if m < 5:
        raise ValueError("need m >= 5")
    a, b, c = tr.orders
    types_a = cycle_types_of_order(m, a, even_only=True, dividing=order_dividing)
    types_b = cycle_types_of_order(m, b, even_only=True, dividing=order_dividing)
    types_c = cycle_types_of_order(m, c, even_only=True, dividing=order_dividing)
    if shape_hint is not None:
        ha, hb, hc = shape_hint
        types_a = [_validated_hint(m, ha, types_a, "A")]
        types_b = [_validated_hint(m, hb, types_b, "B")]
        types_c = [_validated_hint(m, hc, types_c, "AB")]
    if not (types_a and types_b and types_c):
        return NotFound("no elements of required order")

    target = factorial(m) // 2
    allowed_c = {t.parts: t.cycle_count for t in types_c}
    scott_cap = m + 2

    reps = sorted(lex_min_of_type(m, t).images for t in types_a)
    b_imgs: list[tuple[int, ...]] = []
    for t in types_b:
        b_imgs.extend(_class_images(m, t.parts))
    b_imgs.sort()

    for a_img in reps:
        count_a = len(_cycle_lengths(a_img))
        for b_img in b_imgs:
            prod = tuple(b_img[i] for i in a_img)
            lengths = _cycle_lengths(prod)
            parts = tuple(sorted(lengths, reverse=True))
            count_c = allowed_c.get(parts)
            if count_c is None:
                continue
            if count_a + len(_cycle_lengths(b_img)) + count_c > scott_cap:
                continue
            if not _is_transitive(a_img, b_img, m):
                continue
            if _bsgs_order([a_img, b_img], m) == target:
                ga, gb = Permutation(a_img), Permutation(b_img)
                return GenerationWitness(
                    ga, gb, (a, b, c), (cycle_type(ga), cycle_type(gb), CycleType(parts))
                )
    return NotFound("exhausted all class pairs")


def scott_min_sum(m: int, tr: Triple) -> int | None:
    """Lower bound for the total cycle count of any (a, b, c) triple in Alt_m.

    Scott's bound: permutations h1, h2, h3 with h1 h2 h3 = 1 generating a
    transitive group on m points have cycle counts summing to at most m + 2.
    The first term minimizes over even classes of order exactly a (the
    classes the generation search draws A from); the other two terms relax
    to all Sym_m classes of the exact order, so the result is a lower bound
    for the constrained minimum and still proves non-generation whenever it
    exceeds m + 2.  Returns None when some order has no even cycle type at
    all, i.e. Alt_m has no element of that order.

    The parity condition (count sum congruent to m mod 2) needs no separate
    check for class triples inside Alt_m: an even permutation on m points
    always has cycle count congruent to m mod 2.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    a, b, c = tr.orders
    even_types = [cycle_types_of_order(m, n, even_only=True) for n in (a, b, c)]
    if not all(even_types):
        return None
    term_a = min(t.cycle_count for t in even_types[0])
    term_b = min(t.cycle_count for t in cycle_types_of_order(m, b))
    term_c = min(t.cycle_count for t in cycle_types_of_order(m, c))
    return term_a + term_b + term_c


@dataclass(frozen=True)
class NonGenerated:
    """Proof that Alt_m is not (a, b, c)-generated, with the route taken."""

    method: str  # "scott" | "no-elements" | "exhaustive"
    detail: dict

    def as_dict(self) -> dict:
        return {"result": "NonGenerated", "method": self.method, **self.detail}


@dataclass(frozen=True)
class Refuted:
    """Non-generation refuted: a generating witness exists."""

    witness: GenerationWitness

    def as_dict(self) -> dict:
        return {"result": "Refuted", "witness": self.witness.as_dict()}


def prove_non_generation(m: int, tr: Triple) -> NonGenerated | Refuted:
    """Prove Alt_m is not (a, b, c)-generated, or refute with a witness.

    Tries the cheap routes first: no even cycle type of some required
    order, then Scott's bound; otherwise falls back to the exhaustive class
    search of find_generating_triple.
    """
    if m < 5:
        raise ValueError("need m >= 5")
    bound = scott_min_sum(m, tr)
    if bound is None:
        return NonGenerated("no-elements", {"reason": "some order has no even cycle type"})
    if bound > m + 2:
        return NonGenerated("scott", {"min_sum": bound, "bound": m + 2})
    found = find_generating_triple(m, tr)
    if isinstance(found, NotFound):
        return NonGenerated("exhaustive", {"reason": found.reason})
    return Refuted(found)
