"""Ladder criterion and the top-level saturation decision.

A hyperbolic triangle group T is saturated with finite simple quotients of
type X exactly when some simple group of type X admits a Zariski dense,
non-rigid representation of T.  Density is reached by climbing a chain of
principal embeddings A1 < Y < ... < X in which the principal H^1 dimension
strictly increases at every step; strictness is the computable criterion,
and equality anywhere leaves the question open.  The orchestrator `decide`
falls back to the two non-principal deformation methods (the
SO(2k+1) x SO(2r-2k-1) embedding for type D and the alternating-group
method for types B and D) before reporting Unknown or, when even the
principal H^1 vanishes, RigidZero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import DynkinType
from .weil import Triple, h1_principal


class Status:
    SATURATED = "Saturated"
    UNKNOWN = "Unknown"
    RIGID_ZERO = "RigidZero"


@dataclass(frozen=True)
class Verdict:
    """A saturation decision with a replayable certificate."""

    status: str
    method: str
    certificate: dict = field(default_factory=dict)

    @property
    def is_saturated(self) -> bool:
        return self.status == Status.SATURATED

    def as_dict(self) -> dict:
        return {"status": self.status, "method": self.method, "certificate": self.certificate}


_A1 = DynkinType("A", 1)

#: Types whose principal PGL_2 image is already a maximal subgroup.
_DIRECT_FAMILIES = {"G", "F"}


def classify_ladder(t: DynkinType) -> tuple[DynkinType, ...]:
    """Chain of principal embeddings from A1 up to ``t``.

    One step: A2, B_r (r >= 4), C_r (r >= 2), G2, F4, E7, E8 (rank-2 type B
    is handled like C2, the same root system).  Two steps through a maximal
    subgroup: A_r via B_{r/2} or C_{(r+1)/2} (r >= 3, r != 6), B3 via G2,
    D_r via B_{r-1} (r >= 5), E6 via F4.  Three steps: D4 and A6 via the
    expanded B3 chain.
    """
    fam, r = t.family, t.rank
    if t == _A1:
        raise ValueError("A1 has no ladder: T is locally rigid in PGL_2")
    if fam == "A":
        if r == 2:
            return (_A1, t)
        if r == 6:
            return (_A1, DynkinType("G", 2), DynkinType("B", 3), t)
        mid = DynkinType("B", r // 2) if r % 2 == 0 else DynkinType("C", (r + 1) // 2)
        return (_A1, mid, t)
    if fam == "B":
        if r == 3:
            return (_A1, DynkinType("G", 2), t)
        return (_A1, t)
    if fam == "C":
        return (_A1, t)
    if fam == "D":
        if r == 4:
            return (_A1, DynkinType("G", 2), DynkinType("B", 3), t)
        return (_A1, DynkinType("B", r - 1), t)
    if fam == "E":
        if r == 6:
            return (_A1, DynkinType("F", 4), t)
        return (_A1, t)
    if fam in _DIRECT_FAMILIES:
        return (_A1, t)
    raise ValueError(f"no ladder known for {t}")


def ladder_verdict(t: DynkinType, tr: Triple) -> Verdict:
    """Saturated iff the principal H^1 strictly increases along the ladder.

    The A1 base contributes 0 (T is locally rigid in PGL_2, which also
    means type A1 itself is never saturated and reports RigidZero).  Any
    equality in the chain leaves the verdict Unknown.
    """
    if t == _A1:
        return Verdict(
            Status.RIGID_ZERO,
            "ladder",
            {"reason": "locally rigid in PGL_2", "h1": 0, "triple": list(tr.orders)},
        )
    path = classify_ladder(t)
    chain = [0] + [h1_principal(rung, tr).h1 for rung in path[1:]]
    cert = {
        "path": [str(rung) for rung in path],
        "h1_chain": chain,
        "triple": list(tr.orders),
    }
    for i in range(len(chain) - 1):
        if not chain[i] < chain[i + 1]:
            cert["failed_at"] = [str(path[i]), str(path[i + 1])]
            cert["reason"] = "no strict H^1 increase"
            return Verdict(Status.UNKNOWN, "ladder", cert)
    return Verdict(Status.SATURATED, "ladder", cert)


def decide(t: DynkinType, tr: Triple, *, alt_search: bool = False) -> Verdict:
    """Combine the three methods, first Saturated verdict wins.

    Order: ladder, then the SO x SO embedding sweep (type D only), then the
    alternating-group method (types B of rank >= 3 and D of rank >= 4;
    by default only triples with a built-in generating pair are tried,
    alt_search=True enables the exhaustive class search).  If nothing
    certifies saturation the verdict is Unknown, or RigidZero when the
    principal H^1 itself vanishes.
    """
    from . import altmethod, bibi, tables

    if t == _A1:
        return Verdict(
            Status.RIGID_ZERO,
            "rigid",
            {"reason": "locally rigid in PGL_2", "h1_principal": 0},
        )

    stages = []

    def won(verdict: Verdict) -> Verdict:
        stages.append({"method": verdict.method, "status": verdict.status,
                       "certificate": verdict.certificate})
        return Verdict(verdict.status, verdict.method, {"stages": stages})

    lv = ladder_verdict(t, tr)
    if lv.is_saturated:
        return won(lv)
    stages.append({"method": "ladder", "status": lv.status, "certificate": lv.certificate})

    if t.family == "D":
        bv = bibi.search_bibi(t.rank, tr)
        if bv.is_saturated:
            return won(bv)
        stages.append({"method": "bibi", "status": bv.status, "certificate": bv.certificate})
    else:
        stages.append({"method": "bibi", "status": "skipped", "reason": "type is not D_r"})

    alt_m = None
    if t.family == "B" and t.rank >= 3:
        alt_m = 2 * t.rank + 2
    elif t.family == "D":
        alt_m = 2 * t.rank + 1
    if alt_m is None:
        stages.append({"method": "alt", "status": "skipped",
                       "reason": "type is not B_r (r >= 3) or D_r"})
    elif not alt_search and tables.generating_pair_hint(alt_m, tr.orders) is None:
        stages.append({"method": "alt", "status": "skipped",
                       "reason": f"no built-in generating pair for Alt_{alt_m} "
                                 "and search disabled"})
    else:
        av = altmethod.alt_saturation_check(alt_m, tr, search=alt_search)
        if av.is_saturated:
            return won(av)
        stages.append({"method": "alt", "status": av.status, "certificate": av.certificate})

    h1 = h1_principal(t, tr).h1
    if h1 == 0:
        stages.append({"method": "rigid", "status": Status.RIGID_ZERO,
                       "certificate": {"h1_principal": 0}})
        return Verdict(Status.RIGID_ZERO, "rigid", {"stages": stages})
    return Verdict(Status.UNKNOWN, "none", {"stages": stages, "h1_principal": h1})
