"""Cohomology dimension formulas for triangle-group representations.

For a hyperbolic triangle group T = <x, y, z : x^a = y^b = z^c = xyz = 1>
acting on the Lie algebra g of a simple group via Ad o rho, Weil's formulas
give

    dim Z^1 = 2 dim g + i* - (dim g^x + dim g^y + dim g^z)
    dim H^1 =   dim g + i + i* - (dim g^x + dim g^y + dim g^z)

where i, i* are the invariant dimensions on g and its dual.  For the
representation induced from the principal homomorphism PGL_2 -> G the fixed
spaces are exponent sums, dim g^x = sum_j (1 + 2*floor(e_j / a)), and the
invariants vanish.  The same exponent sum equals the codimension of the
subvariety of elements of order dividing a; for classical types that
codimension also has Lawther's closed form, which codim_order_variety
evaluates as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import DynkinType, adjoint_dim, exponents


@dataclass(frozen=True)
class Triple:
    """An ordered hyperbolic triple (a, b, c), normalized to a <= b <= c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        vals = (self.a, self.b, self.c)
        if not all(isinstance(v, int) and v >= 2 for v in vals):
            raise ValueError(f"triple entries must be integers >= 2, got {vals}")
        a, b, c = sorted(vals)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        # hyperbolic: 1/a + 1/b + 1/c < 1, exactly
        if b * c + a * c + a * b >= a * b * c:
            raise ValueError(f"({a},{b},{c}) is not hyperbolic")

    @classmethod
    def parse(cls, text: str) -> "Triple":
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def orders(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class WeilInvariants:
    """Invariant dimensions i (on g) and i* (on g*)."""

    i: int = 0
    i_star: int = 0


@dataclass(frozen=True)
class CohomologyReport:
    """Z^1 and H^1 dimensions together with the data that produced them."""

    dim_g: int
    fixed_dims: tuple[int, int, int]
    z1: int
    h1: int
    invariants: WeilInvariants = field(default_factory=WeilInvariants)

    def as_dict(self) -> dict:
        return {
            "dim_g": self.dim_g,
            "fixed": list(self.fixed_dims),
            "z1": self.z1,
            "h1": self.h1,
        }


@dataclass(frozen=True)
class LawtherDecomposition:
    """Division data h = alpha*a + beta plus the two parity flags epsilon."""

    alpha: int
    beta: int
    eps_a: int
    eps_alpha: int


def principal_fixed_dim(t: DynkinType, n: int) -> int:
    """Fixed-space dimension of an order-n generator under the principal action.

    Equals sum_j (1 + 2*floor(e_j / n)) over the exponents of ``t``.
    """
    if n < 2:
        raise ValueError(f"generator order must be >= 2, got {n}")
    return sum(1 + 2 * (e // n) for e in exponents(t))


def weil_h1(
    dim_g: int,
    fixed: tuple[int, int, int],
    inv: WeilInvariants = WeilInvariants(),
) -> CohomologyReport:
    """Apply Weil's Z^1/H^1 formulas to explicit fixed-space dimensions.

    Callers in this package always pass i = i* = 0: every action fed into
    the formula here has trivial invariants (dense or principal image in a
    simple adjoint group).
    """
    if any(f < 0 or f > dim_g for f in fixed):
        raise ValueError(f"fixed dims {fixed} out of range [0, {dim_g}]")
    total = sum(fixed)
    z1 = 2 * dim_g + inv.i_star - total
    h1 = dim_g + inv.i + inv.i_star - total
    if h1 < 0:
        raise ValueError(f"negative H^1 = {h1}: inconsistent fixed dims {fixed} for dim {dim_g}")
    return CohomologyReport(dim_g, tuple(fixed), z1, h1, inv)


def h1_principal(t: DynkinType, tr: Triple) -> CohomologyReport:
    """H^1 of T on g for the representation through the principal PGL_2.

    dim H^1 = dim g - sum over the three generator orders of the exponent
    fixed-space sums; the invariants vanish for the principal action.
    """
    fixed = tuple(principal_fixed_dim(t, n) for n in tr.orders)
    return weil_h1(adjoint_dim(t), fixed)


def epi_dim_bound(t: DynkinType, tr: Triple) -> int:
    """Upper bound on dim Epi(T, G) - dim G: the principal H^1 dimension.

    This is the quantity every ladder comparison consumes on its left side.
    """
    return h1_principal(t, tr).h1


def lawther_decomposition(h: int, a: int) -> LawtherDecomposition:
    """Write h = alpha*a + beta with 0 <= beta < a and record parities."""
    alpha, beta = divmod(h, a)
    return LawtherDecomposition(alpha, beta, a % 2, alpha % 2)


def lawther_closed_form(t: DynkinType, a: int) -> int:
    """Lawther's closed form for codim G_[a] in the classical families."""
    r = t.rank
    if t.family == "A":
        d = lawther_decomposition(r + 1, a)
        return d.alpha**2 * a + d.beta * (2 * d.alpha + 1) - 1
    if t.family in ("B", "C"):
        d = lawther_decomposition(2 * r, a)
        return (d.alpha**2 * a + d.beta * (2 * d.alpha + 1)) // 2 + d.eps_a * ((d.alpha + 1) // 2)
    if t.family == "D":
        d = lawther_decomposition(2 * r - 2, a)
        half = (d.alpha**2 * a + d.beta * (2 * d.alpha + 1)) // 2
        return half + d.eps_a * ((d.alpha + 1) // 2) + d.alpha + 1 - d.eps_alpha
    raise ValueError(f"{t} is not classical")


def codim_order_variety(t: DynkinType, n: int) -> int:
    """Codimension in G of the subvariety of elements of order dividing n.

    Defined for every type by the exponent identity r + 2*sum(floor(e_j/n)),
    which coincides with the principal fixed-space dimension.  For classical
    families the Lawther closed form is evaluated as well and the two are
    required to agree; a mismatch would mean an implementation bug, since
    the two formulas are provably equal.
    """
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    value = principal_fixed_dim(t, n)
    if t.family in ("A", "B", "C", "D"):
        closed = lawther_closed_form(t, n)
        if closed != value:
            raise AssertionError(
                f"Lawther closed form {closed} != exponent sum {value} for {t}, n={n}"
            )
    return value
