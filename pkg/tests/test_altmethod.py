import random

import pytest

from trisat import (
    AltConfig,
    CycleType,
    Permutation,
    Status,
    Triple,
    alt_saturation_check,
    h1_alt,
    lex_min_of_type,
    perm_eigenvalues_on_standard,
)
from trisat.tables import ALT_GEN_ROWS

from oracles import fixed_dim_numeric, standard_module_matrix


def shapes(m, *texts):
    return tuple(CycleType.parse(t).padded(m) for t in texts)


class TestAltConfig:
    def test_targets(self):
        assert str(AltConfig(8).target) == "B3"
        assert str(AltConfig(9).target) == "D4"
        assert str(AltConfig(11).target) == "D5"
        assert AltConfig(9).dim_v == 28
        assert AltConfig(8).dim_v == 21

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            AltConfig(6)

    def test_m7_target_outside_bd(self):
        with pytest.raises(ValueError):
            AltConfig(7).target


class TestStandardModuleEigenvalues:
    def test_three_cubes(self):
        ev = perm_eigenvalues_on_standard(CycleType.parse("3^3"))
        assert (ev.modulus, ev.mults) == (3, {0: 2, 1: 3, 2: 3})

    def test_seven_cycle(self):
        ev = perm_eigenvalues_on_standard(CycleType.parse("7.1^2"))
        assert ev.modulus == 7
        assert ev.mults == {0: 2, 1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1}

    def test_identity(self):
        for m in (5, 9):
            ev = perm_eigenvalues_on_standard(CycleType((1,) * m))
            assert ev.mults == {0: m - 1}

    def test_shared_roots_are_merged(self):
        # -1 arrives from both the 4-cycle and the 2-cycle
        ev = perm_eigenvalues_on_standard(CycleType.parse("4.3.2"))
        assert ev.modulus == 12
        assert ev.mult(6) == 2

    def test_invariants(self):
        rng = random.Random(424)
        for _ in range(40):
            m = rng.randint(4, 14)
            parts = _random_partition(rng, m)
            ev = perm_eigenvalues_on_standard(CycleType(tuple(parts)))
            assert ev.dimension == m - 1
            assert all(ev.mult(j) == ev.mult(ev.modulus - j) for j in ev.mults)

    def test_fixed_dims_match_numeric_oracle(self):
        rng = random.Random(977)
        from trisat import so_fixed_dim
        for _ in range(40):
            m = rng.randint(7, 14)
            parts = _random_partition(rng, m)
            ct = CycleType(tuple(parts))
            exact = so_fixed_dim(perm_eigenvalues_on_standard(ct))
            perm = _random_class_member(rng, m, ct)
            assert exact == fixed_dim_numeric(standard_module_matrix(perm))


def _random_partition(rng, m):
    parts = []
    left = m
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return parts


def _random_class_member(rng, m, ct):
    base = lex_min_of_type(m, ct)
    imgs = list(range(m))
    rng.shuffle(imgs)
    sigma = Permutation(imgs)
    return sigma.inverse() * base * sigma


class TestH1Alt:
    def test_alt9_337(self):
        rep = h1_alt(9, shapes(9, "3^3", "3^3", "7.1^2"), Triple(3, 3, 7))
        assert rep.dim_g == 28
        assert rep.fixed_dims == (10, 10, 4)
        assert rep.h1 == 4

    def test_alt9_2315_positive(self):
        rep = h1_alt(9, shapes(9, "2^4.1", "3^3", "5.3.1"), Triple(2, 3, 15))
        assert rep.h1 > 0

    def test_alt11_2311(self):
        rep = h1_alt(11, shapes(11, "2^4.1^3", "3^3.1^2", "11"), Triple(2, 3, 11))
        assert rep.dim_g == 45  # target D5
        assert rep.h1 == 4

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            h1_alt(9, shapes(9, "3^3", "3^3", "9"), Triple(3, 3, 7))

    def test_every_generating_row_positive_and_oracle_exact(self):
        for m, orders, *shape_strs in ALT_GEN_ROWS:
            triple = Triple(*orders)
            row_shapes = shapes(m, *shape_strs)
            rep = h1_alt(m, row_shapes, triple)
            assert rep.h1 > 0, (m, orders)
            rng = random.Random(m * 1000 + orders[2])
            for ct, expected in zip(row_shapes, rep.fixed_dims):
                perm = _random_class_member(rng, m, ct)
                assert fixed_dim_numeric(standard_module_matrix(perm)) == expected


class TestAltSaturationCheck:
    def test_tabulated_rows(self):
        v = alt_saturation_check(9, Triple(3, 3, 9))
        assert v.status == Status.SATURATED and v.certificate["target"] == "D4"
        v = alt_saturation_check(8, Triple(3, 3, 15))
        assert v.status == Status.SATURATED and v.certificate["target"] == "B3"

    def test_not_generated_is_unknown(self):
        v = alt_saturation_check(8, Triple(2, 3, 7))
        assert v.status == Status.UNKNOWN
        assert "no generating pair" in v.certificate["reason"]

    def test_search_disabled(self):
        v = alt_saturation_check(9, Triple(2, 3, 7), search=False)
        assert v.status == Status.UNKNOWN
        assert "search disabled" in v.certificate["reason"]
