import json

import pytest

from trisat import (
    DynkinType,
    Status,
    Triple,
    all_types,
    classify_ladder,
    decide,
    h1_principal,
    ladder_verdict,
)


def T(label):
    return DynkinType.parse(label)


def path(label):
    return [str(x) for x in classify_ladder(T(label))]


class TestClassifyLadder:
    def test_one_step(self):
        assert path("E8") == ["A1", "E8"]
        assert path("A2") == ["A1", "A2"]
        assert path("C2") == ["A1", "C2"]
        assert path("B2") == ["A1", "B2"]  # same root system as C2
        assert path("B7") == ["A1", "B7"]
        assert path("G2") == ["A1", "G2"]
        assert path("F4") == ["A1", "F4"]
        assert path("E7") == ["A1", "E7"]

    def test_two_step(self):
        assert path("A4") == ["A1", "B2", "A4"]
        assert path("A5") == ["A1", "C3", "A5"]
        assert path("A9") == ["A1", "C5", "A9"]
        assert path("B3") == ["A1", "G2", "B3"]
        assert path("D5") == ["A1", "B4", "D5"]
        assert path("D13") == ["A1", "B12", "D13"]
        assert path("E6") == ["A1", "F4", "E6"]

    def test_three_step(self):
        assert path("D4") == ["A1", "G2", "B3", "D4"]
        assert path("A6") == ["A1", "G2", "B3", "A6"]

    def test_a1_has_no_ladder(self):
        with pytest.raises(ValueError):
            classify_ladder(T("A1"))


class TestLadderVerdict:
    def test_saturated(self):
        v = ladder_verdict(T("E8"), Triple(2, 4, 6))
        assert v.status == Status.SATURATED
        assert v.certificate["h1_chain"][0] == 0
        chain = v.certificate["h1_chain"]
        assert all(x < y for x, y in zip(chain, chain[1:]))

    def test_unknown_rows(self):
        assert ladder_verdict(T("A2"), Triple(2, 6, 6)).status == Status.UNKNOWN
        assert ladder_verdict(T("E6"), Triple(2, 4, 6)).status == Status.UNKNOWN
        v = ladder_verdict(T("D5"), Triple(3, 4, 4))
        assert v.status == Status.UNKNOWN
        assert v.certificate["failed_at"] == ["B4", "D5"]

    def test_a1_rigid(self):
        v = ladder_verdict(T("A1"), Triple(2, 3, 7))
        assert v.status == Status.RIGID_ZERO

    def test_b3_chain_encodes_side_conditions(self):
        # b = 3 forces equality at the G2 -> B3 step, (2,b,5) kills 0 < h1(G2)
        assert ladder_verdict(T("B3"), Triple(2, 3, 7)).status == Status.UNKNOWN
        assert ladder_verdict(T("B3"), Triple(2, 4, 5)).status == Status.UNKNOWN
        assert ladder_verdict(T("B3"), Triple(2, 4, 6)).status == Status.SATURATED

    def test_never_saturated_with_zero_h1(self):
        triples = [Triple(a, b, c)
                   for a in range(2, 9) for b in range(a, 9) for c in range(b, 13)
                   if b * c + a * c + a * b < a * b * c]
        for t in all_types(6):
            for tr in triples:
                if h1_principal(t, tr).h1 == 0:
                    assert ladder_verdict(t, tr).status != Status.SATURATED


class TestDecide:
    def test_bibi_wins_for_d5_344(self):
        v = decide(T("D5"), Triple(3, 4, 4))
        assert v.status == Status.SATURATED and v.method == "bibi"
        stages = {s["method"]: s["status"] for s in v.certificate["stages"]}
        assert stages["ladder"] == Status.UNKNOWN

    def test_alt_wins_for_d4_3315(self):
        v = decide(T("D4"), Triple(3, 3, 15))
        assert v.status == Status.SATURATED and v.method == "alt"
        assert v.certificate["stages"][-1]["certificate"]["target"] == "D4"

    def test_rigid_zero(self):
        assert decide(T("C2"), Triple(2, 3, 7)).status == Status.RIGID_ZERO
        assert decide(T("C2"), Triple(2, 3, 8)).status == Status.RIGID_ZERO
        assert decide(T("A1"), Triple(2, 3, 7)).status == Status.RIGID_ZERO

    def test_unknown(self):
        v = decide(T("D4"), Triple(2, 3, 7))
        assert v.status == Status.UNKNOWN
        assert v.certificate["h1_principal"] == 2

    def test_ladder_wins_first(self):
        v = decide(T("E8"), Triple(2, 3, 7))
        assert v.status == Status.SATURATED and v.method == "ladder"

    def test_deterministic_certificates(self):
        one = json.dumps(decide(T("D5"), Triple(3, 4, 4)).as_dict(), sort_keys=True)
        two = json.dumps(decide(T("D5"), Triple(3, 4, 4)).as_dict(), sort_keys=True)
        assert one == two

    def test_saturated_certificate_backs_the_claim(self):
        # strict chain for ladder wins, positive-H^1 witness for alt wins
        v = decide(T("E7"), Triple(2, 3, 7))
        chain = v.certificate["stages"][0]["certificate"]["h1_chain"]
        assert v.method == "ladder" and all(x < y for x, y in zip(chain, chain[1:]))
        v = decide(T("B3"), Triple(3, 3, 15))
        assert v.method == "alt"
        assert v.certificate["stages"][-1]["certificate"]["h1"] > 0
