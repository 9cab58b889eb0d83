"""Brute-force oracles, cross-checked against closed forms and against the
constructive extension path.

Laws under test:
1. The exhaustive ball-coloring search refutes small separation instances
   outright, and on the integer line the counting bound refutes the same
   instances by arithmetic alone — two independent proofs of one fact.
2. A witness outcome really is a witness (the degenerate scale-0 instance),
   and the counting bound agrees there too by NOT refuting.
3. Budget exhaustion is reported as inconclusive, never as a refusal.
4. The extension oracle refuses exactly the patterns that cannot be
   extended on the ball: the two-point parity fixture on two colors, and
   its colorable twin.
5. Witnesses returned by the oracle extend the input and are members.
6. Greedy extension and the oracle agree on sampled members when the
   palette dominates the graph degree.
7. The rare-color audit counts one-shot colors and flags repeats.
"""

from fractions import Fraction
import random

import pytest

from shiftcolor.groups import FreeAbelian, FreeGroup
from shiftcolor.ideals import (
    DistanceConstrained,
    NotUniversal,
    ProperColoring,
    grow_random_member,
)
from shiftcolor.oracles import (
    INCONCLUSIVE,
    REFUTED,
    WITNESS,
    extension_oracle,
    infty_check,
    infty_counting_bound,
    rare_color_check,
)
from shiftcolor.patterns import PartialColoring
from shiftcolor.radii import INF

Z1 = FreeAbelian(1)
F2 = FreeGroup(2)


class TestBallColoringSearch:
    @pytest.mark.parametrize("d,c", [((1,), 0), ((1, 3), 1), ((1, 3, 7), 2)])
    def test_refuted_on_the_line(self, d, c):
        report = infty_check(Z1, d, c)
        assert report.outcome == REFUTED
        assert report.valid_count == 0
        assert report.witness is None
        assert report.nodes <= report.budget

    def test_refuted_on_the_free_group(self):
        # five points pairwise within distance 2 and a single color of gap 2
        report = infty_check(F2, (1,), 0)
        assert report.outcome == REFUTED
        assert report.detail["ball_size"] == 5

    def test_degenerate_witness(self):
        report = infty_check(Z1, (0,), 0)
        assert report.outcome == WITNESS
        assert report.witness == PartialColoring(Z1, {0: 0})
        assert report.valid_count == 1

    def test_budget_yields_inconclusive(self):
        report = infty_check(Z1, (1, 3, 7), 2, node_budget=10)
        assert report.outcome == INCONCLUSIVE
        assert not report.conclusive
        assert report.witness is None

    def test_input_validation(self):
        with pytest.raises(ValueError):
            infty_check(Z1, (1, 3), 2)
        with pytest.raises(ValueError):
            infty_check(Z1, (3, 1), 0)

    def test_deterministic(self):
        a = infty_check(Z1, (1, 3), 1)
        b = infty_check(Z1, (1, 3), 1)
        assert a.to_jsonable() == b.to_jsonable()


class TestCountingBound:
    def test_capacities_frozen(self):
        out = infty_counting_bound((1, 3), 1)
        assert out == {
            "ball_size": 7,
            "capacities": [3, 1],
            "total_capacity": 4,
            "refuted": True,
        }

    def test_three_scales(self):
        out = infty_counting_bound((1, 3, 7), 2)
        assert out["capacities"] == [5, 3, 1]
        assert out["total_capacity"] == 9 and out["ball_size"] == 15
        assert out["refuted"]

    def test_agrees_with_search_on_witness_case(self):
        assert not infty_counting_bound((0,), 0)["refuted"]
        assert infty_check(Z1, (0,), 0).outcome == WITNESS

    def test_validation(self):
        with pytest.raises(ValueError):
            infty_counting_bound((1,), 1)


class TestExtensionOracle:
    def test_parity_refusal(self):
        """Two colors on the line force alternation, so equal colors three
        apart pass the pairwise membership check yet cannot be extended."""
        pc2 = ProperColoring(Z1, 2)
        phi = PartialColoring(Z1, {0: 0, 3: 0})
        assert pc2.contains(phi)
        report = extension_oracle(pc2, phi, 3)
        assert report.outcome == REFUTED
        assert report.valid_count == 0

    def test_parity_witness(self):
        pc2 = ProperColoring(Z1, 2)
        phi = PartialColoring(Z1, {0: 0, 3: 1})
        report = extension_oracle(pc2, phi, 3)
        assert report.outcome == WITNESS
        w = report.witness
        assert sorted(w.domain()) == list(range(-3, 7))
        assert w[0] == 0 and w[3] == 1
        assert pc2.contains(w)

    def test_empty_pattern_is_its_own_witness(self):
        pc2 = ProperColoring(Z1, 2)
        report = extension_oracle(pc2, pc2.empty(), 4)
        assert report.outcome == WITNESS
        assert report.search_space == 1 and report.valid_count == 1
        assert len(report.witness) == 0

    def test_budget_yields_inconclusive(self):
        pc2 = ProperColoring(Z1, 2)
        phi = PartialColoring(Z1, {0: 0, 3: 0})
        report = extension_oracle(pc2, phi, 3, node_budget=3)
        assert report.outcome == INCONCLUSIVE
        assert report.witness is None

    def test_non_member_rejected(self):
        pc2 = ProperColoring(Z1, 2)
        with pytest.raises(ValueError):
            extension_oracle(pc2, PartialColoring(Z1, {0: 0, 1: 0}), 2)

    def test_infinite_radius_rejected(self):
        pc2 = ProperColoring(Z1, 2)
        with pytest.raises(ValueError):
            extension_oracle(pc2, PartialColoring(Z1, {0: 0}), INF)

    def test_agrees_with_greedy_on_the_line(self):
        """With more colors than the graph degree both paths must succeed;
        the oracle's witness doubles as the certificate."""
        pc3 = ProperColoring(Z1, 3)
        for seed in range(60):
            phi = grow_random_member(pc3, random.Random(seed), size=5, radius=6)
            report = extension_oracle(pc3, phi, 5)
            assert report.outcome == WITNESS
            for e, c in phi.entries.items():
                assert report.witness[e] == c

    def test_agrees_with_greedy_on_the_free_group(self):
        pc5 = ProperColoring(F2, 5)
        for seed in range(20):
            phi = grow_random_member(pc5, random.Random(seed), size=4, radius=3)
            report = extension_oracle(pc5, phi, 2)
            assert report.outcome == WITNESS
            assert pc5.contains(report.witness)

    def test_refusal_matches_counting_bound(self):
        """The separation instance (1, 3) at two colors: the exhaustive
        search refutes it, the counting bound refutes it, and the extension
        oracle refuses to fill the scale-1 ball with those gap rules."""
        dc = DistanceConstrained(Z1, (1, 3, 7), (0, 0, 0))
        phi = PartialColoring(Z1, {0: 0})
        report = extension_oracle(dc, phi, 3, palette_max=1)
        assert report.outcome == REFUTED
        assert infty_check(Z1, (1, 3), 1).outcome == REFUTED
        assert infty_counting_bound((1, 3), 1)["refuted"]

    def test_not_universal_kind_supported(self):
        nu = NotUniversal(Z1, (1,), (3,))
        phi = PartialColoring(Z1, {0: 0})
        report = extension_oracle(nu, phi, 1)
        # colors within distance 2 of the center may not repeat, and there
        # is no larger color: the one-color palette cannot fill the ball
        assert report.outcome == REFUTED


class TestRareColorAudit:
    def test_one_shot_repeat_flagged(self):
        dc = DistanceConstrained(Z1, (1, 3), (2, INF))
        omega = PartialColoring(Z1, {0: 1, 100: 1})
        report = rare_color_check(dc, omega)
        assert report.violations == [{"color": 1, "occurrences": 2}]
        assert not report.membership_ok
        assert not report.ok

    def test_one_shot_single_use_clean(self):
        dc = DistanceConstrained(Z1, (1, 3), (2, INF))
        omega = PartialColoring(Z1, {0: 1, 5: 0, 9: 0})
        report = rare_color_check(dc, omega)
        assert report.ok
        assert report.counts == {0: 2, 1: 1}

    def test_all_finite_heights_never_flag(self):
        dc = DistanceConstrained(Z1, (1, 3), (1, 2))
        omega = PartialColoring(Z1, {0: 0, 10: 0, 5: 1, 30: 1})
        report = rare_color_check(dc, omega)
        assert report.membership_ok and report.violations == []

    def test_type_checked(self):
        with pytest.raises(TypeError):
            rare_color_check(ProperColoring(Z1, 2), PartialColoring(Z1, {}))
