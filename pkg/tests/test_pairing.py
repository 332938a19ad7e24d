"""Dual pairings: the bilinear form, module actions, and the canonical
multiplier."""

import itertools
from fractions import Fraction

import pytest

from mhag import (DrinfeldPairing, FiniteDimHopf, FiniteDimPairing,
                  GroupPairing, PairingError)
from mhag.crossed import b_embed_left
from mhag.groups import AutPair, IntGroup, PermGroup, TableGroup, identity_aut
from mhag.linear import LinComb

Z2 = TableGroup.cyclic(2)
Z3 = TableGroup.cyclic(3)
Z4 = TableGroup.cyclic(4)
S3 = PermGroup.symmetric(3)


def finite_pairings():
    return [
        GroupPairing(Z4),
        GroupPairing(S3),
        FiniteDimPairing.from_instance(FiniteDimHopf.from_group(Z3)),
        DrinfeldPairing(Z2),
    ]


class TestGroupPairingForm:
    P = GroupPairing(Z4)

    def test_pair_is_point_evaluation(self):
        for p, g in itertools.product(range(4), range(4)):
            expected = Fraction(1 if p == g else 0)
            assert self.P.pair_basis(p, g) == expected

    def test_pair_is_bilinear(self):
        a = self.P.A.lc(1).scale(Fraction(2)).add(self.P.A.lc(3))
        b = self.P.B.lc(1).add(self.P.B.lc(3).scale(Fraction(5)))
        assert self.P.pair(a, b) == Fraction(7)


class TestModuleActions:
    """Closed forms of the four actions for the group pairing:
    functions are translated, group elements are filtered."""

    P = GroupPairing(Z4)

    def test_group_acts_by_right_translation(self):
        # g acting from the left moves the support point p to p * g^-1
        for p, g in itertools.product(range(4), range(4)):
            out = self.P.act("b>>a", self.P.B.lc(g), self.P.A.lc(p))
            assert out == self.P.A.lc((p - g) % 4)

    def test_group_acts_by_left_translation(self):
        for p, g in itertools.product(range(4), range(4)):
            out = self.P.act("a<<b", self.P.B.lc(g), self.P.A.lc(p))
            assert out == self.P.A.lc((p - g) % 4)

    def test_function_acting_on_group_filters(self):
        for p, g in itertools.product(range(4), range(4)):
            expect = self.P.B.lc(g) if p == g else LinComb.zero()
            assert self.P.act("a>>b", self.P.A.lc(p), self.P.B.lc(g)) == expect
            assert self.P.act("b<<a", self.P.A.lc(p), self.P.B.lc(g)) == expect

    def test_unknown_variant_rejected(self):
        with pytest.raises(PairingError):
            self.P.act("a^b", self.P.A.lc(0), self.P.B.lc(0))

    def test_action_units(self):
        c = self.P.act_unit_A([1, 2])
        for g in (1, 2):
            assert self.P.act("a>>b", c, self.P.B.lc(g)) == self.P.B.lc(g)
        e = self.P.act_unit_B([1, 2])
        for p in (1, 2):
            assert self.P.act("b>>a", e, self.P.A.lc(p)) == self.P.A.lc(p)


@pytest.mark.parametrize("P", finite_pairings(), ids=lambda P: P.name)
def test_duality_laws_hold(P):
    labels_a = P.A.basis_labels(None)
    labels_b = P.B.basis_labels(None)
    assert P.check_duality(labels_a, labels_b) is None


def test_duality_laws_hold_on_integer_window():
    P = GroupPairing(IntGroup())
    labels = list(range(-2, 3))
    assert P.check_duality(labels, labels) is None


class TestCanonicalW:
    @pytest.mark.parametrize("P", finite_pairings(), ids=lambda P: P.name)
    def test_w_reproduces_the_pairing(self, P):
        w = P.w
        for la in P.A.basis_labels(None):
            for lb in P.B.basis_labels(None):
                assert w.pair_against(P.A.lc(la), P.B.lc(lb)) == \
                    P.pair_basis(la, lb)

    def test_group_w_is_diagonal(self):
        terms = GroupPairing(Z4).w.all_terms()
        assert terms == [(g, g, 1) for g in range(4)]

    def test_finite_dim_w_is_diagonal(self):
        K = FiniteDimPairing.from_instance(FiniteDimHopf.from_group(Z3))
        assert K.w.all_terms() == [(i, i, 1) for i in range(3)]

    def test_integer_w_windows(self):
        w = GroupPairing(IntGroup()).w
        assert w.window_terms(2) == [(n, n, 1) for n in range(-2, 3)]
        with pytest.raises(PairingError):
            w.all_terms()


class TestCrossedRightUnit:
    @pytest.mark.parametrize("P,group", [
        (GroupPairing(Z4), Z4),
        (GroupPairing(S3), S3),
        (FiniteDimPairing.from_instance(FiniteDimHopf.from_group(Z3)), Z3),
        (DrinfeldPairing(Z2), Z2),
    ], ids=["group-z4", "group-s3", "finite-dim", "drinfeld"])
    def test_acts_as_right_unit(self, P, group):
        e = identity_aut(group)
        g = AutPair(e, e)
        for la in P.A.basis_labels(None)[:3]:
            for lb in P.B.basis_labels(None)[:3]:
                y = LinComb.unit((la, lb))
                c = P.crossed_right_unit(g, y)
                assert b_embed_left(P, g, c, y) == y
