"""Group backends, automorphisms, and the grading-group structure."""

import itertools

import pytest

from mhag import (AutPair, GroupError, IntGroup, TableGroup, aut_pair_identity,
                  aut_pair_inv, aut_pair_mul, group_from_json, identity_aut,
                  inner_aut)
from mhag.groups import (PermGroup, aut_from_json, map_aut, negation_aut)


def _check_group_laws(g):
    els = g.elements()
    e = g.identity
    for x in els:
        assert g.op(x, e) == x == g.op(e, x)
        assert g.op(x, g.inv(x)) == e
    for x, y, z in itertools.product(els, els, els):
        assert g.op(g.op(x, y), z) == g.op(x, g.op(y, z))


def test_cyclic_table_group():
    g = TableGroup.cyclic(4)
    assert g.is_finite and len(g.elements()) == 4
    _check_group_laws(g)
    assert g.op(3, 2) == 1
    assert g.inv(3) == 1


def test_symmetric_group():
    g = PermGroup.symmetric(3)
    assert g.is_finite and len(g.elements()) == 6
    _check_group_laws(g)
    a, b = (1, 0, 2), (0, 2, 1)
    assert g.op(a, b) != g.op(b, a)  # non-abelian


def test_int_group():
    g = IntGroup()
    assert not g.is_finite
    assert g.op(3, -5) == -2
    assert g.inv(7) == -7
    assert g.identity == 0
    with pytest.raises(GroupError):
        g.elements()


def test_table_group_validates():
    # a "table" with a broken inverse row must be rejected at load
    bad = {"kind": "table", "elements": ["e", "a"],
           "table": [["e", "a"], ["a", "a"]], "identity": "e"}
    with pytest.raises(GroupError):
        group_from_json(bad)


def test_group_from_json_kinds():
    assert isinstance(group_from_json("Z"), IntGroup)
    assert len(group_from_json({"kind": "cyclic", "n": 5}).elements()) == 5
    s3 = group_from_json({"kind": "symmetric", "n": 3})
    assert len(s3.elements()) == 6
    perm = group_from_json({"kind": "perm", "n": 3,
                            "generators": [[1, 2, 0]]})
    assert len(perm.elements()) == 3
    with pytest.raises(GroupError):
        group_from_json({"kind": "icosahedral"})


class TestAutomorphisms:
    s3 = PermGroup.symmetric(3)

    def test_identity(self):
        i = identity_aut(self.s3)
        assert i.is_identity()
        for x in self.s3.elements():
            assert i.apply(x) == x

    def test_inner_is_homomorphism(self):
        g = (1, 2, 0)
        phi = inner_aut(self.s3, g)
        for x, y in itertools.product(self.s3.elements(), repeat=2):
            assert phi.apply(self.s3.op(x, y)) == self.s3.op(
                phi.apply(x), phi.apply(y))

    def test_compose_order(self):
        # compose(self, other) applies other first
        a = inner_aut(self.s3, (1, 0, 2))
        b = inner_aut(self.s3, (0, 2, 1))
        x = (1, 2, 0)
        assert a.compose(b).apply(x) == a.apply(b.apply(x))

    def test_inverse(self):
        phi = inner_aut(self.s3, (2, 0, 1))
        psi = phi.inverse()
        for x in self.s3.elements():
            assert psi.apply(phi.apply(x)) == x

    def test_equality_and_hash(self):
        assert inner_aut(self.s3, (0, 1, 2)) == identity_aut(self.s3)
        assert hash(inner_aut(self.s3, (1, 0, 2))) == hash(
            inner_aut(self.s3, (1, 0, 2)))

    def test_map_aut_validated(self):
        z4 = TableGroup.cyclic(4)
        neg = map_aut(z4, {i: (-i) % 4 for i in range(4)})
        assert neg.apply(1) == 3
        with pytest.raises(GroupError):
            # x -> 2x is not injective on Z/4
            map_aut(z4, {i: (2 * i) % 4 for i in range(4)})

    def test_negation_aut(self):
        z = IntGroup()
        neg = negation_aut(z)
        assert neg.apply(5) == -5
        assert neg.compose(neg).apply(5) == 5


def test_aut_from_json_kinds():
    z = IntGroup()
    assert aut_from_json(z, "identity").is_identity()
    assert aut_from_json(z, "negation").apply(2) == -2
    s3 = PermGroup.symmetric(3)
    phi = aut_from_json(s3, {"kind": "inner", "by": [1, 0, 2]})
    assert phi.apply((0, 2, 1)) == s3.conj((1, 0, 2), (0, 2, 1))
    z3 = TableGroup.cyclic(3)
    psi = aut_from_json(z3, {"kind": "map", "images": [0, 2, 1]})
    assert psi.apply(1) == 2
    with pytest.raises(GroupError):
        aut_from_json(z3, {"kind": "outer"})


class TestAutPairStructure:
    """The grading set: ordered automorphism pairs with the twisted product."""

    s3 = PermGroup.symmetric(3)

    def pairs(self):
        els = self.s3.elements()
        return [AutPair(inner_aut(self.s3, g), inner_aut(self.s3, h))
                for g, h in itertools.product(els, els)]

    def test_group_laws_exhaustive(self):
        pairs = self.pairs()
        e = aut_pair_identity(self.s3)
        for p in pairs:
            assert aut_pair_mul(p, e) == p
            assert aut_pair_mul(e, p) == p
            assert aut_pair_mul(p, aut_pair_inv(p)) == e
            assert aut_pair_mul(aut_pair_inv(p), p) == e
        sub = pairs[::7]  # associativity on a spread subset, cubes are large
        for p, q, r in itertools.product(sub, sub, sub):
            assert aut_pair_mul(aut_pair_mul(p, q), r) == aut_pair_mul(
                p, aut_pair_mul(q, r))

    def test_product_second_leg_is_twisted(self):
        """The second leg of a product is conjugated through the right
        factor's first leg, not just composed; a non-abelian instance
        distinguishes the two."""
        b = inner_aut(self.s3, (1, 0, 2))
        c = inner_aut(self.s3, (1, 2, 0))
        d = inner_aut(self.s3, (2, 1, 0))
        p, q = AutPair(identity_aut(self.s3), b), AutPair(c, d)
        twisted = aut_pair_mul(p, q).beta
        assert twisted != d.compose(b)
        for x in self.s3.elements():
            assert twisted.apply(x) == d.apply(
                c.inverse().apply(b.apply(c.apply(x))))
