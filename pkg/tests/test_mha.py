"""Base instances: group algebras, function algebras, doubles, and
structure-constant instances."""

import itertools
from fractions import Fraction

import pytest

from mhag import (DrinfeldDouble, DualDrinfeld, FiniteDimHopf,
                  FunctionAlgebra, GroupAlgebra, StructureError)
from mhag.groups import IntGroup, PermGroup, TableGroup, inner_aut, map_aut
from mhag.linear import LinComb, lc_combine, wrap1

Z2 = TableGroup.cyclic(2)
Z3 = TableGroup.cyclic(3)
Z4 = TableGroup.cyclic(4)
S3 = PermGroup.symmetric(3)


def all_instances():
    return [
        GroupAlgebra(Z4),
        GroupAlgebra(S3),
        FunctionAlgebra(Z4),
        DrinfeldDouble(Z2),
        DualDrinfeld(Z2),
        FiniteDimHopf.from_group(Z3),
        FiniteDimHopf.from_group(Z3).dual(),
    ]


class TestGroupAlgebra:
    A = GroupAlgebra(Z4)

    def test_mul_is_group_law(self):
        assert self.A.mul(self.A.lc(1), self.A.lc(3)) == self.A.lc(0)
        assert self.A.mul(self.A.lc(2), self.A.lc(3)) == self.A.lc(1)

    def test_counit_is_one_everywhere(self):
        for x in range(4):
            assert self.A.counit(self.A.lc(x)) == Fraction(1)

    def test_antipode_is_inversion(self):
        assert self.A.antipode(self.A.lc(1)) == self.A.lc(3)
        assert self.A.antipode(self.A.lc(1), inverse=True) == self.A.lc(3)

    def test_comul_is_diagonal(self):
        assert self.A.comul_eager(self.A.lc(2)) == LinComb.unit(
            (2, 2), Fraction(1))

    def test_unit(self):
        assert self.A.unit() == self.A.lc(0)
        assert self.A.is_unital

    def test_apply_aut_permutes_basis(self):
        inv = map_aut(Z4, {i: (-i) % 4 for i in range(4)})
        assert self.A.apply_aut(inv, self.A.lc(1)) == self.A.lc(3)


class TestFunctionAlgebra:
    F = FunctionAlgebra(Z4)

    def test_mul_is_pointwise(self):
        assert self.F.mul(self.F.lc(1), self.F.lc(1)) == self.F.lc(1)
        assert self.F.mul(self.F.lc(1), self.F.lc(2)).is_zero()

    def test_counit_evaluates_at_identity(self):
        assert self.F.counit(self.F.lc(0)) == Fraction(1)
        assert self.F.counit(self.F.lc(1)) == Fraction(0)

    def test_antipode_flips_the_point(self):
        assert self.F.antipode(self.F.lc(1)) == self.F.lc(3)

    def test_comul_is_convolution_support(self):
        cc = self.F.comul_eager(self.F.lc(2))
        assert cc == LinComb.from_pairs(
            ((u, (2 - u) % 4), Fraction(1)) for u in range(4))

    def test_unit_sums_all_points(self):
        assert self.F.unit() == lc_combine(self.F.lc(x) for x in range(4))

    def test_infinite_variant_has_no_global_unit(self):
        FZ = FunctionAlgebra(IntGroup())
        assert not FZ.is_unital
        with pytest.raises(StructureError):
            FZ.unit()
        with pytest.raises(StructureError):
            FZ.comul_eager(FZ.lc(0))
        lu = FZ.local_unit_for([3, -1])
        for lab in (3, -1):
            assert FZ.mul(lu, FZ.lc(lab)) == FZ.lc(lab)
            assert FZ.mul(FZ.lc(lab), lu) == FZ.lc(lab)


class TestTMaps:
    def test_group_algebra_closed_forms(self):
        A = GroupAlgebra(Z4)
        x, y = A.lc(1), A.lc(2)
        assert A.t_pair(1, x, y) == A.lc((1, 3))
        assert A.t_pair(2, x, y) == A.lc((3, 2))
        assert A.t_pair(3, x, y) == A.lc((3, 1))
        assert A.t_pair(4, x, y) == A.lc((2, 3))

    @pytest.mark.parametrize("inst", all_instances(),
                             ids=lambda i: getattr(i, "name", type(i).__name__))
    def test_roundtrips_everywhere(self, inst):
        labels = inst.basis_labels(None)
        for i in (1, 2, 3, 4):
            for lx, ly in itertools.product(labels, labels):
                xy = wrap1(inst.lc(lx)).tensor(wrap1(inst.lc(ly)))
                assert inst.t_map_inv(i, inst.t_map(i, xy)) == xy
                assert inst.t_map(i, inst.t_map_inv(i, xy)) == xy

    def test_t_maps_linear(self):
        A = GroupAlgebra(S3)
        labels = A.basis_labels(None)
        v = wrap1(A.lc(labels[1])).tensor(wrap1(A.lc(labels[2]))).scale(
            Fraction(2)).add(
            wrap1(A.lc(labels[3])).tensor(wrap1(A.lc(labels[0]))))
        parts = [A.t_map(1, LinComb.unit(lab, c)) for lab, c in v.terms.items()]
        assert A.t_map(1, v) == lc_combine(parts)


class TestDoubles:
    def test_labels_are_point_group_pairs(self):
        d = DrinfeldDouble(Z2)
        assert sorted(d.basis_labels(None)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_units_only_when_finite(self):
        for cls in (DrinfeldDouble, DualDrinfeld):
            fin = cls(Z2)
            assert fin.is_unital
            u = fin.unit()
            for lab in fin.basis_labels(None):
                assert fin.mul(u, fin.lc(lab)) == fin.lc(lab)
                assert fin.mul(fin.lc(lab), u) == fin.lc(lab)
            inf = cls(IntGroup())
            assert not inf.is_unital
            with pytest.raises(StructureError):
                inf.unit()

    def test_counit_picks_identity_point(self):
        d = DrinfeldDouble(Z2)
        assert d.counit(d.lc((0, 1))) == Fraction(1)
        assert d.counit(d.lc((1, 1))) == Fraction(0)


class TestFiniteDimHopf:
    def test_from_group_matches_group_algebra(self):
        fd = FiniteDimHopf.from_group(Z3)
        A = GroupAlgebra(Z3)
        els = Z3.elements()
        idx = {g: i for i, g in enumerate(els)}
        for x, y in itertools.product(els, els):
            prod = fd.mul(fd.lc(idx[x]), fd.lc(idx[y]))
            assert prod == fd.lc(idx[Z3.op(x, y)])
        for x in els:
            assert fd.counit(fd.lc(idx[x])) == A.counit(A.lc(x))
            assert fd.antipode(fd.lc(idx[x])) == fd.lc(idx[Z3.inv(x)])

    def test_dual_transposes_to_function_structure(self):
        K = FiniteDimHopf.from_group(Z3).dual()
        assert K.mul(K.lc(1), K.lc(1)) == K.lc(1)
        assert K.mul(K.lc(1), K.lc(2)).is_zero()
        assert K.counit(K.lc(0)) == Fraction(1)  # index 0 is the identity
        assert K.counit(K.lc(1)) == Fraction(0)
        assert K.unit() == lc_combine(K.lc(i) for i in range(3))

    def test_double_dual_restores_tables(self):
        fd = FiniteDimHopf.from_group(Z3)
        dd = fd.dual().dual()
        assert dd.mul_table == fd.mul_table
        assert dd.comul_table == fd.comul_table
        assert dd.counit_vec == fd.counit_vec
        assert dd.antipode_tab == fd.antipode_tab

    def test_validation_rejects_broken_antipode(self):
        fd = FiniteDimHopf.from_group(Z3)
        bad = [LinComb.unit(0, Fraction(1)) for _ in range(3)]
        with pytest.raises(StructureError):
            FiniteDimHopf(fd.field, fd.mul_table, fd.comul_table,
                          fd.counit_vec, fd.unit_vec, bad)

    def test_from_json_roundtrip(self):
        data = {
            "dim": 2,
            "unit": ["1", "0"],
            "counit": ["1", "1"],
            "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"],
                    [1, 0, 1, "1"], [1, 1, 0, "1"]],
            "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "antipode": [[0, 0, "1"], [1, 1, "1"]],
        }
        fd = FiniteDimHopf.from_json(data)
        ref = FiniteDimHopf.from_group(Z2)
        assert fd.mul_table == ref.mul_table
        assert fd.comul_table == ref.comul_table

    def test_from_json_shape_errors(self):
        with pytest.raises(StructureError):
            FiniteDimHopf.from_json({"dim": 2})
        with pytest.raises(StructureError):
            FiniteDimHopf.from_json({
                "dim": 1, "unit": ["1"], "counit": ["1"],
                "mul": [[0, 0, "1"]], "comul": [], "antipode": []})
        with pytest.raises(StructureError):
            FiniteDimHopf.from_json({
                "dim": 1, "unit": ["1"], "counit": ["1"],
                "mul": [[0, 0, 5, "1"]], "comul": [[0, 0, 0, "1"]],
                "antipode": [[0, 0, "1"]]})

    def test_aut_transport(self):
        fd = FiniteDimHopf.from_group(S3)
        els = S3.elements()
        idx = {g: i for i, g in enumerate(els)}
        phi = inner_aut(S3, (1, 0, 2))
        for g in els:
            assert fd.apply_aut(phi, fd.lc(idx[g])) == fd.lc(
                idx[phi.apply(g)])
