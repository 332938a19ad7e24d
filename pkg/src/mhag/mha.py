"""Multiplier Hopf algebra instances.

An instance packages a (possibly non-unital) associative algebra with basis,
its counit and (bijective) antipode, and — crucially — the four canonical
bijections of tensor square induced by the comultiplication:

    T1(x ⊗ y) = Delta(x)(1 ⊗ y)        T2(x ⊗ y) = (x ⊗ 1)Delta(y)
    T3(x ⊗ y) = Delta(x)(y ⊗ 1)        T4(x ⊗ y) = (1 ⊗ x)Delta(y)

For every instance here these maps (and their inverses) carry basis tensors to
*finite* linear combinations, even when the comultiplication itself lands in a
completed tensor product.  Every higher-level algorithm in the package is
written against the T-maps only, never against a raw comultiplication, which
is what lets the same code run over infinite-dimensional instances.

Provided instances: group algebras, function algebras of groups (finite
support), the double crossed pair built from both (in two mirrored versions),
and generic finite-dimensional instances from structure constants (with full
axiom validation and exact dualisation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .groups import Automorphism, Group
from .linear import LinComb, lc_combine
from .sampling import EnumSpec
from .scalars import Field, FpElement, RationalField


class StructureError(ValueError):
    """Raised for malformed instance data, with a named diagnostic prefix."""


def sdiv(a, b):
    """Exact scalar division across the supported coefficient types."""
    if isinstance(a, FpElement) or isinstance(b, FpElement):
        return a / b
    f = Fraction(a) / Fraction(b)
    return int(f) if f.denominator == 1 else f


@dataclass
class Multiplier:
    """A two-sided multiplier: a pair of compatible module maps.

    ``left(x)`` evaluates M * x and ``right(x)`` evaluates x * M.  Multipliers
    are how unit-like and R-matrix-like objects act without being elements.
    """

    left: Callable[[LinComb], LinComb]
    right: Callable[[LinComb], LinComb]

    def materialize(self, unit_lc: LinComb) -> LinComb:
        """M * 1, for unital algebras (where M is then an honest element)."""
        return self.left(unit_lc)


class MhaInstance:
    """Base class: exact linear wrappers over per-basis structure maps."""

    field: Field
    name: str
    is_unital: bool

    def __init__(self):
        self._mc: Dict = {}
        self._tc: Dict = {}
        self._tic: Dict = {}

    # -- per-basis primitives (subclasses implement) -------------------------
    def _mul_basis(self, x, y) -> LinComb:
        raise NotImplementedError

    def _counit_basis(self, x):
        raise NotImplementedError

    def _antipode_basis(self, x, inverse: bool = False) -> LinComb:
        raise NotImplementedError

    def _t_basis(self, i: int, x, y) -> LinComb:
        raise NotImplementedError

    def _t_inv_basis(self, i: int, x, y) -> LinComb:
        raise NotImplementedError

    def _comul_basis(self, x) -> LinComb:
        raise StructureError(
            f"{self.name}: eager comultiplication unavailable (infinite support); "
            "use the T-maps"
        )

    def local_unit_for(self, labels) -> LinComb:
        """An element e with e*x = x*e = x for every x spanned by ``labels``."""
        raise NotImplementedError

    def unit(self) -> LinComb:
        raise StructureError(f"{self.name}: not unital")

    def aut_label(self, phi: Automorphism, label):
        raise StructureError(f"{self.name}: automorphism action unsupported")

    def basis_labels(self, enum: EnumSpec) -> List:
        raise NotImplementedError

    def parse_label(self, data):
        raise NotImplementedError

    def label_to_json(self, label):
        raise NotImplementedError

    # -- linear wrappers ------------------------------------------------------
    def lc(self, label, coeff=None) -> LinComb:
        return LinComb.unit(label, self.field.one() if coeff is None else coeff)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        out: Dict = {}
        mc = self._mc
        for lx, cx in x.terms.items():
            for ly, cy in y.terms.items():
                key = (lx, ly)
                base = mc.get(key)
                if base is None:
                    base = self._mul_basis(lx, ly)
                    mc[key] = base
                if not base.terms:
                    continue
                c = cx * cy
                for lz, cz in base.terms.items():
                    acc = out.get(lz)
                    if acc is None:
                        out[lz] = c * cz
                    else:
                        acc = acc + c * cz
                        if acc == 0:
                            del out[lz]
                        else:
                            out[lz] = acc
        return LinComb(out)

    def mul_many(self, *xs: LinComb) -> LinComb:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.mul(acc, x)
        return acc

    def _t_linear(self, table, fn, i: int, xy: LinComb) -> LinComb:
        out: Dict = {}
        for (lx, ly), c in xy.terms.items():
            key = (i, lx, ly)
            base = table.get(key)
            if base is None:
                base = fn(i, lx, ly)
                table[key] = base
            for lz, cz in base.terms.items():
                acc = out.get(lz)
                if acc is None:
                    out[lz] = c * cz
                else:
                    acc = acc + c * cz
                    if acc == 0:
                        del out[lz]
                    else:
                        out[lz] = acc
        return LinComb(out)

    def t_map(self, i: int, xy: LinComb) -> LinComb:
        """T_i on a tensor-square value (labels are 2-tuples)."""
        return self._t_linear(self._tc, self._t_basis, i, xy)

    def t_map_inv(self, i: int, xy: LinComb) -> LinComb:
        return self._t_linear(self._tic, self._t_inv_basis, i, xy)

    def t_pair(self, i: int, x: LinComb, y: LinComb) -> LinComb:
        return self.t_map(i, x.map_labels(lambda l: (l,)).tensor(
            y.map_labels(lambda l: (l,))))

    def counit(self, x: LinComb):
        total = self.field.zero()
        for label, c in x.terms.items():
            total = total + c * self._counit_basis(label)
        return total

    def antipode(self, x: LinComb, inverse: bool = False) -> LinComb:
        return x.map_terms(lambda l: self._antipode_basis(l, inverse))

    def comul_eager(self, x: LinComb) -> LinComb:
        """Full comultiplication as a tensor value — finite instances only."""
        return x.map_terms(self._comul_basis)

    def apply_aut(self, phi: Automorphism, x: LinComb) -> LinComb:
        if phi.is_identity():
            return x
        return x.map_labels(lambda l: self.aut_label(phi, l))

    def parse_value(self, data) -> LinComb:
        """Decode ``[[label, coeff], ...]`` into a value."""
        pairs = []
        for item in data:
            label, coeff = item
            pairs.append((self.parse_label(label), self.field.parse(coeff)))
        return LinComb.from_pairs(pairs)

    def value_to_json(self, x: LinComb):
        return [[self.label_to_json(label), self.field.to_str(c)]
                for label, c in x.sorted_items()]


# ---------------------------------------------------------------------------
# Group-backed instances
# ---------------------------------------------------------------------------

class GroupAlgebra(MhaInstance):
    """The group algebra: basis = group elements, grouplike coproduct."""

    def __init__(self, group: Group, field: Optional[Field] = None):
        super().__init__()
        self.group = group
        self.field = field or RationalField()
        self.is_unital = True
        self.name = "group-algebra"

    def _mul_basis(self, x, y):
        return self.lc(self.group.op(x, y))

    def _counit_basis(self, x):
        return self.field.one()

    def _antipode_basis(self, x, inverse=False):
        return self.lc(self.group.inv(x))

    def _comul_basis(self, x):
        return self.lc((x, x))

    def _t_basis(self, i, x, y):
        g = self.group
        if i == 1:
            return self.lc((x, g.op(x, y)))
        if i == 2:
            return self.lc((g.op(x, y), y))
        if i == 3:
            return self.lc((g.op(x, y), x))
        if i == 4:
            return self.lc((y, g.op(x, y)))
        raise ValueError(f"t-map index out of range: {i}")

    def _t_inv_basis(self, i, x, y):
        g = self.group
        if i == 1:
            return self.lc((x, g.op(g.inv(x), y)))
        if i == 2:
            return self.lc((g.op(x, g.inv(y)), y))
        if i == 3:
            return self.lc((y, g.op(g.inv(y), x)))
        if i == 4:
            return self.lc((g.op(y, g.inv(x)), x))
        raise ValueError(f"t-map index out of range: {i}")

    def unit(self):
        return self.lc(self.group.identity)

    def local_unit_for(self, labels):
        return self.unit()

    def aut_label(self, phi, label):
        return phi(label)

    def basis_labels(self, enum: EnumSpec):
        if self.group.is_finite:
            return self.group.elements()
        return enum.int_labels()

    def parse_label(self, data):
        return self.group.parse_element(data)

    def label_to_json(self, label):
        return self.group.element_to_json(label)


class FunctionAlgebra(MhaInstance):
    """Finitely supported functions on a group: basis of point masses.

    The product is pointwise (idempotents), the coproduct is dual to the group
    law; for infinite groups the instance is non-unital and the coproduct has
    infinite support — but all four T-maps are label bijections, so everything
    downstream still works exactly.
    """

    def __init__(self, group: Group, field: Optional[Field] = None):
        super().__init__()
        self.group = group
        self.field = field or RationalField()
        self.is_unital = group.is_finite
        self.name = "function-algebra"

    def _mul_basis(self, x, y):
        if x == y:
            return self.lc(x)
        return LinComb.zero()

    def _counit_basis(self, x):
        return self.field.one() if x == self.group.identity else self.field.zero()

    def _antipode_basis(self, x, inverse=False):
        return self.lc(self.group.inv(x))

    def _comul_basis(self, x):
        if not self.group.is_finite:
            return super()._comul_basis(x)
        g = self.group
        return lc_combine(self.lc((u, g.op(g.inv(u), x))) for u in g.elements())

    def _t_basis(self, i, x, y):
        g = self.group
        if i == 1:
            return self.lc((g.op(x, g.inv(y)), y))
        if i == 2:
            return self.lc((x, g.op(g.inv(x), y)))
        if i == 3:
            return self.lc((y, g.op(g.inv(y), x)))
        if i == 4:
            return self.lc((g.op(y, g.inv(x)), x))
        raise ValueError(f"t-map index out of range: {i}")

    def _t_inv_basis(self, i, x, y):
        g = self.group
        if i == 1:
            return self.lc((g.op(x, y), y))
        if i == 2:
            return self.lc((x, g.op(x, y)))
        if i == 3:
            return self.lc((g.op(x, y), x))
        if i == 4:
            return self.lc((y, g.op(x, y)))
        raise ValueError(f"t-map index out of range: {i}")

    def unit(self):
        if not self.is_unital:
            return super().unit()
        return lc_combine(self.lc(p) for p in self.group.elements())

    def local_unit_for(self, labels):
        return lc_combine(self.lc(p) for p in dict.fromkeys(labels))

    def aut_label(self, phi, label):
        return phi(label)

    def basis_labels(self, enum: EnumSpec):
        if self.group.is_finite:
            return self.group.elements()
        return enum.int_labels()

    def parse_label(self, data):
        return self.group.parse_element(data)

    def label_to_json(self, label):
        return self.group.element_to_json(label)


class DrinfeldDouble(MhaInstance):
    """The double built on (point mass) x (group element) labels ``(p, h)``.

    Product: (p, h)(q, l) = [p = h q h^-1] (p, h l); the coproduct splits the
    point mass over all factorizations and duplicates the group leg.  The
    antipode is (p, h) -> (h^-1 p^-1 h, h^-1), an involution.
    """

    def __init__(self, group: Group, field: Optional[Field] = None):
        super().__init__()
        self.group = group
        self.field = field or RationalField()
        self.is_unital = group.is_finite
        self.name = "double"

    def _mul_basis(self, a, b):
        g = self.group
        p, h = a
        q, l = b
        if p == g.conj(h, q):
            return self.lc((p, g.op(h, l)))
        return LinComb.zero()

    def _counit_basis(self, a):
        return self.field.one() if a[0] == self.group.identity else self.field.zero()

    def _antipode_basis(self, a, inverse=False):
        g = self.group
        p, h = a
        hi = g.inv(h)
        return self.lc((g.conj(hi, g.inv(p)), hi))

    def _comul_basis(self, a):
        if not self.group.is_finite:
            return super()._comul_basis(a)
        g = self.group
        p, h = a
        return lc_combine(self.lc(((g.op(g.inv(s), p), h), (s, h)))
                          for s in g.elements())

    def _t_basis(self, i, a, b):
        g = self.group
        p, h = a
        q, l = b
        hi = g.inv(h)
        if i == 1:
            return self.lc((
                (g.op(g.conj(h, g.inv(q)), p), h),
                (g.conj(h, q), g.op(h, l)),
            ))
        if i == 2:
            return self.lc((
                (p, g.op(h, l)),
                (g.op(q, g.conj(hi, g.inv(p))), l),
            ))
        if i == 3:
            return self.lc((
                (g.conj(h, q), g.op(h, l)),
                (g.op(p, g.conj(h, g.inv(q))), h),
            ))
        if i == 4:
            return self.lc((
                (g.op(g.conj(hi, g.inv(p)), q), l),
                (p, g.op(h, l)),
            ))
        raise ValueError(f"t-map index out of range: {i}")

    def _t_inv_basis(self, i, a, b):
        g = self.group
        if i == 1:
            m, h = a
            qt, lt = b
            hi = g.inv(h)
            return self.lc(((g.op(qt, m), h), (g.conj(hi, qt), g.op(hi, lt))))
        if i == 2:
            pt, m = a
            st, l = b
            h = g.op(m, g.inv(l))
            hi = g.inv(h)
            return self.lc(((pt, h), (g.op(st, g.conj(hi, pt)), l)))
        if i == 3:
            ut, m = a
            st, h = b
            hi = g.inv(h)
            return self.lc(((g.op(st, ut), h), (g.conj(hi, ut), g.op(hi, m))))
        if i == 4:
            vt, l = a
            p, m = b
            h = g.op(m, g.inv(l))
            hi = g.inv(h)
            return self.lc(((p, h), (g.op(g.conj(hi, p), vt), l)))
        raise ValueError(f"t-map index out of range: {i}")

    def unit(self):
        if not self.is_unital:
            return super().unit()
        e = self.group.identity
        return lc_combine(self.lc((q, e)) for q in self.group.elements())

    def local_unit_for(self, labels):
        g = self.group
        e = g.identity
        closure = []
        for p, h in labels:
            closure.append(p)
            closure.append(g.conj(g.inv(h), p))
        return lc_combine(self.lc((w, e)) for w in dict.fromkeys(closure))

    def aut_label(self, phi, label):
        p, h = label
        return (phi(p), phi(h))

    def basis_labels(self, enum: EnumSpec):
        if self.group.is_finite:
            els = self.group.elements()
            return [(p, h) for p in els for h in els]
        ints = enum.int_labels()
        return [(p, h) for p in ints for h in ints]

    def parse_label(self, data):
        p, h = data
        return (self.group.parse_element(p), self.group.parse_element(h))

    def label_to_json(self, label):
        p, h = label
        return [self.group.element_to_json(p), self.group.element_to_json(h)]


class DualDrinfeld(MhaInstance):
    """The mirrored double on (group element) x (point mass) labels ``(h, p)``.

    Product: (h, p)(l, q) = [p = q] (l h, p) — note the reversed group product;
    the coproduct conjugates the group leg along the point-mass splitting.
    This instance is in exact duality with :class:`DrinfeldDouble` under the
    label-matching pairing.
    """

    def __init__(self, group: Group, field: Optional[Field] = None):
        super().__init__()
        self.group = group
        self.field = field or RationalField()
        self.is_unital = group.is_finite
        self.name = "double-dual"

    def _mul_basis(self, a, b):
        g = self.group
        h, p = a
        l, q = b
        if p == q:
            return self.lc((g.op(l, h), p))
        return LinComb.zero()

    def _counit_basis(self, a):
        return self.field.one() if a[1] == self.group.identity else self.field.zero()

    def _antipode_basis(self, a, inverse=False):
        g = self.group
        h, p = a
        pi = g.inv(p)
        return self.lc((g.conj(pi, g.inv(h)), pi))

    def _comul_basis(self, a):
        if not self.group.is_finite:
            return super()._comul_basis(a)
        g = self.group
        h, p = a
        return lc_combine(
            self.lc(((h, t), (g.conj(g.inv(t), h), g.op(g.inv(t), p))))
            for t in g.elements())

    def _t_basis(self, i, a, b):
        g = self.group
        h, p = a
        l, q = b
        if i == 1:
            u = g.op(p, g.inv(q))
            return self.lc(((h, u), (g.op(l, g.conj(g.inv(u), h)), q)))
        if i == 2:
            pi = g.inv(p)
            return self.lc(((g.op(l, h), p), (g.conj(pi, l), g.op(pi, q))))
        if i == 3:
            qi = g.inv(q)
            return self.lc(((g.op(l, h), q), (g.conj(qi, h), g.op(qi, p))))
        if i == 4:
            u = g.op(q, g.inv(p))
            return self.lc(((l, u), (g.op(g.conj(g.inv(u), l), h), p)))
        raise ValueError(f"t-map index out of range: {i}")

    def _t_inv_basis(self, i, a, b):
        g = self.group
        if i == 1:
            h, u = a
            z, q = b
            return self.lc(((h, g.op(u, q)),
                            (g.op(z, g.conj(g.inv(u), g.inv(h))), q)))
        if i == 2:
            z, p = a
            y, vt = b
            l = g.conj(p, y)
            return self.lc(((g.op(g.inv(l), z), p), (l, g.op(p, vt))))
        if i == 3:
            z, q = a
            y, wt = b
            h = g.conj(q, y)
            return self.lc(((h, g.op(q, wt)), (g.op(z, g.inv(h)), q)))
        if i == 4:
            l, u = a
            z, p = b
            return self.lc(((g.op(g.conj(g.inv(u), g.inv(l)), z), p),
                            (l, g.op(u, p))))
        raise ValueError(f"t-map index out of range: {i}")

    def unit(self):
        if not self.is_unital:
            return super().unit()
        e = self.group.identity
        return lc_combine(self.lc((e, p)) for p in self.group.elements())

    def local_unit_for(self, labels):
        e = self.group.identity
        return lc_combine(self.lc((e, p))
                          for p in dict.fromkeys(p for _, p in labels))

    def aut_label(self, phi, label):
        h, p = label
        return (phi(h), phi(p))

    def basis_labels(self, enum: EnumSpec):
        if self.group.is_finite:
            els = self.group.elements()
            return [(h, p) for h in els for p in els]
        ints = enum.int_labels()
        return [(h, p) for h in ints for p in ints]

    def parse_label(self, data):
        h, p = data
        return (self.group.parse_element(h), self.group.parse_element(p))

    def label_to_json(self, label):
        h, p = label
        return [self.group.element_to_json(h), self.group.element_to_json(p)]


# ---------------------------------------------------------------------------
# Generic finite-dimensional instances from structure constants
# ---------------------------------------------------------------------------

class FiniteDimHopf(MhaInstance):
    """A finite-dimensional instance given by explicit structure constants.

    Labels are ``0..dim-1``.  Construction validates every axiom exhaustively
    (associativity, unit, coassociativity, counit, multiplicativity of the
    coproduct and counit, both antipode identities) and reports failures with
    named diagnostics.  The antipode inverse is computed by exact matrix
    inversion.  ``dual()`` transposes all structure maps.
    """

    def __init__(self, field: Field, mul_table: List[List[LinComb]],
                 comul_table: List[LinComb], counit_vec: List,
                 unit_vec: LinComb, antipode_tab: List[LinComb],
                 validate: bool = True, name: str = "finite-dim",
                 aut_label_fn: Optional[Callable] = None,
                 basis_names: Optional[List[str]] = None):
        super().__init__()
        self.field = field
        self.dim = len(mul_table)
        self.mul_table = mul_table
        self.comul_table = comul_table
        self.counit_vec = counit_vec
        self.unit_vec = unit_vec
        self.antipode_tab = antipode_tab
        self.is_unital = True
        self.name = name
        self.basis_names = basis_names
        self._name_index = ({nm: i for i, nm in enumerate(basis_names)}
                            if basis_names else None)
        self._aut_label_fn = aut_label_fn
        self._antipode_inv_tab: Optional[List[LinComb]] = None
        if validate:
            self._validate()

    # -- construction ---------------------------------------------------------
    @staticmethod
    def from_json(data, field: Optional[Field] = None) -> "FiniteDimHopf":
        """Decode structure constants from a JSON object.

        Schema: ``{"dim": n, "basis": [names], "unit": [coeff x n],
        "mul": [[i, j, k, coeff], ...], "comul": [[i, j, k, coeff], ...],
        "counit": [coeff x n], "antipode": [[i, j, coeff], ...]}``.

        Entries are sparse: a mul row ``[i, j, k, q]`` contributes
        ``q e_k`` to ``e_i e_j``; a comul row ``[i, j, k, q]`` contributes
        ``q e_j (x) e_k`` to the coproduct of ``e_i``; an antipode row
        ``[i, j, q]`` contributes ``q e_j`` to the antipode of ``e_i``.
        Coefficients are exact rational strings like ``"2"`` or ``"-1/3"``
        (plain integers are also accepted).
        """
        from .scalars import field_from_json

        f = field if field is not None else field_from_json(data.get("scalars"))
        try:
            n = int(data["dim"])
            mul_rows = data["mul"]
            comul_rows = data["comul"]
            counit_row = data["counit"]
            unit_row = data["unit"]
            anti_rows = data["antipode"]
        except (KeyError, TypeError) as exc:
            raise StructureError(f"instance-json-missing-field: {exc}") from exc
        basis_names = data.get("basis")
        if basis_names is not None:
            basis_names = [str(x) for x in basis_names]
            if len(basis_names) != n:
                raise StructureError(
                    "instance-json-shape: basis names must be sized by dim")
        if len(counit_row) != n or len(unit_row) != n:
            raise StructureError(
                "instance-json-shape: unit/counit vectors must be sized by dim")

        def index(v, what):
            i = int(v)
            if not 0 <= i < n:
                raise StructureError(
                    f"instance-json-index: {what} index {v!r} out of range")
            return i

        mul_cells: List[List[Dict]] = [[{} for _ in range(n)]
                                       for _ in range(n)]
        for row in mul_rows:
            if len(row) != 4:
                raise StructureError(
                    f"instance-json-shape: mul row {row!r} needs [i,j,k,coeff]")
            i, j, k = (index(row[0], "mul"), index(row[1], "mul"),
                       index(row[2], "mul"))
            cell = mul_cells[i][j]
            cell[k] = cell.get(k, f.zero()) + f.parse(row[3])
        mul_table = [[LinComb.from_pairs(cell.items())
                      for cell in row] for row in mul_cells]
        comul_cells: List[Dict] = [{} for _ in range(n)]
        for row in comul_rows:
            if len(row) != 4:
                raise StructureError(
                    f"instance-json-shape: comul row {row!r} needs [i,j,k,coeff]")
            i, j, k = (index(row[0], "comul"), index(row[1], "comul"),
                       index(row[2], "comul"))
            cell = comul_cells[i]
            cell[(j, k)] = cell.get((j, k), f.zero()) + f.parse(row[3])
        comul_table = [LinComb.from_pairs(cell.items())
                       for cell in comul_cells]
        anti_cells: List[Dict] = [{} for _ in range(n)]
        for row in anti_rows:
            if len(row) != 3:
                raise StructureError(
                    f"instance-json-shape: antipode row {row!r} needs [i,j,coeff]")
            i, j = index(row[0], "antipode"), index(row[1], "antipode")
            cell = anti_cells[i]
            cell[j] = cell.get(j, f.zero()) + f.parse(row[2])
        antipode_tab = [LinComb.from_pairs(cell.items())
                        for cell in anti_cells]
        counit_vec = [f.parse(c) for c in counit_row]
        unit_vec = LinComb.from_pairs(
            (i, f.parse(c)) for i, c in enumerate(unit_row))
        return FiniteDimHopf(f, mul_table, comul_table, counit_vec, unit_vec,
                             antipode_tab, basis_names=basis_names)

    @staticmethod
    def from_group(group: Group, field: Optional[Field] = None,
                   dual: bool = False) -> "FiniteDimHopf":
        """Structure constants of a finite group algebra (or its dual)."""
        f = field or RationalField()
        els = group.elements()
        idx = {g: i for i, g in enumerate(els)}
        n = len(els)
        one = f.one()

        def relabel(phi, i):
            return idx[phi(els[i])]

        if not dual:
            mul_table = [[LinComb.unit(idx[group.op(x, y)], one) for y in els]
                         for x in els]
            comul_table = [LinComb.unit((i, i), one) for i in range(n)]
            counit_vec = [one] * n
            unit_vec = LinComb.unit(idx[group.identity], one)
            antipode_tab = [LinComb.unit(idx[group.inv(x)], one) for x in els]
            name = "finite-dim(group)"
        else:
            mul_table = [[LinComb.unit(i, one) if i == j else LinComb.zero()
                          for j in range(n)] for i in range(n)]
            comul_table = [
                lc_combine(LinComb.unit((idx[u], idx[group.op(group.inv(u), p)]),
                                        one) for u in els)
                for p in els]
            counit_vec = [one if x == group.identity else f.zero() for x in els]
            unit_vec = lc_combine(LinComb.unit(i, one) for i in range(n))
            antipode_tab = [LinComb.unit(idx[group.inv(x)], one) for x in els]
            name = "finite-dim(functions)"
        return FiniteDimHopf(f, mul_table, comul_table, counit_vec, unit_vec,
                             antipode_tab, name=name, aut_label_fn=relabel)

    def dual(self) -> "FiniteDimHopf":
        """The dual instance: all structure maps transposed."""
        n = self.dim
        mul_table = [[
            LinComb.from_pairs(
                (k, self.comul_table[k].coeff((i, j))) for k in range(n))
            for j in range(n)] for i in range(n)]
        comul_table = [
            LinComb.from_pairs(
                ((i, j), self.mul_table[i][j].coeff(k))
                for i in range(n) for j in range(n))
            for k in range(n)]
        counit_vec = [self.unit_vec.coeff(i) for i in range(n)]
        unit_vec = LinComb.from_pairs(
            (i, self.counit_vec[i]) for i in range(n))
        antipode_tab = [
            LinComb.from_pairs((j, self.antipode_tab[j].coeff(i))
                               for j in range(n))
            for i in range(n)]
        # A basis-permuting automorphism keeps the same index action on the
        # transposed structure, so the relabel function carries over.
        return FiniteDimHopf(self.field, mul_table, comul_table, counit_vec,
                             unit_vec, antipode_tab, name=self.name + "-dual",
                             aut_label_fn=self._aut_label_fn,
                             basis_names=self.basis_names)

    # -- validation -------------------------------------------------------------
    def _validate(self):
        n = self.dim
        basis = [self.lc(i) for i in range(n)]
        u = self.unit_vec
        for i in range(n):
            if self.mul(u, basis[i]) != basis[i] or self.mul(basis[i], u) != basis[i]:
                raise StructureError(f"unit-fails: at basis index {i}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mul(self.mul(basis[i], basis[j]), basis[k])
                    rhs = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    if lhs != rhs:
                        raise StructureError(
                            f"associativity-fails: at ({i}, {j}, {k})")
        for k in range(n):
            lhs = self._comul_leg(self.comul_table[k], left=True)
            rhs = self._comul_leg(self.comul_table[k], left=False)
            if lhs != rhs:
                raise StructureError(f"coassociativity-fails: at basis index {k}")
        for k in range(n):
            left = LinComb.from_pairs(
                (j, self.counit_vec[i] * c)
                for (i, j), c in self.comul_table[k].terms.items())
            right = LinComb.from_pairs(
                (i, c * self.counit_vec[j])
                for (i, j), c in self.comul_table[k].terms.items())
            if left != basis[k] or right != basis[k]:
                raise StructureError(f"counit-fails: at basis index {k}")
        # coproduct of the unit and multiplicativity
        unit_cc = self.comul_eager(u)
        if unit_cc != u.map_labels(lambda l: (l,)).tensor(
                u.map_labels(lambda l: (l,))):
            raise StructureError("comul-unit-fails: coproduct of unit is not unit x unit")
        for i in range(n):
            for j in range(n):
                lhs = self.comul_eager(self.mul(basis[i], basis[j]))
                rhs = self._tensor_mul(self.comul_table[i], self.comul_table[j])
                if lhs != rhs:
                    raise StructureError(
                        f"comul-not-multiplicative: at ({i}, {j})")
                el = self.counit(self.mul(basis[i], basis[j]))
                er = self.counit_vec[i] * self.counit_vec[j]
                if el != er:
                    raise StructureError(
                        f"counit-not-multiplicative: at ({i}, {j})")
        for k in range(n):
            conv_l = lc_combine(
                self.mul(self.antipode_tab[i].scale(c), basis[j])
                for (i, j), c in self.comul_table[k].terms.items())
            conv_r = lc_combine(
                self.mul(basis[i].scale(c), self.antipode_tab[j])
                for (i, j), c in self.comul_table[k].terms.items())
            target = u.scale(self.counit_vec[k])
            if conv_l != target or conv_r != target:
                raise StructureError(f"antipode-fails: at basis index {k}")
        # antipode bijectivity (computes the inverse as a side effect)
        self._antipode_inverse_table()

    def _comul_leg(self, cc: LinComb, left: bool) -> LinComb:
        out = LinComb.zero()
        for (i, j), c in cc.terms.items():
            inner = self.comul_table[i] if left else self.comul_table[j]
            for (s, t), c2 in inner.terms.items():
                label = (s, t, j) if left else (i, s, t)
                out = out.add(LinComb.unit(label, c * c2))
        return out

    def _tensor_mul(self, xx: LinComb, yy: LinComb) -> LinComb:
        out = LinComb.zero()
        for (a1, a2), c1 in xx.terms.items():
            for (b1, b2), c2 in yy.terms.items():
                prod = self.mul(self.lc(a1), self.lc(b1)).map_labels(
                    lambda l: (l,)).tensor(
                    self.mul(self.lc(a2), self.lc(b2)).map_labels(
                        lambda l: (l,)))
                out = out.add(prod.scale(c1 * c2))
        return out

    def _antipode_inverse_table(self) -> List[LinComb]:
        if self._antipode_inv_tab is not None:
            return self._antipode_inv_tab
        n = self.dim
        f = self.field
        # rows: S(e_i) = sum_j M[i][j] e_j; find N with N M = I so that
        # S^-1(e_k) = sum_j N[k][j] e_j  (then S^-1 S = S S^-1 = id).
        aug = [[self.antipode_tab[i].coeff(j) for j in range(n)]
               + [f.one() if i == j else f.zero() for j in range(n)]
               for i in range(n)]
        row = 0
        for col in range(n):
            piv = None
            for r in range(row, n):
                if not (aug[r][col] == 0):
                    piv = r
                    break
            if piv is None:
                raise StructureError("antipode-not-bijective: singular matrix")
            aug[row], aug[piv] = aug[piv], aug[row]
            pv = aug[row][col]
            aug[row] = [sdiv(v, pv) for v in aug[row]]
            for r in range(n):
                if r != row and not (aug[r][col] == 0):
                    factor = aug[r][col]
                    aug[r] = [vr - factor * vp
                              for vr, vp in zip(aug[r], aug[row])]
            row += 1
        # Left block is now I, right block is M^-1; with the row convention
        # S^-1(e_k) uses row k of M^-1.
        inv_rows = [r[n:] for r in aug]
        self._antipode_inv_tab = [
            LinComb.from_pairs((j, inv_rows[k][j]) for j in range(n))
            for k in range(n)]
        return self._antipode_inv_tab

    # -- primitives ---------------------------------------------------------------
    def _mul_basis(self, x, y):
        return self.mul_table[x][y]

    def _counit_basis(self, x):
        return self.counit_vec[x]

    def _antipode_basis(self, x, inverse=False):
        if inverse:
            return self._antipode_inverse_table()[x]
        return self.antipode_tab[x]

    def _comul_basis(self, x):
        return self.comul_table[x]

    def _t_basis(self, i, x, y):
        cc = self.comul_table[x] if i in (1, 3) else self.comul_table[y]
        out = LinComb.zero()
        if i == 1:
            for (x1, x2), c in cc.terms.items():
                out = out.add(self.lc(x1).map_labels(lambda l: (l,)).tensor(
                    self.mul(self.lc(x2), self.lc(y)).map_labels(
                        lambda l: (l,))).scale(c))
        elif i == 2:
            for (y1, y2), c in cc.terms.items():
                out = out.add(self.mul(self.lc(x), self.lc(y1)).map_labels(
                    lambda l: (l,)).tensor(
                    self.lc(y2).map_labels(lambda l: (l,))).scale(c))
        elif i == 3:
            for (x1, x2), c in cc.terms.items():
                out = out.add(self.mul(self.lc(x1), self.lc(y)).map_labels(
                    lambda l: (l,)).tensor(
                    self.lc(x2).map_labels(lambda l: (l,))).scale(c))
        elif i == 4:
            for (y1, y2), c in cc.terms.items():
                out = out.add(self.lc(y1).map_labels(lambda l: (l,)).tensor(
                    self.mul(self.lc(x), self.lc(y2)).map_labels(
                        lambda l: (l,))).scale(c))
        else:
            raise ValueError(f"t-map index out of range: {i}")
        return out

    def _t_inv_basis(self, i, x, y):
        # Unital Sweedler inverses:
        #   T1^-1(x⊗y) = x1 ⊗ S(x2) y        T2^-1(x⊗y) = x S(y1) ⊗ y2
        #   T3^-1(x⊗y) = y2 ⊗ S^-1(y1) x     T4^-1(x⊗y) = y S^-1(x2) ⊗ x1
        out = LinComb.zero()
        if i == 1:
            for (x1, x2), c in self.comul_table[x].terms.items():
                out = out.add(self.lc(x1).map_labels(lambda l: (l,)).tensor(
                    self.mul(self._antipode_basis(x2), self.lc(y)).map_labels(
                        lambda l: (l,))).scale(c))
        elif i == 2:
            for (y1, y2), c in self.comul_table[y].terms.items():
                out = out.add(self.mul(self.lc(x),
                                       self._antipode_basis(y1)).map_labels(
                    lambda l: (l,)).tensor(
                    self.lc(y2).map_labels(lambda l: (l,))).scale(c))
        elif i == 3:
            for (y1, y2), c in self.comul_table[y].terms.items():
                out = out.add(self.lc(y2).map_labels(lambda l: (l,)).tensor(
                    self.mul(self._antipode_basis(y1, inverse=True),
                             self.lc(x)).map_labels(lambda l: (l,))).scale(c))
        elif i == 4:
            for (x1, x2), c in self.comul_table[x].terms.items():
                out = out.add(self.mul(self.lc(y),
                                       self._antipode_basis(x2, inverse=True)
                                       ).map_labels(lambda l: (l,)).tensor(
                    self.lc(x1).map_labels(lambda l: (l,))).scale(c))
        else:
            raise ValueError(f"t-map index out of range: {i}")
        return out

    def unit(self):
        return self.unit_vec

    def local_unit_for(self, labels):
        return self.unit_vec

    def aut_label(self, phi, label):
        if self._aut_label_fn is None:
            return super().aut_label(phi, label)
        return self._aut_label_fn(phi, label)

    def basis_labels(self, enum: EnumSpec):
        return list(range(self.dim))

    def parse_label(self, data):
        if self._name_index is not None and isinstance(data, str):
            try:
                return self._name_index[data]
            except KeyError:
                raise StructureError(f"unknown-basis-name: {data!r}") from None
        i = int(data)
        if not 0 <= i < self.dim:
            raise StructureError(f"label-out-of-range: {data!r}")
        return i

    def label_to_json(self, label):
        if self.basis_names is not None:
            return self.basis_names[label]
        return label
