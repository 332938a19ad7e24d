"""Dual pairings between multiplier Hopf algebra instances.

A pairing couples an instance ``A`` (function-like side) with an instance
``B`` (group-like side) through a nondegenerate bilinear form that exchanges
products and coproducts.  It induces four module actions, each computed here
*exactly* through T-maps plus a finite "action unit" that absorbs the
comultiplication cover:

    b |> a = <a_(2), b> a_(1)        a <| b = <a_(1), b> a_(2)
    a |> b = <a, b_(2)> b_(1)        b <| a = <a, b_(1)> b_(2)

The pairing also owns the canonical duality multiplier W (the element
``sum_i e_i (x) e^i`` over dual bases, kept lazy when infinite) and the
"crossed right unit": a finite element of B whose embedded image acts as the
identity on a given finite crossed-product value — the cover everything in
the graded layer leans on.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .groups import AutPair, Automorphism, Group
from .linear import LinComb, lc_combine
from .mha import (DrinfeldDouble, DualDrinfeld, FiniteDimHopf, FunctionAlgebra,
                  GroupAlgebra, MhaInstance, StructureError, sdiv)
from .scalars import Field, RationalField


class PairingError(ValueError):
    """Raised for malformed or unusable pairing data."""


ACT_VARIANTS = ("b>>a", "a<<b", "a>>b", "b<<a")


class Pairing:
    """Base class: exact action evaluation over per-basis pairing values."""

    A: MhaInstance
    B: MhaInstance
    field: Field
    name: str

    def pair_basis(self, la, lb):
        raise NotImplementedError

    def pair(self, a: LinComb, b: LinComb):
        total = self.field.zero()
        for la, ca in a.terms.items():
            for lb, cb in b.terms.items():
                v = self.pair_basis(la, lb)
                if not (v == 0):
                    total = total + ca * cb * v
        return total

    # -- action units ----------------------------------------------------------
    def act_unit_A(self, b_labels: Iterable) -> LinComb:
        """c in A with c |> b = b and b <| c = b for b spanned by ``b_labels``."""
        raise NotImplementedError

    def act_unit_B(self, a_labels: Iterable) -> LinComb:
        """e in B with e |> a = a and a <| e = a for a spanned by ``a_labels``."""
        raise NotImplementedError

    # -- actions ---------------------------------------------------------------
    def act(self, variant: str, actor: LinComb, target: LinComb) -> LinComb:
        """Evaluate one of the four module actions exactly.

        ``variant`` is one of ``"b>>a"`` (actor in B, target in A, result in
        A), ``"a<<b"`` (actor in B, target in A), ``"a>>b"`` (actor in A,
        target in B), ``"b<<a"`` (actor in A, target in B).
        """
        if actor.is_zero() or target.is_zero():
            return LinComb.zero()
        if variant == "b>>a":
            c = self.act_unit_A(actor.support())
            tt = self.A.t_pair(1, target, c)       # sum a1 (x) a2*c
            return self._contract(tt, actor, slot=2)
        if variant == "a<<b":
            c = self.act_unit_A(actor.support())
            tt = self.A.t_pair(2, c, target)       # sum c*a1 (x) a2
            return self._contract(tt, actor, slot=1)
        if variant == "a>>b":
            e = self.act_unit_B(actor.support())
            tt = self.B.t_pair(1, target, e)       # sum b1 (x) b2*e
            return self._contract_a(tt, actor, slot=2)
        if variant == "b<<a":
            e = self.act_unit_B(actor.support())
            tt = self.B.t_pair(2, e, target)       # sum e*b1 (x) b2
            return self._contract_a(tt, actor, slot=1)
        raise PairingError(f"action-variant-unknown: {variant!r}")

    def _contract(self, tt: LinComb, actor_b: LinComb, slot: int) -> LinComb:
        """Contract one tensor leg (in A) against a B-element via the form."""
        pairs = []
        for (l1, l2), c in tt.terms.items():
            a_leg, keep = (l2, l1) if slot == 2 else (l1, l2)
            for lb, cb in actor_b.terms.items():
                v = self.pair_basis(a_leg, lb)
                if not (v == 0):
                    pairs.append((keep, c * cb * v))
        return LinComb.from_pairs(pairs)

    def _contract_a(self, tt: LinComb, actor_a: LinComb, slot: int) -> LinComb:
        """Contract one tensor leg (in B) against an A-element via the form."""
        pairs = []
        for (l1, l2), c in tt.terms.items():
            b_leg, keep = (l2, l1) if slot == 2 else (l1, l2)
            for la, ca in actor_a.terms.items():
                v = self.pair_basis(la, b_leg)
                if not (v == 0):
                    pairs.append((keep, c * ca * v))
        return LinComb.from_pairs(pairs)

    # -- automorphism plumbing ----------------------------------------------------
    def aut_B(self, phi: Automorphism, b: LinComb) -> LinComb:
        """The covariant automorphism of B induced by a group automorphism."""
        return self.B.apply_aut(phi, b)

    def precompose_A(self, phi: Automorphism, a: LinComb) -> LinComb:
        """Transpose action on A: the functional a composed with the induced
        automorphism of B (for label pairings this is relabeling by phi^-1)."""
        return self.A.apply_aut(phi.inverse(), a)

    # -- covers -------------------------------------------------------------------
    def crossed_right_unit(self, grading: AutPair, value: LinComb) -> LinComb:
        """A finite c in B whose left-embedded image fixes ``value``: the
        crossed product of c against the given (A-label, B-label) value at the
        given grading returns the value unchanged.  Default: the unit of B."""
        return self.B.unit()

    # -- canonical multiplier -------------------------------------------------------
    @property
    def w(self) -> "CanonicalW":
        raise NotImplementedError

    # -- validation (duality laws on sampled/basis labels) -------------------------
    def check_duality(self, a_labels, b_labels) -> Optional[str]:
        """Verify the pairing laws on the given label families.

        Checks product/coproduct exchange in both directions, the unit laws
        and antipode compatibility; returns a diagnostic string on the first
        failure, or None.  Comultiplications are evaluated through T-maps, so
        this works over infinite instances too.
        """
        A, B = self.A, self.B
        for la in a_labels:
            a = A.lc(la)
            for lb1 in b_labels:
                for lb2 in b_labels:
                    x, y = B.lc(lb1), B.lc(lb2)
                    # <a, x y> = <a1, x><a2, y>: contract via action then pair
                    lhs = self.pair(a, B.mul(x, y))
                    rhs = self.pair(self.act("a<<b", x, a), y)
                    if not (lhs == rhs):
                        return (f"pairing-product-law-fails(B): a={la!r}, "
                                f"x={lb1!r}, y={lb2!r}")
        for lb in b_labels:
            b = B.lc(lb)
            for la1 in a_labels:
                for la2 in a_labels:
                    x, y = A.lc(la1), A.lc(la2)
                    lhs = self.pair(A.mul(x, y), b)
                    rhs = self.pair(y, self.act("b<<a", x, b))
                    if not (lhs == rhs):
                        return (f"pairing-product-law-fails(A): b={lb!r}, "
                                f"x={la1!r}, y={la2!r}")
        for la in a_labels:
            for lb in b_labels:
                a, b = A.lc(la), B.lc(lb)
                lhs = self.pair(A.antipode(a), b)
                rhs = self.pair(a, B.antipode(b))
                if not (lhs == rhs):
                    return f"pairing-antipode-law-fails: a={la!r}, b={lb!r}"
        # unit laws through the action units
        for la in a_labels:
            a = A.lc(la)
            e = self.act_unit_B([la])
            if not (self.pair(a, e) == A.counit(a)):
                return f"pairing-unit-law-fails(B): a={la!r}"
        for lb in b_labels:
            b = B.lc(lb)
            c = self.act_unit_A([lb])
            if not (self.pair(c, b) == B.counit(b)):
                return f"pairing-unit-law-fails(A): b={lb!r}"
        return None


class CanonicalW:
    """The canonical duality multiplier W = sum_i (basis of B) (x) (dual basis
    in A), with lazy term enumeration where the sum is infinite.

    Terms are ``(b_label, a_label, coeff)`` triples.  The ``candidates_*``
    solvers return the finitely many terms that can survive a given
    application context (everything else is annihilated by a point-mass
    product), which is what keeps applications exact over infinite instances.
    """

    def __init__(self, pairing: Pairing):
        self.P = pairing

    def all_terms(self) -> List[Tuple]:
        raise PairingError("w-not-enumerable: infinite canonical multiplier; "
                           "use a candidate solver or a window")

    def window_terms(self, window: int) -> List[Tuple]:
        """Truncated enumeration for display/comparison over infinite bases."""
        return self.all_terms()

    def candidates_left(self, a_labels: Iterable) -> List[Tuple]:
        """Terms surviving left A-multiplication wa * x for x in the span."""
        return self.all_terms()

    def candidates_right(self, grading: AutPair, a_label, b_label) -> List[Tuple]:
        """Terms surviving right-embedding against a crossed term at the
        given grading: (a_label |x| b_label) * (wa |x| 1)."""
        return self.all_terms()

    def candidates_pairs(self, labels1: Iterable, labels2: Iterable) -> List[Tuple]:
        """Terms whose A-coproduct can hit point masses with the given label
        pairs (used by the comultiplication identities of W)."""
        return self.all_terms()

    def pair_against(self, a: LinComb, b: LinComb):
        """<W, a (x) b> where the A-leg of W pairs with b and the B-leg with a."""
        P = self.P
        total = P.field.zero()
        for wb, wa, cw in self.candidates_left(b.support()):
            for la, ca in a.terms.items():
                v1 = P.pair_basis(la, wb)
                if v1 == 0:
                    continue
                for lb, cb in b.terms.items():
                    v2 = P.pair_basis(wa, lb)
                    if not (v2 == 0):
                        total = total + cw * ca * cb * v1 * v2
        return total


class _GroupW(CanonicalW):
    """W = sum_g (g in B) (x) (point mass at g in A); lazy over infinite H."""

    def all_terms(self):
        g = self.P.B.group
        if not g.is_finite:
            return super().all_terms()
        one = self.P.field.one()
        return [(x, x, one) for x in g.elements()]

    def window_terms(self, window):
        g = self.P.B.group
        if g.is_finite:
            return self.all_terms()
        one = self.P.field.one()
        return [(n, n, one) for n in range(-window, window + 1)]

    def candidates_left(self, a_labels):
        one = self.P.field.one()
        return [(x, x, one) for x in dict.fromkeys(a_labels)]

    def candidates_right(self, grading, a_label, b_label):
        g = self.P.B.group
        alpha, beta = grading
        lbl = g.op(g.op(g.inv(beta(b_label)), a_label), alpha(b_label))
        return [(lbl, lbl, self.P.field.one())]

    def candidates_pairs(self, labels1, labels2):
        g = self.P.B.group
        one = self.P.field.one()
        out = {}
        for u in labels1:
            for v in labels2:
                out[g.op(u, v)] = None
        return [(x, x, one) for x in out]


class _FiniteW(CanonicalW):
    """Eager W for finite-dimensional pairings, weighted by the inverse Gram
    matrix when the supplied duality is not in dual-basis position."""

    def __init__(self, pairing):
        super().__init__(pairing)
        self._terms = None

    def all_terms(self):
        if self._terms is None:
            P = self.P
            n = P.A.dim
            gram = [[P.pair_basis(i, j) for j in range(n)] for i in range(n)]
            inv = _invert_matrix(gram, P.field)
            self._terms = [(j, i, inv[j][i]) for j in range(n) for i in range(n)
                           if not (inv[j][i] == 0)]
        return self._terms


class _DrinfeldW(CanonicalW):
    """W for the double pairing; eager when finite, windowed otherwise, with a
    partial solver that pins the point-mass coordinate."""

    def all_terms(self):
        g = self.P.B.group
        if not g.is_finite:
            return super().all_terms()
        one = self.P.field.one()
        els = g.elements()
        return [((q, l), (q, l), one) for q in els for l in els]

    def window_terms(self, window):
        g = self.P.B.group
        if g.is_finite:
            return self.all_terms()
        one = self.P.field.one()
        ints = range(-window, window + 1)
        return [((q, l), (q, l), one) for q in ints for l in ints]

    def candidates_left(self, a_labels):
        g = self.P.B.group
        if g.is_finite:
            return self.all_terms()
        # A-mult only pins the point-mass coordinate; the group coordinate
        # stays free, so an exact finite candidate set does not exist.
        raise PairingError(
            "w-not-enumerable: the double pairing over an infinite group has "
            "no finite surviving-term set; windowed application only")


def _invert_matrix(rows: List[List], field: Field) -> List[List]:
    n = len(rows)
    aug = [list(r) + [field.one() if i == j else field.zero()
                      for j in range(n)] for i, r in enumerate(rows)]
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if not (aug[r][col] == 0):
                piv = r
                break
        if piv is None:
            raise PairingError("pairing-degenerate: singular duality matrix")
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [sdiv(v, pv) for v in aug[row]]
        for r in range(n):
            if r != row and not (aug[r][col] == 0):
                factor = aug[r][col]
                aug[r] = [vr - factor * vp for vr, vp in zip(aug[r], aug[row])]
        row += 1
    return [r[n:] for r in aug]


class GroupPairing(Pairing):
    """Functions-on-H paired with the group algebra of H by evaluation."""

    def __init__(self, group: Group, field: Optional[Field] = None):
        self.group = group
        self.field = field or RationalField()
        self.A = FunctionAlgebra(group, self.field)
        self.B = GroupAlgebra(group, self.field)
        self.name = "group"
        self._w = _GroupW(self)

    def pair_basis(self, la, lb):
        return self.field.one() if la == lb else self.field.zero()

    def act_unit_A(self, b_labels):
        return lc_combine(self.A.lc(g) for g in dict.fromkeys(b_labels))

    def act_unit_B(self, a_labels):
        return self.B.unit()

    @property
    def w(self):
        return self._w


class FiniteDimPairing(Pairing):
    """A pairing of finite-dimensional instances via an explicit value matrix
    (validated nondegenerate on first W use); the standard construction takes
    an instance together with its transpose dual and the identity matrix."""

    def __init__(self, A: FiniteDimHopf, B: FiniteDimHopf,
                 matrix: Optional[List[List]] = None):
        if A.field != B.field:
            raise PairingError("pairing-field-mismatch")
        self.A = A
        self.B = B
        self.field = A.field
        self.matrix = matrix
        self.name = "finite-dim"
        self._w = _FiniteW(self)

    @staticmethod
    def from_instance(B: FiniteDimHopf) -> "FiniteDimPairing":
        return FiniteDimPairing(B.dual(), B)

    def pair_basis(self, la, lb):
        if self.matrix is not None:
            return self.matrix[la][lb]
        return self.field.one() if la == lb else self.field.zero()

    def act_unit_A(self, b_labels):
        return self.A.unit()

    def act_unit_B(self, a_labels):
        return self.B.unit()

    @property
    def w(self):
        return self._w


class DrinfeldPairing(Pairing):
    """The mirrored double paired with the double by matching labels."""

    def __init__(self, group: Group, field: Optional[Field] = None):
        self.group = group
        self.field = field or RationalField()
        self.A = DualDrinfeld(group, self.field)
        self.B = DrinfeldDouble(group, self.field)
        self.name = "double"
        self._w = _DrinfeldW(self)

    def pair_basis(self, la, lb):
        h, p = la
        q, l = lb
        return self.field.one() if (h == q and p == l) else self.field.zero()

    def act_unit_A(self, b_labels):
        e = self.group.identity
        return lc_combine(self.A.lc((e, l))
                          for l in dict.fromkeys(l for _, l in b_labels))

    def act_unit_B(self, a_labels):
        g = self.group
        e = g.identity
        ws = []
        for h, p in a_labels:
            ws.append(h)
            ws.append(g.conj(g.inv(p), h))
        return lc_combine(self.B.lc((w, e)) for w in dict.fromkeys(ws))

    def crossed_right_unit(self, grading: AutPair, value: LinComb) -> LinComb:
        if self.B.is_unital:
            return self.B.unit()
        g = self.group
        gamma, delta = grading
        e = g.identity
        ws = []
        for (la, lb) in value.support():
            h, p = la
            x, _y = lb
            w = g.op(g.op(delta.inverse()(g.inv(h)), x),
                     gamma.inverse()(g.conj(g.inv(p), h)))
            ws.append(w)
        return lc_combine(self.B.lc((w, e)) for w in dict.fromkeys(ws))

    @property
    def w(self):
        return self._w
