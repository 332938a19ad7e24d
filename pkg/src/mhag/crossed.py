"""The diagonal crossed product of a pairing, twisted by a pair of
automorphisms.

A component value is a linear combination over labels ``(a_label, b_label)``
— written a |x| b below — with the product

    (a |x| b)(a' |x| b') = a (alpha(b_(1)) |> a' <| S^-1 beta(b_(3))) |x| b_(2) b'

for the component's automorphism pair (alpha, beta).  The workhorse is the
twist: the bijection B (x) A -> A (x) B sending b (x) a to
(alpha(b_(1)) |> a <| S^-1 beta(b_(3))) (x) b_(2).  It factors through four
elementary moves (one action each), every one computed through a T-map whose
cover is absorbed against an action unit — so each step is exact and finite
even when the comultiplication of B is not.

Multiplier embeddings: A embeds on the left and B on the right of a value
label-by-label; B on the left and A on the right require the twist.
"""

from __future__ import annotations

from typing import Callable, Dict, Optional

from .groups import AutPair, Automorphism
from .linear import LinComb
from .mha import StructureError
from .pairing import Pairing, PairingError


class EngineError(ValueError):
    """Raised when an evaluation strategy is unavailable for an instance."""


def _acc(out: Dict, label, coeff):
    acc = out.get(label)
    if acc is None:
        if not (coeff == 0):
            out[label] = coeff
    else:
        acc = acc + coeff
        if acc == 0:
            del out[label]
        else:
            out[label] = acc


# -- elementary twist moves (A (x) B -> A (x) B, labels (la, lb)) -------------

def _t1(P: Pairing, alpha: Automorphism, x: LinComb) -> LinComb:
    """(la, lb) -> sum (alpha(b_(1)) |> a, b_(2))."""
    B = P.B
    out: Dict = {}
    e = P.act_unit_B([la for la, _ in x.terms])
    cov = B.apply_aut(alpha.inverse(), e)
    for (la, lb), c in x.terms.items():
        legs = B.t_pair(3, B.lc(lb), cov)          # sum b1*cov (x) b2
        for (u, v), c1 in legs.terms.items():
            hit = P.act("b>>a", B.apply_aut(alpha, B.lc(u)), P.A.lc(la))
            for la2, c2 in hit.terms.items():
                _acc(out, (la2, v), c * c1 * c2)
    return LinComb(out)


def _t1_inv(P: Pairing, alpha: Automorphism, x: LinComb) -> LinComb:
    """(la, lb) -> sum (S^-1 alpha(b_(1)) |> a, b_(2))."""
    B = P.B
    out: Dict = {}
    e = P.act_unit_B([la for la, _ in x.terms])
    cov = B.apply_aut(alpha.inverse(), B.antipode(e))
    for (la, lb), c in x.terms.items():
        legs = B.t_pair(2, cov, B.lc(lb))          # sum cov*b1 (x) b2
        for (u, v), c1 in legs.terms.items():
            actor = B.antipode(B.apply_aut(alpha, B.lc(u)), inverse=True)
            hit = P.act("b>>a", actor, P.A.lc(la))
            for la2, c2 in hit.terms.items():
                _acc(out, (la2, v), c * c1 * c2)
    return LinComb(out)


def _t2(P: Pairing, beta: Automorphism, x: LinComb) -> LinComb:
    """(la, lb) -> sum (a <| beta(b_(2)), b_(1))."""
    B = P.B
    out: Dict = {}
    e = P.act_unit_B([la for la, _ in x.terms])
    cov = B.apply_aut(beta.inverse(), e)
    for (la, lb), c in x.terms.items():
        legs = B.t_pair(4, cov, B.lc(lb))          # sum b1 (x) cov*b2
        for (u, v), c1 in legs.terms.items():
            hit = P.act("a<<b", B.apply_aut(beta, B.lc(v)), P.A.lc(la))
            for la2, c2 in hit.terms.items():
                _acc(out, (la2, u), c * c1 * c2)
    return LinComb(out)


def _t2_inv(P: Pairing, beta: Automorphism, x: LinComb) -> LinComb:
    """(la, lb) -> sum (a <| S^-1 beta(b_(2)), b_(1))."""
    B = P.B
    out: Dict = {}
    e = P.act_unit_B([la for la, _ in x.terms])
    cov = B.apply_aut(beta.inverse(), B.antipode(e))
    for (la, lb), c in x.terms.items():
        legs = B.t_pair(1, B.lc(lb), cov)          # sum b1 (x) b2*cov
        for (u, v), c1 in legs.terms.items():
            actor = B.antipode(B.apply_aut(beta, B.lc(v)), inverse=True)
            hit = P.act("a<<b", actor, P.A.lc(la))
            for la2, c2 in hit.terms.items():
                _acc(out, (la2, u), c * c1 * c2)
    return LinComb(out)


def twist_map(P: Pairing, grading: AutPair, x_ba: LinComb) -> LinComb:
    """The twist at a grading: labels (lb, la) -> sum over (la', lb')."""
    alpha, beta = grading
    swapped = x_ba.map_labels(lambda t: (t[1], t[0]))
    return _t1(P, alpha, _t2_inv(P, beta, swapped))


def twist_inv(P: Pairing, grading: AutPair, x_ab: LinComb) -> LinComb:
    """Inverse twist: labels (la, lb) -> sum over (lb', la')."""
    alpha, beta = grading
    return _t2(P, beta, _t1_inv(P, alpha, x_ab)).map_labels(
        lambda t: (t[1], t[0]))


# -- multiplier embeddings -----------------------------------------------------

def a_embed_left(P: Pairing, a: LinComb, y: LinComb) -> LinComb:
    """(a |x| 1) * y: left A-multiplication on the A-slot, label-by-label."""
    out: Dict = {}
    for (la, lb), c in y.terms.items():
        prod = P.A.mul(a, P.A.lc(la))
        for la2, c2 in prod.terms.items():
            _acc(out, (la2, lb), c * c2)
    return LinComb(out)


def b_embed_right(P: Pairing, y: LinComb, b: LinComb) -> LinComb:
    """y * (1 |x| b): right B-multiplication on the B-slot, label-by-label."""
    out: Dict = {}
    for (la, lb), c in y.terms.items():
        prod = P.B.mul(P.B.lc(lb), b)
        for lb2, c2 in prod.terms.items():
            _acc(out, (la, lb2), c * c2)
    return LinComb(out)


def b_embed_left(P: Pairing, grading: AutPair, b: LinComb, y: LinComb) -> LinComb:
    """(1 |x| b) * y, via the twist: the B-legs of b are pulled through the
    A-part of every term of y."""
    out: Dict = {}
    for (la, lb2), c in y.terms.items():
        tw = twist_map(P, grading, b.map_labels(lambda l: (l, la)))
        for (la2, lb1), c1 in tw.terms.items():
            prod = P.B.mul(P.B.lc(lb1), P.B.lc(lb2))
            for lb3, c2 in prod.terms.items():
                _acc(out, (la2, lb3), c * c1 * c2)
    return LinComb(out)


def a_embed_right(P: Pairing, grading: AutPair, y: LinComb, a: LinComb) -> LinComb:
    """y * (a |x| 1), via the twist applied to each term's B-label."""
    out: Dict = {}
    for (la1, lb1), c in y.terms.items():
        tw = twist_map(P, grading, a.map_labels(lambda l: (lb1, l)))
        for (la2, lb2), c1 in tw.terms.items():
            prod = P.A.mul(P.A.lc(la1), P.A.lc(la2))
            for la3, c2 in prod.terms.items():
                _acc(out, (la3, lb2), c * c1 * c2)
    return LinComb(out)


def dcp_mul(P: Pairing, grading: AutPair, x: LinComb, y: LinComb) -> LinComb:
    """The full component product x * y at a grading (both values are
    (A-label, B-label) combinations; the grading is the LEFT factor's)."""
    out: Dict = {}
    for (la, lb), c in x.terms.items():
        mid = b_embed_left(P, grading, P.B.lc(lb), y)
        done = a_embed_left(P, P.A.lc(la), mid)
        for label, c2 in done.terms.items():
            _acc(out, label, c * c2)
    return LinComb(out)


def crossed_value(P: Pairing, a: LinComb, b: LinComb) -> LinComb:
    """Assemble a |x| b from factor values."""
    return a.map_labels(lambda l: (l,)).tensor(b.map_labels(lambda l: (l,)))


def commutation_residual(P: Pairing, grading: AutPair, a: LinComb,
                         b: LinComb, y: LinComb):
    """Both sides of the embedded commutation rule, applied to a value y:

        sum (1 |x| beta^-1(b_(1))) ((a <| b_(2)) |x| 1) * y
        == sum ((alpha beta^-1(b_(1)) |> a) |x| beta^-1(b_(2))) * y

    Returns the pair (lhs, rhs); equality for all inputs is the component's
    commutation law.
    """
    alpha, beta = grading
    A, B = P.A, P.B
    e = P.act_unit_B(a.support())
    lhs: Dict = {}
    legs = B.t_map(4, e.map_labels(lambda l: (l,)).tensor(
        b.map_labels(lambda l: (l,))))             # sum b1 (x) e*b2
    for (u, v), c1 in legs.terms.items():
        av = P.act("a<<b", B.lc(v), a)
        inner = a_embed_left(P, av, y)
        part = b_embed_left(P, grading,
                            B.apply_aut(beta.inverse(), B.lc(u)), inner)
        for label, c2 in part.terms.items():
            _acc(lhs, label, c1 * c2)
    rhs: Dict = {}
    ab_inv = alpha.compose(beta.inverse())
    cov = B.apply_aut(beta.compose(alpha.inverse()), e)
    legs2 = B.t_map(3, b.map_labels(lambda l: (l,)).tensor(
        cov.map_labels(lambda l: (l,))))           # sum b1*cov (x) b2
    for (u, v), c1 in legs2.terms.items():
        au = P.act("b>>a", B.apply_aut(ab_inv, B.lc(u)), a)
        elem = crossed_value(P, au, B.apply_aut(beta.inverse(), B.lc(v)))
        part = dcp_mul(P, grading, elem, y)
        for label, c2 in part.terms.items():
            _acc(rhs, label, c1 * c2)
    return LinComb(lhs), LinComb(rhs)
