"""Finite linear combinations of basis labels, with exact coefficients.

Every algebra element in this package is a :class:`LinComb`: a dictionary from
hashable basis labels to nonzero exact scalars.  Tensors are linear
combinations over tuple labels.  Zero coefficients are dropped eagerly, so
equality of values is plain dictionary equality.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, Tuple


def label_key(label):
    """A total order on heterogeneous basis labels, for deterministic output.

    Integers sort first (by value), then everything non-tuple by its repr,
    then tuples recursively componentwise (shorter first).  Deterministic
    reports, exports and counterexample selection all sort by this key.
    """
    if isinstance(label, tuple):
        return (2, len(label), tuple(label_key(x) for x in label))
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label)
    return (1, repr(label))


class LinComb:
    """An immutable-by-convention finite linear combination of labels."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict = None):
        self.terms = terms if terms is not None else {}

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero() -> "LinComb":
        return LinComb({})

    @staticmethod
    def unit(label, coeff=1) -> "LinComb":
        if coeff == 0:
            return LinComb({})
        return LinComb({label: coeff})

    @staticmethod
    def from_pairs(pairs: Iterable[Tuple]) -> "LinComb":
        out: Dict = {}
        for label, c in pairs:
            if c == 0:
                continue
            acc = out.get(label)
            if acc is None:
                out[label] = c
            else:
                acc = acc + c
                if acc == 0:
                    del out[label]
                else:
                    out[label] = acc
        return LinComb(out)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, label):
        return self.terms.get(label, 0)

    def support(self):
        return list(self.terms.keys())

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: label_key(kv[0]))

    def __iter__(self) -> Iterator[Tuple]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LinComb(0)"
        parts = [f"{c}*{lbl!r}" for lbl, c in self.sorted_items()]
        return "LinComb(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------------
    def add(self, other: "LinComb") -> "LinComb":
        if not other.terms:
            return LinComb(dict(self.terms))
        out = dict(self.terms)
        for label, c in other.terms.items():
            acc = out.get(label)
            if acc is None:
                out[label] = c
            else:
                acc = acc + c
                if acc == 0:
                    del out[label]
                else:
                    out[label] = acc
        return LinComb(out)

    __add__ = add

    def neg(self) -> "LinComb":
        return LinComb({label: -c for label, c in self.terms.items()})

    __neg__ = neg

    def sub(self, other: "LinComb") -> "LinComb":
        return self.add(other.neg())

    __sub__ = sub

    def scale(self, c) -> "LinComb":
        if c == 0:
            return LinComb({})
        return LinComb({label: c * v for label, v in self.terms.items()})

    # -- structure maps -----------------------------------------------------
    def tensor(self, other: "LinComb") -> "LinComb":
        """Tensor product: labels are concatenated into flat tuples.

        Both operands must already use tuple labels of fixed arity (the
        package convention: algebra labels are wrapped into 1-tuples before
        entering tensor space).
        """
        out: Dict = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                out[l1 + l2] = c1 * c2
        return LinComb(out)

    def map_labels(self, f: Callable) -> "LinComb":
        """Apply a label bijection term-by-term (no collisions expected,
        but collisions are still accumulated exactly)."""
        return LinComb.from_pairs((f(label), c) for label, c in self.terms.items())

    def map_terms(self, f: Callable) -> "LinComb":
        """Flat-map each term through ``f(label) -> LinComb``, scaling by the
        term's coefficient and summing exactly."""
        out: Dict = {}
        for label, c in self.terms.items():
            for l2, c2 in f(label).terms.items():
                cc = c * c2
                acc = out.get(l2)
                if acc is None:
                    if cc != 0:
                        out[l2] = cc
                else:
                    acc = acc + cc
                    if acc == 0:
                        del out[l2]
                    else:
                        out[l2] = acc
        return LinComb(out)


def lc_combine(parts: Iterable[LinComb]) -> LinComb:
    """Exact sum of many linear combinations."""
    out: Dict = {}
    for part in parts:
        for label, c in part.terms.items():
            acc = out.get(label)
            if acc is None:
                out[label] = c
            else:
                acc = acc + c
                if acc == 0:
                    del out[label]
                else:
                    out[label] = acc
    return LinComb(out)


def lc_tensor(*factors: LinComb) -> LinComb:
    """Tensor of several factors (flat tuple labels)."""
    it = iter(factors)
    acc = next(it)
    for f in it:
        acc = acc.tensor(f)
    return acc


def wrap1(x: LinComb) -> LinComb:
    """Wrap plain labels into 1-tuples so the value can enter tensor space."""
    return LinComb({(label,): c for label, c in x.terms.items()})


def unwrap1(x: LinComb) -> LinComb:
    """Inverse of :func:`wrap1`."""
    return LinComb({label[0]: c for label, c in x.terms.items()})


def exact_rank(rows: Iterable[LinComb]) -> int:
    """Rank of a family of vectors, by fraction-free-ish Gaussian elimination
    over sparse dict rows.  Exact: pivots divide, using the scalars' own
    division (Fraction / FpElement)."""
    pivots: Dict = {}  # pivot label -> reduced row (dict)
    rank = 0
    for row in rows:
        work = dict(row.terms)
        while work:
            # eliminate against existing pivots
            lead = min(work.keys(), key=label_key)
            if lead in pivots:
                piv = pivots[lead]
                factor = work[lead]
                for label, c in piv.items():
                    acc = work.get(label, 0) - factor * c
                    if acc == 0:
                        work.pop(label, None)
                    else:
                        work[label] = acc
            else:
                inv_candidates = work[lead]
                # normalise so the pivot coefficient is 1
                if isinstance(inv_candidates, int):
                    from fractions import Fraction as _F

                    scale = _F(1, 1) / _F(inv_candidates, 1)
                else:
                    scale = 1 / inv_candidates
                pivots[lead] = {label: scale * c for label, c in work.items()}
                rank += 1
                break
        # row reduced to zero: contributes nothing
    return rank
