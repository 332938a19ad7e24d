"""Group backends, group automorphisms, and the indexing group of
automorphism pairs.

Three element backends are provided:

* :class:`TableGroup` — finite groups by multiplication table (validated);
* :class:`PermGroup` — finite permutation groups closed from generators;
* :class:`IntGroup` — the additive integers (the one infinite backend).

An :class:`Automorphism` is stored extensionally (image tuple) for finite
groups and as a sign for the integers, so equality and hashing are by value.
:class:`AutPair` carries two commuting-datum automorphisms ``(alpha, beta)``;
the pair set forms a group under

    ``(alpha, beta) * (gamma, delta) = (alpha gamma, delta gamma^-1 beta gamma)``

with inverse ``(alpha^-1, alpha beta^-1 alpha^-1)``; composition is
right-to-left throughout (``(f g)(x) = f(g(x))``).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple


class GroupError(ValueError):
    """Raised for malformed group data (with a named diagnostic)."""


class Group:
    """Common interface: hashable element labels with exact operations."""

    is_finite: bool

    def op(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def elements(self) -> List:
        """All elements (finite backends only)."""
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def conj(self, g, x):
        """g x g^-1."""
        return self.op(self.op(g, x), self.inv(g))

    # -- JSON element codec -------------------------------------------------
    def parse_element(self, data):
        raise NotImplementedError

    def element_to_json(self, x):
        raise NotImplementedError


class TableGroup(Group):
    """A finite group given by its full multiplication table.

    The table is validated on construction: totality, identity, inverses and
    associativity (cubic in the order, fine for the sizes used here).
    """

    is_finite = True

    def __init__(self, labels: Sequence, table: Dict[Tuple, object], identity):
        self._labels = list(labels)
        if len(set(self._labels)) != len(self._labels):
            raise GroupError("duplicate-labels: group labels must be distinct")
        self._set = set(self._labels)
        self._table = dict(table)
        self._identity = identity
        self._validate()
        self._inv = {}
        e = self._identity
        for x in self._labels:
            for y in self._labels:
                if self._table[(x, y)] == e:
                    self._inv[x] = y
                    break

    def _validate(self):
        labs = self._labels
        if self._identity not in self._set:
            raise GroupError("identity-missing: identity label not in element list")
        for x in labs:
            for y in labs:
                z = self._table.get((x, y))
                if z is None:
                    raise GroupError(f"table-incomplete: no product for ({x!r}, {y!r})")
                if z not in self._set:
                    raise GroupError(f"table-escapes: ({x!r}, {y!r}) -> {z!r} not an element")
        e = self._identity
        for x in labs:
            if self._table[(e, x)] != x or self._table[(x, e)] != x:
                raise GroupError(f"identity-fails: {e!r} is not neutral at {x!r}")
        for x in labs:
            if not any(self._table[(x, y)] == e for y in labs):
                raise GroupError(f"inverse-missing: {x!r} has no right inverse")
        for x in labs:
            for y in labs:
                xy = self._table[(x, y)]
                for z in labs:
                    if self._table[(xy, z)] != self._table[(x, self._table[(y, z)])]:
                        raise GroupError(
                            f"associativity-fails: at ({x!r}, {y!r}, {z!r})"
                        )

    def op(self, x, y):
        return self._table[(x, y)]

    def inv(self, x):
        return self._inv[x]

    @property
    def identity(self):
        return self._identity

    def elements(self):
        return list(self._labels)

    def contains(self, x):
        return x in self._set

    def parse_element(self, data):
        if isinstance(data, list):
            data = tuple(data)
        if data not in self._set:
            raise GroupError(f"element-unknown: {data!r}")
        return data

    def element_to_json(self, x):
        return list(x) if isinstance(x, tuple) else x

    @staticmethod
    def cyclic(n: int) -> "TableGroup":
        labels = list(range(n))
        table = {(a, b): (a + b) % n for a in labels for b in labels}
        return TableGroup(labels, table, 0)

    def __repr__(self):
        return f"TableGroup(order={len(self._labels)})"


class PermGroup(Group):
    """A permutation group on ``{0, ..., n-1}``; elements are image tuples.

    The element set is the BFS closure of the generators (bounded at 20000
    elements to catch runaway input).
    """

    is_finite = True
    _CLOSURE_BOUND = 20000

    def __init__(self, n: int, generators: Iterable[Tuple[int, ...]]):
        self.n = n
        gens = []
        for g in generators:
            g = tuple(g)
            if sorted(g) != list(range(n)):
                raise GroupError(f"not-a-permutation: {g!r} on {n} points")
            gens.append(g)
        ident = tuple(range(n))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple(g[x[i]] for i in range(n))  # g after x
                    if y not in seen:
                        if len(seen) >= self._CLOSURE_BOUND:
                            raise GroupError(
                                "closure-overflow: generated group exceeds "
                                f"{self._CLOSURE_BOUND} elements"
                            )
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self._elements = sorted(seen)
        self._set = seen

    def op(self, x, y):
        # (x y)(i) = x(y(i)): apply y first.
        return tuple(x[y[i]] for i in range(self.n))

    def inv(self, x):
        out = [0] * self.n
        for i, xi in enumerate(x):
            out[xi] = i
        return tuple(out)

    @property
    def identity(self):
        return tuple(range(self.n))

    def elements(self):
        return list(self._elements)

    def contains(self, x):
        return x in self._set

    def parse_element(self, data):
        x = tuple(data)
        if x not in self._set:
            raise GroupError(f"element-unknown: {data!r}")
        return x

    def element_to_json(self, x):
        return list(x)

    @staticmethod
    def symmetric(n: int) -> "PermGroup":
        if n < 1:
            raise GroupError("symmetric-degree: need n >= 1")
        if n == 1:
            return PermGroup(1, [(0,)])
        transposition = (1, 0) + tuple(range(2, n))
        cycle = tuple(range(1, n)) + (0,)
        return PermGroup(n, [transposition, cycle])

    def __repr__(self):
        return f"PermGroup(n={self.n}, order={len(self._elements)})"


class IntGroup(Group):
    """The integers under addition."""

    is_finite = False

    def op(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    @property
    def identity(self):
        return 0

    def elements(self):
        raise GroupError("infinite-enumeration: the integer group is infinite")

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def parse_element(self, data):
        if not self.contains(data):
            raise GroupError(f"element-unknown: {data!r} is not an integer")
        return data

    def element_to_json(self, x):
        return x

    def __repr__(self):
        return "IntGroup()"


class Automorphism:
    """A group automorphism in extensional normal form.

    Finite backends store the full image map (hash/eq via the image tuple in
    the group's canonical element order); the integer backend stores a sign.
    Constructors validate the homomorphism and bijection properties.
    """

    __slots__ = ("group", "_map", "_sign", "_key")

    def __init__(self, group: Group, mapping: Optional[Dict] = None, sign: int = 1,
                 _validated: bool = False):
        self.group = group
        if group.is_finite:
            if mapping is None:
                mapping = {x: x for x in group.elements()}
            self._map = mapping
            self._sign = 0
            order = group.elements()
            self._key = tuple(mapping[x] for x in order)
            if not _validated:
                self._validate_finite(order)
        else:
            if sign not in (1, -1):
                raise GroupError("int-automorphism: sign must be +1 or -1")
            self._map = None
            self._sign = sign
            self._key = sign

    def _validate_finite(self, order):
        m = self._map
        if set(m.keys()) != set(order) or set(m.values()) != set(order):
            raise GroupError("automorphism-not-bijective: images must permute the group")
        g = self.group
        for x in order:
            for y in order:
                if m[g.op(x, y)] != g.op(m[x], m[y]):
                    raise GroupError(
                        f"automorphism-not-homomorphic: fails at ({x!r}, {y!r})"
                    )

    def apply(self, x):
        if self._map is not None:
            return self._map[x]
        return x * self._sign

    __call__ = apply

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if self.group is not other.group and self.group != other.group:
            raise GroupError("automorphism-group-mismatch")
        if self._map is not None:
            m = {x: self._map[y] for x, y in other._map.items()}
            return Automorphism(self.group, m, _validated=True)
        return Automorphism(self.group, sign=self._sign * other._sign)

    def inverse(self) -> "Automorphism":
        if self._map is not None:
            return Automorphism(self.group, {v: k for k, v in self._map.items()},
                                _validated=True)
        return Automorphism(self.group, sign=self._sign)

    def is_identity(self) -> bool:
        if self._map is not None:
            return all(k == v for k, v in self._map.items())
        return self._sign == 1

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.group == other.group and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self._map is None:
            return "Aut(x -> -x)" if self._sign == -1 else "Aut(id)"
        if self.is_identity():
            return "Aut(id)"
        moved = {k: v for k, v in self._map.items() if k != v}
        return f"Aut({moved})"


def identity_aut(group: Group) -> Automorphism:
    if group.is_finite:
        return Automorphism(group, {x: x for x in group.elements()}, _validated=True)
    return Automorphism(group, sign=1)


def inner_aut(group: Group, g) -> Automorphism:
    """Conjugation x -> g x g^-1."""
    if not group.is_finite:
        return identity_aut(group)  # the integers are abelian
    m = {x: group.conj(g, x) for x in group.elements()}
    return Automorphism(group, m, _validated=True)


def negation_aut(group: Group) -> Automorphism:
    """x -> x^-1, an automorphism exactly when the group is abelian."""
    if not group.is_finite:
        return Automorphism(group, sign=-1)
    m = {x: group.inv(x) for x in group.elements()}
    return Automorphism(group, m)  # validated: fails loudly on nonabelian input


def map_aut(group: Group, images: Dict) -> Automorphism:
    """An automorphism from an explicit image map (validated)."""
    return Automorphism(group, dict(images))


class AutPair(NamedTuple):
    """An ordered pair of automorphisms, the grading datum."""

    alpha: Automorphism
    beta: Automorphism

    def __repr__(self):
        return f"AutPair({self.alpha!r}, {self.beta!r})"


def aut_pair_mul(p: AutPair, q: AutPair) -> AutPair:
    """(alpha, beta) * (gamma, delta) = (alpha gamma, delta gamma^-1 beta gamma)."""
    alpha, beta = p
    gamma, delta = q
    gi = gamma.inverse()
    return AutPair(alpha.compose(gamma),
                   delta.compose(gi).compose(beta).compose(gamma))


def aut_pair_inv(p: AutPair) -> AutPair:
    """(alpha, beta)^-1 = (alpha^-1, alpha beta^-1 alpha^-1)."""
    alpha, beta = p
    ai = alpha.inverse()
    return AutPair(ai, alpha.compose(beta.inverse()).compose(ai))


def aut_pair_identity(group: Group) -> AutPair:
    e = identity_aut(group)
    return AutPair(e, e)


# -- JSON parsing -----------------------------------------------------------

def group_from_json(spec) -> Group:
    """Build a group backend from a JSON fragment.

    Accepted forms: ``{"kind": "cyclic", "n": 6}``,
    ``{"kind": "symmetric", "n": 3}``,
    ``{"kind": "perm", "degree": 4, "generators": [[1,0,2,3], ...]}``
    (``"n"`` also accepted for the degree),
    ``{"kind": "table", "elements": [...], "mul": [[i,j,k], ...]}``
    (index triples: element i times element j equals element k; a dense
    ``"table"`` of element rows plus ``"identity"`` is also accepted),
    and ``"Z"`` / ``{"kind": "int"}`` for the integers.
    """
    if spec == "Z" or spec == {"kind": "int"} or spec == {"kind": "Z"}:
        return IntGroup()
    if not isinstance(spec, dict):
        raise GroupError(f"group-spec-unreadable: {spec!r}")
    kind = spec.get("kind")
    if kind == "cyclic":
        return TableGroup.cyclic(int(spec["n"]))
    if kind == "symmetric":
        return PermGroup.symmetric(int(spec["n"]))
    if kind == "perm":
        degree = spec.get("degree", spec.get("n"))
        if degree is None:
            raise GroupError("perm-spec: missing degree")
        return PermGroup(int(degree), [tuple(g) for g in spec["generators"]])
    if kind == "table":
        elements = [tuple(e) if isinstance(e, list) else e for e in spec["elements"]]
        n = len(elements)
        table = {}
        if "mul" in spec:
            for row in spec["mul"]:
                if len(row) != 3:
                    raise GroupError(f"table-mul-row: {row!r} needs [i,j,k]")
                i, j, k = (int(v) for v in row)
                if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                    raise GroupError(f"table-mul-row: index out of range in {row!r}")
                table[(elements[i], elements[j])] = elements[k]
            if len(table) != n * n:
                raise GroupError("table-incomplete: mul triples must cover "
                                 "every ordered pair exactly once")
            ident = None
            for e in elements:
                if all(table[(e, x)] == x and table[(x, e)] == x
                       for x in elements):
                    ident = e
                    break
            if ident is None:
                raise GroupError("table-no-identity: no two-sided identity found")
        else:
            rows = spec["table"]
            if len(rows) != n or any(len(r) != n for r in rows):
                raise GroupError("table-shape: table must be square over the element list")
            for i, x in enumerate(elements):
                for j, y in enumerate(elements):
                    z = rows[i][j]
                    table[(x, y)] = tuple(z) if isinstance(z, list) else z
            ident = spec["identity"]
            ident = tuple(ident) if isinstance(ident, list) else ident
        return TableGroup(elements, table, ident)
    raise GroupError(f"group-kind-unknown: {kind!r}")


def aut_from_json(group: Group, spec) -> Automorphism:
    """Build an automorphism from a JSON fragment.

    Accepted forms: ``"identity"``, ``"negation"``,
    ``{"kind": "inner", "by": <element>}``, and
    ``{"kind": "map", "images": {<elem>: <elem>, ...}}`` (or an image list
    aligned with the group's canonical element order).
    """
    if spec == "identity" or spec is None:
        return identity_aut(group)
    if spec == "negation":
        return negation_aut(group)
    if not isinstance(spec, dict):
        raise GroupError(f"aut-spec-unreadable: {spec!r}")
    kind = spec.get("kind")
    if kind == "identity":
        return identity_aut(group)
    if kind == "negation":
        return negation_aut(group)
    if kind == "inner":
        return inner_aut(group, group.parse_element(spec["by"]))
    if kind == "map":
        images = spec["images"]
        if isinstance(images, list):
            order = group.elements()
            if len(images) != len(order):
                raise GroupError("aut-images-shape: image list length must equal group order")
            m = {x: group.parse_element(v) for x, v in zip(order, images)}
        else:
            m = {group.parse_element(k_parsed): group.parse_element(v)
                 for k_parsed, v in _iter_map_items(images)}
        return map_aut(group, m)
    raise GroupError(f"aut-kind-unknown: {kind!r}")


def _iter_map_items(images):
    """JSON object keys are strings; decode them leniently (int or list syntax)."""
    import json as _json

    for k, v in images.items():
        try:
            yield _json.loads(k), v
        except (ValueError, TypeError):
            yield k, v
