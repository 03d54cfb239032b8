"""Finite permutation groups, subgroup lattices and the three flavours of
F-conjugacy (F = Q, R, C).

Group elements are addressed by their index in ``FiniteGroup.elements``;
index 0 is always the identity.  Subgroups are stored as sorted index tuples
together with a bitmask, which makes containment and intersection cheap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import InvalidPermutation, OrderCapExceeded

DEFAULT_ORDER_CAP = 200
FIELD_TAGS = ("Q", "R", "C")


def order_cap():
    value = os.environ.get("EQEULER_GROUP_CAP")
    if value:
        try:
            return int(value)
        except ValueError:
            pass
    return DEFAULT_ORDER_CAP


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {0, ..., degree-1}; ``(p * q)(i) = p(q(i))``."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {list(self.images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        return "Perm(" + ("".join(str(c) for c in cyc) if cyc else "()") + ")"


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class FiniteGroup:
    """A finite permutation group with its full multiplication table.

    Instances are treated as immutable values; derived data (subgroup
    lattice, character tables, ...) is memoised in ``_memo``.  Equality is
    identity.
    """

    def __init__(self, degree, elements, generators=()):
        self.degree = degree
        self.elements = tuple(elements)
        self._index = {p: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("element 0 must be the identity")
        n = len(self.elements)
        idx = self._index
        self.mult = tuple(
            tuple(idx[a * b] for b in self.elements) for a in self.elements
        )
        self.inv = tuple(row.index(0) for row in self.mult)
        self.generators = tuple(generators)
        self.order = n
        self._memo = {}

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, degree={self.degree})"

    def __len__(self):
        return self.order

    def memo(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = fn()
            return value

    def index(self, perm):
        return self._index[perm]

    def mul(self, a, b):
        return self.mult[a][b]

    def conj(self, a, g):
        """g^-1 a g."""
        return self.mult[self.mult[self.inv[g]][a]][g]

    def power(self, a, k):
        k %= self.element_order(a)
        r = 0
        for _ in range(k):
            r = self.mult[r][a]
        return r

    @cached_property
    def element_orders(self):
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.mult[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def element_order(self, a):
        return self.element_orders[a]

    @cached_property
    def exponent(self):
        e = 1
        for o in self.element_orders:
            e = e * o // gcd(e, o)
        return e

    @cached_property
    def full_mask(self):
        return (1 << self.order) - 1

    def powers(self, a):
        out, x = [0], a
        while x != 0:
            out.append(x)
            x = self.mult[x][a]
        return out

    @cached_property
    def spanning_tree(self):
        """For each element: (parent, generator position) with elem = parent * gen."""
        tree = {0: None}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for pos, g in enumerate(self.generators):
                    b = self.mult[a][g]
                    if b not in tree:
                        tree[b] = (a, pos)
                        nxt.append(b)
            frontier = nxt
        if len(tree) != self.order:
            raise ValueError("generators do not generate the group")
        return tree

    def extend_hom(self, generator_images, compose, identity):
        """Extend images of the generators to a map on all elements.

        ``compose(x, y)`` must realise the product of images.  The result is
        checked to be a homomorphism; ``None`` is returned otherwise.
        """
        tree = self.spanning_tree
        images = [None] * self.order
        images[0] = identity
        order = sorted(tree, key=lambda a: _depth(tree, a))
        for a in order:
            if a == 0:
                continue
            parent, pos = tree[a]
            images[a] = compose(images[parent], generator_images[pos])
        for a in range(self.order):
            for pos, g in enumerate(self.generators):
                if images[self.mult[a][g]] != compose(images[a], generator_images[pos]):
                    return None
        return images

    # --- subgroups -------------------------------------------------------

    def mask_of(self, members):
        m = 0
        for i in members:
            m |= 1 << i
        return m

    def subgroup(self, members):
        members = tuple(sorted(set(members)))
        return Subgroup(self, members)

    def closure_mask(self, gens):
        """Bitmask of the subgroup generated by the element indices ``gens``."""
        gens = [g for g in gens if g != 0]
        mask = 1
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                row = self.mult[a]
                for g in gens:
                    b = row[g]
                    if not (mask >> b) & 1:
                        mask |= 1 << b
                        nxt.append(b)
            frontier = nxt
        return mask

    def closure(self, gens):
        return Subgroup.from_mask(self, self.closure_mask(gens))

    def cyclic_subgroup(self, a):
        return self.subgroup(self.powers(a))

    @cached_property
    def trivial_subgroup(self):
        return Subgroup(self, (0,))

    @cached_property
    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    def conjugate_mask(self, mask, g):
        """Mask of g^-1 S g."""
        out = 0
        for i in _bits(mask):
            out |= 1 << self.conj(i, g)
        return out

    @cached_property
    def is_abelian(self):
        m = self.mult
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def is_cyclic(self):
        return self.order in self.element_orders


def _depth(tree, a):
    d = 0
    while tree[a] is not None:
        a = tree[a][0]
        d += 1
    return d


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False)
    members: tuple

    @classmethod
    def from_mask(cls, group, mask):
        return cls(group, tuple(_bits(mask)))

    @cached_property
    def mask(self):
        return self.parent.mask_of(self.members)

    @property
    def order(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return (self.mask >> a) & 1 == 1

    def __iter__(self):
        return iter(self.members)

    def is_subgroup_of(self, other):
        return self.mask & ~other.mask == 0

    def conjugate(self, g):
        """g^-1 H g."""
        return Subgroup.from_mask(self.parent, self.parent.conjugate_mask(self.mask, g))

    @cached_property
    def is_cyclic(self):
        return any(self.parent.element_order(a) == self.order for a in self.members)

    def generator(self):
        """Smallest-index generator of a cyclic subgroup (None otherwise)."""
        for a in self.members:
            if self.parent.element_order(a) == self.order:
                return a
        return None

    def local_index(self, a):
        return self._local[a]

    @cached_property
    def _local(self):
        return {a: i for i, a in enumerate(self.members)}

    def as_group(self):
        """The subgroup as a FiniteGroup; element i corresponds to ``members[i]``."""
        G = self.parent

        def build():
            elements = [G.elements[a] for a in self.members]
            gens = _small_generating_set(G, self.members)
            return FiniteGroup(G.degree, elements, [self._local[g] for g in gens])

        return G.memo(("as_group", self.members), build)

    def left_coset_reps(self):
        """Minimal representative of each left coset gH, sorted."""
        G = self.parent
        seen = 0
        reps = []
        for g in range(G.order):
            if (seen >> g) & 1:
                continue
            reps.append(g)
            for h in self.members:
                seen |= 1 << G.mult[g][h]
        return reps

    def coset_rep(self, g):
        G = self.parent
        return min(G.mult[g][h] for h in self.members)


def _small_generating_set(G, members):
    gens, mask = [], 1
    target = G.mask_of(members)
    for a in members:
        if not (mask >> a) & 1:
            gens.append(a)
            mask = G.closure_mask(gens)
            if mask == target:
                break
    return gens


def generate_group(degree, generators, cap=None):
    """Close ``generators`` under composition.

    Elements are ordered breadth-first over generator words; each layer is
    sorted lexicographically by image tuple.
    """
    cap = order_cap() if cap is None else cap
    gens = []
    for g in generators:
        p = g if isinstance(g, Perm) else Perm(tuple(g))
        if p.degree != degree:
            raise InvalidPermutation(f"generator {list(p.images)} has degree {p.degree}, expected {degree}")
        gens.append(p)
    identity = Perm.identity(degree)
    seen = {identity}
    elements = [identity]
    layer = [identity]
    while layer:
        new = set()
        for a in layer:
            for g in gens:
                b = a * g
                if b not in seen and b not in new:
                    new.add(b)
        layer = sorted(new)
        seen.update(layer)
        elements.extend(layer)
        if len(elements) > cap:
            raise OrderCapExceeded(f"group order exceeds cap {cap}")
    index = {p: i for i, p in enumerate(elements)}
    return FiniteGroup(degree, elements, [index[g] for g in gens])


# --- subgroup lattice ----------------------------------------------------


def all_subgroups(G):
    """Every subgroup exactly once, ordered by (order, member list)."""

    def build():
        cyclic = {}
        for a in range(G.order):
            m = G.mask_of(G.powers(a))
            if m not in cyclic:
                cyclic[m] = a
        found = {m: [a] for m, a in cyclic.items()}
        layer = dict(found)
        while layer:
            new = {}
            for amask, agens in layer.items():
                for cmask, c in cyclic.items():
                    if cmask & ~amask == 0:
                        continue
                    jm = G.closure_mask(agens + [c])
                    if jm not in found and jm not in new:
                        new[jm] = agens + [c]
            found.update(new)
            layer = new
        subs = [Subgroup.from_mask(G, m) for m in found]
        subs.sort(key=lambda s: (s.order, s.members))
        return tuple(subs)

    return G.memo("all_subgroups", build)


@dataclass(frozen=True)
class SubgroupClass:
    index: int
    representative: Subgroup
    conjugates: tuple

    @property
    def order(self):
        return self.representative.order


@dataclass(frozen=True)
class SubgroupClassTable:
    group: FiniteGroup = field(repr=False)
    classes: tuple
    # mask -> (class index, g) with g^-1 S g = representative
    lookup: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def class_of(self, subgroup):
        mask = subgroup if isinstance(subgroup, int) else subgroup.mask
        return self.lookup[mask][0]

    def conjugator(self, subgroup):
        """g with g^-1 S g equal to the class representative."""
        mask = subgroup if isinstance(subgroup, int) else subgroup.mask
        return self.lookup[mask][1]

    def representatives(self):
        return [c.representative for c in self.classes]

    def cyclic_indices(self):
        return [c.index for c in self.classes if c.representative.is_cyclic]


def subgroup_classes(G):
    def build():
        subs = all_subgroups(G)
        assigned = {}
        raw = []
        for s in subs:
            if s.mask in assigned:
                continue
            conj = {}
            for g in range(G.order):
                cm = G.conjugate_mask(s.mask, g)
                conj.setdefault(cm, g)
            # s is minimal in its class since subs is sorted and s unassigned
            members = sorted((Subgroup.from_mask(G, m) for m in conj), key=lambda t: t.members)
            raw.append((s, members, conj))
            for m in conj:
                assigned[m] = True
        classes, lookup = [], {}
        for i, (rep, members, conj) in enumerate(raw):
            classes.append(SubgroupClass(i, rep, tuple(members)))
            # conj maps g^-1 rep g -> g ; for S = g^-1 rep g we need h with h^-1 S h = rep: h = g^-1
            for m, g in conj.items():
                lookup[m] = (i, G.inv[g])
        return SubgroupClassTable(G, tuple(classes), lookup)

    return G.memo("subgroup_classes", build)


def is_subconjugate(G, K, H):
    """True if some conjugate of K lies in H."""
    return any(G.conjugate_mask(K.mask, g) & ~H.mask == 0 for g in range(G.order))


def normalizer(G, H):
    members = [g for g in range(G.order) if G.conjugate_mask(H.mask, g) == H.mask]
    return Subgroup(G, tuple(members))


@dataclass(frozen=True)
class QuotientGroup:
    """N/H realised as the permutation group of its left-regular action.

    ``section[i]`` is the minimal element of G in the i-th coset.
    """

    group: FiniteGroup
    section: tuple
    numerator: Subgroup = field(repr=False)
    kernel: Subgroup = field(repr=False)

    @property
    def order(self):
        return self.group.order

    def project(self, g):
        """Index in ``group`` of the coset gH (g in the numerator)."""
        return self._coset_index[self.kernel.coset_rep(g)]

    @cached_property
    def _coset_index(self):
        return {r: i for i, r in enumerate(self.section)}


def quotient(N, H):
    """N/H for H normal in N (both subgroups of the same group)."""
    G = N.parent
    reps = []
    seen = 0
    for n in N.members:
        if (seen >> n) & 1:
            continue
        reps.append(n)
        for h in H.members:
            seen |= 1 << G.mult[n][h]
    pos = {r: i for i, r in enumerate(reps)}
    perms = []
    for r in reps:
        perms.append(Perm(tuple(pos[H.coset_rep(G.mult[r][s])] for s in reps)))
    qgroup = FiniteGroup(len(reps), perms, [])
    gens = _small_generating_set(qgroup, range(qgroup.order))
    qgroup.generators = tuple(gens)
    return QuotientGroup(qgroup, tuple(reps), N, H)


def weyl_group(G, H):
    """WH = NH/H together with coset representatives in G."""
    return G.memo(("weyl", H.mask), lambda: quotient(normalizer(G, H), H))


# --- F-conjugacy ---------------------------------------------------------


@dataclass(frozen=True)
class FClassPartition:
    field_tag: str
    classes: tuple  # tuple of sorted index tuples, ordered by minimal element
    class_of: tuple  # element index -> class position

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def representative(self, i):
        return self.classes[i][0]

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self):
        return tuple(len(c) for c in self.classes)


def _partition(G, tag, same_block):
    class_of = [-1] * G.order
    classes = []
    for a in range(G.order):
        if class_of[a] >= 0:
            continue
        block = sorted(same_block(a))
        for b in block:
            class_of[b] = len(classes)
        classes.append(tuple(block))
    return FClassPartition(tag, tuple(classes), tuple(class_of))


def f_conjugacy_classes(G, field_tag):
    if field_tag not in FIELD_TAGS:
        raise ValueError(f"field tag must be one of {FIELD_TAGS}")

    def build():
        if field_tag == "C":
            return _partition(G, "C", lambda a: {G.conj(a, g) for g in range(G.order)})
        if field_tag == "R":
            return _partition(
                G, "R",
                lambda a: {G.conj(b, g) for b in (a, G.inv[a]) for g in range(G.order)},
            )
        # Q: <a> and <b> conjugate; equivalently b is conjugate to a generator of <a>
        def block(a):
            o = G.element_order(a)
            gens = [G.power(a, k) for k in range(1, o + 1) if gcd(k, o) == 1] or [0]
            return {G.conj(b, g) for b in gens for g in range(G.order)}

        return _partition(G, "Q", block)

    return G.memo(("fclasses", field_tag), build)


def centralizer_f(G, g, field_tag):
    """C_F(g): elements h with h^-1 g h in <g> (Q), in {g, g^-1} (R), = g (C)."""
    if field_tag == "Q":
        allowed = set(G.powers(g))
    elif field_tag == "R":
        allowed = {g, G.inv[g]}
    elif field_tag == "C":
        allowed = {g}
    else:
        raise ValueError(f"field tag must be one of {FIELD_TAGS}")
    return Subgroup(G, tuple(h for h in range(G.order) if G.conj(g, h) in allowed))


def z_f(G, g, field_tag):
    """Z_F(g) = C_F(g)/<g>, with a section into G."""
    return G.memo(
        ("z_f", g, field_tag),
        lambda: quotient(centralizer_f(G, g, field_tag), G.cyclic_subgroup(g)),
    )


def cyclic_subgroup_class_count(G):
    table = subgroup_classes(G)
    return sum(1 for c in table if c.representative.is_cyclic)
