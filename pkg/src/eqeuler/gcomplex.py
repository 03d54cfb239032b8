"""Finite simplicial complexes with a simplicial action of a finite group.

Simplices are sorted vertex tuples.  The action is stored as one vertex
permutation per group element (indexed like ``G.elements``).  Fixed sets
X^H are taken as full subcomplexes on H-fixed vertices, which is only
correct for admissible actions; ``validate_and_subdivide`` enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil

from .burnside import BurnsideElement
from .errors import InternalInconsistency, InvalidActionData, NotSimplicialAction
from .group_core import Subgroup, subgroup_classes, weyl_group


def _compose(p, q):
    return tuple(p[i] for i in q)


def _closure(maximal):
    faces = set()
    for s in maximal:
        s = tuple(sorted(set(s)))
        if not s or s in faces:
            continue
        for k in range(1, len(s) + 1):
            faces.update(combinations(s, k))
    return faces


class GSimplicialComplex:
    def __init__(self, group, vertex_count, simplices, action):
        self.group = group
        self.vertex_count = vertex_count
        self.simplices = tuple(sorted(simplices, key=lambda s: (len(s), s)))
        self.simplex_set = frozenset(self.simplices)
        self.action = tuple(tuple(p) for p in action)
        self._cache = {}

    # --- construction ------------------------------------------------------

    @classmethod
    def from_data(cls, group, vertex_count, maximal_simplices, generator_images):
        if len(generator_images) != len(group.generators):
            raise InvalidActionData(
                f"{len(generator_images)} generator images for {len(group.generators)} generators"
            )
        images = []
        for img in generator_images:
            img = tuple(int(v) for v in img)
            if sorted(img) != list(range(vertex_count)):
                raise InvalidActionData(f"generator image {list(img)} is not a vertex permutation")
            images.append(img)
        for s in maximal_simplices:
            if any(not 0 <= int(v) < vertex_count for v in s):
                raise InvalidActionData(f"simplex {list(s)} uses an unknown vertex")
        faces = _closure([tuple(int(v) for v in s) for s in maximal_simplices])
        faces.update((v,) for v in range(vertex_count))
        for img in images:
            for s in faces:
                if tuple(sorted(img[v] for v in s)) not in faces:
                    raise NotSimplicialAction(f"image of simplex {list(s)} is not a simplex")
        action = group.extend_hom(images, _compose, tuple(range(vertex_count)))
        if action is None:
            raise InvalidActionData("generator images do not define a group action")
        return cls(group, vertex_count, faces, action)

    def maximal_simplices(self):
        out = []
        by_vertex = {}
        for s in self.simplices:
            for v in s:
                by_vertex.setdefault(v, []).append(s)
        for s in self.simplices:
            sset = set(s)
            if not any(len(t) > len(s) and sset.issubset(t) for t in by_vertex[s[0]]):
                out.append(s)
        return out

    def to_json(self):
        gens = [list(self.action[g]) for g in self.group.generators]
        return {
            "vertices": self.vertex_count,
            "simplices": [list(s) for s in self.maximal_simplices()],
            "action": {"generator_images": gens},
        }

    # --- basic invariants ----------------------------------------------------

    @property
    def dimension(self):
        return max((len(s) for s in self.simplices), default=0) - 1

    def f_vector(self):
        out = [0] * (self.dimension + 1)
        for s in self.simplices:
            out[len(s) - 1] += 1
        return out

    def euler_characteristic(self, simplices=None):
        simplices = self.simplices if simplices is None else simplices
        return sum(1 if len(s) % 2 else -1 for s in simplices)

    def image(self, g, s):
        p = self.action[g]
        return tuple(sorted(p[v] for v in s))

    @property
    def vertex_stabilizers(self):
        if "stab" not in self._cache:
            masks = [0] * self.vertex_count
            for g, p in enumerate(self.action):
                for v in range(self.vertex_count):
                    if p[v] == v:
                        masks[v] |= 1 << g
            self._cache["stab"] = tuple(masks)
        return self._cache["stab"]

    def isotropy_mask(self, s):
        m = self.group.full_mask
        stab = self.vertex_stabilizers
        for v in s:
            m &= stab[v]
        return m

    def fixed_vertices(self, mask):
        return [v for v, m in enumerate(self.vertex_stabilizers) if mask & ~m == 0]

    def fixed_simplices(self, mask):
        stab = self.vertex_stabilizers
        return [s for s in self.simplices if all(mask & ~stab[v] == 0 for v in s)]

    def is_admissible(self):
        for s in self.simplices:
            if len(s) == 1:
                continue
            fixed = self.isotropy_mask(s)
            for g in range(self.group.order):
                if not (fixed >> g) & 1 and self.image(g, s) == s:
                    return False
        return True


def barycentric_subdivision(X):
    index = {s: i for i, s in enumerate(X.simplices)}
    faces_of = {s: [t for t in X.simplices if len(t) < len(s) and set(t).issubset(s)] for s in X.simplices}
    chains = []

    def extend(chain):
        chains.append(tuple(sorted(index[c] for c in chain)))
        for t in faces_of[chain[-1]]:
            if all(set(t) < set(c) for c in chain):
                extend(chain + [t])

    for s in X.simplices:
        extend([s])
    chains = set(chains)
    action = []
    for g in range(X.group.order):
        action.append(tuple(index[X.image(g, s)] for s in X.simplices))
    return GSimplicialComplex(X.group, len(X.simplices), chains, action)


def validate_and_subdivide(X):
    if X.is_admissible():
        return X
    Y = barycentric_subdivision(X)
    if not Y.is_admissible():
        raise InternalInconsistency("subdivision did not produce an admissible action")
    return Y


def join(X1, X2):
    if X1.group is not X2.group:
        raise ValueError("join needs complexes over the same group")
    n1 = X1.vertex_count
    shifted = [tuple(v + n1 for v in t) for t in X2.simplices]
    simplices = set(X1.simplices) | set(shifted)
    for s in X1.simplices:
        for t in shifted:
            simplices.add(s + t)
    action = [p + tuple(v + n1 for v in q) for p, q in zip(X1.action, X2.action)]
    return validate_and_subdivide(GSimplicialComplex(X1.group, n1 + X2.vertex_count, simplices, action))


def point(G):
    return GSimplicialComplex(G, 1, [(0,)], [(0,)] * G.order)


# --- representation-sphere pieces ----------------------------------------


def _piece(G, n_vertices, edges, generator_images):
    return GSimplicialComplex.from_data(G, n_vertices, edges, generator_images)


def trivial_line(G):
    return _piece(G, 2, [(0,), (1,)], [(0, 1)] * len(G.generators))


def sign_line(G, signs):
    if len(signs) != len(G.generators) or any(s not in (1, -1) for s in signs):
        raise InvalidActionData("sign data must give +1 or -1 per generator")
    return _piece(G, 2, [(0,), (1,)], [(0, 1) if s == 1 else (1, 0) for s in signs])


def _polygon(m):
    return [(i, (i + 1) % m) for i in range(m)]


def rotation_plane(G, n, steps):
    """Plane on which generator i rotates by steps[i] * 2pi/n."""
    if len(steps) != len(G.generators) or n < 1:
        raise InvalidActionData("rotation data must give one step per generator")
    m = n * ceil(3 / n)
    scale = m // n
    images = [tuple((v + s * scale) % m for v in range(m)) for s in steps]
    return _piece(G, m, _polygon(m), images)


def dihedral_plane(G, n, data):
    """Plane with dihedral action: generator i acts by v -> +-v + rot (scaled).

    ``data`` holds (rot, reflect) per generator; the polygon has 2k vertices
    with k = n * ceil(3/n) so that reflections fix vertices, never edges.
    """
    if len(data) != len(G.generators) or n < 1:
        raise InvalidActionData("dihedral data must give (rot, reflect) per generator")
    k = n * ceil(3 / n)
    m = 2 * k
    scale = m // n
    images = []
    for rot, reflect in data:
        sign = -1 if reflect else 1
        images.append(tuple((sign * v + rot * scale) % m for v in range(m)))
    return _piece(G, m, _polygon(m), images)


def builtin_rep_sphere(G, pieces):
    """Join of unit spheres of the given pieces.

    Each piece is a dict: {"type": "trivial"}, {"type": "sign", "signs": [...]},
    {"type": "rotation", "n": n, "steps": [...]},
    {"type": "dihedral", "n": n, "generators": [[rot, reflect], ...]}.
    """
    if not pieces:
        raise InvalidActionData("at least one piece is required")
    parts = []
    for p in pieces:
        kind = p.get("type")
        if kind == "trivial":
            parts.append(trivial_line(G))
        elif kind == "sign":
            parts.append(sign_line(G, list(p["signs"])))
        elif kind == "rotation":
            parts.append(rotation_plane(G, int(p["n"]), [int(s) for s in p["steps"]]))
        elif kind == "dihedral":
            parts.append(dihedral_plane(G, int(p["n"]), [(int(r), bool(f)) for r, f in p["generators"]]))
        else:
            raise InvalidActionData(f"unknown piece type {kind!r}")
    X = parts[0]
    for Y in parts[1:]:
        X = join(X, Y)
    return validate_and_subdivide(X)


# --- fixed data, objects and Euler characteristics ----------------------


@dataclass(frozen=True)
class ClassFixedData:
    class_index: int
    subgroup: Subgroup = field(repr=False)
    simplices: tuple  # simplices of X^H
    singular: frozenset  # simplices of X^{>H}
    components: tuple  # vertex tuples, ordered by least vertex
    component_of: dict = field(repr=False)  # vertex -> component index
    weyl_action: tuple  # weyl_action[w][c] = image component of c under the w-th Weyl element
    orbits: tuple  # tuple of component-index tuples, ordered by least vertex


@dataclass(frozen=True)
class CatObject:
    index: int
    class_index: int
    subgroup: Subgroup = field(repr=False)
    component: int  # index into the class's component list
    basepoint: int
    orbit: tuple  # component indices in the Weyl orbit
    isotropy_order: int  # |WH_C|


def _components(vertices, simplices):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in simplices:
        if len(s) == 2:
            a, b = find(s[0]), find(s[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    comps = sorted(tuple(sorted(c)) for c in groups.values())
    lookup = {v: i for i, c in enumerate(comps) for v in c}
    return comps, lookup


def fixed_data(X):
    if "fixed" in X._cache:
        return X._cache["fixed"]
    G = X.group
    out = []
    for cl in subgroup_classes(G):
        H = cl.representative
        verts = X.fixed_vertices(H.mask)
        simp = X.fixed_simplices(H.mask)
        singular = frozenset(s for s in simp if X.isotropy_mask(s) != H.mask)
        comps, lookup = _components(verts, simp)
        W = weyl_group(G, H)
        action = []
        for n in W.section:
            p = X.action[n]
            action.append(tuple(lookup[p[c[0]]] for c in comps))
        seen, orbits = set(), []
        for i in range(len(comps)):
            if i in seen:
                continue
            orb = sorted({a[i] for a in action})
            seen.update(orb)
            orbits.append(tuple(orb))
        out.append(ClassFixedData(cl.index, H, tuple(simp), singular, tuple(comps), lookup, tuple(action), tuple(orbits)))
    X._cache["fixed"] = tuple(out)
    return X._cache["fixed"]


def objects(X):
    """One object per (subgroup class, Weyl orbit of components of X^H)."""
    if "objects" in X._cache:
        return X._cache["objects"]
    out = []
    for fd in fixed_data(X):
        W = weyl_group(X.group, fd.subgroup)
        for orb in fd.orbits:
            c = orb[0]
            out.append(
                CatObject(
                    len(out), fd.class_index, fd.subgroup, c, fd.components[c][0], orb, W.order // len(orb)
                )
            )
    X._cache["objects"] = tuple(out)
    return X._cache["objects"]


def object_lookup(X):
    """(class index, component index) -> object index, for every component."""
    if "obj_lookup" not in X._cache:
        table = {}
        for x in objects(X):
            for c in x.orbit:
                table[(x.class_index, c)] = x.index
        X._cache["obj_lookup"] = table
    return X._cache["obj_lookup"]


def component_object(X, class_index, vertex):
    fd = fixed_data(X)[class_index]
    return object_lookup(X)[(class_index, fd.component_of[vertex])]


@dataclass(frozen=True)
class UGElement:
    complex: object = field(repr=False, compare=False)
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, UGElement) and self.complex is other.complex and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return UGElement(self.complex, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return UGElement(self.complex, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, k):
        return UGElement(self.complex, [a * k for a in self.coeffs])

    __rmul__ = __mul__


def ug_basis(X, i):
    return UGElement(X, [int(j == i) for j in range(len(objects(X)))])


def universal_euler_char(X):
    """chi^G(X): sum over G-orbits of simplices, sorted by isotropy type and component."""
    if "chiG" in X._cache:
        return X._cache["chiG"]
    G = X.group
    table = subgroup_classes(G)
    totals = [Fraction(0)] * len(objects(X))
    for s in X.simplices:
        iso = X.isotropy_mask(s)
        cls = table.class_of(iso)
        h = table.conjugator(iso)
        moved = X.image(G.inv[h], s)
        if X.isotropy_mask(moved) != table[cls].representative.mask:
            raise InternalInconsistency("conjugated simplex has the wrong isotropy")
        obj = component_object(X, cls, moved[0])
        sign = 1 if len(s) % 2 else -1
        totals[obj] += Fraction(sign * bin(iso).count("1"), G.order)
    for t in totals:
        if t.denominator != 1:
            raise InternalInconsistency("non-integral orbit count")
    X._cache["chiG"] = UGElement(X, [int(t) for t in totals])
    return X._cache["chiG"]


def orbifold_euler_char(simplices, perms):
    """sum_p (-1)^p sum over orbits of p-simplices of 1/|stabiliser|.

    ``perms`` lists the vertex permutations of all elements of the acting
    group A (repetitions allowed when the action is not faithful).
    """
    simplices = list(simplices)
    remaining = set(simplices)
    total = Fraction(0)
    order = len(perms)
    for s in simplices:
        if s not in remaining:
            continue
        orbit = {tuple(sorted(p[v] for v in s)) for p in perms}
        remaining -= orbit
        stab = sum(1 for p in perms if tuple(sorted(p[v] for v in s)) == s)
        total += Fraction(1 if len(s) % 2 else -1, stab)
    chi = sum(1 if len(s) % 2 else -1 for s in simplices)
    if total != Fraction(chi, order):
        raise InternalInconsistency("orbifold Euler characteristic differs from chi/|A|")
    return total


def component_simplices(X, class_index, component):
    fd = fixed_data(X)[class_index]
    return [s for s in fd.simplices if fd.component_of[s[0]] == component]


def component_isotropy_perms(X, obj):
    """Vertex permutations of the elements of WH_C (through coset representatives)."""
    fd = fixed_data(X)[obj.class_index]
    W = weyl_group(X.group, fd.subgroup)
    return [X.action[n] for w, n in enumerate(W.section) if fd.weyl_action[w][obj.component] == obj.component]


def orbifold_table(X):
    """chi^{Q WK_y}(X^K(y)) for every object y, by explicit orbit enumeration."""
    out = []
    for x in objects(X):
        simp = component_simplices(X, x.class_index, x.component)
        out.append(orbifold_euler_char(simp, component_isotropy_perms(X, x)))
    return tuple(out)


def pushforward_to_point(u):
    X = u.complex
    n = len(subgroup_classes(X.group))
    coeffs = [0] * n
    for x, c in zip(objects(X), u.coeffs):
        coeffs[x.class_index] += c
    return BurnsideElement(X.group, coeffs)


def fixed_point_euler(X, mask):
    return X.euler_characteristic(X.fixed_simplices(mask))


def summary(X):
    """Descriptive metadata per subgroup class."""
    out = []
    for fd in fixed_data(X):
        dims = [len(s) - 1 for s in fd.simplices]
        out.append(
            {
                "class": fd.class_index,
                "order": fd.subgroup.order,
                "dimension": max(dims) if dims else -1,
                "euler_characteristic": X.euler_characteristic(fd.simplices),
                "components": len(fd.components),
                "weyl_orbits": len(fd.orbits),
            }
        )
    return out


# --- built-in examples ----------------------------------------------------

S3_GENERATORS = [[1, 2, 0], [1, 0, 2]]  # t = (0 1 2), s = (0 1)

S3_SIGN = {"type": "sign", "signs": [1, -1]}
S3_PLANE = {"type": "dihedral", "n": 3, "generators": [[1, False], [0, True]]}


def s3_group():
    from .group_core import generate_group

    return generate_group(3, S3_GENERATORS)


def s3_sphere(trivial_count, G=None):
    """Unit sphere of R^trivial_count + sign + 2-dim irreducible, for S3."""
    G = s3_group() if G is None else G
    pieces = [{"type": "trivial"}] * trivial_count + [S3_SIGN, S3_PLANE]
    return builtin_rep_sphere(G, pieces)


def s3_sphere3(G=None):
    return s3_sphere(1, G)


def s3_sphere5(G=None):
    return s3_sphere(3, G)
