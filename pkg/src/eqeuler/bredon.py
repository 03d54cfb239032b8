"""H_0 of the component category with coefficients in R_F, as a finitely
presented abelian group, together with e1, e2, gamma_Q and the push-forward
maps, plus a verifier that checks the commutative diagrams exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import totient

from . import linalg
from . import rep_theory as rt
from .burnside import j1
from .category import alpha_f, apply_char_map, char_map_invertible, char_map_matrix, mor_set
from .errors import EqEulerError, NotEquivariant, RelationMismatch, SingularMatrix
from .gcomplex import (
    fixed_data,
    fixed_point_euler,
    object_lookup,
    objects,
    orbifold_table,
    pushforward_to_point,
    ug_basis,
    universal_euler_char,
)
from .group_core import f_conjugacy_classes, weyl_group


def _lcm(a, b):
    return a // gcd(a, b) * b


@dataclass(frozen=True)
class FinAbPresentation:
    """Z^n modulo the row lattice of ``relations``; SNF gives U R V = D."""

    ngens: int
    relations: tuple
    smith: linalg.SmithForm

    @property
    def factors(self):
        return self.smith.factors

    @property
    def free_rank(self):
        return self.ngens - self.smith.rank

    @property
    def torsion(self):
        return self.smith.torsion

    def coordinates(self, vec):
        """y = vec . V (exact; rational vectors allowed)."""
        V = self.smith.V
        n = self.ngens
        return [sum(vec[i] * V[i][j] for i in range(n) if vec[i]) for j in range(n)]

    def normal_form(self, vec):
        y = self.coordinates(vec)
        k = self.smith.rank
        return tuple(y[i] % d for i, d in enumerate(self.factors)) + tuple(y[k:])

    def free_coordinates(self, vec):
        return tuple(Fraction(c) for c in self.coordinates(vec)[self.smith.rank:])

    def describe(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def present(ngens, rows):
    basis = linalg.LatticeBasis(ngens)
    for r in rows:
        if any(r):
            basis.add(r)
    rel = basis.matrix()
    smith = linalg.smith_normal_form(rel, len(rel), ngens)
    return FinAbPresentation(ngens, tuple(tuple(r) for r in rel), smith)


@dataclass(frozen=True)
class H0Class:
    """A vector over the generators of an H0Presentation."""

    owner: object = field(repr=False, compare=False)
    vector: tuple

    @property
    def field_tag(self):
        return self.owner.field_tag

    @property
    def presentation(self):
        return self.owner.presentation

    @property
    def normal_form(self):
        return self.presentation.normal_form(self.vector)

    def __eq__(self, other):
        return isinstance(other, H0Class) and self.owner is other.owner and self.normal_form == other.normal_form

    def __hash__(self):
        return hash(self.normal_form)

    def is_zero(self):
        return not any(self.normal_form)

    def order(self):
        return element_order(self)

    def __add__(self, other):
        return H0Class(self.owner, tuple(a + b for a, b in zip(self.vector, other.vector)))

    def __sub__(self, other):
        return H0Class(self.owner, tuple(a - b for a, b in zip(self.vector, other.vector)))

    def __mul__(self, k):
        return H0Class(self.owner, tuple(a * k for a in self.vector))

    __rmul__ = __mul__


def element_order(c):
    """Order in (+) Z/d_i (+) Z^r: None stands for infinity."""
    pres = c.presentation
    nf = c.normal_form
    k = pres.smith.rank
    if any(nf[k:]):
        return None
    order = 1
    for y, d in zip(nf, pres.factors):
        order = _lcm(order, d // gcd(d, y))
    return order


@dataclass(frozen=True)
class H0Presentation:
    complex: object = field(repr=False)
    field_tag: str
    offsets: tuple  # first generator index per object
    sizes: tuple  # number of F-irreducibles per object
    presentation: FinAbPresentation

    @property
    def ngens(self):
        return self.presentation.ngens

    def block(self, obj_index):
        o = self.offsets[obj_index]
        return range(o, o + self.sizes[obj_index])

    def structure_map(self, obj_index, v):
        """s_x: R_F(H_x) -> generators; v a RepRingElement or coefficient list."""
        coeffs = v.coeffs if isinstance(v, rt.RepRingElement) else v
        out = [0] * self.ngens
        for i, c in zip(self.block(obj_index), coeffs):
            out[i] = c
        return out

    def cls(self, vec):
        return H0Class(self, tuple(vec))


def morphism_hom(G, K, H, g):
    """Local indices in H.as_group() of g^-1 k g for k in K (K, H subgroups)."""
    return tuple(H.local_index(G.conj(k, g)) for k in K.members)


def relation_rows(X, field_tag, offsets):
    G = X.group
    objs = objects(X)
    ngens = offsets[-1]
    for y in objs:
        K = y.subgroup
        Kg = K.as_group()
        kb = rt.f_irreducibles(Kg, field_tag)
        for x in objs:
            H = x.subgroup
            Hg = H.as_group()
            for g in mor_set(X, y, x).cosets:
                m = rt.induction_matrix(Kg, Hg, morphism_hom(G, K, H, g), field_tag)
                for b in range(len(kb)):
                    row = [0] * ngens
                    row[offsets[y.index] + b] += 1
                    for j, c in enumerate(m[b]):
                        row[offsets[x.index] + j] -= c
                    yield row


def h0_presentation(X, field_tag):
    key = ("h0", field_tag)
    if key in X._cache:
        return X._cache[key]
    objs = objects(X)
    sizes = [len(rt.f_irreducibles(x.subgroup.as_group(), field_tag)) for x in objs]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    pres = present(offsets[-1], relation_rows(X, field_tag, offsets))
    result = H0Presentation(X, field_tag, tuple(offsets[:-1]), tuple(sizes), pres)
    X._cache[key] = result
    return result


def e1(u):
    """Object x -> s_x([Q]) extended linearly."""
    X = u.complex
    P = h0_presentation(X, "Q")
    vec = [0] * P.ngens
    for x, c in zip(objects(X), u.coeffs):
        vec[P.offsets[x.index]] += c  # trivial representation is basis element 0
    return P.cls(vec)


def e2_matrix(X):
    """Generator-level change of fields, block diagonal over objects."""
    key = "e2m"
    if key in X._cache:
        return X._cache[key]
    PQ, PR = h0_presentation(X, "Q"), h0_presentation(X, "R")
    m = [[0] * PR.ngens for _ in range(PQ.ngens)]
    for x in objects(X):
        Hg = x.subgroup.as_group()
        for i, q in enumerate(PQ.block(x.index)):
            img = rt.change_fields_q_to_r(rt.basis_element(Hg, "Q", i)).coeffs
            for j, r in enumerate(PR.block(x.index)):
                m[q][r] = img[j]
    for row in PQ.presentation.relations:
        image = linalg.vecmat(list(row), m)
        if any(PR.presentation.normal_form(image)):
            raise RelationMismatch("change of fields does not respect the relations")
    X._cache[key] = m
    return m


def e2(c):
    """Change of fields Q -> R on H_0."""
    X = c.owner.complex
    PR = h0_presentation(X, "R")
    return PR.cls(linalg.vecmat(list(c.vector), e2_matrix(X)))


def cyclic_objects(X):
    return [x for x in objects(X) if x.subgroup.is_cyclic]


def gamma_q(X):
    """Rows: images of the cyclic objects ((L), C) in the free coordinates
    of Q (x) H_0(X; R_Q)."""
    key = "gamma"
    if key in X._cache:
        return X._cache[key]
    P = h0_presentation(X, "Q")
    rows = []
    for y in cyclic_objects(X):
        L = y.subgroup
        Lg = L.as_group()
        gen_local = L.local_index(L.generator())
        parts = f_conjugacy_classes(Lg, "Q")
        delta = [Fraction(int(parts.class_of[gen_local] == j)) for j in range(len(parts))]
        hs = [[Fraction(v) for v in row] for row in rt.hs_matrix(Lg, "Q")]
        inv = linalg.inverse(hs)
        if inv is None:
            raise SingularMatrix("Hattori-Stallings matrix is singular")
        w = linalg.vecmat(delta, inv)
        scale = Fraction(int(totient(L.order)), L.order)
        vec = [Fraction(0)] * P.ngens
        for i, c in zip(P.block(y.index), w):
            vec[i] = c * scale
        rows.append(list(P.presentation.free_coordinates(vec)))
    if len(rows) != P.presentation.free_rank or (rows and linalg.inverse(rows) is None):
        raise SingularMatrix(
            f"gamma_Q is not invertible ({len(rows)} cyclic objects, free rank {P.presentation.free_rank})"
        )
    X._cache[key] = rows
    return rows


def h0_to_group(X, c):
    """c_*: H_0(X; R_F) -> R_F(G) by inducing each object block up to G."""
    G = X.group
    P = h0_presentation(X, c.field_tag)
    total = rt.zero(G, c.field_tag)
    for x in objects(X):
        coeffs = [c.vector[i] for i in P.block(x.index)]
        if any(coeffs):
            Hg = x.subgroup.as_group()
            total = total + rt.induce(x.subgroup, rt.RepRingElement(c.field_tag, Hg, coeffs))
    return total


def check_equivariant(X, Y, vertex_map):
    if X.group is not Y.group:
        raise NotEquivariant("complexes over different groups")
    f = list(vertex_map)
    if len(f) != X.vertex_count or any(not 0 <= v < Y.vertex_count for v in f):
        raise NotEquivariant("vertex map has the wrong shape")
    for g in range(X.group.order):
        for v in range(X.vertex_count):
            if f[X.action[g][v]] != Y.action[g][f[v]]:
                raise NotEquivariant(f"vertex map does not commute with element {g}")
    for s in X.simplices:
        if tuple(sorted(set(f[v] for v in s))) not in Y.simplex_set:
            raise NotEquivariant(f"image of simplex {list(s)} is not a simplex")


def pushforward(X, Y, vertex_map, c):
    """f_*: H_0(X; R_F) -> H_0(Y; R_F) for an equivariant simplicial vertex map."""
    check_equivariant(X, Y, vertex_map)
    G = X.group
    F = c.field_tag
    PX, PY = h0_presentation(X, F), h0_presentation(Y, F)
    yfd = fixed_data(Y)
    ylookup = object_lookup(Y)
    yobjs = objects(Y)
    out = [0] * PY.ngens
    for x in objects(X):
        coeffs = [c.vector[i] for i in PX.block(x.index)]
        if not any(coeffs):
            continue
        H = x.subgroup
        fd = yfd[x.class_index]
        target_comp = fd.component_of[vertex_map[x.basepoint]]
        xo = yobjs[ylookup[(x.class_index, target_comp)]]
        # a in NH with a . C_{x'} = C(f(b_x)); f x ~ x' o sigma_a
        W = weyl_group(G, H)
        a = next(n for w, n in enumerate(W.section) if fd.weyl_action[w][xo.component] == target_comp)
        Hg = H.as_group()
        hom = tuple(H.local_index(G.conj(k, a)) for k in H.members)
        img = rt.induce_along(Hg, Hg, hom, rt.RepRingElement(F, Hg, coeffs))
        for i, v in zip(PY.block(xo.index), img.coeffs):
            out[i] += v
    return PY.cls(out)


# --- verification --------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(results, name, fn):
    try:
        ok, detail = fn()
    except EqEulerError as exc:
        ok, detail = False, f"{exc.code}: {exc}"
    results.append(CheckResult(name, bool(ok), detail))
    return ok


def verify_suite(X):
    """Run every consistency check; never raises on mathematical mismatch."""
    G = X.group
    results = []
    objs = objects(X)
    chi = universal_euler_char(X)

    def lemma():
        lhs = apply_char_map(X, chi)
        rhs = orbifold_table(X)
        return lhs == tuple(rhs), f"ch(chi)={_fmt(lhs)} orbifold={_fmt(rhs)}"

    def ch_invertible():
        char_map_matrix(X)
        return char_map_invertible(X), ""

    def alpha():
        for x in objs:
            for F in ("Q", "R", "C"):
                alpha_f(X, x, F)
        return True, ""

    def square():
        gam = gamma_q(X)
        cyc = [i for i, x in enumerate(objs) if x.subgroup.is_cyclic]
        P = h0_presentation(X, "Q")
        for x in objs:
            u = ug_basis(X, x.index)
            ch = apply_char_map(X, u)
            src = [ch[i] for i in cyc]
            lhs = tuple(linalg.vecmat(src, gam)) if gam else ()
            rhs = P.presentation.free_coordinates(e1(u).vector)
            if lhs != rhs:
                return False, f"object {x.index}: {_fmt(lhs)} != {_fmt(rhs)}"
        return True, ""

    def e2_injective():
        PQ = h0_presentation(X, "Q")
        PR = h0_presentation(X, "R")
        m = e2_matrix(X)
        rows = []
        for i in range(PQ.ngens):
            unit = [int(i == j) for j in range(PQ.ngens)]
            rows.append(PR.presentation.free_coordinates(linalg.vecmat(unit, m)))
        r = linalg.rank(rows) if rows and rows[0] else 0
        return r == PQ.presentation.free_rank, f"rank {r} vs {PQ.presentation.free_rank}"

    def prop_square():
        for x in objs:
            u = ug_basis(X, x.index)
            lhs = h0_to_group(X, e2(e1(u)))
            rhs = j1(pushforward_to_point(u))
            if lhs != rhs or lhs != rt.perm_character(G, x.subgroup):
                return False, f"object {x.index}: {lhs.coeffs} != {rhs.coeffs}"
        return True, ""

    def pushforward_defined():
        for F in ("Q", "R"):
            P = h0_presentation(X, F)
            for row in P.presentation.relations:
                if not h0_to_group(X, P.cls(row)).is_zero():
                    return False, f"relation survives push-forward over {F}"
        return True, ""

    def lefschetz():
        chi_g = j1(pushforward_to_point(chi)).character()
        table = rt.char_table_complex(G)
        for g in range(G.order):
            mask = G.mask_of(G.powers(g))
            lhs = chi_g[table.classes.class_of[g]]
            if lhs != fixed_point_euler(X, mask):
                return False, f"element {g}: {lhs} != {fixed_point_euler(X, mask)}"
        return True, ""

    _check(results, "lemma_identity", lemma)
    _check(results, "char_map_invertible", ch_invertible)
    _check(results, "alpha_bijections", alpha)
    _check(results, "gamma_square", square)
    _check(results, "e2_rationally_injective", e2_injective)
    _check(results, "prop_square", prop_square)
    _check(results, "pushforward_well_defined", pushforward_defined)
    _check(results, "lefschetz", lefschetz)
    return results


def _fmt(vec):
    return "(" + ", ".join(str(v) for v in vec) + ")"
