"""The component category: morphism sets between objects, their Weyl-group
orbit structure, the character map ch^G, and the alpha_F bijections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BijectionFailure, InternalInconsistency
from .gcomplex import _components, fixed_data, objects
from .group_core import centralizer_f, f_conjugacy_classes, normalizer
from . import linalg


@dataclass(frozen=True)
class MorSet:
    source: int  # object index y
    target: int  # object index x
    cosets: tuple  # minimal representatives g of the cosets gH
    orbits: tuple  # tuples of coset reps, one per WK_y-orbit
    stabilizer_orders: tuple  # |(WK_y)_sigma| per orbit
    weyl_isotropy_order: int  # |WK_y|

    def __len__(self):
        return len(self.cosets)


def component_normalizer(X, y):
    """Elements n of NK with n . C_y = C_y (the preimage of WK_y)."""
    fd = fixed_data(X)[y.class_index]
    K = y.subgroup
    out = []
    for n in normalizer(X.group, K).members:
        if fd.component_of[X.action[n][y.basepoint]] == y.component:
            out.append(n)
    return out


def mor_cosets(X, y, x):
    """Coset reps g of G/H_x with g^-1 K g <= H and g . b_x in C_y."""
    G = X.group
    K, H = y.subgroup, x.subgroup
    fd = fixed_data(X)[y.class_index]
    out = []
    for g in H.left_coset_reps():
        if all(G.conj(k, g) in H for k in K.members):
            v = X.action[g][x.basepoint]
            if fd.component_of.get(v) == y.component:
                out.append(g)
    return out


def mor_set(X, y, x):
    key = ("mor", y.index, x.index)
    if key in X._cache:
        return X._cache[key]
    G = X.group
    H = x.subgroup
    cosets = mor_cosets(X, y, x)
    nk = component_normalizer(X, y)
    korder = y.subgroup.order
    wk = len(nk) // korder
    if wk != y.isotropy_order:
        raise InternalInconsistency("Weyl isotropy order mismatch")
    remaining = set(cosets)
    orbits, stabs = [], []
    for g in cosets:
        if g not in remaining:
            continue
        orbit = {H.coset_rep(G.mult[n][g]) for n in nk}
        if not orbit <= set(cosets):
            raise InternalInconsistency("Weyl action does not preserve the morphism set")
        remaining -= orbit
        fix = sum(1 for n in nk if H.coset_rep(G.mult[n][g]) == g)
        orbits.append(tuple(sorted(orbit)))
        stabs.append(fix // korder)
    result = MorSet(y.index, x.index, tuple(cosets), tuple(orbits), tuple(stabs), wk)
    X._cache[key] = result
    return result


def char_map_matrix(X):
    """M[y][x] = sum over WK_y-orbits of mor(y, x) of 1/|stabiliser|."""
    if "ch" in X._cache:
        return X._cache["ch"]
    objs = objects(X)
    m = []
    for y in objs:
        row = []
        for x in objs:
            ms = mor_set(X, y, x)
            entry = sum((Fraction(1, s) for s in ms.stabilizer_orders), Fraction(0))
            if entry != Fraction(len(ms), ms.weyl_isotropy_order):
                raise InternalInconsistency("orbit count differs from |mor| / |WK_y|")
            row.append(entry)
        m.append(row)
    X._cache["ch"] = m
    return m


def apply_char_map(X, u):
    m = char_map_matrix(X)
    return tuple(sum((row[j] * u.coeffs[j] for j in range(len(row))), Fraction(0)) for row in m)


def char_map_invertible(X):
    m = char_map_matrix(X)
    return linalg.inverse(m) is not None


# --- alpha_F -------------------------------------------------------------


@dataclass(frozen=True)
class AlphaEntry:
    element_class: int  # index in con_F(G)
    element: int  # representative g (least index in its F-class)
    component: tuple  # vertex set of the chosen component of X^<g>
    coset: int  # a with aH in mor(y, x)
    target: int  # index in con_F(H) of (a^-1 g a)_F


@dataclass(frozen=True)
class AlphaBijection:
    object_index: int
    field_tag: str
    entries: tuple  # ordered by target class

    def __len__(self):
        return len(self.entries)


def cyclic_fixed_components(X, g):
    """Components of X^<g> (vertex tuples) with a vertex -> component lookup."""
    key = ("cycfix", g)
    if key not in X._cache:
        G = X.group
        mask = G.mask_of(G.powers(g))
        verts = X.fixed_vertices(mask)
        X._cache[key] = _components(verts, X.fixed_simplices(mask))
    return X._cache[key]


def alpha_f(X, x, field_tag):
    """Pair con_F(H_x) with orbit data indexed by F-classes (g) of G.

    For each (g)_F, each C_F(g)-orbit of components C of X^<g> and each
    orbit of the stabiliser of C on mor((<g>, C), x), the orbit rep aH is
    sent to the F-class of a^-1 g a in H.
    """
    G = X.group
    H = x.subgroup
    Hg = H.as_group()
    hparts = f_conjugacy_classes(Hg, field_tag)
    gparts = f_conjugacy_classes(G, field_tag)
    entries = []
    for ci, block in enumerate(gparts.classes):
        g = block[0]
        comps, lookup = cyclic_fixed_components(X, g)
        cf = centralizer_f(G, g, field_tag).members
        seen = set()
        for c_idx, comp in enumerate(comps):
            if c_idx in seen:
                continue
            orbit = {lookup[X.action[n][comp[0]]] for n in cf}
            seen |= orbit
            stab = [n for n in cf if lookup[X.action[n][comp[0]]] == c_idx]
            cosets = []
            for a in H.left_coset_reps():
                if G.conj(g, a) in H and lookup.get(X.action[a][x.basepoint]) == c_idx:
                    cosets.append(a)
            rest = set(cosets)
            for a in cosets:
                if a not in rest:
                    continue
                rest -= {H.coset_rep(G.mult[n][a]) for n in stab}
                local = H.local_index(G.conj(g, a))
                entries.append(AlphaEntry(ci, g, comp, a, hparts.class_of[local]))
    targets = sorted(e.target for e in entries)
    if targets != list(range(len(hparts))):
        raise BijectionFailure(
            f"alpha_{field_tag} for object {x.index}: {len(entries)} orbit classes against {len(hparts)} F-classes"
        )
    entries.sort(key=lambda e: e.target)
    return AlphaBijection(x.index, field_tag, tuple(entries))
