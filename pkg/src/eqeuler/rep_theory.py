"""Character theory over C, R and Q.

The complex character table is computed by Dixon's method: common
eigenvectors of the class-multiplication matrices are found over a prime
field F_p with p = 1 mod exp(G), and each character value is lifted back to
Q(zeta_e) through its eigenvalue multiplicities.  Real and rational
irreducibles are assembled from Frobenius-Schur indicators and Galois orbits.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import sympy

from .cyclotomic import Cyclotomic, ONE, ZERO
from .errors import (
    DecompositionNotIntegral,
    InternalInconsistency,
    NotIrreducible,
    SchurIndexUnknown,
)
from .group_core import FIELD_TAGS, f_conjugacy_classes, subgroup_classes
from . import linalg


# --- complex character table ------------------------------------------------


@dataclass(frozen=True)
class CharTableC:
    group: object = field(repr=False)
    classes: object = field(repr=False)  # FClassPartition for C
    exponent: int
    irreducibles: tuple  # tuple of tuples of Cyclotomic, indexed by class
    power_maps: tuple = field(repr=False)  # power_maps[k][l] = class of g_k^l (l mod order)

    @property
    def degrees(self):
        return tuple(int(chi[0].to_fraction()) for chi in self.irreducibles)

    @property
    def class_sizes(self):
        return self.classes.sizes

    def __len__(self):
        return len(self.irreducibles)

    def values_on_elements(self, i):
        chi = self.irreducibles[i]
        return [chi[c] for c in self.classes.class_of]

    def power_class(self, k, l):
        pm = self.power_maps[k]
        return pm[l % len(pm)]


def _dixon_prime(order, exponent):
    bound = 2 * isqrt(order) + 2
    p = exponent + 1
    while p <= bound or not sympy.isprime(p):
        p += exponent
    return p


def _class_matrices(G, classes):
    r = len(classes)
    cls = classes.class_of
    reps = classes.representatives
    mats = []
    for j in range(r):
        a = [[0] * r for _ in range(r)]
        for i, g in enumerate(reps):
            for x in classes.classes[j]:
                a[cls[G.mult[G.inv[x]][g]]][i] += 1
        mats.append(a)
    return mats


def _split_eigenspaces(mats, r, p):
    spaces = [linalg.rref_mod(linalg.identity(r), p)]
    for a in mats[1:]:
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        nxt = []
        for rows, piv in spaces:
            k = len(rows)
            if k == 1:
                nxt.append((rows, piv))
                continue
            images = [[sum(a[i][c] * b[c] for c in range(r)) % p for i in range(r)] for b in rows]
            m = [[images[t][piv[s]] for t in range(k)] for s in range(k)]
            roots = linalg.poly_roots_mod(linalg.charpoly_mod(m, p), p)
            found = 0
            for lam in roots:
                shifted = [[(m[s][t] - (lam if s == t else 0)) % p for t in range(k)] for s in range(k)]
                null = linalg.nullspace_mod(shifted, p)
                vecs = [[sum(c[t] * rows[t][i] for t in range(k)) % p for i in range(r)] for c in null]
                nxt.append(linalg.rref_mod(vecs, p))
                found += len(null)
            if found != k:
                raise InternalInconsistency("class matrix is not diagonalisable mod p")
        spaces = nxt
    if not all(len(rows) == 1 for rows, _ in spaces):
        raise InternalInconsistency("class matrices do not separate the characters mod p")
    return [rows[0] for rows, _ in spaces]


def char_table_complex(G):
    return G.memo("char_table_C", lambda: _build_table(G))


def _build_table(G):
    classes = f_conjugacy_classes(G, "C")
    r = len(classes)
    e = G.exponent
    n = G.order
    p = _dixon_prime(n, e)
    sizes = classes.sizes
    reps = classes.representatives
    cls = classes.class_of
    inv_class = [cls[G.inv[g]] for g in reps]
    power_maps = []
    for g in reps:
        power_maps.append(tuple(cls[x] for x in G.powers(g)))

    vectors = _split_eigenspaces(_class_matrices(G, classes), r, p)

    root = sympy.primitive_root(p)
    z = pow(root, (p - 1) // e, p)
    irreducibles = []
    for w in vectors:
        inv0 = pow(w[0], -1, p)
        w = [x * inv0 % p for x in w]
        s = sum(w[k] * w[inv_class[k]] * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = n * pow(s, -1, p) % p
        degree = next((d for d in range(1, isqrt(n) + 1) if d * d % p == d2), None)
        if degree is None:
            raise InternalInconsistency("no integral degree for a character mod p")
        modvals = [w[k] * degree * pow(sizes[k], -1, p) % p for k in range(r)]
        values = []
        for k in range(r):
            pm = power_maps[k]
            o = len(pm)
            zo = pow(z, e // o, p)
            coeffs = [0] * e
            inv_o = pow(o, -1, p)
            for t in range(o):
                m = sum(modvals[pm[l]] * pow(zo, (-t * l) % o, p) for l in range(o)) * inv_o % p
                if m > degree:
                    raise InternalInconsistency("eigenvalue multiplicity out of range")
                coeffs[t * (e // o)] = m
            values.append(Cyclotomic.from_powers(e, coeffs))
        irreducibles.append(tuple(values))

    irreducibles.sort(key=lambda chi: _char_sort_key(chi, e))
    table = CharTableC(G, classes, e, tuple(irreducibles), tuple(power_maps))
    _check_table(table)
    return table


def _char_sort_key(chi, e):
    degree = chi[0].to_fraction()
    trivial = all(v == ONE for v in chi)
    return (degree, not trivial, tuple(tuple(-c for c in v.sort_key(e)) for v in chi))


def inner_product(table, a, b):
    """<a, b> = 1/|G| sum_g a(g) conj(b(g)) for class functions on C-classes."""
    total = ZERO
    for h, x, y in zip(table.class_sizes, a, b):
        if not (x == 0 or y == 0):
            total = total + x * Cyclotomic.coerce(y).conj() * h
    return total / table.group.order


def _check_table(table):
    n = table.group.order
    if sum(d * d for d in table.degrees) != n:
        raise InternalInconsistency("sum of squared degrees differs from the group order")
    if len(table.irreducibles) != len(table.classes):
        raise InternalInconsistency("number of irreducibles differs from number of classes")
    chis = table.irreducibles
    for i in range(len(chis)):
        for j in range(i, len(chis)):
            ip = inner_product(table, chis[i], chis[j])
            if ip != (1 if i == j else 0):
                raise InternalInconsistency(f"orthogonality fails for characters {i}, {j}")


def fs_indicator(G, chi):
    """Frobenius-Schur indicator of an irreducible complex character."""
    table = char_table_complex(G)
    if inner_product(table, chi, chi) != 1:
        raise NotIrreducible("character has norm different from 1")
    total = ZERO
    for k, h in enumerate(table.class_sizes):
        total = total + Cyclotomic.coerce(chi[table.power_class(k, 2)]) * h
    value = total / G.order
    if not value.is_integer() or value.to_fraction() not in (-1, 0, 1):
        raise NotIrreducible("indicator outside {-1, 0, 1}")
    return int(value.to_fraction())


# --- F-irreducibles ----------------------------------------------------------


@dataclass(frozen=True)
class FIrreducible:
    """An irreducible F-representation, recorded through its character.

    ``character = multiplier * sum of the complex constituents``.  For real
    irreducibles ``kind`` is R, C or H; for rational ones ``multiplier`` is
    the Schur index.
    """

    field_tag: str
    constituents: tuple
    multiplier: int
    character: tuple
    kind: str = ""

    @property
    def degree(self):
        return int(self.character[0].to_fraction())


@dataclass(frozen=True)
class SchurIndexTable:
    """Known rational Schur indices keyed by (group fingerprint, constituents)."""

    entries: dict = field(default_factory=dict)
    strict: bool = False

    def lookup(self, fingerprint, constituents):
        return self.entries.get((fingerprint, tuple(constituents)))


def group_fingerprint(G):
    data = ";".join(",".join(map(str, p.images)) for p in sorted(G.elements))
    return hashlib.sha256(data.encode()).hexdigest()[:16]


def _sum_chars(table, idxs, mult):
    out = []
    for k in range(len(table.classes)):
        v = ZERO
        for i in idxs:
            v = v + table.irreducibles[i][k]
        out.append(v * mult)
    return tuple(out)


def _sorted_basis(items, e):
    return tuple(sorted(items, key=lambda b: _char_sort_key(b.character, e)))


def _conjugate_index(table, i):
    target = tuple(v.conj() for v in table.irreducibles[i])
    return table.irreducibles.index(target)


def real_irreducibles(G):
    def build():
        table = char_table_complex(G)
        seen, out = set(), []
        for i, chi in enumerate(table.irreducibles):
            if i in seen:
                continue
            nu = fs_indicator(G, chi)
            if nu == 1:
                out.append(FIrreducible("R", (i,), 1, chi, "R"))
                seen.add(i)
            elif nu == -1:
                out.append(FIrreducible("R", (i,), 2, _sum_chars(table, [i], 2), "H"))
                seen.add(i)
            else:
                j = _conjugate_index(table, i)
                pair = tuple(sorted((i, j)))
                out.append(FIrreducible("R", pair, 1, _sum_chars(table, pair, 1), "C"))
                seen.update(pair)
        return _sorted_basis(out, table.exponent)

    return G.memo("irr_R", build)


def complex_irreducibles(G):
    def build():
        table = char_table_complex(G)
        return tuple(FIrreducible("C", (i,), 1, chi) for i, chi in enumerate(table.irreducibles))

    return G.memo("irr_C", build)


def galois_orbits(G):
    table = char_table_complex(G)
    e = table.exponent
    seen, orbits = set(), []
    for i, chi in enumerate(table.irreducibles):
        if i in seen:
            continue
        orbit = set()
        for a in range(1, e + 1):
            if gcd(a, e) != 1:
                continue
            img = tuple(v.galois(a) for v in chi)
            orbit.add(table.irreducibles.index(img))
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def schur_index_bounds(G):
    """(lower, upper) bounds on the rational Schur index per Galois orbit.

    The lower bound uses the Frobenius-Schur indicator.  The upper bound is
    the gcd of the degree and the multiplicities of the constituent in
    characters induced from rational characters of proper subgroups.
    """

    def build():
        table = char_table_complex(G)
        orbits = galois_orbits(G)
        bounds = []
        subs = [c.representative for c in subgroup_classes(G)][:-1]
        sub_data = None
        for orbit in orbits:
            chi = table.irreducibles[orbit[0]]
            deg = int(chi[0].to_fraction())
            nu = fs_indicator(G, chi)
            lower = 2 if nu == -1 else 1
            upper = deg
            if nu != 0:
                upper = gcd(upper, 2)
            if upper != lower:
                if sub_data is None:
                    sub_data = []
                    for H in reversed(subs):
                        Hg = H.as_group()
                        sub_data.append((H, Hg, _rational_basis(Hg, None, upper_only=True)))
                for H, Hg, basis in sub_data:
                    if upper == lower:
                        break
                    res = restrict_character(G, H, chi)
                    htable = char_table_complex(Hg)
                    for psi in basis:
                        m = inner_product(htable, psi.character, res)
                        k = int(m.to_fraction())
                        if k:
                            upper = gcd(upper, k)
            bounds.append((lower, upper))
        return tuple(bounds)

    return G.memo("schur_bounds", build)


def _rational_basis(G, schur_table, upper_only=False):
    table = char_table_complex(G)
    orbits = galois_orbits(G)
    bounds = schur_index_bounds(G)
    out = []
    for orbit, (lower, upper) in zip(orbits, bounds):
        if upper_only or lower == upper:
            m = upper
        else:
            known = schur_table.lookup(group_fingerprint(G), orbit) if schur_table else None
            if known is not None:
                m = known
            elif schur_table is not None and schur_table.strict:
                raise SchurIndexUnknown(
                    f"rational Schur index of constituents {orbit} lies between {lower} and {upper}"
                )
            else:
                m = lower
        out.append(FIrreducible("Q", orbit, m, _sum_chars(table, orbit, m)))
    return _sorted_basis(out, table.exponent)


_default_schur_table = SchurIndexTable()


def set_default_schur_table(table):
    global _default_schur_table
    _default_schur_table = table


def rational_irreducibles(G, schur_table=None):
    if schur_table is not None:
        return _rational_basis(G, schur_table)
    return G.memo("irr_Q", lambda: _rational_basis(G, _default_schur_table))


def f_irreducibles(G, field_tag):
    if field_tag == "C":
        return complex_irreducibles(G)
    if field_tag == "R":
        return real_irreducibles(G)
    if field_tag == "Q":
        return rational_irreducibles(G)
    raise ValueError(f"field tag must be one of {FIELD_TAGS}")


# --- representation ring ----------------------------------------------------


@dataclass(frozen=True)
class RepRingElement:
    field_tag: str
    group: object = field(repr=False, compare=False)
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, RepRingElement)
            and self.group is other.group
            and self.field_tag == other.field_tag
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field_tag, self.coeffs))

    def __add__(self, other):
        _same(self, other)
        return RepRingElement(self.field_tag, self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        _same(self, other)
        return RepRingElement(self.field_tag, self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return RepRingElement(self.field_tag, self.group, [-a for a in self.coeffs])

    def __mul__(self, k):
        return RepRingElement(self.field_tag, self.group, [a * k for a in self.coeffs])

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def character(self):
        basis = f_irreducibles(self.group, self.field_tag)
        r = len(char_table_complex(self.group).classes)
        out = [ZERO] * r
        for c, b in zip(self.coeffs, basis):
            if c:
                out = [x + y * c for x, y in zip(out, b.character)]
        return tuple(out)

    def degree(self):
        return int(self.character()[0].to_fraction())


def _same(a, b):
    if a.group is not b.group or a.field_tag != b.field_tag:
        raise ValueError("representation ring elements over different groups or fields")


def basis_element(G, field_tag, i):
    n = len(f_irreducibles(G, field_tag))
    return RepRingElement(field_tag, G, [int(j == i) for j in range(n)])


def zero(G, field_tag):
    return RepRingElement(field_tag, G, [0] * len(f_irreducibles(G, field_tag)))


def trivial(G, field_tag):
    return basis_element(G, field_tag, 0)


def decompose(G, field_tag, character):
    """Coordinates of a virtual character in the F-irreducible basis."""
    table = char_table_complex(G)
    mults = []
    for chi in table.irreducibles:
        m = inner_product(table, character, chi)
        if not m.is_integer():
            raise DecompositionNotIntegral(f"non-integral multiplicity {m}")
        mults.append(int(m.to_fraction()))
    coeffs = []
    for b in f_irreducibles(G, field_tag):
        vals = {mults[i] for i in b.constituents}
        if len(vals) != 1:
            raise DecompositionNotIntegral("constituents of an F-irreducible occur unequally")
        v = vals.pop()
        if v % b.multiplier:
            raise DecompositionNotIntegral(
                f"multiplicity {v} not divisible by {b.multiplier} for field {field_tag}"
            )
        coeffs.append(v // b.multiplier)
    return RepRingElement(field_tag, G, coeffs)


def induced_character(K, H, hom, theta):
    """Character of Ind along the injective hom K -> H (list of H-indices)."""
    ktable = char_table_complex(K)
    htable = char_table_complex(H)
    pre = {h: k for k, h in enumerate(hom)}
    on_k = [theta[c] for c in ktable.classes.class_of]
    out = []
    for h in htable.classes.representatives:
        total = ZERO
        for x in range(H.order):
            y = H.conj(h, x)
            k = pre.get(y)
            if k is not None:
                total = total + on_k[k]
        out.append(total / K.order)
    return tuple(out)


def induction_matrix(K, H, hom, field_tag):
    """Rows: images of the F-irreducibles of K in R_F(H)."""
    key = ("ind", K, tuple(hom), field_tag)

    def build():
        rows = []
        for b in f_irreducibles(K, field_tag):
            rows.append(decompose(H, field_tag, induced_character(K, H, hom, b.character)).coeffs)
        return tuple(rows)

    return H.memo(key, build)


def induce_along(K, H, hom, v):
    m = induction_matrix(K, H, hom, v.field_tag)
    n = len(f_irreducibles(H, v.field_tag))
    out = [0] * n
    for c, row in zip(v.coeffs, m):
        if c:
            out = [a + c * b for a, b in zip(out, row)]
    return RepRingElement(v.field_tag, H, out)


def induce(H, v):
    """Induce v over H.as_group() up to the parent group of the subgroup H."""
    return induce_along(H.as_group(), H.parent, H.members, v)


def restrict_character(G, H, chi):
    """Values of a class function of G on the C-classes of H.as_group()."""
    table = char_table_complex(G)
    htable = char_table_complex(H.as_group())
    return tuple(chi[table.classes.class_of[H.members[h]]] for h in htable.classes.representatives)


def restrict(H, v):
    G = H.parent
    return decompose(H.as_group(), v.field_tag, restrict_character(G, H, v.character()))


def restrict_along(K, G, hom, v):
    table = char_table_complex(G)
    ktable = char_table_complex(K)
    chi = v.character()
    vals = tuple(chi[table.classes.class_of[hom[k]]] for k in ktable.classes.representatives)
    return decompose(K, v.field_tag, vals)


def change_fields_q_to_r(v):
    if v.field_tag != "Q":
        raise ValueError("expected a rational representation class")
    return decompose(v.group, "R", v.character())


def perm_character_values(G, H):
    """g -> |(G/H)^g| on the C-classes of G."""
    table = char_table_complex(G)
    reps = H.left_coset_reps()
    return tuple(
        Cyclotomic.rational(sum(1 for x in reps if G.conj(g, x) in H))
        for g in table.classes.representatives
    )


def perm_character(G, H, field_tag="R"):
    return decompose(G, field_tag, perm_character_values(G, H))


# --- class functions and Hattori-Stallings ranks ---------------------------


@dataclass(frozen=True)
class ClassFunctionF:
    field_tag: str
    group: object = field(repr=False, compare=False)
    values: tuple

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunctionF)
            and self.group is other.group
            and self.field_tag == other.field_tag
            and tuple(self.values) == tuple(other.values)
        )

    def __hash__(self):
        return hash((self.field_tag, len(self.values)))


def hs_rank(v):
    """Value at (h)_F is |(h)_F| / |H| times the character of v at h."""
    G = v.group
    table = char_table_complex(G)
    fparts = f_conjugacy_classes(G, v.field_tag)
    chi = v.character()
    cls = table.classes.class_of
    values = []
    for block in fparts.classes:
        val = chi[cls[block[0]]]
        for g in block[1:]:
            if chi[cls[g]] != val:
                raise InternalInconsistency("character is not constant on an F-class")
        values.append(_simplify(val) * Fraction(len(block), G.order))
    return ClassFunctionF(v.field_tag, G, tuple(values))


def _simplify(x):
    return x.to_fraction() if x.is_rational() else x


def hs_matrix(G, field_tag):
    """Rows: hs_rank of each F-irreducible."""
    return [list(hs_rank(basis_element(G, field_tag, i)).values) for i in range(len(f_irreducibles(G, field_tag)))]


def hs_is_invertible(G, field_tag):
    m = hs_matrix(G, field_tag)
    return len(m) == len(m[0]) and linalg.rank_field(m) == len(m)


def push_class_function(K, H, hom, cf):
    """Image of a class function under con_F(K) -> con_F(H), (k)_F -> (hom k)_F."""
    kp = f_conjugacy_classes(K, cf.field_tag)
    hp = f_conjugacy_classes(H, cf.field_tag)
    out = [Fraction(0)] * len(hp)
    for i, block in enumerate(kp.classes):
        j = hp.class_of[hom[block[0]]]
        out[j] = out[j] + cf.values[i]
    return ClassFunctionF(cf.field_tag, H, tuple(_simplify(Cyclotomic.coerce(x)) for x in out))
