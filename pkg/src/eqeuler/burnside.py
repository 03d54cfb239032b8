"""Burnside ring A(G): table of marks, the marks homomorphism, and the map
j1 : A(G) -> R_F(G) sending [G/H] to the permutation representation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .group_core import subgroup_classes, weyl_group
from . import rep_theory as rt


@dataclass(frozen=True)
class BurnsideElement:
    group: object = field(repr=False, compare=False)
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, BurnsideElement) and self.group is other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return BurnsideElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return BurnsideElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, k):
        return BurnsideElement(self.group, [a * k for a in self.coeffs])

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)


def orbit_element(G, class_index):
    """[G/H] for the class_index-th subgroup class."""
    n = len(subgroup_classes(G))
    return BurnsideElement(G, [int(i == class_index) for i in range(n)])


def zero(G):
    return BurnsideElement(G, [0] * len(subgroup_classes(G)))


def mark(G, H, K):
    """|(G/H)^K| = #{gH : K g H = g H}."""
    return sum(1 for g in H.left_coset_reps() if all(G.conj(k, g) in H for k in K.members))


def table_of_marks(G):
    """Square matrix M[H][K] = |(G/H)^K| over the ordered subgroup classes."""

    def build():
        reps = subgroup_classes(G).representatives()
        return tuple(tuple(mark(G, H, K) for K in reps) for H in reps)

    return G.memo("marks", build)


def weyl_orders(G):
    return G.memo(
        "weyl_orders",
        lambda: tuple(weyl_group(G, H).order for H in subgroup_classes(G).representatives()),
    )


def marks_hom(a):
    """Entry at (H): sum_K a_K |(G/K)^H| / |WH|."""
    G = a.group
    marks = table_of_marks(G)
    w = weyl_orders(G)
    n = len(w)
    return tuple(Fraction(sum(a.coeffs[k] * marks[k][h] for k in range(n)), w[h]) for h in range(n))


def j1_matrix(G, field_tag="R"):
    """Rows: perm_character(G, H) for each subgroup class."""
    return G.memo(
        ("j1", field_tag),
        lambda: tuple(
            rt.perm_character(G, H, field_tag).coeffs for H in subgroup_classes(G).representatives()
        ),
    )


def j1(a, field_tag="R"):
    G = a.group
    m = j1_matrix(G, field_tag)
    out = [0] * len(rt.f_irreducibles(G, field_tag))
    for c, row in zip(a.coeffs, m):
        if c:
            out = [x + c * y for x, y in zip(out, row)]
    return rt.RepRingElement(field_tag, G, out)


def cyclic_class_indices(G):
    return subgroup_classes(G).cyclic_indices()


def hs_q_of_rep(v):
    """Entry at each cyclic class (H): character of v at a generator of H, over |WH|."""
    G = v.group
    table = rt.char_table_complex(G)
    chi = v.character()
    classes = subgroup_classes(G)
    w = weyl_orders(G)
    out = []
    for idx in cyclic_class_indices(G):
        h = classes[idx].representative.generator()
        out.append(chi[table.classes.class_of[h]].to_fraction() / w[idx])
    return tuple(out)


def project_cyclic(G, vec):
    return tuple(vec[i] for i in cyclic_class_indices(G))
