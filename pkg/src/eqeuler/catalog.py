"""Small groups as permutation groups.

``small_groups(max_order)`` lists every group of order <= 16 up to
isomorphism, each built from an abstract multiplication rule and realised by
its left-regular representation (a few get a smaller natural action).
"""

from __future__ import annotations

from itertools import product

from .group_core import generate_group


def _regular(elements, mul, gens):
    index = {x: i for i, x in enumerate(elements)}
    perms = [[index[mul(g, x)] for x in elements] for g in gens]
    return generate_group(len(elements), perms)


def cyclic(n):
    if n == 1:
        return generate_group(1, [])
    return generate_group(n, [[(i + 1) % n for i in range(n)]])


def abelian(*ns):
    """Z/n1 x Z/n2 x ... via the regular action."""
    elements = list(product(*[range(n) for n in ns]))

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, ns))

    gens = [tuple(int(i == j) for j in range(len(ns))) for i in range(len(ns))]
    return _regular(elements, mul, gens)


def semidirect_abelian(ns, m, auto):
    """(Z/n1 x ...) x| Z/m where the generator of Z/m acts by ``auto``."""
    base = list(product(*[range(n) for n in ns]))

    def act(k, v):
        for _ in range(k % m):
            v = auto(v)
        return tuple(x % n for x, n in zip(v, ns))

    elements = [(v, k) for v in base for k in range(m)]

    def mul(a, b):
        (v, k), (w, l) = a, b
        w2 = act(k, w)
        return (tuple((x + y) % n for x, y, n in zip(v, w2, ns)), (k + l) % m)

    zero = tuple(0 for _ in ns)
    gens = [(tuple(int(i == j) for j in range(len(ns))), 0) for i in range(len(ns))] + [(zero, 1)]
    for v in base:
        if act(m, v) != v:
            raise ValueError("automorphism order does not divide m")
    return _regular(elements, mul, gens)


def dihedral(n):
    """Dihedral group of order 2n acting on the n-gon (n >= 3)."""
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return generate_group(n, [rot, ref])


def dicyclic(n):
    """Dic_n of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>."""
    N = 2 * n
    elements = [(k, s) for k in range(N) for s in range(2)]

    def mul(x, y):
        (k, s), (l, t) = x, y
        k2 = (k + (-l if s else l)) % N
        if s and t:
            return ((k2 + n) % N, 0)
        return (k2, s ^ t)

    return _regular(elements, mul, [(1, 0), (0, 1)])


def direct_product(G, H):
    """G x H acting on the disjoint union of the two point sets."""
    gens = []
    for g in G.generators:
        gens.append(list(G.elements[g].images) + [G.degree + i for i in range(H.degree)])
    for h in H.generators:
        gens.append(list(range(G.degree)) + [G.degree + i for i in H.elements[h].images])
    return generate_group(G.degree + H.degree, gens)


def symmetric3():
    return generate_group(3, [[1, 2, 0], [1, 0, 2]])


def symmetric(n):
    if n == 1:
        return generate_group(1, [])
    if n == 2:
        return cyclic(2)
    return generate_group(n, [[(i + 1) % n for i in range(n)], [1, 0] + list(range(2, n))])


def alternating4():
    return generate_group(4, [[1, 2, 0, 3], [1, 0, 3, 2]])


def quaternion8():
    return dicyclic(2)


def d4():
    return dihedral(4)


_TABLE = [
    (1, "C1", lambda: cyclic(1)),
    (2, "C2", lambda: cyclic(2)),
    (3, "C3", lambda: cyclic(3)),
    (4, "C4", lambda: cyclic(4)),
    (4, "C2xC2", lambda: abelian(2, 2)),
    (5, "C5", lambda: cyclic(5)),
    (6, "C6", lambda: cyclic(6)),
    (6, "S3", symmetric3),
    (7, "C7", lambda: cyclic(7)),
    (8, "C8", lambda: cyclic(8)),
    (8, "C4xC2", lambda: abelian(4, 2)),
    (8, "C2^3", lambda: abelian(2, 2, 2)),
    (8, "D4", d4),
    (8, "Q8", quaternion8),
    (9, "C9", lambda: cyclic(9)),
    (9, "C3xC3", lambda: abelian(3, 3)),
    (10, "C10", lambda: cyclic(10)),
    (10, "D5", lambda: dihedral(5)),
    (11, "C11", lambda: cyclic(11)),
    (12, "C12", lambda: cyclic(12)),
    (12, "C6xC2", lambda: abelian(6, 2)),
    (12, "D6", lambda: dihedral(6)),
    (12, "A4", alternating4),
    (12, "Dic3", lambda: dicyclic(3)),
    (13, "C13", lambda: cyclic(13)),
    (14, "C14", lambda: cyclic(14)),
    (14, "D7", lambda: dihedral(7)),
    (15, "C15", lambda: cyclic(15)),
    (16, "C16", lambda: cyclic(16)),
    (16, "C4xC4", lambda: abelian(4, 4)),
    (16, "(C4xC2):C2", lambda: semidirect_abelian((4, 2), 2, lambda v: (v[0], v[1] + v[0]))),
    (16, "C4:C4", lambda: semidirect_abelian((4,), 4, lambda v: (-v[0],))),
    (16, "C8xC2", lambda: abelian(8, 2)),
    (16, "M16", lambda: semidirect_abelian((8,), 2, lambda v: (5 * v[0],))),
    (16, "D8", lambda: dihedral(8)),
    (16, "SD16", lambda: semidirect_abelian((8,), 2, lambda v: (3 * v[0],))),
    (16, "Q16", lambda: dicyclic(4)),
    (16, "C4xC2xC2", lambda: abelian(4, 2, 2)),
    (16, "D4xC2", lambda: direct_product(d4(), cyclic(2))),
    (16, "Q8xC2", lambda: direct_product(quaternion8(), cyclic(2))),
    (16, "C4oD4", lambda: semidirect_abelian((4, 2), 2, lambda v: (v[0] + 2 * v[1], v[1]))),
    (16, "C2^4", lambda: abelian(2, 2, 2, 2)),
]


def small_groups(max_order=16):
    """List of (name, group), one per isomorphism class of order <= max_order."""
    return [(name, build()) for order, name, build in _TABLE if order <= max_order]


def by_name(name):
    for _, n, build in _TABLE:
        if n == name:
            return build()
    raise KeyError(name)
