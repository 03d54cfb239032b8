"""Slow, independent reference computations used by the tests.

Nothing here shares code with the library beyond the group and complex
containers themselves.
"""

from itertools import combinations
from math import gcd

import numpy as np


# --- Smith normal form by minors ------------------------------------------


def det(m):
    """Integer determinant by Laplace expansion (fine for k <= 4)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det(minor)
    return total


def minor_gcd_factors(matrix):
    """d_k = g_k / g_{k-1}, g_k the gcd of all k x k minors."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    g = [1]
    for k in range(1, min(rows, cols) + 1):
        acc = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                acc = gcd(acc, det([[matrix[r][c] for c in cs] for r in rs]))
        if acc == 0:
            break
        g.append(acc)
    return [g[k] // g[k - 1] for k in range(1, len(g))]


# --- groups ---------------------------------------------------------------


def brute_subgroups(G):
    """All subgroups as frozensets, by closing every pair of cyclic subgroups repeatedly."""
    cyclic = {frozenset(G.powers(g)) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for A in frontier:
            for C in cyclic:
                S = _close(G, A | C)
                if S not in found:
                    new.add(S)
        found |= new
        frontier = new
    return found


def _close(G, gens):
    members = {0} | set(gens)
    todo = list(members)
    while todo:
        a = todo.pop()
        for b in list(members):
            for c in (G.mult[a][b], G.mult[b][a]):
                if c not in members:
                    members.add(c)
                    todo.append(c)
    return frozenset(members)


def conj_set(G, S, g):
    return frozenset(G.mult[G.mult[G.inv[g]][s]][g] for s in S)


def brute_subgroup_classes(G):
    subs = brute_subgroups(G)
    classes = []
    seen = set()
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in seen:
            continue
        cl = {conj_set(G, S, g) for g in range(G.order)}
        seen |= cl
        classes.append(cl)
    return classes


def brute_normalizer(G, S):
    return [g for g in range(G.order) if conj_set(G, S, g) == frozenset(S)]


def brute_marks(G, H, K):
    """|(G/H)^K| counted on the explicit coset set."""
    H = frozenset(H)
    cosets = {frozenset(G.mult[g][h] for h in H) for g in range(G.order)}
    return sum(1 for c in cosets if all(frozenset(G.mult[k][x] for x in c) == c for k in K))


def f_classes(G, tag):
    """F-conjugacy classes as sorted tuples, straight from the definitions."""
    def cyc(g):
        return frozenset(G.powers(g))

    classes = []
    seen = set()
    for g in range(G.order):
        if g in seen:
            continue
        if tag == "C":
            block = {G.mult[G.mult[G.inv[x]][g]][x] for x in range(G.order)}
        elif tag == "R":
            block = {G.mult[G.mult[G.inv[x]][h]][x] for x in range(G.order) for h in (g, G.inv[g])}
        else:
            target = {conj_set(G, cyc(g), x) for x in range(G.order)}
            block = {h for h in range(G.order) if cyc(h) in target}
        seen |= block
        classes.append(tuple(sorted(block)))
    return classes


# --- numerical character table --------------------------------------------


def numeric_character_table(G, classes):
    """Complex character table (rows = irreducibles) by diagonalising a random
    combination of class sums acting on the centre of the group algebra."""
    r = len(classes)
    cls_of = {}
    for i, c in enumerate(classes):
        for g in c:
            cls_of[g] = i
    # structure constants a[j][k][i] = #{(x, y) in C_j x C_k : x y = g_i}
    a = np.zeros((r, r, r))
    for j in range(r):
        for k in range(r):
            for x in classes[j]:
                for y in classes[k]:
                    z = G.mult[x][y]
                    i = cls_of[z]
                    if z == classes[i][0]:
                        a[j][k][i] += 1
    rng = np.random.default_rng(7)
    coeffs = rng.normal(size=r)
    M = sum(coeffs[j] * a[j] for j in range(r))  # M[k][i]; central characters are right eigenvectors
    vals, vecs = np.linalg.eig(M)
    sizes = np.array([len(c) for c in classes], dtype=float)
    rows = []
    for t in range(r):
        w = vecs[:, t] / vecs[0, t]  # central character omega(C_i)
        # chi(g_i) = d * omega_i / |C_i|, with d^2 = |G| / sum |omega_i|^2 / |C_i|
        s = sum(abs(w[i]) ** 2 / sizes[i] for i in range(r))
        d = (G.order / s) ** 0.5
        rows.append([d * w[i] / sizes[i] for i in range(r)])
    return rows


def same_table(exact_rows, numeric_rows, tol=1e-6):
    """Equal as multisets of rows (complex values)."""
    left = [list(map(complex, row)) for row in exact_rows]
    right = [list(row) for row in numeric_rows]
    for row in left:
        hit = next((i for i, other in enumerate(right) if all(abs(a - b) < tol for a, b in zip(row, other))), None)
        if hit is None:
            return False
        right.pop(hit)
    return not right


# --- complexes ------------------------------------------------------------


def orbit_euler_table(X, objects, fixed, weyl_section):
    """For each object (K, C): Euler characteristic of the quotient of C by
    the stabiliser of C in WK, relative to points of larger isotropy, by
    counting orbits of simplices directly."""
    out = []
    for x in objects:
        fd = fixed[x.class_index]
        comp = set(fd.components[x.component])
        perms = [X.action[n] for w, n in enumerate(weyl_section[x.class_index]) if fd.weyl_action[w][x.component] == x.component]
        cells = [s for s in fd.simplices if s[0] in comp and s not in fd.singular]
        seen = set()
        total = 0
        for s in cells:
            if s in seen:
                continue
            orbit = {tuple(sorted(p[v] for v in s)) for p in perms}
            seen |= orbit
            total += 1 if len(s) % 2 else -1
        out.append(total)
    return out


def coset_space(G, S):
    """Vertices = left cosets gS (as frozensets), with generator images."""
    S = frozenset(S)
    cosets = sorted({frozenset(G.mult[g][s] for s in S) for g in range(G.order)}, key=sorted)
    index = {c: i for i, c in enumerate(cosets)}
    images = []
    for gen in G.generators:
        images.append([index[frozenset(G.mult[gen][x] for x in c)] for c in cosets])
    return len(cosets), images


def random_complex_data(G, rng, max_orbits=3, max_simplices=4):
    """Random simplicial G-set: a few vertex orbits G/S, plus the G-orbits of
    a few random simplices.  Returns (vertex count, maximal simplices,
    generator images); the action need not be admissible."""
    subs = sorted(brute_subgroups(G), key=lambda s: (len(s), sorted(s)))
    n = 0
    images = [[] for _ in G.generators]
    for _ in range(rng.randint(1, max_orbits)):
        S = rng.choice(subs)
        m, imgs = coset_space(G, S)
        for i, img in enumerate(imgs):
            images[i].extend(v + n for v in img)
        n += m
    # full action table by composing generator images along words
    from collections import deque

    act = {0: tuple(range(n))}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for gi, gen in enumerate(G.generators):
            b = G.mult[gen][a]
            if b not in act:
                act[b] = tuple(images[gi][act[a][v]] for v in range(n))
                queue.append(b)
    simplices = set()
    for _ in range(rng.randint(1, max_simplices)):
        k = rng.randint(1, min(3, n))
        base = tuple(sorted(rng.sample(range(n), k)))
        for p in act.values():
            img = tuple(sorted(set(p[v] for v in base)))
            simplices.add(img)
    for v in range(n):
        simplices.add((v,))
    return n, sorted(simplices), images


def lefschetz_numbers(X):
    """chi(X^<g>) for every element g by filtering simplices directly."""
    G = X.group
    out = []
    for g in range(G.order):
        p = X.action[g]
        fixed = [s for s in X.simplices if all(p[v] == v for v in s)]
        out.append(sum(1 if len(s) % 2 else -1 for s in fixed))
    return out
