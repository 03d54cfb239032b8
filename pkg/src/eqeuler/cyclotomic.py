"""Exact arithmetic in cyclotomic fields Q(zeta_e).

A value is stored as integer numerators over a common positive denominator,
in the power basis 1, z, ..., z^(phi(e)-1) of Q(z) = Q[x]/Phi_e(x).
Values with different conductors are lifted to the lcm before combining.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy


def _lcm(a, b):
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    coeffs = [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("x"))).all_coeffs()]
    return tuple(reversed(coeffs))


@lru_cache(maxsize=None)
def _power_table(e):
    """Row j holds z^j reduced modulo Phi_e, for j in 0 .. e-1."""
    phi = cyclotomic_poly(e)
    n = len(phi) - 1
    rows = []
    cur = [1] + [0] * (n - 1) if n else []
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x and reduce: x^n = -(phi_0 + ... + phi_{n-1} x^{n-1})
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(n):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(e):
    return tuple(a for a in range(1, e + 1) if gcd(a, e) == 1)


@lru_cache(maxsize=None)
def _trace_of_power(e, j):
    """Tr_{Q(z_e)/Q}(z_e^j), a Ramanujan sum."""
    m = e // gcd(e, j)
    return int(sympy.totient(e) // sympy.totient(m) * sympy.mobius(m))


def _reduce_full(e, full):
    """Reduce a length-e vector of coefficients on z^0..z^(e-1)."""
    table = _power_table(e)
    n = len(table[0])
    out = [0] * n
    for j, c in enumerate(full):
        if c:
            row = table[j]
            for i in range(n):
                if row[i]:
                    out[i] += c * row[i]
    return out


class Cyclotomic:
    __slots__ = ("e", "num", "den", "_hash")

    def __init__(self, e, num, den=1):
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.e = e
        self.num = tuple(num)
        self.den = den
        self._hash = None

    # --- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, q):
        q = Fraction(q)
        return cls(1, [q.numerator], q.denominator)

    @classmethod
    def zeta(cls, e, k=1):
        return cls(e, list(_power_table(e)[k % e]))

    @classmethod
    def from_powers(cls, e, coeffs):
        """Sum of coeffs[j] * z_e^j; coeffs may be Fractions."""
        den = 1
        for c in coeffs:
            den = _lcm(den, Fraction(c).denominator)
        full = [int(Fraction(c) * den) for c in coeffs]
        full += [0] * (e - len(full))
        return cls(e, _reduce_full(e, full), den)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # --- structure -------------------------------------------------------

    def lift(self, E):
        """Same value written with conductor E (a multiple of e)."""
        if E == self.e:
            return self
        if E % self.e:
            raise ValueError(f"{E} is not a multiple of {self.e}")
        step = E // self.e
        full = [0] * E
        for i, c in enumerate(self.num):
            full[i * step] = c
        return Cyclotomic(E, _reduce_full(E, full), self.den)

    def _common(self, other):
        other = Cyclotomic.coerce(other)
        if self.e == other.e:
            return self, other
        E = _lcm(self.e, other.e)
        return self.lift(E), other.lift(E)

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def is_integer(self):
        return self.is_rational() and self.to_fraction().denominator == 1

    def coefficients(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def power_coefficients(self):
        """Coefficients on z^0..z^(e-1) (one choice; not canonical)."""
        out = [Fraction(0)] * self.e
        for i, c in enumerate(self.coefficients()):
            out[i] = c
        return out

    # --- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        d = _lcm(a.den, b.den)
        fa, fb = d // a.den, d // b.den
        return Cyclotomic(a.e, [x * fa + y * fb for x, y in zip(a.num, b.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, [-c for c in self.num], self.den)

    def __sub__(self, other):
        try:
            return self + (-Cyclotomic.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.e, [c * q.numerator for c in self.num], self.den * q.denominator)
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        e = a.e
        if e == 1:
            return Cyclotomic(1, [a.num[0] * b.num[0]], a.den * b.den)
        full = [0] * e
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        full[(i + j) % e] += x * y
        return Cyclotomic(e, _reduce_full(e, full), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * Cyclotomic.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, a):
        """Image under z -> z^a (gcd(a, e) = 1)."""
        if gcd(a, self.e) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        full = [0] * self.e
        for i, c in enumerate(self.num):
            full[(i * a) % self.e] += c
        return Cyclotomic(self.e, _reduce_full(self.e, full), self.den)

    def conj(self):
        return self.galois(-1 % self.e if self.e > 1 else 1)

    def norm(self):
        out = Cyclotomic.rational(1)
        for a in _units(self.e):
            out = out * self.galois(a)
        return out.to_fraction()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.to_fraction())
        rest = Cyclotomic.rational(1)
        for a in _units(self.e)[1:]:
            rest = rest * self.galois(a)
        return rest * (1 / (rest * self).to_fraction())

    def trace(self):
        """Normalised trace Tr(x)/phi(e); independent of the conductor used."""
        total = Fraction(0)
        phi = len(self.num)
        for i, c in enumerate(self.num):
            if c:
                total += c * _trace_of_power(self.e, i)
        return total / (phi * self.den)

    # --- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.trace()) if not self.is_rational() else hash(self.to_fraction())
        return self._hash

    def minimal_conductor(self):
        """The smallest f dividing e such that the value lies in Q(z_f)."""
        for f in sorted(d for d in range(1, self.e + 1) if self.e % d == 0):
            if f % 4 == 2:
                continue
            try:
                cand = self._project(f)
            except ValueError:
                continue
            if cand.lift(self.e) == self:
                return f
        return self.e

    def _project(self, f):
        # solve for the coordinates in Q(z_f) by taking the images of the
        # power basis of Q(z_f) inside Q(z_e) and solving a linear system
        from .linalg import solve_rational

        n_f = len(cyclotomic_poly(f)) - 1
        basis = [Cyclotomic.zeta(f, i).lift(self.e) for i in range(n_f)]
        cols = [[Fraction(c, b.den) for c in b.num] for b in basis]
        matrix = [list(row) for row in zip(*cols)]
        rhs = list(self.coefficients())
        sol = solve_rational(matrix, rhs)
        if sol is None:
            raise ValueError("not in subfield")
        den = 1
        for s in sol:
            den = _lcm(den, s.denominator)
        return Cyclotomic(f, [int(s * den) for s in sol], den)

    def canonical(self):
        f = self.minimal_conductor()
        return self if f == self.e else self._project(f)

    def sort_key(self, E):
        """Lexicographic key on the coordinates after lifting to conductor E."""
        return self.lift(E).coefficients()

    def to_complex(self):
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(c * z ** i for i, c in enumerate(self.coefficients()))

    def to_json(self):
        """Power-basis coordinates at the smallest conductor holding the value."""
        c = self.canonical()
        return {"e": c.e, "coeffs": [f"{q.numerator}/{q.denominator}" for q in c.coefficients()]}

    @classmethod
    def from_json(cls, data):
        coeffs = [Fraction(s) for s in data["coeffs"]]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        return cls(int(data["e"]), [int(c * den) for c in coeffs], den)

    def __repr__(self):
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for i, c in enumerate(self.coefficients()):
            if c:
                terms.append(f"{c}*z{self.e}^{i}" if i else f"{c}")
        return "(" + " + ".join(terms) + ")"


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
