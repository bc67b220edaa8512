"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is a residue modulo the m-th cyclotomic polynomial: a vector of
phi(m) rational coefficients

    c_0 + c_1 z + ... + c_{phi(m)-1} z^{phi(m)-1}

where z stands for a fixed primitive m-th root of unity and phi is Euler's
totient.  Everything is built on fractions.Fraction; no float is ever
produced, so equality of values is decidable and exact.

Conductors are sticky by design.  Operands of the ring operations must share
a conductor, except that plain ints and Fractions embed anywhere.  Mixing
two different conductors raises ConductorMismatch instead of silently
coercing: a wrong implicit embedding is exactly the kind of bug an exact
verification library exists to rule out.  Equality and hashing are
mathematical rather than representational: values held at different
conductors are compared inside the compositum, and hashes go through the
minimal conductor, so equal values collide properly in dicts and sets.

The text form is a polynomial in z with high powers first, for example
``1/2*z^2 - 1``; parse_cyc inverts text exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "ConductorMismatch",
    "CycNum",
    "cyclotomic_polynomial",
    "euler_phi",
    "parse_cyc",
    "root_of_unity",
]


class ConductorMismatch(Exception):
    """Arithmetic mixed two values with different declared conductors."""


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, low degree first)


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic here (products of cyclotomic polynomials always are)
    assert den[-1] == 1
    rem = list(num)
    dq = len(num) - len(den)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(den) - 1]
        quo[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    return quo, rem[: len(den) - 1]


@lru_cache(maxsize=None)
def _divisors(m: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree
    first, by exact division of x^m - 1 by the product over proper divisors."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in _divisors(m)[:-1]:
        den = _int_poly_mul(den, list(cyclotomic_polynomial(d)))
    quo, rem = _int_poly_divmod(num, den)
    assert not any(rem), f"cyclotomic division left a remainder at m={m}"
    return tuple(quo)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


_ZERO = Fraction(0)


def _reduce_mod(m: int, vec: list[Fraction]) -> tuple[Fraction, ...]:
    """Residue of a coefficient vector modulo the m-th cyclotomic polynomial."""
    phi = euler_phi(m)
    mod = cyclotomic_polynomial(m)
    r = list(vec)
    for k in range(len(r) - 1, phi - 1, -1):
        c = r[k]
        if c:
            for j in range(phi + 1):
                r[k - phi + j] -= c * mod[j]
    if len(r) < phi:
        r.extend([_ZERO] * (phi - len(r)))
    return tuple(r[:phi])


@lru_cache(maxsize=None)
def _zeta_power(m: int, e: int) -> tuple[Fraction, ...]:
    """z^e reduced into the power basis of Q(zeta_m)."""
    e %= m
    return _reduce_mod(m, [_ZERO] * e + [Fraction(1)])


# ---------------------------------------------------------------------------


class CycNum:
    """An element of Q(zeta_m), reduced modulo the m-th cyclotomic polynomial."""

    __slots__ = ("conductor", "coeffs", "_min")

    def __init__(self, conductor: int, coeffs=(0,)):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        vec = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        phi = euler_phi(conductor)
        if len(vec) > phi:
            tup = _reduce_mod(conductor, vec)
        else:
            vec.extend([_ZERO] * (phi - len(vec)))
            tup = tuple(vec)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tup)
        object.__setattr__(self, "_min", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _make(cls, conductor: int, coeffs: tuple) -> "CycNum":
        """Internal constructor for coefficient tuples that are already
        reduced Fractions of the right length; skips revalidation."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_min", None)
        return obj

    @classmethod
    def rational(cls, conductor: int, value) -> "CycNum":
        return cls(conductor, (Fraction(value),))

    @classmethod
    def zero(cls, conductor: int) -> "CycNum":
        return cls(conductor, ())

    @classmethod
    def one(cls, conductor: int) -> "CycNum":
        return cls(conductor, (Fraction(1),))

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum(self.conductor, (Fraction(other),))
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum._make(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum._make(
            self.conductor, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return CycNum._make(self.conductor, tuple(a * r for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = len(a)
        if n == 1:
            return CycNum._make(self.conductor, (a[0] * b[0],))
        if n == 2:
            # quadratic fields reduce in closed form: z^2 = -mod0 - mod1*z
            mod = cyclotomic_polynomial(self.conductor)
            c2 = a[1] * b[1]
            return CycNum._make(
                self.conductor,
                (a[0] * b[0] - c2 * mod[0], a[0] * b[1] + a[1] * b[0] - c2 * mod[1]),
            )
        conv = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycNum._make(self.conductor, _reduce_mod(self.conductor, conv))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        return CycNum._make(
            self.conductor, _inverse_coeffs(self.conductor, self.coeffs)
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self.inverse() if n < 0 else self
        n = abs(n)
        out = CycNum.one(self.conductor)
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- predicates and conversions ----------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def minimal(self) -> "CycNum":
        """The same value written at its minimal conductor."""
        cached = self._min
        if cached is not None:
            return cached
        out = self
        for d in _divisors(self.conductor)[:-1]:
            sol = _subfield_coords(self.conductor, d, self.coeffs)
            if sol is not None:
                out = CycNum(d, sol)
                break
        object.__setattr__(self, "_min", out)
        return out

    def embed(self, conductor: int) -> "CycNum":
        """Rewrite self inside Q(zeta_conductor); conductor must be a
        multiple of self.conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ConductorMismatch(
                f"{self.conductor} does not divide {conductor}"
            )
        step = conductor // self.conductor
        acc = [_ZERO] * euler_phi(conductor)
        for j, c in enumerate(self.coeffs):
            if c:
                for k, e in enumerate(_zeta_power(conductor, j * step)):
                    acc[k] += c * e
        return CycNum(conductor, acc)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return self.coeffs[0] == r and not any(self.coeffs[1:])
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.coeffs == other.coeffs
        big = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(big).coeffs == other.embed(big).coeffs

    def __hash__(self):
        m = self.minimal()
        if m.conductor == 1:
            return hash(m.coeffs[0])
        return hash((m.conductor, m.coeffs))

    # -- text --------------------------------------------------------------

    def text(self) -> str:
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                zpow = "z" if k == 1 else f"z^{k}"
                body = zpow if mag == 1 else f"{mag}*{zpow}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        if not parts:
            return "0"
        return " ".join(parts)

    __str__ = text

    def __repr__(self):
        return f"CycNum({self.conductor}, {self.coeffs!r})"


# ---------------------------------------------------------------------------
# Fraction polynomial helpers for the extended Euclid above


def _trim(v: list[Fraction]) -> list[Fraction]:
    while v and not v[-1]:
        v.pop()
    return v


def _fp_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _trim(out)


def _fp_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


@lru_cache(maxsize=8192)
def _inverse_coeffs(m: int, coeffs: tuple) -> tuple:
    """Coefficients of the field inverse, by extended Euclid against the
    cyclotomic polynomial.  Cached: inversion is much rarer than
    multiplication but tends to hit the same scalars over and over."""
    mod = [Fraction(c) for c in cyclotomic_polynomial(m)]
    r0, r1 = mod, _trim(list(coeffs))
    s0, s1 = [_ZERO], [Fraction(1)]
    while r1:
        q, r = _fp_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1))
    # r0 is a nonzero constant: the cyclotomic polynomial is irreducible.
    assert len(r0) == 1
    inv = [c / r0[0] for c in s0]
    return _reduce_mod(m, inv)


def _fp_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quo = [_ZERO] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        quo[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    return _trim(quo), _trim(rem[: len(b) - 1])


def _subfield_coords(m: int, d: int, vec) -> tuple[Fraction, ...] | None:
    """Coordinates of vec (living in Q(zeta_m)) over the power basis of
    Q(zeta_d), or None when the value does not lie in the subfield."""
    phi_d = euler_phi(d)
    step = m // d
    cols = [_zeta_power(m, j * step) for j in range(phi_d)]
    # solve cols * c = vec by Gaussian elimination on the augmented system
    rows = [[cols[j][i] for j in range(phi_d)] + [vec[i]] for i in range(euler_phi(m))]
    piv = 0
    pivots: list[int] = []
    for col in range(phi_d):
        hit = next((r for r in range(piv, len(rows)) if rows[r][col]), None)
        if hit is None:
            continue
        rows[piv], rows[hit] = rows[hit], rows[piv]
        inv = 1 / rows[piv][col]
        rows[piv] = [x * inv for x in rows[piv]]
        for r in range(len(rows)):
            if r != piv and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv])]
        pivots.append(col)
        piv += 1
    for r in range(piv, len(rows)):
        if rows[r][-1]:
            return None
    sol = [_ZERO] * phi_d
    for k, col in enumerate(pivots):
        sol[col] = rows[k][-1]
    return tuple(sol)


# ---------------------------------------------------------------------------


def root_of_unity(m: int, k: int) -> CycNum:
    """zeta_m^k at its natural conductor m / gcd(k, m)."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    k %= m
    g = gcd(k, m)
    return CycNum(m // g, _zeta_power(m // g, k // g))


_TERM_RE = re.compile(
    r"^(?:(?P<rat>\d+(?:/\d+)?)(?:\*(?P<pz>z(?:\^\d+)?))?|(?P<z>z(?:\^\d+)?))$"
)


def parse_cyc(text: str, conductor: int) -> CycNum:
    """Parse the text form produced by CycNum.text (rationals, z-powers,
    signs); exponents at or above phi(conductor) are reduced."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]+", s)
    if sum(len(p) for p in pieces) != len(s):
        raise ValueError(f"cannot parse cyclotomic literal {text!r}")
    acc = CycNum.zero(conductor)
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        m = _TERM_RE.match(piece[1:])
        if m is None:
            raise ValueError(f"bad term {piece!r} in cyclotomic literal {text!r}")
        coeff = Fraction(m.group("rat")) if m.group("rat") else Fraction(1)
        zpart = m.group("pz") or m.group("z")
        exp = 0
        if zpart:
            exp = 1 if zpart == "z" else int(zpart[2:])
        acc = acc + CycNum(conductor, [_ZERO] * exp + [sign * coeff])
    return acc
