"""A short tour of exact cyclotomic arithmetic.

Everything downstream rests on CycNum: elements of Q(zeta_m) stored as
rational coefficient vectors modulo the m-th cyclotomic polynomial.  No
floats, so the identities printed below are exact, not approximate.
"""

from fractions import Fraction

from reflect_gkm import CycNum, parse_cyc, root_of_unity

z = root_of_unity(3, 1)
print("zeta_3          =", z)
print("zeta_3^2        =", z**2)
print("1 + z + z^2     =", 1 + z + z**2, "(vanishes: minimal polynomial)")
print("z * z.inverse() =", z * z.inverse())

# mixed conductors embed into the compositum before combining
i = root_of_unity(4, 1)
w = root_of_unity(12, 7)
print("\nzeta_4 * zeta_3 == zeta_12^7:", i.embed(12) * z.embed(12) == w)

# arithmetic stays rational whenever the value is rational
half = CycNum(3, (Fraction(1, 2),))
print("\n(1/2 + z) + (1/2 - z) =", (half + z) + (half - z))
print("is_rational:", ((half + z) + (half - z)).is_rational())

# the text form round-trips through the parser
expr = parse_cyc("2/3*z^2 - z + 5", 12)
print("\nparsed back:", parse_cyc(expr.text(), 12) == expr)

# minimal() rewrites a value at its true conductor
big = root_of_unity(12, 4)  # this is really a cube root of unity
print("zeta_12^4 minimal conductor:", big.minimal().conductor)
