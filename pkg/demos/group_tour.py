"""Loading a group and reading off its reflection data.

A group file lists generating matrices over a cyclotomic field; closure,
pseudo-reflections, and the invariant dimension series all follow.
"""

from reflect_gkm import load_group, poly_text

g = load_group("b2")
print(f"{g.name}: order {g.order}, dimension {g.dimension}, conductor {g.conductor}")

print("\npseudo-reflections (element, order, eigenvalue, fixed hyperplane):")
for s in g.reflections():
    form = poly_text(s.coroot.as_poly(), names=g.variables)
    print(f"  element {s.element:>2}  order {s.order}  "
          f"eigenvalue {s.eigenvalue.text():<4}  ker({form})")

series = g.molien()
print("\ninvariant dimensions by degree:", series.coefficients(8))
print("fundamental degrees:", list(g.fundamental_degrees()))
print("product of degrees == group order:",
      g.fundamental_degrees(), "->", g.order)

# the right regular structure: multiply two elements and invert one
a, b = 1, 2
print(f"\nmult table sample: {a} * {b} = {g.mul(a, b)}, inverse of {a} is {g.inv(a)}")

# orbits of the cyclic group generated by a reflection partition the group
s = g.reflections()[0]
print(f"right cosets of <element {s.element}>:")
for coset in g.right_cosets(s.element):
    print("  ", coset)
