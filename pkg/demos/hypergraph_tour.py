"""The linear hypergraph of a group and integration over an edge.

Vertices are group elements.  Each reflection s spreads every coset of
its cyclic group into one hyperedge carrying an axial linear form and a
tuple of distinct scalars tau, one per vertex.  A map restricted to an
edge is a polynomial in tau exactly when it satisfies the divisibility
conditions, and a Lagrange-style integral recovers the coefficients two
independent ways.
"""

import random

from reflect_gkm import (
    build_hypergraph,
    edge_integral,
    hypergraph_membership,
    integral_identity,
    load_group,
    localize,
    membership,
    poly_text,
)
from reflect_gkm.hypergraph import edge_integral_weighted, section_polynomial, to_dot
from reflect_gkm.sampling import random_member

g = load_group("z4")
H = build_hypergraph(g)
print(f"{g.name}: {len(H.edges)} hyperedges")
for e in H.edges:
    axial = poly_text(e.axial.as_poly(), names=g.variables)
    taus = ", ".join(t.text() for t in e.tau)
    print(f"  size {e.size}  members {e.members}  axial {axial}  tau ({taus})")

# note the nested edges: the square of the order-4 generator is itself a
# reflection of order 2 and contributes its own smaller edges

rng = random.Random(3)
F = random_member(rng, g)
print("\nrandom localized map is a member:", membership(F).ok)
print("passes every edge:", not hypergraph_membership(H, F))

edge = max(H.edges, key=lambda e: e.size)
print(f"\nintegrating over the size-{edge.size} edge:")
for k in range(edge.size):
    lagrange = edge_integral(edge, F, k)
    weighted = edge_integral_weighted(edge, F, k)
    agree = integral_identity(edge, F, k)
    value = section_polynomial(lagrange, edge.axial)
    text = poly_text(value, names=g.variables) if value is not None else "pole"
    print(f"  insertion {k}: routes agree {agree}, value {text}")

print("\nDOT export (first lines):")
print("\n".join(to_dot(H).splitlines()[:6]))
