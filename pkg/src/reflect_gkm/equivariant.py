"""Maps from a group into its polynomial ring, and the weighted
divided-difference operators along pseudo-reflections.

A GroupMap F assigns a polynomial F(x) to every element x, with the right
action (F . w)(x) = F(x w^-1).  For a pseudo-reflection s of order r with
co-root ell and eigenvalue lambda, the order-i operator along s is

    (orbit_difference(s, i, F))(x)
        = x(ell)^-i * sum_{j<r} lambda^{-ij} F(x s^j),

a lambda-weighted average over the right <s>-orbit of x divided by the i-th
power of the transported co-root.  The sum is unchanged (up to exact
cancellation of the weights) along the orbit, so the operator value is
computed once per right coset and propagated; whether the division is exact
is likewise a property of the coset, not the representative.

A map is a *member* when every such division is exact, over every
pseudo-reflection s (all of them, including proper powers sharing a
hyperplane) and every 1 <= i <= order(s) - 1.  Members are exactly the
localization images of tensors, which is what the verification suite
establishes degree by degree; this module only provides the certificates
and the graded nullspace the comparison needs.

divided_difference is the same weighted average acting on a single
polynomial through the group action instead of along orbits; values of
orbit differences of members are where it shows up downstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cyclotomic import CycNum
from .groups import PseudoReflection, ReflectionGroup
from .linalg import nullspace
from .polynomials import (
    MultiPoly,
    NotDivisible,
    divide_by_linear_power,
    graded_monomials,
    hyperplane_coordinates,
    parse_poly,
    poly_text,
)

__all__ = [
    "GroupMap",
    "MapFileError",
    "MembershipCertificate",
    "MembershipFailure",
    "NotAMember",
    "coroot_map",
    "divided_difference",
    "dump_group_map",
    "load_group_map",
    "membership",
    "membership_basis",
    "orbit_decomposition",
    "orbit_difference",
]


class MapFileError(Exception):
    """A group-map file violates the schema."""


class NotAMember(Exception):
    """An operation required a member; carries the failing certificate."""

    def __init__(self, certificate: "MembershipCertificate"):
        super().__init__("map fails the divisibility membership conditions")
        self.certificate = certificate


class GroupMap:
    """A tuple of polynomials indexed by group elements."""

    __slots__ = ("group", "values")

    def __init__(self, group: ReflectionGroup, values):
        vals = tuple(values)
        if len(vals) != group.order:
            raise ValueError("one value per group element required")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("GroupMap is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, group: ReflectionGroup, value) -> "GroupMap":
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(group.dimension, group.conductor, value)
        return cls(group, [value] * group.order)

    @classmethod
    def zero(cls, group: ReflectionGroup) -> "GroupMap":
        return cls.constant(group, 0)

    # -- pointwise ring structure -------------------------------------------

    def _lift(self, other):
        if isinstance(other, GroupMap):
            if other.group is not self.group:
                raise ValueError("maps over different groups")
            return other
        if isinstance(other, (int, Fraction, CycNum, MultiPoly)):
            return GroupMap.constant(self.group, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GroupMap(self.group, [a + b for a, b in zip(self.values, o.values)])

    __radd__ = __add__

    def __neg__(self):
        return GroupMap(self.group, [-a for a in self.values])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GroupMap(self.group, [a - b for a, b in zip(self.values, o.values)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GroupMap(self.group, [a * b for a, b in zip(self.values, o.values)])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = GroupMap.constant(self.group, 1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return GroupMap(self.group, [a / other for a in self.values])
        return NotImplemented

    def __bool__(self):
        return any(self.values)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.values == o.values

    __hash__ = None

    # -- the right action ----------------------------------------------------

    def act(self, w: int) -> "GroupMap":
        """(F . w)(x) = F(x w^-1)."""
        g = self.group
        wi = g.inv(w)
        return GroupMap(g, [self.values[g.mul(x, wi)] for x in range(g.order)])

    # -- grading -------------------------------------------------------------

    def degree(self) -> int | None:
        degs = [v.degree() for v in self.values if v]
        return max(degs) if degs else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        if d is None:
            d = self.degree()
        if d is None:
            return True
        return all(
            (not v) or (v.is_homogeneous() and v.degree() == d) for v in self.values
        )

    def __repr__(self):
        inner = ", ".join(poly_text(v) for v in self.values)
        return f"GroupMap[{inner}]"


# ---------------------------------------------------------------------------
# certificates


@dataclass
class MembershipFailure:
    element: int
    reflection: PseudoReflection
    power: int
    witness: NotDivisible


@dataclass
class MembershipCertificate:
    failures: list[MembershipFailure]

    @property
    def ok(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# operators


def coroot_map(group: ReflectionGroup, s: PseudoReflection) -> GroupMap:
    """The map x -> x(ell_s), the transported co-root of s."""
    values = []
    for x in range(group.order):
        c, form = group.act_linear(x, s.coroot)
        values.append(form.as_poly() * c)
    return GroupMap(group, values)


def divided_difference(group: ReflectionGroup, s: PseudoReflection, i: int, f: MultiPoly):
    """ell_s^-i sum_j lambda^{-ij} s^j(f) on a single polynomial.

    For i <= order - 1 the division is always exact (a failure would be a
    library bug and is asserted); beyond that the result may genuinely be
    non-polynomial and NotDivisible is returned as data.
    """
    powers = group.cyclic_powers(s.element)
    w = s.eigenvalue ** (-i)
    acc = MultiPoly.zero(group.dimension, group.conductor)
    weight = CycNum.one(group.conductor)
    for p in powers:
        acc = acc + group.act(p, f) * weight
        weight = weight * w
    res = divide_by_linear_power(acc, s.coroot, i)
    if isinstance(res, NotDivisible) and i <= s.order - 1:
        raise AssertionError(
            "inexact division in a range where it is guaranteed exact"
        )
    return res


def orbit_difference(group: ReflectionGroup, s: PseudoReflection, i: int, F: GroupMap):
    """The order-i weighted difference of F along right <s>-orbits; returns
    the certificate of failed divisibilities instead of a map when F is not
    smooth enough."""
    powers = group.cyclic_powers(s.element)
    w = s.eigenvalue ** (-i)
    values: list[MultiPoly | None] = [None] * group.order
    failures: list[MembershipFailure] = []
    for coset in group.right_cosets(s.element):
        rep = coset[0]
        acc = MultiPoly.zero(group.dimension, group.conductor)
        weight = CycNum.one(group.conductor)
        for member in coset:
            acc = acc + F.values[member] * weight
            weight = weight * w
        c, form = group.act_linear(rep, s.coroot)
        if i > 0:
            res = divide_by_linear_power(acc, form, i)
            if isinstance(res, NotDivisible):
                failures.append(MembershipFailure(rep, s, i, res))
                continue
            value = res * c ** (-i)
        else:
            value = acc * form.as_poly() ** (-i) * c ** (-i)
        for member in coset:
            values[member] = value
    if failures:
        return MembershipCertificate(failures)
    return GroupMap(group, values)


def membership(F: GroupMap) -> MembershipCertificate:
    """Certificate that every orbit difference of F stays polynomial, over
    all pseudo-reflections and all orders 1 <= i < order(s)."""
    failures: list[MembershipFailure] = []
    for s in F.group.reflections():
        for i in range(1, s.order):
            res = orbit_difference(F.group, s, i, F)
            if isinstance(res, MembershipCertificate):
                failures.extend(res.failures)
    return MembershipCertificate(failures)


def orbit_decomposition(group: ReflectionGroup, F: GroupMap, s: PseudoReflection) -> list[GroupMap]:
    """[orbit_difference(s, j, F) for j < order(s)]; for members these
    reassemble F as (1/order) sum_j component_j * coroot_map^j."""
    cert = membership(F)
    if not cert.ok:
        raise NotAMember(cert)
    return [orbit_difference(group, s, j, F) for j in range(s.order)]


# ---------------------------------------------------------------------------
# the graded membership nullspace


def membership_basis(group: ReflectionGroup, d: int) -> list[GroupMap]:
    """Deterministic basis of the degree-d homogeneous members.

    Unknowns are the monomial coefficients of F(x) for every x; each
    (reflection, order, coset) triple contributes the linear conditions
    "the low-order part of the weighted orbit sum vanishes in hyperplane
    coordinates", which is divisibility said without dividing.
    """
    n, m = group.dimension, group.conductor
    monomials = graded_monomials(n, d)
    nmono = len(monomials)
    ncols = group.order * nmono
    zero = CycNum.zero(m)
    rows: list[list[CycNum]] = []
    for s in group.reflections():
        cosets = group.right_cosets(s.element)
        for i in range(1, s.order):
            w = s.eigenvalue ** (-i)
            for coset in cosets:
                rep = coset[0]
                _, form = group.act_linear(rep, s.coroot)
                coords = hyperplane_coordinates(form)
                images = [coords.to_axis_sub.monomial_image(e) for e in monomials]
                low = [e for e in monomials if e[0] < i]
                if not low:
                    continue
                row_of = {e: k for k, e in enumerate(low)}
                block = [[zero] * ncols for _ in low]
                weight = CycNum.one(m)
                for member in coset:
                    for k, img in enumerate(images):
                        col = member * nmono + k
                        for e, c in img.terms.items():
                            slot = row_of.get(e)
                            if slot is not None:
                                block[slot][col] = block[slot][col] + weight * c
                    weight = weight * w
                rows.extend(block)
    basis = nullspace(rows, ncols, m)
    out = []
    for vec in basis:
        values = []
        for x in range(group.order):
            chunk = vec[x * nmono : (x + 1) * nmono]
            values.append(
                MultiPoly(n, m, {e: c for e, c in zip(monomials, chunk) if c})
            )
        out.append(GroupMap(group, values))
    return out


# ---------------------------------------------------------------------------
# files


def dump_group_map(F: GroupMap) -> dict:
    g = F.group
    return {
        "group": g.name,
        "values": {
            str(x): poly_text(F.values[x], names=g.variables)
            for x in range(g.order)
        },
    }


def load_group_map(source, group: ReflectionGroup) -> GroupMap:
    """Read the JSON form {"group": name, "values": {"<index>": "<poly>"}};
    missing indices mean zero."""
    if isinstance(source, (str, Path)):
        try:
            data = json.loads(Path(source).read_text())
        except OSError as exc:
            raise MapFileError(f"cannot read {source}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise MapFileError(f"{source}: invalid JSON ({exc})") from None
    else:
        data = source
    if not isinstance(data, dict) or "values" not in data:
        raise MapFileError("map file must be an object with a 'values' field")
    declared = data.get("group")
    if declared is not None and declared != group.name:
        raise MapFileError(
            f"map is declared for group {declared!r}, not {group.name!r}"
        )
    raw = data["values"]
    if not isinstance(raw, dict):
        raise MapFileError("'values' must map element indices to polynomials")
    values = [MultiPoly.zero(group.dimension, group.conductor)] * group.order
    for key, text in raw.items():
        try:
            idx = int(key)
        except ValueError:
            raise MapFileError(f"bad element index {key!r}") from None
        if not 0 <= idx < group.order:
            raise MapFileError(f"element index {idx} out of range")
        try:
            values[idx] = parse_poly(
                str(text), group.dimension, group.conductor, names=group.variables
            )
        except ValueError as exc:
            raise MapFileError(f"value at index {idx}: {exc}") from None
    return GroupMap(group, values)
