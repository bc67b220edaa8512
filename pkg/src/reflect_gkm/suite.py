"""The verification suite: graded dimension comparison plus property checks.

run_suite drives everything the library claims about a group, in three
sections.  The theorem section compares, degree by degree, the predicted
dimension of the localized image against its actual rank and against the
divisibility nullspace, and spot-checks that localizations of random
tensors pass membership.  The lemma section exercises the operator
identities on seeded random data: constants, the right action with its
conjugation twist, orbit decomposition, the product rule, commutation with
localization, and closure of the operators on members.  The hypergraph
section confirms that edge interpolation agrees with orbit membership and
that the two integral routes coincide, on members and on perturbed
non-members alike.

Reports are deterministic: every check derives its own child generator
from the suite seed and its name, so a fixed (group, dmax, trials, seed)
reproduces the same JSON byte for byte.  Wall-clock timings are collected
for the human-readable rendering only and never enter the JSON.

The optional pairwise control computes the graded dimensions cut out by
the classical adjacent-difference condition alone.  It is expected to
match the true dimensions exactly when every reflection has order two and
to overshoot somewhere when higher orders are present; the control passes
when that pattern holds.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .equivariant import GroupMap, membership, orbit_difference
from .groups import ReflectionGroup, load_group
from .hypergraph import (
    EdgeWitness,
    build_hypergraph,
    edge_quotients,
    hypergraph_membership,
    integral_identity,
    pairwise_graded_dimension,
)
from .invariants import coinvariant_basis
from .localization import commutes_with_difference, dimension_triple
from .sampling import random_member, random_nonmember, random_tensor

__all__ = [
    "ControlResult",
    "DegreeRow",
    "LemmaResult",
    "NotReflectionGenerated",
    "VerificationReport",
    "default_max_degree",
    "run_suite",
]

ALL_SECTIONS = ("theorem", "lemmas", "hypergraph")


class NotReflectionGenerated(Exception):
    """The group is not generated by its pseudo-reflections, so the claims
    under test do not apply; pass force=True to run anyway."""


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    predicted: int
    image: int
    nullspace: int

    @property
    def ok(self) -> bool:
        return self.predicted == self.image == self.nullspace


@dataclass(frozen=True)
class LemmaResult:
    name: str
    trials: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class ControlResult:
    pairwise: tuple[int, ...]
    membership: tuple[int, ...]
    all_order_two: bool

    @property
    def agrees(self) -> bool:
        return self.pairwise == self.membership

    @property
    def ok(self) -> bool:
        # never undershoot; match exactly iff no reflection of higher order
        if any(p < m for p, m in zip(self.pairwise, self.membership)):
            return False
        return self.agrees == self.all_order_two


@dataclass
class VerificationReport:
    group: str
    order: int
    degrees: tuple[int, ...]
    dmax: int
    trials: int
    seed: int
    rows: tuple[DegreeRow, ...] = ()
    image_members: LemmaResult | None = None
    lemmas: tuple[LemmaResult, ...] = ()
    hypergraph: LemmaResult | None = None
    control: ControlResult | None = None
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        parts = [row.ok for row in self.rows]
        parts += [r.ok for r in self.lemmas]
        for extra in (self.image_members, self.hypergraph, self.control):
            if extra is not None:
                parts.append(extra.ok)
        return all(parts)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {
            "group": self.group,
            "order": self.order,
            "degrees": list(self.degrees),
            "dmax": self.dmax,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.ok,
            "theorem": None,
            "lemmas": [
                {"name": r.name, "trials": r.trials, "failures": r.failures, "ok": r.ok}
                for r in self.lemmas
            ],
            "hypergraph": None,
            "control": None,
        }
        if self.rows:
            out["theorem"] = {
                "rows": [
                    {
                        "degree": r.degree,
                        "predicted": r.predicted,
                        "image": r.image,
                        "nullspace": r.nullspace,
                        "ok": r.ok,
                    }
                    for r in self.rows
                ],
                "members": None
                if self.image_members is None
                else {
                    "trials": self.image_members.trials,
                    "failures": self.image_members.failures,
                },
                "ok": all(r.ok for r in self.rows)
                and (self.image_members is None or self.image_members.ok),
            }
        if self.hypergraph is not None:
            h = self.hypergraph
            out["hypergraph"] = {
                "trials": h.trials,
                "failures": h.failures,
                "ok": h.ok,
            }
        if self.control is not None:
            c = self.control
            out["control"] = {
                "pairwise": list(c.pairwise),
                "membership": list(c.membership),
                "agrees": c.agrees,
                "all_order_two": c.all_order_two,
                "ok": c.ok,
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "VerificationReport":
        rows = ()
        image_members = None
        theorem = data.get("theorem")
        if theorem:
            rows = tuple(
                DegreeRow(r["degree"], r["predicted"], r["image"], r["nullspace"])
                for r in theorem["rows"]
            )
            if theorem.get("members"):
                image_members = LemmaResult(
                    "localized_members",
                    theorem["members"]["trials"],
                    theorem["members"]["failures"],
                )
        lemmas = tuple(
            LemmaResult(r["name"], r["trials"], r["failures"])
            for r in data.get("lemmas", [])
        )
        hyper = None
        if data.get("hypergraph"):
            h = data["hypergraph"]
            hyper = LemmaResult("hypergraph_equivalence", h["trials"], h["failures"])
        control = None
        if data.get("control"):
            c = data["control"]
            control = ControlResult(
                tuple(c["pairwise"]), tuple(c["membership"]), c["all_order_two"]
            )
        return cls(
            group=data["group"],
            order=data["order"],
            degrees=tuple(data["degrees"]),
            dmax=data["dmax"],
            trials=data["trials"],
            seed=data["seed"],
            rows=rows,
            image_members=image_members,
            lemmas=lemmas,
            hypergraph=hyper,
            control=control,
        )

    def text(self) -> str:
        lines = [
            f"group {self.group}: order {self.order}, "
            f"degrees {list(self.degrees)}, dmax {self.dmax}, "
            f"trials {self.trials}, seed {self.seed}"
        ]
        if self.rows:
            lines.append("  degree  predicted  image  nullspace")
            for r in self.rows:
                mark = "ok" if r.ok else "MISMATCH"
                lines.append(
                    f"  {r.degree:>6}  {r.predicted:>9}  {r.image:>5}  "
                    f"{r.nullspace:>9}  {mark}"
                )
            if self.image_members is not None:
                m = self.image_members
                lines.append(
                    f"  localized members: {m.trials} trials, "
                    f"{m.failures} failures"
                )
        for r in self.lemmas:
            mark = "ok" if r.ok else "FAIL"
            lines.append(f"  {r.name}: {r.trials} checks, {r.failures} failures  {mark}")
        if self.hypergraph is not None:
            h = self.hypergraph
            mark = "ok" if h.ok else "FAIL"
            lines.append(
                f"  hypergraph equivalence: {h.trials} checks, "
                f"{h.failures} failures  {mark}"
            )
        if self.control is not None:
            c = self.control
            mark = "ok" if c.ok else "FAIL"
            lines.append(
                f"  pairwise control: dims {list(c.pairwise)} vs "
                f"{list(c.membership)} ({'agree' if c.agrees else 'differ'})  {mark}"
            )
        for name, secs in sorted(self.timings.items()):
            lines.append(f"  time {name}: {secs:.2f}s")
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# lemma runners


def _child_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _constant_maps(group: ReflectionGroup) -> LemmaResult:
    checks = failures = 0
    one = GroupMap.constant(group, 1)
    for s in group.reflections():
        for i in range(1, s.order):
            checks += 1
            out = orbit_difference(group, s, i, one)
            if not (isinstance(out, GroupMap) and not out):
                failures += 1
    checks += 1
    if not membership(one).ok:
        failures += 1
    return LemmaResult("constant_maps", checks, failures)


def _action_closure(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    rng = _child_rng(seed, "action_closure")
    refl = group.reflections()
    checks = failures = 0
    for _ in range(trials):
        F = random_member(rng, group)
        for w in range(group.order):
            checks += 1
            if not membership(F.act(w)).ok:
                failures += 1
        w = rng.randrange(group.order)
        Fw = F.act(w)
        for s in refl:
            c, conj = group.conjugate_reflection(s, w)
            for i in range(1, s.order):
                checks += 1
                lhs = orbit_difference(group, s, i, Fw)
                rhs = orbit_difference(group, conj, i, F)
                good = (
                    isinstance(lhs, GroupMap)
                    and isinstance(rhs, GroupMap)
                    and lhs == rhs.act(w) * c ** (-i)
                )
                if not good:
                    failures += 1
    return LemmaResult("action_closure", checks, failures)


def _orbit_decomposition(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    from .equivariant import coroot_map

    rng = _child_rng(seed, "orbit_decomposition")
    checks = failures = 0
    for _ in range(trials):
        F = random_member(rng, group)
        for s in group.reflections():
            checks += 1
            parts = [orbit_difference(group, s, j, F) for j in range(s.order)]
            if not all(isinstance(p, GroupMap) for p in parts):
                failures += 1
                continue
            L = coroot_map(group, s)
            rebuilt = GroupMap.zero(group)
            for j, part in enumerate(parts):
                rebuilt = rebuilt + part * L ** j
            if rebuilt / s.order != F:
                failures += 1
    return LemmaResult("orbit_decomposition", checks, failures)


def _leibniz(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    from .equivariant import coroot_map

    rng = _child_rng(seed, "leibniz")
    checks = failures = 0
    for _ in range(trials):
        F = random_member(rng, group, max_degree=3)
        G = random_member(rng, group, max_degree=3)
        FG = F * G
        for s in group.reflections():
            r = s.order
            L = coroot_map(group, s)
            ops_F = [orbit_difference(group, s, a, F) for a in range(r)]
            ops_G = [orbit_difference(group, s, a, G) for a in range(r)]
            if not all(isinstance(p, GroupMap) for p in ops_F + ops_G):
                checks += r
                failures += r
                continue
            for i in range(r):
                checks += 1
                lhs = orbit_difference(group, s, i, FG)
                rhs = GroupMap.zero(group)
                for a in range(r):
                    b = (i - a) % r
                    term = ops_F[a] * ops_G[b]
                    wrap = a + b - i
                    if wrap:
                        term = term * L ** wrap
                    rhs = rhs + term
                if not (isinstance(lhs, GroupMap) and lhs == rhs / r):
                    failures += 1
    return LemmaResult("leibniz", checks, failures)


def _localization_commutes(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    rng = _child_rng(seed, "localization_commutes")
    checks = failures = 0
    for _ in range(trials):
        T = random_tensor(rng, group, max_summands=1)
        for s in group.reflections():
            for i in range(1, s.order):
                checks += 1
                if not commutes_with_difference(group, s, i, T):
                    failures += 1
    return LemmaResult("localization_commutes", checks, failures)


def _operator_closure(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    rng = _child_rng(seed, "operator_closure")
    checks = failures = 0
    for _ in range(trials):
        F = random_member(rng, group)
        for s in group.reflections():
            for i in range(1, s.order):
                checks += 1
                out = orbit_difference(group, s, i, F)
                good = (
                    isinstance(out, GroupMap)
                    and out.act(s.element) == out
                    and membership(out).ok
                )
                if not good:
                    failures += 1
    return LemmaResult("operator_closure", checks, failures)


def _hypergraph_equivalence(group: ReflectionGroup, seed: int, trials: int) -> LemmaResult:
    rng = _child_rng(seed, "hypergraph_equivalence")
    H = build_hypergraph(group)
    checks = failures = 0
    for _ in range(trials):
        member = random_member(rng, group)
        nonmember = random_nonmember(rng, group)
        for F, expect in ((member, True), (nonmember, False)):
            checks += 1
            edges_ok = not hypergraph_membership(H, F)
            orbit_ok = membership(F).ok
            if not (edges_ok == orbit_ok == expect):
                failures += 1
            for edge in H.edges:
                checks += 1
                if not all(integral_identity(edge, F, k) for k in range(edge.size)):
                    failures += 1
        # interpolation succeeds edge by edge exactly where membership says
        checks += 1
        if any(isinstance(edge_quotients(e, member), EdgeWitness) for e in H.edges):
            failures += 1
    return LemmaResult("hypergraph_equivalence", checks, failures)


# ---------------------------------------------------------------------------
# the suite


def default_max_degree(group: ReflectionGroup) -> int:
    return sum(d - 1 for d in group.fundamental_degrees()) + 3


def _worker_count() -> int:
    raw = os.environ.get("REFLECT_GKM_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(
    group,
    dmax: int | None = None,
    trials: int = 100,
    seed: int = 0,
    naive_control: bool = False,
    force: bool = False,
    sections=ALL_SECTIONS,
) -> VerificationReport:
    if not isinstance(group, ReflectionGroup):
        group = load_group(group)
    if not group.generated_by_reflections() and not force:
        raise NotReflectionGenerated(
            f"group {group.name!r} is not generated by pseudo-reflections; "
            "the verified claims do not apply (use force to run regardless)"
        )
    degrees = group.fundamental_degrees()
    if dmax is None:
        dmax = default_max_degree(group)
    timings: dict[str, float] = {}

    rows: tuple[DegreeRow, ...] = ()
    image_members = None
    if "theorem" in sections:
        t0 = time.perf_counter()
        coinv = coinvariant_basis(group)

        def one_row(d: int) -> DegreeRow:
            predicted, image, null = dimension_triple(group, d, coinv)
            return DegreeRow(d, predicted, image, null)

        workers = _worker_count()
        degrees_range = range(dmax + 1)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                rows = tuple(pool.map(one_row, degrees_range))
        else:
            rows = tuple(one_row(d) for d in degrees_range)

        rng = _child_rng(seed, "localized_members")
        fails = 0
        for _ in range(trials):
            if not membership(random_member(rng, group)).ok:
                fails += 1
        image_members = LemmaResult("localized_members", trials, fails)
        timings["theorem"] = time.perf_counter() - t0

    lemmas: list[LemmaResult] = []
    if "lemmas" in sections:
        t0 = time.perf_counter()
        lemmas.append(_constant_maps(group))
        lemmas.append(_action_closure(group, seed, trials))
        lemmas.append(_orbit_decomposition(group, seed, trials))
        lemmas.append(_leibniz(group, seed, trials))
        lemmas.append(_localization_commutes(group, seed, trials))
        lemmas.append(_operator_closure(group, seed, trials))
        timings["lemmas"] = time.perf_counter() - t0

    hyper = None
    if "hypergraph" in sections:
        t0 = time.perf_counter()
        hyper = _hypergraph_equivalence(group, seed, trials)
        timings["hypergraph"] = time.perf_counter() - t0

    control = None
    if naive_control:
        t0 = time.perf_counter()
        if rows:
            member_dims = tuple(r.nullspace for r in rows)
        else:
            from .equivariant import membership_basis

            member_dims = tuple(
                len(membership_basis(group, d)) for d in range(dmax + 1)
            )
        pairwise = tuple(
            pairwise_graded_dimension(group, d) for d in range(dmax + 1)
        )
        all2 = all(s.order == 2 for s in group.reflections())
        control = ControlResult(pairwise, member_dims, all2)
        timings["control"] = time.perf_counter() - t0

    return VerificationReport(
        group=group.name,
        order=group.order,
        degrees=tuple(degrees),
        dmax=dmax,
        trials=trials,
        seed=seed,
        rows=rows,
        image_members=image_members,
        lemmas=tuple(lemmas),
        hypergraph=hyper,
        control=control,
        timings=timings,
    )
