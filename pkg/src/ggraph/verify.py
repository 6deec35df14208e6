"""Claim registry and sweep harness.

Each claim is checked instance by instance over a group catalog and
summarised in a :class:`VerificationReport`. Outcomes:

* ``PASS``: every instance agrees.
* ``FAIL``: some instance contradicts a consistent statement.
* ``DISCREPANCY``: the statement as literally written disagrees with the
  computation in a documented way, while the reconciled reading holds.
* ``UNKNOWN``: a search budget ran out before the sweep finished.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations
from math import gcd
from typing import Callable

import networkx as nx

from . import catalog as cat
from .analysis import (
    INF,
    Perfection,
    analyze,
    class_degrees,
    clique_number,
    even_order_clique_check,
    is_cograph,
    is_induced_cycle,
    is_perfect,
    twin_reduce,
    two_coloring,
    weighted_diameter,
)
from .divisors import all_divisors, classify_family, embed_in_cyclic, omega_via_divisors, symbolic_diff_adjacent
from .errors import BudgetExceeded, PreconditionFailed, UnknownClaim
from .graphs import (
    Graph,
    class_adjacency,
    class_graph,
    difference_graph,
    difference_graph_undeleted,
    export,
    induced_subgraph,
    intersection_power_graph,
    power_graph,
    without_isolated,
)
from .groups import FiniteGroup, cyclic, mathieu11
from .lattice import CyclicLattice, bits_to_mask, iter_bits
from .numtheory import factorize, is_prime, prime_factors
from .simple import DEFAULT_SCAN, dihedral_reduction_check, psl2_nullness_scan, sl34_quaternion_check
from .specs import build_group


class Outcome(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    DISCREPANCY = "DISCREPANCY"
    UNKNOWN = "UNKNOWN"


@dataclass
class VerificationReport:
    claim_id: str
    instances: str
    outcome: Outcome
    witnesses: list[dict] = field(default_factory=list)
    runtime_ms: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        self.outcome = Outcome(self.outcome)
        if self.outcome in (Outcome.FAIL, Outcome.DISCREPANCY) and not self.witnesses:
            raise ValueError(f"{self.claim_id}: {self.outcome.value} needs a witness")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["outcome"] = self.outcome.value
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            claim_id=data["claim_id"],
            instances=data["instances"],
            outcome=Outcome(data["outcome"]),
            witnesses=list(data.get("witnesses", [])),
            runtime_ms=int(data.get("runtime_ms", 0)),
            details=dict(data.get("details", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


class _Sweep:
    """Collects per-instance verdicts into one report."""

    def __init__(self, claim_id: str, instances: str):
        self.claim_id = claim_id
        self.instances = instances
        self.failures: list[dict] = []
        self.discrepancies: list[dict] = []
        self.unknown: list[dict] = []
        self.details: dict = {}
        self.count = 0
        self.start = time.perf_counter()

    def fail(self, group: str, detail: str):
        self.failures.append({"group": group, "detail": detail})

    def discrepancy(self, group: str, detail: str):
        self.discrepancies.append({"group": group, "detail": detail})

    def run(self, name: str, fn: Callable[[], None]):
        self.count += 1
        try:
            fn()
        except BudgetExceeded as exc:
            self.unknown.append({"group": name, "detail": f"budget exhausted: {exc}"})

    def report(self) -> VerificationReport:
        if self.failures:
            outcome, witnesses = Outcome.FAIL, self.failures + self.discrepancies
        elif self.unknown:
            outcome, witnesses = Outcome.UNKNOWN, self.unknown + self.discrepancies
        elif self.discrepancies:
            outcome, witnesses = Outcome.DISCREPANCY, self.discrepancies
        else:
            outcome, witnesses = Outcome.PASS, []
        self.details.setdefault("instances_checked", self.count)
        return VerificationReport(
            self.claim_id, self.instances, outcome, witnesses,
            int((time.perf_counter() - self.start) * 1000), self.details,
        )


def _fmt_set(xs) -> str:
    return "{" + ", ".join(map(str, sorted(xs))) + "}"


def _diff_rows(lat: CyclicLattice) -> list[int]:
    return class_adjacency(lat, "diff_undeleted")[0]


def _isolated_elements(lat: CyclicLattice) -> set[int]:
    rows = _diff_rows(lat)
    return {x for c in lat.classes if not rows[c.class_id] for x in c.members}


def _two_or_more_primes(m: int) -> bool:
    return len(factorize(m)) >= 2


# ---------------------------------------------------------------------------
# Claims


def check_p_elts(max_order: int | None = None) -> VerificationReport:
    """Identity and prime-order elements are isolated; so are generators of a cyclic group."""
    entries = cat.full_catalog(max_order or cat.DEFAULT_ABELIAN_MAX, min(max_order or cat.DEFAULT_NAMED_MAX, cat.DEFAULT_NAMED_MAX))
    sw = _Sweep("p-elts", f"full catalog ({len(entries)} groups)")

    def one(e: cat.CatalogEntry):
        lat = CyclicLattice(e.build())
        rows = _diff_rows(lat)
        bad = [c.representative for c in lat.classes
               if rows[c.class_id] and (c.subgroup_order == 1 or is_prime(c.subgroup_order))]
        if e.cyclic:
            bad += [c.representative for c in lat.classes
                    if rows[c.class_id] and c.subgroup_order == lat.group.order]
        if bad:
            sw.fail(e.spec, f"non-isolated elements {_fmt_set(bad)}")

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    return sw.report()


def check_nulld_cograph(max_order: int | None = None) -> VerificationReport:
    entries = cat.full_catalog(max_order or cat.DEFAULT_ABELIAN_MAX, min(max_order or cat.DEFAULT_NAMED_MAX, cat.DEFAULT_NAMED_MAX))
    sw = _Sweep("nulld-cograph", f"full catalog ({len(entries)} groups)")
    null_count = 0

    def one(e: cat.CatalogEntry):
        nonlocal null_count
        lat = CyclicLattice(e.build())
        if any(_diff_rows(lat)):
            return
        null_count += 1
        ok, p4 = is_cograph(power_graph(lat))
        if not ok:
            sw.fail(e.spec, f"difference graph null but power graph has induced P4 {p4}")

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    lat = CyclicLattice(build_group("Z(4) x Z(2)"))
    cograph, _ = is_cograph(power_graph(lat))
    null = not any(_diff_rows(lat))
    if not cograph or null:
        sw.fail("Z(4) x Z(2)", f"converse witness broken: cograph={cograph}, null={null}")
    sw.details.update(null_groups=null_count, converse_witness="Z(4) x Z(2)",
                      converse_witness_cograph=cograph, converse_witness_null=null)
    return sw.report()


def _center_two_primes(G: FiniteGroup) -> bool:
    z = len(G.center())
    return z > 1 and len(prime_factors(z)) >= 2


def _is_cyclic_pq(e: cat.CatalogEntry) -> bool:
    return e.cyclic and cat.is_pq(e.order)


def check_conn(max_order: int | None = None) -> VerificationReport:
    """Connected with diameter at most 6 when the centre has two primes, unless ``Z_pq``."""
    entries = cat.full_catalog(max_order or cat.DEFAULT_ABELIAN_MAX, min(max_order or cat.DEFAULT_NAMED_MAX, cat.DEFAULT_NAMED_MAX))
    sw = _Sweep("t:conn", "catalog groups with at least two primes dividing |Z(G)|")
    observed: dict[str, int] = {}
    checked = 0

    def one(e: cat.CatalogEntry):
        nonlocal checked
        G = e.build()
        if not _center_two_primes(G):
            return
        checked += 1
        cg = class_graph(CyclicLattice(G), "diff")
        if _is_cyclic_pq(e):
            if not cg.is_edgeless():
                sw.fail(e.spec, "Z_pq with a non-null difference graph")
            return
        d = weighted_diameter(cg)
        if d == INF or cg.is_edgeless():
            sw.fail(e.spec, "difference graph disconnected or empty")
            return
        observed[e.family] = max(observed.get(e.family, 0), int(d))
        if d > 6:
            sw.fail(e.spec, f"diameter {d} > 6")

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    sw.details.update(groups_in_scope=checked, max_diameter_by_family=observed,
                      max_diameter=max(observed.values(), default=0))
    return sw.report()


def check_disc(max_order: int | None = None) -> VerificationReport:
    bound = max_order or 1000
    sw = _Sweep("t:disc", f"Z(m), m <= {bound}, at least two primes")
    worst = (0, None)

    def one(m: int):
        nonlocal worst
        cg = class_graph(CyclicLattice(cyclic(m)), "diff")
        if cat.is_pq(m):
            if not cg.is_edgeless():
                sw.fail(f"Z({m})", "expected an empty difference graph")
            return
        d = weighted_diameter(cg)
        if d == INF or cg.is_edgeless():
            sw.fail(f"Z({m})", "difference graph disconnected or empty")
        elif d > 6:
            sw.fail(f"Z({m})", f"diameter {d} > 6")
        elif d > worst[0]:
            worst = (int(d), m)

    for m in range(2, bound + 1):
        if _two_or_more_primes(m):
            sw.run(f"Z({m})", lambda m=m: one(m))
    sw.details.update(max_diameter=worst[0], max_diameter_first_at=f"Z({worst[1]})" if worst[1] else None)
    return sw.report()


def check_cxq(max_order: int | None = None) -> VerificationReport:
    sw = _Sweep("t:cxq", "Z(m) x Q(2^n), m in {3,5,15,21}, n in {3,4}")
    diameters = {}

    def one(spec: str):
        cg = class_graph(CyclicLattice(build_group(spec)), "diff")
        d = weighted_diameter(cg)
        diameters[spec] = "inf" if d == INF else int(d)
        if d == INF or cg.is_edgeless():
            sw.fail(spec, "difference graph disconnected or empty")
        elif d > 3:
            sw.fail(spec, f"diameter {d} > 3")

    for m, n in cat.CXQ_CASES:
        spec = f"Z({m}) x Q({2**n})"
        sw.run(spec, lambda s=spec: one(s))
    sw.details["diameters"] = diameters
    return sw.report()


def check_isol(max_order: int | None = None) -> VerificationReport:
    """Isolated-vertex sets.

    For cyclic ``Z_m`` (``m`` not ``pq``) the stated set, generators plus the
    identity, leaves out the prime-order elements, which are always isolated.
    That mismatch is reported as a discrepancy; the corrected set (generators,
    identity and prime-order elements) must match exactly or the claim fails.
    """
    bound = max_order or cat.DEFAULT_NAMED_MAX
    sw = _Sweep("t:isol", f"Z(m), m <= {bound} with at least two primes; non-cyclic catalog groups of order <= {bound} with two primes in the centre")

    def cyclic_case(m: int):
        lat = CyclicLattice(cyclic(m))
        iso = _isolated_elements(lat)
        if cat.is_pq(m):
            if iso != set(range(m)):
                sw.fail(f"Z({m})", "Z_pq: not every element isolated")
            return
        stated = {0} | {k for k in range(1, m) if gcd(k, m) == 1}
        prime_order = {k for k in range(1, m) if is_prime(m // gcd(k, m))}
        if iso != stated | prime_order:
            sw.fail(f"Z({m})", f"isolated {_fmt_set(iso)} != generators, identity and prime-order elements")
        elif iso != stated:
            sw.discrepancy(f"Z({m})", f"isolated set also contains prime-order elements {_fmt_set(iso - stated)}")

    def other_case(e: cat.CatalogEntry):
        G = e.build()
        if not _center_two_primes(G):
            return
        lat = CyclicLattice(G)
        iso = _isolated_elements(lat)
        expected = {x for c in lat.classes if c.subgroup_order == 1 or is_prime(c.subgroup_order) for x in c.members}
        if iso != expected:
            sw.fail(e.spec, f"isolated {_fmt_set(iso)} != identity and prime-order elements")

    for m in range(2, bound + 1):
        if _two_or_more_primes(m):
            sw.run(f"Z({m})", lambda m=m: cyclic_case(m))
    for e in cat.full_catalog(bound, bound):
        if not e.cyclic and e.order <= bound:
            sw.run(e.spec, lambda e=e: other_case(e))
    return sw.report()


def check_twoprimes(max_order: int | None = None) -> VerificationReport:
    bound = max_order or cat.DEFAULT_NAMED_MAX
    sw = _Sweep("t:twoprimes", f"Z(m), m <= {bound}, at least two primes")

    def one(m: int):
        null = not any(_diff_rows(CyclicLattice(cyclic(m))))
        if null != cat.is_pq(m):
            sw.fail(f"Z({m})", f"null={null} but m is {'' if cat.is_pq(m) else 'not '}pq")

    for m in range(2, bound + 1):
        if _two_or_more_primes(m):
            sw.run(f"Z({m})", lambda m=m: one(m))
    return sw.report()


def empty_oracle(lat: CyclicLattice) -> bool:
    """Cyclic, or not generalized quaternion with pairwise trivially meeting
    maximal cyclic subgroups."""
    G = lat.group
    maximal = lat.maximal_classes()
    if len(maximal) == 1:
        return True
    order = G.order
    gen_quaternion = (
        order >= 8 and order & (order - 1) == 0 and G.unique_involution() is not None
    )
    if gen_quaternion:
        return False
    return not any(lat.meets_nontrivially(a.class_id, b.class_id) for a, b in combinations(maximal, 2))


def check_empty(max_order: int | None = None) -> VerificationReport:
    """p-groups: emptiness of the difference graph against the reconciled oracle.

    The literal statement (a union of at least three proper cyclic subgroups
    suffices) would make every non-cyclic p-group's graph empty; groups where
    that fails are recorded as discrepancies.
    """
    bound = max_order or cat.DEFAULT_PGROUP_MAX
    entries = cat.abelian_p_groups(bound) + cat.quaternion_groups(min(64, bound))
    sw = _Sweep("t:empty", f"abelian p-groups of order <= {bound}, Q(8..64)")
    literal_misses = []

    def one(e: cat.CatalogEntry):
        lat = CyclicLattice(e.build())
        null = not any(_diff_rows(lat))
        if null != empty_oracle(lat):
            sw.fail(e.spec, f"null={null}, oracle={empty_oracle(lat)}")
        if not null:
            literal_misses.append(e.spec)

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    # Z(4) x Z(2) must be non-null
    lat = CyclicLattice(build_group("Z(4) x Z(2)"))
    if not any(_diff_rows(lat)):
        sw.fail("Z(4) x Z(2)", "difference graph unexpectedly null")
    for spec in ("Q(8)", "Z(2) x Z(4)"):
        if spec in literal_misses:
            sw.discrepancy(spec, "union of >= 3 proper cyclic subgroups, yet the difference graph has edges")
    sw.details.update(
        reconciled_oracle="cyclic, or not generalized quaternion and maximal cyclic subgroups meet trivially",
        literal_reading_counterexamples=literal_misses,
    )
    return sw.report()


def check_gq_isol(max_order: int | None = None) -> VerificationReport:
    entries = cat.quaternion_groups(min(max_order or 64, 1024))
    sw = _Sweep("t:gq-isol", "Q(8..64)")

    def one(e: cat.CatalogEntry):
        G = e.build()
        iso = _isolated_elements(CyclicLattice(G))
        expected = {0, G.unique_involution()}
        if iso != expected:
            sw.fail(e.spec, f"isolated {_fmt_set(iso)} != {_fmt_set(expected)}")

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    return sw.report()


def _rep_of_order(m: int, d: int) -> int:
    return (m // d) % m


def _orders_hole(m: int, orders: tuple[int, ...]) -> list[int]:
    return [_rep_of_order(m, d) for d in orders]


def nilpotent_hole_witnesses() -> dict[str, tuple[FiniteGroup, list[int]]]:
    """Explicit induced 5-cycles built from element orders."""
    out = {}
    for m, orders in ((60, (4, 6, 15, 12, 30)), (210, (6, 10, 35, 30, 70))):
        out[f"Z({m})"] = (cyclic(m), _orders_hole(m, orders))
    G = build_group("Z(2) x Z(2) x Z(15)")

    def el(x1, x2, x3):
        return (x1 * 2 + x2) * 15 + x3

    a1, a2, a3 = el(1, 0, 0), el(0, 1, 0), el(1, 1, 0)
    b, c = el(0, 0, 5), el(0, 0, 3)
    mul = G.multiply
    out["Z(2) x Z(2) x Z(15)"] = (G, [mul(a1, b), mul(a2, b), mul(mul(a1, b), c), mul(a3, c), mul(a1, c)])
    return out


def check_nilp(max_order: int | None = None) -> VerificationReport:
    bound = max_order or cat.DEFAULT_ABELIAN_MAX
    sw = _Sweep("t:nilp", f"Z(30), Z(60), Z(210), Z(2) x Z(2) x Z(15); abelian groups of order <= {bound} with >= 3 primes")

    def expect_perfect(name: str, G: FiniteGroup, want: bool):
        res = is_perfect(difference_graph(CyclicLattice(G)))
        if res.status is Perfection.UNKNOWN:
            raise BudgetExceeded(res.reason)
        if (res.status is Perfection.PERFECT) != want:
            sw.fail(name, f"expected {'perfect' if want else 'imperfect'}, got {res.status.value}")

    sw.run("Z(30)", lambda: expect_perfect("Z(30)", cyclic(30), True))
    for name, (G, hole) in nilpotent_hole_witnesses().items():
        def one(name=name, G=G, hole=hole):
            g = difference_graph_undeleted(CyclicLattice(G))
            if not is_induced_cycle(g, hole):
                sw.fail(name, f"elements {hole} (orders {[G.element_order(x) for x in hole]}) are not an induced 5-cycle")
            expect_perfect(name, G, False)
        sw.run(name, one)
    swept = 0
    for e in cat.abelian_groups(bound):
        if len(prime_factors(e.order)) >= 3:
            swept += 1
            want = e.cyclic and all(x == 1 for _, x in factorize(e.order)) and len(factorize(e.order)) == 3
            sw.run(e.spec, lambda e=e, want=want: expect_perfect(e.spec, e.build(), want))
    sw.details["abelian_swept"] = swept
    return sw.report()


def check_bip(max_order: int | None = None) -> VerificationReport:
    bound = max_order or cat.DEFAULT_ABELIAN_MAX
    sw = _Sweep("t:bip", f"abelian groups of order <= {bound} with >= 2 primes")

    def one(e: cat.CatalogEntry):
        cg = class_graph(CyclicLattice(e.build()), "diff")
        bip = two_coloring(cg) is not None
        want = e.cyclic and cat.is_pa_q(e.order)
        if bip != want:
            sw.fail(e.spec, f"bipartite={bip}, expected {want}")

    for e in cat.abelian_groups(bound):
        if "center-two-primes" in e.tags:
            sw.run(e.spec, lambda e=e: one(e))
    return sw.report()


def check_euler(max_order: int | None = None) -> VerificationReport:
    """Degree parity only; global connectivity is recorded, not asserted."""
    entries = cat.full_catalog(max_order or cat.DEFAULT_ABELIAN_MAX, min(max_order or cat.DEFAULT_NAMED_MAX, cat.DEFAULT_NAMED_MAX))
    sw = _Sweep("t:euler", f"full catalog ({len(entries)} groups), degree parity")
    not_connected = []

    def one(e: cat.CatalogEntry):
        lat = CyclicLattice(e.build())
        odd = [c.representative for c, d in zip(lat.classes, class_degrees(lat)) if d % 2]
        if odd:
            sw.fail(e.spec, f"odd degree at {_fmt_set(odd)}")
        cg = class_graph(lat, "diff")
        if weighted_diameter(cg) == INF:
            not_connected.append(e.spec)

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    sw.details["edge_part_disconnected"] = not_connected
    return sw.report()


def univ_test_graphs(random_count: int = 50, seed: int = 2024) -> list[tuple[str, Graph]]:
    """Every graph on 1..5 vertices from the atlas plus seeded random 6-vertex graphs."""
    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        if 1 <= h.number_of_nodes() <= 5:
            out.append((f"atlas[{i}]", Graph.from_edges(h.number_of_nodes(), h.edges())))
    rng = random.Random(seed)
    pairs = list(combinations(range(6), 2))
    for k in range(random_count):
        edges = [p for p in pairs if rng.random() < 0.5]
        out.append((f"random6[{k}]", Graph.from_edges(6, edges)))
    return out


def check_univ(max_order: int | None = None) -> VerificationReport:
    graphs = univ_test_graphs()
    sw = _Sweep("t:univ", f"{len(graphs)} graphs: all on 1..5 vertices, 50 random on 6")

    def one(name: str, g: Graph):
        emb = embed_in_cyclic(g)
        if not emb.verified:
            sw.fail(name, f"embedding does not reproduce adjacency (divisors {[d.value for d in emb.divisors]})")

    for name, g in graphs:
        sw.run(name, lambda n=name, g=g: one(n, g))
    sw.details["five_vertex_graphs"] = sum(1 for _, g in graphs if g.n == 5)
    return sw.report()


_SUBSET_LIMIT = 20_000
_SUBSET_SAMPLE = 2_000


def _subsets(items: list, max_size: int, rng: random.Random):
    from math import comb
    total = sum(comb(len(items), k) for k in range(1, max_size + 1))
    if total <= _SUBSET_LIMIT:
        for k in range(1, max_size + 1):
            yield from combinations(items, k)
    else:
        for _ in range(_SUBSET_SAMPLE):
            k = rng.randint(1, max_size)
            yield tuple(sorted(rng.sample(items, k)))


def _order_pair_table(g: Graph, by_order: dict[int, int]) -> dict[tuple[int, int], bool]:
    """``(d1, d2) -> all elements of order d1 joined to all of order d2`` (same
    order: pairwise among distinct elements)."""
    out = {}
    for d1, m1 in by_order.items():
        for d2, m2 in by_order.items():
            ok = True
            for x in iter_bits(m1):
                target = m2 & ~(1 << x)
                if g.rows[x] & target != target:
                    ok = False
                    break
            out[d1, d2] = ok
    return out


def check_sec6(max_order: int | None = None) -> VerificationReport:
    """Clique families of cyclic groups against element-level graphs.

    Chains and intersecting families give cliques of the power and
    intersection power graphs; one representative per member of an
    intersecting Sperner family gives a clique of the difference graph; and
    the exact clique number of the difference graph equals the largest such
    family. The weighted count is reported alongside.
    """
    bound = max_order or 300
    sym_bound = max(bound, 1000) if max_order is None else bound
    sw = _Sweep("sec6-cliques", f"Z(n), n <= {bound} (families), n <= {sym_bound} (adjacency), omega for n in 30, 60, 210, 2310")
    rng = random.Random(6)

    def families(n: int):
        lat = CyclicLattice(cyclic(n))
        divs = all_divisors(n)
        by_order = {d.value: bits_to_mask(k for k in range(n) if n // gcd(k, n) == d.value) for d in divs}
        pg = _order_pair_table(power_graph(lat), by_order)
        ig = _order_pair_table(intersection_power_graph(lat), by_order)
        dg = difference_graph_undeleted(lat)
        reps = {d.value: _rep_of_order(n, d.value) for d in divs}
        for S in _subsets(divs, 5, rng):
            flags = classify_family(S)
            vals = [d.value for d in S]
            p_clique = all(pg[a, b] for a in vals for b in vals)
            i_clique = all(ig[a, b] for a in vals for b in vals)
            d_clique = all(dg.adjacent(reps[a], reps[b]) for a, b in combinations(vals, 2))
            if p_clique != flags.is_chain:
                sw.fail(f"Z({n})", f"S={vals}: power clique {p_clique}, chain {flags.is_chain}")
                return
            # the identity's class is adjacent to everything in the intersection power graph
            inter = classify_family([d for d in S if d.value != 1]).is_intersecting
            if i_clique != inter:
                sw.fail(f"Z({n})", f"S={vals}: ipg clique {i_clique}, intersecting {flags.is_intersecting}")
                return
            if d_clique != (flags.is_intersecting_sperner or len(S) == 1):
                sw.fail(f"Z({n})", f"S={vals}: diff clique {d_clique}, intersecting Sperner {flags.is_intersecting_sperner}")
                return

    def adjacency(n: int):
        lat = CyclicLattice(cyclic(n))
        rows, _ = class_adjacency(lat, "diff_undeleted")
        dg = difference_graph_undeleted(lat)
        divs = {d.value: d for d in all_divisors(n)}
        for a, b in combinations(lat.classes, 2):
            x, y = a.representative, b.representative
            want = symbolic_diff_adjacent(divs[a.subgroup_order], divs[b.subgroup_order])
            if dg.adjacent(x, y) != want or bool(rows[a.class_id] >> b.class_id & 1) != want:
                sw.fail(f"Z({n})", f"orders {a.subgroup_order}, {b.subgroup_order}: symbolic {want}")
                return

    for n in range(1, bound + 1):
        sw.run(f"Z({n})", lambda n=n: families(n))
    for n in range(1, sym_bound + 1):
        sw.run(f"Z({n})", lambda n=n: adjacency(n))

    omega = {}
    for n in (30, 60, 210, 2310):
        def one(n=n):
            exact = clique_number(difference_graph(CyclicLattice(cyclic(n))))
            card, weight = omega_via_divisors(n, "diff")
            omega[n] = {"exact": exact, "cardinality": card.value, "cardinality_witness": card.witness,
                        "weighted": weight.value, "weighted_witness": weight.witness}
            if exact != card.value:
                sw.fail(f"Z({n})", f"exact omega {exact} != family optimum {card.value}")
            if exact != weight.value:
                sw.discrepancy(f"Z({n})", f"weighted objective gives {weight.value}, exact omega is {exact}")
        sw.run(f"Z({n})", one)
    for n in (8, 12, 30, 36, 60):
        def small(n=n):
            lat = CyclicLattice(cyclic(n))
            for kind, g in (("power", power_graph(lat)), ("ipg", intersection_power_graph(lat))):
                exact = clique_number(g)
                via = omega_via_divisors(n, kind)[0].value
                if exact != via:
                    sw.fail(f"Z({n})", f"{kind}: exact omega {exact} != divisor optimum {via}")
        sw.run(f"Z({n})", small)
    sw.details["omega"] = {str(k): v for k, v in omega.items()}
    return sw.report()


def check_psl2(max_order: int | None = None) -> VerificationReport:
    qs = [q for q in DEFAULT_SCAN if max_order is None or q <= max_order]
    sw = _Sweep("psl2", f"PSL(2,q), q in {qs}")
    rows = []

    def one():
        rows.extend(psl2_nullness_scan(qs))

    sw.run("scan", one)
    for r in rows:
        if not r.agree:
            sw.fail(f"PSL(2,{r.q})", f"predicate {r.predicate}, computed null {r.computed_null}")
    sw.details["scan"] = [{"q": r.q, "predicate": r.predicate, "null": r.computed_null, "edges": r.edges} for r in rows]
    check = sl34_quaternion_check()
    if not check:
        sw.fail("SL(3,4)", "; ".join(check.failures))
    sw.details["sl34_quaternion"] = {"order": check.group_order, "involutions": check.involutions,
                                     "order_four": check.order_four}
    return sw.report()


def check_dihedral(max_order: int | None = None) -> VerificationReport:
    bound = max_order or 100
    sw = _Sweep("dihedral", f"D(2n) vs Z(n), 3 <= n <= {bound}")
    for n in range(3, bound + 1):
        def one(n=n):
            if not dihedral_reduction_check(n):
                sw.fail(f"D({2 * n})", "difference graph differs from that of Z(n)")
        sw.run(f"D({2 * n})", one)
    return sw.report()


def check_sec9(max_order: int | None = None) -> VerificationReport:
    """Groups with one involution: even-order elements are pairwise joined in
    the intersection power graph, they make up at least half the group, and
    each odd-order ``g`` is joined to ``gz`` in the power graph."""
    entries = [e for e in cat.full_catalog(max_order or cat.DEFAULT_ABELIAN_MAX, cat.DEFAULT_NAMED_MAX)
               if "unique-involution" in e.tags]
    sw = _Sweep("sec9-clique", f"{len(entries)} catalog groups with a unique involution")

    def one(e: cat.CatalogEntry):
        G = e.build()
        lat = CyclicLattice(G)
        if not even_order_clique_check(lat):
            sw.fail(e.spec, "even-order elements not pairwise joined")
        z = G.unique_involution()
        orders = G.orders
        even = int((orders % 2 == 0).sum())
        if 2 * even < G.order:
            sw.fail(e.spec, f"only {even} of {G.order} elements have even order")
        prows, _ = class_adjacency(lat, "power")
        for c in lat.classes:
            if c.subgroup_order % 2:
                g = c.representative
                gz = lat.class_of[G.multiply(g, z)]
                if not prows[c.class_id] >> int(gz) & 1:
                    sw.fail(e.spec, f"{G.label(g)} not joined to g*z in the power graph")
                    return

    for e in entries:
        sw.run(e.spec, lambda e=e: one(e))
    try:
        even_order_clique_check(build_group("Z(2) x Z(2)"))
        sw.fail("Z(2) x Z(2)", "precondition not enforced")
    except PreconditionFailed:
        pass
    return sw.report()


# ---------------------------------------------------------------------------
# M11


@dataclass
class M11Result:
    vertices_before: int
    nonisolated: int
    reduced: Graph
    part_a: list[int]
    part_b: list[int]
    part_a_independent: bool
    part_a_neighbours_in_b: list[int]
    part_b_degrees: list[int]
    part_b_diameter: float
    part_b_girth: float
    alternatives: dict[str, int]
    twin_rounds: int

    @property
    def targets(self) -> dict[str, tuple]:
        """name -> (observed, expected)."""
        return {
            "reduced_vertices": (self.reduced.n, 825),
            "independent_set_size": (len(self.part_a), 165),
            "independent": (self.part_a_independent, True),
            "neighbours_in_b": (sorted(set(self.part_a_neighbours_in_b)), [4]),
            "part_b_size": (len(self.part_b), 660),
            "part_b_valency": (sorted(set(self.part_b_degrees)), [5]),
            "part_b_diameter": (self.part_b_diameter, 9),
            "part_b_girth": (self.part_b_girth, 3),
        }

    def ok(self) -> bool:
        return all(obs == exp for obs, exp in self.targets.values())


def m11_pipeline(group: FiniteGroup | None = None) -> M11Result:
    """Drop isolated vertices, twin-reduce to a fixpoint, split off the degree-4 vertices."""
    G = group or mathieu11()
    lat = CyclicLattice(G)
    full = difference_graph_undeleted(lat)
    g = without_isolated(full)
    tr = twin_reduce(g)
    R = tr.reduced
    part_a = [v for v in range(R.n) if R.degree(v) == 4]
    a_mask = bits_to_mask(part_a)
    part_b = [v for v in range(R.n) if not a_mask >> v & 1]
    b_mask = bits_to_mask(part_b)
    independent = all(R.rows[v] & a_mask == 0 for v in part_a)
    nbrs_in_b = [(R.rows[v] & b_mask).bit_count() for v in part_a]
    B = induced_subgraph(R, part_b)
    res = analyze(B)
    alternatives = {
        "remove_then_both": R.n,
        "remove_then_open_only": twin_reduce(g, closed_twins=False).reduced.n,
        "remove_then_closed_only": twin_reduce(g, open_twins=False).reduced.n,
        "reduce_then_remove": without_isolated(twin_reduce(full).reduced).n,
    }
    return M11Result(
        vertices_before=full.n,
        nonisolated=g.n,
        reduced=R,
        part_a=part_a,
        part_b=part_b,
        part_a_independent=independent,
        part_a_neighbours_in_b=nbrs_in_b,
        part_b_degrees=B.degrees(),
        part_b_diameter=res.diameter,
        part_b_girth=res.girth,
        alternatives=alternatives,
        twin_rounds=tr.rounds,
    )


def check_m11(max_order: int | None = None, out_dir=None) -> VerificationReport:
    sw = _Sweep("m11", "M11, difference graph, isolated removed, complete twin reduction")
    holder = {}

    def one():
        holder["r"] = m11_pipeline()

    sw.run("M11", one)
    r = holder.get("r")
    if r is not None:
        targets = r.targets
        for name, (obs, exp) in targets.items():
            if obs != exp:
                sw.fail("M11", f"{name}: observed {obs}, expected {exp}")
        sw.details.update(
            {k: (v[0] if not isinstance(v[0], float) else ("inf" if v[0] == INF else int(v[0])))
             for k, v in targets.items()}
        )
        sw.details.update(vertices=r.vertices_before, nonisolated=r.nonisolated,
                          twin_rounds=r.twin_rounds, alternative_pipelines=r.alternatives)
        if out_dir is not None:
            from pathlib import Path
            out = Path(out_dir)
            out.mkdir(parents=True, exist_ok=True)
            r.reduced.kind = "diff-twin-reduced"
            (out / "m11_reduced.json").write_bytes(export(r.reduced, "json"))
            (out / "m11_reduced.dot").write_bytes(export(r.reduced, "dot"))
            sw.details["files"] = [str(out / "m11_reduced.json"), str(out / "m11_reduced.dot")]
    return sw.report()


CLAIMS: dict[str, tuple[Callable[..., VerificationReport], str]] = {
    "p-elts": (check_p_elts, "prime-order elements, the identity and cyclic generators are isolated"),
    "nulld-cograph": (check_nulld_cograph, "null difference graph implies cograph power graph"),
    "t:conn": (check_conn, "connectivity and diameter <= 6 when two primes divide |Z(G)|"),
    "t:isol": (check_isol, "isolated vertices of the difference graph"),
    "t:twoprimes": (check_twoprimes, "D(Z_m) empty iff m = pq"),
    "t:disc": (check_disc, "cyclic groups: connected with diameter <= 6 unless m = pq"),
    "t:cxq": (check_cxq, "Z_m x Q_2^n: diameter <= 3"),
    "t:empty": (check_empty, "p-groups with empty difference graph"),
    "t:gq-isol": (check_gq_isol, "generalized quaternion: isolated set is {e, z}"),
    "t:nilp": (check_nilp, "perfection of difference graphs of nilpotent groups"),
    "t:bip": (check_bip, "bipartite iff Z_{p^a q}"),
    "t:euler": (check_euler, "every degree is even"),
    "t:univ": (check_univ, "every small graph embeds in D(Z_n)"),
    "sec6-cliques": (check_sec6, "cliques of cyclic-group graphs via divisor families"),
    "psl2": (check_psl2, "PSL(2,q) nullness predicate and the SL(3,4) matrix check"),
    "dihedral": (check_dihedral, "D(D_2n) = D(Z_n)"),
    "sec9-clique": (check_sec9, "groups with a unique involution"),
    "m11": (check_m11, "M11 twin-reduced difference graph"),
}


def verify(claim_id: str, max_order: int | None = None, **kw) -> VerificationReport:
    if claim_id not in CLAIMS:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    return CLAIMS[claim_id][0](max_order, **kw)
