"""Graph measurements: components, distances, girth, cographs, holes, cliques, twins.

Everything here takes a :class:`~ggraph.graphs.Graph` and works directly on
its bitset rows.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from enum import Enum

from .errors import BudgetExceeded, PreconditionFailed
from .graphs import Graph, as_lattice, class_adjacency, complement, induced_subgraph
from .groups import GroupElement
from .lattice import CyclicLattice, bits_to_mask, iter_bits

INF = math.inf
DEFAULT_HOLE_BUDGET = 10**8
DEFAULT_CLIQUE_BUDGET = 10**7
COGRAPH_VERTEX_CAP = 3000
CLIQUE_VERTEX_CAP = 2000


def budget_from_env(default: int) -> int:
    value = os.environ.get("GGRAPH_BUDGET")
    return int(value) if value else default


# ---------------------------------------------------------------------------
# BFS-based measurements


def bfs_layers(g: Graph, source: int, within: int | None = None) -> list[int]:
    """Distance layers from ``source`` as bitsets."""
    rows = g.rows
    allowed = within if within is not None else (1 << g.n) - 1
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def components(g: Graph) -> list[list[int]]:
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        mask = 0
        for layer in bfs_layers(g, v):
            mask |= layer
        comps.append(list(iter_bits(mask)))
        remaining &= ~mask
    return comps


def eccentricity(g: Graph, v: int) -> int:
    return len(bfs_layers(g, v)) - 1


def distance(g: Graph, u: int, v: int) -> float:
    for d, layer in enumerate(bfs_layers(g, u)):
        if layer >> v & 1:
            return d
    return INF


def girth(g: Graph) -> float:
    """Length of a shortest cycle (exact: a BFS from every vertex)."""
    best = INF
    rows = g.rows
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        d = 0
        while frontier and 2 * d + 1 < best:
            nxt = []
            for u in frontier:
                for w in iter_bits(rows[u]):
                    if w == parent[u]:
                        continue
                    if w in dist:
                        best = min(best, dist[u] + dist[w] + 1)
                    else:
                        dist[w] = d + 1
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
            d += 1
    return best


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    rows = g.rows
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in iter_bits(rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


@dataclass
class AnalysisResult:
    components: list[list[int]]
    diameter: float
    component_diameters: list[float]
    girth: float
    bipartite: bool
    coloring: list[int] | None
    all_degrees_even: bool
    eulerian_per_component: bool
    eulerian: bool

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def summary(self) -> dict:
        def fmt(x):
            return "inf" if x == INF else int(x)

        return {
            "components": len(self.components),
            "component_sizes": sorted((len(c) for c in self.components), reverse=True),
            "diameter": fmt(self.diameter),
            "component_diameters": [fmt(d) for d in self.component_diameters],
            "girth": fmt(self.girth),
            "bipartite": self.bipartite,
            "all_degrees_even": self.all_degrees_even,
            "eulerian_per_component": self.eulerian_per_component,
            "eulerian": self.eulerian,
        }


def analyze(g: Graph) -> AnalysisResult:
    comps = components(g)
    comp_diams = []
    for comp in comps:
        mask = bits_to_mask(comp)
        comp_diams.append(max(len(bfs_layers(g, v, mask)) - 1 for v in comp))
    if g.n == 0:
        diameter = 0
    elif len(comps) == 1:
        diameter = comp_diams[0]
    else:
        diameter = INF
    coloring = two_coloring(g)
    even = all(r.bit_count() % 2 == 0 for r in g.rows)
    edge_comps = [c for c in comps if len(c) > 1]
    return AnalysisResult(
        components=comps,
        diameter=diameter,
        component_diameters=comp_diams,
        girth=girth(g),
        bipartite=coloring is not None,
        coloring=coloring,
        all_degrees_even=even,
        eulerian_per_component=even,
        eulerian=even and len(edge_comps) <= 1,
    )


def weighted_diameter(g: Graph) -> float:
    """Diameter of the graph obtained by blowing each vertex ``v`` of a
    class-level difference graph up into ``weights[v]`` pairwise non-adjacent
    copies, after dropping isolated vertices.

    Copies of one vertex sit at distance 2 from each other (they share all
    neighbours), so the blow-up's diameter is the quotient's diameter, raised
    to 2 if some non-isolated vertex has weight at least 2.
    """
    live = [v for v in range(g.n) if g.rows[v]]
    if not live:
        return 0
    sub = induced_subgraph(g, live)
    res = analyze(sub)
    if res.diameter == INF:
        return INF
    weights = sub.weights or [1] * sub.n
    return max(res.diameter, 2 if any(w >= 2 for w in weights) else 0)


# ---------------------------------------------------------------------------
# Cographs


def is_cograph(g: Graph, vertex_cap: int = COGRAPH_VERTEX_CAP) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Return ``(True, None)`` or ``(False, (a, b, c, d))`` with an induced P4 a-b-c-d."""
    if g.n > vertex_cap:
        raise BudgetExceeded(f"cograph scan capped at {vertex_cap} vertices (graph has {g.n})")
    rows = g.rows
    for b in range(g.n):
        for c in iter_bits(rows[b] >> (b + 1)):
            c += b + 1
            ends_b = rows[b] & ~rows[c] & ~(1 << c)
            ends_c = rows[c] & ~rows[b] & ~(1 << b)
            if not ends_b or not ends_c:
                continue
            for a in iter_bits(ends_b):
                far = ends_c & ~rows[a]
                if far:
                    d = (far & -far).bit_length() - 1
                    return False, (a, b, c, d)
    return True, None


# ---------------------------------------------------------------------------
# Twin reduction


@dataclass
class TwinReduction:
    reduced: Graph
    class_map: list[int]
    rounds: int
    survivors: list[int] = field(default_factory=list)


def twin_reduce(g: Graph, open_twins: bool = True, closed_twins: bool = True) -> TwinReduction:
    """Merge open twins, then closed twins, until neither kind remains.

    Each merge keeps the smallest vertex id. ``class_map[v]`` is the reduced
    vertex standing for input vertex ``v``.
    """
    rows = list(g.rows)
    alive = (1 << g.n) - 1
    rounds = 0
    rep = list(range(g.n))
    while True:
        before = alive
        if open_twins:
            alive = _track(rows, alive, rep, closed=False)
        if closed_twins:
            alive = _track(rows, alive, rep, closed=True)
        if alive == before:
            break
        rounds += 1
    survivors = list(iter_bits(alive))
    position = {v: i for i, v in enumerate(survivors)}

    def find(v):
        while rep[v] != v:
            v = rep[v]
        return v

    class_map = [position[find(v)] for v in range(g.n)]
    return TwinReduction(induced_subgraph(g, survivors), class_map, rounds, survivors)


def _track(rows, alive, rep, closed):
    groups: dict[int, int] = {}
    new_alive = alive
    for v in iter_bits(alive):
        key = rows[v] & alive
        if closed:
            key |= 1 << v
        r = groups.setdefault(key, v)
        if r != v:
            rep[v] = r
            new_alive &= ~(1 << v)
    return new_alive


# ---------------------------------------------------------------------------
# Odd holes and perfection


def find_odd_hole(g: Graph, max_len: int | None = None, budget: int | None = None) -> list[int] | None:
    """An induced odd cycle of length >= 5 and <= ``max_len``, or None.

    Exhaustive DFS over induced paths whose first vertex is the smallest on
    the cycle. Raises :class:`BudgetExceeded` when more than ``budget`` path
    extensions are needed.
    """
    n = g.n
    if max_len is None:
        max_len = n if n % 2 else n - 1
    if max_len < 5:
        return None
    if budget is None:
        budget = budget_from_env(DEFAULT_HOLE_BUDGET)
    rows = g.rows
    steps = 0
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        srow = rows[s]
        # (path, interior) where interior = closed neighbourhoods of path[1:-1]
        stack = [([s, p1], 0) for p1 in reversed(list(iter_bits(srow & higher)))]
        while stack:
            path, interior = stack.pop()
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"odd-hole search exceeded {budget} expansions")
            last = path[-1]
            k = len(path)
            grow = []
            for w in iter_bits(rows[last] & higher & ~interior):
                if srow >> w & 1:
                    if k >= 4 and k % 2 == 0:
                        return path + [w]
                    continue
                if k + 2 <= max_len:
                    grow.append(w)
            inner = interior | rows[last] | (1 << last)
            for w in reversed(grow):
                stack.append((path + [w], inner))
    return None


class Perfection(Enum):
    PERFECT = "perfect"
    IMPERFECT = "imperfect"
    UNKNOWN = "unknown"


@dataclass
class PerfectionResult:
    status: Perfection
    witness: list[int] | None = None
    in_complement: bool = False
    reason: str = ""

    def __bool__(self):
        return self.status is Perfection.PERFECT


def is_perfect(g: Graph, budget: int | None = None, reduce: bool = True) -> PerfectionResult:
    """Decide perfection by searching for odd holes and odd antiholes.

    Twin reduction preserves perfection, so the search runs on the reduced
    graph; witnesses are reported as vertices of ``g``.
    """
    if reduce:
        tr = twin_reduce(g)
        h, back = tr.reduced, tr.survivors
    else:
        h, back = g, list(range(g.n))
    try:
        hole = find_odd_hole(h, budget=budget)
        if hole is not None:
            return PerfectionResult(Perfection.IMPERFECT, [back[v] for v in hole])
        antihole = find_odd_hole(complement(h), budget=budget)
        if antihole is not None:
            return PerfectionResult(Perfection.IMPERFECT, [back[v] for v in antihole], in_complement=True)
    except BudgetExceeded as exc:
        return PerfectionResult(Perfection.UNKNOWN, reason=str(exc))
    return PerfectionResult(Perfection.PERFECT)


def is_induced_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if len(set(cycle)) != k or k < 3:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent_in_cycle = j == i + 1 or (i == 0 and j == k - 1)
            if g.adjacent(cycle[i], cycle[j]) != adjacent_in_cycle:
                return False
    return True


# ---------------------------------------------------------------------------
# Maximum clique


@dataclass
class CliqueResult:
    vertices: list[int]
    exact: bool = True

    def __len__(self):
        return len(self.vertices)


def _color_bound(rows: list[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of ``cand``; returns (vertex, colour) in
    increasing colour order."""
    order = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append((v, color))
    return order


def max_clique(g: Graph, budget: int | None = None, vertex_cap: int = CLIQUE_VERTEX_CAP) -> CliqueResult:
    """Exact maximum clique by branch and bound with a colouring bound.

    Raises :class:`BudgetExceeded` with ``partial`` set to the best clique
    found so far (a lower bound) when the node budget runs out.
    """
    if g.n > vertex_cap:
        raise PreconditionFailed(f"max_clique capped at {vertex_cap} vertices (graph has {g.n})")
    if budget is None:
        budget = budget_from_env(DEFAULT_CLIQUE_BUDGET)
    rows = g.rows
    best: list[int] = []
    nodes = 0

    def expand(clique: list[int], cand: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"clique search exceeded {budget} nodes",
                                 partial=CliqueResult(sorted(best), exact=False))
        order = _color_bound(rows, cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            new_clique = clique + [v]
            new_cand = cand & rows[v]
            if new_cand:
                expand(new_clique, new_cand)
            elif len(new_clique) > len(best):
                best = new_clique
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    clique = sorted(best)
    assert all(g.adjacent(u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
    return CliqueResult(clique)


def clique_number(g: Graph, **kw) -> int:
    """Clique number after open-twin reduction (which cannot change it)."""
    reduced = twin_reduce(g, closed_twins=False).reduced
    return len(max_clique(reduced, **kw))


# ---------------------------------------------------------------------------
# Group-level questions answered on the generator-class quotient


def class_degrees(lattice: CyclicLattice, kind: str = "diff_undeleted") -> list[int]:
    """Degree of any element of each class in the element-level graph."""
    rows, internal = class_adjacency(lattice, kind)
    sizes = [len(c.members) for c in lattice.classes]
    out = []
    for c, row in enumerate(rows):
        deg = sum(sizes[b] for b in iter_bits(row))
        out.append(deg + (sizes[c] - 1 if internal else 0))
    return out


def isolated_vertices_of_difference(group) -> frozenset[GroupElement]:
    lattice = as_lattice(group)
    rows, _ = class_adjacency(lattice, "diff_undeleted")
    G = lattice.group
    return frozenset(
        G.element(x) for c in lattice.classes if not rows[c.class_id] for x in c.members
    )


def even_order_clique_check(group) -> bool:
    """Whether the elements of even order are pairwise joined in the
    intersection power graph. Needs a unique involution."""
    lattice = as_lattice(group)
    G = lattice.group
    z = G.unique_involution()
    if z is None:
        raise PreconditionFailed(f"{G.name} does not have a unique involution")
    rows, _ = class_adjacency(lattice, "ipg")
    even = bits_to_mask(c.class_id for c in lattice.classes if c.subgroup_order % 2 == 0)
    return all((rows[c] | 1 << c) & even == even for c in iter_bits(even))
