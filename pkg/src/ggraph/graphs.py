"""Undirected simple graphs on bitset rows, and the graphs of a group.

All four group graphs are first computed between generator classes and then
expanded to elements: two generator classes are either fully joined or fully
disjoint, so nothing is lost.
"""
from __future__ import annotations

import io
import json
from typing import Iterable, Sequence

from .errors import OrderLimitExceeded, SchemaError
from .lattice import CyclicLattice, bits_to_mask, iter_bits

GRAPH_KINDS = ("power", "ipg", "epg", "diff", "diff_undeleted")
EXPORT_FORMATS = ("dot", "json", "edge-csv")
DEFAULT_VERTEX_CAP = 20_000


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``u ~ v``. ``labels``,
    ``orders`` and ``origin`` carry vertex provenance (display label, element
    order, group-element index or class id). ``weights`` is set on class-level
    graphs and records how many elements each vertex stands for.
    """

    __slots__ = ("rows", "labels", "orders", "origin", "weights", "name", "kind")

    def __init__(self, rows: Sequence[int], labels: Sequence[str] | None = None,
                 orders: Sequence[int] | None = None, origin: Sequence[int] | None = None,
                 weights: Sequence[int] | None = None, name: str = "", kind: str = ""):
        self.rows = tuple(rows)
        n = len(self.rows)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.orders = tuple(orders) if orders is not None else (None,) * n
        self.origin = tuple(origin) if origin is not None else tuple(range(n))
        self.weights = tuple(weights) if weights is not None else None
        self.name = name
        self.kind = kind

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kw) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, **kw)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls([full ^ (1 << i) for i in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls([0] * n)

    def __len__(self):
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"<Graph {self.name or ''} {self.kind or ''} n={self.n} m={self.edge_count()}>"

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, r in enumerate(self.rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_edgeless(self) -> bool:
        return not any(self.rows)

    def isolated(self) -> list[int]:
        return [v for v, r in enumerate(self.rows) if not r]

    def check(self) -> None:
        for u, r in enumerate(self.rows):
            assert not r >> u & 1, f"self-loop at {u}"
            assert r >> self.n == 0, f"row {u} out of range"
            for v in iter_bits(r):
                assert self.rows[v] >> u & 1, f"asymmetric edge {u}-{v}"

    def relabeled(self, **kw) -> "Graph":
        fields = dict(labels=self.labels, orders=self.orders, origin=self.origin,
                      weights=self.weights, name=self.name, kind=self.kind)
        fields.update(kw)
        return Graph(self.rows, **fields)

    def to_networkx(self):
        import networkx as nx

        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = sorted(set(keep))
    position = {v: i for i, v in enumerate(keep)}
    keep_mask = bits_to_mask(keep)
    rows = []
    for v in keep:
        r = 0
        for u in iter_bits(g.rows[v] & keep_mask):
            r |= 1 << position[u]
        rows.append(r)
    return Graph(
        rows,
        labels=[g.labels[v] for v in keep],
        orders=[g.orders[v] for v in keep],
        origin=[g.origin[v] for v in keep],
        weights=[g.weights[v] for v in keep] if g.weights is not None else None,
        name=g.name,
        kind=g.kind,
    )


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = [full ^ r ^ (1 << i) for i, r in enumerate(g.rows)]
    return Graph(rows, labels=g.labels, orders=g.orders, origin=g.origin, weights=g.weights,
                 name=g.name, kind=f"complement({g.kind})" if g.kind else "complement")


def without_isolated(g: Graph) -> Graph:
    return induced_subgraph(g, [v for v, r in enumerate(g.rows) if r])


# ---------------------------------------------------------------------------
# Graphs of a group


def class_adjacency(lattice: CyclicLattice, kind: str) -> tuple[list[int], bool]:
    """Class-level adjacency rows and whether members of one class are adjacent.

    ``kind`` is one of power, ipg, epg, diff.
    """
    k = len(lattice)
    full = (1 << k) - 1
    if kind == "power":
        rows = [(lattice.below[a] | lattice.above[a]) & ~(1 << a) for a in range(k)]
        return rows, True
    if kind == "ipg":
        rows = [full & ~1]
        for a in range(1, k):
            rows.append((lattice.meets_mask(a) | 1) & ~(1 << a))
        return rows, True
    if kind == "epg":
        maximal = [c.class_id for c in lattice.maximal_classes()]
        rows = []
        for a in range(k):
            r = 0
            for c in maximal:
                if lattice.below[c] >> a & 1:
                    r |= lattice.below[c]
            rows.append(r & ~(1 << a))
        return rows, True
    if kind in ("diff", "diff_undeleted"):
        ipg, _ = class_adjacency(lattice, "ipg")
        power, _ = class_adjacency(lattice, "power")
        return [i & ~p for i, p in zip(ipg, power)], False
    raise ValueError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")


def as_lattice(source) -> CyclicLattice:
    """Accept either a group or its already-computed lattice."""
    return source if isinstance(source, CyclicLattice) else CyclicLattice(source)


def class_graph(lattice: CyclicLattice, kind: str) -> Graph:
    """Quotient graph on generator classes, weighted by class size.

    The element-level graph is recovered by replacing each class with a clique
    (power, ipg, epg) or an independent set (difference graphs) of its size.
    """
    lattice = as_lattice(lattice)
    rows, _ = class_adjacency(lattice, kind)
    G = lattice.group
    return Graph(
        rows,
        labels=[G.label(c.representative) for c in lattice.classes],
        orders=[c.subgroup_order for c in lattice.classes],
        origin=[c.class_id for c in lattice.classes],
        weights=[len(c.members) for c in lattice.classes],
        name=G.name,
        kind=f"class-{kind}",
    )


def element_graph(lattice: CyclicLattice, kind: str, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    lattice = as_lattice(lattice)
    G = lattice.group
    if G.order > vertex_cap:
        raise OrderLimitExceeded(f"{G.name}: {G.order} vertices exceeds the element-graph cap {vertex_cap}")
    crow, internal = class_adjacency(lattice, "diff" if kind == "diff_undeleted" else kind)
    emask = lattice.element_masks
    rows = [0] * G.order
    for c in lattice.classes:
        base = 0
        for b in iter_bits(crow[c.class_id]):
            base |= emask[b]
        own = emask[c.class_id] if internal else 0
        for x in c.members:
            rows[x] = base | (own & ~(1 << x))
    orders = G.orders
    return Graph(
        rows,
        labels=[G.label(x) for x in range(G.order)],
        orders=[int(o) for o in orders],
        origin=range(G.order),
        name=G.name,
        kind=kind,
    )


def power_graph(lattice: CyclicLattice, **kw) -> Graph:
    return element_graph(lattice, "power", **kw)


def intersection_power_graph(lattice: CyclicLattice, **kw) -> Graph:
    return element_graph(lattice, "ipg", **kw)


def enhanced_power_graph(lattice: CyclicLattice, **kw) -> Graph:
    return element_graph(lattice, "epg", **kw)


def difference_graph_undeleted(lattice: CyclicLattice, **kw) -> Graph:
    return element_graph(lattice, "diff_undeleted", **kw)


def difference_graph(lattice: CyclicLattice, **kw) -> Graph:
    g = without_isolated(difference_graph_undeleted(lattice, **kw))
    g.kind = "diff"
    return g


def build_graph(lattice: CyclicLattice, kind: str, **kw) -> Graph:
    if kind == "diff":
        return difference_graph(lattice, **kw)
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")
    return element_graph(lattice, kind, **kw)


# ---------------------------------------------------------------------------
# Serialization


def to_json_dict(g: Graph) -> dict:
    return {
        "group": g.name,
        "kind": g.kind,
        "n": g.n,
        "vertices": [
            {"id": v, "label": g.labels[v], "order": g.orders[v]} for v in range(g.n)
        ],
        "edges": [[u, v] for u, v in g.edges()],
    }


def from_json_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        vertices = data["vertices"] if "vertices" in data else [{"id": i} for i in range(n)]
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed graph JSON: {exc}") from exc
    if len(vertices) != n:
        raise SchemaError(f"'n' is {n} but {len(vertices)} vertices are listed")
    ids = []
    for v in vertices:
        if not isinstance(v, dict) or not 0 <= int(v.get("id", -1)) < n:
            raise SchemaError(f"vertex id out of range: {v!r}")
        ids.append(int(v["id"]))
    if len(set(ids)) != n:
        raise SchemaError("duplicate vertex ids")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise SchemaError(f"bad edge {[u, v]}")
    by_id = {int(v["id"]): v for v in vertices}
    return Graph.from_edges(
        n, edges,
        labels=[str(by_id[i].get("label", i)) for i in range(n)],
        orders=[by_id[i].get("order") for i in range(n)],
        name=str(data.get("group", "")),
        kind=str(data.get("kind", "")),
    )


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(g: Graph, fmt: str) -> bytes:
    """Serialize deterministically as ``dot``, ``json`` or ``edge-csv``."""
    if fmt == "json":
        return (json.dumps(to_json_dict(g), indent=1) + "\n").encode()
    if fmt == "edge-csv":
        buf = io.StringIO()
        buf.write("u,v\n")
        for u, v in g.edges():
            buf.write(f"{u},{v}\n")
        return buf.getvalue().encode()
    if fmt == "dot":
        title = f"{g.name} {g.kind}".strip() or "G"
        lines = [f"graph {_dot_quote(title)} {{"]
        for v in range(g.n):
            text = g.labels[v] if g.orders[v] is None else f"{g.labels[v]} [o={g.orders[v]}]"
            lines.append(f"  {v} [label={_dot_quote(text)}];")
        for u, v in g.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
