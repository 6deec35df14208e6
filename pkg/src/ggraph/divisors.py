"""Cliques of cyclic-group graphs through the divisor lattice.

In ``Z_n`` adjacency in all three graphs depends only on element orders, so
cliques correspond to families of divisors of ``n``. Divisors are carried as
exponent vectors over a fixed prime list; the integer value is never needed
for adjacency.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .analysis import budget_from_env
from .errors import BudgetExceeded, GroundSetTooLarge, InvalidParameter, TooManyDivisors
from .graphs import Graph
from .lattice import iter_bits
from .numtheory import factorize, first_primes

MAX_N = 10**12
MAX_DISTINCT_PRIMES = 12
MAX_DIVISORS = 4096
MAX_GROUND_SET = 64
DEFAULT_FAMILY_BUDGET = 10**7


@dataclass(frozen=True, order=True)
class Divisor:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    @classmethod
    def of(cls, d: int, n: int) -> "Divisor":
        if n % d:
            raise InvalidParameter(f"{d} does not divide {n}")
        primes = tuple(p for p, _ in factorize(n))
        exps = []
        for p in primes:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            exps.append(e)
        return cls(primes, tuple(exps))

    @property
    def value(self) -> int:
        return prod(p**e for p, e in zip(self.primes, self.exponents))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(p for p, e in zip(self.primes, self.exponents) if e)

    def phi(self) -> int:
        return prod(p ** (e - 1) * (p - 1) for p, e in zip(self.primes, self.exponents) if e)

    def divides(self, other: "Divisor") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def shares_prime(self, other: "Divisor") -> bool:
        return any(a and b for a, b in zip(self.exponents, other.exponents))

    def __str__(self):
        return str(self.value)


def all_divisors(n: int) -> list[Divisor]:
    if not 1 <= n <= MAX_N:
        raise TooManyDivisors(f"n={n} outside 1..{MAX_N}")
    f = factorize(n)
    if len(f) > MAX_DISTINCT_PRIMES:
        raise TooManyDivisors(f"n={n} has {len(f)} distinct primes (max {MAX_DISTINCT_PRIMES})")
    count = prod(e + 1 for _, e in f)
    if count > MAX_DIVISORS:
        raise TooManyDivisors(f"n={n} has {count} divisors (max {MAX_DIVISORS})")
    primes = tuple(p for p, _ in f)
    vecs = [()]
    for _, e in f:
        vecs = [v + (k,) for v in vecs for k in range(e + 1)]
    return sorted((Divisor(primes, v) for v in vecs), key=lambda d: d.value)


def symbolic_diff_adjacent(d1: Divisor, d2: Divisor) -> bool:
    """Adjacency in the difference graph of a cyclic group between elements of
    orders ``d1 != d2``: a common prime, and neither divides the other."""
    return d1.shares_prime(d2) and not d1.divides(d2) and not d2.divides(d1)


@dataclass(frozen=True)
class FamilyFlags:
    is_chain: bool
    is_intersecting: bool
    is_sperner: bool

    @property
    def is_intersecting_sperner(self) -> bool:
        return self.is_intersecting and self.is_sperner


def classify_family(members: Iterable[Divisor]) -> FamilyFlags:
    members = list(members)
    chain = intersecting = sperner = True
    for a, b in combinations(members, 2):
        comparable = a.divides(b) or b.divides(a)
        chain &= comparable
        sperner &= not comparable
        intersecting &= a.shares_prime(b)
    return FamilyFlags(chain, intersecting, sperner)


@dataclass(frozen=True)
class DivisorFamily:
    n_factorization: tuple[tuple[int, int], ...]
    members: tuple[Divisor, ...]

    @classmethod
    def of(cls, n: int, values: Iterable[int]) -> "DivisorFamily":
        return cls(factorize(n), tuple(Divisor.of(d, n) for d in sorted(set(values))))

    @property
    def flags(self) -> FamilyFlags:
        return classify_family(self.members)

    @property
    def weight(self) -> int:
        return sum(d.phi() for d in self.members)

    @property
    def values(self) -> list[int]:
        return [d.value for d in self.members]


@dataclass
class OmegaResult:
    n: int
    kind: str
    objective: str
    value: int
    witness: list[int]


def _max_weight_clique(weights: Sequence[int], rows: Sequence[int], budget: int) -> tuple[int, list[int]]:
    """Exact max-weight clique, ties broken towards the lexicographically least
    vertex list (vertices are indexed in increasing divisor value)."""
    best_w = 0
    best: list[int] = []
    nodes = 0

    def bound(cand: int) -> int:
        total = 0
        left = cand
        while left:
            avail = left
            top = 0
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                left &= ~(1 << v)
                top = max(top, weights[v])
            total += top
        return total

    def expand(clique: list[int], w: int, cand: int):
        nonlocal best_w, best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"divisor-family search exceeded {budget} nodes")
        if w > best_w or (w == best_w and sorted(clique) < best):
            best_w, best = w, sorted(clique)
        if not cand or w + bound(cand) < best_w:
            return
        for v in list(iter_bits(cand)):
            if w + bound(cand) < best_w:
                return
            expand(clique + [v], w + weights[v], cand & rows[v])
            cand &= ~(1 << v)

    expand([], 0, (1 << len(weights)) - 1)
    return best_w, best


def _compat_rows(divs: Sequence[Divisor], ok) -> list[int]:
    rows = [0] * len(divs)
    for i, j in combinations(range(len(divs)), 2):
        if ok(divs[i], divs[j]):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def omega_via_divisors(n: int, kind: str, budget: int | None = None) -> list[OmegaResult]:
    """Clique number of the ``kind`` graph of ``Z_n`` by search over divisor families.

    ``power`` and ``ipg`` give one result (element count of the best family,
    the identity included for ``ipg``); ``diff`` gives two, under the
    cardinality objective ``max |S|`` and the weighted objective ``max sum phi(s)``.
    """
    divs = all_divisors(n)
    if budget is None:
        budget = budget_from_env(DEFAULT_FAMILY_BUDGET)
    if kind == "power":
        best: dict[int, tuple[int, list[int]]] = {}
        for i, d in enumerate(divs):
            prev = [best[j] for j in range(i) if divs[j].divides(d)]
            w, chain = max(prev, key=lambda t: (t[0], [-x for x in t[1]]), default=(0, []))
            best[i] = (w + d.phi(), chain + [d.value])
        w, chain = max(best.values(), key=lambda t: (t[0], [-x for x in t[1]]))
        return [OmegaResult(n, kind, "weight", w, chain)]
    if kind == "ipg":
        nontrivial = divs[1:]
        rows = _compat_rows(nontrivial, Divisor.shares_prime)
        w, sel = _max_weight_clique([d.phi() for d in nontrivial], rows, budget)
        return [OmegaResult(n, kind, "weight", 1 + w, [1] + [nontrivial[i].value for i in sel])]
    if kind == "diff":
        rows = _compat_rows(divs, symbolic_diff_adjacent)
        out = []
        for objective, weights in (("cardinality", [1] * len(divs)), ("weight", [d.phi() for d in divs])):
            w, sel = _max_weight_clique(weights, rows, budget)
            out.append(OmegaResult(n, kind, objective, w, [divs[i].value for i in sel]))
        return out
    raise InvalidParameter(f"unknown kind {kind!r} (expected power, ipg or diff)")


# ---------------------------------------------------------------------------
# Universality: any graph sits inside D(Z_n) for squarefree n


@dataclass(frozen=True)
class SpernerFamily:
    ground_set: tuple
    sets: tuple[frozenset, ...]

    def is_sperner(self) -> bool:
        return all(not a <= b and not b <= a for a, b in combinations(self.sets, 2))

    def intersection_graph(self) -> Graph:
        return Graph.from_edges(
            len(self.sets),
            [(i, j) for i, j in combinations(range(len(self.sets)), 2) if self.sets[i] & self.sets[j]],
        )


def graph_to_sperner(g: Graph) -> SpernerFamily:
    """Ground set is vertices then edges; vertex ``v`` maps to itself plus its edges."""
    if g.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    edges = g.edges()
    ground = tuple(("v", v) for v in range(g.n)) + tuple(("e", e) for e in edges)
    sets = []
    for v in range(g.n):
        sets.append(frozenset([("v", v)] + [("e", e) for e in edges if v in e]))
    return SpernerFamily(ground, tuple(sets))


@dataclass
class Embedding:
    primes: dict
    divisors: list[Divisor]
    verified: bool

    @property
    def prime_list(self) -> list[int]:
        return list(self.primes.values())


def embed_in_cyclic(g: Graph) -> Embedding:
    """Place ``g`` as an induced subgraph of the difference graph of a cyclic
    group of squarefree order, and check the adjacency symbolically."""
    family = graph_to_sperner(g)
    if len(family.ground_set) > MAX_GROUND_SET:
        raise GroundSetTooLarge(
            f"|V|+|E| = {len(family.ground_set)} exceeds the prime table bound {MAX_GROUND_SET}"
        )
    primes = first_primes(len(family.ground_set))
    assignment = dict(zip(family.ground_set, primes))
    prime_tuple = tuple(primes)
    divs = [
        Divisor(prime_tuple, tuple(1 if x in F else 0 for x in family.ground_set))
        for F in family.sets
    ]
    verified = all(
        symbolic_diff_adjacent(divs[u], divs[v]) == g.adjacent(u, v)
        for u, v in combinations(range(g.n), 2)
    )
    return Embedding(assignment, divs, verified)
