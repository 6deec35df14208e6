"""Finite groups on dense element indices.

Every group numbers its elements ``0 .. order-1`` with ``0`` the identity.
Two storage strategies sit behind one interface:

* :class:`ArithmeticGroup` multiplies indices with a closed-form, numpy-friendly
  rule (cyclic, dihedral, quaternion groups and their direct products);
* :class:`ElementGroup` keeps explicit element objects (permutations, matrices)
  obtained by breadth-first closure of generators, and multiplies on demand.

A full multiplication table is only materialized for groups of order at most
:data:`TABLE_LIMIT`.
"""
from __future__ import annotations

import random
from collections import deque
from functools import cached_property
from math import factorial
from typing import Callable, Hashable, NamedTuple, Sequence

import numpy as np

from .errors import OrderLimitExceeded
from .fields import galois_field

TABLE_LIMIT = 4096
DEFAULT_ORDER_CAP = 50_000
M11_ORDER = 7920


class GroupElement(NamedTuple):
    index: int
    display: str


class FiniteGroup:
    """Common interface; subclasses provide ``multiply`` and ``label``."""

    name: str
    order: int
    generators: tuple[int, ...]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} of order {self.order}>"

    def __len__(self):
        return self.order

    # -- subclass hooks -------------------------------------------------
    def multiply(self, a: int, b: int) -> int:
        raise NotImplementedError

    def label(self, g: int) -> str:
        raise NotImplementedError

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.fromiter((self.multiply(int(x), int(y)) for x, y in zip(a.ravel(), b.ravel())),
                          dtype=np.int64, count=a.size)
        return out.reshape(a.shape)

    # -- derived data ----------------------------------------------------
    @cached_property
    def _orders_and_inverses(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order
        idx = np.arange(n, dtype=np.int64)
        orders = np.zeros(n, dtype=np.int64)
        inverses = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        prev = idx.copy()
        cur = idx.copy()
        k = 1
        while True:
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            inverses[done] = prev[done]
            if orders.all():
                break
            prev = cur
            cur = self.mul_vec(cur, idx)
            k += 1
        return orders, inverses

    @property
    def orders(self) -> np.ndarray:
        return self._orders_and_inverses[0]

    @property
    def inverses(self) -> np.ndarray:
        return self._orders_and_inverses[1]

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def inverse(self, g: int) -> int:
        return int(self.inverses[g])

    def element(self, g: int) -> GroupElement:
        return GroupElement(g, self.label(g))

    @cached_property
    def table(self) -> np.ndarray:
        if self.order > TABLE_LIMIT:
            raise OrderLimitExceeded(
                f"{self.name}: refusing to materialize a {self.order}x{self.order} table"
            )
        idx = np.arange(self.order, dtype=np.int64)
        return self.mul_vec(idx[:, None], idx[None, :])

    @cached_property
    def _power_cache(self) -> dict[int, tuple[int, ...]]:
        return {}

    def powers(self, g: int) -> tuple[int, ...]:
        """``(g^0, g^1, ..., g^(o(g)-1))``."""
        cached = self._power_cache.get(g)
        if cached is None:
            seq = [0]
            cur = g
            while cur != 0:
                seq.append(cur)
                cur = self.multiply(cur, g)
            cached = tuple(seq)
            self._power_cache[g] = cached
        return cached

    def power(self, g: int, k: int) -> int:
        seq = self.powers(g)
        return seq[k % len(seq)]

    def cyclic_subgroup(self, g: int) -> frozenset[int]:
        return frozenset(self.powers(g))

    def center(self) -> frozenset[int]:
        if self.order <= TABLE_LIMIT:
            t = self.table
            comm = np.ones(self.order, dtype=bool)
            for s in self.generators:
                comm &= t[:, s] == t[s, :]
            return frozenset(int(x) for x in np.flatnonzero(comm))
        gens = self.generators
        return frozenset(
            g for g in range(self.order)
            if all(self.multiply(g, s) == self.multiply(s, g) for s in gens)
        )

    def unique_involution(self) -> int | None:
        inv = np.flatnonzero(self.orders == 2)
        return int(inv[0]) if len(inv) == 1 else None

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.multiply(a, b) == self.multiply(b, a) for a in gens for b in gens)

    def check_axioms(self, samples: int = 100_000, seed: int = 0, exhaustive_limit: int = 64) -> None:
        """Assert associativity, identity and inverse laws; raises AssertionError."""
        n = self.order
        for g in range(n):
            assert self.multiply(0, g) == g == self.multiply(g, 0), f"identity law fails at {g}"
            assert self.multiply(g, self.inverse(g)) == 0, f"inverse law fails at {g}"
            assert n % self.element_order(g) == 0, f"Lagrange fails at {g}"
        if n <= exhaustive_limit:
            t = self.table
            lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
            rhs = t[np.arange(n)[:, None, None], t[None, :, :]]
            assert np.array_equal(lhs, rhs), "associativity fails"
            return
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            assert self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c)), (
                f"associativity fails at {(a, b, c)}"
            )


class ArithmeticGroup(FiniteGroup):
    """Group whose product is a closed-form rule on indices.

    ``rule`` must accept numpy integer arrays (broadcasting) and return the
    product indices.
    """

    def __init__(self, name: str, order: int, rule: Callable, label: Callable[[int], str],
                 generators: Sequence[int]):
        self.name = name
        self.order = order
        self._rule = rule
        self._label = label
        self.generators = tuple(generators)

    def multiply(self, a: int, b: int) -> int:
        return int(self._rule(np.int64(a), np.int64(b)))

    def mul_vec(self, a, b):
        return self._rule(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def label(self, g: int) -> str:
        return self._label(g)


class ProductGroup(FiniteGroup):
    """Direct product ``left x right``; index ``i * |right| + j`` (row-major)."""

    def __init__(self, left: FiniteGroup, right: FiniteGroup, name: str | None = None):
        self.left, self.right = left, right
        self.name = name or f"{left.name} x {right.name}"
        self.order = left.order * right.order
        m = right.order
        self.generators = tuple(
            [g * m for g in left.generators] + [g for g in right.generators]
        )
        self._vectorized = _is_vectorized(left) and _is_vectorized(right)

    def split(self, g: int) -> tuple[int, int]:
        return divmod(g, self.right.order)

    def multiply(self, a: int, b: int) -> int:
        m = self.right.order
        a1, a2 = divmod(a, m)
        b1, b2 = divmod(b, m)
        return self.left.multiply(a1, b1) * m + self.right.multiply(a2, b2)

    def mul_vec(self, a, b):
        if not self._vectorized:
            return super().mul_vec(a, b)
        m = self.right.order
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self.left.mul_vec(a // m, b // m) * m + self.right.mul_vec(a % m, b % m)

    @cached_property
    def _orders_and_inverses(self):
        m = self.right.order
        idx = np.arange(self.order, dtype=np.int64)
        i, j = idx // m, idx % m
        lo, li = self.left.orders, self.left.inverses
        ro, ri = self.right.orders, self.right.inverses
        orders = np.lcm(lo[i], ro[j])
        inverses = li[i] * m + ri[j]
        return orders, inverses

    def label(self, g: int) -> str:
        a, b = self.split(g)
        return f"({self.left.label(a)}, {self.right.label(b)})"


def _is_vectorized(G: FiniteGroup) -> bool:
    if isinstance(G, ArithmeticGroup):
        return True
    if isinstance(G, ProductGroup):
        return G._vectorized
    return False


class ElementGroup(FiniteGroup):
    """Group given by explicit hashable elements and a composition rule.

    Elements are discovered breadth-first from the identity by right
    multiplication with the generators, so index order is deterministic.
    """

    def __init__(self, name: str, identity: Hashable, generators: Sequence[Hashable],
                 compose: Callable[[Hashable, Hashable], Hashable],
                 display: Callable[[Hashable], str] = str, cap: int = DEFAULT_ORDER_CAP):
        self.name = name
        self._compose = compose
        self._display = display
        elements = [identity]
        index = {identity: 0}
        queue = deque([identity])
        gens = [g for g in generators if g != identity]
        while queue:
            x = queue.popleft()
            for s in gens:
                y = compose(x, s)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    if len(elements) > cap:
                        raise OrderLimitExceeded(f"{name}: closure exceeds order cap {cap}")
                    queue.append(y)
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.generators = tuple(dict.fromkeys(index[g] for g in gens))

    def multiply(self, a: int, b: int) -> int:
        return self.index[self._compose(self.elements[a], self.elements[b])]

    @cached_property
    def _orders_and_inverses(self):
        n = self.order
        orders = np.ones(n, dtype=np.int64)
        inverses = np.zeros(n, dtype=np.int64)
        for g in range(1, n):
            seq = self.powers(g)
            orders[g] = len(seq)
            inverses[g] = seq[-1]
        return orders, inverses

    def label(self, g: int) -> str:
        return self._display(self.elements[g])


# ---------------------------------------------------------------------------
# Permutations (tuples of images of 0..d-1); x*y applies x first, then y.

def perm_compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(y[i] for i in x)


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int, one_based: bool = True) -> tuple[int, ...]:
    img = list(range(degree))
    shift = 1 if one_based else 0
    for cyc in cycles:
        pts = [c - shift for c in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def cycle_notation(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(str(i + 1))
            i = p[i]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def permutation_group(name: str, generators: Sequence[tuple[int, ...]], degree: int,
                      cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    return ElementGroup(name, tuple(range(degree)), generators, perm_compose, cycle_notation, cap)


# ---------------------------------------------------------------------------
# Named constructions

def cyclic(n: int) -> ArithmeticGroup:
    return ArithmeticGroup(f"Z({n})", n, lambda a, b: (a + b) % n, str, [1] if n > 1 else [])


def dihedral(order: int) -> ArithmeticGroup:
    """Dihedral group of the given (even) order; ``r^i s^j`` has index ``i + j*n``."""
    n = order // 2

    def rule(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        sign = 1 - 2 * j
        return (i + sign * k) % n + ((j + l) % 2) * n

    def label(g):
        i, j = g % n, g // n
        return f"r^{i}" + ("s" if j else "")

    gens = ([1] if n > 1 else []) + [n]
    return ArithmeticGroup(f"D({order})", order, rule, label, gens)


def quaternion(order: int) -> ArithmeticGroup:
    """Generalized quaternion group: ``a^m = 1, b^2 = a^(m/2), b^-1 a b = a^-1``."""
    m = order // 2

    def rule(a, b):
        i, j = a % m, a // m
        k, l = b % m, b // m
        sign = 1 - 2 * j
        wrap = (j + l) // 2
        return (i + sign * k + wrap * (m // 2)) % m + ((j + l) % 2) * m

    def label(g):
        i, j = g % m, g // m
        return f"a^{i}" + ("b" if j else "")

    return ArithmeticGroup(f"Q({order})", order, rule, label, [1, m])


def symmetric(n: int, cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    if factorial(n) > cap:
        raise OrderLimitExceeded(f"Sym({n}) has order {factorial(n)} > cap {cap}")
    gens = []
    if n >= 2:
        gens.append(perm_from_cycles([[0, 1]], n, one_based=False))
    if n >= 3:
        gens.append(perm_from_cycles([list(range(n))], n, one_based=False))
    return permutation_group(f"Sym({n})", gens, max(n, 1), cap)


def alternating(n: int, cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    if n >= 2 and factorial(n) // 2 > cap:
        raise OrderLimitExceeded(f"Alt({n}) has order {factorial(n) // 2} > cap {cap}")
    gens = []
    if n >= 3:
        gens.append(perm_from_cycles([[0, 1, 2]], n, one_based=False))
    if n >= 4:
        cyc = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(perm_from_cycles([cyc], n, one_based=False))
    return permutation_group(f"Alt({n})", gens, max(n, 1), cap)


M11_GENERATORS = (
    ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11),),
    ((3, 7, 11, 8), (4, 10, 5, 6)),
)


def mathieu11(cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    if M11_ORDER > cap:
        raise OrderLimitExceeded(f"M11 has order {M11_ORDER} > cap {cap}")
    gens = [perm_from_cycles(c, 11) for c in M11_GENERATORS]
    G = permutation_group("M11", gens, 11, cap)
    if G.order != M11_ORDER:
        raise AssertionError(f"M11 generators closed to order {G.order}, expected {M11_ORDER}")
    return G


def sl2_order(q: int) -> int:
    return q * (q * q - 1)


def psl2_order(q: int) -> int:
    return sl2_order(q) // (2 if q % 2 else 1)


def special_linear2(q: int, cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    """SL(2, q) as 2x2 matrices ``(a, b, c, d)`` over GF(q)."""
    if sl2_order(q) > cap:
        raise OrderLimitExceeded(f"SL(2,{q}) has order {sl2_order(q)} > cap {cap}")
    F = galois_field(q)
    w = F.primitive

    def compose(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            F.add(F.mul(a, e), F.mul(b, g)),
            F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)),
            F.add(F.mul(c, f), F.mul(d, h)),
        )

    def show(x):
        a, b, c, d = (F.label(v) for v in x)
        return f"[[{a},{b}],[{c},{d}]]"

    gens = [(1, 1, 0, 1), (w, 0, 0, F.inv(w)), (0, F.neg(1), 1, 0)]
    G = ElementGroup(f"SL(2,{q})", (1, 0, 0, 1), gens, compose, show, cap)
    if G.order != sl2_order(q):
        raise AssertionError(f"SL(2,{q}) closed to order {G.order}")
    return G


def projective_special_linear2(q: int, cap: int = DEFAULT_ORDER_CAP) -> ElementGroup:
    """PSL(2, q) acting on the q+1 points of the projective line.

    Points are the field elements ``0..q-1`` plus ``q`` for infinity.
    """
    if psl2_order(q) > cap:
        raise OrderLimitExceeded(f"PSL(2,{q}) has order {psl2_order(q)} > cap {cap}")
    F = galois_field(q)
    inf = q

    def mobius(a, b, c, d):
        img = []
        for z in range(q + 1):
            if z == inf:
                num, den = a, c
            else:
                num, den = F.add(F.mul(a, z), b), F.add(F.mul(c, z), d)
            img.append(inf if den == 0 else F.div(num, den))
        return tuple(img)

    w2 = F.mul(F.primitive, F.primitive)
    gens = [
        mobius(1, 1, 0, 1),                 # z -> z + 1
        mobius(w2, 0, 0, 1),                # z -> w^2 z
        mobius(0, F.neg(1), 1, 0),          # z -> -1/z
    ]
    G = permutation_group(f"PSL(2,{q})", gens, q + 1, cap)
    if G.order != psl2_order(q):
        raise AssertionError(f"PSL(2,{q}) closed to order {G.order}, expected {psl2_order(q)}")
    return G


def direct_product(factors: Sequence[FiniteGroup], name: str | None = None) -> FiniteGroup:
    G = factors[0]
    for H in factors[1:]:
        G = ProductGroup(G, H)
    if name is not None:
        G.name = name
    return G


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if k == 1:
        G = cyclic(p)
        G.name = f"ElemAb({p},1)"
        return G
    return direct_product([cyclic(p) for _ in range(k)], name=f"ElemAb({p},{k})")


def abelian(invariants: Sequence[int]) -> FiniteGroup:
    """``Z(n1) x Z(n2) x ...`` with the given cyclic factors."""
    return direct_product([cyclic(n) for n in invariants])
