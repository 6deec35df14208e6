"""Cyclic-subgroup lattice of a finite group.

Elements generating the same cyclic subgroup form a *generator class*. The
three graphs on a group only depend on how these classes sit inside each
other, so everything downstream works class-by-class.

Relations are stored as Python-int bitsets over class ids: ``below[a]`` has
bit ``b`` set iff ``<b> <= <a>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .groups import FiniteGroup
from .numtheory import is_prime, prime_factors


@dataclass(frozen=True)
class GeneratorClass:
    class_id: int
    representative: int
    members: tuple[int, ...]
    subgroup_order: int
    subgroup: frozenset[int]


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(bits) -> int:
    m = 0
    for b in bits:
        m |= 1 << b
    return m


class CyclicLattice:
    """Generator classes of ``group`` with containment and meeting relations."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        orders = group.orders
        n = group.order
        assigned = np.full(n, -1, dtype=np.int64)
        raw = []
        for g in range(n):
            if assigned[g] >= 0:
                continue
            seq = group.powers(g)
            o = len(seq)
            members = tuple(sorted(seq[k] for k in range(1, o) if gcd(k, o) == 1)) if o > 1 else (0,)
            assigned[list(members)] = len(raw)
            raw.append((o, members[0], members, frozenset(seq)))
        raw.sort(key=lambda r: (r[0], r[1]))
        self.classes: list[GeneratorClass] = [
            GeneratorClass(i, r[1], r[2], r[0], r[3]) for i, r in enumerate(raw)
        ]
        class_of = np.empty(n, dtype=np.int64)
        for c in self.classes:
            class_of[list(c.members)] = c.class_id
        self.class_of = class_of
        assert int(orders[self.classes[0].representative]) == 1

        below = []
        for c in self.classes:
            below.append(bits_to_mask({int(class_of[x]) for x in c.subgroup}))
        self.below: list[int] = below
        above = [0] * len(self.classes)
        for a, mask in enumerate(below):
            for b in iter_bits(mask):
                above[b] |= 1 << a
        self.above: list[int] = above
        self.prime_classes = bits_to_mask(
            c.class_id for c in self.classes if is_prime(c.subgroup_order)
        )

    def __len__(self):
        return len(self.classes)

    @property
    def identity_class(self) -> int:
        return 0

    @cached_property
    def element_masks(self) -> list[int]:
        return [bits_to_mask(c.members) for c in self.classes]

    @cached_property
    def prime_set(self) -> frozenset[int]:
        return frozenset(prime_factors(self.group.order)) if self.group.order > 1 else frozenset()

    def contains(self, a: int, b: int) -> bool:
        """Whether class ``a``'s subgroup contains class ``b``'s subgroup."""
        return bool(self.below[a] >> b & 1)

    def prime_below(self, a: int) -> int:
        return self.below[a] & self.prime_classes

    def meets_nontrivially(self, a: int, b: int) -> bool:
        """``<a> & <b> != {e}``.

        Two cyclic subgroups meet nontrivially exactly when they share a
        subgroup of prime order, so this intersects the prime-order parts of
        the two subgroups rather than reasoning from element orders.
        """
        return bool(self.prime_below(a) & self.prime_below(b))

    def meets_mask(self, a: int) -> int:
        """Bitset of classes meeting class ``a`` nontrivially."""
        mask = 0
        for p in iter_bits(self.prime_below(a)):
            mask |= self.above[p]
        return mask

    def maximal_classes(self) -> list[GeneratorClass]:
        return [c for c in self.classes if self.above[c.class_id] == 1 << c.class_id]


def generator_classes(group: FiniteGroup) -> CyclicLattice:
    return CyclicLattice(group)


def maximal_cyclic_classes(lattice: CyclicLattice) -> list[GeneratorClass]:
    return lattice.maximal_classes()


def pi_of_center(group: FiniteGroup) -> frozenset[int]:
    z = len(group.center())
    return frozenset(prime_factors(z)) if z > 1 else frozenset()
