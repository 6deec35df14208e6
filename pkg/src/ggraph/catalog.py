"""Group catalogs swept by the verification harness.

Every entry is a group-spec string plus a few tags, and is only built on
demand. Abelian groups are enumerated by invariant factors, one per
isomorphism type.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from sympy.utilities.iterables import partitions

from .groups import FiniteGroup
from .numtheory import factorize, prime_factors
from .specs import build_group

DEFAULT_ABELIAN_MAX = 400
DEFAULT_NAMED_MAX = 210
DEFAULT_PGROUP_MAX = 256
CXQ_CASES = tuple((m, n) for m in (3, 5, 15, 21) for n in (3, 4))


@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    family: str
    order: int
    tags: frozenset = field(default_factory=frozenset)
    invariants: tuple[int, ...] | None = None

    def build(self) -> FiniteGroup:
        return build_group(self.spec)

    @property
    def cyclic(self) -> bool:
        return "cyclic" in self.tags


def _partitions(e: int) -> list[tuple[int, ...]]:
    out = []
    for part in partitions(e):
        out.append(tuple(sorted((k for k, m in part.items() for _ in range(m)), reverse=True)))
    return sorted(out, reverse=True)


def invariant_factor_lists(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order ``n`` as invariant factors ``d1 | d2 | ...``."""
    if n == 1:
        return [(1,)]
    f = factorize(n)
    out = []
    for choice in product(*(_partitions(e) for _, e in f)):
        depth = max(len(c) for c in choice)
        factors = []
        for i in range(depth):
            factors.append(prod(p ** c[i] for (p, _), c in zip(f, choice) if i < len(c)))
        out.append(tuple(sorted(factors)))
    return out


def _abelian_spec(inv: tuple[int, ...]) -> str:
    return " x ".join(f"Z({d})" for d in inv)


def _tags(inv: tuple[int, ...]) -> frozenset:
    n = prod(inv)
    tags = {"abelian"}
    if len(inv) == 1:
        tags.add("cyclic")
    if len(prime_factors(n)) == 1:
        tags.add("p-group")
    if len(prime_factors(n)) >= 2:
        tags.add("center-two-primes")
    return frozenset(tags)


def abelian_groups(max_order: int = DEFAULT_ABELIAN_MAX, min_order: int = 1) -> list[CatalogEntry]:
    out = []
    for n in range(min_order, max_order + 1):
        for inv in invariant_factor_lists(n):
            out.append(CatalogEntry(_abelian_spec(inv), "abelian", n, _tags(inv), inv))
    return out


def abelian_p_groups(max_order: int = DEFAULT_PGROUP_MAX) -> list[CatalogEntry]:
    return [e for e in abelian_groups(max_order, 2) if "p-group" in e.tags]


def cyclic_groups(max_order: int = DEFAULT_NAMED_MAX, min_order: int = 1) -> list[CatalogEntry]:
    return [CatalogEntry(f"Z({m})", "cyclic", m, _tags((m,)), (m,)) for m in range(min_order, max_order + 1)]


def quaternion_groups(max_order: int = 64) -> list[CatalogEntry]:
    out = []
    k = 8
    while k <= max_order:
        out.append(CatalogEntry(f"Q({k})", "quaternion", k,
                                frozenset({"p-group", "gen-quaternion", "unique-involution"})))
        k *= 2
    return out


def dihedral_groups(max_order: int = DEFAULT_NAMED_MAX) -> list[CatalogEntry]:
    return [CatalogEntry(f"D({2 * n})", "dihedral", 2 * n,
                         frozenset({"p-group"} if len(prime_factors(2 * n)) == 1 else set()))
            for n in range(3, max_order // 2 + 1)]


def cyclic_times_quaternion(max_order: int = DEFAULT_NAMED_MAX) -> list[CatalogEntry]:
    """``Z(m) x Q(2^n)`` for odd ``m >= 3``, plus the fixed diameter-3 cases."""
    pairs = {(m, n) for n in range(3, 8) for m in range(3, max_order // 2**n + 1, 2)}
    pairs |= set(CXQ_CASES)
    return [
        CatalogEntry(f"Z({m}) x Q({2**n})", "cyclic-x-quaternion", m * 2**n,
                     frozenset({"center-two-primes", "unique-involution"}))
        for m, n in sorted(pairs, key=lambda t: (t[0] * 2 ** t[1], t))
    ]


EXTRA_SPECS = (
    ("Sym(3)", frozenset()),
    ("Sym(4)", frozenset()),
    ("Alt(4)", frozenset()),
    ("Alt(5)", frozenset()),
    ("SL(2,3)", frozenset({"unique-involution"})),
    ("SL(2,5)", frozenset({"unique-involution"})),
    ("Z(6) x Sym(3)", frozenset({"center-two-primes"})),
    ("Z(15) x Sym(3)", frozenset({"center-two-primes"})),
    ("Z(10) x D(8)", frozenset({"center-two-primes"})),
    ("Z(3) x SL(2,3)", frozenset({"unique-involution"})),
    ("Z(5) x SL(2,3)", frozenset({"unique-involution"})),
    ("PSL(2,7)", frozenset()),
)


def extra_groups() -> list[CatalogEntry]:
    out = []
    for spec, tags in EXTRA_SPECS:
        out.append(CatalogEntry(spec, "extra", build_group(spec).order, tags))
    return out


def named_families(max_order: int = DEFAULT_NAMED_MAX) -> list[CatalogEntry]:
    return (
        cyclic_groups(max_order)
        + cyclic_times_quaternion(max_order)
        + dihedral_groups(max_order)
        + quaternion_groups()
    )


def full_catalog(abelian_max: int = DEFAULT_ABELIAN_MAX, named_max: int = DEFAULT_NAMED_MAX) -> list[CatalogEntry]:
    """Abelian sweep plus named families and extras, duplicates (by spec) removed."""
    seen = set()
    out = []
    for e in abelian_groups(abelian_max) + named_families(named_max) + extra_groups():
        if e.spec not in seen:
            seen.add(e.spec)
            out.append(e)
    return out


def is_pq(m: int) -> bool:
    f = factorize(m)
    return len(f) == 2 and all(e == 1 for _, e in f)


def is_pa_q(m: int) -> bool:
    """``m = p^a q`` with distinct primes ``p, q`` and ``a >= 1``."""
    f = factorize(m)
    return len(f) == 2 and min(e for _, e in f) == 1

