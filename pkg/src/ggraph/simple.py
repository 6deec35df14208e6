"""PSL(2,q), its nullness predicate, and two small structural checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InvalidParameter, NotAPrimePower
from .fields import galois_field
from .graphs import difference_graph, difference_graph_undeleted
from .groups import DEFAULT_ORDER_CAP, ElementGroup, FiniteGroup, cyclic, dihedral, projective_special_linear2
from .lattice import CyclicLattice
from .numtheory import factorize, is_prime_power

DEFAULT_SCAN = (4, 5, 7, 8, 9, 11, 13, 16, 25)


def psl2(q: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if not is_prime_power(q):
        raise NotAPrimePower(f"{q} is not a prime power")
    return projective_special_linear2(q, cap)


def _fmt_factorization(f) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f) or "1"


def _prime_power_or_two_primes(m: int) -> bool:
    f = factorize(m)
    return len(f) <= 1 or (len(f) == 2 and all(e == 1 for _, e in f))


@dataclass(frozen=True)
class PslNullVerdict:
    q: int
    d: int
    lower: int
    lower_factorization: tuple
    upper: int
    upper_factorization: tuple
    predicate: bool
    note: str = ""

    def describe(self) -> str:
        return (f"q={self.q} d={self.d} (q-1)/d={self.lower}={_fmt_factorization(self.lower_factorization)} "
                f"(q+1)/d={self.upper}={_fmt_factorization(self.upper_factorization)} "
                f"predicate={self.predicate}")


def psl2_null_predicate(q: int) -> PslNullVerdict:
    """Both ``(q-1)/d`` and ``(q+1)/d`` are prime powers or products of two distinct primes."""
    if not is_prime_power(q):
        raise NotAPrimePower(f"{q} is not a prime power")
    if q < 4:
        raise InvalidParameter(f"q={q}: need q >= 4")
    d = gcd(q - 1, 2)
    lo, hi = (q - 1) // d, (q + 1) // d
    return PslNullVerdict(
        q, d, lo, factorize(lo), hi, factorize(hi),
        _prime_power_or_two_primes(lo) and _prime_power_or_two_primes(hi),
        note="p*p counts as a prime power, so reading 'two primes' as distinct changes nothing",
    )


@dataclass(frozen=True)
class ScanRow:
    q: int
    predicate: bool
    computed_null: bool
    edges: int

    @property
    def agree(self) -> bool:
        return self.predicate == self.computed_null


def psl2_nullness_scan(q_list=DEFAULT_SCAN, cap: int = DEFAULT_ORDER_CAP) -> list[ScanRow]:
    rows = []
    for q in q_list:
        verdict = psl2_null_predicate(q)
        lat = CyclicLattice(psl2(q, cap))
        g = difference_graph_undeleted(lat)
        rows.append(ScanRow(q, verdict.predicate, g.is_edgeless(), g.edge_count()))
    return rows


def dihedral_reduction_check(n: int) -> bool:
    """D(D_2n) equals D(Z_n) with rotation ``r^i`` identified with ``i``."""
    if n < 3:
        raise InvalidParameter(f"n={n}: need n >= 3")
    dg = difference_graph(CyclicLattice(dihedral(2 * n)))
    zg = difference_graph(CyclicLattice(cyclic(n)))
    # dihedral index i + j*n is r^i s^j, so rotations keep their index
    if any(v >= n for v in dg.origin) or sorted(dg.origin) != sorted(zg.origin):
        return False
    d_edges = {tuple(sorted((dg.origin[u], dg.origin[v]))) for u, v in dg.edges()}
    z_edges = {tuple(sorted((zg.origin[u], zg.origin[v]))) for u, v in zg.edges()}
    return d_edges == z_edges


@dataclass
class MatrixCheck:
    ok: bool
    failures: list[str] = field(default_factory=list)
    group_order: int = 0
    involutions: int = 0
    order_four: int = 0

    def __bool__(self):
        return self.ok


def sl34_quaternion_check() -> MatrixCheck:
    """Unitriangular matrices ``X_a`` over GF(4) square to a common central
    ``Z`` and two of them generate a quaternion group of order 8."""
    F = galois_field(4)
    w = F.primitive
    n = 3

    def mat_mul(x, y):
        return tuple(
            tuple(_dot(F, x[i], [y[k][j] for k in range(n)]) for j in range(n)) for i in range(n)
        )

    def det(m):
        (a, b, c), (d, e, f), (g, h, i) = m
        t1 = F.mul(a, F.sub(F.mul(e, i), F.mul(f, h)))
        t2 = F.mul(b, F.sub(F.mul(d, i), F.mul(f, g)))
        t3 = F.mul(c, F.sub(F.mul(d, h), F.mul(e, g)))
        return F.add(F.sub(t1, t2), t3)

    def X(a):
        return ((1, a, 0), (0, 1, F.inv(a)), (0, 0, 1))

    I = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    Z = ((1, 0, 1), (0, 1, 0), (0, 0, 1))
    failures = []
    for a in (1, w, F.mul(w, w)):
        name = f"X_{F.label(a)}"
        if det(X(a)) != 1:
            failures.append(f"det({name}) != 1")
        if mat_mul(X(a), X(a)) != Z:
            failures.append(f"{name}^2 != Z")
    if mat_mul(Z, Z) != I:
        failures.append("Z^2 != I")

    H = ElementGroup("<X_1, X_w>", I, [X(1), X(w)], mat_mul, cap=1000)
    orders = [H.element_order(g) for g in range(H.order)]
    inv, four = orders.count(2), orders.count(4)
    if H.order != 8:
        failures.append(f"|<X_1, X_w>| = {H.order}, expected 8")
    if inv != 1:
        failures.append(f"{inv} involutions, expected 1")
    if four != 6:
        failures.append(f"{four} elements of order 4, expected 6")
    return MatrixCheck(not failures, failures, H.order, inv, four)


def _dot(F, row, col) -> int:
    s = 0
    for a, b in zip(row, col):
        s = F.add(s, F.mul(a, b))
    return s
