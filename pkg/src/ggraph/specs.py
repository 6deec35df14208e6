"""Group-spec mini-language.

::

    spec := term { "x" term }
    term := ATOM "(" args ")" | "M11"

Atoms: ``Z(n)``, ``D(2n)``, ``Q(2^n)``, ``Sym(n)``, ``Alt(n)``, ``SL(2,q)``,
``PSL(2,q)``, ``M11``, ``ElemAb(p,k)`` and ``Perm(g1, g2, ...)`` where each
generator is written in 1-based cycle notation, e.g. ``Perm((1,2,3), (1,2))``.
Whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import InvalidParameter, OrderLimitExceeded, SpecSyntaxError
from .fields import MAX_FIELD_ORDER
from .groups import (
    DEFAULT_ORDER_CAP,
    M11_ORDER,
    FiniteGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    mathieu11,
    perm_from_cycles,
    permutation_group,
    projective_special_linear2,
    psl2_order,
    quaternion,
    sl2_order,
    special_linear2,
    symmetric,
)
from .numtheory import is_prime, is_prime_power

ATOMS = ("ElemAb", "Perm", "PSL", "Sym", "Alt", "M11", "SL", "Z", "D", "Q")


@dataclass(frozen=True)
class Atom:
    kind: str
    args: tuple

    def __str__(self):
        if self.kind == "M11":
            return "M11"
        if self.kind == "Perm":
            gens = ",".join("".join("(" + ",".join(map(str, c)) + ")" for c in g) or "()" for g in self.args)
            return f"Perm({gens})"
        return f"{self.kind}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[Atom, ...]

    def __str__(self):
        return " x ".join(map(str, self.factors))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise SpecSyntaxError(f"unexpected {self._found()}", self.pos, (repr(ch),))
        self.pos += 1

    def _found(self) -> str:
        return repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecSyntaxError(f"unexpected {self._found()}", self.pos, ("integer",))
        return int(self.text[start:self.pos])

    def spec(self) -> GroupSpec:
        factors = [self.term()]
        while self.peek() == "x":
            self.pos += 1
            factors.append(self.term())
        if self.peek():
            raise SpecSyntaxError(f"unexpected {self._found()}", self.pos, ("'x'", "end of input"))
        return GroupSpec(tuple(factors))

    def term(self) -> Atom:
        self.skip()
        for name in ATOMS:
            if self.text.startswith(name, self.pos):
                start = self.pos
                self.pos += len(name)
                if name == "M11":
                    if self.peek() == "(":
                        self.pos += 1
                        self.expect(")")
                    return Atom("M11", ())
                if name == "Perm":
                    return Atom("Perm", self.perm_args())
                self.expect("(")
                args = [self.integer()]
                while self.peek() == ",":
                    self.pos += 1
                    args.append(self.integer())
                self.expect(")")
                atom = Atom(name, tuple(args))
                _validate(atom, start)
                return atom
        raise SpecSyntaxError(f"unexpected {self._found()}", self.pos, ATOMS)

    def perm_args(self) -> tuple:
        self.expect("(")
        gens = [self.permutation()]
        while self.peek() == ",":
            self.pos += 1
            gens.append(self.permutation())
        self.expect(")")
        return tuple(gens)

    def permutation(self) -> tuple:
        cycles = []
        if self.peek() != "(":
            raise SpecSyntaxError(f"unexpected {self._found()}", self.pos, ("'('",))
        while self.peek() == "(":
            self.pos += 1
            pts = []
            while self.peek() not in (")", ""):
                pts.append(self.integer())
                if self.peek() == ",":
                    self.pos += 1
            self.expect(")")
            if pts:
                cycles.append(tuple(pts))
        return tuple(cycles)


def _validate(atom: Atom, pos: int) -> None:
    k, a = atom.kind, atom.args
    arity = {"Z": 1, "D": 1, "Q": 1, "Sym": 1, "Alt": 1, "SL": 2, "PSL": 2, "ElemAb": 2}
    if len(a) != arity[k]:
        raise SpecSyntaxError(f"{k} takes {arity[k]} argument(s), got {len(a)}", pos)

    def bad(msg):
        raise InvalidParameter(f"{atom}: {msg}")

    if k in ("Z", "Sym", "Alt") and a[0] < 1:
        bad("parameter must be >= 1")
    if k == "D" and (a[0] < 2 or a[0] % 2):
        bad("dihedral order must be even and >= 2")
    if k == "Q" and (a[0] < 8 or a[0] & (a[0] - 1)):
        bad("quaternion order must be a power of 2 that is >= 8")
    if k in ("SL", "PSL"):
        if a[0] != 2:
            bad("only degree 2 is supported")
        if not is_prime_power(a[1]):
            bad(f"{a[1]} is not a prime power")
        if a[1] > MAX_FIELD_ORDER:
            bad(f"field order {a[1]} exceeds {MAX_FIELD_ORDER}")
        if k == "PSL" and a[1] < 4:
            bad("PSL(2,q) needs q >= 4 here")
    if k == "ElemAb":
        if not is_prime(a[0]):
            bad(f"{a[0]} is not prime")
        if a[1] < 1:
            bad("rank must be >= 1")


def parse_group_spec(text: str) -> GroupSpec:
    return _Parser(text).spec()


def expected_order(atom: Atom) -> int | None:
    k, a = atom.kind, atom.args
    if k in ("Z", "D", "Q"):
        return a[0]
    if k == "Sym":
        return factorial(a[0])
    if k == "Alt":
        return max(factorial(a[0]) // 2, 1)
    if k == "SL":
        return sl2_order(a[1])
    if k == "PSL":
        return psl2_order(a[1])
    if k == "M11":
        return M11_ORDER
    if k == "ElemAb":
        return a[0] ** a[1]
    return None


def build_atom(atom: Atom, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    k, a = atom.kind, atom.args
    if k == "Z":
        return cyclic(a[0])
    if k == "D":
        return dihedral(a[0])
    if k == "Q":
        return quaternion(a[0])
    if k == "Sym":
        return symmetric(a[0], cap)
    if k == "Alt":
        return alternating(a[0], cap)
    if k == "SL":
        return special_linear2(a[1], cap)
    if k == "PSL":
        return projective_special_linear2(a[1], cap)
    if k == "M11":
        return mathieu11(cap)
    if k == "ElemAb":
        return elementary_abelian(a[0], a[1])
    if k == "Perm":
        degree = max((p for g in a for c in g for p in c), default=1)
        gens = [perm_from_cycles(g, degree) for g in a]
        return permutation_group(str(atom), gens, degree, cap)
    raise InvalidParameter(f"unknown atom {k}")


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Construct the group; products index row-major over their factors."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    known = [expected_order(f) for f in spec.factors]
    if all(o is not None for o in known) and prod(known) > cap:
        raise OrderLimitExceeded(f"{spec} has order {prod(known)} > cap {cap}")
    factors = [build_atom(f, cap) for f in spec.factors]
    if prod(f.order for f in factors) > cap:
        raise OrderLimitExceeded(f"{spec} has order {prod(f.order for f in factors)} > cap {cap}")
    G = direct_product(factors) if len(factors) > 1 else factors[0]
    G.name = str(spec)
    return G
