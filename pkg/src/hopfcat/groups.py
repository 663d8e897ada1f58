"""Finite groups as dense Cayley tables with 0-based indices.

Index 0 is always the identity.  Catalog groups come with documented
element orderings so every downstream object (classes, characters,
simple objects) is reproducible byte for byte:

* ``Z<n>``: residues 0..n-1 under addition.
* ``Z<a>xZ<b>``: pairs (i, j) in lexicographic order, index i*b + j.
* ``S<n>`` (n <= 4): permutations of {0..n-1} sorted lexicographically.
* ``A<n>`` (n <= 4): even permutations sorted lexicographically.
* ``D<n>`` (n = 3..6, order 2n): rotations r^0..r^(n-1) first, then
  reflections s*r^0..s*r^(n-1); (k1,f1)(k2,f2) = (k1+(-1)^f1 k2, f1^f2).
* ``Q8``: 1, -1, i, -i, j, -j, k, -k.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import permutations
from math import lcm

from .errors import BoundExceeded, NotAGroup, ParseError, UnknownName

NORMAL_SUBGROUP_BOUND = 24


class Group:
    """Immutable finite group given by its Cayley table."""

    def __init__(self, table: list[list[int]], name: str = "", check: bool = True):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        self.name = name or f"order{self.n}"
        if check:
            self._validate()
        inv = [None] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.table[a][b] == 0:
                    inv[a] = b
        if any(v is None for v in inv):
            raise NotAGroup(f"{self.name}: some element has no inverse")
        self.inv = tuple(inv)
        self._classes: list[ConjClassG] | None = None
        self._exponent: int | None = None

    def _validate(self) -> None:
        n = self.n
        idx = range(n)
        for row in self.table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise NotAGroup(f"{self.name}: malformed Cayley table")
        for a in idx:
            if self.table[0][a] != a or self.table[a][0] != a:
                raise NotAGroup(f"{self.name}: index 0 is not an identity")
        for a in idx:
            for b in idx:
                ab = self.table[a][b]
                for c in idx:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise NotAGroup(f"{self.name}: associativity fails at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, x: int, a: int) -> int:
        """x a x^-1."""
        return self.table[self.table[x][a]][self.inv[x]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        if self._exponent is None:
            e = 1
            for a in range(self.n):
                e = lcm(e, self.element_order(a))
            self._exponent = e
        return self._exponent

    def conjugacy_classes(self) -> list["ConjClassG"]:
        """Classes ordered with the identity class first, then by smallest member."""
        if self._classes is not None:
            return self._classes
        seen = [False] * self.n
        classes = []
        for a in range(self.n):
            if seen[a]:
                continue
            members = sorted({self.conj(x, a) for x in range(self.n)})
            for m in members:
                seen[m] = True
            classes.append(ConjClassG(representative=members[0], members=tuple(members)))
        classes.sort(key=lambda c: c.members[0])
        self._classes = classes
        return classes

    def class_index_of(self, a: int) -> int:
        for i, c in enumerate(self.conjugacy_classes()):
            if a in c.members:
                return i
        raise ValueError(a)

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n,
                "table": [list(row) for row in self.table]}

    @staticmethod
    def from_json(obj: dict) -> "Group":
        return Group(obj["table"], name=obj.get("name", ""))

    def __repr__(self) -> str:
        return f"Group({self.name}, order {self.n})"


@dataclass(frozen=True)
class ConjClassG:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    members: tuple[int, ...]  # sorted, includes 0

    @property
    def order(self) -> int:
        return len(self.members)

    def index_map(self) -> dict[int, int]:
        return {g: i for i, g in enumerate(self.members)}

    def as_group(self, name: str = "") -> tuple[Group, dict[int, int]]:
        """Standalone group on the members (sorted order keeps 0 first)."""
        pos = self.index_map()
        table = [[pos[self.parent.mul(a, b)] for b in self.members] for a in self.members]
        return Group(table, name=name or f"sub{len(self.members)}of{self.parent.name}",
                     check=False), pos

    def contains(self, g: int) -> bool:
        return g in self.members


def subgroup_generated(G: Group, gens: list[int]) -> Subgroup:
    elems = {0}
    frontier = [0]
    gens = [g for g in gens if 0 <= g < G.n]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return Subgroup(G, tuple(sorted(elems)))


def centralizer_subgroup(G: Group, a: int) -> Subgroup:
    members = tuple(x for x in range(G.n) if G.mul(x, a) == G.mul(a, x))
    return Subgroup(G, members)


def center_subgroup(G: Group) -> Subgroup:
    members = tuple(x for x in range(G.n)
                    if all(G.mul(x, a) == G.mul(a, x) for a in range(G.n)))
    return Subgroup(G, members)


def commute_elementwise(M: Subgroup, H: Subgroup) -> bool:
    G = M.parent
    return all(G.mul(m, h) == G.mul(h, m) for m in M.members for h in H.members)


def normal_subgroups(G: Group, bound: int = NORMAL_SUBGROUP_BOUND) -> list[Subgroup]:
    """All normal subgroups of G.

    Every normal subgroup is generated by the conjugacy classes it
    contains, so the full set is the closure of {1} under joining with
    one class at a time.
    """
    if G.n > bound:
        raise BoundExceeded(f"normal subgroup enumeration limited to order {bound}")
    classes = G.conjugacy_classes()
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        base = frontier.pop()
        for c in classes:
            if c.members[0] in base:
                continue
            joined = subgroup_generated(G, list(base) + list(c.members)).members
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    out = [Subgroup(G, m) for m in found]
    out.sort(key=lambda s: (s.order, s.members))
    return out


def commutator_subgroup(H: Subgroup) -> Subgroup:
    G = H.parent
    comms = {G.mul(G.mul(a, b), G.inv[G.mul(b, a)])
             for a in H.members for b in H.members}
    return subgroup_generated(G, sorted(comms))


def quotient_group(H: Subgroup, N: Subgroup) -> tuple[Group, dict[int, int]]:
    """H/N for N normal in H; returns the quotient and the projection map."""
    G = H.parent
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for h in H.members:  # sorted, so each new coset is met at its minimum
        if h in coset_of:
            continue
        idx = len(reps)
        reps.append(h)
        for x in N.members:
            coset_of[G.mul(h, x)] = idx
    table = [[coset_of[G.mul(reps[i], reps[j])] for j in range(len(reps))]
             for i in range(len(reps))]
    return Group(table, name=f"{H.parent.name}-quotient", check=False), coset_of


def abelian_cyclic_decomposition(Q: Group) -> list[tuple[int, int]]:
    """Direct factors of an abelian group as (generator, order) pairs."""

    def solve(members: tuple[int, ...]) -> list[tuple[int, int]]:
        if len(members) == 1:
            return []
        orders = {m: Q.element_order(m) for m in members}
        top = max(orders.values())
        g = min(m for m in members if orders[m] == top)
        cyc = _cycle_of(Q, g)
        if len(cyc) == len(members):
            return [(g, top)]
        # find a complement among subgroups generated from members
        target = len(members) // top
        for K in _abelian_subgroups(Q, members):
            if len(K) == target and not (K & cyc - {0}):
                return [(g, top)] + solve(tuple(sorted(K)))
        raise NotAGroup("abelian decomposition failed")  # pragma: no cover

    return solve(tuple(range(Q.n)))


def _cycle_of(Q: Group, g: int) -> set[int]:
    out = {0}
    x = g
    while x != 0:
        out.add(x)
        x = Q.mul(x, g)
    return out


def _abelian_subgroups(Q: Group, members: tuple[int, ...]) -> list[set[int]]:
    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        base = frontier.pop()
        for m in members:
            if m in base:
                continue
            new = set(base)
            stack = [m]
            while stack:
                x = stack.pop()
                if x in new:
                    continue
                new.add(x)
                for y in list(new):
                    for z in (Q.mul(x, y), Q.mul(y, x)):
                        if z not in new:
                            stack.append(z)
            fz = frozenset(new)
            if fz not in found:
                found.add(fz)
                frontier.append(fz)
    return sorted((set(f) for f in found), key=lambda s: (len(s), sorted(s)))


def exponent_tables(Q: Group) -> tuple[list[tuple[int, int]], dict[int, tuple[int, ...]]]:
    """Cyclic decomposition plus exponent coordinates of every element."""
    gens = abelian_cyclic_decomposition(Q)
    coords: dict[int, tuple[int, ...]] = {}
    if not gens:
        coords[0] = ()
        return gens, coords

    def rec(i: int, elem: int, acc: tuple[int, ...]):
        if i == len(gens):
            coords[elem] = acc
            return
        g, d = gens[i]
        x = 0
        for e in range(d):
            rec(i + 1, Q.mul(elem, x), acc + (e,))
            x = Q.mul(x, g)

    rec(0, 0, ())
    if len(coords) != Q.n:
        raise NotAGroup("cyclic decomposition is not direct")  # pragma: no cover
    return gens, coords


# --- catalog -----------------------------------------------------------


def _cyclic(n: int) -> Group:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return Group(table, name=f"Z{n}", check=False)


def _product_cyclic(a: int, b: int) -> Group:
    n = a * b
    def mul(x, y):
        xi, xj = divmod(x, b)
        yi, yj = divmod(y, b)
        return ((xi + yi) % a) * b + (xj + yj) % b
    table = [[mul(x, y) for y in range(n)] for x in range(n)]
    return Group(table, name=f"Z{a}xZ{b}", check=False)


def _perm_group(perms: list[tuple[int, ...]], name: str) -> Group:
    perms = sorted(perms)
    pos = {p: i for i, p in enumerate(perms)}
    def compose(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(len(p)))
    table = [[pos[compose(p, q)] for q in perms] for p in perms]
    return Group(table, name=name, check=False)


def _symmetric(n: int) -> Group:
    return _perm_group([p for p in permutations(range(n))], f"S{n}")


def _alternating(n: int) -> Group:
    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s
    return _perm_group([p for p in permutations(range(n)) if sign(p) == 1], f"A{n}")


def _dihedral(n: int) -> Group:
    order = 2 * n
    def mul(x, y):
        k1, f1 = x % n, x // n
        k2, f2 = y % n, y // n
        k = (k1 - k2) % n if f1 else (k1 + k2) % n
        return (f1 ^ f2) * n + k
    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return Group(table, name=f"D{n}", check=False)


_Q8_SYM = {  # (x, y) -> (sign, symbol) with symbols 0=1, 1=i, 2=j, 3=k
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def _quaternion8() -> Group:
    def mul(x, y):
        sx, ax = x % 2, x // 2
        sy, ay = y % 2, y // 2
        s, a = _Q8_SYM[(ax, ay)]
        return 2 * a + (sx ^ sy ^ s)
    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return Group(table, name="Q8", check=False)


_CATALOG = {
    "Q8": _quaternion8,
    "S2": lambda: _symmetric(2), "S3": lambda: _symmetric(3), "S4": lambda: _symmetric(4),
    "A3": lambda: _alternating(3), "A4": lambda: _alternating(4),
    "D3": lambda: _dihedral(3), "D4": lambda: _dihedral(4),
    "D5": lambda: _dihedral(5), "D6": lambda: _dihedral(6),
}

_RE_ZN = re.compile(r"^Z(\d+)$")
_RE_ZAB = re.compile(r"^Z(\d+)xZ(\d+)$")
_RE_CYCLE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)\s*\)")


def _parse_perm_spec(body: str, offset: int) -> Group:
    gen_strs = [s.strip() for s in body.split(",")]
    perms = []
    points: set[int] = set()
    for gs in gen_strs:
        if not gs:
            raise ParseError("empty permutation generator", offset)
        rest = re.sub(_RE_CYCLE, "", gs).strip()
        if rest:
            raise ParseError(f"bad cycle syntax near {rest!r}", offset + body.find(rest))
        cycles = []
        for m in _RE_CYCLE.finditer(gs):
            pts = [int(t) for t in m.group(1).split()]
            if len(set(pts)) != len(pts):
                raise ParseError("repeated point in cycle", offset + m.start())
            cycles.append(pts)
            points.update(pts)
        perms.append(cycles)
    if not points:
        return _cyclic(1)
    pts = sorted(points)
    pos = {p: i for i, p in enumerate(pts)}
    deg = len(pts)
    gens = []
    for cycles in perms:
        perm = list(range(deg))
        for cyc in cycles:
            for i, p in enumerate(cyc):
                perm[pos[p]] = pos[cyc[(i + 1) % len(cyc)]]
        gens.append(tuple(perm))
    # close under composition
    elems = {tuple(range(deg))}
    frontier = list(elems)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[g[x]] for x in range(deg))
            if q not in elems:
                elems.add(q)
                frontier.append(q)
    return _perm_group(sorted(elems), name="perm" + str(len(elems)))


def parse_group_spec(spec: str) -> Group:
    """Grammar: NAME | 'perm:' cycles (',' cycles)* | 'cayley:' path."""
    spec = spec.strip()
    if not spec:
        raise ParseError("empty group spec", 0)
    if spec.startswith("perm:"):
        return _parse_perm_spec(spec[5:], 5)
    if spec.startswith("cayley:"):
        path = spec[7:].strip()
        try:
            with open(path) as fh:
                obj = json.load(fh)
        except OSError as e:
            raise ParseError(f"cannot read cayley table file: {e}", 7)
        except json.JSONDecodeError as e:
            raise ParseError(f"cayley table file is not valid JSON: {e}", 7)
        table = obj["table"] if isinstance(obj, dict) else obj
        name = obj.get("name", "") if isinstance(obj, dict) else ""
        return Group(table, name=name or "cayley")
    m = _RE_ZAB.match(spec)
    if m:
        return _product_cyclic(int(m.group(1)), int(m.group(2)))
    m = _RE_ZN.match(spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("cyclic order must be >= 1", 1)
        return _cyclic(n)
    if spec in _CATALOG:
        return _CATALOG[spec]()
    raise UnknownName(f"unknown group name {spec!r}", 0)
