"""Finite groups as multiplication tables, with subgroups and (double) cosets."""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "CosetDecomposition",
    "GroupError",
    "group_from_generators",
    "group_from_table",
    "direct_product",
    "subgroup_closure",
    "all_subgroups",
    "left_cosets",
    "right_cosets",
    "double_cosets",
    "is_normal",
    "catalog",
    "catalog_names",
    "order_cap",
]

DEFAULT_ENUMERATION_CAP = 5040


class GroupError(ValueError):
    pass


def order_cap(default: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Group-order cap, overridable through ``QHG_ORDER_CAP``."""
    raw = os.environ.get("QHG_ORDER_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise GroupError(f"QHG_ORDER_CAP must be an integer, got {raw!r}") from None


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[p][q]`` is the index of ``pq``.  Element indices never move after
    construction because they double as basis indices of the algebras built on
    the group.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple[str, ...] = ()
    name: str = ""
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def mul(self, p: int, q: int) -> int:
        return self.table[p][q]

    def inv(self, p: int) -> int:
        return self.inverse[p]

    def prod(self, *elems: int) -> int:
        out = self.identity
        for p in elems:
            out = self.table[out][p]
        return out

    def label(self, p: int) -> str:
        return self.labels[p] if self.labels else str(p)

    def index_of_perm(self, perm: Sequence[int]) -> int:
        if self.perms is None:
            raise GroupError("group was not built from permutations")
        try:
            return self.perms.index(tuple(perm))
        except ValueError:
            raise GroupError(f"permutation {list(perm)} is not in the group") from None

    def validate(self, check_associativity: bool = True) -> None:
        n = self.order
        full = set(range(n))
        for p in range(n):
            if set(self.table[p]) != full or {self.table[q][p] for q in range(n)} != full:
                raise GroupError(f"table is not a Latin square at row/column {p}")
            if self.table[self.identity][p] != p or self.table[p][self.identity] != p:
                raise GroupError(f"identity law fails at {p}")
            if self.table[p][self.inverse[p]] != self.identity:
                raise GroupError(f"inverse table wrong at {p}")
        if check_associativity:
            t = self.table
            for p, q, r in itertools.product(range(n), repeat=3):
                if t[t[p][q]][r] != t[p][t[q][r]]:
                    raise GroupError(f"associativity fails at ({p}, {q}, {r})")

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[p][q] == t[q][p] for p in range(self.order) for q in range(p))

    def __repr__(self):
        return f"FiniteGroup({self.name or 'anonymous'}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: int) -> bool:
        return p in self._set

    @property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __le__(self, other: Subgroup) -> bool:
        return self._set <= other._set

    def validate(self) -> None:
        g = self.parent
        s = self._set
        if list(self.elements) != sorted(s):
            raise GroupError("subgroup elements must be sorted and distinct")
        if g.identity not in s:
            raise GroupError("subgroup does not contain the identity")
        for p in s:
            if g.inverse[p] not in s:
                raise GroupError(f"subgroup not closed under inverse at {p}")
            for q in s:
                if g.table[p][q] not in s:
                    raise GroupError(f"subgroup not closed under product at ({p}, {q})")

    def __repr__(self):
        return f"Subgroup({self.name or list(self.elements)}, order={self.order})"


@dataclass(frozen=True)
class CosetDecomposition:
    kind: str  # "left" (pK), "right" (Kp) or "double" (KpK)
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, p: int) -> int:
        for i, c in enumerate(self.classes):
            if p in c:
                return i
        raise KeyError(p)

    def __len__(self):
        return len(self.classes)


# --------------------------------------------------------------------------
# construction


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``(p∘q)(x) = p(q(x))``."""
    return tuple(p[x] for x in q)


def _perm_label(p: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


def group_from_generators(degree: int, perms: Iterable[Sequence[int]], cap: int | None = None,
                          name: str = "") -> FiniteGroup:
    """Enumerate the permutation group generated by ``perms`` by closure."""
    if degree < 1:
        raise GroupError("degree must be positive")
    if cap is None:
        cap = order_cap()
    gens = []
    for p in perms:
        p = tuple(int(x) for x in p)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise GroupError(f"{list(p)} is not a permutation of 0..{degree - 1}")
        gens.append(p)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in index:
                    if len(elems) >= cap:
                        raise GroupError(f"group order exceeds cap {cap}")
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    n = len(elems)
    table = tuple(tuple(index[_compose(elems[i], elems[j])] for j in range(n)) for i in range(n))
    inverse = []
    for p in elems:
        q = [0] * degree
        for i, x in enumerate(p):
            q[x] = i
        inverse.append(index[tuple(q)])
    return FiniteGroup(n, table, 0, tuple(inverse), tuple(_perm_label(p) for p in elems), name,
                       tuple(elems))


def group_from_table(table: Sequence[Sequence[int]], labels: Sequence[str] = (), name: str = "",
                     cap: int | None = None) -> FiniteGroup:
    """Build and fully validate a group from a user-supplied table."""
    n = len(table)
    if cap is None:
        cap = order_cap()
    if n == 0:
        raise GroupError("empty table")
    if n > cap:
        raise GroupError(f"group order exceeds cap {cap}")
    tab = tuple(tuple(int(x) for x in row) for row in table)
    if any(len(r) != n for r in tab) or any(not 0 <= x < n for r in tab for x in r):
        raise GroupError("table must be square with entries in 0..n-1")
    ident = next((e for e in range(n) if all(tab[e][p] == p for p in range(n))), None)
    if ident is None:
        raise GroupError("table has no identity")
    inverse = []
    for p in range(n):
        q = next((q for q in range(n) if tab[p][q] == ident), None)
        if q is None:
            raise GroupError(f"element {p} has no inverse")
        inverse.append(q)
    g = FiniteGroup(n, tab, ident, tuple(inverse), tuple(labels), name)
    g.validate()
    return g


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``g × h`` with ``(a, b)`` at index ``a * |h| + b``."""
    m = h.order
    n = g.order * m
    table = tuple(
        tuple(g.table[i // m][j // m] * m + h.table[i % m][j % m] for j in range(n))
        for i in range(n)
    )
    inverse = tuple(g.inverse[i // m] * m + h.inverse[i % m] for i in range(n))
    labels = tuple(f"({g.label(i // m)},{h.label(i % m)})" for i in range(n))
    return FiniteGroup(n, table, g.identity * m + h.identity, inverse, labels,
                       f"{g.name} x {h.name}")


# --------------------------------------------------------------------------
# subgroups and cosets


def subgroup_closure(g: FiniteGroup, seed: Iterable[int], name: str = "") -> Subgroup:
    """Smallest subgroup of ``g`` containing ``seed``."""
    seed = [int(p) for p in seed]
    for p in seed:
        if not 0 <= p < g.order:
            raise GroupError(f"element index {p} out of range")
    elems = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seed:
                y = g.table[x][s]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, tuple(sorted(elems)), name)


def subgroup_from_elements(g: FiniteGroup, elements: Iterable[int], name: str = "") -> Subgroup:
    k = Subgroup(g, tuple(sorted(set(int(p) for p in elements))), name)
    k.validate()
    return k


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found as joins of cyclic subgroups (fine for small groups)."""
    found = {subgroup_closure(g, [p]).elements for p in range(g.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(found):
                c = subgroup_closure(g, set(a) | set(b)).elements
                if c not in found and c not in new:
                    new.add(c)
        found |= new
        frontier = new
    return [Subgroup(g, e) for e in sorted(found, key=lambda e: (len(e), e))]


def _partition(g: FiniteGroup, orbit) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    classes = []
    for p in range(g.order):
        if p in seen:
            continue
        c = tuple(sorted(orbit(p)))
        seen.update(c)
        classes.append(c)
    return tuple(classes)


def left_cosets(g: FiniteGroup, k: Subgroup) -> CosetDecomposition:
    """``G/K``: classes ``pK``."""
    return CosetDecomposition("left", _partition(g, lambda p: {g.table[p][x] for x in k.elements}))


def right_cosets(g: FiniteGroup, k: Subgroup) -> CosetDecomposition:
    """``K\\G``: classes ``Kp``."""
    return CosetDecomposition("right", _partition(g, lambda p: {g.table[x][p] for x in k.elements}))


def double_cosets(g: FiniteGroup, k: Subgroup) -> CosetDecomposition:
    """``K\\G/K``: classes ``KpK``."""
    t = g.table
    return CosetDecomposition(
        "double", _partition(g, lambda p: {t[t[x][p]][y] for x in k.elements for y in k.elements}))


def is_normal(g: FiniteGroup, k: Subgroup) -> bool:
    s = set(k.elements)
    t = g.table
    return all(t[t[q][x]][g.inverse[q]] in s for q in range(g.order) for x in k.elements)


def center(g: FiniteGroup) -> Subgroup:
    t = g.table
    return Subgroup(g, tuple(p for p in range(g.order)
                             if all(t[p][q] == t[q][p] for q in range(g.order))), "center")


def derived_subgroup(g: FiniteGroup) -> Subgroup:
    t, inv = g.table, g.inverse
    comms = {t[t[t[p][q]][inv[p]]][inv[q]] for p in range(g.order) for q in range(g.order)}
    return subgroup_closure(g, comms, "derived")


def conjugacy_class_reps(g: FiniteGroup, subgroups: list[Subgroup]) -> list[Subgroup]:
    t, inv = g.table, g.inverse
    seen: set[tuple[int, ...]] = set()
    reps = []
    for k in subgroups:
        if k.elements in seen:
            continue
        reps.append(k)
        for q in range(g.order):
            seen.add(tuple(sorted(t[t[q][x]][inv[q]] for x in k.elements)))
    return reps


# --------------------------------------------------------------------------
# catalog

_Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def _quaternion8() -> FiniteGroup:
    # unit quaternions as (sign, axis) with axis in {1, i, j, k}
    basis_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def split(name):
        return (-1, name[1:]) if name.startswith("-") else (1, name)

    def join(sign, axis):
        return axis if sign == 1 else "-" + axis

    index = {nm: i for i, nm in enumerate(_Q8_NAMES)}
    table = []
    for a in _Q8_NAMES:
        row = []
        for b in _Q8_NAMES:
            sa, xa = split(a)
            sb, xb = split(b)
            s, x = basis_mul[(xa, xb)]
            row.append(index[join(sa * sb * s, x)])
        table.append(row)
    return group_from_table(table, _Q8_NAMES, "quaternion8")


def _cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    if n == 1:
        return group_from_generators(1, [], name="cyclic(1)")
    return group_from_generators(n, [tuple((i + 1) % n for i in range(n))], name=f"cyclic({n})")


def _dihedral(n: int) -> FiniteGroup:
    if n < 3:
        raise GroupError("dihedral(n) needs n >= 3 (order 2n)")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return group_from_generators(n, [rot, ref], name=f"dihedral({n})")


def _symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 4:
        raise GroupError("symmetric(n) is available for 1 <= n <= 4")
    if n == 1:
        return group_from_generators(1, [], name="symmetric(1)")
    cyc = tuple((i + 1) % n for i in range(n))
    swap = (1, 0) + tuple(range(2, n))
    return group_from_generators(n, [cyc, swap], name=f"symmetric({n})")


def _klein4() -> FiniteGroup:
    return group_from_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="klein4")


_ATOM = re.compile(r"^(cyclic|dihedral|symmetric)\((\d+)\)$|^(quaternion8|klein4)$")


def _atom(name: str) -> FiniteGroup:
    m = _ATOM.match(name.strip())
    if not m:
        raise GroupError(f"unknown catalog group {name!r}")
    if m.group(3):
        return _quaternion8() if m.group(3) == "quaternion8" else _klein4()
    kind, n = m.group(1), int(m.group(2))
    return {"cyclic": _cyclic, "dihedral": _dihedral, "symmetric": _symmetric}[kind](n)


def _perm_sub(g: FiniteGroup, name: str, *perms: Sequence[int]) -> Subgroup:
    return subgroup_closure(g, [g.index_of_perm(p) for p in perms], name)


def _named_subgroups(name: str, g: FiniteGroup) -> dict[str, Subgroup]:
    out: dict[str, Subgroup] = {}
    m = _ATOM.match(name)
    if m is None:
        return out
    if m.group(1) == "cyclic":
        n = int(m.group(2))
        for d in range(1, n + 1):
            if n % d == 0:
                gen = g.index_of_perm(tuple((i + n // d) % n for i in range(n))) if n > 1 else 0
                out[f"C{d}"] = subgroup_closure(g, [gen], f"C{d}")
    elif m.group(1) == "dihedral":
        n = int(m.group(2))
        out["rotations"] = _perm_sub(g, "rotations", tuple((i + 1) % n for i in range(n)))
        out["C2_reflection"] = _perm_sub(g, "C2_reflection", tuple((-i) % n for i in range(n)))
    elif m.group(1) == "symmetric":
        n = int(m.group(2))
        if n >= 2:
            out["C2"] = _perm_sub(g, "C2", (1, 0) + tuple(range(2, n)))
        if n == 3:
            out["A3"] = _perm_sub(g, "A3", (1, 2, 0))
        if n == 4:
            out["S3"] = _perm_sub(g, "S3", (1, 2, 0, 3), (1, 0, 2, 3))
            out["V4"] = _perm_sub(g, "V4", (1, 0, 3, 2), (2, 3, 0, 1))
            out["A4"] = _perm_sub(g, "A4", (1, 2, 0, 3), (1, 0, 3, 2))
            out["D4"] = _perm_sub(g, "D4", (1, 2, 3, 0), (3, 2, 1, 0))
            out["C3"] = _perm_sub(g, "C3", (1, 2, 0, 3))
            out["C4"] = _perm_sub(g, "C4", (1, 2, 3, 0))
    elif m.group(3) == "quaternion8":
        for axis in ("i", "j", "k"):
            out[f"<{axis}>"] = subgroup_closure(g, [_Q8_NAMES.index(axis)], f"<{axis}>")
        out["<-1>"] = subgroup_closure(g, [1], "<-1>")
    elif m.group(3) == "klein4":
        for lab, p in (("a", 1), ("b", 2), ("ab", 3)):
            out[f"<{lab}>"] = subgroup_closure(g, [p], f"<{lab}>")
    return out


def catalog(name: str) -> tuple[FiniteGroup, dict[str, Subgroup]]:
    """A built-in group and a dictionary of standard subgroups.

    ``name`` is one of ``cyclic(n)``, ``dihedral(n)`` (order ``2n``),
    ``symmetric(n)`` for ``n <= 4``, ``quaternion8``, ``klein4``, or a direct
    product of these written ``"A x B"``.
    """
    parts = [p.strip() for p in name.split(" x ")]
    g = _atom(parts[0])
    for p in parts[1:]:
        g = direct_product(g, _atom(p))
    if len(parts) > 1:
        g = FiniteGroup(g.order, g.table, g.identity, g.inverse, g.labels, " x ".join(parts))
    subs: dict[str, Subgroup] = {
        "trivial": Subgroup(g, (g.identity,), "trivial"),
        "full": Subgroup(g, tuple(range(g.order)), "full"),
        "center": center(g),
        "derived": derived_subgroup(g),
    }
    if g.order <= 12:
        for i, k in enumerate(conjugacy_class_reps(g, all_subgroups(g))):
            key = f"class{i}_order{k.order}"
            subs[key] = Subgroup(g, k.elements, key)
    if len(parts) == 1:
        subs.update(_named_subgroups(parts[0], g))
    for k in subs.values():
        k.validate()
    return g, subs


def catalog_names() -> list[str]:
    return sorted([
        "cyclic(n)", "dihedral(n)", "klein4", "quaternion8", "symmetric(n)", "A x B",
    ])


# --------------------------------------------------------------------------
# JSON group specs


def _resolve_subgroup(g: FiniteGroup, subs: dict[str, Subgroup], obj: dict, key: str) -> Subgroup | None:
    if key in obj:
        val = obj[key]
        if isinstance(val, str):
            if val not in subs:
                raise GroupError(f"unknown subgroup name {val!r}; known: {sorted(subs)}")
            return subs[val]
        return subgroup_from_elements(g, val, key)
    gen_key = f"{key}_generators"
    if gen_key in obj:
        seeds = []
        for x in obj[gen_key]:
            seeds.append(g.index_of_perm(x) if isinstance(x, list) else int(x))
        return subgroup_closure(g, seeds, gen_key)
    return None


def group_from_json(obj: dict) -> tuple[FiniteGroup, Subgroup, Subgroup | None]:
    """Parse a group spec: ``{"catalog" | "table" | "degree"+"generators", "subgroup"...}``."""
    subs: dict[str, Subgroup] = {}
    if "catalog" in obj:
        g, subs = catalog(obj["catalog"])
    elif "table" in obj:
        g = group_from_table(obj["table"], obj.get("labels", ()))
    elif "generators" in obj:
        g = group_from_generators(int(obj.get("degree", 0)), obj["generators"])
    else:
        raise GroupError("group spec needs one of 'catalog', 'table' or 'generators'")
    k = _resolve_subgroup(g, subs, obj, "subgroup")
    if k is None:
        raise GroupError("group spec needs 'subgroup' or 'subgroup_generators'")
    k2 = _resolve_subgroup(g, subs, obj, "second_subgroup")
    if k2 is not None and not k <= k2:
        raise GroupError("second_subgroup must contain subgroup")
    return g, k, k2
