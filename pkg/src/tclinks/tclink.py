"""
Torus-covering T^2-links given by a commuting pair of basis braids (a, b),
their linking tables and triple linking numbers.

Components of the surface link are the orbits of the group generated by
perm(a) and perm(b), numbered 1, 2, ... in order of their smallest strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as ordered

from .braidword import (
    BraidWord,
    StrandMismatchError,
    crossing_matrix,
    linking_from_matrix,
    permutation,
)
from .garside import GarsideNormalForm, commutator_normal_form


class NonCommutingError(ValueError):
    def __init__(self, a: BraidWord, b: BraidWord, witness: GarsideNormalForm):
        self.witness = witness
        super().__init__(
            f"basis braids do not commute: [a, b] has normal form "
            f"inf={witness.infimum}, {len(witness.factors)} canonical factors")


class ChoiceDependenceError(AssertionError):
    """lk^c_{i,j} came out different for two circles of component i."""


class ComponentIndexError(ValueError):
    pass


def _orbits(n: int, perms) -> list[tuple[int, ...]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for s in range(1, n + 1):
            ra, rb = find(s), find(p(s))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for s in range(1, n + 1):
        groups.setdefault(find(s), []).append(s)
    return sorted((tuple(g) for g in groups.values()), key=min)


@dataclass(frozen=True)
class TorusCoveringLink:
    strands: int
    a: BraidWord
    b: BraidWord
    components: tuple[tuple[int, ...], ...]

    @property
    def num_components(self) -> int:
        return len(self.components)

    def component_of(self, s: int) -> int:
        for i, comp in enumerate(self.components, 1):
            if s in comp:
                return i
        raise KeyError(s)


def build_link(a: BraidWord, b: BraidWord, check: bool = True) -> TorusCoveringLink:
    """
    Assemble the link with basis braids (a, b). With ``check`` the pair must
    commute in the braid group; otherwise NonCommutingError carries the
    normal form of the commutator.
    """
    if a.strands != b.strands:
        raise StrandMismatchError(f"{a.strands} strands vs {b.strands} strands")
    if check:
        c = commutator_normal_form(a, b)
        if not c.is_identity():
            raise NonCommutingError(a, b, c)
    comps = _orbits(a.strands, (permutation(a), permutation(b)))
    return TorusCoveringLink(a.strands, a, b, tuple(comps))


@dataclass(frozen=True)
class LinkingTable:
    """
    ``lk_a[i][j]`` is lk^a_{i+1,j+1}: the linking number of one circle of
    component i+1 in the closure of a with all circles of component j+1.
    ``cycles_a[i]`` counts the closure circles of a inside component i+1.
    Diagonal entries are 0 and carry no meaning.
    """
    lk_a: tuple[tuple[int, ...], ...]
    lk_b: tuple[tuple[int, ...], ...]
    cycles_a: tuple[int, ...]
    cycles_b: tuple[int, ...]

    def get(self, which: str, i: int, j: int) -> int:
        table = self.lk_a if which == "a" else self.lk_b
        return table[i - 1][j - 1]


def _lk_matrix(w: BraidWord, components) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    m = crossing_matrix(w)
    cycles = permutation(w).cycles()
    per_comp = [[c for c in cycles if c[0] in comp] for comp in components]
    c = len(components)
    out = [[0] * c for _ in range(c)]
    for i in range(c):
        for j in range(c):
            if i == j:
                continue
            values = {linking_from_matrix(m, [cyc], per_comp[j]) for cyc in per_comp[i]}
            if len(values) != 1:
                raise ChoiceDependenceError(
                    f"lk_{i + 1},{j + 1} depends on the chosen circle: {sorted(values)}")
            out[i][j] = values.pop()
    return tuple(tuple(r) for r in out), tuple(len(p) for p in per_comp)


def lk_table(L: TorusCoveringLink) -> LinkingTable:
    """
    Every circle of component i is tried as the representative circle, and
    all must agree; a disagreement raises ChoiceDependenceError.
    """
    lk_a, ca = _lk_matrix(L.a, L.components)
    lk_b, cb = _lk_matrix(L.b, L.components)
    return LinkingTable(lk_a, lk_b, ca, cb)


def tlk_from_table(t: LinkingTable, i: int, j: int, k: int) -> int:
    """-lk^a_{j,i} lk^b_{j,k} + lk^a_{j,k} lk^b_{j,i}"""
    return -t.get("a", j, i) * t.get("b", j, k) + t.get("a", j, k) * t.get("b", j, i)


def _check_triple(c: int, i: int, j: int, k: int):
    if c < 3:
        raise ComponentIndexError(f"triple linking needs 3 components, link has {c}")
    if len({i, j, k}) != 3:
        raise ComponentIndexError(f"indices must be distinct, got ({i}, {j}, {k})")
    for x in (i, j, k):
        if not 1 <= x <= c:
            raise ComponentIndexError(f"component {x} out of range 1..{c}")


def triple_linking(L: TorusCoveringLink, i: int, j: int, k: int,
                   table: LinkingTable | None = None) -> int:
    _check_triple(L.num_components, i, j, k)
    t = table if table is not None else lk_table(L)
    return tlk_from_table(t, i, j, k)


@dataclass(frozen=True)
class TripleLinkingTable:
    values: dict[tuple[int, int, int], int]

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __getitem__(self, ijk: tuple[int, int, int]) -> int:
        return self.values[ijk]


def all_triple_linkings(L: TorusCoveringLink,
                        table: LinkingTable | None = None) -> TripleLinkingTable:
    """Tlk over all ordered triples of distinct components (empty below 3 components)."""
    c = L.num_components
    t = table if table is not None else lk_table(L)
    values = {ijk: tlk_from_table(t, *ijk) for ijk in ordered(range(1, c + 1), 3)}
    return TripleLinkingTable(values)


def is_trivial_triple_linking(L: TorusCoveringLink) -> bool:
    return L.num_components < 3 or all_triple_linkings(L).is_trivial


def link_report(L: TorusCoveringLink, table: LinkingTable | None = None) -> dict:
    t = table if table is not None else lk_table(L)
    tlk = all_triple_linkings(L, t)
    return {
        "strands": L.strands,
        "components": [list(c) for c in L.components],
        "lk_a": [list(r) for r in t.lk_a],
        "lk_b": [list(r) for r in t.lk_b],
        "tlk": [{"i": i, "j": j, "k": k, "value": v}
                for (i, j, k), v in sorted(tlk.values.items())],
    }
