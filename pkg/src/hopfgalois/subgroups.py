"""Subgroup lattices: enumeration, normality, characteristicity, index-2 theory."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    FiniteGroup,
    GroupError,
    automorphism_generators,
    closure,
)

__all__ = [
    "Subgroup",
    "LatticeSummary",
    "all_subgroups",
    "normal_subgroups",
    "characteristic_subgroups",
    "squares_subgroup",
    "index_two_count",
    "z2_u2",
    "lattice_summary",
    "DEFAULT_SUBGROUP_BOUND",
]

DEFAULT_SUBGROUP_BOUND = 256


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` as a sorted tuple of member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members or self.members[0] != 0:
            raise GroupError("subgroup must contain the identity")
        if self.parent.order % len(self.members) != 0:
            raise GroupError("subgroup size does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    def index(self) -> int:
        return self.parent.order // len(self.members)

    def contains(self, x: int) -> bool:
        return x in set(self.members)

    def is_normal(self) -> bool:
        g = self.parent
        mset = set(self.members)
        return all(
            {g.conj(t, x) for x in self.members} == mset
            for t in g.minimal_generators()
        )

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """The subgroup as a standalone group; member 0 stays the identity."""
        idx = {m: i for i, m in enumerate(self.members)}
        t = self.parent.table
        table = [[idx[t[a][b]] for b in self.members] for a in self.members]
        return FiniteGroup(table, name, check=False)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name or '?'})"


def _closure_members(tnp: np.ndarray, seed: np.ndarray, gens: np.ndarray,
                     n: int) -> np.ndarray:
    """Member array of <seed ∪ gens> by full-product fixed point."""
    mask = np.zeros(n, dtype=bool)
    mask[seed] = True
    mask[gens] = True
    cur = np.flatnonzero(mask)
    while True:
        prods = np.unique(tnp[np.ix_(cur, cur)])
        new = prods[~mask[prods]]
        if not new.size:
            return cur
        mask[new] = True
        cur = np.flatnonzero(mask)


def _extend_once(g: FiniteGroup, members: np.ndarray, x: int) -> np.ndarray:
    """Members of <H, x>; fast path for abelian g multiplies H by <x>."""
    tnp = g.np_table()
    n = g.order
    if g.is_abelian:
        powers = [0]
        acc = 0
        while True:
            acc = g.table[acc][x]
            if acc == 0:
                break
            powers.append(acc)
        prods = tnp[np.ix_(members, np.asarray(powers, dtype=np.int64))]
        return np.unique(prods)
    return _closure_members(tnp, members, np.asarray([x], dtype=np.int64), n)


def all_subgroups(g: FiniteGroup, *, bound: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    """Every subgroup of g, sorted by (order, member tuple).

    Layered cyclic extension: start from all cyclic subgroups and repeatedly
    extend each known subgroup by one outside element, deduplicating by
    member set.
    """
    if g.order > bound:
        raise GroupError(f"subgroup enumeration bound exceeded: {g.order} > {bound}")
    if "all_subgroups" in g._cache:
        return g._cache["all_subgroups"]
    n = g.order
    seen: dict[bytes, np.ndarray] = {}

    def key_of(members: np.ndarray) -> bytes:
        return members.astype(np.int16).tobytes()

    trivial = np.asarray([0], dtype=np.int64)
    seen[key_of(trivial)] = trivial
    frontier: list[np.ndarray] = [trivial]
    for x in range(1, n):
        cyc = _cyclic_members(g, x)
        k = key_of(cyc)
        if k not in seen:
            seen[k] = cyc
            frontier.append(cyc)
    while frontier:
        nxt: list[np.ndarray] = []
        for members in frontier:
            if members.size == n:
                continue
            inside = np.zeros(n, dtype=bool)
            inside[members] = True
            for x in range(1, n):
                if inside[x]:
                    continue
                bigger = _extend_once(g, members, x)
                k = key_of(bigger)
                if k not in seen:
                    seen[k] = bigger
                    nxt.append(bigger)
        frontier = nxt
    subs = [Subgroup(g, tuple(int(v) for v in m)) for m in seen.values()]
    subs.sort(key=lambda s: (s.order, s.members))
    g._cache["all_subgroups"] = subs
    return subs


def _cyclic_members(g: FiniteGroup, x: int) -> np.ndarray:
    out = [0]
    acc = 0
    while True:
        acc = g.table[acc][x]
        if acc == 0:
            break
        out.append(acc)
    return np.asarray(sorted(out), dtype=np.int64)


def normal_subgroups(g: FiniteGroup, *, bound: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    if "normal_subgroups" not in g._cache:
        g._cache["normal_subgroups"] = [s for s in all_subgroups(g, bound=bound)
                                        if s.is_normal()]
    return g._cache["normal_subgroups"]


def characteristic_subgroups(g: FiniteGroup, *, bound: int = DEFAULT_SUBGROUP_BOUND,
                             aut_bound: int = 256) -> list[Subgroup]:
    """Subgroups stable (setwise) under every automorphism of g.

    Stability is tested against a generating set of Aut(g); generator images
    of a generating set determine the whole automorphism group, and the
    equivalence with full-Aut testing is exercised in the test suite.
    """
    if "char_subgroups" not in g._cache:
        gens = automorphism_generators(g, bound=aut_bound)
        subs = all_subgroups(g, bound=bound)
        out = []
        for s in subs:
            mset = set(s.members)
            if all({m.images[x] for x in s.members} == mset for m in gens):
                out.append(s)
        g._cache["char_subgroups"] = out
    return g._cache["char_subgroups"]


def squares_subgroup(g: FiniteGroup) -> Subgroup:
    """The subgroup generated by all squares; characteristic, with elementary
    abelian 2-group quotient (asserted)."""
    sq = {g.table[x][x] for x in g.elements()}
    members = closure(g, sq)
    sub = Subgroup(g, members)
    mset = set(members)
    # x^2 lands in G^2 for every x, so the quotient has exponent 2.
    assert all(g.table[x][x] in mset for x in g.elements())
    return sub


def index_two_count(g: FiniteGroup) -> int:
    """[G : G^2] - 1, the number of index-2 subgroups."""
    return g.order // squares_subgroup(g).order - 1


def z2_u2(groups: list[FiniteGroup]) -> tuple[int, int]:
    """(number of groups with no index-2 subgroup, number with exactly one)."""
    if not groups:
        raise GroupError("empty group list")
    orders = {h.order for h in groups}
    if len(orders) > 1:
        raise GroupError(f"mixed orders in z2/u2 count: {sorted(orders)}")
    counts = [index_two_count(h) for h in groups]
    return sum(1 for c in counts if c == 0), sum(1 for c in counts if c == 1)


@dataclass(frozen=True)
class LatticeSummary:
    """Per-order subgroup counts (all / normal / characteristic)."""

    parent_name: str
    order: int
    rows: tuple[tuple[int, int, int, int], ...]  # (m, sub, normal, char)

    def counts(self, m: int) -> tuple[int, int, int]:
        for row in self.rows:
            if row[0] == m:
                return row[1], row[2], row[3]
        return (0, 0, 0)

    def to_text(self) -> str:
        lines = [f"lattice {self.parent_name} order {self.order}",
                 "m,subgroups,normal,characteristic"]
        lines += [f"{m},{s},{nn},{c}" for (m, s, nn, c) in self.rows]
        return "\n".join(lines) + "\n"


def lattice_summary(g: FiniteGroup, *, bound: int = DEFAULT_SUBGROUP_BOUND,
                    aut_bound: int = 256) -> LatticeSummary:
    subs = all_subgroups(g, bound=bound)
    chars = characteristic_subgroups(g, bound=bound, aut_bound=aut_bound)
    char_keys = {s.members for s in chars}
    rows = []
    divisors = [m for m in range(1, g.order + 1) if g.order % m == 0]
    for m in divisors:
        of_m = [s for s in subs if s.order == m]
        nrm = sum(1 for s in of_m if s.is_normal())
        chr_ = sum(1 for s in of_m if s.members in char_keys)
        rows.append((m, len(of_m), nrm, chr_))
    return LatticeSummary(g.name or "?", g.order, tuple(rows))
