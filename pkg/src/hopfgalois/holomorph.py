"""Permutation machinery: regular representations, holomorphs, regular-subgroup
search, the count translation between R(G,[M]) and S(M,[G]), small-degree
direct enumeration, and the orbit-of-identity correspondence.

Regular subgroups are enumerated by backtracking over generating choices
anchored at the smallest uncovered point: a regular group contains exactly one
element mapping the identity point to each point, so the search assigns that
element point by point, restricted to the identity plus fixed-point-free
elements of the ambient group, closing the partial set under multiplication
(and, for the direct enumeration, under conjugation by the regular image of
the base group).  Branches die as soon as the closure would gain a point
stabilizer, exceed the degree, or contain an element order missing from the
target.  Each regular subgroup corresponds to exactly one assignment, so the
search is duplicate-free; member sets are kept in canonical sorted order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import catalog
from .groups import (
    FiniteGroup,
    GroupError,
    automorphism_group,
    is_isomorphic,
)
from .subgroups import Subgroup

__all__ = [
    "Permutation",
    "PermGroup",
    "RegularSubgroupRecord",
    "ConsistencyError",
    "left_regular",
    "holomorph",
    "regular_subgroups_iso_to",
    "count_R",
    "hol_regular_census",
    "direct_R",
    "psi",
    "DIRECT_R_MAX_DEGREE",
]

Permutation = tuple[int, ...]

DIRECT_R_MAX_DEGREE = 8


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. a non-integral count quotient)."""


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """p∘q, applying q first."""
    return tuple(p[v] for v in q)


def _perm_inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _perm_order(p: Permutation) -> int:
    ident = tuple(range(len(p)))
    k, acc = 1, p
    while acc != ident:
        acc = _compose(acc, p)
        k += 1
    return k


def _is_fixed_point_free(p: Permutation) -> bool:
    return all(p[i] != i for i in range(len(p)))


class PermGroup:
    """A permutation group stored as its full, canonically sorted element set."""

    def __init__(self, degree: int, elements, name: str | None = None, *,
                 check: bool = True):
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(sorted(
            tuple(int(v) for v in p) for p in elements))
        self.name = name
        self._hol: tuple[FiniteGroup, list[Permutation]] | None = None
        if check:
            self._validate()

    def _validate(self) -> None:
        d = self.degree
        ident = tuple(range(d))
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise GroupError("duplicate permutations in PermGroup")
        if ident not in elems:
            raise GroupError("PermGroup must contain the identity")
        for p in self.elements:
            if sorted(p) != list(range(d)):
                raise GroupError("non-permutation element")
        for p in self.elements:
            if _perm_inverse(p) not in elems:
                raise GroupError("PermGroup not closed under inverse")
        # Closure under products: generators reach everything, and the set is
        # finite, so product closure follows from a full pair sweep on small
        # groups; on big ones spot-check rows against one fixed element.
        probe = self.elements[: min(len(self.elements), 64)]
        for p in probe:
            for q in probe:
                if _compose(p, q) not in elems:
                    raise GroupError("PermGroup not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.elements)

    def __repr__(self) -> str:
        return f"PermGroup({self.name or '?'}, degree={self.degree}, order={self.order})"


@dataclass(frozen=True)
class RegularSubgroupRecord:
    """A regular subgroup of an ambient permutation group, with its type."""

    degree: int
    ambient: str
    members: tuple[Permutation, ...]
    iso_class: str

    def member_for_point(self, x: int) -> Permutation:
        for p in self.members:
            if p[0] == x:
                return p
        raise GroupError(f"no member maps the identity point to {x}")

    def as_group(self) -> FiniteGroup:
        """Cayley table over points: row x is the member sending 0 to x."""
        table = [self.member_for_point(x) for x in range(self.degree)]
        return FiniteGroup(table, self.iso_class, check=False)

    def is_regular(self) -> bool:
        d = self.degree
        if len(self.members) != d:
            return False
        if len({p[0] for p in self.members}) != d:
            return False
        return all(p == tuple(range(d)) or _is_fixed_point_free(p)
                   for p in self.members)

    def to_text(self) -> str:
        lines = [f"regular-subgroup v1",
                 f"degree {self.degree}",
                 f"ambient {self.ambient}",
                 f"class {self.iso_class}"]
        lines += ["perm " + " ".join(map(str, p)) for p in self.members]
        return "\n".join(lines) + "\n"


# -- regular representations and holomorphs ------------------------------------


def left_regular(g: FiniteGroup) -> PermGroup:
    """λ(G): x -> a*x for each a; the rows of the Cayley table."""
    elems = [tuple(row) for row in g.table]
    return PermGroup(g.order, elems, f"lambda({g.name or '?'})", check=False)


def holomorph(n: FiniteGroup, *, aut_bound: int = 64) -> PermGroup:
    """Hol(N) = <λ(N), Aut(N)> inside Sym(N), one permutation per (n, phi) pair."""
    auts = [m.images for m in automorphism_group(n, bound=aut_bound)]
    table = n.table
    elems = []
    for a in n.elements():
        row = table[a]
        for phi in auts:
            elems.append(tuple(row[phi[x]] for x in range(n.order)))
    pg = PermGroup(n.order, elems, f"Hol({n.name or '?'})", check=False)
    if pg.order != n.order * len(auts):
        raise ConsistencyError("holomorph order mismatch")
    pg._hol = (n, auts)
    return pg


# -- the packed search inside a holomorph --------------------------------------


class _HolAmbient:
    """Precomputed multiplication data for Hol(N) with elements (a, phi)."""

    def __init__(self, base: FiniteGroup, auts: list[Permutation]):
        self.base = base
        self.auts = auts
        n, A = base.order, len(auts)
        self.n, self.A = n, A
        aindex = {phi: i for i, phi in enumerate(auts)}
        self.atab = [[aindex[tuple(p1[v] for v in p2)] for p2 in auts] for p1 in auts]
        self.id_code = aindex[tuple(range(n))]
        inv = base.inverse
        tab = base.table
        # (a, phi) has a fixed point iff a = x * phi(x)^-1 for some x.
        self.bad = [frozenset(tab[x][inv[phi[x]]] for x in range(n)) for phi in auts]
        self._order_memo: dict[int, int] = {}

    def mul(self, e1: int, e2: int) -> int:
        A = self.A
        a1, p1 = divmod(e1, A)
        a2, p2 = divmod(e2, A)
        return self.base.table[a1][self.auts[p1][a2]] * A + self.atab[p1][p2]

    def order_of(self, e: int) -> int:
        memo = self._order_memo
        if e in memo:
            return memo[e]
        ident = self.id_code
        k, acc = 1, e
        while acc != ident:
            acc = self.mul(acc, e)
            k += 1
        memo[e] = k
        return k

    def perm_of(self, e: int) -> Permutation:
        a, p = divmod(e, self.A)
        row = self.base.table[a]
        phi = self.auts[p]
        return tuple(row[phi[x]] for x in range(self.n))

    def candidates(self, spectrum: frozenset[int]) -> list[list[int]]:
        cand: list[list[int]] = [[] for _ in range(self.n)]
        for x in range(1, self.n):
            row = cand[x]
            for p in range(self.A):
                if x not in self.bad[p]:
                    code = x * self.A + p
                    if self.order_of(code) in spectrum:
                        row.append(code)
        return cand


def _search_regular_packed(amb: _HolAmbient, spectrum: frozenset[int]):
    """All regular subgroups of Hol(N) whose element orders lie in spectrum.

    Yields (sorted member codes, point table) pairs.
    """
    n, A = amb.n, amb.A
    tab = amb.base.table
    auts = amb.auts
    atab = amb.atab
    bad = amb.bad
    id_code = amb.id_code
    order_of = amb.order_of
    cand = amb.candidates(spectrum)
    found = []

    def attempt(slot: list[int], elems: list[int], code: int) -> bool:
        pending: list[int] = []
        if not _place(slot, elems, pending, code):
            return False
        while pending:
            u = pending.pop()
            ua, up = divmod(u, A)
            urow = tab[ua]
            uphi = auts[up]
            for v in list(elems):
                va, vp = divmod(v, A)
                w = urow[uphi[va]] * A + atab[up][vp]
                if not _place(slot, elems, pending, w):
                    return False
                w2 = tab[va][auts[vp][ua]] * A + atab[vp][up]
                if not _place(slot, elems, pending, w2):
                    return False
        return True

    def _place(slot: list[int], elems: list[int], pending: list[int], code: int) -> bool:
        a, p = divmod(code, A)
        existing = slot[a]
        if existing != -1:
            return existing == code
        if a in bad[p]:
            return False
        if order_of(code) not in spectrum:
            return False
        slot[a] = code
        elems.append(code)
        pending.append(code)
        return True

    def dfs(slot: list[int], elems: list[int]) -> None:
        x = -1
        for i in range(1, n):
            if slot[i] == -1:
                x = i
                break
        if x == -1:
            members = tuple(sorted(elems))
            ptab = [amb.perm_of(slot[i]) for i in range(n)]
            found.append((members, ptab))
            return
        for code in cand[x]:
            slot2 = slot[:]
            elems2 = elems[:]
            if attempt(slot2, elems2, code):
                dfs(slot2, elems2)

    slot0 = [-1] * n
    slot0[0] = id_code
    dfs(slot0, [id_code])
    found.sort(key=lambda t: t[0])
    return found


# -- the generic tuple-based search --------------------------------------------


def _search_regular_perms(degree: int, buckets: dict[int, list[Permutation]],
                          spectrum: frozenset[int],
                          conj_pairs: tuple[tuple[Permutation, Permutation], ...] = ()):
    """Regular sets {nu_x} with nu_x(0) = x, closed under composition (and
    under the given conjugations), with all member orders in spectrum.

    Yields (sorted members, point table = members indexed by nu_x(0)).
    """
    ident = tuple(range(degree))
    order_memo: dict[Permutation, int] = {ident: 1}

    def order_of(p: Permutation) -> int:
        if p not in order_memo:
            order_memo[p] = _perm_order(p)
        return order_memo[p]

    found = []

    def place(slot: dict, elems: list, pending: list, p: Permutation) -> bool:
        x = p[0]
        existing = slot.get(x)
        if existing is not None:
            return existing == p
        if not _is_fixed_point_free(p):
            return False
        if order_of(p) not in spectrum:
            return False
        slot[x] = p
        elems.append(p)
        pending.append(p)
        return True

    def attempt(slot: dict, elems: list, p: Permutation) -> bool:
        pending: list[Permutation] = []
        if not place(slot, elems, pending, p):
            return False
        while pending:
            u = pending.pop()
            for t, ti in conj_pairs:
                w = _compose(t, _compose(u, ti))
                if w != ident and not place(slot, elems, pending, w):
                    return False
            for v in list(elems):
                if not place(slot, elems, pending, _compose(u, v)):
                    return False
                if not place(slot, elems, pending, _compose(v, u)):
                    return False
        return True

    def dfs(slot: dict, elems: list) -> None:
        x = -1
        for i in range(1, degree):
            if i not in slot:
                x = i
                break
        if x == -1:
            members = tuple(sorted(elems))
            ptab = [slot[i] for i in range(degree)]
            found.append((members, ptab))
            return
        for p in buckets.get(x, ()):
            slot2 = dict(slot)
            elems2 = elems[:]
            if attempt(slot2, elems2, p):
                dfs(slot2, elems2)

    dfs({0: ident}, [ident])
    found.sort(key=lambda t: t[0])
    return found


# -- classification -------------------------------------------------------------


def _profile_of_table(table: list[Permutation]) -> tuple[tuple[int, int], ...]:
    n = len(table)
    counts: dict[int, int] = {}
    for x in range(n):
        k, acc = 1, x
        while acc != 0:
            acc = table[acc][x]
            k += 1
        counts[k] = counts.get(k, 0) + 1
    return tuple(sorted(counts.items()))


def _catalog_profiles(order: int) -> dict[tuple, list[str]]:
    out: dict[tuple, list[str]] = {}
    for entry in catalog.entries_of_order(order):
        g = entry.group()
        out.setdefault(g.order_profile(), []).append(entry.name)
    return out


def _classify_point_table(ptab: list[Permutation], order: int) -> str:
    profiles = _catalog_profiles(order)
    prof = _profile_of_table(ptab)
    names = profiles.get(prof)
    if not names:
        raise ConsistencyError(f"no catalog class of order {order} matches profile {prof}")
    if len(names) == 1:
        return names[0]
    g = FiniteGroup(ptab, check=False)
    for name in names:
        if is_isomorphic(g, catalog.lookup(name)) is not None:
            return name
    raise ConsistencyError("profile-tied classification failed")


# -- public operations -----------------------------------------------------------


def hol_regular_census(m: FiniteGroup) -> dict[str, int]:
    """Isomorphism-class census of all regular subgroups of Hol(m).

    Cached on the group; class names follow the catalog for |m| <= 24.
    """
    if "hol_census" not in m._cache:
        auts = [mp.images for mp in automorphism_group(m)]
        amb = _HolAmbient(m, auts)
        divisors = frozenset(d for d in range(1, m.order + 1) if m.order % d == 0)
        results = _search_regular_packed(amb, divisors)
        census: dict[str, int] = {}
        classes: list[str] = []
        for _, ptab in results:
            name = _classify_point_table(ptab, m.order)
            classes.append(name)
            census[name] = census.get(name, 0) + 1
        m._cache["hol_census"] = census
        m._cache["hol_records"] = [
            (members, classes[i]) for i, (members, _) in enumerate(results)]
        m._cache["hol_ambient"] = amb
    return m._cache["hol_census"]


def regular_subgroups_iso_to(ambient: PermGroup, target: FiniteGroup
                             ) -> list[RegularSubgroupRecord]:
    """All regular subgroups of the ambient group isomorphic to target."""
    if ambient.degree != target.order:
        raise GroupError("ambient degree must equal the target order")
    label = ambient.name or "?"
    spectrum = frozenset(target.element_orders())
    if ambient._hol is not None:
        base, _ = ambient._hol
        hol_regular_census(base)
        amb: _HolAmbient = base._cache["hol_ambient"]
        records = []
        target_name = _classify_point_table(
            [tuple(row) for row in target.table], target.order) \
            if target.order <= catalog.MAX_FULL_ORDER else None
        for members, cls in base._cache["hol_records"]:
            if target_name is not None:
                keep = cls == target_name
            else:
                grp = FiniteGroup([amb.perm_of(c) for c in sorted(
                    members, key=lambda c: c // amb.A)], check=False)
                keep = is_isomorphic(grp, target) is not None
            if keep:
                perms = tuple(sorted(amb.perm_of(c) for c in members))
                records.append(RegularSubgroupRecord(
                    ambient.degree, label, perms, cls))
        records.sort(key=lambda r: r.members)
        return records
    # Generic ambient: bucket the fixed-point-free elements by image of 0.
    buckets: dict[int, list[Permutation]] = {}
    for p in ambient.elements:
        if _is_fixed_point_free(p) and _perm_order(p) in spectrum:
            buckets.setdefault(p[0], []).append(p)
    results = _search_regular_perms(ambient.degree, buckets, spectrum)
    records = []
    for members, ptab in results:
        grp = FiniteGroup(ptab, check=False)
        iso = is_isomorphic(grp, target)
        if iso is None:
            continue
        cls = target.name or _classify_point_table(ptab, target.order)
        records.append(RegularSubgroupRecord(ambient.degree, label, members, cls))
    records.sort(key=lambda r: r.members)
    return records


def count_R(g_name: str, m_name: str) -> int:
    """|R(G,[M])| = (|Aut(G)| / |Aut(M)|) * |S(M,[G])|, computed from the
    regular-subgroup census of Hol(M).  The division must be exact."""
    g = catalog.lookup(g_name)
    m = catalog.lookup(m_name)
    if g.order != m.order:
        raise catalog.CatalogError(
            f"order mismatch: |{g_name}| = {g.order}, |{m_name}| = {m.order}")
    census = hol_regular_census(m)
    s_count = census.get(catalog.lookup_entry(g_name).name, 0)
    aut_g = len(automorphism_group(g))
    aut_m = len(automorphism_group(m))
    total, rem = divmod(aut_g * s_count, aut_m)
    if rem:
        raise ConsistencyError(
            f"non-integral count for R({g_name},[{m_name}]): "
            f"{aut_g}*{s_count}/{aut_m}")
    return total


def direct_R(g: FiniteGroup) -> list[RegularSubgroupRecord]:
    """All regular subgroups of Sym(G) normalized by λ(G), for |g| <= 8."""
    d = g.order
    if d > DIRECT_R_MAX_DEGREE:
        raise GroupError(
            f"direct enumeration supports degree <= {DIRECT_R_MAX_DEGREE}, got {d}")
    if "direct_R" in g._cache:
        return g._cache["direct_R"]
    spectrum = frozenset(k for k in range(1, d + 1) if d % k == 0)
    lam_gens = [tuple(g.table[x]) for x in g.minimal_generators()]
    conj_pairs = tuple((t, _perm_inverse(t)) for t in lam_gens)
    buckets: dict[int, list[Permutation]] = {x: [] for x in range(1, d)}
    for p in itertools.permutations(range(d)):
        if p[0] != 0 and _is_fixed_point_free(p) and _perm_order(p) in spectrum:
            buckets[p[0]].append(p)
    results = _search_regular_perms(d, buckets, spectrum, conj_pairs)
    label = f"Sym({d}) / lambda({g.name or '?'})"
    records = []
    for members, ptab in results:
        cls = _classify_point_table(ptab, d)
        records.append(RegularSubgroupRecord(d, label, members, cls))
    g._cache["direct_R"] = records
    return records


def psi(record: RegularSubgroupRecord, p_members, g: FiniteGroup) -> Subgroup:
    """Orbit of the identity point under a λ(G)-stable subgroup P of the record.

    Returns the image as a subgroup of g; the orbit must close under g's
    operation and have exactly |P| points (violations signal a broken
    precondition).
    """
    members = set(record.members)
    pset = {tuple(p) for p in p_members}
    if not pset <= members:
        raise GroupError("P is not a subset of the record's members")
    for a in pset:
        for b in pset:
            if _compose(a, b) not in pset:
                raise GroupError("P is not closed under composition")
    lam_gens = [tuple(g.table[x]) for x in g.minimal_generators()]
    for t in lam_gens:
        ti = _perm_inverse(t)
        conj = {_compose(t, _compose(q, ti)) for q in pset}
        if conj != pset:
            raise GroupError("P is not stable under conjugation by lambda(G)")
    orbit = sorted(q[0] for q in pset)
    if len(set(orbit)) != len(pset):
        raise ConsistencyError("orbit size differs from |P|")
    oset = set(orbit)
    for a in orbit:
        for b in orbit:
            if g.table[a][b] not in oset:
                raise ConsistencyError("orbit is not closed under the group operation")
    return Subgroup(g, tuple(orbit))
