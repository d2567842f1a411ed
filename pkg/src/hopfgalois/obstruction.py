"""Emptiness certificates and census tables.

The criterion: for groups G, M of equal order n, the orbit-of-identity
correspondence injects the characteristic subgroups of a regular copy of M
into the subgroups of G order by order, so if some divisor m has more
characteristic subgroups of M than subgroups of G, the pairing R(G,[M]) is
empty.  A NO_OBSTRUCTION verdict never claims nonemptiness.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import catalog
from .groups import FiniteGroup
from .holomorph import ConsistencyError, count_R
from .subgroups import all_subgroups, characteristic_subgroups

__all__ = [
    "ObstructionReport",
    "CensusTable",
    "char_obstruction",
    "empty_pairs_for_order",
    "census",
    "EMPTY_CERTIFIED",
    "NO_OBSTRUCTION",
]

EMPTY_CERTIFIED = "EMPTY_CERTIFIED"
NO_OBSTRUCTION = "NO_OBSTRUCTION"


@dataclass(frozen=True)
class ObstructionReport:
    g_name: str
    m_name: str
    verdict: str
    witness: tuple[int, int, int] | None = None  # (m, |CharSub_m(M)|, |Sub_m(G)|)

    def __post_init__(self):
        if self.verdict == EMPTY_CERTIFIED:
            if self.witness is None:
                raise ConsistencyError("certified-empty report requires a witness")
            m, char_m, sub_g = self.witness
            if not char_m > sub_g:
                raise ConsistencyError("witness does not violate the inequality")

    @property
    def certified_empty(self) -> bool:
        return self.verdict == EMPTY_CERTIFIED

    def summary(self) -> str:
        if self.certified_empty:
            m, c, s = self.witness
            return f"EMPTY: m={m}, CharSub={c} > Sub={s}"
        return NO_OBSTRUCTION


def _subgroup_order_counts(g: FiniteGroup) -> dict[int, int]:
    counts: dict[int, int] = {}
    for s in all_subgroups(g):
        counts[s.order] = counts.get(s.order, 0) + 1
    return counts


def _char_order_counts(g: FiniteGroup) -> dict[int, int]:
    counts: dict[int, int] = {}
    for s in characteristic_subgroups(g):
        counts[s.order] = counts.get(s.order, 0) + 1
    return counts


def char_obstruction(g: FiniteGroup, m: FiniteGroup) -> ObstructionReport:
    """Scan divisors in increasing order for |CharSub_d(M)| > |Sub_d(G)|.

    Returns the first witness found, else NO_OBSTRUCTION.
    """
    if g.order != m.order:
        raise catalog.CatalogError(
            f"order mismatch: |G| = {g.order}, |M| = {m.order}")
    n = g.order
    sub_g = _subgroup_order_counts(g)
    char_m = _char_order_counts(m)
    for d in range(1, n + 1):
        if n % d:
            continue
        c = char_m.get(d, 0)
        s = sub_g.get(d, 0)
        if c > s:
            return ObstructionReport(g.name or "?", m.name or "?",
                                     EMPTY_CERTIFIED, (d, c, s))
    return ObstructionReport(g.name or "?", m.name or "?", NO_OBSTRUCTION)


def empty_pairs_for_order(n: int, groups: list[FiniteGroup] | None = None
                          ) -> tuple[int, list[tuple[str, str]], int]:
    """(|Z|, certified pairs, |R|^2) over all ordered pairs of groups of order n."""
    if groups is None:
        groups = catalog.groups_of_order(n)
    if any(g.order != n for g in groups):
        raise catalog.CatalogError("groups do not all have the stated order")
    pairs = []
    for g in groups:
        for m in groups:
            report = char_obstruction(g, m)
            if report.certified_empty:
                pairs.append((g.name or "?", m.name or "?"))
    return len(pairs), pairs, len(groups) ** 2


PROVENANCE_COMPUTED = "computed"
PROVENANCE_OBSTRUCTION = "obstruction-zero"


@dataclass(frozen=True)
class CensusTable:
    """|R(G,[M])| over all ordered pairs of groups of one order.

    Cells certified empty by the characteristic-subgroup criterion carry the
    obstruction-zero provenance tag and must agree with the computed zero.
    """

    order: int
    g_names: tuple[str, ...]
    m_names: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]
    provenance: tuple[tuple[str, ...], ...]

    def cell(self, g_name: str, m_name: str) -> int:
        return self.cells[self.g_names.index(g_name)][self.m_names.index(m_name)]

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.m_names)]
        for gname, row in zip(self.g_names, self.cells):
            lines.append(gname + "," + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "order": self.order,
            "g_names": list(self.g_names),
            "m_names": list(self.m_names),
            "cells": [list(r) for r in self.cells],
            "provenance": [list(r) for r in self.provenance],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _census_column(args: tuple[int, str]) -> tuple[str, list[int]]:
    n, m_name = args
    g_names = [e.name for e in catalog.entries_of_order(n)]
    return m_name, [count_R(g_name, m_name) for g_name in g_names]


def census(n: int, *, jobs: int = 1) -> CensusTable:
    """The full |R(G,[M])| matrix for order n (catalog order, n <= 24).

    Every cell is computed through the holomorph census; obstruction-certified
    cells are tagged and cross-checked against the computed zero.
    """
    if n > catalog.MAX_FULL_ORDER:
        raise catalog.CatalogError(f"census requires n <= {catalog.MAX_FULL_ORDER}")
    entries = catalog.entries_of_order(n)
    names = tuple(e.name for e in entries)
    columns: dict[str, list[int]] = {}
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for m_name, col in pool.map(_census_column, [(n, m) for m in names]):
                columns[m_name] = col
    else:
        for m_name in names:
            columns[m_name] = _census_column((n, m_name))[1]
    cells = tuple(
        tuple(columns[m_name][i] for m_name in names)
        for i in range(len(names)))
    groups = [e.group() for e in entries]
    provenance = []
    for i, g in enumerate(groups):
        row = []
        for j, m in enumerate(groups):
            report = char_obstruction(g, m)
            if report.certified_empty:
                if cells[i][j] != 0:
                    raise ConsistencyError(
                        f"obstruction-certified cell ({names[i]},{names[j]}) "
                        f"computed nonzero {cells[i][j]}")
                row.append(PROVENANCE_OBSTRUCTION)
            else:
                row.append(PROVENANCE_COMPUTED)
        provenance.append(tuple(row))
    return CensusTable(n, names, names, cells, tuple(provenance))
