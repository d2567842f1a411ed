"""Named registry of the groups used throughout: every group of each order
up to 24 (in the row order of the published count tables) plus the larger
named examples, with pinned constructions for reproducibility.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from typing import Callable

from .groups import (
    FiniteGroup,
    GroupError,
    alternating_group,
    direct_product,
    from_permutation_generators,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    semidirect_product,
    symmetric_group,
)

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "lookup",
    "lookup_entry",
    "groups_of_order",
    "entries_of_order",
    "all_entries",
    "abelian_p_group",
    "covered_orders",
    "GROUP_COUNTS",
]

# Number of groups of order n for n = 1..24.
GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15)

MAX_FULL_ORDER = 24


class CatalogError(GroupError):
    """Unknown catalog name or uncovered order."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str               # canonical ASCII name (CLI input, CSV headers)
    display: str            # table-style display name
    order: int
    recipe: str
    builder: Callable[[], FiniteGroup] = field(repr=False)
    aliases: tuple[str, ...] = ()

    def group(self) -> FiniteGroup:
        if self.name not in _built:
            g = self.builder()
            if g.order != self.order:
                raise CatalogError(
                    f"catalog entry {self.name}: built order {g.order} != {self.order}")
            g.name = self.name
            _built[self.name] = g
        return _built[self.name]


_entries: list[CatalogEntry] = []
_by_key: dict[str, CatalogEntry] = {}
_built: dict[str, FiniteGroup] = {}

_UNICODE_MAP = str.maketrans({
    "×": "x", "⋊": ":", "−": "-",
    "₀": "0", "₁": "1", "₂": "2", "₃": "3", "₄": "4",
    "₅": "5", "₆": "6", "₇": "7", "₈": "8", "₉": "9",
    "𝔽": "F",
})


def _normalize(name: str) -> str:
    return name.translate(_UNICODE_MAP).replace(" ", "").casefold()


def _register(name: str, display: str, order: int, recipe: str,
              builder: Callable[[], FiniteGroup], aliases: tuple[str, ...] = ()) -> None:
    entry = CatalogEntry(name, display, order, recipe, builder, aliases)
    _entries.append(entry)
    for key in (name, display, *aliases):
        _by_key.setdefault(_normalize(key), entry)


# -- constructions -------------------------------------------------------------


def _inversion_action(g: FiniteGroup, h: FiniteGroup, kernel_test=None):
    """Action of h on g where elements outside the kernel invert.

    ``kernel_test(y)`` keeps y acting trivially; default: even indices of a
    cyclic h.
    """
    inv_map = tuple(g.inverse)
    ident = tuple(g.elements())

    def act(y: int):
        trivial = (y % 2 == 0) if kernel_test is None else kernel_test(y)
        return ident if trivial else inv_map

    return act


def _power_action(g: FiniteGroup, u: int):
    """y acts on cyclic g as x -> u^y x."""
    n = g.order

    def act(y: int):
        mult = pow(u, y, n)
        return tuple((mult * x) % n for x in range(n))

    return act


def _sl23() -> FiniteGroup:
    # SL2(F3) acting on the 8 nonzero vectors of F3^2 (lexicographic order).
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        return [idx[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)]
                for (x, y) in vecs]

    gens = [mat_perm([[1, 1], [0, 1]]), mat_perm([[1, 0], [1, 1]])]
    return from_permutation_generators(8, gens)


def _pauli16() -> FiniteGroup:
    # Central product C4 o D4 acting on {±e1, ±e2, ±i e1, ±i e2}.
    x_gate = [1, 0, 3, 2, 5, 4, 7, 6]
    z_gate = [0, 3, 2, 1, 4, 7, 6, 5]
    i_phase = [4, 5, 6, 7, 2, 3, 0, 1]
    return from_permutation_generators(8, [x_gate, z_gate, i_phase])


def _c6xc2_twist() -> FiniteGroup:
    # (C6 x C2) : C2 with u -> u^5, v -> u^3 v on C6 x C2 = <u> x <v>.
    base = direct_product(make_cyclic(6), make_cyclic(2))

    def phi(idx: int) -> int:
        a, b = divmod(idx, 2)
        return ((5 * a + 3 * b) % 6) * 2 + b

    images = tuple(phi(i) for i in range(12))
    ident = tuple(range(12))

    def act(y: int):
        return ident if y == 0 else images

    return semidirect_product(base, make_cyclic(2), act)


def _c3_q2() -> FiniteGroup:
    # C3 : Q2 where the b-side of the quaternion group inverts C3.
    c3, q2 = make_cyclic(3), make_dicyclic(2)
    return semidirect_product(c3, q2, _inversion_action(c3, q2, kernel_test=lambda y: y < 4))


def _c3c3_c2() -> FiniteGroup:
    base = direct_product(make_cyclic(3), make_cyclic(3))
    c2 = make_cyclic(2)
    return semidirect_product(base, c2, _inversion_action(base, c2))


def _c5c5_c3() -> FiniteGroup:
    # (C5 x C5) : C3 via the order-3 matrix [[0,4],[1,4]] mod 5.
    base = direct_product(make_cyclic(5), make_cyclic(5))

    def apply_mat(v: int) -> int:
        x, y = divmod(v, 5)
        return ((4 * y) % 5) * 5 + (x + 4 * y) % 5

    once = tuple(apply_mat(v) for v in range(25))
    twice = tuple(once[v] for v in once)
    ident = tuple(range(25))
    maps = [ident, once, twice]
    assert tuple(once[v] for v in twice) == ident  # matrix has order 3
    return semidirect_product(base, make_cyclic(3), lambda y: maps[y])


def _semidirect_cyclic(r: int, s: int, u: int) -> FiniteGroup:
    """C_r : C_s where the C_s generator acts as x -> u x mod r."""
    cr, cs = make_cyclic(r), make_cyclic(s)
    if pow(u, s, r) != 1:
        raise CatalogError(f"action u={u} has wrong order for C{r}:C{s}")
    return semidirect_product(cr, cs, _power_action(cr, u))


def _swap_action_c2c2():
    def act(y: int):
        return (0, 1, 2, 3) if y % 2 == 0 else (0, 2, 1, 3)
    return act


def _register_all() -> None:
    reg = _register
    # Cyclic, dihedral, and product families by order.
    reg("C1", "C₁", 1, "cyclic(1)", lambda: make_cyclic(1), ("1", "trivial"))
    reg("C2", "C₂", 2, "cyclic(2)", lambda: make_cyclic(2))
    reg("C3", "C₃", 3, "cyclic(3)", lambda: make_cyclic(3))
    reg("C4", "C₄", 4, "cyclic(4)", lambda: make_cyclic(4))
    reg("C2xC2", "C₂ × C₂", 4, "direct(C2, C2)",
        lambda: direct_product(make_cyclic(2), make_cyclic(2)), ("V4", "klein"))
    reg("C5", "C₅", 5, "cyclic(5)", lambda: make_cyclic(5))
    reg("C6", "C₆", 6, "cyclic(6)", lambda: make_cyclic(6))
    reg("S3", "S₃", 6, "symmetric(3)", lambda: symmetric_group(3), ("D3",))
    reg("C7", "C₇", 7, "cyclic(7)", lambda: make_cyclic(7))
    reg("C8", "C₈", 8, "cyclic(8)", lambda: make_cyclic(8))
    reg("C4xC2", "C₄ × C₂", 8, "direct(C4, C2)",
        lambda: direct_product(make_cyclic(4), make_cyclic(2)))
    reg("C2xC2xC2", "C₂ × C₂ × C₂", 8, "direct(C2, C2, C2)",
        lambda: direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)),
        ("C2^3",))
    reg("D4", "D₄", 8, "dihedral(4)", lambda: make_dihedral(4))
    reg("Q2", "Q₂", 8, "dicyclic(2)", lambda: make_dicyclic(2), ("Q8",))
    reg("C9", "C₉", 9, "cyclic(9)", lambda: make_cyclic(9))
    reg("C3xC3", "C₃ × C₃", 9, "direct(C3, C3)",
        lambda: direct_product(make_cyclic(3), make_cyclic(3)))
    reg("C10", "C₁₀", 10, "cyclic(10)", lambda: make_cyclic(10))
    reg("D5", "D₅", 10, "dihedral(5)", lambda: make_dihedral(5))
    reg("C11", "C₁₁", 11, "cyclic(11)", lambda: make_cyclic(11))
    # Order 12, in the published table's row order.
    reg("Q3", "Q₃", 12, "dicyclic(3)", lambda: make_dicyclic(3), ("C3:C4", "Dic3"))
    reg("C12", "C₁₂", 12, "cyclic(12)", lambda: make_cyclic(12))
    reg("A4", "A₄", 12, "alternating(4)", lambda: alternating_group(4))
    reg("D6", "D₆", 12, "dihedral(6)", lambda: make_dihedral(6))
    reg("C6xC2", "C₆ × C₂", 12, "direct(C6, C2)",
        lambda: direct_product(make_cyclic(6), make_cyclic(2)))
    reg("C13", "C₁₃", 13, "cyclic(13)", lambda: make_cyclic(13))
    reg("C14", "C₁₄", 14, "cyclic(14)", lambda: make_cyclic(14))
    reg("D7", "D₇", 14, "dihedral(7)", lambda: make_dihedral(7))
    reg("C15", "C₁₅", 15, "cyclic(15)", lambda: make_cyclic(15))
    # Order 16: five abelian types, then the nine nonabelian groups.
    reg("C16", "C₁₆", 16, "cyclic(16)", lambda: make_cyclic(16))
    reg("C8xC2", "C₈ × C₂", 16, "direct(C8, C2)",
        lambda: direct_product(make_cyclic(8), make_cyclic(2)))
    reg("C4xC4", "C₄ × C₄", 16, "direct(C4, C4)",
        lambda: direct_product(make_cyclic(4), make_cyclic(4)))
    reg("C4xC2xC2", "C₄ × C₂ × C₂", 16, "direct(C4, C2, C2)",
        lambda: direct_product(direct_product(make_cyclic(4), make_cyclic(2)), make_cyclic(2)))
    reg("C2xC2xC2xC2", "C₂ × C₂ × C₂ × C₂", 16, "direct(C2, C2, C2, C2)",
        lambda: direct_product(
            direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)),
            make_cyclic(2)),
        ("C2^4",))
    reg("D8", "D₈", 16, "dihedral(8)", lambda: make_dihedral(8))
    reg("SD16", "SD₁₆", 16, "semidirect(C8, C2, x -> x^3)",
        lambda: _semidirect_cyclic(8, 2, 3), ("QD16",))
    reg("M16", "M₁₆", 16, "semidirect(C8, C2, x -> x^5)",
        lambda: _semidirect_cyclic(8, 2, 5), ("M4(2)",))
    reg("Q4", "Q₄", 16, "dicyclic(4)", lambda: make_dicyclic(4), ("Q16",))
    reg("D4xC2", "D₄ × C₂", 16, "direct(D4, C2)",
        lambda: direct_product(make_dihedral(4), make_cyclic(2)))
    reg("Q2xC2", "Q₂ × C₂", 16, "direct(Q2, C2)",
        lambda: direct_product(make_dicyclic(2), make_cyclic(2)), ("Q8xC2",))
    reg("C4oD4", "C₄ ∘ D₄", 16, "perm_closure(8, X, Z, i)", _pauli16, ("pauli16",))
    reg("C4:C4", "C₄ ⋊ C₄", 16, "semidirect(C4, C4, inversion)",
        lambda: semidirect_product(make_cyclic(4), make_cyclic(4),
                                   _inversion_action(make_cyclic(4), make_cyclic(4))))
    reg("(C2xC2):C4", "(C₂ × C₂) ⋊ C₄", 16, "semidirect(C2xC2, C4, swap)",
        lambda: semidirect_product(direct_product(make_cyclic(2), make_cyclic(2)),
                                   make_cyclic(4), _swap_action_c2c2()))
    reg("C17", "C₁₇", 17, "cyclic(17)", lambda: make_cyclic(17))
    reg("C18", "C₁₈", 18, "cyclic(18)", lambda: make_cyclic(18))
    reg("C6xC3", "C₆ × C₃", 18, "direct(C6, C3)",
        lambda: direct_product(make_cyclic(6), make_cyclic(3)))
    reg("D9", "D₉", 18, "dihedral(9)", lambda: make_dihedral(9))
    reg("C3xS3", "C₃ × S₃", 18, "direct(C3, S3)",
        lambda: direct_product(make_cyclic(3), symmetric_group(3)))
    reg("(C3xC3):C2", "(C₃ × C₃) ⋊ C₂", 18, "semidirect(C3xC3, C2, inversion)",
        _c3c3_c2)
    reg("C19", "C₁₉", 19, "cyclic(19)", lambda: make_cyclic(19))
    reg("C20", "C₂₀", 20, "cyclic(20)", lambda: make_cyclic(20))
    reg("C10xC2", "C₁₀ × C₂", 20, "direct(C10, C2)",
        lambda: direct_product(make_cyclic(10), make_cyclic(2)))
    reg("D10", "D₁₀", 20, "dihedral(10)", lambda: make_dihedral(10))
    reg("Q5", "Q₅", 20, "dicyclic(5)", lambda: make_dicyclic(5))
    reg("F20", "F₂₀", 20, "semidirect(C5, C4, x -> 2x)",
        lambda: _semidirect_cyclic(5, 4, 2), ("C5:C4",))
    reg("C21", "C₂₁", 21, "cyclic(21)", lambda: make_cyclic(21))
    reg("C7:C3", "C₇ ⋊ C₃", 21, "semidirect(C7, C3, x -> 2x)",
        lambda: _semidirect_cyclic(7, 3, 2))
    reg("C22", "C₂₂", 22, "cyclic(22)", lambda: make_cyclic(22))
    reg("D11", "D₁₁", 22, "dihedral(11)", lambda: make_dihedral(11))
    reg("C23", "C₂₃", 23, "cyclic(23)", lambda: make_cyclic(23))
    # Order 24, in the published tables' row order.
    reg("C3:C8", "C₃ ⋊ C₈", 24, "semidirect(C3, C8, inversion)",
        lambda: semidirect_product(make_cyclic(3), make_cyclic(8),
                                   _inversion_action(make_cyclic(3), make_cyclic(8))))
    reg("C24", "C₂₄", 24, "cyclic(24)", lambda: make_cyclic(24))
    reg("SL(2,3)", "SL₂(F₃)", 24, "perm_closure(8, elementary matrices)",
        _sl23, ("SL2F3", "SL23"))
    reg("C3:Q2", "C₃ ⋊ Q₂", 24, "semidirect(C3, Q2, b inverts)", _c3_q2,
        ("Q6", "Dic6", "C3:Q8"))
    reg("C4xS3", "C₄ × S₃", 24, "direct(C4, S3)",
        lambda: direct_product(make_cyclic(4), symmetric_group(3)))
    reg("D12", "D₁₂", 24, "dihedral(12)", lambda: make_dihedral(12))
    reg("C2x(C3:C4)", "C₂ × (C₃ ⋊ C₄)", 24, "direct(C2, C3:C4)",
        lambda: direct_product(make_cyclic(2), _semidirect_cyclic(3, 4, 2)))
    reg("(C6xC2):C2", "(C₆ × C₂) ⋊ C₂", 24, "semidirect(C6xC2, C2, u -> u^5, v -> u^3 v)",
        _c6xc2_twist)
    reg("C12xC2", "C₁₂ × C₂", 24, "direct(C12, C2)",
        lambda: direct_product(make_cyclic(12), make_cyclic(2)))
    reg("C3xD4", "C₃ × D₄", 24, "direct(C3, D4)",
        lambda: direct_product(make_cyclic(3), make_dihedral(4)))
    reg("C3xQ2", "C₃ × Q₂", 24, "direct(C3, Q2)",
        lambda: direct_product(make_cyclic(3), make_dicyclic(2)), ("C3xQ8",))
    reg("S4", "S₄", 24, "symmetric(4)", lambda: symmetric_group(4))
    reg("C2xA4", "C₂ × A₄", 24, "direct(C2, A4)",
        lambda: direct_product(make_cyclic(2), alternating_group(4)))
    reg("C2xC2xS3", "C₂ × C₂ × S₃", 24, "direct(C2, C2, S3)",
        lambda: direct_product(direct_product(make_cyclic(2), make_cyclic(2)),
                               symmetric_group(3)))
    reg("C6xC2xC2", "C₆ × C₂ × C₂", 24, "direct(C6, C2, C2)",
        lambda: direct_product(direct_product(make_cyclic(6), make_cyclic(2)),
                               make_cyclic(2)), ("C2^3xC3",))
    # Named extras used by the larger emptiness examples.
    reg("A5", "A₅", 60, "alternating(5)", lambda: alternating_group(5))
    reg("C5xA4", "C₅ × A₄", 60, "direct(C5, A4)",
        lambda: direct_product(make_cyclic(5), alternating_group(4)))
    reg("C75", "C₇₅", 75, "cyclic(75)", lambda: make_cyclic(75))
    reg("(C5xC5):C3", "(C₅ × C₅) ⋊ C₃", 75, "semidirect(C5xC5, C3, [[0,4],[1,4]] mod 5)",
        _c5c5_c3)
    reg("S5", "S₅", 120, "symmetric(5)", lambda: symmetric_group(5))
    reg("C120", "C₁₂₀", 120, "cyclic(120)", lambda: make_cyclic(120))


_register_all()


# -- public API ----------------------------------------------------------------


def lookup_entry(name: str) -> CatalogEntry:
    key = _normalize(name)
    entry = _by_key.get(key)
    if entry is None:
        close = difflib.get_close_matches(key, list(_by_key), n=1)
        hint = f"; did you mean {_by_key[close[0]].name!r}?" if close else ""
        raise CatalogError(f"unknown group name {name!r}{hint}")
    return entry


def lookup(name: str) -> FiniteGroup:
    """The cached catalog group for a (normalized) name."""
    return lookup_entry(name).group()


def entries_of_order(n: int) -> list[CatalogEntry]:
    if not 1 <= n <= MAX_FULL_ORDER:
        raise CatalogError(
            f"catalog covers complete order lists only for 1 <= n <= {MAX_FULL_ORDER}")
    return [e for e in _entries if e.order == n]


def groups_of_order(n: int) -> list[FiniteGroup]:
    """All groups of order n (complete for n <= 24), in table row order."""
    return [e.group() for e in entries_of_order(n)]


def all_entries() -> list[CatalogEntry]:
    return list(_entries)


def covered_orders() -> list[int]:
    return list(range(1, MAX_FULL_ORDER + 1))


_abelian_cache: dict[tuple[int, tuple[int, ...]], FiniteGroup] = {}


def abelian_p_group(p: int, lam: tuple[int, ...]) -> FiniteGroup:
    """The abelian p-group of type lam (nondecreasing exponents), p^sum <= 256."""
    lam = tuple(int(v) for v in lam)
    if any(v < 1 for v in lam) or any(a > b for a, b in zip(lam, lam[1:])):
        raise CatalogError("type must be a nondecreasing tuple of positive exponents")
    order = p ** sum(lam)
    if order > 256:
        raise CatalogError(f"abelian p-group order {order} exceeds the 256 bound")
    key = (p, lam)
    if key not in _abelian_cache:
        g = make_cyclic(p ** lam[0])
        for e in lam[1:]:
            g = direct_product(g, make_cyclic(p ** e))
        g.name = "x".join(f"C{p**e}" for e in lam)
        _abelian_cache[key] = g
    return _abelian_cache[key]
