"""Finite groups as Cayley tables over element indices 0..n-1.

The identity is always element 0.  All constructors validate the table laws
(identity, Latin square, associativity, inverses) with numpy, so a
``FiniteGroup`` that exists can be trusted downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "GroupMap",
    "GroupError",
    "ClosureBoundError",
    "make_cyclic",
    "make_dihedral",
    "make_dicyclic",
    "from_permutation_generators",
    "direct_product",
    "semidirect_product",
    "symmetric_group",
    "alternating_group",
    "closure",
    "is_isomorphic",
    "automorphism_group",
    "automorphism_generators",
    "abelian_primary_basis",
    "group_to_text",
    "group_from_text",
    "DEFAULT_AUT_BOUND",
    "DEFAULT_CLOSURE_BOUND",
]

DEFAULT_CLOSURE_BOUND = 10**6
DEFAULT_AUT_BOUND = 64

# Exhaustive associativity checking is vectorized, so it stays affordable well
# past the documented 64 threshold; above this we fall back to sampling.
_EXHAUSTIVE_ASSOC_BOUND = 512


class GroupError(ValueError):
    """Invalid group data or unsupported group operation."""


class ClosureBoundError(GroupError):
    """A generated closure exceeded its configured size bound."""


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the index of the product a*b.  Element 0 is the
    identity.  Instances are immutable after construction and safe to share.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str | None = None,
                 *, check: bool = True):
        self.table: list[list[int]] = [list(map(int, row)) for row in table]
        self.order: int = len(self.table)
        self.name = name
        if self.order == 0:
            raise GroupError("empty multiplication table")
        if check:
            self._validate()
        self.inverse: list[int] = [row.index(0) for row in self.table]
        self._cache: dict = {}

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        n = self.order
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (n, n):
            raise GroupError("multiplication table is not square")
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entry out of range")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise GroupError("element 0 is not a two-sided identity")
        ordered = np.arange(n)
        if not (np.array_equal(np.sort(t, axis=1), np.tile(ordered, (n, 1)))
                and np.array_equal(np.sort(t, axis=0), np.tile(ordered[:, None], (1, n)))):
            raise GroupError("table is not a Latin square")
        if n <= _EXHAUSTIVE_ASSOC_BOUND:
            # (a*b)*c == a*(b*c) for all triples, fully vectorized:
            # t[t][a,b,c] = t[t[a,b],c] and t[:,t][a,b,c] = t[a,t[b,c]].
            if not np.array_equal(t[t], t[:, t]):
                raise GroupError("multiplication is not associative")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, 4096))
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise GroupError("multiplication is not associative")
        # Latin square + identity gives two-sided inverses; locate them now.
        if any(0 not in row for row in self.table):
            raise GroupError("an element has no inverse")

    # -- basic operations ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, t: int, a: int) -> int:
        """t * a * t^-1."""
        return self.table[self.table[t][a]][self.inverse[t]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def element_order(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise GroupError(f"element {x} out of range")
        k, acc = 1, x
        while acc != 0:
            acc = self.table[acc][x]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    # -- cached invariants ----------------------------------------------------

    def np_table(self) -> np.ndarray:
        if "np" not in self._cache:
            self._cache["np"] = np.asarray(self.table, dtype=np.int32)
        return self._cache["np"]

    @property
    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            t = self.np_table()
            self._cache["abelian"] = bool(np.array_equal(t, t.T))
        return self._cache["abelian"]

    def element_orders(self) -> tuple[int, ...]:
        if "orders" not in self._cache:
            self._cache["orders"] = tuple(self.element_order(x) for x in self.elements())
        return self._cache["orders"]

    def order_profile(self) -> tuple[tuple[int, int], ...]:
        """Sorted (element order, multiplicity) pairs; an isomorphism invariant."""
        if "profile" not in self._cache:
            counts: dict[int, int] = {}
            for o in self.element_orders():
                counts[o] = counts.get(o, 0) + 1
            self._cache["profile"] = tuple(sorted(counts.items()))
        return self._cache["profile"]

    def center(self) -> tuple[int, ...]:
        if "center" not in self._cache:
            t = self.table
            self._cache["center"] = tuple(
                z for z in self.elements()
                if all(t[z][a] == t[a][z] for a in self.elements())
            )
        return self._cache["center"]

    def derived_subgroup(self) -> tuple[int, ...]:
        """Member indices of the commutator subgroup."""
        if "derived" not in self._cache:
            t, inv = self.table, self.inverse
            comms = {
                t[t[a][b]][t[inv[a]][inv[b]]]
                for a in self.elements() for b in self.elements()
            }
            self._cache["derived"] = closure(self, comms)
        return self._cache["derived"]

    def minimal_generators(self) -> tuple[int, ...]:
        """Greedy minimal generating set: repeatedly adjoin the smallest
        element outside the current closure."""
        if "gens" not in self._cache:
            gens: list[int] = []
            known = {0}
            for x in self.elements():
                if x not in known:
                    gens.append(x)
                    known = set(closure(self, gens))
                    if len(known) == self.order:
                        break
            self._cache["gens"] = tuple(gens)
        return self._cache["gens"]

    def conjugacy_class_count(self) -> int:
        if "nclasses" not in self._cache:
            seen: set[int] = set()
            count = 0
            for x in self.elements():
                if x in seen:
                    continue
                count += 1
                seen.update(self.conj(t, x) for t in self.elements())
            self._cache["nclasses"] = count
        return self._cache["nclasses"]

    def iso_fingerprint(self) -> tuple:
        """Cheap isomorphism-invariant screen used before backtracking."""
        if "fingerprint" not in self._cache:
            derived = self.derived_subgroup()
            series = [len(derived)]
            sub = derived
            while len(sub) > 1:
                nxt = _derived_of_subset(self, sub)
                if len(nxt) == len(sub):
                    break
                series.append(len(nxt))
                sub = nxt
            self._cache["fingerprint"] = (
                self.order,
                self.order_profile(),
                self.is_abelian,
                len(self.center()),
                tuple(series),
                self.conjugacy_class_count(),
            )
        return self._cache["fingerprint"]

    def __repr__(self) -> str:
        label = self.name or "?"
        return f"FiniteGroup({label}, order={self.order})"


def _derived_of_subset(g: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    t, inv = g.table, g.inverse
    comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in members for b in members}
    return closure(g, comms)


def closure(g: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Sorted member tuple of the subgroup generated by ``gens``."""
    gen_list = sorted({int(x) for x in gens} - {0})
    members = {0}
    frontier = [0]
    t = g.table
    while frontier:
        nxt = []
        for e in frontier:
            row = t[e]
            for x in gen_list:
                p = row[x]
                if p not in members:
                    members.add(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(sorted(members))


# -- constructors -------------------------------------------------------------


def make_cyclic(n: int, name: str | None = None) -> FiniteGroup:
    """Cyclic group C_n with table[a][b] = (a+b) mod n."""
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name or f"C{n}")


def make_dihedral(m: int, name: str | None = None) -> FiniteGroup:
    """Dihedral group of order 2m: <r, s | r^m = s^2 = 1, s r s = r^-1>.

    Indexing: r^i -> i, r^i s -> m + i.
    """
    if m < 1:
        raise GroupError("dihedral parameter must be >= 1")
    n = 2 * m
    table = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            table[i][j] = (i + j) % m                    # r^i r^j
            table[i][m + j] = m + (i + j) % m            # r^i (r^j s)
            table[m + i][j] = m + (i - j) % m            # (r^i s) r^j
            table[m + i][m + j] = (i - j) % m            # (r^i s)(r^j s)
    return FiniteGroup(table, name or f"D{m}")


def make_dicyclic(m: int, name: str | None = None) -> FiniteGroup:
    """Dicyclic group of order 4m: <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1>.

    Indexing: a^i -> i, a^i b -> 2m + i.  Q_2 is the quaternion group.
    """
    if m < 1:
        raise GroupError("dicyclic parameter must be >= 1")
    k = 2 * m
    n = 4 * m
    table = [[0] * n for _ in range(n)]
    for i in range(k):
        for j in range(k):
            table[i][j] = (i + j) % k
            table[i][k + j] = k + (i + j) % k
            table[k + i][j] = k + (i - j) % k
            table[k + i][k + j] = (i - j + m) % k
    return FiniteGroup(table, name or f"Q{m}")


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Permutation product p∘q, applying q first."""
    return tuple(p[q[i]] for i in range(len(p)))


def from_permutation_generators(degree: int, gens: Sequence[Sequence[int]],
                                name: str | None = None,
                                *, bound: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Close permutation generators under composition and return the Cayley table.

    Element 0 is the identity; the remaining element order is breadth-first
    discovery order, which is deterministic for a fixed generator list.
    """
    if degree < 1:
        raise GroupError("degree must be >= 1")
    norm_gens = []
    for p in gens:
        p = tuple(int(x) for x in p)
        if sorted(p) != list(range(degree)):
            raise GroupError(f"{p} is not a permutation of 0..{degree - 1}")
        norm_gens.append(p)
    identity = tuple(range(degree))
    elems: list[tuple[int, ...]] = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for gp in norm_gens:
                p = _compose(e, gp)
                if p not in index:
                    if len(elems) >= bound:
                        raise ClosureBoundError(
                            f"closure exceeded bound {bound}")
                    index[p] = len(elems)
                    elems.append(p)
                    nxt.append(p)
        frontier = nxt
    table = [[index[_compose(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name)


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None,
                   *, bound: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Direct product on index pairs flattened row-major: (x, y) -> x*|h| + y."""
    n = g.order * h.order
    if n > bound:
        raise ClosureBoundError(f"product order {n} exceeds bound {bound}")
    hn = h.order
    gt, ht = g.table, h.table
    table = [[0] * n for _ in range(n)]
    for x1 in range(g.order):
        for y1 in range(hn):
            row = table[x1 * hn + y1]
            gr, hr = gt[x1], ht[y1]
            for x2 in range(g.order):
                base = gr[x2] * hn
                for y2 in range(hn):
                    row[x2 * hn + y2] = base + hr[y2]
    if name is None and g.name and h.name:
        name = f"{g.name}x{h.name}"
    return FiniteGroup(table, name)


def semidirect_product(g: FiniteGroup, h: FiniteGroup,
                       action: Sequence[Sequence[int]] | Callable[[int], Sequence[int]],
                       name: str | None = None,
                       *, bound: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Semidirect product g ⋊ h for an action of h on g by automorphisms.

    ``action`` maps each h-element index to an image array on g (an
    automorphism).  Verified on construction: each image must be a bijective
    endomorphism and y -> action(y) must be a homomorphism into Aut(g).
    Pairs are flattened row-major: (x, y) -> x*|h| + y, with
    (x, y)(x', y') = (x * action(y)(x'), y y').
    """
    n = g.order * h.order
    if n > bound:
        raise ClosureBoundError(f"product order {n} exceeds bound {bound}")
    if callable(action):
        maps = [tuple(int(v) for v in action(y)) for y in h.elements()]
    else:
        maps = [tuple(int(v) for v in action[y]) for y in h.elements()]
    if len(maps) != h.order:
        raise GroupError("action must assign one map per h element")
    for y, img in enumerate(maps):
        if sorted(img) != list(range(g.order)):
            raise GroupError(f"action({y}) is not a bijection on g")
        gt = g.table
        for a in g.elements():
            for b in g.elements():
                if img[gt[a][b]] != gt[img[a]][img[b]]:
                    raise GroupError(f"action({y}) is not an automorphism of g")
    for y1 in h.elements():
        for y2 in h.elements():
            expected = maps[h.table[y1][y2]]
            composed = _compose(maps[y1], maps[y2])
            if tuple(expected) != composed:
                raise GroupError("action is not a homomorphism h -> Aut(g)")
    hn = h.order
    gt, ht = g.table, h.table
    table = [[0] * n for _ in range(n)]
    for x1 in range(g.order):
        for y1 in range(hn):
            row = table[x1 * hn + y1]
            act = maps[y1]
            gr, hr = gt[x1], ht[y1]
            for x2 in range(g.order):
                base = gr[act[x2]] * hn
                for y2 in range(hn):
                    row[x2 * hn + y2] = base + hr[y2]
    return FiniteGroup(table, name)


def symmetric_group(n: int, name: str | None = None) -> FiniteGroup:
    """S_n realized by closing the transposition (0 1) and the n-cycle."""
    if n == 1:
        return make_cyclic(1, name or "S1")
    swap = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    gens = [swap] if n == 2 else [swap, cycle]
    return from_permutation_generators(n, gens, name or f"S{n}")


def alternating_group(n: int, name: str | None = None) -> FiniteGroup:
    """A_n generated by (0 1 2) and an even-parity long cycle."""
    if n < 3:
        return make_cyclic(1, name or f"A{n}")
    three_cycle = [1, 2, 0] + list(range(3, n))
    if n == 3:
        gens = [three_cycle]
    elif n % 2 == 1:
        gens = [three_cycle, list(range(1, n)) + [0]]          # n-cycle, even
    else:
        gens = [three_cycle, [0] + list(range(2, n)) + [1]]    # (n-1)-cycle, even
    return from_permutation_generators(n, gens, name or f"A{n}")


# -- homomorphisms and isomorphisms -------------------------------------------


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism between finite groups, stored as an image array."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    is_isomorphism: bool = field(default=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """self ∘ inner (apply ``inner`` first)."""
        return GroupMap(inner.source, self.target,
                        tuple(self.images[x] for x in inner.images),
                        self.is_isomorphism and inner.is_isomorphism)

    def is_homomorphism(self) -> bool:
        s, t, img = self.source.table, self.target.table, self.images
        return all(img[s[a][b]] == t[img[a]][img[b]]
                   for a in self.source.elements() for b in self.source.elements())

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order


def _extend_map(g: FiniteGroup, gens: Sequence[int], images: Sequence[int],
                h: FiniteGroup) -> list[int] | None:
    """Propagate generator images over <gens> by right multiplication.

    Returns the partial image array (-1 where unreached) or None on a
    homomorphism conflict or loss of injectivity on the generated subgroup.
    Every (element, generator) product is checked, so a conflict-free full
    propagation is a verified homomorphism on <gens>.
    """
    gt, ht = g.table, h.table
    img = [-1] * g.order
    img[0] = 0
    used = {0: 0}
    work = [0]
    while work:
        e = work.pop()
        ie = img[e]
        row, irow = gt[e], ht[ie]
        for x, y in zip(gens, images):
            f = row[x]
            fi = irow[y]
            if img[f] == -1:
                prev = used.get(fi)
                if prev is not None:
                    return None
                img[f] = fi
                used[fi] = f
                work.append(f)
            elif img[f] != fi:
                return None
    return img


def _elements_by_order(h: FiniteGroup) -> dict[int, list[int]]:
    if "by_order" not in h._cache:
        buckets: dict[int, list[int]] = {}
        for x, o in enumerate(h.element_orders()):
            buckets.setdefault(o, []).append(x)
        h._cache["by_order"] = buckets
    return h._cache["by_order"]


def _search_maps(g: FiniteGroup, h: FiniteGroup, *, find_all: bool) -> list[tuple[int, ...]]:
    """Backtrack over images of g's minimal generators to find isomorphisms g -> h."""
    gens = g.minimal_generators()
    if g.order == 1:
        return [(0,)] if h.order == 1 else []
    gen_orders = [g.element_order(x) for x in gens]
    buckets = _elements_by_order(h)
    results: list[tuple[int, ...]] = []

    def rec(depth: int, images: list[int]) -> bool:
        candidates = buckets.get(gen_orders[depth], [])
        for y in candidates:
            img = _extend_map(g, gens[: depth + 1], images + [y], h)
            if img is None:
                continue
            if depth + 1 == len(gens):
                if all(v >= 0 for v in img):
                    results.append(tuple(img))
                    if not find_all:
                        return True
            else:
                if rec(depth + 1, images + [y]):
                    return True
        return False

    rec(0, [])
    return results


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> GroupMap | None:
    """Return an isomorphism g -> h when one exists, else None.

    Screens on cheap invariants first, then backtracks over images of a
    minimal generating set of g.
    """
    if g.order != h.order:
        return None
    if g.iso_fingerprint() != h.iso_fingerprint():
        return None
    found = _search_maps(g, h, find_all=False)
    if not found:
        return None
    return GroupMap(g, h, found[0], is_isomorphism=True)


def automorphism_group(g: FiniteGroup, *, bound: int = DEFAULT_AUT_BOUND) -> list[GroupMap]:
    """The full automorphism group of g, sorted canonically by image array.

    ``bound`` caps the permissible group order (enumeration is exponential in
    principle); raise it explicitly for larger inputs.
    """
    if g.order > bound:
        raise GroupError(
            f"automorphism enumeration bound exceeded: |g|={g.order} > {bound}")
    key = ("aut", bound)
    if key not in g._cache:
        imgs = sorted(_search_maps(g, g, find_all=True))
        g._cache[key] = [GroupMap(g, g, im, is_isomorphism=True) for im in imgs]
    return g._cache[key]


# -- automorphism generators for abelian groups -------------------------------


def abelian_primary_basis(g: FiniteGroup) -> dict[int, list[int]]:
    """Basis of an abelian group, grouped by prime: {p: [basis elements]}.

    Greedy algorithm: within each primary component repeatedly pick an
    element of maximal order that is independent of the current span.  The
    product of basis element orders is verified to equal the component size.
    """
    if not g.is_abelian:
        raise GroupError("abelian_primary_basis requires an abelian group")
    orders = g.element_orders()
    primes = sorted({p for o in orders for p in _prime_factors(o)})
    basis: dict[int, list[int]] = {}
    for p in primes:
        component = [x for x in g.elements()
                     if x == 0 or _is_prime_power(orders[x], p)]
        chosen: list[int] = []
        span: set[int] = {0}
        for x in sorted(component, key=lambda e: -orders[e]):
            if x in span:
                continue
            new_span = set(closure(g, chosen + [x]))
            if len(new_span) == len(span) * orders[x]:
                chosen.append(x)
                span = new_span
        if len(span) != len(component):
            raise GroupError("primary basis search failed")  # unreachable for valid tables
        basis[p] = chosen
    return basis


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime_power(n: int, p: int) -> bool:
    if n == 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def _unit_generators(p: int, k: int) -> list[int]:
    """Generators of (Z/p^k)^*."""
    m = p**k
    if m <= 2:
        return []
    if p == 2:
        if k == 2:
            return [3]
        return [m - 1, 5]
    # Odd p: find a primitive root mod p^k by direct order check.
    target = m - m // p
    for u in range(2, m):
        if u % p == 0:
            continue
        if _mult_order(u, m) == target:
            return [u]
    raise GroupError("no primitive root found")  # unreachable for odd prime powers


def _mult_order(u: int, m: int) -> int:
    k, acc = 1, u % m
    while acc != 1:
        acc = acc * u % m
        k += 1
    return k


def _abelian_map_from_basis_images(g: FiniteGroup, basis: list[int],
                                   coords: dict[int, tuple[int, ...]],
                                   basis_images: list[int]) -> GroupMap | None:
    """Extend basis-element images linearly over an abelian group.

    Well-defined iff each image's order divides the basis element's order;
    returns None when that fails or the extension is not bijective.
    """
    pow_rows: list[list[int]] = []
    for b, b_img in zip(basis, basis_images):
        o = g.element_order(b)
        if o % g.element_order(b_img) != 0:
            return None
        row = [0] * o
        acc = 0
        for k in range(1, o):
            acc = g.table[acc][b_img]
            row[k] = acc
        pow_rows.append(row)
    img = [0] * g.order
    for x in g.elements():
        acc = 0
        for i, c in enumerate(coords[x]):
            if c:
                acc = g.table[acc][pow_rows[i][c]]
        img[x] = acc
    if len(set(img)) != g.order:
        return None
    return GroupMap(g, g, tuple(img), is_isomorphism=True)


def _abelian_coordinates(g: FiniteGroup, basis: list[int]) -> dict[int, tuple[int, ...]]:
    """Coordinates of every element in the given (full) basis."""
    coords: dict[int, tuple[int, ...]] = {0: (0,) * len(basis)}
    elems = [0]
    for i, b in enumerate(basis):
        o = g.element_order(b)
        new_elems = []
        for e in elems:
            acc = e
            c = coords[e]
            for k in range(1, o):
                acc = g.table[acc][b]
                cc = list(c)
                cc[i] = k
                coords[acc] = tuple(cc)
                new_elems.append(acc)
        elems.extend(new_elems)
    if len(coords) != g.order:
        raise GroupError("basis does not span the group")
    return coords


def automorphism_generators(g: FiniteGroup, *, bound: int = 256) -> list[GroupMap]:
    """A generating set of Aut(g) without full enumeration where possible.

    Abelian groups get the classical diagonal-unit and transvection
    generators per primary component (validated against full enumeration in
    the test suite).  Other groups fall back to a greedy generating subset of
    the enumerated automorphism group.
    """
    if "aut_gens" in g._cache:
        return g._cache["aut_gens"]
    if g.is_abelian:
        gens = _abelian_aut_generators(g)
    else:
        auts = automorphism_group(g, bound=bound)
        gens = _greedy_generating_maps(g, auts)
    g._cache["aut_gens"] = gens
    return gens


def _abelian_aut_generators(g: FiniteGroup) -> list[GroupMap]:
    primary = abelian_primary_basis(g)
    basis: list[int] = [b for p in sorted(primary) for b in primary[p]]
    coords = _abelian_coordinates(g, basis)
    offsets: dict[int, int] = {}
    pos = 0
    for p in sorted(primary):
        offsets[p] = pos
        pos += len(primary[p])
    gens: list[GroupMap] = []

    def emit(basis_images: list[int]) -> None:
        m = _abelian_map_from_basis_images(g, basis, coords, basis_images)
        if m is None:
            raise GroupError("constructed abelian generator is not bijective")
        gens.append(m)

    for p in sorted(primary):
        part = primary[p]
        lam = [_p_exponent(g.element_order(b), p) for b in part]
        for i, b in enumerate(part):
            for u in _unit_generators(p, lam[i]):
                images = list(basis)
                images[offsets[p] + i] = g.power(b, u)
                emit(images)
        for i in range(len(part)):
            for j in range(len(part)):
                if i == j:
                    continue
                # e_j -> e_j * e_i^(p^max(0, lam_i - lam_j))
                shift = p ** max(0, lam[i] - lam[j])
                images = list(basis)
                images[offsets[p] + j] = g.table[part[j]][g.power(part[i], shift)]
                emit(images)
    if not gens:
        gens = [GroupMap(g, g, tuple(g.elements()), is_isomorphism=True)]
    return gens


def _p_exponent(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _greedy_generating_maps(g: FiniteGroup, auts: list[GroupMap]) -> list[GroupMap]:
    all_imgs = [m.images for m in auts]
    all_set = set(all_imgs)
    identity = tuple(g.elements())
    chosen: list[tuple[int, ...]] = []
    span = {identity}
    for im in all_imgs:
        if im in span:
            continue
        chosen.append(im)
        span = _close_perm_set(chosen, identity)
        if len(span) == len(all_set):
            break
    return [GroupMap(g, g, im, is_isomorphism=True) for im in chosen] or \
        [GroupMap(g, g, identity, is_isomorphism=True)]


def _close_perm_set(gens: list[tuple[int, ...]], identity: tuple[int, ...]) -> set:
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for p in gens:
                q = _compose(e, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


# -- serialization -------------------------------------------------------------

_GROUP_FORMAT = "finitegroup v1"


def group_to_text(g: FiniteGroup) -> str:
    """Versioned text record: order, name, flattened Cayley table."""
    flat = " ".join(str(v) for row in g.table for v in row)
    name = g.name if g.name else "-"
    return f"{_GROUP_FORMAT}\nname {name}\norder {g.order}\ntable {flat}\n"


def group_from_text(text: str) -> FiniteGroup:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0].strip() != _GROUP_FORMAT:
        raise GroupError("unrecognized group serialization header")
    fields: dict[str, str] = {}
    for ln in lines[1:]:
        key, _, rest = ln.partition(" ")
        fields[key] = rest.strip()
    try:
        order = int(fields["order"])
        flat = [int(v) for v in fields["table"].split()]
    except (KeyError, ValueError) as exc:
        raise GroupError(f"bad group serialization: {exc}") from None
    if len(flat) != order * order:
        raise GroupError("table length does not match order")
    name = fields.get("name", "-")
    table = [flat[i * order:(i + 1) * order] for i in range(order)]
    return FiniteGroup(table, None if name == "-" else name)
