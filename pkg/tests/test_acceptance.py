"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 9c's p=2 clause is mathematically unattainable and is
carried as a strict expected failure; see the companion soundness test and
the repository notes.
"""

import itertools

import pytest

from hopfgalois import catalog
from hopfgalois.cli import build_parser, _run
from hopfgalois.groups import automorphism_group, direct_product, make_cyclic
from hopfgalois.holomorph import count_R, direct_R, psi
from hopfgalois.obstruction import census, char_obstruction, empty_pairs_for_order
from hopfgalois.partitions import (
    Partition,
    alpha,
    canonical_tuple_counts,
    nc_np_table,
    partitions,
)
from hopfgalois.subgroups import (
    all_subgroups,
    characteristic_subgroups,
    index_two_count,
    squares_subgroup,
    z2_u2,
)

import io


def run_cli(argv):
    args = build_parser().parse_args(argv)
    out = io.StringIO()
    code = _run(args, out)
    assert code == 0, argv
    return out.getvalue()


ORDER12_EXPECTED = {
    "Q3":    [2, 3, 12, 2, 3],
    "C12":   [2, 1, 0, 2, 1],
    "A4":    [0, 0, 10, 0, 4],
    "D6":    [14, 9, 0, 14, 3],
    "C6xC2": [6, 3, 4, 6, 1],
}

# Both published order-24 tables, columns in catalog (= published row) order.
ORDER24_EXPECTED = {
    "C3:C8":      [4, 6, 24, 4, 0, 4, 0, 0, 0, 6, 6, 0, 0, 0, 0],
    "C24":        [4, 2, 0, 4, 0, 4, 0, 0, 0, 2, 2, 0, 0, 0, 0],
    "SL(2,3)":    [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 8, 0, 0, 0, 8],
    "C3:Q2":      [28, 18, 0, 28, 56, 28, 28, 56, 18, 18, 6, 0, 0, 28, 6],
    "C4xS3":      [16, 12, 0, 28, 56, 28, 52, 56, 30, 18, 6, 24, 0, 40, 12],
    "D12":        [4, 6, 0, 28, 56, 28, 76, 56, 42, 18, 6, 0, 0, 52, 18],
    "C2x(C3:C4)": [24, 12, 0, 28, 56, 28, 36, 56, 30, 18, 6, 0, 48, 32, 12],
    "(C6xC2):C2": [12, 6, 0, 28, 56, 28, 60, 56, 42, 18, 6, 24, 48, 44, 18],
    "C12xC2":     [8, 4, 0, 12, 24, 12, 20, 24, 10, 6, 2, 0, 0, 16, 4],
    "C3xD4":      [4, 2, 0, 12, 24, 12, 28, 24, 14, 6, 2, 16, 0, 20, 6],
    "C3xQ2":      [12, 6, 16, 12, 24, 12, 12, 24, 6, 6, 2, 0, 0, 12, 2],
    "S4":         [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 36, 24, 48],
    "C2xA4":      [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 12, 16, 8, 8],
    "C2xC2xS3":   [0, 0, 0, 228, 456, 228, 228, 456, 126, 126, 42, 48, 0, 152, 24],
    "C6xC2xC2":   [0, 0, 0, 84, 168, 84, 84, 168, 42, 42, 14, 0, 112, 56, 8],
}

NC_NP_EXPECTED = {
    1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 5), 5: (1, 7), 6: (4, 11),
    7: (4, 15), 8: (10, 22), 9: (13, 30), 10: (23, 42), 11: (27, 56),
    12: (52, 77), 13: (60, 101), 14: (94, 135), 15: (118, 176),
    16: (175, 231), 17: (213, 297), 18: (310, 385), 19: (373, 490),
    20: (528, 627), 21: (643, 792), 22: (862, 1002), 23: (1044, 1255),
    24: (1403, 1575), 25: (1699, 1958), 26: (2199, 2436),
}

# Abelian 2-group shapes (within |shape| <= 6) where the canonical-tuple
# count provably undercounts the characteristic subgroups at p = 2: tuples
# give 2 while the true count is 3 at the listed orders.  Verified against
# the full automorphism group; see notes/decisions.md for the analysis.
P2_KNOWN_UNDERCOUNTS = {
    (1, 3): {2},
    (1, 4): {2, 3},
    (1, 5): {2, 3, 4},
    (2, 4): {2, 4},
    (1, 2, 3): {3},
}


def oracle_range():
    for p in (2, 3):
        for n in range(1, 7):
            if p ** n > 256:
                continue
            for lam in partitions(n):
                yield p, lam


def test_criterion_01_order12_census():
    tab = census(12)
    for i, name in enumerate(tab.g_names):
        assert list(tab.cells[i]) == ORDER12_EXPECTED[name], name
    print("criterion 1 (order-12 census golden): PASS")


def test_criterion_02_order24_census():
    tab = census(24)
    assert list(tab.g_names) == list(ORDER24_EXPECTED)
    for i, name in enumerate(tab.g_names):
        assert list(tab.cells[i]) == ORDER24_EXPECTED[name], name
    print("criterion 2 (order-24 census golden, 225 cells): PASS")


def test_criterion_03_obstruction_counts():
    for n, z_expected, rsq_expected in [(12, 3, 25), (16, 5, 196),
                                        (18, 2, 25), (24, 20, 225)]:
        z, pairs, rsq = empty_pairs_for_order(n)
        assert z == z_expected, n
        assert rsq == rsq_expected, n
    print("criterion 3 (|Z| at n=12,16,18,24): PASS")


def test_criterion_04_obstruction_enumeration_consistency():
    for n in (12, 24):
        tab = census(n)
        certified = 0
        zero_cells = 0
        for i in range(len(tab.g_names)):
            for j in range(len(tab.m_names)):
                if tab.cells[i][j] == 0:
                    zero_cells += 1
                if tab.provenance[i][j] == "obstruction-zero":
                    certified += 1
                    assert tab.cells[i][j] == 0
        if n == 24:
            assert zero_cells == 76
            assert certified == 20
        if n == 12:
            assert certified == 3
    print("criterion 4 (certified-empty cells compute 0; 20 of 76 at n=24): PASS")


def test_criterion_05_index_two_suite():
    named = {"C2xA4": 1, "C12xC2": 3, "C3xD4": 3, "C4xS3": 3, "A4": 0}
    for name, expected in named.items():
        assert index_two_count(catalog.lookup(name)) == expected, name
    c3c3c4 = direct_product(direct_product(make_cyclic(3), make_cyclic(3)),
                            make_cyclic(4))
    assert index_two_count(c3c3c4) == 1
    entries = [e for e in catalog.all_entries() if e.order <= 24]
    for e1 in entries:
        for e2 in entries:
            if e1.order * e2.order > 48:
                continue
            a = index_two_count(e1.group())
            b = index_two_count(e2.group())
            got = index_two_count(direct_product(e1.group(), e2.group()))
            assert got == a * b + a + b
    for e in catalog.all_entries():
        v = index_two_count(e.group())
        assert v == 0 or ((v + 1) & v == 0 and v % 6 in (1, 3)), e.name
    # Squares of cyclic semidirect products split componentwise (rs <= 48).
    import math
    from hopfgalois.groups import semidirect_product
    for r in range(1, 49):
        cr = make_cyclic(r)
        cr2 = set(squares_subgroup(cr).members)
        for s in range(1, 48 // r + 1):
            cs2 = set(squares_subgroup(make_cyclic(s)).members)
            for u in range(1, r + 1):
                if math.gcd(u, r) != 1 or pow(u, s, r) != 1:
                    continue
                maps = [tuple((pow(u, y, r) * x) % r for x in range(r))
                        for y in range(s)]
                g = semidirect_product(cr, make_cyclic(s), lambda y: maps[y])
                assert set(squares_subgroup(g).members) == \
                    {x * s + y for x in cr2 for y in cs2}, (r, s, u)
    print("criterion 5 (index-2 suite): PASS")


def test_criterion_06_z2_u2():
    assert z2_u2(catalog.groups_of_order(12)) == (1, 2)
    assert z2_u2(catalog.groups_of_order(24)) == (1, 4)
    print("criterion 6 (z2/u2 at n=12 and 24): PASS")


def test_criterion_07_named_obstructions():
    cases = [("A5", "C5xA4", 20), ("S5", "C120", 15), ("(C5xC5):C3", "C75", 15)]
    for g_name, m_name, m_witness in cases:
        rep = char_obstruction(catalog.lookup(g_name), catalog.lookup(m_name))
        assert rep.certified_empty, (g_name, m_name)
        assert rep.witness[0] == m_witness, (g_name, m_name, rep.witness)
    print("criterion 7 (A5/S5/(C5xC5):C3 obstructions at m=20,15,15): PASS")


def test_criterion_08_ncnp_table():
    for (n, nc, np_, _) in nc_np_table(26):
        assert (nc, np_) == NC_NP_EXPECTED[n], n
    print("criterion 8 (nc/np rows 1..26): PASS")


def test_criterion_09a_byott_consistency():
    for n in range(1, 9):
        names = [e.name for e in catalog.entries_of_order(n)]
        for g_name in names:
            by_direct = {}
            for rec in direct_R(catalog.lookup(g_name)):
                by_direct[rec.iso_class] = by_direct.get(rec.iso_class, 0) + 1
            by_count = {m: count_R(g_name, m) for m in names}
            by_count = {k: v for k, v in by_count.items() if v}
            assert by_direct == by_count, g_name
    print("criterion 9a (direct enumeration equals holomorph counting, n<=8): PASS")


def test_criterion_09b_alpha_summation():
    for p, lam in oracle_range():
        g = catalog.abelian_p_group(p, lam.parts)
        counts = {}
        for s in all_subgroups(g):
            counts[s.order] = counts.get(s.order, 0) + 1
        for r in range(lam.n + 1):
            mus = partitions(r) if r else [Partition(())]
            total = sum(alpha(lam, mu, p) for mu in mus)
            assert total == counts.get(p ** r, 0), (p, lam.parts, r)
    print("criterion 9b (type-count formula matches brute force): PASS")


def _kerby_rode_comparison():
    rows = []
    for p, lam in oracle_range():
        g = catalog.abelian_p_group(p, lam.parts)
        char_counts = {}
        for s in characteristic_subgroups(g):
            char_counts[s.order] = char_counts.get(s.order, 0) + 1
        tuple_counts = canonical_tuple_counts(lam)
        for r in range(lam.n + 1):
            rows.append((p, lam.parts, r, tuple_counts[r],
                         char_counts.get(p ** r, 0)))
    return rows


@pytest.mark.xfail(
    strict=True,
    reason="Mathematically unattainable at p=2: the canonical-tuple "
    "correspondence for characteristic subgroups holds for odd p only.  "
    "C2xC8 has three characteristic subgroups of order 4 (the squares "
    "subgroup <u^2>, its companion <vu^2>, and the socle), but only two "
    "canonical tuples exist; units mod 2 are trivial, so the extra cyclic "
    "subgroup cannot be moved.  Verified against the full automorphism "
    "group.  The p=3 half and the one-sided bound pass below.")
def test_criterion_09c_kerby_rode_exact_both_primes():
    for p, lam, r, tuples, brute in _kerby_rode_comparison():
        assert tuples == brute, (p, lam, r)
    print("criterion 9c (canonical tuples = brute force, p=2 and 3): PASS")


def test_criterion_09c_kerby_rode_p3_exact_and_p2_sound():
    mismatches = {}
    for p, lam, r, tuples, brute in _kerby_rode_comparison():
        if p == 3:
            assert tuples == brute, (lam, r)
        else:
            assert tuples <= brute, (lam, r)  # emptiness inferences stay sound
            if tuples != brute:
                mismatches.setdefault(lam, set()).add(r)
                assert (tuples, brute) == (2, 3), (lam, r)
    assert mismatches == P2_KNOWN_UNDERCOUNTS
    print("criterion 9c (p=3 exact; p=2 sound with the five known "
          "odd-p-only shapes): PASS with documented p=2 deviation")


def test_criterion_09d_psi_properties():
    def compose(a, b):
        return tuple(a[v] for v in b)

    def inverse(p):
        out = [0] * len(p)
        for i, v in enumerate(p):
            out[v] = i
        return tuple(out)

    for n in range(1, 9):
        for g in catalog.groups_of_order(n):
            lam_pairs = [(tuple(g.table[x]), inverse(tuple(g.table[x])))
                         for x in g.minimal_generators()]
            for rec in direct_R(g):
                images = set()
                stable_count = 0
                for s in all_subgroups(rec.as_group()):
                    p_members = {rec.member_for_point(x) for x in s.members}
                    if not all({compose(t, compose(q, ti)) for q in p_members}
                               == p_members for t, ti in lam_pairs):
                        continue
                    stable_count += 1
                    image = psi(rec, p_members, g)
                    assert len(image.members) == len(p_members)
                    images.add(image.members)
                assert len(images) == stable_count  # injectivity
    print("criterion 9d (orbit map injective and size-preserving, n<=8): PASS")


def test_criterion_09e_nganou_identity():
    for entry in catalog.all_entries():
        g = entry.group()
        direct = sum(1 for s in all_subgroups(g) if 2 * s.order == g.order)
        assert index_two_count(g) == direct, entry.name
    print("criterion 9e (squares-index count equals enumerated count): PASS")


def test_criterion_10_cli_determinism():
    commands = [
        ["census", "--order", "12", "--format", "csv"],
        ["census", "--order", "12", "--format", "json"],
        ["census", "--order", "24", "--format", "csv"],
        ["hgs", "--g", "D6", "--m", "Q3"],
        ["z2u2", "--order", "24"],
        ["ncnp", "--max", "12"],
        ["lattice", "--g", "S4"],
        ["direct-r", "--g", "C6", "--witnesses"],
    ]
    for cmd in commands:
        serial = run_cli(["--jobs", "1"] + cmd)
        parallel = run_cli(["--jobs", "4"] + cmd)
        assert serial == parallel, cmd
    print("criterion 10 (byte-identical output across --jobs): PASS")
