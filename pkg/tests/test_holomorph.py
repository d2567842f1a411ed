"""Holomorphs, regular-subgroup search, count translation, direct enumeration,
and the orbit-of-identity correspondence."""

import itertools

import pytest

from hopfgalois import catalog
from hopfgalois.groups import (
    GroupError,
    automorphism_group,
    is_isomorphic,
    make_cyclic,
    make_dicyclic,
)
from hopfgalois.holomorph import (
    PermGroup,
    count_R,
    direct_R,
    hol_regular_census,
    holomorph,
    left_regular,
    psi,
    regular_subgroups_iso_to,
)
from hopfgalois.subgroups import all_subgroups


def compose(p, q):
    return tuple(p[v] for v in q)


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class TestLeftRegular:
    def test_c2(self):
        lam = left_regular(make_cyclic(2))
        assert set(lam.elements) == {(0, 1), (1, 0)}

    def test_c3(self):
        lam = left_regular(make_cyclic(3))
        assert lam.order == 3
        assert all(p == (0, 1, 2) or all(p[i] != i for i in range(3))
                   for p in lam.elements)

    def test_a4_fixed_point_free(self):
        lam = left_regular(catalog.lookup("A4"))
        assert lam.order == 12
        for p in lam.elements:
            if p != tuple(range(12)):
                assert all(p[i] != i for i in range(12))


class TestHolomorph:
    @pytest.mark.parametrize("name,expected", [
        ("C6", 12), ("C2xC2", 24), ("C6xC2xC2", 8064), ("A4", 288), ("Q3", 144),
    ])
    def test_orders(self, name, expected):
        assert holomorph(catalog.lookup(name)).order == expected

    def test_order_identity_for_catalog(self):
        for n in range(1, 25):
            for g in catalog.groups_of_order(n):
                h = holomorph(g)
                assert h.order == g.order * len(automorphism_group(g))

    def test_equals_brute_force_normalizer_small(self):
        # Hol(N) is the full normalizer of lambda(N) in Sym(N) for |N| <= 7.
        for n in range(1, 8):
            for g in catalog.groups_of_order(n):
                lam = set(left_regular(g).elements)
                hol = set(holomorph(g).elements)
                normalizer = set()
                for b in itertools.permutations(range(n)):
                    bi = inverse(b)
                    if all(compose(b, compose(p, bi)) in lam for p in lam):
                        normalizer.add(b)
                assert hol == normalizer, g.name

    def test_centralizer_is_right_translations(self):
        # The centralizer of lambda(N) in Sym(N) is rho(N), |N| <= 7.
        for n in range(1, 8):
            for g in catalog.groups_of_order(n):
                lam = list(left_regular(g).elements)
                rho = {tuple(g.table[x][a] for x in range(n)) for a in range(n)}
                centralizer = {
                    b for b in itertools.permutations(range(n))
                    if all(compose(b, p) == compose(p, b) for p in lam)
                }
                assert centralizer == rho, g.name


def brute_force_regular_subgroups(ambient_elements, degree):
    """Oracle: scan all subsets of an ambient of order <= 16 for regular
    subgroups (identity plus fixed-point-free elements, one per point)."""
    ident = tuple(range(degree))
    fpf = [p for p in ambient_elements
           if p != ident and all(p[i] != i for i in range(degree))]
    found = []
    for subset in itertools.combinations(fpf, degree - 1):
        cand = set(subset) | {ident}
        if len({p[0] for p in cand}) != degree:
            continue
        if all(compose(a, b) in cand for a in cand for b in cand):
            found.append(tuple(sorted(cand)))
    return sorted(found)


class TestRegularSubgroups:
    def test_hol_c4_against_subset_oracle(self):
        c4 = make_cyclic(4)
        hol = holomorph(c4)
        assert hol.order == 8
        oracle = brute_force_regular_subgroups(hol.elements, 4)
        v4 = catalog.lookup("C2xC2")
        recs_c4 = regular_subgroups_iso_to(hol, c4)
        recs_v4 = regular_subgroups_iso_to(hol, v4)
        assert len(recs_c4) == 1 and len(recs_v4) == 1
        assert sorted([r.members for r in recs_c4] + [r.members for r in recs_v4]) \
            == oracle
        assert recs_c4[0].members == tuple(sorted(left_regular(c4).elements))

    def test_hol_c6_against_subset_oracle(self):
        c6 = make_cyclic(6)
        hol = holomorph(c6)
        oracle = brute_force_regular_subgroups(hol.elements, 6)
        got = []
        for name in ("C6", "S3"):
            got += [r.members for r in
                    regular_subgroups_iso_to(hol, catalog.lookup(name))]
        assert sorted(got) == oracle

    def test_generic_path_matches_packed_path(self):
        # Strip the holomorph metadata to force the generic tuple search.
        for base_name, target_name in [("C4", "C4"), ("C4", "C2xC2"),
                                       ("C6", "S3"), ("Q3", "A4"), ("D6", "Q3")]:
            base = catalog.lookup(base_name)
            target = catalog.lookup(target_name)
            hol = holomorph(base)
            fast = regular_subgroups_iso_to(hol, target)
            stripped = PermGroup(hol.degree, hol.elements, hol.name, check=False)
            slow = regular_subgroups_iso_to(stripped, target)
            assert [r.members for r in fast] == [r.members for r in slow]

    def test_records_are_regular(self):
        hol = holomorph(catalog.lookup("D6"))
        for name in ("Q3", "C12", "A4", "D6", "C6xC2"):
            for rec in regular_subgroups_iso_to(hol, catalog.lookup(name)):
                assert rec.is_regular()
                grp = rec.as_group()
                assert is_isomorphic(grp, catalog.lookup(name)) is not None

    def test_hol_q3_a4_counts_pin_each_other(self):
        # The published cell R(Q3,[A4]) = 12 pins the regular A4... search in
        # Hol(A4): |S(A4,[Q3])| = 12 * |Aut(A4)| / |Aut(Q3)| = 24.  In the
        # other direction R(A4,[Q3]) = 0, so Hol(Q3) holds no regular A4.
        in_hol_a4 = regular_subgroups_iso_to(holomorph(catalog.lookup("A4")),
                                             catalog.lookup("Q3"))
        assert len(in_hol_a4) == 24
        in_hol_q3 = regular_subgroups_iso_to(holomorph(catalog.lookup("Q3")),
                                             catalog.lookup("A4"))
        assert len(in_hol_q3) == 0
        assert count_R("Q3", "A4") == 12
        assert count_R("A4", "Q3") == 0

    def test_degree_mismatch_rejected(self):
        with pytest.raises(GroupError):
            regular_subgroups_iso_to(holomorph(make_cyclic(4)), make_cyclic(6))


class TestCountR:
    @pytest.mark.parametrize("g,m,expected", [
        ("A4", "A4", 10), ("D6", "Q3", 14), ("C12", "A4", 0),
        ("Q3", "C12", 3), ("C6xC2", "A4", 4),
    ])
    def test_order12_cells(self, g, m, expected):
        assert count_R(g, m) == expected

    def test_census_totals_order_12(self):
        # Number of regular subgroups in each order-12 holomorph.
        expected = {"Q3": 28, "C12": 6, "A4": 42, "D6": 28, "C6xC2": 12}
        for name, total in expected.items():
            census = hol_regular_census(catalog.lookup(name))
            assert sum(census.values()) == total, name

    def test_order_mismatch(self):
        with pytest.raises(catalog.CatalogError):
            count_R("C6", "C12")


class TestDirectR:
    def test_c2(self):
        recs = direct_R(make_cyclic(2))
        assert len(recs) == 1 and recs[0].iso_class == "C2"

    def test_c3(self):
        recs = direct_R(make_cyclic(3))
        assert len(recs) == 1

    def test_c6_cross_oracle(self):
        recs = direct_R(catalog.lookup("C6"))
        by_class = {}
        for r in recs:
            by_class[r.iso_class] = by_class.get(r.iso_class, 0) + 1
        assert by_class == {"C6": count_R("C6", "C6"), "S3": count_R("C6", "S3")}

    def test_records_are_lambda_stable(self):
        g = catalog.lookup("S3")
        lam = [tuple(g.table[x]) for x in g.minimal_generators()]
        for rec in direct_R(g):
            mset = set(rec.members)
            for t in lam:
                ti = inverse(t)
                assert {compose(t, compose(q, ti)) for q in mset} == mset

    def test_degree_bound(self):
        with pytest.raises(GroupError):
            direct_R(make_cyclic(9))


class TestPsi:
    def test_trivial_and_full(self):
        g = catalog.lookup("C6")
        for rec in direct_R(g):
            ident = tuple(range(6))
            trivial = psi(rec, [ident], g)
            assert trivial.members == (0,)
            full = psi(rec, rec.members, g)
            assert full.members == tuple(range(6))

    def test_c6_order3_image(self):
        g = catalog.lookup("C6")
        for rec in direct_R(g):
            if rec.iso_class != "S3":
                continue
            n_grp = rec.as_group()
            for s in all_subgroups(n_grp):
                if s.order != 3:
                    continue
                p_members = [rec.member_for_point(x) for x in s.members]
                image = psi(rec, p_members, g)
                assert image.members == (0, 2, 4)

    def test_injective_and_size_preserving(self):
        for n in range(1, 9):
            for g in catalog.groups_of_order(n):
                lam = [tuple(g.table[x]) for x in g.minimal_generators()]
                lam_pairs = [(t, inverse(t)) for t in lam]
                for rec in direct_R(g):
                    n_grp = rec.as_group()
                    images = set()
                    stable = 0
                    for s in all_subgroups(n_grp):
                        p_members = {rec.member_for_point(x) for x in s.members}
                        if not all({compose(t, compose(q, ti)) for q in p_members}
                                   == p_members for t, ti in lam_pairs):
                            continue
                        stable += 1
                        sub = psi(rec, p_members, g)
                        assert len(sub.members) == len(p_members)
                        images.add(sub.members)
                    assert len(images) == stable

    def test_rejects_unstable_subgroup(self):
        g = catalog.lookup("C6")
        s3_recs = [r for r in direct_R(g) if r.iso_class == "S3"]
        rec = s3_recs[0]
        n_grp = rec.as_group()
        unstable = None
        lam = [tuple(g.table[x]) for x in g.minimal_generators()]
        lam_pairs = [(t, inverse(t)) for t in lam]
        for s in all_subgroups(n_grp):
            p_members = {rec.member_for_point(x) for x in s.members}
            if not all({compose(t, compose(q, ti)) for q in p_members} == p_members
                       for t, ti in lam_pairs):
                unstable = p_members
                break
        assert unstable is not None
        with pytest.raises(GroupError):
            psi(rec, unstable, g)

    def test_rejects_non_subgroup(self):
        g = catalog.lookup("C6")
        rec = direct_R(g)[0]
        not_closed = [rec.member_for_point(1)]
        with pytest.raises(GroupError):
            psi(rec, not_closed, g)


class TestRecordSerialization:
    def test_text_format(self):
        rec = direct_R(make_cyclic(2))[0]
        text = rec.to_text()
        assert text.splitlines()[0] == "regular-subgroup v1"
        assert "degree 2" in text
        assert "perm 0 1" in text
        assert "perm 1 0" in text
