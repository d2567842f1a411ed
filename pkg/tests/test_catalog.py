"""Catalog registry: coverage, non-isomorphism, names, lookups."""

import pytest

from hopfgalois import catalog
from hopfgalois.groups import is_isomorphic


class TestCoverage:
    def test_group_counts_per_order(self):
        for n in range(1, 25):
            assert len(catalog.entries_of_order(n)) == catalog.GROUP_COUNTS[n - 1]

    def test_pairwise_non_isomorphic(self):
        for n in range(1, 25):
            groups = catalog.groups_of_order(n)
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    assert is_isomorphic(groups[i], groups[j]) is None, \
                        (groups[i].name, groups[j].name)

    def test_stated_orders(self):
        for entry in catalog.all_entries():
            assert entry.group().order == entry.order

    def test_row_order_matches_tables(self):
        assert [e.name for e in catalog.entries_of_order(12)] == \
            ["Q3", "C12", "A4", "D6", "C6xC2"]
        assert [e.name for e in catalog.entries_of_order(24)] == \
            ["C3:C8", "C24", "SL(2,3)", "C3:Q2", "C4xS3", "D12", "C2x(C3:C4)",
             "(C6xC2):C2", "C12xC2", "C3xD4", "C3xQ2", "S4", "C2xA4",
             "C2xC2xS3", "C6xC2xC2"]

    def test_uncovered_order_rejected(self):
        for n in (0, 25, 60):
            with pytest.raises(catalog.CatalogError):
                catalog.groups_of_order(n)


class TestLookup:
    def test_basic(self):
        assert catalog.lookup("A4").order == 12
        assert catalog.lookup("SL(2,3)").order == 24
        assert catalog.lookup("C120").order == 120

    def test_display_names_resolve(self):
        assert catalog.lookup("C₃ ⋊ Q₂") is catalog.lookup("C3:Q2")
        assert catalog.lookup("(C₆ × C₂) ⋊ C₂") is catalog.lookup("(C6xC2):C2")
        assert catalog.lookup("C₆ × C₂") is catalog.lookup("C6xC2")

    def test_aliases(self):
        assert catalog.lookup("Q8") is catalog.lookup("Q2")
        assert catalog.lookup("D3") is catalog.lookup("S3")
        assert catalog.lookup("C3:C4") is catalog.lookup("Q3")

    def test_caching(self):
        assert catalog.lookup("S4") is catalog.lookup("S4")

    def test_unknown_with_suggestion(self):
        with pytest.raises(catalog.CatalogError, match="did you mean"):
            catalog.lookup("A44")

    def test_a4_has_no_index_two_subgroup(self):
        from hopfgalois.subgroups import all_subgroups
        assert not any(s.order == 6 for s in all_subgroups(catalog.lookup("A4")))

    def test_sl23_unique_involution(self):
        g = catalog.lookup("SL(2,3)")
        assert sum(1 for o in g.element_orders() if o == 2) == 1

    def test_c3q2_is_dicyclic_24(self):
        from hopfgalois.groups import make_dicyclic
        assert is_isomorphic(catalog.lookup("C3:Q2"), make_dicyclic(6)) is not None

    def test_named_extras(self):
        for name, order in [("A5", 60), ("C5xA4", 60), ("C75", 75),
                            ("(C5xC5):C3", 75), ("S5", 120), ("C120", 120)]:
            assert catalog.lookup(name).order == order


class TestAbelianPGroups:
    def test_type_construction(self):
        g = catalog.abelian_p_group(2, (1, 3))
        assert g.order == 16 and g.is_abelian
        assert max(g.element_orders()) == 8

    def test_cached(self):
        assert catalog.abelian_p_group(3, (1, 2)) is catalog.abelian_p_group(3, (1, 2))

    def test_bound(self):
        with pytest.raises(catalog.CatalogError):
            catalog.abelian_p_group(2, (1,) * 9)

    def test_validation(self):
        with pytest.raises(catalog.CatalogError):
            catalog.abelian_p_group(2, (3, 1))
