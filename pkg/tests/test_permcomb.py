import itertools

import pytest
from hypothesis import given, strategies as st

from mfl.permcomb import (
    IndexSet,
    Permutation,
    ValueSequence,
    all_permutations,
    avoids,
    bruhat_leq,
    bruhat_leq_oracle,
    delete_value,
    gale_leq,
    has_descending_property,
    in_zero_family,
    in_zero_family_inductive,
    insert_max,
    is_312_free,
    remove_max,
    restriction,
    vanishing_keys,
    vanishing_set,
    zero_family,
    zero_family_size,
)

perms = lambda n: st.permutations(range(1, n + 1)).map(tuple)


class TestTypes:
    def test_permutation_validates(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))
        with pytest.raises(ValueError):
            Permutation((0, 1))
        with pytest.raises(ValueError):
            Permutation(tuple(range(1, 18)))

    def test_index_set_validates(self):
        with pytest.raises(ValueError):
            IndexSet((), 4)
        with pytest.raises(ValueError):
            IndexSet((1, 2, 3, 4), 4)  # not proper
        with pytest.raises(ValueError):
            IndexSet((2, 1), 4)
        with pytest.raises(ValueError):
            IndexSet((5,), 4)

    def test_value_sequence_distinct(self):
        with pytest.raises(ValueError):
            ValueSequence((1, 1))

    @given(perms(7))
    def test_string_round_trip(self, entries):
        w = Permutation(entries)
        assert Permutation.from_string(w.to_string()) == w

    def test_large_n_serialization(self):
        w = Permutation(tuple(range(10, 0, -1)))
        assert w.to_string() == "10,9,8,7,6,5,4,3,2,1"
        assert Permutation.from_string(w.to_string()) == w

    def test_malformed_strings(self):
        with pytest.raises(ValueError):
            Permutation.from_string("32x4")
        with pytest.raises(ValueError):
            Permutation.from_string("")

    def test_index_set_strings(self):
        j = IndexSet.from_string("124", 4)
        assert j.members == (1, 2, 4)
        assert j.to_string() == "124"


class TestGaleOrder:
    def test_examples(self):
        assert gale_leq(IndexSet((1, 2), 4), IndexSet((2, 3), 4))
        assert not gale_leq(IndexSet((1, 4), 4), IndexSet((2, 3), 4))
        a = IndexSet((1, 3), 4)
        assert gale_leq(a, a)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            gale_leq(IndexSet((1,), 4), IndexSet((1, 2), 4))
        with pytest.raises(ValueError):
            gale_leq(IndexSet((1,), 4), IndexSet((1,), 5))

    def test_partial_order_exhaustive(self):
        # reflexive, antisymmetric, transitive on equal-size subsets of [5]
        n = 5
        for size in range(1, n):
            subsets = [IndexSet(c, n) for c in itertools.combinations(range(1, n + 1), size)]
            for a in subsets:
                assert gale_leq(a, a)
            for a, b in itertools.permutations(subsets, 2):
                if gale_leq(a, b) and gale_leq(b, a):
                    assert a == b
            for a, b, c in itertools.product(subsets, repeat=3):
                if gale_leq(a, b) and gale_leq(b, c):
                    assert gale_leq(a, c)


class TestVanishingSet:
    def test_example(self):
        w = Permutation((3, 2, 1, 4))
        assert {str(j) for j in vanishing_set(w)} == {
            "4", "14", "24", "34", "124", "134", "234",
        }

    def test_longest_is_empty(self):
        for n in range(2, 7):
            assert vanishing_set(Permutation.longest(n)) == frozenset()

    def test_identity_keeps_initial_segments(self):
        n = 5
        w = Permutation.identity(n)
        surviving = {
            j for size in range(1, n)
            for j in [tuple(range(1, size + 1))]
        }
        van = vanishing_keys(w.entries)
        for size in range(1, n):
            for combo in itertools.combinations(range(1, n + 1), size):
                assert (combo in van) == (combo not in surviving)

    def test_prefix_recursion(self):
        # splitting along the position of n: a subset of size >= t survives
        # iff dropping its largest element survives for w with n removed
        for n in range(3, 7):
            for w in all_permutations(n):
                t = w.position_of(n) + 1
                van = vanishing_keys(w.entries)
                ul_van = vanishing_keys(remove_max(w).entries)
                for size in range(t, n):
                    for combo in itertools.combinations(range(1, n + 1), size):
                        head = combo[:-1]
                        expected = not head or head not in ul_van
                        assert (combo not in van) == expected, (w, combo)

    def test_descending_prefix_recursion(self):
        # for descending-tail w the tail membership only needs the first t-1
        # entries of the subset
        for n in range(2, 7):
            for w in all_permutations(n):
                if not has_descending_property(w):
                    continue
                t = w.position_of(w.n) + 1
                van = vanishing_keys(w.entries)
                prefix = tuple(sorted(w.entries[: t - 1]))
                for size in range(t, n):
                    for combo in itertools.combinations(range(1, n + 1), size):
                        head = combo[: t - 1]
                        expected = all(x <= y for x, y in zip(head, prefix))
                        assert (combo not in van) == expected, (w, combo)


class TestRestriction:
    def test_examples(self):
        w = Permutation((1, 4, 2, 3))
        assert restriction(w, 2).entries == (1, 2)
        assert restriction(w, 4).entries == (1, 4, 2, 3)
        assert restriction(w, 3).entries == (1, 2, 3)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            restriction(Permutation((1, 2)), 3)
        with pytest.raises(ValueError):
            restriction(Permutation((1, 2)), 0)

    def test_delete_value(self):
        assert delete_value(Permutation((4, 2, 3, 1)), 2).values == (4, 3, 1)
        assert delete_value(Permutation((1, 2)), 2).values == (1,)
        assert delete_value(Permutation((3, 1, 2)), 1).values == (3, 2)

    def test_insert_remove_max(self):
        assert insert_max(Permutation((1, 2)), 1).entries == (1, 3, 2)
        assert insert_max(Permutation((2, 1)), 0).entries == (3, 2, 1)
        assert remove_max(Permutation((1, 3, 2))).entries == (1, 2)
        with pytest.raises(ValueError):
            insert_max(Permutation((1, 2)), 3)

    @given(perms(6), st.integers(0, 6))
    def test_insert_remove_inverse(self, entries, t):
        w = Permutation(entries)
        assert remove_max(insert_max(w, t)) == w


class TestPatterns:
    def test_avoids_examples(self):
        assert not avoids((1, 5, 2, 4, 3), (1, 4, 3, 2))
        assert avoids((1, 5, 2, 4, 3), (2, 3, 1))
        assert not avoids((2, 3, 1), (2, 3, 1))

    def test_pattern_longer_than_word(self):
        with pytest.raises(ValueError):
            avoids((1, 2), (1, 2, 3))

    @given(perms(6))
    def test_312_free_matches_avoids(self, entries):
        assert is_312_free(entries) == avoids(entries, (3, 1, 2))

    def test_descending_property(self):
        assert has_descending_property(Permutation((4, 3, 2, 1)))
        assert not has_descending_property(Permutation((1, 4, 2, 3)))
        assert has_descending_property(Permutation((2, 1, 4, 3)))

    def test_312_free_iff_restrictions_descend(self):
        for n in range(1, 7):
            for w in all_permutations(n):
                free = is_312_free(w.entries)
                all_descend = all(
                    has_descending_property(restriction(w, m))
                    for m in range(1, n + 1)
                )
                assert free == all_descend, w


class TestZeroFamily:
    def test_listings(self):
        assert {w.to_string() for w in zero_family(3)} == {"123", "132", "213"}
        assert {w.to_string() for w in zero_family(4)} == {
            "1234", "1243", "1324", "2134", "2143",
        }

    def test_identity_always_member(self):
        for n in range(1, 8):
            assert in_zero_family(Permutation.identity(n))

    def test_three_definitions_agree(self):
        for n in range(1, 8):
            family = zero_family(n)
            for w in all_permutations(n):
                closed = in_zero_family(w)
                assert closed == in_zero_family_inductive(w), w
                assert closed == (w in family), w

    def test_size_recurrence(self):
        for n in range(3, 16):
            assert zero_family_size(n) == zero_family_size(n - 1) + zero_family_size(n - 2)
        assert zero_family_size(1) == 1
        assert zero_family_size(2) == 2
        for n in range(1, 9):
            assert len(zero_family(n)) == zero_family_size(n)


class TestBruhat:
    def test_examples(self):
        assert bruhat_leq(Permutation((2, 1, 3)), Permutation((3, 2, 1)))
        assert not bruhat_leq(Permutation((3, 1, 2)), Permutation((2, 3, 1)))

    def test_identity_below_everything(self):
        for n in range(1, 6):
            for w in all_permutations(n):
                assert bruhat_leq(Permutation.identity(n), w)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            bruhat_leq(Permutation((1, 2)), Permutation((1, 2, 3)))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_reachability_oracle(self, n):
        elements = list(all_permutations(n))
        for v in elements:
            for w in elements:
                assert bruhat_leq(v, w) == bruhat_leq_oracle(v, w), (v, w)
