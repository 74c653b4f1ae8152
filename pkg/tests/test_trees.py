import itertools

import pytest

from nlvcodec import (ValueArray, build_max_heap, build_min_heap, check_leaf_internal_duality,
                      check_red_leaf_rule, colorize, tree_to_text)
from nlvcodec.arrays import oracle_plv, oracle_psv
from nlvcodec.trees import (OrdinalTree, check_preorder_labels,
                            check_sibling_monotonicity)

from conftest import make_rng, random_no_equal_neighbours


class TestOrdinalTree:
    def test_children_from_parent(self):
        t = OrdinalTree([None, 0, 0, 2])
        assert t.children[0] == [1, 2]
        assert t.children[2] == [3]
        assert t.degree(0) == 2 and t.is_leaf(1)

    def test_right_sibling(self):
        t = OrdinalTree([None, 0, 0, 2])
        assert t.right_sibling(1) == 2
        assert not t.has_right_sibling(2)

    def test_invalid_parent(self):
        with pytest.raises(ValueError):
            OrdinalTree([None, 1])
        with pytest.raises(ValueError):
            OrdinalTree([0, 0])


class TestBuilders:
    def test_min_heap_figure(self, figure_array):
        t = build_min_heap(figure_array)
        assert t.children[0] == [1, 5, 6]
        assert t.children[1] == [2, 3]
        assert t.children[3] == [4]
        assert t.children[6] == [7]
        assert t.children[7] == [8, 9]

    def test_max_heap_figure(self, figure_array):
        t = build_max_heap(figure_array)
        assert t.children[0] == [1, 2, 8]
        assert t.children[2] == [3, 4, 7]
        assert t.children[4] == [5]
        assert t.children[5] == [6]
        assert t.children[8] == [9]

    def test_singleton(self):
        a = ValueArray([5])
        assert build_min_heap(a).children[0] == [1]
        assert build_max_heap(a).children[0] == [1]

    def test_chains(self):
        up = build_min_heap(ValueArray([1, 2, 3]))
        assert up.parent == [None, 0, 1, 2]
        down = build_max_heap(ValueArray([3, 2, 1]))
        assert down.parent == [None, 0, 1, 2]

    def test_parents_match_oracles(self):
        rng = make_rng(11)
        for _ in range(50):
            a = random_no_equal_neighbours(rng, rng.randint(1, 60))
            min_t = build_min_heap(a)
            max_t = build_max_heap(a)
            for i in range(1, a.n + 1):
                assert min_t.parent[i] == oracle_psv(a, i)
                assert max_t.parent[i] == oracle_plv(a, i)

    def test_structural_invariants(self):
        rng = make_rng(12)
        for _ in range(30):
            a = random_no_equal_neighbours(rng, rng.randint(1, 50))
            min_t = build_min_heap(a)
            max_t = build_max_heap(a)
            assert check_preorder_labels(min_t)
            assert check_preorder_labels(max_t)
            assert check_sibling_monotonicity(min_t, a, "min")
            assert check_sibling_monotonicity(max_t, a, "max")


class TestColorize:
    def test_cmin_figure(self, figure_array):
        ct = colorize(build_min_heap(figure_array), figure_array)
        assert {i for i in range(1, 10) if ct.is_red[i]} == {2, 5, 8}
        assert ct.color(2) == "red" and ct.color(1) == "blue"

    def test_cmax_figure(self, figure_array):
        ct = colorize(build_max_heap(figure_array), figure_array)
        assert {i for i in range(1, 10) if ct.is_red[i]} == {1, 2, 3, 4}

    def test_chain_all_blue(self):
        a = ValueArray([1, 2, 3])
        ct = colorize(build_min_heap(a), a)
        assert not any(ct.is_red)

    def test_last_node_never_red(self):
        rng = make_rng(13)
        for _ in range(30):
            a = random_no_equal_neighbours(rng, rng.randint(1, 40))
            for build in (build_min_heap, build_max_heap):
                ct = colorize(build(a), a)
                assert not ct.is_red[0] and not ct.is_red[a.n]


class TestStructuralRules:
    def test_duality_figure(self, figure_array):
        min_t = build_min_heap(figure_array)
        max_t = build_max_heap(figure_array)
        assert check_leaf_internal_duality(min_t, max_t) is None
        assert {i for i in range(1, 10) if min_t.is_leaf(i)} == {2, 4, 5, 8, 9}
        assert {i for i in range(1, 9) if not max_t.is_leaf(i)} == {2, 4, 5, 8}

    def test_duality_singleton(self):
        a = ValueArray([5])
        assert check_leaf_internal_duality(build_min_heap(a), build_max_heap(a)) is None

    def test_duality_alternating(self):
        a = ValueArray([1, 2, 1, 2])
        assert check_leaf_internal_duality(build_min_heap(a), build_max_heap(a)) is None

    def test_duality_fails_on_equal_neighbours(self):
        a = ValueArray([7, 7])
        # index 1 is a leaf in both trees
        assert check_leaf_internal_duality(build_min_heap(a), build_max_heap(a)) == 1

    def test_red_leaf_rule(self, figure_array):
        for build in (build_min_heap, build_max_heap):
            assert check_red_leaf_rule(colorize(build(figure_array), figure_array))

    def test_red_leaf_rule_chain(self):
        a = ValueArray([1, 2, 3])
        assert check_red_leaf_rule(colorize(build_min_heap(a), a))

    def test_rules_exhaustive(self):
        for n in range(1, 7):
            for values in itertools.product(range(1, 4), repeat=n):
                a = ValueArray(values)
                if a.has_consecutive_equal() is not None:
                    continue
                min_t = build_min_heap(a)
                max_t = build_max_heap(a)
                assert check_leaf_internal_duality(min_t, max_t) is None, values
                assert check_red_leaf_rule(colorize(min_t, a)), values
                assert check_red_leaf_rule(colorize(max_t, a)), values


class TestDebugExport:
    def test_uncolored(self):
        t = OrdinalTree([None, 0, 0, 2])
        assert tree_to_text(t) == "(0 (1) (2 (3)))"

    def test_colored(self, figure_array):
        ct = colorize(build_min_heap(figure_array), figure_array)
        text = tree_to_text(ct.tree, ct.is_red)
        assert text.startswith("(0 (1b (2r) (3b (4b)))")
        assert "(5r)" in text

    def test_deep_chain_no_recursion(self):
        a = ValueArray(range(1, 5001))
        assert tree_to_text(build_min_heap(a)).count("(") == 5001
